#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace deltaflip {

/// A subset of a ground set, bit i set iff element i is present.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxGroundSize = 62;

inline int cardinality(Subset s) { return std::popcount(s); }
inline Subset singleton(std::size_t i) { return Subset{1} << i; }
inline bool contains(Subset s, std::size_t i) { return (s >> i) & 1U; }
inline Subset full_subset(std::size_t n) { return n == 0 ? 0 : (~Subset{0} >> (64 - n)); }

/// Packs the bits of `s` selected by `keep` into the low positions, preserving order.
Subset compress(Subset s, Subset keep);
/// Inverse of compress: spreads the low bits of `s` over the positions of `keep`.
Subset expand(Subset s, Subset keep);

/// Ordered, duplicate-free element labels. Index i of a Subset refers to label(i).
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  /// Ground set with labels "1".."n".
  static GroundSet numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  Subset full() const { return full_subset(labels_.size()); }

  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Throws DomainError on an unknown label.
  std::size_t require_index(std::string_view label) const;
  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;
  /// Throws DomainError if `s` has bits outside the ground set.
  void require_subset(Subset s) const;

  /// Sub-ground-set keeping the elements of `keep`, in their original order.
  GroundSet restrict(Subset keep) const;

  /// Brace notation, e.g. "{p,q}".
  std::string format(Subset s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace deltaflip
