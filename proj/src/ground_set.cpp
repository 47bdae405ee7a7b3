#include "deltaflip/ground_set.hpp"

#include <unordered_set>

#include "deltaflip/errors.hpp"

namespace deltaflip {

Subset compress(Subset s, Subset keep) {
  Subset out = 0;
  int pos = 0;
  for (Subset k = keep; k != 0; k &= k - 1, ++pos) {
    if (s & (k & -k)) out |= Subset{1} << pos;
  }
  return out;
}

Subset expand(Subset s, Subset keep) {
  Subset out = 0;
  for (Subset k = keep; k != 0 && s != 0; k &= k - 1, s >>= 1) {
    if (s & 1U) out |= k & -k;
  }
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxGroundSize) {
    throw DomainError("ground set has " + std::to_string(labels_.size()) +
                      " elements; at most " + std::to_string(kMaxGroundSize) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw DomainError("empty element label");
    if (!seen.insert(l).second) throw DomainError("duplicate element label '" + l + "'");
  }
}

GroundSet GroundSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t GroundSet::require_index(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw DomainError("unknown element '" + std::string(label) + "'");
}

Subset GroundSet::subset_of(const std::vector<std::string>& labels) const {
  Subset s = 0;
  for (const auto& l : labels) s |= singleton(require_index(l));
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (contains(s, i)) out.push_back(labels_[i]);
  }
  return out;
}

void GroundSet::require_subset(Subset s) const {
  if ((s & ~full()) != 0) throw DomainError("subset has elements outside the ground set");
}

GroundSet GroundSet::restrict(Subset keep) const {
  require_subset(keep);
  return GroundSet(labels_of(keep));
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(s)) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

}  // namespace deltaflip
