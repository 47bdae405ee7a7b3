#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "deltaflip/ground_set.hpp"

namespace deltaflip {

/// A ground set together with a family of its subsets.
///
/// The family is kept in canonical form: strictly increasing by bitmask
/// value. Two systems are equal iff their grounds and canonical families are.
/// Values are immutable once constructed.
class SetSystem {
 public:
  SetSystem() = default;
  /// Sorts `family`; throws DomainError on duplicates or members outside the ground.
  SetSystem(GroundSet ground, std::vector<Subset> family);

  /// Builds from a family that is already sorted and duplicate-free.
  static SetSystem from_canonical(GroundSet ground, std::vector<Subset> family);
  /// (V, 2^V).
  static SetSystem power_set(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  std::size_t n() const { return ground_.size(); }
  const std::vector<Subset>& family() const { return family_; }
  std::size_t size() const { return family_.size(); }
  bool empty() const { return family_.empty(); }
  bool contains(Subset x) const;

  std::string format() const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  GroundSet ground_;
  std::vector<Subset> family_;
};

struct SetSystemHash {
  std::size_t operator()(const SetSystem& m) const noexcept;
};

enum class FlipKind { Pivot, LoopComplement, DualPivot };

std::string to_string(FlipKind kind);

/// M * X: every member is translated by symmetric difference with X.
SetSystem pivot(const SetSystem& m, Subset x);
/// M + X, element by element in index order.
SetSystem loop_complement(const SetSystem& m, Subset x);
/// M ~* X, element by element: ~*u = +u *u +u.
SetSystem dual_pivot(const SetSystem& m, Subset x);

/// Throws DomainError if `x` is not a subset of the ground.
SetSystem apply_vertex_flip(const SetSystem& m, FlipKind kind, Subset x);

/// M*V, M+V or M~*V computed from the closed-form complement / parity
/// characterisations instead of by composing single-element flips.
SetSystem full_flip_explicit(const SetSystem& m, FlipKind kind);

enum class RemovalMode { Restrict, Delete };

/// M[X] (members contained in X, ground X) or M \ X = M[V \ X].
/// The result may be improper.
SetSystem restrict_delete(const SetSystem& m, RemovalMode mode, Subset x);
inline SetSystem restrict_to(const SetSystem& m, Subset x) {
  return restrict_delete(m, RemovalMode::Restrict, x);
}
inline SetSystem delete_elements(const SetSystem& m, Subset x) {
  return restrict_delete(m, RemovalMode::Delete, x);
}

/// d_M(X) = min |X xor Y| over members Y. Throws ImproperSystemError on an empty family.
int distance(const SetSystem& m, Subset x);

/// d_M(X) for every X, indexed by bitmask. Breadth-first search on the
/// hypercube seeded with the members. Requires n <= 26.
std::vector<std::uint8_t> distance_table(const SetSystem& m);

struct Classification {
  bool proper = false;
  bool normal = false;
  bool equicardinal = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const SetSystem& m);

enum class OrbitGenerators {
  /// +V and *V applied alternately, starting with +V.
  FullVAlternation,
  /// {*u, +u : u in V}.
  SingleElementFlips,
};

/// Closure of `m` under the chosen generators, in discovery order (for
/// FullVAlternation this is the cycle M, M+V, M+V*V, ...). Throws
/// ResourceError when more than `cap` distinct systems are found.
std::vector<SetSystem> vf_orbit(const SetSystem& m, OrbitGenerators generators,
                                std::size_t cap = 100000);

struct FlipStep {
  FlipKind kind;
  Subset elements;
};

/// A vertex-flip sequence, applied left to right.
using VertexFlipWord = std::vector<FlipStep>;

SetSystem apply_word(const SetSystem& m, std::span<const FlipStep> word);

}  // namespace deltaflip
