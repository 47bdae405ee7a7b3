#pragma once

#include <array>
#include <cstddef>

#include "deltaflip/set_system.hpp"

namespace deltaflip {

/// Symmetric exchange axiom, brute force over member pairs. Improper systems are not Δ-matroids.
bool is_delta_matroid(const SetSystem& m);

/// All members have the same cardinality parity. Throws ImproperSystemError on an empty family.
bool is_even(const SetSystem& m);

inline constexpr std::size_t kDefaultOrbitCap = 100000;

/// Every system reachable by pivots and loop complementations is a Δ-matroid.
/// Walks the single-element-flip orbit; stops at the first non-Δ-matroid.
/// Throws ResourceError if the orbit has more than `cap` members.
bool is_vf_closed(const SetSystem& m, std::size_t cap = kDefaultOrbitCap);

struct DivisibilityStatus {
  bool divisible = false;
  bool strongly_divisible = false;
  friend bool operator==(const DivisibilityStatus&, const DivisibilityStatus&) = default;
};

/// Divisible by u: M\u and M*u\u are proper. Strongly: M~*u\u is proper as well.
DivisibilityStatus divisibility(const SetSystem& m, std::size_t u);

/// (d_M, d_{M*v}, d_{M~*v}).
std::array<int, 3> distance_triple(const SetSystem& m, std::size_t v);

}  // namespace deltaflip
