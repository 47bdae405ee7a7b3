#include "deltaflip/delta_matroid.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>
#include <vector>

#include "deltaflip/errors.hpp"

namespace deltaflip {

namespace {

void require_element(const SetSystem& m, std::size_t u) {
  if (u >= m.n()) throw DomainError("element index outside the ground set");
}

#ifndef NDEBUG
// The existential definitions, used to cross-check the minor-based ones.
DivisibilityStatus divisibility_by_definition(const SetSystem& m, Subset u) {
  DivisibilityStatus s;
  for (Subset x1 : m.family()) {
    for (Subset x2 : m.family()) {
      if ((x1 ^ x2) & u) s.divisible = true;
    }
  }
  s.strongly_divisible =
      s.divisible && std::any_of(m.family().begin(), m.family().end(),
                                 [&](Subset x) { return !m.contains(x ^ u); });
  return s;
}
#endif

}  // namespace

bool is_delta_matroid(const SetSystem& m) {
  if (m.empty()) return false;
  const std::size_t n = m.n();
  std::vector<Subset> rescue(n);
  for (Subset x : m.family()) {
    // For X and u: X^{u} in M, or the set of v != u with X^{u,v} in M.
    Subset direct = 0;
    for (std::size_t u = 0; u < n; ++u) {
      const Subset xu = x ^ singleton(u);
      rescue[u] = 0;
      if (m.contains(xu)) {
        direct |= singleton(u);
        continue;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (v != u && m.contains(xu ^ singleton(v))) rescue[u] |= singleton(v);
      }
    }
    for (Subset y : m.family()) {
      const Subset diff = x ^ y;
      for (Subset rest = diff & ~direct; rest != 0; rest &= rest - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(rest));
        if ((rescue[u] & diff) == 0) return false;
      }
    }
  }
  return true;
}

bool is_even(const SetSystem& m) {
  if (m.empty()) throw ImproperSystemError("evenness requires a proper set system");
  const int parity = cardinality(m.family().front()) % 2;
  return std::all_of(m.family().begin(), m.family().end(),
                     [&](Subset x) { return cardinality(x) % 2 == parity; });
}

bool is_vf_closed(const SetSystem& m, std::size_t cap) {
  if (m.empty()) throw ImproperSystemError("vf-closure requires a proper set system");
  std::vector<SetSystem> queue{m};
  std::unordered_set<SetSystem, SetSystemHash> seen{m};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (!is_delta_matroid(queue[head])) return false;
    for (std::size_t i = 0; i < m.n(); ++i) {
      for (FlipKind kind : {FlipKind::Pivot, FlipKind::LoopComplement}) {
        SetSystem next = apply_vertex_flip(queue[head], kind, singleton(i));
        if (!seen.insert(next).second) continue;
        if (queue.size() >= cap) throw ResourceError("vf-closure orbit exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  return true;
}

DivisibilityStatus divisibility(const SetSystem& m, std::size_t u) {
  if (m.empty()) throw ImproperSystemError("divisibility requires a proper set system");
  require_element(m, u);
  const Subset bit = singleton(u);
  DivisibilityStatus s;
  const bool deletion_proper = !delete_elements(m, bit).empty();
  const bool contraction_proper = !delete_elements(pivot(m, bit), bit).empty();
  s.divisible = deletion_proper && contraction_proper;
  s.strongly_divisible = s.divisible && !delete_elements(dual_pivot(m, bit), bit).empty();
  assert(s == divisibility_by_definition(m, bit));
  return s;
}

std::array<int, 3> distance_triple(const SetSystem& m, std::size_t v) {
  if (m.empty()) throw ImproperSystemError("distance requires a proper set system");
  require_element(m, v);
  const Subset bit = singleton(v);
  return {distance(m, 0), distance(pivot(m, bit), 0), distance(dual_pivot(m, bit), 0)};
}

}  // namespace deltaflip
