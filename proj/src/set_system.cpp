#include "deltaflip/set_system.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <unordered_set>

#include "deltaflip/errors.hpp"

namespace deltaflip {

namespace {

std::vector<Subset> symmetric_difference(const std::vector<Subset>& a,
                                         const std::vector<Subset>& b) {
  std::vector<Subset> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// +u toggles Z + u for every member Z avoiding u.
std::vector<Subset> loop_complement_one(const std::vector<Subset>& family, Subset u) {
  std::vector<Subset> toggles;
  for (Subset z : family) {
    if ((z & u) == 0) toggles.push_back(z | u);
  }
  std::sort(toggles.begin(), toggles.end());
  return symmetric_difference(family, toggles);
}

// ~*u toggles Z - u for every member Z containing u (the superset-parity rule
// restricted to one element).
std::vector<Subset> dual_pivot_one(const std::vector<Subset>& family, Subset u) {
  std::vector<Subset> toggles;
  for (Subset z : family) {
    if ((z & u) != 0) toggles.push_back(z & ~u);
  }
  std::sort(toggles.begin(), toggles.end());
  return symmetric_difference(family, toggles);
}

}  // namespace

SetSystem::SetSystem(GroundSet ground, std::vector<Subset> family)
    : ground_(std::move(ground)), family_(std::move(family)) {
  const Subset full = ground_.full();
  for (Subset x : family_) {
    if ((x & ~full) != 0) throw DomainError("family member outside the ground set");
  }
  std::sort(family_.begin(), family_.end());
  if (std::adjacent_find(family_.begin(), family_.end()) != family_.end()) {
    throw DomainError("duplicate member " + ground_.format(*std::adjacent_find(
                                                family_.begin(), family_.end())));
  }
}

SetSystem SetSystem::from_canonical(GroundSet ground, std::vector<Subset> family) {
  SetSystem m;
  m.ground_ = std::move(ground);
  m.family_ = std::move(family);
  return m;
}

SetSystem SetSystem::power_set(GroundSet ground) {
  std::vector<Subset> family(std::size_t{1} << ground.size());
  for (std::size_t i = 0; i < family.size(); ++i) family[i] = i;
  return from_canonical(std::move(ground), std::move(family));
}

bool SetSystem::contains(Subset x) const {
  return std::binary_search(family_.begin(), family_.end(), x);
}

std::string SetSystem::format() const {
  std::string out = "(" + ground_.format(ground_.full()) + ", {";
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (i) out += ", ";
    out += ground_.format(family_[i]);
  }
  return out + "})";
}

std::size_t SetSystemHash::operator()(const SetSystem& m) const noexcept {
  std::size_t h = m.n() * 0x9e3779b97f4a7c15ULL;
  for (Subset x : m.family()) {
    h ^= std::hash<Subset>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(FlipKind kind) {
  switch (kind) {
    case FlipKind::Pivot: return "pivot";
    case FlipKind::LoopComplement: return "loopc";
    case FlipKind::DualPivot: return "dualpivot";
  }
  return "?";
}

SetSystem pivot(const SetSystem& m, Subset x) {
  m.ground().require_subset(x);
  std::vector<Subset> family = m.family();
  for (Subset& y : family) y ^= x;
  std::sort(family.begin(), family.end());
  return SetSystem::from_canonical(m.ground(), std::move(family));
}

SetSystem loop_complement(const SetSystem& m, Subset x) {
  m.ground().require_subset(x);
  std::vector<Subset> family = m.family();
  for (Subset rest = x; rest != 0; rest &= rest - 1) {
    family = loop_complement_one(family, rest & -rest);
  }
  return SetSystem::from_canonical(m.ground(), std::move(family));
}

SetSystem dual_pivot(const SetSystem& m, Subset x) {
  m.ground().require_subset(x);
  std::vector<Subset> family = m.family();
  for (Subset rest = x; rest != 0; rest &= rest - 1) {
    family = dual_pivot_one(family, rest & -rest);
  }
  return SetSystem::from_canonical(m.ground(), std::move(family));
}

SetSystem apply_vertex_flip(const SetSystem& m, FlipKind kind, Subset x) {
  switch (kind) {
    case FlipKind::Pivot: return pivot(m, x);
    case FlipKind::LoopComplement: return loop_complement(m, x);
    case FlipKind::DualPivot: return dual_pivot(m, x);
  }
  return m;
}

SetSystem full_flip_explicit(const SetSystem& m, FlipKind kind) {
  const Subset full = m.ground().full();
  std::vector<Subset> family;
  if (kind == FlipKind::Pivot) {
    // X in M*V iff V - X in M
    for (Subset y : m.family()) family.push_back(full & ~y);
    std::sort(family.begin(), family.end());
    return SetSystem::from_canonical(m.ground(), std::move(family));
  }
  if (m.n() > 26) throw SizeGuardError("explicit full flip enumerates 2^n subsets; n > 26");
  const std::size_t count = std::size_t{1} << m.n();
  for (Subset x = 0; x < count; ++x) {
    std::size_t hits = 0;
    for (Subset z : m.family()) {
      const bool counted = kind == FlipKind::LoopComplement ? (z & ~x) == 0   // Z subset of X
                                                            : (x & ~z) == 0;  // X subset of Z
      hits += counted ? 1 : 0;
    }
    if (hits % 2 == 1) family.push_back(x);
  }
  return SetSystem::from_canonical(m.ground(), std::move(family));
}

SetSystem restrict_delete(const SetSystem& m, RemovalMode mode, Subset x) {
  m.ground().require_subset(x);
  const Subset keep = mode == RemovalMode::Restrict ? x : (m.ground().full() & ~x);
  std::vector<Subset> family;
  for (Subset y : m.family()) {
    // compress preserves order, so the result stays sorted
    if ((y & ~keep) == 0) family.push_back(compress(y, keep));
  }
  return SetSystem::from_canonical(m.ground().restrict(keep), std::move(family));
}

int distance(const SetSystem& m, Subset x) {
  if (m.empty()) throw ImproperSystemError("distance is undefined on an improper set system");
  int best = 64;
  for (Subset y : m.family()) best = std::min(best, cardinality(x ^ y));
  return best;
}

std::vector<std::uint8_t> distance_table(const SetSystem& m) {
  if (m.empty()) throw ImproperSystemError("distance is undefined on an improper set system");
  if (m.n() > 26) throw SizeGuardError("distance table needs 2^n entries; n > 26");
  const std::size_t count = std::size_t{1} << m.n();
  constexpr std::uint8_t kUnseen = 0xff;
  std::vector<std::uint8_t> dist(count, kUnseen);
  std::vector<Subset> frontier;
  for (Subset y : m.family()) {
    dist[y] = 0;
    frontier.push_back(y);
  }
  std::vector<Subset> next;
  for (std::uint8_t level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (Subset x : frontier) {
      for (std::size_t i = 0; i < m.n(); ++i) {
        const Subset nb = x ^ singleton(i);
        if (dist[nb] == kUnseen) {
          dist[nb] = level;
          next.push_back(nb);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

Classification classify(const SetSystem& m) {
  Classification c;
  c.proper = !m.empty();
  c.normal = m.contains(0);
  c.equicardinal = std::all_of(m.family().begin(), m.family().end(), [&](Subset x) {
    return cardinality(x) == cardinality(m.family().front());
  });
  return c;
}

std::vector<SetSystem> vf_orbit(const SetSystem& m, OrbitGenerators generators, std::size_t cap) {
  if (m.empty()) throw ImproperSystemError("orbit requires a proper set system");
  std::vector<SetSystem> orbit{m};
  const Subset full = m.ground().full();

  std::unordered_set<SetSystem, SetSystemHash> seen{m};
  auto record = [&](SetSystem next) {
    if (!seen.insert(next).second) return;
    if (orbit.size() >= cap) throw ResourceError("orbit exceeds cap " + std::to_string(cap));
    orbit.push_back(std::move(next));
  };

  if (generators == OrbitGenerators::FullVAlternation) {
    // (+V *V) has finite order, so the alternation returns to m after an even number of steps
    SetSystem current = m;
    for (std::size_t step = 0;; ++step) {
      current = step % 2 == 0 ? loop_complement(current, full) : pivot(current, full);
      if (step % 2 == 1 && current == m) break;
      record(current);
    }
    return orbit;
  }

  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (std::size_t i = 0; i < m.n(); ++i) {
      for (FlipKind kind : {FlipKind::Pivot, FlipKind::LoopComplement}) {
        record(apply_vertex_flip(orbit[head], kind, singleton(i)));
      }
    }
  }
  return orbit;
}

SetSystem apply_word(const SetSystem& m, std::span<const FlipStep> word) {
  SetSystem out = m;
  for (const FlipStep& step : word) out = apply_vertex_flip(out, step.kind, step.elements);
  return out;
}

}  // namespace deltaflip
