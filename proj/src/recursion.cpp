#include "deltaflip/recursion.hpp"

#include <functional>
#include <unordered_map>

#include "deltaflip/delta_matroid.hpp"
#include "deltaflip/errors.hpp"

namespace deltaflip {

namespace {

struct Split {
  std::size_t element;
  std::vector<std::pair<std::string, SetSystem>> children;
};

// Either a split, or nullopt for a base case whose value is `base`.
using Rule = std::function<std::optional<Split>(const SetSystem&)>;

bool splits_on(const SetSystem& m, Subset bit) {
  bool with = false;
  bool without = false;
  for (Subset x : m.family()) {
    (x & bit ? with : without) = true;
    if (with && without) return true;
  }
  return false;
}

bool strongly_splits_on(const SetSystem& m, Subset bit) {
  if (!splits_on(m, bit)) return false;
  for (Subset x : m.family()) {
    if (!m.contains(x ^ bit)) return true;
  }
  return false;
}

std::string element_word(const GroundSet& g, Subset s) {
  return cardinality(s) == 1 ? g.label(static_cast<std::size_t>(std::countr_zero(s))) : g.format(s);
}

std::string delete_label(const GroundSet& g, Subset s) { return "\\" + element_word(g, s); }

std::optional<std::size_t> choose(const SetSystem& m, ElementChoice choice,
                                  const std::function<bool(Subset)>& eligible) {
  const std::size_t n = m.n();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = choice == ElementChoice::Smallest ? k : n - 1 - k;
    if (eligible(singleton(i))) return i;
  }
  return std::nullopt;
}

class Engine {
 public:
  Engine(Rule rule, long long base_shift, bool memoize)
      : rule_(std::move(rule)), base_shift_(base_shift), memoize_(memoize) {}

  RecursionResult run(const SetSystem& m) {
    RecursionResult result;
    if (memoize_) {
      result.value = value_only(m);
    } else {
      result.trace = expand(m);
      result.value = result.trace.value;
    }
    return result;
  }

 private:
  RecursionTrace expand(const SetSystem& m) {
    RecursionTrace node;
    node.system = m;
    auto split = rule_(m);
    if (!split) {
      node.value = UniPoly::linear_power(base_shift_, m.n());
      return node;
    }
    node.element = m.ground().label(split->element);
    for (auto& [label, child] : split->children) {
      RecursionTrace sub = expand(child);
      node.value += sub.value;
      node.children.push_back({label, std::move(sub)});
    }
    return node;
  }

  UniPoly value_only(const SetSystem& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    UniPoly value;
    auto split = rule_(m);
    if (!split) {
      value = UniPoly::linear_power(base_shift_, m.n());
    } else {
      for (auto& [label, child] : split->children) value += value_only(child);
    }
    memo_.emplace(m, value);
    return value;
  }

  Rule rule_;
  long long base_shift_;
  bool memoize_;
  std::unordered_map<SetSystem, UniPoly, SetSystemHash> memo_;
};

bool should_check(const SetSystem& m, const RecursionOptions& o) {
  return o.check_preconditions.value_or(m.n() <= kPreconditionCheckMaxN);
}

void require_proper(const SetSystem& m) {
  if (m.empty()) throw ImproperSystemError("recursion requires a proper set system");
}

Rule q1_rule(ElementChoice choice) {
  return [choice](const SetSystem& m) -> std::optional<Split> {
    auto u = choose(m, choice, [&](Subset bit) { return splits_on(m, bit); });
    if (!u) return std::nullopt;
    const Subset bit = singleton(*u);
    const auto& g = m.ground();
    const std::string w = element_word(g, bit);
    return Split{*u,
                 {{"\\" + w, delete_elements(m, bit)},
                  {"*" + w + "\\" + w, delete_elements(pivot(m, bit), bit)}}};
  };
}

Rule q2_rule(ElementChoice choice) {
  return [choice](const SetSystem& m) -> std::optional<Split> {
    // M~*V is divisible by u iff M~*u is
    auto u = choose(m, choice, [&](Subset bit) { return splits_on(dual_pivot(m, bit), bit); });
    if (!u) return std::nullopt;
    const Subset bit = singleton(*u);
    const std::string w = element_word(m.ground(), bit);
    return Split{*u,
                 {{"*" + w + "\\" + w, delete_elements(pivot(m, bit), bit)},
                  {"~*" + w + "\\" + w, delete_elements(dual_pivot(m, bit), bit)}}};
  };
}

Rule q3_rule(ElementChoice choice) {
  return [choice](const SetSystem& m) -> std::optional<Split> {
    // M+V is divisible by u iff M+u is
    auto u = choose(m, choice, [&](Subset bit) { return splits_on(loop_complement(m, bit), bit); });
    if (!u) return std::nullopt;
    const Subset bit = singleton(*u);
    const std::string w = element_word(m.ground(), bit);
    return Split{*u,
                 {{"~*" + w + "\\" + w, delete_elements(dual_pivot(m, bit), bit)},
                  {"\\" + w, delete_elements(m, bit)}}};
  };
}

Rule Q1_rule(ElementChoice choice) {
  return [choice](const SetSystem& m) -> std::optional<Split> {
    auto u = choose(m, choice, [&](Subset bit) { return strongly_splits_on(m, bit); });
    if (!u) return std::nullopt;
    const Subset bit = singleton(*u);
    const std::string w = element_word(m.ground(), bit);
    return Split{*u,
                 {{"\\" + w, delete_elements(m, bit)},
                  {"*" + w + "\\" + w, delete_elements(pivot(m, bit), bit)},
                  {"~*" + w + "\\" + w, delete_elements(dual_pivot(m, bit), bit)}}};
  };
}

RecursionOptions unchecked(const RecursionOptions& o) {
  RecursionOptions copy = o;
  copy.check_preconditions = false;
  return copy;
}

void require_normal_vf_closed(const SetSystem& m, const RecursionOptions& options) {
  if (!m.contains(0)) throw PreconditionError("system is not normal");
  if (should_check(m, options) && !is_vf_closed(m, options.orbit_cap)) {
    throw PreconditionError("system is not a vf-closed Δ-matroid");
  }
}

RecursionTrace::Branch as_branch(std::string label, RecursionResult r, const SetSystem& system) {
  // a memoised child has no recorded trace; keep it as a leaf carrying its value
  if (r.trace.children.empty()) r.trace.system = system;
  r.trace.value = r.value;
  return {std::move(label), std::move(r.trace)};
}

RecursionResult combine(const SetSystem& m, std::size_t u, std::vector<RecursionTrace::Branch> branches) {
  RecursionResult result;
  result.trace.system = m;
  result.trace.element = m.ground().label(u);
  for (const auto& b : branches) {
    if (!b.node.system.contains(0)) {
      throw PreconditionError("component " + b.label + " is not normal");
    }
    result.value += b.node.value;
  }
  result.trace.value = result.value;
  result.trace.children = std::move(branches);
  return result;
}

}  // namespace

std::size_t RecursionTrace::leaf_count() const {
  if (leaf()) return 1;
  std::size_t total = 0;
  for (const auto& c : children) total += c.node.leaf_count();
  return total;
}

std::vector<UniPoly> RecursionTrace::leaf_values() const {
  if (leaf()) return {value};
  std::vector<UniPoly> out;
  for (const auto& c : children) {
    auto sub = c.node.leaf_values();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

RecursionResult q1_recursive(const SetSystem& m, const RecursionOptions& options) {
  require_proper(m);
  if (should_check(m, options) && !is_delta_matroid(m)) {
    throw PreconditionError("q1 recursion requires a Δ-matroid");
  }
  return Engine(q1_rule(options.choice), 1, options.memoize).run(m);
}

RecursionResult q2_q3_recursive(const SetSystem& m, PolyKind which, const RecursionOptions& options) {
  require_proper(m);
  if (which != PolyKind::q2 && which != PolyKind::q3) {
    throw DomainError("q2_q3_recursive computes q2 or q3 only");
  }
  if (should_check(m, options)) {
    const Subset full = m.ground().full();
    const SetSystem transformed = which == PolyKind::q2 ? dual_pivot(m, full) : loop_complement(m, full);
    if (!is_delta_matroid(transformed)) {
      throw PreconditionError(which == PolyKind::q2 ? "q2 recursion requires M~*V to be a Δ-matroid"
                                                    : "q3 recursion requires M+V to be a Δ-matroid");
    }
  }
  Rule rule = which == PolyKind::q2 ? q2_rule(options.choice) : q3_rule(options.choice);
  return Engine(std::move(rule), 1, options.memoize).run(m);
}

RecursionResult Q1_recursive(const SetSystem& m, const RecursionOptions& options) {
  require_proper(m);
  const bool checked = should_check(m, options);
  if (checked && !is_vf_closed(m, options.orbit_cap)) {
    throw PreconditionError("Q1 recursion requires a vf-closed Δ-matroid");
  }
  RecursionResult result = Engine(Q1_rule(options.choice), 2, options.memoize).run(m);
  if (!checked && m.n() <= kMultiQMaxN) {
    const UniPoly direct = poly_direct(m, PolyKind::Q1);
    if (direct != result.value) {
      const auto report = Q1_recursion_report(m);
      std::string msg = "Q1 recursion disagrees with the definition: direct " + direct.to_string() +
                        ", recursive " + result.value.to_string();
      if (report.first_step_sum) msg += ", first three-term sum " + report.first_step_sum->to_string();
      throw RecursionMismatchError(msg);
    }
  }
  return result;
}

Q1RecursionReport Q1_recursion_report(const SetSystem& m) {
  require_proper(m);
  Q1RecursionReport report;
  report.direct = poly_direct(m, PolyKind::Q1);
  report.recursive = Engine(Q1_rule(ElementChoice::Smallest), 2, true).run(m).value;
  if (auto split = Q1_rule(ElementChoice::Smallest)(m)) {
    UniPoly sum;
    for (const auto& [label, child] : split->children) sum += poly_direct(child, PolyKind::Q1);
    report.first_step_sum = sum;
  }
  return report;
}

RecursionResult q1_normal_recursive(const SetSystem& m, Subset x, std::size_t u,
                                    const RecursionOptions& options) {
  require_proper(m);
  if (u >= m.n()) throw DomainError("element outside the ground set");
  m.ground().require_subset(x);
  const Subset bit = singleton(u);
  if (!m.contains(x)) throw PreconditionError(m.ground().format(x) + " is not a member");
  if ((x & bit) == 0) throw PreconditionError("the pivot set must contain the split element");
  require_normal_vf_closed(m, options);
  const auto& g = m.ground();
  const SetSystem deleted = delete_elements(m, bit);
  const SetSystem pivoted = delete_elements(pivot(m, x), bit);
  const auto inner = unchecked(options);
  std::vector<RecursionTrace::Branch> branches;
  branches.push_back(as_branch(delete_label(g, bit), q1_recursive(deleted, inner), deleted));
  branches.push_back(as_branch("*" + element_word(g, x) + delete_label(g, bit),
                               q1_recursive(pivoted, inner), pivoted));
  return combine(m, u, std::move(branches));
}

RecursionResult q2_three_term_step(const SetSystem& m, std::size_t u, std::size_t v,
                                   const RecursionOptions& options) {
  require_proper(m);
  if (u >= m.n() || v >= m.n() || u == v) throw DomainError("need two distinct elements of the ground set");
  const Subset bu = singleton(u);
  const Subset bv = singleton(v);
  const Subset uv = bu | bv;
  if (!m.contains(uv) || m.contains(bu) || m.contains(bv)) {
    throw PreconditionError("three-term step needs {u,v} in M and {u}, {v} not in M");
  }
  require_normal_vf_closed(m, options);
  const auto& g = m.ground();
  const std::string wu = element_word(g, bu);
  const std::string wv = element_word(g, bv);
  const SetSystem first = delete_elements(pivot(m, uv), uv);
  const SetSystem second = delete_elements(dual_pivot(pivot(m, bu), bv), uv);
  const SetSystem third = delete_elements(dual_pivot(m, bu), bu);
  const auto inner = unchecked(options);
  std::vector<RecursionTrace::Branch> branches;
  branches.push_back(as_branch("*" + g.format(uv) + delete_label(g, uv),
                               q2_q3_recursive(first, PolyKind::q2, inner), first));
  branches.push_back(as_branch("*" + wu + "~*" + wv + delete_label(g, uv),
                               q2_q3_recursive(second, PolyKind::q2, inner), second));
  branches.push_back(as_branch("~*" + wu + delete_label(g, bu),
                               q2_q3_recursive(third, PolyKind::q2, inner), third));
  return combine(m, u, std::move(branches));
}

RecursionResult q3_normal_recursive(const SetSystem& m, Subset y, std::size_t u,
                                    const RecursionOptions& options) {
  require_proper(m);
  if (u >= m.n()) throw DomainError("element outside the ground set");
  m.ground().require_subset(y);
  const Subset bit = singleton(u);
  if (!loop_complement(m, m.ground().full()).contains(y)) {
    throw PreconditionError(m.ground().format(y) + " is not a member of M+V");
  }
  if ((y & bit) == 0) throw PreconditionError("the dual pivot set must contain the split element");
  require_normal_vf_closed(m, options);
  const auto& g = m.ground();
  const SetSystem flipped = delete_elements(dual_pivot(m, y), bit);
  const SetSystem deleted = delete_elements(m, bit);
  const auto inner = unchecked(options);
  std::vector<RecursionTrace::Branch> branches;
  branches.push_back(as_branch("~*" + element_word(g, y) + delete_label(g, bit),
                               q2_q3_recursive(flipped, PolyKind::q3, inner), flipped));
  branches.push_back(as_branch(delete_label(g, bit), q2_q3_recursive(deleted, PolyKind::q3, inner), deleted));
  return combine(m, u, std::move(branches));
}

MultiplicativeStep q1_multiplicative_step(const SetSystem& m, std::size_t u) {
  require_proper(m);
  if (u >= m.n()) throw DomainError("element outside the ground set");
  const Subset bit = singleton(u);
  SetSystem deleted = delete_elements(m, bit);
  SetSystem contracted = delete_elements(pivot(m, bit), bit);
  if (contracted.empty()) return {StepCase::PivotImproper, {std::move(deleted)}};
  if (deleted.empty()) return {StepCase::DeletionImproper, {std::move(contracted)}};
  return {StepCase::Additive, {std::move(deleted), std::move(contracted)}};
}

UniPoly q1_by_element_order(const SetSystem& m) {
  require_proper(m);
  if (m.n() == 0) return UniPoly{1};
  const MultiplicativeStep step = q1_multiplicative_step(m, 0);
  if (step.kind == StepCase::Additive) {
    return q1_by_element_order(step.components[0]) + q1_by_element_order(step.components[1]);
  }
  return UniPoly{1, 1} * q1_by_element_order(step.components[0]);
}

namespace {

void render(const RecursionTrace& node, const std::string& label, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  if (!label.empty()) out += label + ": ";
  out += node.system.format() + " = " + node.value.to_string();
  out += node.leaf() ? "  [leaf]" : "  [split " + node.element + "]";
  out += '\n';
  for (const auto& c : node.children) render(c.node, c.label, depth + 1, out);
}

}  // namespace

std::string render_trace(const RecursionTrace& trace) {
  std::string out;
  render(trace, "", 0, out);
  return out;
}

}  // namespace deltaflip
