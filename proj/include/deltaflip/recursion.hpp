#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaflip/interlace.hpp"
#include "deltaflip/polynomial.hpp"
#include "deltaflip/set_system.hpp"

namespace deltaflip {

/// One node of a recursive computation. Leaves are base cases; an internal
/// node's value is the sum of its children's values.
struct RecursionTrace {
  struct Branch;

  SetSystem system;
  /// Label of the element split on; empty at a leaf.
  std::string element;
  UniPoly value;
  std::vector<Branch> children;

  bool leaf() const { return children.empty(); }
  std::size_t leaf_count() const;
  std::vector<UniPoly> leaf_values() const;
};

struct RecursionTrace::Branch {
  /// Operation word applied to the parent, e.g. "\p", "*p\p", "~*p\p".
  std::string label;
  RecursionTrace node;
};

enum class ElementChoice { Smallest, Largest };

struct RecursionOptions {
  /// Verify the theorem's hypothesis on entry. Unset: checked when n <= 8.
  std::optional<bool> check_preconditions;
  ElementChoice choice = ElementChoice::Smallest;
  /// Skip recomputing repeated subproblems. No trace is recorded in this mode.
  bool memoize = false;
  /// Orbit cap for the vf-closure check.
  std::size_t orbit_cap = 100000;
};

inline constexpr std::size_t kPreconditionCheckMaxN = 8;

struct RecursionResult {
  UniPoly value;
  /// Empty (default system, no children) when memoised.
  RecursionTrace trace;
};

/// q1 by deletion / pivot-deletion on a divisible element; (y+1)^n once the
/// system has a single member. Hypothesis: M is a Δ-matroid.
RecursionResult q1_recursive(const SetSystem& m, const RecursionOptions& options = {});

/// q2: branches *u\u and ~*u\u while M~*V is divisible by u.
/// q3: branches ~*u\u and \u while M+V is divisible by u.
/// Hypothesis: M~*V (resp. M+V) is a Δ-matroid.
RecursionResult q2_q3_recursive(const SetSystem& m, PolyKind which,
                                const RecursionOptions& options = {});

/// Q1 by the three-way split \u, *u\u, ~*u\u on a strongly divisible element;
/// (y+2)^n otherwise. Correct only for vf-closed Δ-matroids.
///
/// With preconditions checked a non-vf-closed input throws PreconditionError.
/// Unchecked, the result is compared against poly_direct and a disagreement
/// throws RecursionMismatchError carrying both values.
RecursionResult Q1_recursive(const SetSystem& m, const RecursionOptions& options = {});

/// Diagnostic for inputs outside the Q1 recursion's hypothesis.
struct Q1RecursionReport {
  UniPoly direct;
  UniPoly recursive;
  /// Q1(M\u) + Q1(M*u\u) + Q1(M~*u\u) with each component computed directly,
  /// for the first strongly divisible u; unset if there is none.
  std::optional<UniPoly> first_step_sum;
  bool agree() const { return direct == recursive; }
};

Q1RecursionReport Q1_recursion_report(const SetSystem& m);

/// One step with normal components, for a normal vf-closed Δ-matroid:
/// q1(M) = q1(M\u) + q1(M*X\u) with X a member containing u.
RecursionResult q1_normal_recursive(const SetSystem& m, Subset x, std::size_t u,
                                    const RecursionOptions& options = {});

/// q2(M) = q2(M*{u,v}\{u,v}) + q2(M*u~*v\{u,v}) + q2(M~*u\u) when {u,v} is a
/// member and {u}, {v} are not (M normal vf-closed Δ-matroid).
RecursionResult q2_three_term_step(const SetSystem& m, std::size_t u, std::size_t v,
                                   const RecursionOptions& options = {});

/// q3(M) = q3(M~*Y\u) + q3(M\u) with Y a member of M+V containing u.
RecursionResult q3_normal_recursive(const SetSystem& m, Subset y, std::size_t u,
                                    const RecursionOptions& options = {});

enum class StepCase {
  /// M*u\u improper: q1(M) = (y+1) q1(M\u)
  PivotImproper,
  /// M\u improper: q1(M) = (y+1) q1(M*u\u)
  DeletionImproper,
  /// both proper: q1(M) = q1(M\u) + q1(M*u\u)
  Additive,
};

struct MultiplicativeStep {
  StepCase kind;
  /// The proper components, in the order of the formula.
  std::vector<SetSystem> components;
};

MultiplicativeStep q1_multiplicative_step(const SetSystem& m, std::size_t u);

/// q1 of a Δ-matroid recursing on element 0 every time via
/// q1_multiplicative_step, mirroring deletion/contraction for Tutte.
UniPoly q1_by_element_order(const SetSystem& m);

/// Indented text rendering of a trace.
std::string render_trace(const RecursionTrace& trace);

}  // namespace deltaflip
