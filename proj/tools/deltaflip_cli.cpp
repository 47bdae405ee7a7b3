// deltaflip: vertex flips, interlace polynomials and Tutte identities on set systems.

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "deltaflip/delta_matroid.hpp"
#include "deltaflip/errors.hpp"
#include "deltaflip/io.hpp"
#include "deltaflip/recursion.hpp"

using namespace deltaflip;

namespace {

struct Options {
  std::string input = "-";
  std::string format = "json";
  bool force = false;
  bool text() const { return format == "text"; }
};

Document read_input(const Options& o) {
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.input);
    if (!in) throw ParseError("cannot read input file '" + o.input + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_document(text);
}

/// Any document viewed as a set system: M_G, M_A (square matrices) or the bases.
SetSystem as_system(const Document& doc, bool force) {
  if (auto* m = std::get_if<SetSystem>(&doc)) return *m;
  if (auto* g = std::get_if<Graph>(&doc)) return graph_to_system(*g, force);
  if (auto* r = std::get_if<BinaryMatrix>(&doc)) return support_set_system(r->to_square(), force);
  return std::get<Matroid>(doc).bases();
}

Matroid as_matroid(const Document& doc, bool force) {
  if (auto* m = std::get_if<Matroid>(&doc)) return *m;
  if (auto* r = std::get_if<BinaryMatrix>(&doc)) return binary_matroid_from_matrix(*r, force);
  if (auto* s = std::get_if<SetSystem>(&doc)) return Matroid(*s);
  throw DomainError("expected a matroid, matrix or setsystem document, got " + document_type(doc));
}

BinaryMatrix as_representation(const Document& doc) {
  if (auto* r = std::get_if<BinaryMatrix>(&doc)) return *r;
  if (auto* m = std::get_if<Matroid>(&doc); m && m->representation()) return *m->representation();
  throw DomainError("expected a matrix document or a matroid with a representation");
}

void print(const Options& o, const Json& json, const std::string& text) {
  if (o.text()) {
    std::cout << text << "\n";
  } else {
    std::cout << emit(json);
  }
}

void print_document(const Options& o, const Document& doc) {
  std::string text;
  if (auto* m = std::get_if<SetSystem>(&doc)) {
    text = m->format();
  } else {
    text = emit_document(doc);
    text.pop_back();
  }
  print(o, to_json(doc), text);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

PolyKind require_kind(const std::string& which) {
  auto k = parse_poly_kind(which);
  if (!k) throw DomainError("unknown polynomial '" + which + "' (expected Q1, q1, q2 or q3)");
  return *k;
}

UniPoly compute_poly(const Document& doc, PolyKind kind, const std::string& method, bool force) {
  if (method == "graph") {
    auto* g = std::get_if<Graph>(&doc);
    if (!g) throw DomainError("method 'graph' needs a graph document");
    return graph_poly(*g, kind, force);
  }
  const SetSystem m = as_system(doc, force);
  if (method == "multivariate") return specialize(multivariate_Q(m, force), kind);
  if (method == "recursive") {
    switch (kind) {
      case PolyKind::q1: return q1_recursive(m).value;
      case PolyKind::Q1: return Q1_recursive(m).value;
      default: return q2_q3_recursive(m, kind).value;
    }
  }
  return poly_direct(m, kind, force);
}

// ---- verify ----

struct CheckLine {
  std::string name;
  std::string status;
  std::string detail;
};

class Suite {
 public:
  void run(const std::string& name, const std::function<std::string()>& body) {
    try {
      const std::string detail = body();
      lines_.push_back({name, "pass", detail});
    } catch (const Skip& s) {
      lines_.push_back({name, "skip", s.what()});
    } catch (const Mismatch& m) {
      lines_.push_back({name, "fail", m.what()});
    } catch (const Error& e) {
      lines_.push_back({name, "fail", e.name() + ": " + e.what()});
    }
  }

  struct Skip : std::runtime_error {
    using std::runtime_error::runtime_error;
  };
  struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  bool ok() const {
    return std::none_of(lines_.begin(), lines_.end(), [](const CheckLine& l) { return l.status == "fail"; });
  }
  const std::vector<CheckLine>& lines() const { return lines_; }

 private:
  std::vector<CheckLine> lines_;
};

void expect_equal(const UniPoly& a, const UniPoly& b, const std::string& what) {
  if (!(a == b)) throw Suite::Mismatch(what + ": " + a.to_string() + " != " + b.to_string());
}

void system_suites(Suite& suite, const SetSystem& m) {
  suite.run("multivariate-specialisation", [&] {
    if (m.n() > kMultiQMaxN) throw Suite::Skip("n above the multivariate cap");
    if (m.empty()) throw Suite::Skip("improper system");
    const MultiQPoly q = multivariate_Q(m);
    for (PolyKind k : {PolyKind::Q1, PolyKind::q1, PolyKind::q2, PolyKind::q3}) {
      expect_equal(specialize(q, k), poly_direct(m, k), to_string(k));
    }
    return std::string();
  });
  const bool dm = is_delta_matroid(m);
  suite.run("q1-recursive", [&] {
    if (!dm) throw Suite::Skip("not a delta-matroid");
    expect_equal(q1_recursive(m).value, poly_direct(m, PolyKind::q1), "q1");
    return poly_direct(m, PolyKind::q1).to_string();
  });
  for (PolyKind k : {PolyKind::q2, PolyKind::q3}) {
    suite.run(to_string(k) + "-recursive", [&] {
      const SetSystem base =
          full_flip_explicit(m, k == PolyKind::q2 ? FlipKind::DualPivot : FlipKind::LoopComplement);
      if (!is_delta_matroid(base)) throw Suite::Skip("hypothesis fails for this input");
      expect_equal(q2_q3_recursive(m, k).value, poly_direct(m, k), to_string(k));
      return poly_direct(m, k).to_string();
    });
  }
  bool vf = false;
  suite.run("Q1-recursive", [&] {
    if (!dm) throw Suite::Skip("not a delta-matroid");
    if (m.n() > kPreconditionCheckMaxN) throw Suite::Skip("vf-closure check skipped above n = 8");
    vf = is_vf_closed(m);
    if (!vf) throw Suite::Skip("not vf-closed");
    expect_equal(Q1_recursive(m).value, poly_direct(m, PolyKind::Q1), "Q1");
    return poly_direct(m, PolyKind::Q1).to_string();
  });
  suite.run("evaluations-at-minus-two", [&] {
    if (!vf) throw Suite::Skip("requires a vf-closed delta-matroid");
    const std::size_t n = m.n();
    const BigInt sign = n % 2 == 0 ? 1 : -1;
    auto power = [](int d) {
      BigInt r = 1;
      for (int i = 0; i < d; ++i) r *= -2;
      return r;
    };
    if (n > 0 && poly_direct(m, PolyKind::Q1).evaluate(-2) != 0) throw Suite::Mismatch("Q1(-2) != 0");
    const int d_dual = distance(full_flip_explicit(m, FlipKind::DualPivot), 0);
    if (poly_direct(m, PolyKind::q1).evaluate(-2) != sign * power(d_dual)) throw Suite::Mismatch("q1(-2)");
    if (poly_direct(m, PolyKind::q2).evaluate(-2) != sign * power(distance(m, 0))) throw Suite::Mismatch("q2(-2)");
    const int d_piv = distance(full_flip_explicit(m, FlipKind::Pivot), 0);
    if (poly_direct(m, PolyKind::q3).evaluate(-2) != sign * power(d_piv)) throw Suite::Mismatch("q3(-2)");
    return std::string();
  });
}

void graph_suites(Suite& suite, const Graph& g) {
  const SetSystem m = graph_to_system(g);
  suite.run("graph-roundtrip", [&] {
    if (!(system_to_graph(m) == g)) throw Suite::Mismatch("reconstructed graph differs");
    return std::string();
  });
  suite.run("nullity-distance", [&] {
    const auto table = distance_table(m);
    for (Subset x = 0; x < table.size(); ++x) {
      if (table[x] != det_nullity(g.adjacency(), x).nullity) {
        throw Suite::Mismatch("at X = " + g.ground().format(x));
      }
    }
    return std::string();
  });
  suite.run("graph-polynomials", [&] {
    for (PolyKind k : {PolyKind::Q1, PolyKind::q1, PolyKind::q2, PolyKind::q3}) {
      expect_equal(graph_poly(g, k), poly_direct(m, k), to_string(k));
    }
    return std::string();
  });
  suite.run("flip-commutation", [&] {
    const Subset full = g.ground().full();
    if (graph_to_system(graph_flip(g, FlipKind::LoopComplement, full)) != loop_complement(m, full)) {
      throw Suite::Mismatch("M_{G+V} != M_G+V");
    }
    for (Subset x : elementary_pivots(g)) {
      if (graph_to_system(graph_flip(g, FlipKind::Pivot, x)) != pivot(m, x)) {
        throw Suite::Mismatch("M_{G*X} != M_G*X at X = " + g.ground().format(x));
      }
    }
    return std::string();
  });
  system_suites(suite, m);
}

void matroid_suites(Suite& suite, const Matroid& mt) {
  suite.run("tutte-rank-vs-deletion-contraction", [&] {
    if (!(tutte(mt) == tutte_dc(mt))) throw Suite::Mismatch(tutte(mt).to_string() + " != " + tutte_dc(mt).to_string());
    return tutte(mt).to_string();
  });
  suite.run("tutte-diagonal", [&] {
    const DiagonalCheck c = tutte_diagonal_check(mt);
    expect_equal(c.via_tutte, c.via_q1, "t(y,y) vs q1(y-1)");
    return c.via_tutte.to_string();
  });
  if (mt.representation()) {
    const BinaryMatrix& r = *mt.representation();
    suite.run("bicycle-dimension", [&] {
      const int b = bicycle_dimension(r);
      const int d = distance(full_flip_explicit(mt.bases(), FlipKind::DualPivot), 0);
      if (b != d) throw Suite::Mismatch(std::to_string(b) + " != " + std::to_string(d));
      return std::to_string(b);
    });
    suite.run("fundamental-graph", [&] {
      const Subset basis = mt.bases().family().front();
      const Graph g = fundamental_graph(r, basis);
      if (pivot(graph_to_system(g), basis) != mt.bases()) throw Suite::Mismatch("M_G*B != M");
      expect_equal(poly_direct(graph_to_system(g), PolyKind::q1).shifted(-1), tutte(mt).diagonal(), "q1(G)(y-1)");
      return std::string();
    });
  }
  system_suites(suite, mt.bases());
}

int run_verify(const Options& o) {
  const Document doc = read_input(o);
  Suite suite;
  if (auto* g = std::get_if<Graph>(&doc)) {
    graph_suites(suite, *g);
  } else if (auto* m = std::get_if<Matroid>(&doc)) {
    matroid_suites(suite, *m);
  } else if (auto* r = std::get_if<BinaryMatrix>(&doc)) {
    if (r->rows.size() == r->columns.size() && r->to_square().is_symmetric()) {
      graph_suites(suite, Graph(r->to_square()));
    }
    matroid_suites(suite, binary_matroid_from_matrix(*r, o.force));
  } else {
    system_suites(suite, std::get<SetSystem>(doc));
  }
  Json checks = Json::array();
  std::ostringstream text;
  for (const auto& l : suite.lines()) {
    Json entry{{"name", l.name}, {"status", l.status}};
    if (!l.detail.empty()) entry["detail"] = l.detail;
    checks.push_back(std::move(entry));
    text << (l.status == "pass" ? "PASS " : l.status == "fail" ? "FAIL " : "SKIP ") << l.name;
    if (!l.detail.empty()) text << "  (" << l.detail << ")";
    text << "\n";
  }
  std::string t = text.str();
  if (!t.empty()) t.pop_back();
  print(o, Json{{"ok", suite.ok()}, {"checks", std::move(checks)}}, t);
  return suite.ok() ? 0 : 1;
}

Json shape_json(const EvaluationShape& s) {
  return Json{{"p", s.p},
              {"value", to_json(s.value)},
              {"d", s.d},
              {"divisible", s.divisible},
              {"k", to_json(s.k)},
              {"k_odd", s.k_odd},
              {"congruent_mod_p", s.congruent},
              {"congruent_mod_half_p", s.congruent_half}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex flips, interlace polynomials and Tutte identities on set systems"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--force", o.force, "Lift the size caps on exponential computations");

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Document path, or - for stdin");
    return sub;
  };

  std::function<int()> action;

  auto* validate = with_input(app.add_subcommand("validate", "Parse a document and re-emit it canonically"));
  validate->callback([&] {
    action = [&] {
      print_document(o, read_input(o));
      return 0;
    };
  });

  std::string word;
  auto* apply = with_input(app.add_subcommand("apply", "Apply an operation word to a set system or graph"));
  apply->add_option("--word,-w", word, "e.g. \"+{p,q}*r~*s\\u\"")->required();
  apply->callback([&] {
    action = [&] {
      const Document doc = read_input(o);
      const auto tokens = parse_word(word);
      if (auto* g = std::get_if<Graph>(&doc)) {
        print_document(o, apply_word(*g, tokens));
      } else {
        print_document(o, apply_word(as_system(doc, o.force), tokens));
      }
      return 0;
    };
  });

  std::string which = "q1";
  std::string method = "direct";
  auto* poly = with_input(app.add_subcommand("poly", "Interlace polynomial as ascending coefficients"));
  poly->add_option("--which", which, "Q1, q1, q2, q3, or Q for the multivariate form");
  poly->add_option("--method", method, "direct, recursive, multivariate or graph")
      ->check(CLI::IsMember({"direct", "recursive", "multivariate", "graph"}));
  poly->callback([&] {
    action = [&] {
      const Document doc = read_input(o);
      if (which == "Q") {
        const MultiQPoly q = multivariate_Q(as_system(doc, o.force), o.force);
        std::ostringstream text;
        for (const QEntry& e : q.entries()) {
          const Subset a = q.ground().full() & ~(e.b | e.c);
          text << q.ground().format(a) << " " << q.ground().format(e.b) << " " << q.ground().format(e.c) << " "
               << e.exponent << "\n";
        }
        std::string t = text.str();
        t.pop_back();
        print(o, to_json(q), t);
        return 0;
      }
      const UniPoly p = compute_poly(doc, require_kind(which), method, o.force);
      print(o, to_json(p), p.to_string());
      return 0;
    };
  });

  std::string at;
  auto* eval = with_input(app.add_subcommand("eval", "Evaluate an interlace polynomial at an integer"));
  eval->add_option("--which", which, "Q1, q1, q2 or q3");
  eval->add_option("--at", at, "Integer evaluation point")->required();
  eval->add_option("--method", method, "direct, recursive, multivariate or graph")
      ->check(CLI::IsMember({"direct", "recursive", "multivariate", "graph"}));
  eval->callback([&] {
    action = [&] {
      BigInt y;
      try {
        y = BigInt(at);
      } catch (const std::exception&) {
        throw ParseError("--at expects an integer, got '" + at + "'");
      }
      const BigInt v = compute_poly(read_input(o), require_kind(which), method, o.force).evaluate(y);
      print(o, to_json(v), to_decimal(v));
      return 0;
    };
  });

  std::string property;
  std::string element;
  std::size_t cap = kDefaultOrbitCap;
  auto* check = with_input(app.add_subcommand("check", "Test a property of the input's set system"));
  check->add_option("--property,-p", property, "dm, even, vfclosed, divisible or classify")
      ->required()
      ->check(CLI::IsMember({"dm", "even", "vfclosed", "divisible", "classify"}));
  check->add_option("--element,-e", element, "Element for the divisibility check");
  check->add_option("--cap", cap, "Orbit cap for vfclosed");
  check->callback([&] {
    action = [&] {
      const SetSystem m = as_system(read_input(o), o.force);
      if (property == "classify") {
        const Classification c = classify(m);
        print(o, Json{{"proper", c.proper}, {"normal", c.normal}, {"equicardinal", c.equicardinal}},
              "proper=" + bool_text(c.proper) + " normal=" + bool_text(c.normal) +
                  " equicardinal=" + bool_text(c.equicardinal));
      } else if (property == "divisible") {
        Json out = Json::object();
        std::string text;
        for (std::size_t u = 0; u < m.n(); ++u) {
          if (!element.empty() && m.ground().label(u) != element) continue;
          const DivisibilityStatus s = divisibility(m, u);
          out[m.ground().label(u)] = Json{{"divisible", s.divisible}, {"strongly_divisible", s.strongly_divisible}};
          text += m.ground().label(u) + ": divisible=" + bool_text(s.divisible) +
                  " strongly=" + bool_text(s.strongly_divisible) + "\n";
        }
        if (!element.empty() && out.empty()) m.ground().require_index(element);
        if (!text.empty()) text.pop_back();
        print(o, out, text);
      } else {
        bool v = false;
        if (property == "dm") v = is_delta_matroid(m);
        if (property == "even") v = is_even(m);
        if (property == "vfclosed") v = is_vf_closed(m, cap);
        print(o, v, bool_text(v));
      }
      return 0;
    };
  });

  std::string generators = "fullV";
  auto* orbit = with_input(app.add_subcommand("orbit", "Orbit under vertex flips"));
  orbit->add_option("--generators", generators, "fullV (alternate +V, *V) or single (all *u, +u)")
      ->check(CLI::IsMember({"fullV", "single"}));
  orbit->add_option("--cap", cap, "Maximum orbit size");
  orbit->callback([&] {
    action = [&] {
      const auto members = vf_orbit(as_system(read_input(o), o.force),
                                    generators == "fullV" ? OrbitGenerators::FullVAlternation
                                                          : OrbitGenerators::SingleElementFlips,
                                    cap);
      Json out = Json::array();
      std::string text;
      for (const auto& s : members) {
        out.push_back(to_json(s));
        text += s.format() + "\n";
      }
      if (!text.empty()) text.pop_back();
      print(o, out, text);
      return 0;
    };
  });

  bool unchecked = false;
  auto* tree = with_input(app.add_subcommand("tree", "Recursion trace of an interlace polynomial"));
  tree->add_option("--which", which, "Q1, q1, q2 or q3");
  tree->add_flag("--unchecked", unchecked, "Skip the hypothesis check on entry");
  tree->callback([&] {
    action = [&] {
      const SetSystem m = as_system(read_input(o), o.force);
      RecursionOptions ro;
      if (unchecked) ro.check_preconditions = false;
      RecursionResult r;
      switch (require_kind(which)) {
        case PolyKind::q1: r = q1_recursive(m, ro); break;
        case PolyKind::Q1: r = Q1_recursive(m, ro); break;
        case PolyKind::q2: r = q2_q3_recursive(m, PolyKind::q2, ro); break;
        case PolyKind::q3: r = q2_q3_recursive(m, PolyKind::q3, ro); break;
      }
      std::string text = render_trace(r.trace);
      if (!text.empty() && text.back() == '\n') text.pop_back();
      print(o, to_json(r.trace), text);
      return 0;
    };
  });

  std::string to = "setsystem";
  auto* from_graph = with_input(app.add_subcommand("from-graph", "Graph document to M_G or its adjacency matrix"));
  from_graph->add_option("--to", to, "setsystem or matrix")->check(CLI::IsMember({"setsystem", "matrix"}));
  from_graph->callback([&] {
    action = [&] {
      const Document doc = read_input(o);
      auto* g = std::get_if<Graph>(&doc);
      if (!g) throw DomainError("from-graph expects a graph document, got " + document_type(doc));
      if (to == "matrix") {
        print_document(o, BinaryMatrix{g->ground(), g->adjacency().rows()});
      } else {
        print_document(o, graph_to_system(*g, o.force));
      }
      return 0;
    };
  });

  auto* from_matrix = with_input(app.add_subcommand("from-matrix", "Matrix document to M_A, a graph or a binary matroid"));
  from_matrix->add_option("--to", to, "setsystem, graph or matroid")
      ->check(CLI::IsMember({"setsystem", "graph", "matroid"}));
  from_matrix->callback([&] {
    action = [&] {
      const Document doc = read_input(o);
      auto* r = std::get_if<BinaryMatrix>(&doc);
      if (!r) throw DomainError("from-matrix expects a matrix document, got " + document_type(doc));
      if (to == "matroid") {
        print_document(o, binary_matroid_from_matrix(*r, o.force));
      } else if (to == "graph") {
        print_document(o, Graph(r->to_square()));
      } else {
        print_document(o, support_set_system(r->to_square(), o.force));
      }
      return 0;
    };
  });

  std::string set;
  auto* ppt_cmd = with_input(app.add_subcommand("ppt", "Principal pivot transform of a matrix or graph"));
  ppt_cmd->add_option("--set,-s", set, "Pivot set, e.g. {p,q}")->required();
  ppt_cmd->callback([&] {
    action = [&] {
      const Document doc = read_input(o);
      if (auto* g = std::get_if<Graph>(&doc)) {
        print_document(o, graph_flip(*g, FlipKind::Pivot, parse_subset(g->ground(), set)));
        return 0;
      }
      auto* r = std::get_if<BinaryMatrix>(&doc);
      if (!r) throw DomainError("ppt expects a matrix or graph document, got " + document_type(doc));
      const Gf2Matrix out = ppt(r->to_square(), parse_subset(r->columns, set));
      print_document(o, BinaryMatrix{out.ground(), out.rows()});
      return 0;
    };
  });

  std::string tutte_method = "rank";
  std::optional<long long> evaluate_p;
  auto* tutte_cmd = with_input(app.add_subcommand("tutte", "Tutte polynomial of a matroid or binary matrix"));
  tutte_cmd->add_option("--method", tutte_method, "rank or dc")->check(CLI::IsMember({"rank", "dc"}));
  tutte_cmd->add_option("--evaluate", evaluate_p,
                        "Even p: decompose t(p-1,p-1) = k(-2)^d (p = 0 gives t(-1,-1))");
  tutte_cmd->callback([&] {
    action = [&] {
      const Matroid mt = as_matroid(read_input(o), o.force);
      if (evaluate_p) {
        const EvaluationShape s = tutte_evaluations(mt, *evaluate_p);
        print(o, shape_json(s),
              "t = " + to_decimal(s.value) + " = " + to_decimal(s.k) + " * (-2)^" + std::to_string(s.d) +
                  "  k_odd=" + bool_text(s.k_odd) + " congruent_mod_p=" + bool_text(s.congruent) +
                  " congruent_mod_half_p=" + bool_text(s.congruent_half));
        return 0;
      }
      const BiPoly t = tutte_method == "dc" ? tutte_dc(mt) : tutte(mt, o.force);
      print(o, to_json(t), t.to_string());
      return 0;
    };
  });

  auto* bicycle = with_input(app.add_subcommand("bicycle-dim", "Dimension of the bicycle space"));
  bicycle->callback([&] {
    action = [&] {
      const int b = bicycle_dimension(as_representation(read_input(o)));
      print(o, b, std::to_string(b));
      return 0;
    };
  });

  std::string basis;
  auto* fundamental = with_input(app.add_subcommand("fundamental-graph", "Fundamental graph of a binary matroid"));
  fundamental->add_option("--basis,-b", basis, "Basis, e.g. {1,2}")->required();
  fundamental->callback([&] {
    action = [&] {
      const BinaryMatrix r = as_representation(read_input(o));
      print_document(o, fundamental_graph(r, parse_subset(r.columns, basis)));
      return 0;
    };
  });

  auto* verify = with_input(app.add_subcommand("verify", "Cross-check the identities that apply to the input"));
  verify->callback([&] { action = [&] { return run_verify(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
