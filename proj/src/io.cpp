#include "deltaflip/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "deltaflip/errors.hpp"

namespace deltaflip {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return v;
}

std::string label_string(const Json& v, const char* where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(std::string("labels in '") + where + "' must be strings");
}

std::vector<std::string> labels_from(const Json& arr, const char* where) {
  std::vector<std::string> out;
  for (const Json& v : arr) out.push_back(label_string(v, where));
  return out;
}

Subset subset_from(const GroundSet& ground, const Json& arr, const char* where) {
  if (!arr.is_array()) throw ParseError(std::string("members of '") + where + "' must be arrays of labels");
  Subset s = 0;
  for (const Json& v : arr) {
    const std::size_t i = ground.require_index(label_string(v, where));
    if (contains(s, i)) throw DomainError("label " + ground.label(i) + " repeated within a set");
    s |= singleton(i);
  }
  return s;
}

std::vector<Subset> family_from(const GroundSet& ground, const Json& arr, const char* where) {
  std::vector<Subset> out;
  for (const Json& v : arr) out.push_back(subset_from(ground, v, where));
  return out;
}

std::vector<Subset> rows_from(const GroundSet& columns, const Json& arr) {
  std::vector<Subset> rows;
  for (const Json& row : arr) {
    if (!row.is_array() || row.size() != columns.size()) {
      throw ParseError("each matrix row must be an array of " + std::to_string(columns.size()) + " entries");
    }
    Subset bits = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const Json& e = row[j];
      if (!e.is_number_integer() || (e.get<long long>() != 0 && e.get<long long>() != 1)) {
        throw ParseError("matrix entries must be 0 or 1");
      }
      if (e.get<long long>() == 1) bits |= singleton(j);
    }
    rows.push_back(bits);
  }
  return rows;
}

Json labels_json(const GroundSet& ground, Subset s) {
  Json out = Json::array();
  for (const auto& l : ground.labels_of(s)) out.push_back(l);
  return out;
}

Json rows_json(const std::vector<Subset>& rows, std::size_t width) {
  Json out = Json::array();
  for (Subset r : rows) {
    Json row = Json::array();
    for (std::size_t j = 0; j < width; ++j) row.push_back(contains(r, j) ? 1 : 0);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  return document_from_json(j);
}

Document document_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  const Json& type = field(j, "type");
  if (!type.is_string()) throw ParseError("field 'type' must be a string");
  const std::string t = type.get<std::string>();
  if (t == "setsystem") {
    GroundSet ground(labels_from(array_field(j, "ground"), "ground"));
    auto family = family_from(ground, array_field(j, "sets"), "sets");
    return SetSystem(std::move(ground), std::move(family));
  }
  if (t == "graph") {
    GroundSet vertices(labels_from(array_field(j, "vertices"), "vertices"));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const Json& e : array_field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair of labels");
      edges.emplace_back(vertices.require_index(label_string(e[0], "edges")),
                         vertices.require_index(label_string(e[1], "edges")));
    }
    Subset loops = 0;
    if (j.contains("loops")) loops = subset_from(vertices, array_field(j, "loops"), "loops");
    return Graph::from_edges(std::move(vertices), edges, loops);
  }
  if (t == "matrix") {
    GroundSet columns(labels_from(array_field(j, "labels"), "labels"));
    auto rows = rows_from(columns, array_field(j, "rows"));
    return BinaryMatrix{std::move(columns), std::move(rows)};
  }
  if (t == "matroid") {
    GroundSet ground(labels_from(array_field(j, "ground"), "ground"));
    auto bases = family_from(ground, array_field(j, "bases"), "bases");
    std::optional<BinaryMatrix> rep;
    if (j.contains("representation")) {
      const Json& r = j.at("representation");
      const Json& rows = r.is_object() ? array_field(r, "rows") : r;
      if (!rows.is_array()) throw ParseError("field 'representation' must be a row array");
      rep = BinaryMatrix{ground, rows_from(ground, rows)};
    }
    SetSystem system(std::move(ground), std::move(bases));
    if (rep) {
      const Matroid from_rep = binary_matroid_from_matrix(*rep);
      if (from_rep.bases() != system) throw DomainError("representation does not match the listed bases");
    }
    return Matroid(std::move(system), std::move(rep));
  }
  throw ParseError("unknown document type '" + t + "'");
}

std::string document_type(const Document& doc) {
  static const char* names[] = {"setsystem", "graph", "matrix", "matroid"};
  return names[doc.index()];
}

Json to_json(const SetSystem& m) {
  Json sets = Json::array();
  for (Subset s : m.family()) sets.push_back(labels_json(m.ground(), s));
  return Json{{"type", "setsystem"}, {"ground", m.ground().labels()}, {"sets", std::move(sets)}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({g.ground().label(u), g.ground().label(v)}));
  return Json{{"type", "graph"},
              {"vertices", g.ground().labels()},
              {"edges", std::move(edges)},
              {"loops", labels_json(g.ground(), g.loops())}};
}

Json to_json(const BinaryMatrix& r) {
  return Json{{"type", "matrix"}, {"labels", r.columns.labels()}, {"rows", rows_json(r.rows, r.columns.size())}};
}

Json to_json(const Matroid& m) {
  Json bases = Json::array();
  for (Subset b : m.bases().family()) bases.push_back(labels_json(m.ground(), b));
  Json out{{"type", "matroid"}, {"ground", m.ground().labels()}, {"bases", std::move(bases)}};
  if (m.representation()) out["representation"] = rows_json(m.representation()->rows, m.n());
  return out;
}

Json to_json(const Document& doc) {
  return std::visit([](const auto& v) { return to_json(v); }, doc);
}

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return to_decimal(v);
}

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const BigInt& c : p.coefficients()) out.push_back(to_json(c));
  if (out.empty()) out.push_back(0);
  return out;
}

Json to_json(const BiPoly& p) {
  Json out = Json::array();
  for (const auto& [key, c] : p.terms()) out.push_back(Json::array({key.first, key.second, to_json(c)}));
  return out;
}

Json to_json(const MultiQPoly& q) {
  Json out = Json::array();
  const Subset full = q.ground().full();
  for (const QEntry& e : q.entries()) {
    out.push_back(Json{{"A", labels_json(q.ground(), full & ~(e.b | e.c))},
                       {"B", labels_json(q.ground(), e.b)},
                       {"C", labels_json(q.ground(), e.c)},
                       {"d", e.exponent}});
  }
  return out;
}

Json to_json(const RecursionTrace& trace) {
  Json out{{"system", to_json(trace.system)}};
  if (!trace.element.empty()) out["element"] = trace.element;
  out["value"] = to_json(trace.value);
  if (!trace.children.empty()) {
    Json children = Json::array();
    for (const auto& b : trace.children) children.push_back(Json{{"label", b.label}, {"node", to_json(b.node)}});
    out["children"] = std::move(children);
  }
  return out;
}

std::string emit(const Json& json) { return json.dump() + "\n"; }

namespace {

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  std::vector<WordToken> run() {
    std::vector<WordToken> out;
    skip_ws();
    while (pos_ < text_.size()) {
      WordToken tok{WordToken::Kind::Pivot, {}, false, pos_};
      const char c = text_[pos_++];
      switch (c) {
        case '*': tok.kind = WordToken::Kind::Pivot; break;
        case '+': tok.kind = WordToken::Kind::LoopComplement; break;
        case '\\': tok.kind = WordToken::Kind::Delete; break;
        case '[': tok.kind = WordToken::Kind::Restrict; break;
        case '~':
          if (pos_ >= text_.size() || text_[pos_] != '*') fail("expected '*' after '~'");
          ++pos_;
          tok.kind = WordToken::Kind::DualPivot;
          break;
        default:
          --pos_;
          fail(std::string("unexpected character '") + c + "'");
      }
      if (tok.kind == WordToken::Kind::Restrict) {
        skip_ws();
        if (peek() == '{') {
          tok.labels = braces();
        } else if (peek() != ']') {
          tok.labels = list();
        }
        skip_ws();
        if (peek() != ']') fail("expected ']'");
        ++pos_;
      } else {
        skip_ws();
        tok.labels = peek() == '{' ? braces() : std::vector<std::string>{label()};
      }
      tok.whole_ground = tok.labels.size() == 1 && tok.labels[0] == "V";
      out.push_back(std::move(tok));
      skip_ws();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("operation word, offset " + std::to_string(pos_) + ": " + what);
  }

  std::string label() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected an element label or {set}");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<std::string> list() {
    std::vector<std::string> out{label()};
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      skip_ws();
      out.push_back(label());
      skip_ws();
    }
    return out;
  }

  std::vector<std::string> braces() {
    ++pos_;  // '{'
    skip_ws();
    std::vector<std::string> out;
    if (peek() != '}') out = list();
    skip_ws();
    if (peek() != '}') fail("expected '}'");
    ++pos_;
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Subset resolve(const GroundSet& ground, const WordToken& tok) {
  if (tok.whole_ground && !ground.index_of("V")) return ground.full();
  Subset s = 0;
  for (const auto& l : tok.labels) s |= singleton(ground.require_index(l));
  return s;
}

}  // namespace

std::vector<WordToken> parse_word(std::string_view text) { return WordParser(text).run(); }

SetSystem apply_word(const SetSystem& m, const std::vector<WordToken>& word) {
  SetSystem cur = m;
  for (const WordToken& tok : word) {
    const Subset x = resolve(cur.ground(), tok);
    switch (tok.kind) {
      case WordToken::Kind::Pivot: cur = pivot(cur, x); break;
      case WordToken::Kind::LoopComplement: cur = loop_complement(cur, x); break;
      case WordToken::Kind::DualPivot: cur = dual_pivot(cur, x); break;
      case WordToken::Kind::Delete: cur = delete_elements(cur, x); break;
      case WordToken::Kind::Restrict: cur = restrict_to(cur, x); break;
    }
  }
  return cur;
}

Graph apply_word(const Graph& g, const std::vector<WordToken>& word) {
  Graph cur = g;
  for (const WordToken& tok : word) {
    const Subset x = resolve(cur.ground(), tok);
    switch (tok.kind) {
      case WordToken::Kind::Pivot: cur = graph_flip(cur, FlipKind::Pivot, x); break;
      case WordToken::Kind::LoopComplement: cur = graph_flip(cur, FlipKind::LoopComplement, x); break;
      case WordToken::Kind::DualPivot: cur = graph_flip(cur, FlipKind::DualPivot, x); break;
      case WordToken::Kind::Delete: cur = delete_vertices(cur, x); break;
      case WordToken::Kind::Restrict: cur = induced(cur, x); break;
    }
  }
  return cur;
}

Subset parse_subset(const GroundSet& ground, std::string_view text) {
  if (text.find_first_not_of(" \t") == std::string_view::npos) return 0;
  // reuse the word grammar: "[...]" accepts both braces and bare lists
  std::string wrapped = "[" + std::string(text) + "]";
  if (text.find('{') == std::string_view::npos && text.find(',') == std::string_view::npos) {
    wrapped = "*" + std::string(text);
  }
  auto tokens = parse_word(wrapped);
  if (tokens.size() != 1) throw ParseError("expected a single subset, got '" + std::string(text) + "'");
  return resolve(ground, tokens[0]);
}

}  // namespace deltaflip
