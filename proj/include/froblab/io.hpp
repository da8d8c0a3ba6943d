#pragma once

#include <froblab/bimonoid.hpp>
#include <froblab/diagram.hpp>
#include <froblab/distributive.hpp>
#include <froblab/evaluate.hpp>
#include <froblab/functor.hpp>
#include <froblab/yang_baxter.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace froblab {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, missing fields, inconsistent shapes.
class InputError : public ParseError {
 public:
  using ParseError::ParseError;
};

namespace detail {

/// Raised while reading a parsed document; `pointer` locates the value.
struct JsonError {
  std::string pointer;
  std::string message;
};

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

/// Finds the byte offset of the value at a JSON pointer in well-formed text.
class JsonLocator {
 public:
  explicit JsonLocator(std::string_view text) : t_(text) {}

  std::optional<std::size_t> find(std::string const& pointer) {
    std::vector<std::string> path;
    for (std::size_t i = 0; i < pointer.size();) {
      std::size_t j = pointer.find('/', i + 1);
      if (j == std::string::npos) j = pointer.size();
      std::string seg = pointer.substr(i + 1, j - i - 1);
      for (std::size_t k; (k = seg.find("~1")) != std::string::npos;) seg.replace(k, 2, "/");
      for (std::size_t k; (k = seg.find("~0")) != std::string::npos;) seg.replace(k, 2, "~");
      path.push_back(std::move(seg));
      i = j;
    }
    pos_ = 0;
    ws();
    for (auto const& seg : path) {
      if (pos_ >= t_.size()) return std::nullopt;
      if (t_[pos_] == '{') {
        if (!enter_member(seg)) return std::nullopt;
      } else if (t_[pos_] == '[') {
        if (!enter_element(seg)) return std::nullopt;
      } else {
        return std::nullopt;
      }
    }
    return pos_;
  }

 private:
  void ws() {
    while (pos_ < t_.size() && std::string_view(" \t\r\n").find(t_[pos_]) != std::string_view::npos)
      ++pos_;
  }

  std::string string() {
    std::string s;
    ++pos_;
    while (pos_ < t_.size() && t_[pos_] != '"') {
      if (t_[pos_] == '\\') s += t_[pos_++];
      s += t_[pos_++];
    }
    ++pos_;
    return s;
  }

  void skip() {
    if (pos_ >= t_.size()) return;
    if (t_[pos_] == '"') {
      string();
      return;
    }
    if (t_[pos_] == '{' || t_[pos_] == '[') {
      int depth = 0;
      do {
        char const c = t_[pos_];
        if (c == '"') {
          string();
          continue;
        }
        if (c == '{' || c == '[') ++depth;
        if (c == '}' || c == ']') --depth;
        ++pos_;
      } while (depth > 0 && pos_ < t_.size());
      return;
    }
    while (pos_ < t_.size() && std::string_view(",]} \t\r\n").find(t_[pos_]) == std::string_view::npos)
      ++pos_;
  }

  bool enter_member(std::string const& key) {
    ++pos_;
    ws();
    while (pos_ < t_.size() && t_[pos_] != '}') {
      std::string const k = string();
      ws();
      ++pos_;  // ':'
      ws();
      if (k == key) return true;
      skip();
      ws();
      if (pos_ < t_.size() && t_[pos_] == ',') ++pos_;
      ws();
    }
    return false;
  }

  bool enter_element(std::string const& index) {
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(index.data(), index.data() + index.size(), n);
    if (ec != std::errc() || p != index.data() + index.size()) return false;
    ++pos_;
    ws();
    for (std::size_t i = 0; pos_ < t_.size() && t_[pos_] != ']'; ++i) {
      if (i == n) return true;
      skip();
      ws();
      if (pos_ < t_.size() && t_[pos_] == ',') ++pos_;
      ws();
    }
    return false;
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// A JSON document together with its text, for error messages with line
/// context.
struct JsonDocument {
  std::string name;
  std::string text;
  Json root;

  static JsonDocument parse(std::string text, std::string name = "<input>") {
    JsonDocument doc{std::move(name), std::move(text), {}};
    try {
      doc.root = Json::parse(doc.text);
    } catch (Json::parse_error const& e) {
      auto const [line, col] = detail::line_column(doc.text, e.byte == 0 ? 0 : e.byte - 1);
      std::string what = e.what();
      if (auto k = what.find("syntax error"); k != std::string::npos) what = what.substr(k);
      throw InputError(doc.name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                       what);
    }
    return doc;
  }

  static JsonDocument load(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
  }

  /// Runs `read` on the root and turns reader errors into InputError with
  /// the line and column of the offending value.
  template <class F>
  auto read(F&& read) const -> decltype(read(root)) {
    try {
      return read(root);
    } catch (detail::JsonError const& e) {
      detail::JsonLocator locator(text);
      std::string where = name;
      if (auto offset = locator.find(e.pointer)) {
        auto const [line, col] = detail::line_column(text, *offset);
        where += ":" + std::to_string(line) + ":" + std::to_string(col);
      }
      std::string const at = e.pointer.empty() ? "" : " (at " + e.pointer + ")";
      throw InputError(where + ": " + e.message + at);
    }
  }
};

namespace detail {

/// A value inside a document together with its JSON pointer.
class JNode {
 public:
  JNode(Json const& j, std::string pointer = "") : j_(&j), pointer_(std::move(pointer)) {}

  Json const& json() const noexcept { return *j_; }
  std::string const& pointer() const noexcept { return pointer_; }

  [[noreturn]] void fail(std::string const& message) const { throw JsonError{pointer_, message}; }

  bool has(std::string const& key) const { return j_->is_object() && j_->contains(key); }

  JNode operator[](std::string const& key) const {
    if (!j_->is_object()) fail("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) fail("missing field '" + key + "'");
    return JNode(*it, pointer_ + "/" + escape(key));
  }

  JNode at(std::size_t i) const { return JNode((*j_)[i], pointer_ + "/" + std::to_string(i)); }

  std::size_t size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }

  std::vector<JNode> items() const {
    std::vector<JNode> r;
    for (std::size_t i = 0; i < size(); ++i) r.push_back(at(i));
    return r;
  }

  std::vector<std::pair<std::string, JNode>> members() const {
    if (!j_->is_object()) fail("expected an object");
    std::vector<std::pair<std::string, JNode>> r;
    for (auto it = j_->begin(); it != j_->end(); ++it)
      r.emplace_back(it.key(), JNode(it.value(), pointer_ + "/" + escape(it.key())));
    return r;
  }

  std::string str() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

  bool boolean() const {
    if (!j_->is_boolean()) fail("expected true or false");
    return j_->get<bool>();
  }

  std::size_t count() const {
    if (!j_->is_number_unsigned()) fail("expected a nonnegative integer");
    return j_->get<std::size_t>();
  }

  /// Rational from a string literal ("p/q", "0.25") or a JSON integer.
  Rational rational() const {
    if (j_->is_number_integer()) return Rational(j_->get<long>());
    if (j_->is_number_float()) fail("write non-integer scalars as strings, e.g. \"1/3\" or \"0.25\"");
    if (!j_->is_string()) fail("expected a rational literal");
    try {
      return parse_rational(j_->get<std::string>());
    } catch (ParseError const& e) {
      fail(e.what());
    }
  }

  Word word() const {
    Word w;
    for (auto const& x : items()) w.push_back(x.str());
    return w;
  }

 private:
  static std::string escape(std::string s) {
    for (std::size_t k = 0; (k = s.find('~', k)) != std::string::npos; k += 2) s.replace(k, 1, "~0");
    for (std::size_t k = 0; (k = s.find('/', k)) != std::string::npos; k += 2) s.replace(k, 1, "~1");
    return s;
  }

  Json const* j_;
  std::string pointer_;
};

}  // namespace detail

using detail::JNode;

// ---------------------------------------------------------------- objects

/// Parses the printed form of an object: "I", "A[2]", "A[2]*C[2]".
inline MatObject parse_object(std::string_view text) {
  std::string const s(text);
  if (s == "I" || s.empty()) return {};
  std::vector<Factor> factors;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t const star = std::min(s.find('*', i), s.size());
    std::string const part = s.substr(i, star - i);
    auto const open = part.find('[');
    if (open == std::string::npos || open == 0 || part.back() != ']')
      throw ParseError("malformed object factor '" + part + "' (expected LABEL[DIM])");
    std::size_t dim = 0;
    std::string const digits = part.substr(open + 1, part.size() - open - 2);
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), dim);
    if (ec != std::errc() || p != digits.data() + digits.size() || digits.empty())
      throw ParseError("malformed dimension in '" + part + "'");
    factors.push_back({part.substr(0, open), dim});
    i = star + 1;
  }
  return MatObject(std::move(factors));
}

inline MatObject read_object(JNode const& n) {
  try {
    return parse_object(n.str());
  } catch (ParseError const& e) {
    n.fail(e.what());
  }
}

// ---------------------------------------------------------------- diagrams

inline TensorScheme read_scheme(JNode const& n) {
  TensorScheme s;
  s.vertices = n["vertices"].word();
  for (auto const& e : n["edges"].items())
    s.edges.push_back({e["name"].str(), e["source"].word(), e["target"].word()});
  auto const v = validate_scheme(s);
  if (!v.ok()) {
    std::string msg = "invalid tensor scheme:";
    for (auto const& l : v.undeclared_labels) msg += " undeclared label '" + l + "';";
    for (auto const& g : v.duplicate_symbols) msg += " duplicate generator '" + g + "';";
    msg.pop_back();
    n.fail(msg);
  }
  return s;
}

/// Generator nodes are numbered in reading order: slice by slice, top to
/// bottom.
inline LayeredDiagram read_diagram(JNode const& n, TensorScheme const& scheme) {
  std::vector<Slice> slices;
  NodeId next = 0;
  for (auto const& sn : n["slices"].items()) {
    Slice slice;
    for (auto const& an : sn.items()) {
      if (an.has("id")) {
        slice.push_back(IdentityWire{an["id"].str()});
      } else if (an.has("gen")) {
        auto const symbol = an["gen"].str();
        Generator const* g = scheme.find(symbol);
        if (!g) an["gen"].fail("unknown generator '" + symbol + "'");
        slice.push_back(GeneratorNode{*g, next++});
      } else {
        an.fail("atom must be {\"id\": label} or {\"gen\": symbol}");
      }
    }
    slices.push_back(std::move(slice));
  }
  try {
    return LayeredDiagram(n["input"].word(), n["output"].word(), std::move(slices));
  } catch (DiagramError const& e) {
    n.fail(e.what());
  }
}

struct DiagramFile {
  TensorScheme scheme;
  LayeredDiagram diagram;
};

inline DiagramFile read_diagram_file(JNode const& root) {
  auto scheme = read_scheme(root["scheme"]);
  auto diagram = read_diagram(root["diagram"], scheme);
  return {std::move(scheme), std::move(diagram)};
}

inline Json write_diagram_file(TensorScheme const& s, LayeredDiagram const& d) {
  Json edges = Json::array();
  for (auto const& g : s.edges) edges.push_back({{"name", g.name}, {"source", g.source}, {"target", g.target}});
  Json slices = Json::array();
  for (auto const& slice : d.slices()) {
    Json atoms = Json::array();
    for (auto const& a : slice) {
      if (auto const* w = std::get_if<IdentityWire>(&a))
        atoms.push_back({{"id", w->label}});
      else
        atoms.push_back({{"gen", std::get<GeneratorNode>(a).generator.name}});
    }
    slices.push_back(std::move(atoms));
  }
  return {{"scheme", {{"vertices", s.vertices}, {"edges", std::move(edges)}}},
          {"diagram", {{"input", d.input()}, {"output", d.output()}, {"slices", std::move(slices)}}}};
}

// ---------------------------------------------------------------- matrices

inline Matrix read_matrix(JNode const& n) {
  std::size_t const rows = n.size();
  if (rows == 0) n.fail("matrix must have at least one row");
  std::size_t const cols = n.at(0).size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    JNode const row = n.at(i);
    if (row.size() != cols)
      row.fail("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, row.at(j).rational());
  }
  return m;
}

inline Morphism read_morphism(JNode const& n, MatObject const& dom, MatObject const& cod) {
  auto m = read_matrix(n);
  if (m.rows() != cod.dimension() || m.cols() != dom.dimension())
    n.fail("expected a " + std::to_string(cod.dimension()) + "x" + std::to_string(dom.dimension()) +
           " matrix for " + dom.to_string() + " -> " + cod.to_string() + ", got " +
           std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  return {dom, cod, std::move(m)};
}

template <Scalar S>
Json write_matrix(BasicMatrix<S> const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_traits<S>::format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Scalar S>
Json write_morphism(BasicMorphism<S> const& f) {
  return {{"dom", f.dom().to_string()}, {"cod", f.cod().to_string()}, {"matrix", write_matrix(f.matrix())}};
}

// ---------------------------------------------------------------- labellings

/// {"objects": {"A": 2}, "nodes": {"f": [["1", "0"], ...]}}. Node shapes are
/// checked against the scheme.
inline Labelling read_labelling(JNode const& n, TensorScheme const& scheme) {
  Labelling v;
  for (auto const& [label, dn] : n["objects"].members()) {
    std::size_t const d = dn.count();
    if (d == 0) dn.fail("object dimension must be positive");
    v.objects.emplace(label, MatObject::single(label, d));
  }
  for (auto const& label : scheme.vertices)
    if (!v.objects.contains(label)) n["objects"].fail("no dimension for object label '" + label + "'");
  for (auto const& [symbol, mn] : n["nodes"].members()) {
    Generator const* g = scheme.find(symbol);
    if (!g) mn.fail("labelling names unknown generator '" + symbol + "'");
    v.nodes.emplace(symbol, read_morphism(mn, v.object(g->source), v.object(g->target)));
  }
  for (auto const& g : scheme.edges)
    if (!v.nodes.contains(g.name)) n["nodes"].fail("no matrix for generator '" + g.name + "'");
  return v;
}

template <Scalar S>
Json write_labelling(BasicLabelling<S> const& v) {
  Json objects = Json::object();
  for (auto const& [label, obj] : v.objects) objects[label] = obj.to_string();
  Json nodes = Json::object();
  for (auto const& [symbol, f] : v.nodes) nodes[symbol] = write_morphism(f);
  return {{"objects", std::move(objects)}, {"nodes", std::move(nodes)}};
}

// ---------------------------------------------------------------- algebras

/// An algebra by name ("complex", "dual-numbers", "matrix"), as
/// {"builtin": ..., parameters} or inline
/// {"name", "dim", "mu": c[i][j][k], "form": [..], "label"}.
inline FrobeniusAlgebraData read_algebra(JNode const& n) {
  try {
    std::string builtin;
    if (n.json().is_string())
      builtin = n.str();
    else if (n.has("builtin"))
      builtin = n["builtin"].str();
    if (!builtin.empty()) {
      bool const params = n.json().is_object();
      if (builtin == "complex") {
        Rational const a = params && n.has("a") ? n["a"].rational() : Rational(2);
        Rational const b = params && n.has("b") ? n["b"].rational() : Rational(0);
        return complex_over_rationals(a, b);
      }
      if (builtin == "dual-numbers") return dual_numbers();
      if (builtin == "matrix") {
        std::size_t const k = params && n.has("n") ? n["n"].count() : 2;
        return matrix_algebra_frobenius(k);
      }
      n.fail("unknown builtin algebra '" + builtin + "' (complex, dual-numbers, matrix)");
    }
    std::size_t const dim = n["dim"].count();
    if (dim == 0) n["dim"].fail("dimension must be positive");
    StructureConstants c(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim)));
    JNode const mu = n["mu"];
    if (mu.size() != dim) mu.fail("expected " + std::to_string(dim) + " blocks");
    for (std::size_t i = 0; i < dim; ++i) {
      JNode const bi = mu.at(i);
      if (bi.size() != dim) bi.fail("expected " + std::to_string(dim) + " rows");
      for (std::size_t j = 0; j < dim; ++j) {
        JNode const bij = bi.at(j);
        if (bij.size() != dim) bij.fail("expected " + std::to_string(dim) + " coefficients");
        for (std::size_t k = 0; k < dim; ++k) c[i][j][k] = bij.at(k).rational();
      }
    }
    std::vector<Rational> form;
    JNode const fn = n["form"];
    if (fn.size() != dim) fn.fail("expected " + std::to_string(dim) + " coefficients");
    for (auto const& x : fn.items()) form.push_back(x.rational());
    std::string const name = n.has("name") ? n["name"].str() : "algebra";
    std::string const label = n.has("label") ? n["label"].str() : "C";
    return frobenius_from_form(name, c, form, label);
  } catch (Error const& e) {
    n.fail(e.what());
  }
}

// ---------------------------------------------------------------- functors

/// {"kind": "identity" | "algebra" | "strong-permutation" | "strong-twisted",
///  "algebra": ...}; a bare string names the kind, or an algebra shortcut.
struct FunctorSpec {
  FunctorKind kind = FunctorKind::Identity;
  std::optional<FrobeniusAlgebraData> algebra;
};

inline FunctorSpec read_functor_spec(JNode const& n) {
  std::string kind;
  if (n.json().is_string())
    kind = n.str();
  else
    kind = n["kind"].str();
  if (kind == "identity") return {FunctorKind::Identity, std::nullopt};
  if (kind == "strong-permutation") return {FunctorKind::StrongPermutation, std::nullopt};
  if (kind == "strong-twisted") return {FunctorKind::StrongTwisted, std::nullopt};
  if (kind == "algebra") {
    if (!n.json().is_object()) n.fail("algebra functor needs an \"algebra\" field");
    return {FunctorKind::AlgebraInduced, read_algebra(n["algebra"])};
  }
  if (kind == "complex" || kind == "dual-numbers" || kind == "matrix")
    return {FunctorKind::AlgebraInduced, read_algebra(n)};
  n.fail("unknown functor kind '" + kind +
         "' (identity, algebra, strong-permutation, strong-twisted)");
}

template <Scalar S>
BasicFrobeniusFunctor<S> make_functor(FunctorSpec const& spec, double tolerance = 1e-9) {
  switch (spec.kind) {
    case FunctorKind::Identity: return identity_functor<S>();
    case FunctorKind::StrongPermutation: return strong_permutation_functor<S>();
    case FunctorKind::StrongTwisted: return strong_twisted_functor<S>();
    case FunctorKind::AlgebraInduced:
      return algebra_induced_functor(convert_algebra<S>(*spec.algebra), tolerance);
    default: break;
  }
  throw Error("functor kind '" + std::string(to_string(spec.kind)) + "' cannot be built from a spec");
}

// ---------------------------------------------------------------- structures

/// A morphism given as a matrix or as {"builtin": "swap" | "identity" |
/// "q-r-matrix", "q": ...}.
inline Morphism read_operator(JNode const& n, MatObject const& dom, MatObject const& cod) {
  if (n.json().is_object()) {
    std::string const b = n["builtin"].str();
    if (b == "identity") {
      if (dom.dimension() != cod.dimension()) n.fail("identity needs equal dimensions");
      return identity<Rational>(dom).retyped(dom, cod);
    }
    if (b == "swap") {
      if (dom.size() != 2 || cod != MatObject({dom.factors()[1], dom.factors()[0]}))
        n.fail("swap needs X Y -> Y X");
      return braiding<Rational>(MatObject({dom.factors()[0]}), MatObject({dom.factors()[1]}));
    }
    if (b == "q-r-matrix") {
      if (dom.size() != 2 || dom != cod) n.fail("q-r-matrix needs an endomorphism of A A");
      try {
        return q_r_matrix(MatObject({dom.factors()[0]}), n["q"].rational());
      } catch (Error const& e) {
        n.fail(e.what());
      }
    }
    n.fail("unknown builtin operator '" + b + "' (identity, swap, q-r-matrix)");
  }
  return read_morphism(n, dom, cod);
}

/// {"carrier": "A[2]", "mu": M, "eta": M} or {"group": n, "label": "A"}.
inline MonoidData read_monoid(JNode const& n) {
  if (n.has("group")) {
    std::size_t const k = n["group"].count();
    if (k == 0) n["group"].fail("group order must be positive");
    return monoid_from_constants(cyclic_group_constants(k), n.has("label") ? n["label"].str() : "G");
  }
  MatObject const A = read_object(n["carrier"]);
  return {A, read_operator(n["mu"], A * A, A), read_operator(n["eta"], MatObject(), A)};
}

inline BimonoidData read_bimonoid(JNode const& n) {
  if (n.has("group")) {
    std::size_t const k = n["group"].count();
    if (k == 0) n["group"].fail("group order must be positive");
    return group_bimonoid(k, n.has("label") ? n["label"].str() : "G");
  }
  MatObject const A = read_object(n["carrier"]);
  return {n.has("name") ? n["name"].str() : "bimonoid",
          A,
          read_operator(n["mu"], A * A, A),
          read_operator(n["eta"], MatObject(), A),
          read_operator(n["delta"], A, A * A),
          read_operator(n["epsilon"], A, MatObject())};
}

struct AlgebraLaws {
  FrobeniusAlgebraData algebra;
  bool require_separable = false;
};

struct FunctorLaws {
  FunctorSpec functor;
  std::vector<MatObject> samples;
  bool require_separable = true;
};

struct YBLaws {
  LaxYBData data;
  bool invertible = true;
  std::optional<FunctorSpec> conjugate_by;
};

struct WeakYBLaws {
  std::optional<WeakYBData> data;  // given directly
  std::optional<LaxYBData> source;  // conjugated by `conjugate_by`
  std::optional<FunctorSpec> conjugate_by;
};

struct DistLawLaws {
  DistLawData data;
  bool weak = false;
  std::optional<FunctorSpec> conjugate_by;
};

struct BimonoidLaws {
  BimonoidData data;
  bool weak = false;
  std::optional<FunctorSpec> conjugate_by;
};

using StructureSpec =
    std::variant<AlgebraLaws, FunctorLaws, YBLaws, WeakYBLaws, DistLawLaws, BimonoidLaws>;

inline std::optional<FunctorSpec> read_conjugate_by(JNode const& n) {
  if (!n.has("conjugate_by")) return std::nullopt;
  return read_functor_spec(n["conjugate_by"]);
}

/// Structure files are tagged by "kind": algebra, functor, yb, weak-yb,
/// distributive-law, bimonoid.
inline StructureSpec read_structure(JNode const& n) {
  std::string const kind = n["kind"].str();
  auto flag = [&](char const* key, bool fallback) { return n.has(key) ? n[key].boolean() : fallback; };
  if (kind == "algebra") return AlgebraLaws{read_algebra(n["algebra"]), flag("require_separable", false)};
  if (kind == "functor") {
    FunctorLaws r{read_functor_spec(n["functor"]), {}, flag("require_separable", true)};
    for (auto const& s : n["samples"].items()) r.samples.push_back(read_object(s));
    if (r.samples.empty()) n["samples"].fail("at least one sample object is required");
    return r;
  }
  if (kind == "yb") {
    MatObject const A = read_object(n["carrier"]);
    return YBLaws{LaxYBData::on_object(A, read_operator(n["y"], A * A, A * A)), flag("invertible", true),
                  read_conjugate_by(n)};
  }
  if (kind == "weak-yb") {
    MatObject const D = read_object(n["carrier"]);
    WeakYBLaws r;
    r.conjugate_by = read_conjugate_by(n);
    if (r.conjugate_by) {
      r.source = LaxYBData::on_object(D, read_operator(n["y"], D * D, D * D));
    } else {
      r.data = WeakYBData{D, read_operator(n["nabla"], D * D, D * D), read_operator(n["y"], D * D, D * D),
                          read_operator(n["y_prime"], D * D, D * D)};
    }
    return r;
  }
  if (kind == "distributive-law") {
    auto a = read_monoid(n["a"]);
    auto b = read_monoid(n["b"]);
    auto lambda = read_operator(n["lambda"], a.carrier * b.carrier, b.carrier * a.carrier);
    return DistLawLaws{{std::move(a), std::move(b), std::move(lambda)}, flag("weak", false),
                       read_conjugate_by(n)};
  }
  if (kind == "bimonoid") return BimonoidLaws{read_bimonoid(n), flag("weak", false), read_conjugate_by(n)};
  n["kind"].fail("unknown structure kind '" + kind +
                 "' (algebra, functor, yb, weak-yb, distributive-law, bimonoid)");
}

// ---------------------------------------------------------------- reports

template <Scalar S>
Json write_law_report(BasicLawReport<S> const& r) {
  Json entries = Json::array();
  for (auto const& e : r.entries()) {
    Json j = {{"law", e.law}, {"passed", e.passed}, {"checked", e.checked}};
    if (e.witness) {
      Json w = {{"context", e.witness->context}, {"lhs", write_morphism(e.witness->lhs)}};
      if (e.witness->rhs) w["rhs"] = write_morphism(*e.witness->rhs);
      j["witness"] = std::move(w);
    }
    entries.push_back(std::move(j));
  }
  return {{"passed", r.all_passed()}, {"entries", std::move(entries)}};
}

inline Json write_topology(TopologyReport const& t) {
  return {{"vertices", t.vertices},
          {"edges", t.edges},
          {"components", t.components},
          {"betti1", t.betti1},
          {"predicted_class", to_string(t.predicted_class)}};
}

}  // namespace froblab
