#pragma once

#include <froblab/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace froblab {

class DiagramError : public Error {
 public:
  using Error::Error;
};

using Word = std::vector<std::string>;

inline std::string word_string(Word const& w) {
  if (w.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i];
  return s;
}

inline Word concat(Word a, Word const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// A generator symbol with source and target words of object labels.
struct Generator {
  std::string name;
  Word source;
  Word target;

  friend bool operator==(Generator const&, Generator const&) = default;
};

/// Vertices are object labels, edges are generators between words.
struct TensorScheme {
  std::vector<std::string> vertices;
  std::vector<Generator> edges;

  Generator const* find(std::string const& symbol) const {
    for (auto const& g : edges)
      if (g.name == symbol) return &g;
    return nullptr;
  }
};

struct SchemeValidation {
  std::vector<std::string> undeclared_labels;
  std::vector<std::string> duplicate_symbols;

  bool ok() const { return undeclared_labels.empty() && duplicate_symbols.empty(); }
};

inline SchemeValidation validate_scheme(TensorScheme const& scheme) {
  SchemeValidation report;
  std::set<std::string> const declared(scheme.vertices.begin(), scheme.vertices.end());
  std::set<std::string> undeclared;
  std::set<std::string> seen;
  std::set<std::string> duplicates;
  for (auto const& g : scheme.edges) {
    if (!seen.insert(g.name).second) duplicates.insert(g.name);
    for (Word const* w : {&g.source, &g.target})
      for (auto const& label : *w)
        if (!declared.contains(label)) undeclared.insert(label);
  }
  report.undeclared_labels.assign(undeclared.begin(), undeclared.end());
  report.duplicate_symbols.assign(duplicates.begin(), duplicates.end());
  return report;
}

struct IdentityWire {
  std::string label;

  friend bool operator==(IdentityWire const&, IdentityWire const&) = default;
};

using NodeId = std::size_t;

struct GeneratorNode {
  Generator generator;
  NodeId id = 0;

  friend bool operator==(GeneratorNode const&, GeneratorNode const&) = default;
};

using Atom = std::variant<IdentityWire, GeneratorNode>;
using Slice = std::vector<Atom>;

inline bool is_wire(Atom const& a) { return std::holds_alternative<IdentityWire>(a); }

inline Word atom_input(Atom const& a) {
  if (auto const* w = std::get_if<IdentityWire>(&a)) return {w->label};
  return std::get<GeneratorNode>(a).generator.source;
}

inline Word atom_output(Atom const& a) {
  if (auto const* w = std::get_if<IdentityWire>(&a)) return {w->label};
  return std::get<GeneratorNode>(a).generator.target;
}

inline Word slice_input(Slice const& s) {
  Word w;
  for (auto const& a : s) w = concat(std::move(w), atom_input(a));
  return w;
}

inline Word slice_output(Slice const& s) {
  Word w;
  for (auto const& a : s) w = concat(std::move(w), atom_output(a));
  return w;
}

inline bool is_identity_slice(Slice const& s) {
  return std::all_of(s.begin(), s.end(), [](Atom const& a) { return is_wire(a); });
}

/// A progressive plane string diagram in layered form: slices are read left
/// to right, atoms within a slice top to bottom.
class LayeredDiagram {
 public:
  LayeredDiagram() = default;

  LayeredDiagram(Word input, Word output, std::vector<Slice> slices)
      : input_(std::move(input)), output_(std::move(output)), slices_(std::move(slices)) {
    Word current = input_;
    std::set<NodeId> ids;
    for (std::size_t k = 0; k < slices_.size(); ++k) {
      Word const in = slice_input(slices_[k]);
      if (in != current) {
        throw DiagramError("slice " + std::to_string(k) + " expects [" + word_string(in) +
                           "] but receives [" + word_string(current) + "]");
      }
      for (auto const& a : slices_[k]) {
        if (auto const* n = std::get_if<GeneratorNode>(&a)) {
          if (!ids.insert(n->id).second) {
            throw DiagramError("duplicate node id " + std::to_string(n->id));
          }
        }
      }
      current = slice_output(slices_[k]);
    }
    if (current != output_) {
      throw DiagramError("diagram output [" + word_string(output_) + "] does not match final [" +
                         word_string(current) + "]");
    }
  }

  Word const& input() const noexcept { return input_; }
  Word const& output() const noexcept { return output_; }
  std::vector<Slice> const& slices() const noexcept { return slices_; }

  std::vector<GeneratorNode> nodes() const {
    std::vector<GeneratorNode> r;
    for (auto const& s : slices_)
      for (auto const& a : s)
        if (auto const* n = std::get_if<GeneratorNode>(&a)) r.push_back(*n);
    return r;
  }

  std::size_t node_count() const { return nodes().size(); }

  /// Smallest id not used by any node.
  NodeId next_id() const {
    NodeId next = 0;
    for (auto const& n : nodes()) next = std::max(next, n.id + 1);
    return next;
  }

  friend bool operator==(LayeredDiagram const&, LayeredDiagram const&) = default;

 private:
  Word input_;
  Word output_;
  std::vector<Slice> slices_;
};

inline LayeredDiagram identity_diagram(Word const& w) {
  Slice s;
  for (auto const& label : w) s.push_back(IdentityWire{label});
  return LayeredDiagram(w, w, {s});
}

inline LayeredDiagram generator_diagram(Generator const& g) {
  return LayeredDiagram(g.source, g.target, {Slice{GeneratorNode{g, 0}}});
}

inline LayeredDiagram generator_diagram(TensorScheme const& scheme, std::string const& symbol) {
  Generator const* g = scheme.find(symbol);
  if (!g) throw DiagramError("unknown generator '" + symbol + "'");
  return generator_diagram(*g);
}

namespace detail {

inline std::vector<Slice> shifted_ids(std::vector<Slice> slices, NodeId offset) {
  for (auto& s : slices)
    for (auto& a : s)
      if (auto* n = std::get_if<GeneratorNode>(&a)) n->id += offset;
  return slices;
}

}  // namespace detail

/// `first` followed by `second`. Node ids of `first` are kept; those of
/// `second` are shifted past them.
inline LayeredDiagram compose(LayeredDiagram const& first, LayeredDiagram const& second) {
  if (first.output() != second.input()) {
    throw DiagramError("cannot compose: output [" + word_string(first.output()) +
                       "] vs input [" + word_string(second.input()) + "]");
  }
  std::vector<Slice> slices = first.slices();
  auto tail = detail::shifted_ids(second.slices(), first.next_id());
  slices.insert(slices.end(), tail.begin(), tail.end());
  return LayeredDiagram(first.input(), second.output(), std::move(slices));
}

/// Stacks `top` above `bottom`; the shorter diagram is padded on the right
/// with identity slices.
inline LayeredDiagram tensor(LayeredDiagram const& top, LayeredDiagram const& bottom) {
  auto const bottom_slices = detail::shifted_ids(bottom.slices(), top.next_id());
  std::size_t const n = std::max(top.slices().size(), bottom_slices.size());
  auto padding = [](Word const& w) {
    Slice s;
    for (auto const& label : w) s.push_back(IdentityWire{label});
    return s;
  };
  std::vector<Slice> slices;
  for (std::size_t k = 0; k < n; ++k) {
    Slice s = k < top.slices().size() ? top.slices()[k] : padding(top.output());
    Slice const b = k < bottom_slices.size() ? bottom_slices[k] : padding(bottom.output());
    s.insert(s.end(), b.begin(), b.end());
    slices.push_back(std::move(s));
  }
  return LayeredDiagram(concat(top.input(), bottom.input()),
                        concat(top.output(), bottom.output()), std::move(slices));
}

inline LayeredDiagram strip_identity_slices(LayeredDiagram const& d) {
  std::vector<Slice> slices;
  for (auto const& s : d.slices())
    if (!is_identity_slice(s)) slices.push_back(s);
  return LayeredDiagram(d.input(), d.output(), std::move(slices));
}

/// Exchanges the order of slices k and k+1 when each holds exactly one
/// generator node and the two nodes share no wire. Returns nullopt when the
/// exchange is not an elementary planar deformation.
inline std::optional<LayeredDiagram> interchange(LayeredDiagram const& d, std::size_t k) {
  auto const& slices = d.slices();
  if (k + 1 >= slices.size()) return std::nullopt;
  auto locate = [](Slice const& s) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> found;  // (atom index, strand offset)
    std::size_t offset = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!is_wire(s[i])) {
        if (found) return std::nullopt;
        found = {i, offset};
      }
      offset += atom_input(s[i]).size();
    }
    return found;
  };
  auto const first = locate(slices[k]);
  auto const second = locate(slices[k + 1]);
  if (!first || !second) return std::nullopt;
  auto const& x = std::get<GeneratorNode>(slices[k][first->first]);
  auto const& y = std::get<GeneratorNode>(slices[k + 1][second->first]);
  std::size_t const x_in = x.generator.source.size();
  std::size_t const x_out = x.generator.target.size();
  std::size_t const y_in = y.generator.source.size();
  std::size_t const y_out = y.generator.target.size();
  std::size_t const x_at = first->second;   // strand offset of x at interface k
  std::size_t const y_at = second->second;  // strand offset of y at interface k+1
  // x's outputs occupy [x_at, x_at + x_out) at interface k+1.
  bool const y_above = y_at + y_in <= x_at;
  bool const y_below = y_at >= x_at + x_out;
  if (!y_above && !y_below) return std::nullopt;

  Word const before = slice_input(slices[k]);  // interface k
  // Position of y at interface k.
  std::size_t const y_at_k = y_above ? y_at : y_at - x_out + x_in;
  auto build = [](Word const& strands, std::size_t at, GeneratorNode const& node) {
    Slice s;
    for (std::size_t i = 0; i < at; ++i) s.push_back(IdentityWire{strands[i]});
    s.push_back(node);
    for (std::size_t i = at + node.generator.source.size(); i < strands.size(); ++i)
      s.push_back(IdentityWire{strands[i]});
    return s;
  };
  Slice const y_first = build(before, y_at_k, y);
  Word const middle = slice_output(y_first);
  std::size_t const x_at_mid = y_above ? x_at - y_in + y_out : x_at;
  Slice const x_second = build(middle, x_at_mid, x);

  std::vector<Slice> out = slices;
  out[k] = y_first;
  out[k + 1] = x_second;
  return LayeredDiagram(d.input(), d.output(), std::move(out));
}

enum class InvarianceClass { FrobeniusInvariant, SeparableOnly, NotGuaranteed };

inline char const* to_string(InvarianceClass c) {
  switch (c) {
    case InvarianceClass::FrobeniusInvariant: return "FrobeniusInvariant";
    case InvarianceClass::SeparableOnly: return "SeparableOnly";
    case InvarianceClass::NotGuaranteed: return "NotGuaranteed";
  }
  return "?";
}

struct TopologyReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t betti1 = 0;
  InvarianceClass predicted_class = InvarianceClass::NotGuaranteed;
};

/// Underlying undirected graph: generator nodes plus one boundary port per
/// input and output wire end; each wire is one edge between its endpoints.
inline TopologyReport topology(LayeredDiagram const& d) {
  std::size_t const n_in = d.input().size();
  std::size_t const n_nodes = d.node_count();
  std::size_t const n_out = d.output().size();
  std::size_t const V = n_in + n_nodes + n_out;

  std::vector<std::size_t> parent(V);
  for (std::size_t i = 0; i < V; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t edges = 0;
  auto join = [&](std::size_t a, std::size_t b) {
    ++edges;
    parent[find(a)] = find(b);
  };

  // Each live strand remembers the vertex it leaves from.
  std::vector<std::size_t> strands(n_in);
  for (std::size_t i = 0; i < n_in; ++i) strands[i] = i;
  std::size_t next_node = n_in;
  for (auto const& slice : d.slices()) {
    std::vector<std::size_t> next;
    std::size_t pos = 0;
    for (auto const& a : slice) {
      if (is_wire(a)) {
        next.push_back(strands[pos++]);
        continue;
      }
      auto const& g = std::get<GeneratorNode>(a).generator;
      std::size_t const v = next_node++;
      for (std::size_t i = 0; i < g.source.size(); ++i) join(strands[pos++], v);
      for (std::size_t i = 0; i < g.target.size(); ++i) next.push_back(v);
    }
    strands = std::move(next);
  }
  for (std::size_t i = 0; i < strands.size(); ++i) join(strands[i], n_in + n_nodes + i);

  std::size_t components = 0;
  for (std::size_t i = 0; i < V; ++i)
    if (find(i) == i) ++components;

  TopologyReport r;
  r.vertices = V;
  r.edges = edges;
  r.components = components;
  r.betti1 = edges + components - V;
  if (components == 1)
    r.predicted_class = r.betti1 == 0 ? InvarianceClass::FrobeniusInvariant
                                      : InvarianceClass::SeparableOnly;
  else
    r.predicted_class = InvarianceClass::NotGuaranteed;
  return r;
}

}  // namespace froblab
