#pragma once

#include <froblab/diagram.hpp>
#include <froblab/morphism.hpp>

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace froblab {

class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Assigns an object to every wire label and a morphism to every generator
/// symbol. Wire images are words so that conjugated labellings (F A is in
/// general a word of several factors) are labellings too.
template <Scalar S>
struct BasicLabelling {
  std::map<std::string, MatObject> objects;
  std::map<std::string, BasicMorphism<S>> nodes;

  MatObject const& object(std::string const& label) const {
    auto it = objects.find(label);
    if (it == objects.end()) throw EvaluationError("no object assigned to label '" + label + "'");
    return it->second;
  }

  MatObject object(Word const& w) const {
    MatObject r;
    for (auto const& label : w) r = r * object(label);
    return r;
  }

  std::vector<MatObject> objects_of(Word const& w) const {
    std::vector<MatObject> r;
    for (auto const& label : w) r.push_back(object(label));
    return r;
  }

  BasicMorphism<S> const& node(Generator const& g) const {
    auto it = nodes.find(g.name);
    if (it == nodes.end()) throw EvaluationError("no morphism assigned to generator '" + g.name + "'");
    auto const& f = it->second;
    if (f.dom().dimension() != object(g.source).dimension() ||
        f.cod().dimension() != object(g.target).dimension()) {
      throw EvaluationError("arity mismatch for '" + g.name + "': assigned " +
                            f.dom().to_string() + " -> " + f.cod().to_string() + ", expected " +
                            object(g.source).to_string() + " -> " +
                            object(g.target).to_string());
    }
    return f;
  }
};

using Labelling = BasicLabelling<Rational>;

template <Scalar S>
BasicLabelling<S> convert_labelling(BasicLabelling<Rational> const& v) {
  BasicLabelling<S> r;
  r.objects = v.objects;
  for (auto const& [k, f] : v.nodes) r.nodes.emplace(k, convert_morphism<S>(f));
  return r;
}

/// The value of a labelled diagram: each slice is the tensor of its atoms'
/// images, slices compose left to right. Nodes are applied in place on the
/// running value instead of forming Kronecker-padded strips.
template <Scalar S>
BasicMorphism<S> evaluate(LayeredDiagram const& d, BasicLabelling<S> const& v) {
  MatObject const dom = v.object(d.input());
  BasicMatrix<S> value = BasicMatrix<S>::identity(dom.dimension());
  for (auto const& slice : d.slices()) {
    // Dimensions of the current interface, strand by strand.
    std::vector<std::size_t> dims;
    for (auto const& a : slice)
      for (auto const& label : atom_input(a)) dims.push_back(v.object(label).dimension());
    std::size_t pos = 0;      // strand index into dims (inputs not yet consumed)
    std::size_t done = 1;     // dimension of outputs already produced in this slice
    for (auto const& a : slice) {
      if (is_wire(a)) {
        done *= dims[pos++];
        continue;
      }
      auto const& g = std::get<GeneratorNode>(a).generator;
      auto const& f = v.node(g);
      pos += g.source.size();
      std::size_t rest = 1;
      for (std::size_t i = pos; i < dims.size(); ++i) rest *= dims[i];
      value = apply_local(done, f.matrix(), rest, value);
      done *= f.cod().dimension();
    }
  }
  return {dom, v.object(d.output()), std::move(value)};
}

/// Renaming of labels and symbols into a target scheme.
struct SchemeMap {
  std::map<std::string, std::string> objects;
  std::map<std::string, std::string> generators;
};

/// Value of a diagram in the free monoidal category on `target`: the
/// relabelled layered diagram.
inline LayeredDiagram free_evaluate(LayeredDiagram const& d, SchemeMap const& map,
                                    TensorScheme const& target) {
  auto label = [&](std::string const& l) {
    auto it = map.objects.find(l);
    if (it == map.objects.end()) throw EvaluationError("no image for label '" + l + "'");
    return it->second;
  };
  auto word = [&](Word const& w) {
    Word r;
    for (auto const& l : w) r.push_back(label(l));
    return r;
  };
  std::vector<Slice> slices;
  for (auto const& s : d.slices()) {
    Slice out;
    for (auto const& a : s) {
      if (auto const* w = std::get_if<IdentityWire>(&a)) {
        out.push_back(IdentityWire{label(w->label)});
        continue;
      }
      auto const& node = std::get<GeneratorNode>(a);
      auto it = map.generators.find(node.generator.name);
      if (it == map.generators.end())
        throw EvaluationError("no image for generator '" + node.generator.name + "'");
      Generator const* g = target.find(it->second);
      if (!g) throw EvaluationError("target scheme has no generator '" + it->second + "'");
      if (g->source != word(node.generator.source) || g->target != word(node.generator.target)) {
        throw EvaluationError("arity mismatch mapping '" + node.generator.name + "' to '" +
                              g->name + "'");
      }
      out.push_back(GeneratorNode{*g, node.id});
    }
    slices.push_back(std::move(out));
  }
  return LayeredDiagram(word(d.input()), word(d.output()), std::move(slices));
}

/// The unique morphism of the terminal monoidal category.
struct TerminalMorphism {
  friend bool operator==(TerminalMorphism, TerminalMorphism) { return true; }
};

inline TerminalMorphism evaluate_terminal(LayeredDiagram const&) { return {}; }

enum class BackendKind { Matrix, Free, Terminal };

/// Which category a diagram is evaluated in and how values are compared.
struct BackendHandle {
  BackendKind kind = BackendKind::Matrix;
  bool exact = true;
  double tolerance = 1e-9;
};

}  // namespace froblab
