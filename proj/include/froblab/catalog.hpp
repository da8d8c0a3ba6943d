#pragma once

#include <froblab/algebra.hpp>
#include <froblab/diagram.hpp>
#include <froblab/evaluate.hpp>

#include <string>

namespace froblab::catalog {

/// Vertices A and B; the Frobenius generators on A.
inline TensorScheme frobenius_scheme() {
  return {{"A", "B"},
          {{"mu", {"A", "A"}, {"A"}},
           {"eta", {}, {"A"}},
           {"delta", {"A"}, {"A", "A"}},
           {"epsilon", {"A"}, {}}}};
}

inline LayeredDiagram gen(std::string const& symbol) {
  return generator_diagram(frobenius_scheme(), symbol);
}

/// epsilon o eta
inline LayeredDiagram barbell() { return compose(gen("eta"), gen("epsilon")); }

/// mu o delta
inline LayeredDiagram bubble() { return compose(gen("delta"), gen("mu")); }

inline LayeredDiagram two_wires() { return tensor(identity_diagram({"A"}), identity_diagram({"B"})); }

/// k barbells stacked vertically.
inline LayeredDiagram barbells(std::size_t k) {
  LayeredDiagram d;
  for (std::size_t i = 0; i < k; ++i) d = i == 0 ? barbell() : tensor(d, barbell());
  return d;
}

/// A labelled by the carrier of `alg`, the generators by its structure
/// maps; B gets dimension `b_dim`.
inline Labelling algebra_labelling(FrobeniusAlgebraData const& alg, std::size_t b_dim = 1) {
  Labelling v;
  MatObject const A = alg.carrier;
  v.objects.emplace("A", A);
  v.objects.emplace("B", MatObject::single("B", b_dim));
  v.nodes.emplace("mu", alg.mu);
  v.nodes.emplace("eta", alg.eta);
  v.nodes.emplace("delta", alg.delta);
  v.nodes.emplace("epsilon", alg.epsilon);
  return v;
}

/// The interpretation in the terminal category, realised with every wire of
/// dimension 1 and every structure map equal to 1.
inline Labelling terminal_labelling() { return algebra_labelling(matrix_algebra_frobenius(1)); }

}  // namespace froblab::catalog
