#pragma once

#include <froblab/functor.hpp>

#include <vector>

namespace froblab {

/// For ops = (x_1, ..., x_n), all endomorphisms of A A, the composite
/// t_n o ... o t_1 on A A A where t_n = x_n (x) 1 if `top_last`, else 1 (x) x_n,
/// and the sides alternate going down.
template <Scalar S>
BasicMorphism<S> alternating_chain(MatObject const& a, std::vector<BasicMorphism<S>> const& ops,
                                   bool top_last) {
  BasicMorphism<S> acc = identity<S>(a * a * a);
  std::size_t const n = ops.size();
  for (std::size_t k = 1; k <= n; ++k) {
    bool const top = ((n - k) % 2 == 0) == top_last;
    auto const x = ops[k - 1].retyped(a * a, a * a);
    acc = compose(top ? whisker(MatObject(), x, a) : whisker(a, x, MatObject()), acc);
  }
  return acc;
}

/// (a_n (x) 1)(1 (x) a_{n-1}) ... == (1 (x) b_n)(b_{n-1} (x) 1) ...
template <Scalar S>
bool chain_equation_holds(MatObject const& a, std::vector<BasicMorphism<S>> const& as,
                          std::vector<BasicMorphism<S>> const& bs, double tolerance = 1e-9) {
  return same_value(alternating_chain(a, as, true), alternating_chain(a, bs, false), tolerance);
}

/// The same equation between the F-conjugates of every a_i and b_i.
template <Scalar S>
bool conjugate_chain_equation_holds(BasicFrobeniusFunctor<S> const& F, MatObject const& a,
                                    std::vector<BasicMorphism<S>> const& as,
                                    std::vector<BasicMorphism<S>> const& bs, double tolerance = 1e-9) {
  auto conj = [&](std::vector<BasicMorphism<S>> const& xs) {
    std::vector<BasicMorphism<S>> r;
    for (auto const& x : xs) r.push_back(conjugate_on(F, x.retyped(a * a, a * a), a, 2, 2));
    return r;
  };
  return chain_equation_holds(F(a), conj(as), conj(bs), tolerance);
}

}  // namespace froblab
