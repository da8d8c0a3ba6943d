#pragma once

#include <froblab/functor.hpp>
#include <froblab/yang_baxter.hpp>

#include <array>
#include <string>
#include <vector>

namespace froblab {

using Quadruple = std::array<std::size_t, 4>;

/// For each quadruple (u, v, w, x) of carrier indices:
///   (phi (x) phi)(1 (x) z_{v,w} (x) 1)(psi (x) psi)
///     = psi_{Tu Tw, Tv Tx} o F(1 (x) y_{v,w} (x) 1) o phi_{Tu Tv, Tw Tx}
/// where y is a family on carriers T_i and z a family on carriers F T_i.
template <Scalar S>
BasicLawReport<S> check_prebimonoidal(BasicFrobeniusFunctor<S> const& F, BasicLaxYBData<S> const& y,
                                      BasicLaxYBData<S> const& z,
                                      std::vector<Quadruple> const& samples,
                                      double tolerance = 1e-9) {
  if (y.size() != z.size()) throw ShapeError("check_prebimonoidal: y and z index different families");
  for (std::size_t i = 0; i < y.size(); ++i)
    if (F(y.carriers[i]).dimension() != z.carriers[i].dimension())
      throw ShapeError("check_prebimonoidal: z carrier " + std::to_string(i) + " is not F T_i");
  BasicLawReport<S> report(tolerance);
  for (auto const& q : samples) {
    for (auto i : q)
      if (i >= y.size()) throw ShapeError("check_prebimonoidal: index out of range");
    auto const& [u, v, w, x] = q;
    MatObject const& Tu = y.carriers[u];
    MatObject const& Tv = y.carriers[v];
    MatObject const& Tw = y.carriers[w];
    MatObject const& Tx = y.carriers[x];
    auto const zvw = z.at(v, w).retyped(F(Tv) * F(Tw), F(Tw) * F(Tv));
    auto const lhs = then(tensor(F.psi(Tu, Tv), F.psi(Tw, Tx)), whisker(F(Tu), zvw, F(Tx)),
                          tensor(F.phi(Tu, Tw), F.phi(Tv, Tx)));
    auto const yvw = y.at(v, w).retyped(Tv * Tw, Tw * Tv);
    auto const rhs = then(F.phi(Tu * Tv, Tw * Tx), F(whisker(Tu, yvw, Tx)),
                          F.psi(Tu * Tw, Tv * Tx));
    report.expect_equal("pentagon", lhs, rhs,
                        "(" + std::to_string(u) + "," + std::to_string(v) + "," +
                            std::to_string(w) + "," + std::to_string(x) + ")");
  }
  return report;
}

/// Every quadruple of indices below n.
inline std::vector<Quadruple> all_quadruples(std::size_t n) {
  std::vector<Quadruple> r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) r.push_back({a, b, c, d});
  return r;
}

/// Prebimonoidal relative to the braidings: y = c on the carriers and
/// z = c on their images.
template <Scalar S>
BasicLawReport<S> check_prebimonoidal_braided(BasicFrobeniusFunctor<S> const& F,
                                              std::vector<MatObject> const& carriers,
                                              std::vector<Quadruple> const& samples,
                                              double tolerance = 1e-9) {
  std::vector<MatObject> images;
  for (auto const& c : carriers) images.push_back(F(c));
  return check_prebimonoidal(F, braiding_family<S>(carriers), braiding_family<S>(images), samples,
                             tolerance);
}

}  // namespace froblab
