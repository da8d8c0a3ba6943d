#pragma once

#include <froblab/io.hpp>

#include <string>
#include <variant>

namespace froblab {

namespace detail {

template <Scalar S>
BasicLaxYBData<S> convert_yb(LaxYBData const& d) {
  BasicLaxYBData<S> r{d.carriers, {}};
  for (auto const& row : d.y) {
    r.y.emplace_back();
    for (auto const& f : row) r.y.back().push_back(convert_morphism<S>(f));
  }
  return r;
}

template <Scalar S>
BasicWeakYBData<S> convert_weak_yb(WeakYBData const& w) {
  return {w.carrier, convert_morphism<S>(w.nabla), convert_morphism<S>(w.y), convert_morphism<S>(w.y_prime)};
}

template <Scalar S>
BasicMonoidData<S> convert_monoid(MonoidData const& m) {
  return {m.carrier, convert_morphism<S>(m.mu), convert_morphism<S>(m.eta)};
}

template <Scalar S>
BasicDistLawData<S> convert_distlaw(DistLawData const& d) {
  return {convert_monoid<S>(d.a), convert_monoid<S>(d.b), convert_morphism<S>(d.lambda)};
}

template <Scalar S>
BasicBimonoidData<S> convert_bimonoid(BimonoidData const& b) {
  return {b.name,
          b.carrier,
          convert_morphism<S>(b.mu),
          convert_morphism<S>(b.eta),
          convert_morphism<S>(b.delta),
          convert_morphism<S>(b.epsilon)};
}

}  // namespace detail

template <Scalar S>
struct StructureResult {
  std::string kind;
  std::string subject;
  BasicLawReport<S> report;
};

/// Runs the checker matching a structure file. Conjugating functors are
/// applied first when the payload asks for it.
template <Scalar S>
StructureResult<S> check_structure(StructureSpec const& spec, double tolerance = 1e-9) {
  return std::visit(
      [&](auto const& s) -> StructureResult<S> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AlgebraLaws>) {
          return {"algebra", s.algebra.name,
                  check_frobenius_algebra(convert_algebra<S>(s.algebra), s.require_separable, tolerance)};
        } else if constexpr (std::is_same_v<T, FunctorLaws>) {
          auto const F = make_functor<S>(s.functor, tolerance);
          auto r = check_frobenius_functor(F, s.samples, tolerance);
          return {"functor", F.name, s.require_separable ? r : r.without("separability")};
        } else if constexpr (std::is_same_v<T, YBLaws>) {
          auto d = detail::convert_yb<S>(s.data);
          std::string subject = "y on " + d.carriers.front().to_string();
          if (s.conjugate_by) {
            auto const F = make_functor<S>(*s.conjugate_by, tolerance);
            d = conjugate_yb(F, d);
            subject += " conjugated by " + F.name;
          }
          return {"yb", subject, s.invertible ? check_yb(d, tolerance) : check_lax_yb(d, tolerance)};
        } else if constexpr (std::is_same_v<T, WeakYBLaws>) {
          if (s.conjugate_by) {
            auto const F = make_functor<S>(*s.conjugate_by, tolerance);
            auto const w = weak_yb_from_conjugate(F, detail::convert_yb<S>(*s.source), tolerance);
            return {"weak-yb", "y^F on " + w.carrier.to_string() + " for " + F.name,
                    check_weak_yb(w, tolerance)};
          }
          auto const w = detail::convert_weak_yb<S>(*s.data);
          return {"weak-yb", "weak YB on " + w.carrier.to_string(), check_weak_yb(w, tolerance)};
        } else if constexpr (std::is_same_v<T, DistLawLaws>) {
          auto d = detail::convert_distlaw<S>(s.data);
          std::string subject = "lambda: " + d.lambda.dom().to_string() + " -> " + d.lambda.cod().to_string();
          if (s.conjugate_by) {
            auto const F = make_functor<S>(*s.conjugate_by, tolerance);
            d = conjugate_distributive_law(F, d);
            subject += " conjugated by " + F.name;
          }
          return {"distributive-law", subject,
                  s.weak ? check_weak_distributive_law(d, tolerance) : check_distributive_law(d, tolerance)};
        } else {
          auto b = detail::convert_bimonoid<S>(s.data);
          if (s.conjugate_by) b = conjugate_bimonoid(make_functor<S>(*s.conjugate_by, tolerance), b);
          return {"bimonoid", b.name, s.weak ? check_weak_bimonoid(b, tolerance) : check_bimonoid(b, tolerance)};
        }
      },
      spec);
}

}  // namespace froblab
