#pragma once

#include <froblab/matrix.hpp>

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace froblab {

/// One named tensor factor of an object. Dimension 0 (the zero object)
/// only arises as the image of a zero idempotent.
struct Factor {
  std::string label;
  std::size_t dim = 1;

  friend bool operator==(Factor const&, Factor const&) = default;
};

/// An object of the matrix category: a word of factors. The empty word is
/// the monoidal unit I (dimension 1).
class MatObject {
 public:
  MatObject() = default;
  MatObject(std::initializer_list<Factor> factors) : factors_(factors) {}
  explicit MatObject(std::vector<Factor> factors) : factors_(std::move(factors)) {}

  static MatObject unit() { return {}; }
  static MatObject single(std::string label, std::size_t dim) {
    return MatObject({Factor{std::move(label), dim}});
  }
  /// The n-fold tensor power of this object.
  MatObject power(std::size_t n) const {
    std::vector<Factor> f;
    for (std::size_t i = 0; i < n; ++i) f.insert(f.end(), factors_.begin(), factors_.end());
    return MatObject(std::move(f));
  }

  std::vector<Factor> const& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool is_unit() const noexcept { return factors_.empty(); }

  std::size_t dimension() const {
    return std::accumulate(factors_.begin(), factors_.end(), std::size_t{1},
                           [](std::size_t acc, Factor const& f) { return acc * f.dim; });
  }

  std::string to_string() const {
    if (factors_.empty()) return "I";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "*";
      s += factors_[i].label + "[" + std::to_string(factors_[i].dim) + "]";
    }
    return s;
  }

  friend MatObject operator*(MatObject const& a, MatObject const& b) {
    std::vector<Factor> f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return MatObject(std::move(f));
  }

  friend bool operator==(MatObject const&, MatObject const&) = default;

 private:
  std::vector<Factor> factors_;
};

inline MatObject tensor_all(std::vector<MatObject> const& parts) {
  MatObject r;
  for (auto const& p : parts) r = r * p;
  return r;
}

/// A morphism dom -> cod of the matrix category; the matrix has shape
/// cod.dimension() x dom.dimension().
template <Scalar S>
class BasicMorphism {
 public:
  BasicMorphism() : matrix_(BasicMatrix<S>::identity(1)) {}
  BasicMorphism(MatObject dom, MatObject cod, BasicMatrix<S> matrix)
      : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != cod_.dimension() || matrix_.cols() != dom_.dimension()) {
      throw ShapeError("morphism " + dom_.to_string() + " -> " + cod_.to_string() +
                       " given a " + std::to_string(matrix_.rows()) + "x" +
                       std::to_string(matrix_.cols()) + " matrix");
    }
  }

  MatObject const& dom() const noexcept { return dom_; }
  MatObject const& cod() const noexcept { return cod_; }
  BasicMatrix<S> const& matrix() const noexcept { return matrix_; }

  /// Same matrix, relabelled endpoints of equal dimension.
  BasicMorphism retyped(MatObject dom, MatObject cod) const {
    return BasicMorphism(std::move(dom), std::move(cod), matrix_);
  }

 private:
  MatObject dom_;
  MatObject cod_;
  BasicMatrix<S> matrix_;
};

using Morphism = BasicMorphism<Rational>;

template <Scalar S>
BasicMorphism<S> identity(MatObject const& a) {
  return {a, a, BasicMatrix<S>::identity(a.dimension())};
}

template <Scalar S>
BasicMorphism<S> zero_morphism(MatObject const& dom, MatObject const& cod) {
  return {dom, cod, BasicMatrix<S>(cod.dimension(), dom.dimension())};
}

/// g o f
template <Scalar S>
BasicMorphism<S> compose(BasicMorphism<S> const& g, BasicMorphism<S> const& f) {
  if (f.cod().dimension() != g.dom().dimension()) {
    throw ShapeError("cannot compose " + f.dom().to_string() + " -> " + f.cod().to_string() +
                     " with " + g.dom().to_string() + " -> " + g.cod().to_string());
  }
  return {f.dom(), g.cod(), multiply(g.matrix(), f.matrix())};
}

/// Composite of a chain listed in application order: then(f1, f2, f3) = f3 o f2 o f1.
template <Scalar S, class... Rest>
BasicMorphism<S> then(BasicMorphism<S> const& first, Rest const&... rest) {
  BasicMorphism<S> acc = first;
  ((acc = compose(rest, acc)), ...);
  return acc;
}

template <Scalar S>
BasicMorphism<S> tensor(BasicMorphism<S> const& f, BasicMorphism<S> const& g) {
  return {f.dom() * g.dom(), f.cod() * g.cod(), kron(f.matrix(), g.matrix())};
}

template <Scalar S, class... Rest>
BasicMorphism<S> tensor(BasicMorphism<S> const& f, BasicMorphism<S> const& g,
                        Rest const&... rest) {
  return tensor(tensor(f, g), rest...);
}

/// 1_left (x) f (x) 1_right
template <Scalar S>
BasicMorphism<S> whisker(MatObject const& left, BasicMorphism<S> const& f,
                         MatObject const& right) {
  return tensor(identity<S>(left), f, identity<S>(right));
}

template <Scalar S>
BasicMorphism<S> scaled(BasicMorphism<S> const& f, S const& s) {
  return {f.dom(), f.cod(), scaled(f.matrix(), s)};
}

/// The symmetry A (x) B -> B (x) A: basis (i, j) maps to (j, i).
template <Scalar S>
BasicMorphism<S> braiding(MatObject const& a, MatObject const& b) {
  std::size_t const da = a.dimension();
  std::size_t const db = b.dimension();
  BasicMatrix<S> m(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) m.set(j * da + i, i * db + j, S(1));
  return {a * b, b * a, std::move(m)};
}

/// Equality of values; endpoint words are metadata and only dimensions count.
template <Scalar S>
bool same_value(BasicMorphism<S> const& f, BasicMorphism<S> const& g, double tolerance = 1e-9) {
  return approx_equal(f.matrix(), g.matrix(), tolerance);
}

template <Scalar S>
bool is_identity(BasicMorphism<S> const& f, double tolerance = 1e-9) {
  return f.dom().dimension() == f.cod().dimension() &&
         approx_equal(f.matrix(), BasicMatrix<S>::identity(f.dom().dimension()), tolerance);
}

template <Scalar S>
bool is_idempotent(BasicMorphism<S> const& e, double tolerance = 1e-9) {
  return e.dom().dimension() == e.cod().dimension() &&
         approx_equal(multiply(e.matrix(), e.matrix()), e.matrix(), tolerance);
}

template <Scalar S>
BasicMorphism<S> convert_morphism(BasicMorphism<Rational> const& f) {
  return {f.dom(), f.cod(), convert_matrix<S>(f.matrix())};
}

/// A splitting e = section o retraction with retraction o section = 1.
template <Scalar S>
struct Splitting {
  MatObject image;
  BasicMorphism<S> retraction;  // dom(e) -> image
  BasicMorphism<S> section;     // image -> dom(e)
};

/// Splits an idempotent through a single factor of dimension rank(e)
/// (dimension 0 when e = 0).
template <Scalar S>
Splitting<S> split_idempotent(BasicMorphism<S> const& e, std::string image_label = "",
                              double tolerance = 1e-9) {
  if (e.dom().dimension() != e.cod().dimension() || !is_idempotent(e, tolerance)) {
    throw ShapeError("split_idempotent: morphism on " + e.dom().to_string() +
                     " is not idempotent");
  }
  auto [columns, rows] = rank_factorization(e.matrix(), tolerance * 1e-3);
  if (image_label.empty()) image_label = "im(" + e.dom().to_string() + ")";
  MatObject image = MatObject::single(image_label, rows.rows());
  return {image, {e.dom(), image, std::move(rows)}, {image, e.dom(), std::move(columns)}};
}

}  // namespace froblab
