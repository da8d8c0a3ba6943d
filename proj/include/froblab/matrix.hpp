#pragma once

#include <froblab/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace froblab {

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Row-compressed matrix over an exact (or float) scalar. Each row keeps its
/// nonzero entries sorted by column; absent entries are zero.
template <Scalar S>
class BasicMatrix {
 public:
  using value_type = S;

  struct Entry {
    std::size_t col;
    S value;

    friend bool operator==(Entry const&, Entry const&) = default;
  };
  using Row = std::vector<Entry>;

  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, S(1)});
    return m;
  }

  /// Builds a matrix from nested rows; all rows must have equal length.
  static BasicMatrix from_rows(std::vector<std::vector<S>> const& rows) {
    std::size_t const cols = rows.empty() ? 0 : rows.front().size();
    BasicMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ShapeError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j)
        if (!scalar_traits<S>::is_zero(rows[i][j])) m.data_[i].push_back({j, rows[i][j]});
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  S const& operator()(std::size_t i, std::size_t j) const {
    static S const zero{};
    Row const& r = data_[i];
    auto it = lower(r, j);
    return it != r.end() && it->col == j ? it->value : zero;
  }

  void set(std::size_t i, std::size_t j, S value) {
    check_index(i, j);
    Row& r = data_[i];
    auto it = lower(r, j);
    bool const zero = scalar_traits<S>::is_zero(value);
    if (it != r.end() && it->col == j) {
      if (zero)
        r.erase(it);
      else
        it->value = std::move(value);
    } else if (!zero) {
      r.insert(it, Entry{j, std::move(value)});
    }
  }

  void add(std::size_t i, std::size_t j, S const& value) { set(i, j, S((*this)(i, j) + value)); }

  Row const& row(std::size_t i) const { return data_[i]; }

  /// Replaces row i; entries must be sorted by column and nonzero.
  void set_row(std::size_t i, Row r) { data_[i] = std::move(r); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (auto const& r : data_) n += r.size();
    return n;
  }

  bool is_zero(double tolerance = 0.0) const {
    for (auto const& r : data_)
      for (auto const& e : r)
        if (!scalar_traits<S>::is_zero(e.value, tolerance)) return false;
    return true;
  }

  friend bool operator==(BasicMatrix const& a, BasicMatrix const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  template <class R>
  static auto lower(R& r, std::size_t j) {
    return std::lower_bound(r.begin(), r.end(), j,
                            [](Entry const& e, std::size_t c) { return e.col < c; });
  }

  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw ShapeError("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                       std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

using Matrix = BasicMatrix<Rational>;

namespace detail {

/// Scatter accumulator building one sparse row at a time.
template <Scalar S>
class RowAccumulator {
 public:
  explicit RowAccumulator(std::size_t width) : values_(width), used_(width, 0) {}

  void add_product(std::size_t col, S const& a, S const& b) {
    if (!used_[col]) {
      used_[col] = 1;
      touched_.push_back(col);
    }
    scalar_traits<S>::add_product(values_[col], a, b);
  }

  typename BasicMatrix<S>::Row take() {
    std::sort(touched_.begin(), touched_.end());
    typename BasicMatrix<S>::Row r;
    r.reserve(touched_.size());
    for (std::size_t c : touched_) {
      if (!scalar_traits<S>::is_zero(values_[c])) r.push_back({c, values_[c]});
      values_[c] = S(0);
      used_[c] = 0;
    }
    touched_.clear();
    return r;
  }

 private:
  std::vector<S> values_;
  std::vector<char> used_;
  std::vector<std::size_t> touched_;
};

template <Scalar S>
std::vector<std::vector<S>> to_dense(BasicMatrix<S> const& m) {
  std::vector<std::vector<S>> d(m.rows(), std::vector<S>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto const& e : m.row(i)) d[i][e.col] = e.value;
  return d;
}

template <Scalar S>
BasicMatrix<S> from_dense(std::vector<std::vector<S>> const& d, std::size_t cols) {
  BasicMatrix<S> m(d.size(), cols);
  for (std::size_t i = 0; i < d.size(); ++i) {
    typename BasicMatrix<S>::Row r;
    for (std::size_t j = 0; j < cols; ++j)
      if (!scalar_traits<S>::is_zero(d[i][j])) r.push_back({j, d[i][j]});
    m.set_row(i, std::move(r));
  }
  return m;
}

template <Scalar S, class Op>
BasicMatrix<S> merge(BasicMatrix<S> const& a, BasicMatrix<S> const& b, Op op) {
  BasicMatrix<S> r(a.rows(), a.cols());
  S const zero{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    typename BasicMatrix<S>::Row row;
    auto x = a.row(i).begin();
    auto y = b.row(i).begin();
    auto const xe = a.row(i).end();
    auto const ye = b.row(i).end();
    while (x != xe || y != ye) {
      std::size_t col;
      S v;
      if (y == ye || (x != xe && x->col < y->col)) {
        col = x->col;
        v = op(x->value, zero);
        ++x;
      } else if (x == xe || y->col < x->col) {
        col = y->col;
        v = op(zero, y->value);
        ++y;
      } else {
        col = x->col;
        v = op(x->value, y->value);
        ++x;
        ++y;
      }
      if (!scalar_traits<S>::is_zero(v)) row.push_back({col, std::move(v)});
    }
    r.set_row(i, std::move(row));
  }
  return r;
}

}  // namespace detail

/// a * b
template <Scalar S>
BasicMatrix<S> multiply(BasicMatrix<S> const& a, BasicMatrix<S> const& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matrix product: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                     "x" + std::to_string(b.cols()));
  }
  BasicMatrix<S> r(a.rows(), b.cols());
  detail::RowAccumulator<S> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (auto const& [k, aik] : a.row(i))
      for (auto const& [j, bkj] : b.row(k)) acc.add_product(j, aik, bkj);
    r.set_row(i, acc.take());
  }
  return r;
}

/// Kronecker product; the left operand indexes the most significant digit.
template <Scalar S>
BasicMatrix<S> kron(BasicMatrix<S> const& a, BasicMatrix<S> const& b) {
  BasicMatrix<S> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
      typename BasicMatrix<S>::Row row;
      row.reserve(a.row(i1).size() * b.row(i2).size());
      for (auto const& [j1, x] : a.row(i1))
        for (auto const& [j2, y] : b.row(i2)) row.push_back({j1 * b.cols() + j2, S(x * y)});
      r.set_row(i1 * b.rows() + i2, std::move(row));
    }
  }
  return r;
}

/// (1_left (x) f (x) 1_right) * m without forming the Kronecker product.
template <Scalar S>
BasicMatrix<S> apply_local(std::size_t left, BasicMatrix<S> const& f, std::size_t right,
                           BasicMatrix<S> const& m) {
  if (m.rows() != left * f.cols() * right) {
    throw ShapeError("local application: operand has " + std::to_string(m.rows()) +
                     " rows, expected " + std::to_string(left * f.cols() * right));
  }
  BasicMatrix<S> out(left * f.rows() * right, m.cols());
  detail::RowAccumulator<S> acc(m.cols());
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t a = 0; a < f.rows(); ++a) {
      for (std::size_t r = 0; r < right; ++r) {
        for (auto const& [b, fab] : f.row(a)) {
          std::size_t const src = (l * f.cols() + b) * right + r;
          for (auto const& [c, x] : m.row(src)) acc.add_product(c, fab, x);
        }
        out.set_row((l * f.rows() + a) * right + r, acc.take());
      }
    }
  }
  return out;
}

template <Scalar S>
BasicMatrix<S> add(BasicMatrix<S> const& a, BasicMatrix<S> const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum shape mismatch");
  return detail::merge(a, b, [](S const& x, S const& y) { return S(x + y); });
}

template <Scalar S>
BasicMatrix<S> subtract(BasicMatrix<S> const& a, BasicMatrix<S> const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("matrix difference shape mismatch");
  return detail::merge(a, b, [](S const& x, S const& y) { return S(x - y); });
}

template <Scalar S>
BasicMatrix<S> scaled(BasicMatrix<S> const& m, S const& s) {
  BasicMatrix<S> r(m.rows(), m.cols());
  if (scalar_traits<S>::is_zero(s)) return r;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    typename BasicMatrix<S>::Row row;
    for (auto const& [j, x] : m.row(i)) row.push_back({j, S(x * s)});
    r.set_row(i, std::move(row));
  }
  return r;
}

template <Scalar S>
BasicMatrix<S> transpose(BasicMatrix<S> const& m) {
  std::vector<typename BasicMatrix<S>::Row> rows(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto const& [j, x] : m.row(i)) rows[j].push_back({i, x});
  BasicMatrix<S> t(m.cols(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) t.set_row(j, std::move(rows[j]));
  return t;
}

template <Scalar S>
BasicMatrix<S> convert_matrix(BasicMatrix<Rational> const& m) {
  BasicMatrix<S> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    typename BasicMatrix<S>::Row row;
    for (auto const& [j, x] : m.row(i)) {
      S v = scalar_traits<S>::from_rational(x);
      if (!scalar_traits<S>::is_zero(v)) row.push_back({j, std::move(v)});
    }
    r.set_row(i, std::move(row));
  }
  return r;
}

/// Entry-wise comparison; exact for rationals, relative tolerance for floats.
template <Scalar S>
bool approx_equal(BasicMatrix<S> const& a, BasicMatrix<S> const& b, double tolerance = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if constexpr (scalar_traits<S>::exact) {
    return a == b;
  } else {
    S const zero{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
      auto x = a.row(i).begin();
      auto y = b.row(i).begin();
      auto const xe = a.row(i).end();
      auto const ye = b.row(i).end();
      while (x != xe || y != ye) {
        bool ok;
        if (y == ye || (x != xe && x->col < y->col)) {
          ok = scalar_traits<S>::near(x->value, zero, tolerance);
          ++x;
        } else if (x == xe || y->col < x->col) {
          ok = scalar_traits<S>::near(zero, y->value, tolerance);
          ++y;
        } else {
          ok = scalar_traits<S>::near(x->value, y->value, tolerance);
          ++x;
          ++y;
        }
        if (!ok) return false;
      }
    }
    return true;
  }
}

template <Scalar S>
struct RowEchelon {
  BasicMatrix<S> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Exact scalars pivot on the first nonzero entry
/// of the column; floats pick the largest magnitude above `tolerance`.
template <Scalar S>
RowEchelon<S> row_reduce(BasicMatrix<S> const& input, double tolerance = 1e-12) {
  using T = scalar_traits<S>;
  double const tol = T::exact ? 0.0 : tolerance;
  auto m = detail::to_dense(input);
  std::size_t const rows = input.rows();
  std::size_t const cols = input.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::optional<std::size_t> pick;
    for (std::size_t i = row; i < rows; ++i) {
      if (T::is_zero(m[i][col], tol)) continue;
      if constexpr (T::exact) {
        pick = i;
        break;
      } else {
        if (!pick || T::magnitude(m[i][col]) > T::magnitude(m[*pick][col])) pick = i;
      }
    }
    if (!pick) {
      if constexpr (!T::exact)
        for (std::size_t i = row; i < rows; ++i) m[i][col] = S(0);
      continue;
    }
    if (*pick != row) std::swap(m[row], m[*pick]);
    S const inv = S(1) / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || T::is_zero(m[i][col])) continue;
      S const factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (!T::is_zero(m[row][j])) m[i][j] -= factor * m[row][j];
      m[i][col] = S(0);
    }
    pivots.push_back(col);
    ++row;
  }
  return {detail::from_dense(m, cols), std::move(pivots)};
}

template <Scalar S>
std::size_t rank(BasicMatrix<S> const& m, double tolerance = 1e-12) {
  return row_reduce(m, tolerance).pivots.size();
}

template <Scalar S>
std::optional<BasicMatrix<S>> inverse(BasicMatrix<S> const& m, double tolerance = 1e-12) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t const n = m.rows();
  BasicMatrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = m.row(i);
    row.push_back({n + i, S(1)});
    aug.set_row(i, std::move(row));
  }
  auto rr = row_reduce(aug, tolerance);
  if (rr.pivots.size() < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
  BasicMatrix<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    typename BasicMatrix<S>::Row row;
    for (auto const& [j, x] : rr.reduced.row(i))
      if (j >= n) row.push_back({j - n, x});
    inv.set_row(i, std::move(row));
  }
  return inv;
}

/// Some solution x of a * x = b (b a column), if the system is consistent.
template <Scalar S>
std::optional<BasicMatrix<S>> solve(BasicMatrix<S> const& a, BasicMatrix<S> const& b,
                                    double tolerance = 1e-12) {
  if (a.rows() != b.rows() || b.cols() != 1) throw ShapeError("solve: shape mismatch");
  BasicMatrix<S> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto row = a.row(i);
    if (!b.row(i).empty()) row.push_back({a.cols(), b.row(i).front().value});
    aug.set_row(i, std::move(row));
  }
  auto rr = row_reduce(aug, tolerance);
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
  BasicMatrix<S> x(a.cols(), 1);
  for (std::size_t r = 0; r < rr.pivots.size(); ++r)
    x.set(rr.pivots[r], 0, rr.reduced(r, a.cols()));
  return x;
}

/// Rank factorisation m = columns * rows: `columns` are the pivot columns of
/// m, `rows` the nonzero rows of its reduced echelon form.
template <Scalar S>
std::pair<BasicMatrix<S>, BasicMatrix<S>> rank_factorization(BasicMatrix<S> const& m,
                                                             double tolerance = 1e-12) {
  auto rr = row_reduce(m, tolerance);
  std::size_t const r = rr.pivots.size();
  BasicMatrix<S> rows(r, m.cols());
  for (std::size_t k = 0; k < r; ++k) rows.set_row(k, rr.reduced.row(k));
  std::vector<std::size_t> column_of(m.cols(), r);
  for (std::size_t k = 0; k < r; ++k) column_of[rr.pivots[k]] = k;
  BasicMatrix<S> columns(m.rows(), r);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    typename BasicMatrix<S>::Row row;
    for (auto const& [j, x] : m.row(i))
      if (column_of[j] < r) row.push_back({column_of[j], x});
    columns.set_row(i, std::move(row));
  }
  return {std::move(columns), std::move(rows)};
}

}  // namespace froblab
