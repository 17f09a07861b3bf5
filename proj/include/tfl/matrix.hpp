#pragma once

// Dense exact linear algebra over PrimeField / RationalField.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tfl/field.hpp"

namespace tfl {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
void require_same_field(const F& a, const F& b) {
  if (!(a == b)) throw FieldError("mixed-field operands");
}

template <class F>
Vec<F> zero_vec(const F& field, std::size_t n) {
  return Vec<F>(n, field.zero());
}

template <class F>
bool is_zero_vec(const F& field, const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& e) { return field.is_zero(e); });
}

/// Row-major dense matrix carrying its field.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
  }

  static Matrix from_columns(const F& field, std::size_t rows, const std::vector<Vec<F>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Elem>& data() const { return data_; }

  Vec<F> row(std::size_t r) const {
    return Vec<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  Vec<F> column(std::size_t c) const {
    Vec<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, const Vec<F>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }
  void set_row(std::size_t r, const Vec<F>& v) {
    std::copy(v.begin(), v.end(), data_.begin() + r * cols_);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const Elem& e) { return field_.is_zero(e); });
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    require_same_field(field_, o.field_);
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Elem& b = o(k, j);
          if (field_.is_zero(b)) continue;
          out(i, j) = field_.add(out(i, j), field_.mul(a, b));
        }
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const { return combine(o, false); }
  Matrix operator-(const Matrix& o) const { return combine(o, true); }

  Matrix scaled(const Elem& s) const {
    Matrix out(*this);
    for (auto& e : out.data_) e = field_.mul(e, s);
    return out;
  }

  /// this += s * o
  void add_scaled(const Matrix& o, const Elem& s) {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    if (field_.is_zero(s)) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!field_.is_zero(o.data_[i])) data_[i] = field_.add(data_[i], field_.mul(s, o.data_[i]));
  }

  Vec<F> apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec<F> out(rows_, field_.zero());
    for (std::size_t c = 0; c < cols_; ++c) {
      if (field_.is_zero(v[c])) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Elem& a = (*this)(r, c);
        if (!field_.is_zero(a)) out[r] = field_.add(out[r], field_.mul(a, v[c]));
      }
    }
    return out;
  }

  /// Sub-block copy.
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix out(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  /// In-place Gauss-Jordan; returns pivot columns. Only the leading `ncols` columns are pivoted.
  std::vector<std::size_t> reduce_in_place(std::size_t ncols, bool full = true) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && field_.is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r)
        std::swap_ranges(data_.begin() + p * cols_, data_.begin() + (p + 1) * cols_, data_.begin() + r * cols_);
      Elem inv = field_.inv((*this)(r, c));
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), inv);
      // nonzero tail of the pivot row
      std::vector<std::size_t> support;
      for (std::size_t j = c + 1; j < cols_; ++j)
        if (!field_.is_zero((*this)(r, j))) support.push_back(j);
      for (std::size_t i = full ? 0 : r + 1; i < rows_; ++i) {
        if (i == r) continue;
        Elem f = (*this)(i, c);
        if (field_.is_zero(f)) continue;
        (*this)(i, c) = field_.zero();
        for (std::size_t j : support) (*this)(i, j) = field_.sub_mul((*this)(i, j), f, (*this)(r, j));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

 private:
  Matrix combine(const Matrix& o, bool subtract) const {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
      out.data_[i] = subtract ? field_.sub(data_[i], o.data_[i]) : field_.add(data_[i], o.data_[i]);
    return out;
  }

  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

template <class F>
struct Rref {
  Matrix<F> form;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Unique reduced row echelon form; zero rows are kept at the bottom.
template <class F>
Rref<F> rref(Matrix<F> m) {
  auto piv = m.reduce_in_place(m.cols());
  return {std::move(m), std::move(piv)};
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return m.reduce_in_place(m.cols(), /*full=*/false).size();
}

/// A subspace of F^n stored as the nonzero rows of a reduced echelon basis.
template <class F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace() = default;
  Subspace(F field, std::size_t ambient) : basis_(field, 0, ambient) {}

  static Subspace span(const F& field, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
    return from_rows(Matrix<F>::from_rows(field, ambient, vectors));
  }

  static Subspace from_rows(Matrix<F> rows) {
    auto piv = rows.reduce_in_place(rows.cols());
    Subspace s;
    s.basis_ = rows.block(0, 0, piv.size(), rows.cols());
    s.pivots_ = std::move(piv);
    return s;
  }

  /// Column space of m.
  static Subspace column_space(const Matrix<F>& m) { return from_rows(m.transpose()); }

  static Subspace full(const F& field, std::size_t n) {
    Subspace s;
    s.basis_ = Matrix<F>::identity(field, n);
    s.pivots_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.pivots_[i] = i;
    return s;
  }

  const F& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec<F> vector(std::size_t i) const { return basis_.row(i); }

  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient(); ++c) {
      if (k < pivots_.size() && pivots_[k] == c) {
        ++k;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  /// Normal form of v modulo the subspace (pivot coordinates cleared).
  Vec<F> reduce(Vec<F> v) const {
    check_ambient(v.size());
    const F& f = field();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      Elem c = v[pivots_[i]];
      if (f.is_zero(c)) continue;
      for (std::size_t j = pivots_[i]; j < ambient(); ++j) {
        const Elem& b = basis_(i, j);
        if (!f.is_zero(b)) v[j] = f.sub_mul(v[j], c, b);
      }
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return is_zero_vec(field(), reduce(v)); }

  /// Coordinates of a member vector with respect to the echelon basis.
  Vec<F> coordinates(const Vec<F>& v) const {
    check_ambient(v.size());
    Vec<F> out(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) out[i] = v[pivots_[i]];
    return out;
  }

  /// Vector with the given coordinates.
  Vec<F> combine(const Vec<F>& coords) const {
    Vec<F> v = zero_vec(field(), ambient());
    const F& f = field();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (f.is_zero(coords[i])) continue;
      for (std::size_t j = 0; j < ambient(); ++j)
        if (!f.is_zero(basis_(i, j))) v[j] = f.add(v[j], f.mul(coords[i], basis_(i, j)));
    }
    return v;
  }

  bool contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.vector(i))) return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    require_same_field(field(), o.field());
    check_ambient(o.ambient());
    Matrix<F> stacked(field(), dim() + o.dim(), ambient());
    stacked.set_block(0, 0, basis_);
    stacked.set_block(dim(), 0, o.basis_);
    return from_rows(std::move(stacked));
  }

  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  void check_ambient(std::size_t n) const {
    if (n != ambient()) throw std::invalid_argument("ambient dimension mismatch");
  }

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// Semi-echelon basis grown one vector at a time; each stored row is normalized at its pivot
/// and vanishes at the pivots of earlier rows.
template <class F>
class EchelonBuilder {
 public:
  EchelonBuilder(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto c = v[pivots_[i]];
      if (field_.is_zero(c)) continue;
      const auto& row = rows_[i];
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!field_.is_zero(row[j])) v[j] = field_.sub_mul(v[j], c, row[j]);
    }
    return v;
  }
  bool contains(const Vec<F>& v) const { return is_zero_vec(field_, reduce(v)); }
  /// Adds v; returns false when v was already in the span.
  bool insert(const Vec<F>& v) {
    auto r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && field_.is_zero(r[p])) ++p;
    if (p == ambient_) return false;
    auto inv = field_.inv(r[p]);
    for (auto& e : r) e = field_.mul(e, inv);
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {x : m x = 0}.
template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
  auto r = rref(m);
  const F& f = m.field();
  std::vector<Vec<F>> vecs;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v = zero_vec(f, m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = f.neg(r.form(i, free));
    vecs.push_back(std::move(v));
  }
  return Subspace<F>::span(f, m.cols(), vecs);
}

template <class F>
Subspace<F> Subspace<F>::intersect(const Subspace& o) const {
  require_same_field(field(), o.field());
  check_ambient(o.ambient());
  const F& f = field();
  // columns: u_1..u_a, -v_1..-v_b ; kernel vectors (x, y) give sum x_i u_i in the intersection
  Matrix<F> m(f, ambient(), dim() + o.dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient(); ++j) m(j, i) = basis_(i, j);
  for (std::size_t i = 0; i < o.dim(); ++i)
    for (std::size_t j = 0; j < ambient(); ++j) m(j, dim() + i) = f.neg(o.basis_(i, j));
  auto k = kernel_basis(m);
  std::vector<Vec<F>> vecs;
  for (std::size_t t = 0; t < k.dim(); ++t) {
    auto full = k.vector(t);
    Vec<F> coords(full.begin(), full.begin() + dim());
    vecs.push_back(combine(coords));
  }
  return span(f, ambient(), vecs);
}

template <class F>
struct AffineSolution {
  Vec<F> particular;
  Subspace<F> kernel;
};

/// Full solution set of m x = b, or nullopt when inconsistent.
template <class F>
std::optional<AffineSolution<F>> solve_all(const Matrix<F>& m, const Vec<F>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_all: right-hand side has wrong length");
  const F& f = m.field();
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  auto piv = aug.reduce_in_place(m.cols() + 1);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec<F> x = zero_vec(f, m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
  return AffineSolution<F>{std::move(x), kernel_basis(m)};
}

/// Solves m X = b for several right-hand sides at once (columns of rhs). Throws if inconsistent.
template <class F>
Matrix<F> solve_columns(const Matrix<F>& m, const Matrix<F>& rhs) {
  if (rhs.rows() != m.rows()) throw std::invalid_argument("solve_columns: shape mismatch");
  const F& f = m.field();
  Matrix<F> aug(f, m.rows(), m.cols() + rhs.cols());
  aug.set_block(0, 0, m);
  aug.set_block(0, m.cols(), rhs);
  auto piv = aug.reduce_in_place(m.cols());
  Matrix<F> x(f, m.cols(), rhs.cols());
  for (std::size_t i = piv.size(); i < m.rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      if (!f.is_zero(aug(i, m.cols() + j))) throw std::domain_error("solve_columns: inconsistent system");
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(piv[i], j) = aug(i, m.cols() + j);
  return x;
}

}  // namespace tfl
