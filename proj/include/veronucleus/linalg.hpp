#ifndef VERONUCLEUS_LINALG_HPP
#define VERONUCLEUS_LINALG_HPP

// Dense exact linear algebra over a FieldSpec: RREF, kernels and the
// subspace operations (join, meet, containment) used by the nucleus
// computations. Subspaces are always stored as an RREF basis without zero
// rows, so structural equality is subspace equality.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf.hpp"

namespace veronucleus {

using Vector = std::vector<Elem>;

class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  Matrix(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows)
      : Matrix(std::move(field), rows.size(), cols) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) set(r, c, rows[r][c]);
    }
  }

  static Matrix identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) {
    if (!field_.contains(v)) throw std::invalid_argument("entry outside " + field_.name());
    data_[r * cols_ + c] = v;
  }
  [[nodiscard]] FieldElement element(std::size_t r, std::size_t c) const { return field_.element((*this)(r, c)); }

  [[nodiscard]] std::span<const Elem> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

  [[nodiscard]] Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("matrix product over different fields");
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    const auto& f = a.field_;
    Matrix out(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          out.data_[i * b.cols_ + j] = f.add(out.data_[i * b.cols_ + j], f.mul(x, b(k, j)));
      }
    return out;
  }

  [[nodiscard]] Vector apply(std::span<const Elem> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] = field_.add(out[r], field_.mul((*this)(r, c), v[c]));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix matrix;  // zero rows removed
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

namespace detail {

// Gauss-Jordan on a row-major buffer in place. Returns the pivot columns; the
// first pivots.size() rows hold the reduced basis.
inline std::vector<std::size_t> gauss_jordan(const FieldSpec& f, std::vector<Elem>& a, std::size_t rows,
                                             std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows; ++c) {
    std::size_t sel = top;
    while (sel < rows && a[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != top)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[sel * cols + k], a[top * cols + k]);
    Elem* prow = a.data() + top * cols;
    const Elem s = f.inv(prow[c]);
    for (std::size_t k = c; k < cols; ++k) prow[k] = f.mul(prow[k], s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == top) continue;
      Elem* row = a.data() + r * cols;
      const Elem factor = row[c];
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t k = c; k < cols; ++k)
        if (prow[k] != 0) row[k] = f.add(row[k], f.mul(nf, prow[k]));
    }
    pivots.push_back(c);
    ++top;
  }
  return pivots;
}

}  // namespace detail

/// Reduced row echelon form; pivots are chosen leftmost column first, topmost
/// non-zero row within the column.
[[nodiscard]] inline RrefResult rref(const Matrix& m) {
  std::vector<Elem> buf(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    std::copy(row.begin(), row.end(), buf.begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
  }
  auto pivots = detail::gauss_jordan(m.field(), buf, m.rows(), m.cols());
  Matrix out(m.field(), pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, buf[r * m.cols() + c]);
  const std::size_t rank = pivots.size();
  return {std::move(out), rank, std::move(pivots)};
}

[[nodiscard]] inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// A linear subspace of F^N held as its canonical RREF basis.
class Subspace {
 public:
  /// Row space of the given vectors.
  static Subspace span(const FieldSpec& field, std::size_t ambient, const std::vector<Vector>& vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient)
        throw std::invalid_argument("vector length " + std::to_string(v.size()) + " differs from ambient " +
                                    std::to_string(ambient));
    return Subspace(rref(Matrix(field, ambient, vectors)).matrix);
  }

  static Subspace row_space(const Matrix& m) { return Subspace(rref(m).matrix); }

  static Subspace zero(const FieldSpec& field, std::size_t ambient) {
    return Subspace(Matrix(field, 0, ambient));
  }
  static Subspace full(const FieldSpec& field, std::size_t ambient) {
    return Subspace(Matrix::identity(field, ambient));
  }
  /// Span of the standard basis vectors e_i, i in indices.
  static Subspace coordinate(const FieldSpec& field, std::size_t ambient, std::span<const std::size_t> indices) {
    std::vector<Vector> vs;
    for (auto i : indices) {
      if (i >= ambient) throw std::invalid_argument("coordinate index out of range");
      Vector v(ambient, 0);
      v[i] = 1;
      vs.push_back(std::move(v));
    }
    return span(field, ambient, vs);
  }

  [[nodiscard]] const FieldSpec& field() const noexcept { return basis_.field(); }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  [[nodiscard]] std::size_t rank() const noexcept { return basis_.rows(); }
  /// rank - 1; the zero subspace is the empty projective subspace of dimension -1.
  [[nodiscard]] long projective_dim() const noexcept { return static_cast<long>(rank()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return rank() == 0; }
  [[nodiscard]] bool is_full() const noexcept { return rank() == ambient_dim(); }
  [[nodiscard]] const Matrix& basis() const noexcept { return basis_; }

  [[nodiscard]] bool contains(std::span<const Elem> v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    const auto& f = field();
    Vector w(v.begin(), v.end());
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.size() && r < rank(); ++c) {
      if (basis_(r, c) == 0) continue;  // c is not the pivot of row r
      if (w[c] != 0) {
        const Elem factor = f.neg(w[c]);
        for (std::size_t k = c; k < w.size(); ++k) w[k] = f.add(w[k], f.mul(factor, basis_(r, k)));
      }
      ++r;
    }
    for (auto x : w)
      if (x != 0) return false;
    return true;
  }

  /// Orthogonal complement with respect to the standard bilinear form, i.e.
  /// the coordinate vectors of all hyperplanes through this subspace.
  [[nodiscard]] Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

/// Right null space {v : m v = 0}.
[[nodiscard]] inline Subspace kernel(const Matrix& m) {
  const auto red = rref(m);
  const std::size_t n = m.cols();
  const auto& f = m.field();
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = f.neg(red.matrix(r, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, n, basis);
}

inline Subspace Subspace::annihilator() const { return kernel(basis_); }

inline void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch: " + std::to_string(a.ambient_dim()) + " vs " +
                                std::to_string(b.ambient_dim()));
  if (!(a.field() == b.field())) throw std::invalid_argument("subspaces over different fields");
}

/// Sum a + b.
[[nodiscard]] inline Subspace join(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::vector<Vector> rows;
  for (const Subspace* s : {&a, &b})
    for (std::size_t r = 0; r < s->rank(); ++r) {
      auto row = s->basis().row(r);
      rows.emplace_back(row.begin(), row.end());
    }
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

/// a ∩ b by Zassenhaus' algorithm: reduce [a | a ; b | 0]; the rows whose left
/// half vanishes carry a basis of the intersection in their right half.
[[nodiscard]] inline Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const std::size_t n = a.ambient_dim();
  const auto& f = a.field();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(f, n);
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  const std::size_t rows = a.rank() + b.rank();
  std::vector<Elem> buf(rows * 2 * n, 0);
  for (std::size_t r = 0; r < a.rank(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      buf[r * 2 * n + c] = a.basis()(r, c);
      buf[r * 2 * n + n + c] = a.basis()(r, c);
    }
  for (std::size_t r = 0; r < b.rank(); ++r)
    for (std::size_t c = 0; c < n; ++c) buf[(a.rank() + r) * 2 * n + c] = b.basis()(r, c);
  const auto pivots = detail::gauss_jordan(f, buf, rows, 2 * n);
  std::vector<Vector> meet;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] >= n)
      meet.emplace_back(buf.begin() + static_cast<std::ptrdiff_t>(r * 2 * n + n),
                        buf.begin() + static_cast<std::ptrdiff_t>((r + 1) * 2 * n));
  return Subspace::span(f, n, meet);
}

/// a ⊆ b.
[[nodiscard]] inline bool subspace_leq(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  for (std::size_t r = 0; r < a.rank(); ++r)
    if (!b.contains(a.basis().row(r))) return false;
  return true;
}

/// Incrementally maintained RREF of a growing set of vectors.
class EchelonBasis {
 public:
  EchelonBasis(FieldSpec field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  /// Adds v; returns false if v already lies in the span.
  bool insert(std::span<const Elem> v) {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    Vector w(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem x = w[pivots_[r]];
      if (x == 0) continue;
      const Elem factor = field_.neg(x);
      for (std::size_t k = pivots_[r]; k < ambient_; ++k)
        if (rows_[r][k] != 0) w[k] = field_.add(w[k], field_.mul(factor, rows_[r][k]));
    }
    std::size_t pc = 0;
    while (pc < ambient_ && w[pc] == 0) ++pc;
    if (pc == ambient_) return false;
    const Elem s = field_.inv(w[pc]);
    for (auto& x : w) x = field_.mul(x, s);
    rows_.push_back(std::move(w));
    pivots_.push_back(pc);
    return true;
  }

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] bool is_full() const noexcept { return rows_.size() == ambient_; }
  [[nodiscard]] Subspace subspace() const { return Subspace::span(field_, ambient_, rows_); }

 private:
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Intersection of many subspaces. Accumulates the annihilators of the
/// operands and stops as soon as they span the whole dual space, in which
/// case the intersection is zero.
template <typename Range>
[[nodiscard]] Subspace intersect_all(const FieldSpec& field, std::size_t ambient, const Range& subspaces) {
  EchelonBasis dual(field, ambient);
  for (const Subspace& s : subspaces) {
    if (s.ambient_dim() != ambient) throw std::invalid_argument("ambient dimension mismatch");
    const auto ann = s.annihilator();
    for (std::size_t r = 0; r < ann.rank(); ++r) dual.insert(ann.basis().row(r));
    if (dual.is_full()) return Subspace::zero(field, ambient);
  }
  std::vector<Vector> rows;
  const auto d = dual.subspace();
  for (std::size_t r = 0; r < d.rank(); ++r) {
    auto row = d.basis().row(r);
    rows.emplace_back(row.begin(), row.end());
  }
  return kernel(Matrix(field, ambient, rows));
}

}  // namespace veronucleus

#endif  // VERONUCLEUS_LINALG_HPP
