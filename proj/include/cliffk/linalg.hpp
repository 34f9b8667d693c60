#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace cliffk {

// Dense matrix over an exact field K. Entries are mostly sparse in
// practice (generator matrices are monomial), so the kernels skip zeros.
template <class K>
class Matrix {
 public:
  using Traits = FieldTraits<K>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Traits::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Traits::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (auto& x : a_)
      if (!Traits::is_zero(x)) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == (i == j ? Traits::one() : Traits::zero()))) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const K& c, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = c * m.a_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const K& xik = x(i, k);
        if (Traits::is_zero(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          const K& ykj = y(k, j);
          if (Traits::is_zero(ykj)) continue;
          r(i, j) += xik * ykj;
        }
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  K trace() const {
    K t = Traits::zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  // Kronecker product; block (i,j) is a_(i,j) * other.
  Matrix kron(const Matrix& o) const {
    Matrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const K& c = (*this)(i, j);
        if (Traits::is_zero(c)) continue;
        for (std::size_t k = 0; k < o.rows_; ++k)
          for (std::size_t l = 0; l < o.cols_; ++l) {
            const K& v = o(k, l);
            if (!Traits::is_zero(v)) r(i * o.rows_ + k, j * o.cols_ + l) = c * v;
          }
      }
    return r;
  }

  std::vector<K> col(std::size_t j) const {
    std::vector<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<K> r(rows_, Traits::zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const K& x = (*this)(i, j);
        if (!Traits::is_zero(x) && !Traits::is_zero(v[j])) r[i] += x * v[j];
      }
    return r;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

// Sparse row: sorted (column, value) pairs, value never zero.
template <class K>
using SparseRow = std::vector<std::pair<std::size_t, K>>;

template <class K>
SparseRow<K> to_sparse(const std::vector<K>& v) {
  SparseRow<K> r;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!FieldTraits<K>::is_zero(v[j])) r.emplace_back(j, v[j]);
  return r;
}

// Incremental exact reduced row echelon form. Rows are inserted one at a
// time; pivot rows are kept mutually reduced so a nullspace basis falls
// out by back-substitution-free reads.
template <class K>
class SparseEliminator {
 public:
  using Traits = FieldTraits<K>;

  explicit SparseEliminator(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

  // Reduce `row` against the pivots; returns the residual (empty if the
  // row was dependent).
  SparseRow<K> reduce(SparseRow<K> row) const {
    SparseRow<K> cur = std::move(row);
    for (;;) {
      auto it = first_pivot_hit(cur);
      if (it == cur.end()) return cur;
      const auto& prow = pivots_.at(it->first);
      cur = axpy(cur, -(it->second), prow);
    }
  }

  // Insert a row. Returns true if it increased the rank.
  bool insert(SparseRow<K> row) {
    SparseRow<K> r = reduce(std::move(row));
    if (r.empty()) return false;
    // normalize leading coefficient to 1
    const std::size_t lead = r.front().first;
    K inv = r.front().second;
    for (auto& [c, v] : r) v = v / inv;
    // eliminate this column from existing pivot rows
    for (auto& [pc, prow] : pivots_) {
      auto it = std::lower_bound(prow.begin(), prow.end(), lead,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it != prow.end() && it->first == lead) {
        K coef = it->second;
        prow = axpy(prow, -coef, r);
      }
    }
    pivots_.emplace(lead, std::move(r));
    return true;
  }

  bool insert_dense(const std::vector<K>& v) { return insert(to_sparse(v)); }

  // Canonical nullspace basis, one vector per free column, in ascending
  // free-column order. Vector for free column f has 1 at f and -row[f]
  // at each pivot column.
  std::vector<std::vector<K>> nullspace_basis() const {
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (pivots_.count(f)) continue;
      std::vector<K> v(cols_, Traits::zero());
      v[f] = Traits::one();
      for (auto& [pc, prow] : pivots_) {
        auto it = std::lower_bound(prow.begin(), prow.end(), f,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != prow.end() && it->first == f) v[pc] = -(it->second);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // The span's canonical (RREF) basis rows in pivot-column order.
  std::vector<std::vector<K>> span_basis() const {
    std::vector<std::vector<K>> basis;
    for (auto& [pc, prow] : pivots_) {
      std::vector<K> v(cols_, Traits::zero());
      for (auto& [c, val] : prow) v[c] = val;
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Express a dense vector in the span basis; returns empty if not in span.
  // Coordinates follow span_basis() order.
  std::optional<std::vector<K>> coordinates(const std::vector<K>& v) const {
    std::vector<K> coords;
    coords.reserve(pivots_.size());
    SparseRow<K> cur = to_sparse(v);
    std::map<std::size_t, K> used;
    for (;;) {
      auto it = first_pivot_hit(cur);
      if (it == cur.end()) break;
      used[it->first] = it->second;
      cur = axpy(cur, -(it->second), pivots_.at(it->first));
    }
    if (!cur.empty()) return std::nullopt;
    for (auto& [pc, prow] : pivots_) {
      auto u = used.find(pc);
      coords.push_back(u == used.end() ? Traits::zero() : u->second);
    }
    return coords;
  }

 private:
  typename SparseRow<K>::const_iterator first_pivot_hit(const SparseRow<K>& r) const {
    for (auto it = r.begin(); it != r.end(); ++it)
      if (pivots_.count(it->first)) return it;
    return r.end();
  }

  // a + c*b for sorted sparse rows
  static SparseRow<K> axpy(const SparseRow<K>& a, const K& c, const SparseRow<K>& b) {
    SparseRow<K> r;
    r.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        r.push_back(*ia++);
      } else if (ia == a.end() || ib->first < ia->first) {
        K v = c * ib->second;
        if (!Traits::is_zero(v)) r.emplace_back(ib->first, std::move(v));
        ++ib;
      } else {
        K v = ia->second + c * ib->second;
        if (!Traits::is_zero(v)) r.emplace_back(ia->first, std::move(v));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  std::size_t cols_;
  std::map<std::size_t, SparseRow<K>> pivots_;  // pivot column -> row
};

template <class K>
std::size_t matrix_rank(const Matrix<K>& m) {
  SparseEliminator<K> elim(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow<K> row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!FieldTraits<K>::is_zero(m(i, j))) row.emplace_back(j, m(i, j));
    elim.insert(std::move(row));
  }
  return elim.rank();
}

// Flatten a matrix row-major into a vector (for span computations over
// spaces of matrices).
template <class K>
std::vector<K> vectorize(const Matrix<K>& m) {
  std::vector<K> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Solve A x = b by dense elimination; returns nullopt if inconsistent.
// A need not be square; the minimal-support echelon solution is returned.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& A, const std::vector<K>& b) {
  using Traits = FieldTraits<K>;
  const std::size_t n = A.rows(), m = A.cols();
  if (b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  Matrix<K> aug(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = A(i, j);
    aug(i, m) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t pr = row;
    while (pr < n && Traits::is_zero(aug(pr, col))) ++pr;
    if (pr == n) continue;
    for (std::size_t j = 0; j <= m; ++j) std::swap(aug(row, j), aug(pr, j));
    K inv = aug(row, col);
    for (std::size_t j = col; j <= m; ++j) aug(row, j) = aug(row, j) / inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || Traits::is_zero(aug(i, col))) continue;
      K f = aug(i, col);
      for (std::size_t j = col; j <= m; ++j) aug(i, j) -= f * aug(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (!Traits::is_zero(aug(i, m))) return std::nullopt;
  std::vector<K> x(m, Traits::zero());
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug(i, m);
  return x;
}

// Monic minimal polynomial of a square matrix, low-degree-first
// coefficients: p(t) = c0 + c1 t + ... + t^d  (returned vector has the
// leading 1 included, length d+1).
template <class K>
std::vector<K> minimal_polynomial(const Matrix<K>& A) {
  using Traits = FieldTraits<K>;
  if (A.rows() != A.cols()) throw std::invalid_argument("minimal_polynomial: square matrix required");
  const std::size_t n = A.rows();
  const std::size_t len = n * n;
  SparseEliminator<K> elim(len + n + 2);
  std::vector<Matrix<K>> powers;
  powers.push_back(Matrix<K>::identity(n));
  for (std::size_t d = 0;; ++d) {
    // augmented vector: [vec(A^d) | e_d]
    std::vector<K> v = vectorize(powers.back());
    v.resize(len + n + 2, Traits::zero());
    v[len + d] = Traits::one();
    SparseRow<K> row = to_sparse(v);
    SparseRow<K> res = elim.reduce(row);
    bool matrix_part_zero = res.empty() || res.front().first >= len;
    if (matrix_part_zero) {
      // residual encodes the dependency: sum res[len+k] * A^k = 0
      std::vector<K> coeffs(d + 1, Traits::zero());
      for (auto& [c, val] : res) coeffs[c - len] = val;
      // normalize to monic (leading coefficient is that of A^d)
      K lead = coeffs[d];
      for (auto& c : coeffs) c = c / lead;
      return coeffs;
    }
    elim.insert(std::move(res));
    powers.push_back(powers.back() * A);
  }
}

// Signature (n_plus - n_minus) of an exact symmetric bilinear form, via
// diagonalization (Lagrange). Rank deficiency is allowed.
inline int symmetric_form_signature(Matrix<Rat> G) {
  const std::size_t n = G.rows();
  if (G.cols() != n) throw std::invalid_argument("signature: square matrix required");
  int sig = 0;
  std::vector<bool> done(n, false);
  for (;;) {
    // find a nonzero diagonal pivot among unprocessed indices
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && G(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // no nonzero diagonal: look for off-diagonal entry and symmetrize
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[j] && G(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      }
      if (bi == n) break;  // form is zero on the remaining space
      // row/col operation: add row bj to row bi (and same for columns)
      for (std::size_t k = 0; k < n; ++k) G(bi, k) += G(bj, k);
      for (std::size_t k = 0; k < n; ++k) G(k, bi) += G(k, bj);
      continue;
    }
    done[piv] = true;
    sig += G(piv, piv) > 0 ? 1 : -1;
    // clear row/column piv on the rest
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || G(i, piv) == 0) continue;
      Rat f = G(i, piv) / G(piv, piv);
      for (std::size_t k = 0; k < n; ++k) G(i, k) -= f * G(piv, k);
      for (std::size_t k = 0; k < n; ++k) G(k, i) -= f * G(k, piv);
    }
  }
  return sig;
}

}  // namespace cliffk
