#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffk {

using Int = mpz_class;

// Dense integer matrix; rows index target-algebra simples, columns index
// source-algebra simples when used as a restriction map.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("integer matrix shape mismatch");
    IntMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Int& v = x(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("integer matrix apply: length mismatch");
    std::vector<Int> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  // Exact determinant (fraction-free Bareiss).
  Int det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t piv = k + 1;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
      prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct SmithNormalForm {
  IntMatrix U, D, V;  // D = U * M * V, U and V unimodular
};

// Smith normal form with unimodular transforms and a divisibility chain
// d_1 | d_2 | ..., all diagonal entries nonnegative.
inline SmithNormalForm smith_normal_form(const IntMatrix& M) {
  const std::size_t r = M.rows(), c = M.cols();
  SmithNormalForm s{IntMatrix::identity(r), M, IntMatrix::identity(c)};
  IntMatrix& D = s.D;
  IntMatrix& U = s.U;
  IntMatrix& V = s.V;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < c; ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < r; ++j) std::swap(U(a, j), U(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < r; ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < c; ++i) std::swap(V(i, a), V(i, b));
  };
  auto addmul_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < c; ++j) D(dst, j) += f * D(src, j);
    for (std::size_t j = 0; j < r; ++j) U(dst, j) += f * U(src, j);
  };
  auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < r; ++i) D(i, dst) += f * D(i, src);
    for (std::size_t i = 0; i < c; ++i) V(i, dst) += f * V(i, src);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < c; ++j) D(i, j) = -D(i, j);
    for (std::size_t j = 0; j < r; ++j) U(i, j) = -U(i, j);
  };

  // clear the row and column at position t; afterwards D(t,t) is the
  // only nonzero in row/column t (it is the gcd of the block it swept)
  auto reduce_at = [&](std::size_t t) {
    for (;;) {
      bool again = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);  // truncated division keeps remainders small
        if (q != 0) addmul_row(i, t, -q);
        if (D(i, t) != 0) {
          swap_rows(t, i);
          again = true;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        if (q != 0) addmul_col(j, t, -q);
        if (D(t, j) != 0) {
          swap_cols(t, j);
          again = true;
        }
      }
      if (!again) break;
    }
    if (D(t, t) < 0) negate_row(t);
  };

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    // find a nonzero pivot of minimal absolute value in the trailing block
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (D(i, j) == 0) continue;
        if (!found || cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    reduce_at(t);
  }

  // enforce the divisibility chain: fold d_{t+1} into column t and
  // re-reduce; the pivot becomes gcd, the successor lcm
  for (;;) {
    bool stable = true;
    for (std::size_t t = 0; t + 1 < steps; ++t) {
      if (D(t, t) == 0 || D(t + 1, t + 1) % D(t, t) == 0) continue;
      stable = false;
      addmul_col(t, t + 1, 1);
      reduce_at(t);
      reduce_at(t + 1);
    }
    if (stable) break;
  }
  return s;
}

// A finitely generated abelian group in canonical form: free rank plus
// invariant factors d_1 | d_2 | ..., each >= 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<unsigned long> invariant_factors;

  bool operator==(const AbelianGroup&) const = default;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }

  // canonical rendering: "0", "Z", "Z^2 + Z/2", ...
  std::string str() const {
    if (is_trivial()) return "0";
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (auto d : invariant_factors) {
      if (!s.empty()) s += " + ";
      s += "Z/" + std::to_string(d);
    }
    return s;
  }
};

// Cokernel of M : Z^cols -> Z^rows, in canonical form.
inline AbelianGroup cokernel_presentation(const IntMatrix& M) {
  SmithNormalForm s = smith_normal_form(M);
  AbelianGroup g;
  std::size_t rank = 0;
  for (std::size_t t = 0; t < std::min(M.rows(), M.cols()); ++t) {
    const Int& d = s.D(t, t);
    if (d == 0) continue;
    ++rank;
    if (d >= 2) g.invariant_factors.push_back(d.get_ui());
  }
  g.free_rank = M.rows() - rank;
  return g;
}

}  // namespace cliffk
