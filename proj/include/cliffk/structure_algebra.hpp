#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "blade.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace cliffk {

// A finite-dimensional Z/2-graded algebra presented by a basis, a degree
// map and exact structure constants. Products of basis elements are kept
// as sparse coefficient lists; for Clifford algebras and crossed products
// every product is a single signed basis element.
template <class K>
class StructureConstantAlgebra {
 public:
  using Traits = FieldTraits<K>;
  using Term = std::pair<std::size_t, K>;       // (basis index, coefficient)
  using Product = std::vector<Term>;            // sparse product of two basis elements
  using Vec = std::vector<K>;                   // dense coordinate vector

  StructureConstantAlgebra() = default;
  StructureConstantAlgebra(std::vector<std::string> labels, std::vector<int> degrees,
                           std::size_t unit_index)
      : labels_(std::move(labels)),
        degrees_(std::move(degrees)),
        unit_(unit_index),
        table_(labels_.size() * labels_.size()) {
    if (degrees_.size() != labels_.size()) throw std::invalid_argument("degree map size mismatch");
    for (int d : degrees_)
      if (d != 0 && d != 1) throw std::invalid_argument("degrees must be 0 or 1");
    if (unit_ >= labels_.size()) throw std::invalid_argument("unit index out of range");
  }

  std::size_t dim() const { return labels_.size(); }
  std::size_t unit_index() const { return unit_; }
  int degree(std::size_t i) const { return degrees_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  void set_product(std::size_t i, std::size_t j, Product p) {
    table_[i * dim() + j] = std::move(p);
  }
  void add_product_term(std::size_t i, std::size_t j, std::size_t k, const K& c) {
    if (Traits::is_zero(c)) return;
    table_[i * dim() + j].emplace_back(k, c);
  }
  const Product& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec zero_vec() const { return Vec(dim(), Traits::zero()); }
  Vec unit_vec() const {
    Vec v = zero_vec();
    v[unit_] = Traits::one();
    return v;
  }
  Vec basis_vec(std::size_t i) const {
    Vec v = zero_vec();
    v[i] = Traits::one();
    return v;
  }

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec r = zero_vec();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (Traits::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (Traits::is_zero(y[j])) continue;
        K c = x[i] * y[j];
        for (auto& [k, v] : product(i, j)) r[k] += c * v;
      }
    }
    return r;
  }

  // Matrix of left multiplication by x on the algebra.
  Matrix<K> left_multiplication(const Vec& x) const {
    Matrix<K> m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (Traits::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        for (auto& [k, v] : product(i, j)) m(k, j) += x[i] * v;
    }
    return m;
  }

  Matrix<K> right_multiplication(const Vec& x) const {
    Matrix<K> m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      if (Traits::is_zero(x[j])) continue;
      for (std::size_t i = 0; i < dim(); ++i)
        for (auto& [k, v] : product(i, j)) m(k, i) += x[j] * v;
    }
    return m;
  }

  // tau_k = tr L_{b_k}; the trace bilinear form is
  // T(i,j) = tr L_{b_i b_j} = sum over product(i,j) of c * tau_k.
  std::vector<K> trace_vector() const {
    std::vector<K> tau(dim(), Traits::zero());
    for (std::size_t i = 0; i < dim(); ++i) tau[i] = trace_left_basis(i);
    return tau;
  }

  Matrix<K> trace_form() const {
    std::vector<K> tau = trace_vector();
    Matrix<K> T(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        K t = Traits::zero();
        for (auto& [k, c] : product(i, j)) t += c * tau[k];
        T(i, j) = std::move(t);
      }
    return T;
  }

  // Checks the unit, degree multiplicativity, and associativity on all
  // basis triples. Throws on the first violation.
  void validate(bool check_associativity = true) const {
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!is_single(product(unit_, i), i) || !is_single(product(i, unit_), i))
        throw std::logic_error("unit element fails on basis index " + std::to_string(i));
      for (std::size_t j = 0; j < dim(); ++j) {
        int d = (degrees_[i] + degrees_[j]) & 1;
        for (auto& [k, c] : product(i, j))
          if (degrees_[k] != d)
            throw std::logic_error("degree map not multiplicative at (" + labels_[i] + ", " +
                                   labels_[j] + ")");
      }
    }
    if (!check_associativity) return;
    if (!associativity_holds())
      throw std::logic_error("associativity fails on a basis triple");
  }

  bool associativity_holds() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        const Product& ij = product(i, j);
        for (std::size_t k = 0; k < dim(); ++k) {
          std::map<std::size_t, K> lhs, rhs;
          for (auto& [m, c] : ij)
            for (auto& [r, v] : product(m, k)) accumulate(lhs, r, c * v);
          for (auto& [m, c] : product(j, k))
            for (auto& [r, v] : product(i, m)) accumulate(rhs, r, c * v);
          if (lhs != rhs) return false;
        }
      }
    return true;
  }

  // Exact basis of the (ungraded) center: all x with x b_i = b_i x.
  std::vector<Vec> center_basis() const {
    const std::size_t n = dim();
    // rows indexed by (i, k): sum_j x_j (c_{ji}^k - c_{ij}^k) = 0
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, K>> rows;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        for (auto& [k, c] : product(j, i)) accumulate(rows[{i, k}], j, c);
        for (auto& [k, c] : product(i, j)) accumulate(rows[{i, k}], j, -c);
      }
    SparseEliminator<K> elim(n);
    for (auto& [key, row] : rows) {
      SparseRow<K> r;
      for (auto& [j, c] : row)
        if (!Traits::is_zero(c)) r.emplace_back(j, c);
      elim.insert(std::move(r));
    }
    return elim.nullspace_basis();
  }

  std::string vec_str(const Vec& v) const {
    std::string s;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (Traits::is_zero(v[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + Traits::str(v[i]) + ")*" + labels_[i];
    }
    return s.empty() ? "0" : s;
  }

 private:
  static void accumulate(std::map<std::size_t, K>& m, std::size_t k, const K& c) {
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) m.erase(it);
    }
  }

  static bool is_single(const Product& p, std::size_t k) {
    return p.size() == 1 && p.front().first == k && p.front().second == Traits::one();
  }

  K trace_left_basis(std::size_t i) const {
    K t = Traits::zero();
    for (std::size_t j = 0; j < dim(); ++j)
      for (auto& [k, c] : product(i, j))
        if (k == j) t += c;
    return t;
  }

  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::size_t unit_ = 0;
  std::vector<Product> table_;
};

// The Clifford algebra C^{p,q} as a structure-constant algebra on the
// blade basis (ascending mask order).
template <class K>
StructureConstantAlgebra<K> clifford_algebra(Signature sig) {
  const std::size_t n = std::size_t(1) << sig.rank();
  std::vector<std::string> labels(n);
  std::vector<int> degrees(n);
  for (std::size_t b = 0; b < n; ++b) {
    labels[b] = blade_name(Blade(b), sig);
    degrees[b] = blade_degree(Blade(b));
  }
  StructureConstantAlgebra<K> A(std::move(labels), std::move(degrees), 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto [sign, r] = blade_product(Blade(a), Blade(b), sig);
      K c = FieldTraits<K>::one();
      if (sign < 0) c = -c;
      A.add_product_term(a, b, r, c);
    }
  return A;
}

// Ground field as a trivially graded one-dimensional algebra.
template <class K>
StructureConstantAlgebra<K> ground_field_algebra() {
  StructureConstantAlgebra<K> A({"1"}, {0}, 0);
  A.add_product_term(0, 0, 0, FieldTraits<K>::one());
  return A;
}

// Tensor product of graded algebras. With `graded` the multiplication
// carries the Koszul sign: (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'.
// Basis order is A-major: index = i * dim(B) + j.
template <class K>
StructureConstantAlgebra<K> tensor_algebra(const StructureConstantAlgebra<K>& A,
                                           const StructureConstantAlgebra<K>& B, bool graded) {
  const std::size_t da = A.dim(), db = B.dim();
  std::vector<std::string> labels(da * db);
  std::vector<int> degrees(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      labels[i * db + j] = A.label(i) + (graded ? "(x)" : "(.)") + B.label(j);
      degrees[i * db + j] = (A.degree(i) + B.degree(j)) & 1;
    }
  StructureConstantAlgebra<K> T(std::move(labels), std::move(degrees),
                                A.unit_index() * db + B.unit_index());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t ip = 0; ip < da; ++ip)
        for (std::size_t jp = 0; jp < db; ++jp) {
          bool flip = graded && (B.degree(j) & A.degree(ip));
          for (auto& [ka, ca] : A.product(i, ip))
            for (auto& [kb, cb] : B.product(j, jp)) {
              K c = ca * cb;
              if (flip) c = -c;
              T.add_product_term(i * db + j, ip * db + jp, ka * db + kb, c);
            }
        }
  return T;
}

template <class K>
StructureConstantAlgebra<K> graded_tensor_algebra(const StructureConstantAlgebra<K>& A,
                                                  const StructureConstantAlgebra<K>& B) {
  return tensor_algebra(A, B, true);
}

template <class K>
StructureConstantAlgebra<K> ungraded_tensor_algebra(const StructureConstantAlgebra<K>& A,
                                                    const StructureConstantAlgebra<K>& B) {
  return tensor_algebra(A, B, false);
}

// The even-degree blade span of C^{p,q} with induced structure constants
// and trivial grading; dimension 2^{p+q-1}.
template <class K>
StructureConstantAlgebra<K> even_subalgebra(Signature sig) {
  if (sig.rank() < 1) throw std::invalid_argument("even_subalgebra requires rank >= 1");
  const std::size_t n = std::size_t(1) << sig.rank();
  std::vector<Blade> even;
  std::map<Blade, std::size_t> index;
  for (std::size_t b = 0; b < n; ++b)
    if (blade_degree(Blade(b)) == 0) {
      index[Blade(b)] = even.size();
      even.push_back(Blade(b));
    }
  std::vector<std::string> labels;
  labels.reserve(even.size());
  for (Blade b : even) labels.push_back(blade_name(b, sig));
  StructureConstantAlgebra<K> A(std::move(labels), std::vector<int>(even.size(), 0), 0);
  for (std::size_t i = 0; i < even.size(); ++i)
    for (std::size_t j = 0; j < even.size(); ++j) {
      auto [sign, r] = blade_product(even[i], even[j], sig);
      K c = FieldTraits<K>::one();
      if (sign < 0) c = -c;
      A.add_product_term(i, j, index.at(r), c);
    }
  return A;
}

}  // namespace cliffk
