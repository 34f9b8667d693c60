#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blade.hpp"
#include "rep.hpp"
#include "scalar.hpp"
#include "structure_algebra.hpp"

namespace cliffk {

// Report of the (v, w) -> v(x)1 + eps(x)w embedding check: the images of
// the n+m generators inside the ungraded tensor C^{0,n} (x) C^{0,m} must
// satisfy the C^{0,n+m} relations and generate a subalgebra of full
// dimension 2^{n+m}. Hypothesis failures (e.g. eps^2 = -1 for n = 2 over
// the reals) are reported as data, not errors.
struct EpsilonReport {
  bool refused = false;
  std::string refusal_reason;
  CheckReport relations;
  bool dim_checked = false;
  std::size_t expected_dim = 0;
  std::size_t generated_dim = 0;
  bool used_imaginary_unit = false;

  bool passed() const {
    return !refused && relations.passed && dim_checked && generated_dim == expected_dim;
  }
};

template <class K>
EpsilonReport epsilon_embedding_check(int n, int m) {
  constexpr bool complex_field = FieldTraits<K>::has_i;
  EpsilonReport out;
  if (m != 1 && m != 2) {
    out.refused = true;
    out.refusal_reason = "rank of W must be 1 or 2";
    return out;
  }
  if (n < 1 || n + m > 16) {
    out.refused = true;
    out.refusal_reason = "rank of V out of supported range";
    return out;
  }
  if (n % 2 != 0) {
    out.refused = true;
    out.refusal_reason = "eps only anticommutes with vectors when the rank of V is even";
    return out;
  }

  const Signature sa(0, n), sb(0, m);
  const auto T = ungraded_tensor_algebra(clifford_algebra<K>(sa), clifford_algebra<K>(sb));
  const std::size_t db = std::size_t(1) << m;
  using Vec = typename StructureConstantAlgebra<K>::Vec;

  // eps (x) f_j, with eps replaced by eps*sqrt(-1) when n = 4k+2 over C
  K eps_coeff = FieldTraits<K>::one();
  if (n % 4 == 2) {
    if constexpr (complex_field) {
      eps_coeff = FieldTraits<K>::i();
      out.used_imaginary_unit = true;
    }
    // over R this wilfully runs into the eps^2 = -1 failure
  }
  const std::size_t eps_index = (std::size_t(1) << n) - 1;  // blade f_1...f_n

  std::vector<Vec> images;
  for (int k = 0; k < n; ++k) {
    Vec v = T.zero_vec();
    v[(std::size_t(1) << k) * db] = FieldTraits<K>::one();  // f_k (x) 1
    images.push_back(std::move(v));
  }
  for (int j = 0; j < m; ++j) {
    Vec v = T.zero_vec();
    v[eps_index * db + (std::size_t(1) << j)] = eps_coeff;  // eps (x) f_j
    images.push_back(std::move(v));
  }

  // Clifford relations of C^{0,n+m} on the images
  const Vec unit = T.unit_vec();
  auto gname = [&](int k) { return "g" + std::to_string(k + 1); };
  for (int i = 0; i < n + m; ++i) {
    Vec sq = T.multiply(images[i], images[i]);
    if (!(sq == unit))
      out.relations.fail("(" + gname(i) + ")^2 != +1" +
                         (i >= n ? std::string(" (the eps^2 hypothesis fails)") : std::string()));
    for (int j = i + 1; j < n + m; ++j) {
      Vec ab = T.multiply(images[i], images[j]);
      Vec ba = T.multiply(images[j], images[i]);
      for (std::size_t k = 0; k < ab.size(); ++k) ab[k] += ba[k];
      bool zero = true;
      for (auto& c : ab)
        if (!FieldTraits<K>::is_zero(c)) {
          zero = false;
          break;
        }
      if (!zero) out.relations.fail(gname(i) + " and " + gname(j) + " do not anticommute");
    }
  }

  // dimension of the generated subalgebra: span of all subset products
  out.expected_dim = std::size_t(1) << (n + m);
  SparseEliminator<K> elim(T.dim());
  std::vector<Vec> subset_products(out.expected_dim, T.zero_vec());
  subset_products[0] = unit;
  elim.insert(to_sparse(unit));
  for (std::size_t s = 1; s < out.expected_dim; ++s) {
    int low = 0;
    while (!(s & (std::size_t(1) << low))) ++low;
    subset_products[s] = T.multiply(images[low], subset_products[s & (s - 1)]);
    elim.insert(to_sparse(subset_products[s]));
  }
  out.generated_dim = elim.rank();
  out.dim_checked = true;
  return out;
}

// The twist (v, t) -> (vt, t): given operators F_1..F_n, T satisfying the
// C^{0,n+1} relations, the transformed operators F_i' = F_i T, T' = T
// must satisfy the relations of C^{n,0} (x)^ C^{0,1}, i.e. of C^{n,1}
// with generator order (F_1'..F_n', T').
struct TwistReport {
  bool input_ok = false;
  CheckReport input;
  CheckReport transformed;

  bool passed() const { return input_ok && transformed.passed; }
};

template <class K>
TwistReport opposite_twist_check(const Rep<K>& rep) {
  TwistReport out;
  if (rep.ops.empty()) {
    out.input.fail("rep must contain at least the operator T");
    return out;
  }
  const int n = int(rep.ops.size()) - 1;
  out.input = check_clifford_relations(rep, Signature(0, n + 1));
  out.input_ok = out.input.passed;
  if (!out.input_ok) return out;

  const Matrix<K>& T = rep.ops.back();
  Rep<K> twisted;
  twisted.dim = rep.dim;
  for (int i = 0; i < n; ++i) twisted.ops.push_back(rep.ops[i] * T);
  twisted.ops.push_back(T);
  out.transformed = check_clifford_relations(twisted, Signature(n, 1));
  return out;
}

}  // namespace cliffk
