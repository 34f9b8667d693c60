#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blade.hpp"
#include "linalg.hpp"
#include "scalar.hpp"
#include "structure_algebra.hpp"

namespace cliffk {

// A module given by one operator matrix per member of a generating
// family. For Clifford modules the family is the p+q generators; for
// structure-constant algebras it is the full basis.
template <class K>
struct Rep {
  std::size_t dim = 0;
  std::vector<Matrix<K>> ops;

  Rep() = default;
  Rep(std::size_t d, std::vector<Matrix<K>> o) : dim(d), ops(std::move(o)) {}
};

struct CheckReport {
  bool passed = true;
  std::vector<std::string> failures;

  void fail(std::string what) {
    passed = false;
    failures.push_back(std::move(what));
  }
};

// Check the defining Clifford relations of `sig` on rep.ops (one matrix
// per generator, p-block first). Failures are reported, not thrown.
template <class K>
CheckReport check_clifford_relations(const Rep<K>& rep, Signature sig) {
  CheckReport report;
  const int n = sig.rank();
  if (int(rep.ops.size()) != n) {
    report.fail("expected " + std::to_string(n) + " generator matrices, got " +
                std::to_string(rep.ops.size()));
    return report;
  }
  const Matrix<K> I = Matrix<K>::identity(rep.dim);
  for (int i = 0; i < n; ++i) {
    Matrix<K> sq = rep.ops[i] * rep.ops[i];
    int want = sig.generator_square(i);
    Matrix<K> expect = want > 0 ? I : -I;
    if (!(sq == expect))
      report.fail("(" + sig.generator_name(i) + ")^2 != " + (want > 0 ? "+1" : "-1"));
    for (int j = i + 1; j < n; ++j) {
      Matrix<K> anti = rep.ops[i] * rep.ops[j] + rep.ops[j] * rep.ops[i];
      if (!anti.is_zero())
        report.fail(sig.generator_name(i) + " and " + sig.generator_name(j) +
                    " do not anticommute");
    }
  }
  return report;
}

// Image of a blade under the rep (product of generator matrices in
// ascending index order).
template <class K>
Matrix<K> blade_image(const Rep<K>& rep, Blade b) {
  Matrix<K> m = Matrix<K>::identity(rep.dim);
  for (std::size_t i = 0; i < rep.ops.size(); ++i)
    if (b & (Blade(1) << i)) m = m * rep.ops[i];
  return m;
}

// Dimension of the span of all blade images (the image algebra).
template <class K>
std::size_t image_algebra_dim(const Rep<K>& rep, Signature sig) {
  SparseEliminator<K> elim(rep.dim * rep.dim);
  const std::size_t nblades = std::size_t(1) << sig.rank();
  for (std::size_t b = 0; b < nblades; ++b) elim.insert_dense(vectorize(blade_image(rep, Blade(b))));
  return elim.rank();
}

// Full verification of a Clifford rep: relations, plus (optionally) the
// check that the image algebra has the expected block dimension.
template <class K>
CheckReport verify_rep(const Rep<K>& rep, Signature sig,
                       std::optional<std::size_t> expected_image_dim = std::nullopt) {
  CheckReport report = check_clifford_relations(rep, sig);
  if (!report.passed) return report;
  if (expected_image_dim) {
    std::size_t got = image_algebra_dim(rep, sig);
    if (got != *expected_image_dim)
      report.fail("image algebra dimension " + std::to_string(got) + ", expected " +
                  std::to_string(*expected_image_dim));
  }
  return report;
}

// Basis of Hom(A, B) = { X : X rho_A(g) = rho_B(g) X for all g }, exact.
// X has shape dim(B) x dim(A); unknowns ordered row-major, so the echelon
// basis is deterministic.
template <class K>
std::vector<Matrix<K>> hom_space(const Rep<K>& A, const Rep<K>& B) {
  if (A.ops.size() != B.ops.size())
    throw std::invalid_argument("hom_space: ambient generating family mismatch");
  const std::size_t da = A.dim, db = B.dim;
  SparseEliminator<K> elim(db * da);
  auto var = [da](std::size_t r, std::size_t c) { return r * da + c; };
  for (std::size_t g = 0; g < A.ops.size(); ++g) {
    const Matrix<K>& Ma = A.ops[g];
    const Matrix<K>& Mb = B.ops[g];
    // equation (i,j): sum_c X[i,c] Ma[c,j] - sum_r Mb[i,r] X[r,j] = 0
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        std::map<std::size_t, K> row;
        for (std::size_t c = 0; c < da; ++c)
          if (!FieldTraits<K>::is_zero(Ma(c, j))) row[var(i, c)] += Ma(c, j);
        for (std::size_t r = 0; r < db; ++r)
          if (!FieldTraits<K>::is_zero(Mb(i, r))) row[var(r, j)] -= Mb(i, r);
        SparseRow<K> srow;
        for (auto& [col, val] : row)
          if (!FieldTraits<K>::is_zero(val)) srow.emplace_back(col, val);
        elim.insert(std::move(srow));
      }
  }
  std::vector<Matrix<K>> basis;
  for (auto& v : elim.nullspace_basis()) {
    Matrix<K> X(db, da);
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t c = 0; c < da; ++c) X(r, c) = v[var(r, c)];
    basis.push_back(std::move(X));
  }
  return basis;
}

template <class K>
std::size_t intertwiner_dim(const Rep<K>& A, const Rep<K>& B) {
  return hom_space(A, B).size();
}

// Multiplicity vector of M over a complete list of simples:
// m_i = dim Hom(S_i, M) / dim End(S_i). Completeness is certified by the
// dimension bookkeeping sum m_i dim S_i = dim M.
template <class K>
std::vector<long> decompose_module(const Rep<K>& M, const std::vector<Rep<K>>& simples,
                                   const std::vector<std::size_t>& end_dims) {
  if (simples.size() != end_dims.size())
    throw std::invalid_argument("decompose_module: end_dims size mismatch");
  std::vector<long> mult(simples.size(), 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < simples.size(); ++i) {
    std::size_t h = intertwiner_dim(simples[i], M);
    if (h % end_dims[i] != 0)
      throw std::logic_error("decompose_module: Hom dimension not divisible by End dimension");
    mult[i] = long(h / end_dims[i]);
    total += mult[i] * simples[i].dim;
  }
  if (total != M.dim)
    throw std::logic_error("decompose_module: incomplete simple list (dimension bookkeeping: " +
                           std::to_string(total) + " != " + std::to_string(M.dim) + ")");
  return mult;
}

}  // namespace cliffk
