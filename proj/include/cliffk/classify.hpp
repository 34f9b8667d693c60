#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blade.hpp"
#include "linalg.hpp"
#include "rep.hpp"
#include "roots.hpp"
#include "scalar.hpp"
#include "structure_algebra.hpp"

namespace cliffk {

// Direct constructions are capped here; anything larger is expected to
// route through morita_reduce first.
inline constexpr int kMaxDirectRankReal = 12;
inline constexpr int kMaxDirectRankComplex = 14;

enum class DivisionType { R, C, H };

inline const char* division_name(DivisionType t) {
  switch (t) {
    case DivisionType::R: return "R";
    case DivisionType::C: return "C";
    default: return "H";
  }
}

inline std::size_t division_dim(DivisionType t) {
  switch (t) {
    case DivisionType::R: return 1;
    case DivisionType::C: return 2;
    default: return 4;
  }
}

// An irreducible module together with explicit generators of its
// endomorphism algebra (empty for type R; {J} with J^2=-1 for type C;
// {I, J} anticommuting for type H). Over the complex field End is the
// scalars and end_gens stays empty.
template <class K>
struct SimpleRep {
  Rep<K> rep;
  std::vector<Matrix<K>> end_gens;

  std::size_t dim() const { return rep.dim; }
  std::size_t end_dim() const { return std::size_t(1) << end_gens.size(); }
};

struct SimpleInfo {
  std::size_t dim;      // over the ground field
  std::size_t end_dim;  // 1, 2 or 4
};

struct ClassificationReport {
  std::vector<SimpleInfo> simples;
  std::size_t center_dim = 0;
  std::size_t algebra_dim = 0;

  bool wedderburn_holds() const {
    std::size_t sum = 0;
    for (auto& s : simples) {
      if (s.dim * s.dim % s.end_dim != 0) return false;
      sum += s.dim * s.dim / s.end_dim;
    }
    return sum == algebra_dim;
  }
};

namespace detail {

template <class K>
Matrix<K> mat2(long a, long b, long c, long d) {
  Matrix<K> m(2, 2);
  m(0, 0) = K(a);
  m(0, 1) = K(b);
  m(1, 0) = K(c);
  m(1, 1) = K(d);
  return m;
}

template <class K>
Matrix<K> sigma3() { return mat2<K>(1, 0, 0, -1); }
template <class K>
Matrix<K> sigma1() { return mat2<K>(0, 1, 1, 0); }
template <class K>
Matrix<K> rot90() { return mat2<K>(0, -1, 1, 0); }  // squares to -1

// Left/right quaternion multiplications on R^4 with basis (1, i, j, k).
inline Matrix<Rat> quat_mult(int unit, bool left) {
  // multiplication table of (1,i,j,k)
  static const int tab[4][4][2] = {
      // {target index, sign} for row*col
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}}};
  Matrix<Rat> m(4, 4);
  for (int x = 0; x < 4; ++x) {
    int row = left ? unit : x;
    int col = left ? x : unit;
    m(tab[row][col][0], x) = Rat(tab[row][col][1]);
  }
  return m;
}

template <class K>
SimpleRep<K> one_dim(std::vector<long> values) {
  SimpleRep<K> s;
  s.rep.dim = 1;
  for (long v : values) {
    Matrix<K> m(1, 1);
    m(0, 0) = K(v);
    s.rep.ops.push_back(std::move(m));
  }
  return s;
}

// Column-space basis of an idempotent P, then the compression of each
// operator (all assumed to commute with P) to that invariant subspace.
template <class K>
struct Compressor {
  SparseEliminator<K> elim;
  std::vector<std::vector<K>> basis;

  explicit Compressor(const Matrix<K>& P) : elim(P.rows()) {
    for (std::size_t j = 0; j < P.cols(); ++j) elim.insert_dense(P.col(j));
    basis = elim.span_basis();
  }

  Matrix<K> compress(const Matrix<K>& op) const {
    Matrix<K> m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto coords = elim.coordinates(op.apply(basis[j]));
      if (!coords) throw std::logic_error("compression: subspace not invariant");
      for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = (*coords)[i];
    }
    return m;
  }
};

}  // namespace detail

// The explicit base models of the recursion. Real base set: C^{0,1},
// C^{0,2}, C^{1,0}, C^{2,0}; complex base set: Cl_1, Cl_2 (as C^{0,1},
// C^{0,2}). Anything else is an error per contract.
template <class K>
std::vector<SimpleRep<K>> base_irreps(Signature sig) {
  using namespace detail;
  constexpr bool complex_field = FieldTraits<K>::has_i;
  if (sig.p == 0 && sig.q == 1) {
    return {one_dim<K>({+1}), one_dim<K>({-1})};
  }
  if (sig.p == 0 && sig.q == 2) {
    SimpleRep<K> s;
    s.rep = Rep<K>(2, {sigma3<K>(), sigma1<K>()});
    return {std::move(s)};
  }
  if constexpr (!complex_field) {
    if (sig.p == 1 && sig.q == 0) {
      SimpleRep<K> s;
      s.rep = Rep<K>(2, {rot90<K>()});
      s.end_gens = {rot90<K>()};
      return {std::move(s)};
    }
    if (sig.p == 2 && sig.q == 0) {
      SimpleRep<K> s;
      s.rep = Rep<K>(4, {quat_mult(1, true), quat_mult(2, true)});
      s.end_gens = {quat_mult(1, false), quat_mult(2, false)};
      return {std::move(s)};
    }
  }
  throw std::invalid_argument("signature outside the base set: " + sig.str());
}

namespace detail {

template <class K>
class IrrepBuilder {
 public:
  const std::vector<SimpleRep<K>>& get(Signature sig) {
    auto key = std::make_pair(sig.p, sig.q);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<SimpleRep<K>> v = build(sig);
    order_simples(v, sig);
    return memo_.emplace(key, std::move(v)).first->second;
  }

 private:
  static constexpr bool complex_field = FieldTraits<K>::has_i;

  std::vector<SimpleRep<K>> build(Signature sig) {
    const int bound = complex_field ? kMaxDirectRankComplex : kMaxDirectRankReal;
    if (sig.rank() > bound)
      throw std::invalid_argument("rank bound exceeded for direct construction (" + sig.str() +
                                  "); route through morita_reduce");
    if (sig.rank() == 0) {
      SimpleRep<K> s;
      s.rep.dim = 1;
      return {std::move(s)};
    }
    if constexpr (complex_field) {
      // over C the signature only matters through generator scaling by i
      if (sig.p > 0) {
        std::vector<SimpleRep<K>> out = get(Signature(0, sig.rank()));
        for (auto& s : out)
          for (int i = 0; i < sig.p; ++i) s.rep.ops[i] = FieldTraits<K>::i() * s.rep.ops[i];
        return out;
      }
      if (sig.q <= 2) return base_irreps<K>(sig);
      return lift_two_positive(get(Signature(0, sig.q - 2)), sig.q);
    } else {
      if ((sig.p == 0 && (sig.q == 1 || sig.q == 2)) ||
          (sig.q == 0 && (sig.p == 1 || sig.p == 2)))
        return base_irreps<K>(sig);
      if (sig.p >= 1 && sig.q >= 1) return lift_mixed(get(Signature(sig.p - 1, sig.q - 1)), sig);
      if (sig.p == 0) return lift_two_positive_real(get(Signature(sig.q - 2, 0)), sig.q);
      return lift_two_negative(get(Signature(0, sig.p - 2)), sig.p);
    }
  }

  // C^{p,q} ~ C^{p-1,q-1} (x) M_2(R): append one negative and one
  // positive generator acting on the doubled module.
  static std::vector<SimpleRep<K>> lift_mixed(const std::vector<SimpleRep<K>>& src, Signature sig) {
    std::vector<SimpleRep<K>> out;
    for (const auto& s : src) {
      const Matrix<K> I = Matrix<K>::identity(s.rep.dim);
      SimpleRep<K> t;
      t.rep.dim = s.rep.dim * 2;
      for (int i = 0; i < sig.p - 1; ++i) t.rep.ops.push_back(s.rep.ops[i].kron(sigma3<K>()));
      t.rep.ops.push_back(I.kron(rot90<K>()));
      for (int j = 0; j < sig.q - 1; ++j)
        t.rep.ops.push_back(s.rep.ops[sig.p - 1 + j].kron(sigma3<K>()));
      t.rep.ops.push_back(I.kron(sigma1<K>()));
      for (auto& u : s.end_gens) t.end_gens.push_back(u.kron(Matrix<K>::identity(2)));
      out.push_back(std::move(t));
    }
    return out;
  }

  // C^{0,q} ~ C^{q-2,0} (x) C^{0,2}; the C^{0,2}-factor is split, so each
  // source simple stays simple on the doubled space.
  static std::vector<SimpleRep<K>> lift_two_positive_real(const std::vector<SimpleRep<K>>& src,
                                                          int q) {
    std::vector<SimpleRep<K>> out;
    const Matrix<K> s31 = sigma3<K>() * sigma1<K>();  // squares to -1
    for (const auto& s : src) {
      const Matrix<K> I = Matrix<K>::identity(s.rep.dim);
      SimpleRep<K> t;
      t.rep.dim = s.rep.dim * 2;
      t.rep.ops.push_back(I.kron(sigma3<K>()));
      t.rep.ops.push_back(I.kron(sigma1<K>()));
      for (int i = 0; i < q - 2; ++i) t.rep.ops.push_back(s.rep.ops[i].kron(s31));
      for (auto& u : s.end_gens) t.end_gens.push_back(u.kron(Matrix<K>::identity(2)));
      out.push_back(std::move(t));
    }
    return out;
  }

  // Complex Cl_q ~ Cl_{q-2} (x) M_2(C) via f_{2+i} = f_i (x) i*f_1*f_2.
  static std::vector<SimpleRep<K>> lift_two_positive(const std::vector<SimpleRep<K>>& src, int q) {
    std::vector<SimpleRep<K>> out;
    Matrix<K> is31 = sigma3<K>() * sigma1<K>();
    is31 = FieldTraits<K>::i() * is31;  // squares to +1 over C
    for (const auto& s : src) {
      const Matrix<K> I = Matrix<K>::identity(s.rep.dim);
      SimpleRep<K> t;
      t.rep.dim = s.rep.dim * 2;
      t.rep.ops.push_back(I.kron(sigma3<K>()));
      t.rep.ops.push_back(I.kron(sigma1<K>()));
      for (int i = 0; i < q - 2; ++i) t.rep.ops.push_back(s.rep.ops[i].kron(is31));
      out.push_back(std::move(t));
    }
    return out;
  }

  // C^{p,0} ~ C^{0,p-2} (x) C^{2,0}: the quaternionic factor can make the
  // naive tensor module reducible; we split it with explicit idempotents
  // built from the tracked endomorphism generators.
  static std::vector<SimpleRep<K>> lift_two_negative(const std::vector<SimpleRep<K>>& src, int p) {
    static_assert(!complex_field);
    std::vector<SimpleRep<K>> out;
    const Matrix<K> Li = quat_mult(1, true), Lj = quat_mult(2, true);
    const Matrix<K> Lk = Li * Lj;
    const Matrix<K> Ri = quat_mult(1, false), Rj = quat_mult(2, false);
    for (const auto& s : src) {
      const std::size_t d = s.rep.dim;
      const Matrix<K> I = Matrix<K>::identity(d);
      const Matrix<K> I4 = Matrix<K>::identity(4);
      std::vector<Matrix<K>> ops;
      ops.push_back(I.kron(Li));
      ops.push_back(I.kron(Lj));
      for (int i = 0; i < p - 2; ++i) ops.push_back(s.rep.ops[i].kron(Lk));

      SimpleRep<K> t;
      if (s.end_gens.empty()) {
        // End = R (x) H = H: already simple
        t.rep = Rep<K>(4 * d, std::move(ops));
        t.end_gens = {I.kron(Ri), I.kron(Rj)};
      } else if (s.end_gens.size() == 1) {
        // End = C (x) H = M_2(C): halves, each of type C
        const Matrix<K>& J = s.end_gens[0];
        Matrix<K> inv = J.kron(Ri);  // squares to +1, commutes with the action
        Matrix<K> P = Rat(1, 2) * (Matrix<K>::identity(4 * d) + inv);
        Compressor<K> comp(P);
        std::vector<Matrix<K>> cops;
        for (auto& op : ops) cops.push_back(comp.compress(op));
        t.rep = Rep<K>(comp.basis.size(), std::move(cops));
        t.end_gens = {comp.compress(J.kron(I4))};
      } else {
        // End = H (x) H = M_4(R): quarters of type R
        const Matrix<K>& Is = s.end_gens[0];
        const Matrix<K>& Js = s.end_gens[1];
        Matrix<K> id = Matrix<K>::identity(4 * d);
        Matrix<K> P1 = Rat(1, 2) * (id + Is.kron(Ri));
        Matrix<K> P2 = Rat(1, 2) * (id + Js.kron(Rj));
        Matrix<K> P = P1 * P2;
        Compressor<K> comp(P);
        std::vector<Matrix<K>> cops;
        for (auto& op : ops) cops.push_back(comp.compress(op));
        t.rep = Rep<K>(comp.basis.size(), std::move(cops));
      }
      out.push_back(std::move(t));
    }
    return out;
  }

  // Deterministic order: by dimension, then by the lexicographic vector
  // of blade-image traces.
  static void order_simples(std::vector<SimpleRep<K>>& v, Signature sig) {
    if (v.size() < 2) return;
    std::vector<std::pair<std::vector<K>, std::size_t>> keys;
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
      std::vector<K> fp;
      const std::size_t nblades = std::size_t(1) << sig.rank();
      for (std::size_t b = 0; b < nblades; ++b) fp.push_back(blade_image(v[idx].rep, Blade(b)).trace());
      keys.emplace_back(std::move(fp), idx);
    }
    std::stable_sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
      if (v[a.second].dim() != v[b.second].dim()) return v[a.second].dim() < v[b.second].dim();
      return a.first < b.first;
    });
    std::vector<SimpleRep<K>> sorted;
    for (auto& [fp, idx] : keys) sorted.push_back(std::move(v[idx]));
    v = std::move(sorted);
  }

  std::map<std::pair<int, int>, std::vector<SimpleRep<K>>> memo_;
};

}  // namespace detail

// Complete list of pairwise non-isomorphic irreducibles of C^{p,q},
// deterministically ordered, with relations and the Wedderburn identity
// verified.
template <class K>
std::vector<SimpleRep<K>> irreps(Signature sig) {
  detail::IrrepBuilder<K> builder;
  std::vector<SimpleRep<K>> out = builder.get(sig);
  std::size_t wedderburn = 0;
  for (auto& s : out) {
    CheckReport rels = check_clifford_relations(s.rep, sig);
    if (!rels.passed)
      throw std::logic_error("irreps(" + sig.str() + "): relations fail: " + rels.failures.front());
    wedderburn += s.dim() * s.dim() / s.end_dim();
  }
  if (wedderburn != (std::size_t(1) << sig.rank()))
    throw std::logic_error("irreps(" + sig.str() + "): Wedderburn identity fails");
  return out;
}

// Center dimension of C^{p,q}: blades commuting with every generator.
inline std::size_t clifford_center_dim(Signature sig) {
  const std::size_t nblades = std::size_t(1) << sig.rank();
  std::size_t count = 0;
  for (std::size_t b = 0; b < nblades; ++b) {
    bool central = true;
    for (int i = 0; i < sig.rank() && central; ++i) {
      Blade g = Blade(1) << i;
      auto bg = blade_product(Blade(b), g, sig);
      auto gb = blade_product(g, Blade(b), sig);
      central = bg.result == gb.result && bg.sign == gb.sign;
    }
    if (central) ++count;
  }
  return count;
}

// Classification of C^{p,q} via the verified irreducible list. End
// dimensions are detected from the computed intertwiner spaces, not from
// construction metadata.
template <class K>
ClassificationReport classify_signature(Signature sig) {
  std::vector<SimpleRep<K>> simples = irreps<K>(sig);
  ClassificationReport rep;
  rep.algebra_dim = std::size_t(1) << sig.rank();
  rep.center_dim = clifford_center_dim(sig);
  for (auto& s : simples) {
    std::size_t end_dim = intertwiner_dim(s.rep, s.rep);
    if (end_dim != s.end_dim())
      throw std::logic_error("classify(" + sig.str() + "): End dimension mismatch");
    rep.simples.push_back({s.dim(), end_dim});
  }
  if (!rep.wedderburn_holds())
    throw std::logic_error("classify(" + sig.str() + "): Wedderburn identity fails");
  return rep;
}

// ---------------------------------------------------------------------
// General structure-constant algebra classification (semisimple over the
// ground field, certified a posteriori). Works by splitting the center
// with exact idempotents and reading each block's division type off the
// trace form; no explicit simple modules are constructed.

namespace detail {

// Minimal polynomial of w within the unital corner eAe (e idempotent,
// w in eAe; e acts as the unit). Krylov with augmented dependency
// tracking; exact.
template <class K>
std::vector<K> corner_min_poly(const StructureConstantAlgebra<K>& A,
                               const typename StructureConstantAlgebra<K>::Vec& e,
                               const typename StructureConstantAlgebra<K>::Vec& w) {
  using Traits = FieldTraits<K>;
  const std::size_t n = A.dim();
  const std::size_t aug = n + 2;
  SparseEliminator<K> elim(n + aug);
  std::vector<typename StructureConstantAlgebra<K>::Vec> powers = {e};
  for (std::size_t d = 0;; ++d) {
    std::vector<K> v = powers.back();
    v.resize(n + aug, Traits::zero());
    v[n + d] = Traits::one();
    SparseRow<K> res = elim.reduce(to_sparse(v));
    if (res.empty() || res.front().first >= n) {
      std::vector<K> coeffs(d + 1, Traits::zero());
      for (auto& [c, val] : res) coeffs[c - n] = val;
      K lead = coeffs[d];
      for (auto& c : coeffs) c = c / lead;
      return coeffs;
    }
    elim.insert(std::move(res));
    powers.push_back(A.multiply(powers.back(), w));
  }
}

// Evaluate a polynomial at an algebra element.
template <class K>
typename StructureConstantAlgebra<K>::Vec poly_at_element(
    const StructureConstantAlgebra<K>& A, const std::vector<K>& poly,
    const typename StructureConstantAlgebra<K>::Vec& x) {
  auto acc = A.zero_vec();
  for (std::size_t k = poly.size(); k-- > 0;) {
    acc = A.multiply(acc, x);
    acc[A.unit_index()] += poly[k];
  }
  return acc;
}

template <class K>
std::vector<K> poly_mul(const std::vector<K>& a, const std::vector<K>& b) {
  std::vector<K> r(a.size() + b.size() - 1, FieldTraits<K>::zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// CRT idempotent polynomials for a monic polynomial split into pairwise
// coprime monic factors f_1..f_k: q_i = 1 mod f_i, 0 mod f_j. Computed by
// Lagrange-style inversion: q_i = (mu/f_i) * inverse of (mu/f_i) mod f_i.
template <class K>
std::vector<std::vector<K>> crt_idempotent_polys(const std::vector<std::vector<K>>& factors) {
  // polynomial helpers (dense, low-degree-first)
  auto trim = [](std::vector<K> p) {
    while (p.size() > 1 && FieldTraits<K>::is_zero(p.back())) p.pop_back();
    return p;
  };
  auto rem = [&](std::vector<K> a, const std::vector<K>& b) {
    a = trim(std::move(a));
    while (a.size() >= b.size() && !(a.size() == 1 && FieldTraits<K>::is_zero(a[0]))) {
      K f = a.back() / b.back();
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      a = trim(std::move(a));
      if (a.size() < b.size()) break;
    }
    return a;
  };
  // extended gcd over K[t] to invert g modulo f (g, f coprime)
  auto inverse_mod = [&](std::vector<K> g, const std::vector<K>& f) {
    std::vector<K> r0 = f, r1 = rem(std::move(g), f);
    std::vector<K> s0 = {FieldTraits<K>::zero()}, s1 = {FieldTraits<K>::one()};
    while (!(r1.size() == 1 && FieldTraits<K>::is_zero(r1[0]))) {
      // quotient of r0 by r1
      std::vector<K> q(std::max<std::size_t>(1, r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1),
                       FieldTraits<K>::zero());
      std::vector<K> a = r0;
      while (a.size() >= r1.size() && !(a.size() == 1 && FieldTraits<K>::is_zero(a[0]))) {
        K fac = a.back() / r1.back();
        std::size_t off = a.size() - r1.size();
        q[off] += fac;
        for (std::size_t i = 0; i < r1.size(); ++i) a[off + i] -= fac * r1[i];
        a = trim(std::move(a));
        if (a.size() < r1.size()) break;
      }
      std::vector<K> s2 = s0;
      {
        std::vector<K> qs = poly_mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), FieldTraits<K>::zero());
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        s2 = trim(std::move(s2));
      }
      r0 = r1;
      r1 = a;
      s0 = s1;
      s1 = s2;
    }
    // r1 is a nonzero constant: scale
    K inv = FieldTraits<K>::one() / r1[0];
    for (auto& c : s1) c = c * inv;
    return rem(std::move(s1), f);
  };

  std::vector<K> mu = {FieldTraits<K>::one()};
  for (auto& f : factors) mu = poly_mul(mu, f);
  std::vector<std::vector<K>> out;
  for (auto& f : factors) {
    // h = mu / f (exact division)
    std::vector<K> h(mu.size() - f.size() + 1, FieldTraits<K>::zero());
    std::vector<K> a = mu;
    for (std::size_t k = h.size(); k-- > 0;) {
      K c = a[k + f.size() - 1] / f.back();
      h[k] = c;
      for (std::size_t i = 0; i < f.size(); ++i) a[k + i] -= c * f[i];
    }
    std::vector<K> hinv = inverse_mod(h, f);
    out.push_back(poly_mul(h, hinv));  // reduce mod mu implicitly at evaluation
  }
  return out;
}

}  // namespace detail

// Primitive central idempotents of a semisimple algebra, found by
// splitting minimal polynomials of central elements over the ground
// field. Throws if the available candidates cannot separate the center
// (e.g. a block whose center is a proper field extension).
template <class K>
std::vector<typename StructureConstantAlgebra<K>::Vec> central_idempotents(
    const StructureConstantAlgebra<K>& A) {
  using Vec = typename StructureConstantAlgebra<K>::Vec;
  std::vector<Vec> center = A.center_basis();
  std::vector<Vec> blocks = {A.unit_vec()};
  // dimension of Z*e
  auto center_dim_under = [&](const Vec& e) {
    SparseEliminator<K> elim(A.dim());
    for (auto& z : center) elim.insert(to_sparse(A.multiply(z, e)));
    return elim.rank();
  };
  for (auto& z : center) {
    std::vector<Vec> next;
    for (auto& e : blocks) {
      if (center_dim_under(e) <= 1) {
        next.push_back(e);
        continue;
      }
      Vec w = A.multiply(z, e);
      std::vector<K> mu = detail::corner_min_poly(A, e, w);
      if (mu.size() <= 2) {
        next.push_back(e);  // w acts as a scalar on this block: no refinement
        continue;
      }
      RootSplit<K> split = field_roots(mu);
      if (split.roots.empty()) {
        next.push_back(e);
        continue;
      }
      // group repeated roots into (t - r)^m factors, keep the residual
      std::vector<std::vector<K>> factors;
      std::map<std::size_t, std::size_t> mult;  // index into distinct roots
      std::vector<K> distinct;
      for (auto& r : split.roots) {
        bool foundr = false;
        for (std::size_t i = 0; i < distinct.size(); ++i)
          if (distinct[i] == r) {
            ++mult[i];
            foundr = true;
            break;
          }
        if (!foundr) {
          distinct.push_back(r);
          mult[distinct.size() - 1] = 1;
        }
      }
      for (std::size_t i = 0; i < distinct.size(); ++i) {
        std::vector<K> f = {-distinct[i], FieldTraits<K>::one()};
        std::vector<K> fm = {FieldTraits<K>::one()};
        for (std::size_t m = 0; m < mult[i]; ++m) fm = detail::poly_mul(fm, f);
        factors.push_back(fm);
      }
      if (split.residual.size() > 1) factors.push_back(split.residual);
      if (factors.size() < 2) {
        next.push_back(e);
        continue;
      }
      auto qpolys = detail::crt_idempotent_polys(factors);
      for (auto& qp : qpolys) {
        Vec q = detail::poly_at_element(A, qp, w);
        q = A.multiply(q, e);  // stay inside the corner
        // discard zero pieces
        bool zero = true;
        for (auto& c : q)
          if (!FieldTraits<K>::is_zero(c)) {
            zero = false;
            break;
          }
        if (!zero) next.push_back(std::move(q));
      }
    }
    blocks = std::move(next);
  }
  for (auto& e : blocks)
    if (center_dim_under(e) > 1 && FieldTraits<K>::tag == Field::complex)
      throw std::runtime_error(
          "central splitting failed: block center not split over Q(i)");
  return blocks;
}

// Classification of a general semisimple structure-constant algebra.
// Real blocks are typed by the signature of the exact trace form;
// complex blocks must split over Q(i).
template <class K>
ClassificationReport classify_sca(const StructureConstantAlgebra<K>& A) {
  using Vec = typename StructureConstantAlgebra<K>::Vec;
  constexpr bool complex_field = FieldTraits<K>::has_i;
  ClassificationReport out;
  out.algebra_dim = A.dim();
  out.center_dim = A.center_basis().size();

  std::vector<Vec> idems = central_idempotents(A);
  std::vector<Vec> center = A.center_basis();

  const std::size_t n = A.dim();
  const Matrix<K> T = A.trace_form();

  auto isqrt_exact = [](std::size_t v) -> std::optional<std::size_t> {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r == v) return r;
    return std::nullopt;
  };

  for (auto& e : idems) {
    // block basis: span of b_i * e
    SparseEliminator<K> span(n);
    for (std::size_t i = 0; i < n; ++i) span.insert(to_sparse(A.multiply(A.basis_vec(i), e)));
    std::vector<std::vector<K>> basis = span.span_basis();
    const std::size_t beta = basis.size();
    // center of the block
    SparseEliminator<K> zspan(n);
    for (auto& z : center) zspan.insert(to_sparse(A.multiply(z, e)));
    std::vector<std::vector<K>> zbasis = zspan.span_basis();
    const std::size_t zeta = zbasis.size();

    if constexpr (complex_field) {
      if (zeta != 1)
        throw std::runtime_error("classification failed: complex block with center dim " +
                                 std::to_string(zeta));
      auto k = isqrt_exact(beta);
      if (!k) throw std::runtime_error("classification failed: block dimension not a square");
      out.simples.push_back({*k, 1});
    } else {
      // Gram matrix of the trace form on a subspace basis B: B^T T B
      auto gram = [&](const std::vector<std::vector<K>>& vecs) {
        Matrix<K> B(n, vecs.size());
        for (std::size_t j = 0; j < vecs.size(); ++j)
          for (std::size_t i = 0; i < n; ++i) B(i, j) = vecs[j][i];
        return B.transpose() * (T * B);
      };
      if (zeta == 1) {
        // M_k(R) or M_k(H): decided by the trace-form signature (k or -2k)
        int s = symmetric_form_signature(gram(basis));
        if (s > 0 && std::size_t(s) * std::size_t(s) == beta) {
          out.simples.push_back({std::size_t(s), 1});  // M_k(R), k = s
        } else if (s < 0 && std::size_t(-s) * std::size_t(-s) == beta && (-s) % 2 == 0) {
          std::size_t k = std::size_t(-s) / 2;
          out.simples.push_back({4 * k, 4});  // M_k(H), simple H^k of real dim 4k
        } else {
          throw std::runtime_error("classification failed: trace-form signature " +
                                   std::to_string(s) + " for block of dim " + std::to_string(beta));
        }
      } else if (zeta == 2) {
        // genuine C-center has neutral trace form on the center; an
        // unsplit R+R center would be positive definite there
        if (symmetric_form_signature(gram(zbasis)) != 0)
          throw std::runtime_error(
              "classification failed: block center did not split over Q");
        auto k2 = beta % 2 == 0 ? isqrt_exact(beta / 2) : std::nullopt;
        if (!k2)
          throw std::runtime_error("classification failed: complex-center block of dim " +
                                   std::to_string(beta));
        out.simples.push_back({2 * *k2, 2});  // M_k(C), simple C^k of real dim 2k
      } else {
        throw std::runtime_error("classification failed: block center dimension " +
                                 std::to_string(zeta) + " unsupported");
      }
    }
  }

  // deterministic report order
  std::sort(out.simples.begin(), out.simples.end(), [](const SimpleInfo& a, const SimpleInfo& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.end_dim < b.end_dim;
  });
  if (!out.wedderburn_holds())
    throw std::runtime_error("not semisimple or incomplete list (Wedderburn identity fails)");
  return out;
}

// Period-8 (real) / period-2 (complex) Morita reduction: returns a small
// signature with the same simple count and division types, dimensions
// scaled by the matrix factor.
struct MoritaReduction {
  Signature reduced;
  unsigned long factor;
};

inline MoritaReduction morita_reduce(Signature sig, Field field) {
  unsigned long factor = 1;
  int p = sig.p, q = sig.q;
  if (field == Field::complex) {
    int n = p + q;
    while (n >= 2) {
      n -= 2;
      factor *= 2;
    }
    return {Signature(0, n), factor};
  }
  int m = std::min(p, q);
  p -= m;
  q -= m;
  for (int i = 0; i < m; ++i) factor *= 2;
  while (q >= 8) {
    q -= 8;
    factor *= 16;
  }
  while (p >= 8) {
    p -= 8;
    factor *= 16;
  }
  return {Signature(p, q), factor};
}

}  // namespace cliffk
