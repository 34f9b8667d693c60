#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "blade.hpp"
#include "scalar.hpp"

namespace cliffk {

// Element of the Clifford algebra C^{p,q} over the scalar field K: a
// finite blade -> coefficient map. Zero coefficients are never stored.
template <class K>
class AlgebraElement {
 public:
  using Traits = FieldTraits<K>;

  AlgebraElement() = default;
  explicit AlgebraElement(Signature sig) : sig_(sig) {}

  static AlgebraElement unit(Signature sig) {
    AlgebraElement x(sig);
    x.add_term(0, Traits::one());
    return x;
  }

  static AlgebraElement generator(Signature sig, int i) {
    if (i < 0 || i >= sig.rank()) throw std::out_of_range("generator index out of range");
    AlgebraElement x(sig);
    x.add_term(Blade(1) << i, Traits::one());
    return x;
  }

  static AlgebraElement scalar(Signature sig, K c) {
    AlgebraElement x(sig);
    x.add_term(0, std::move(c));
    return x;
  }

  const Signature& signature() const { return sig_; }
  const std::map<Blade, K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  K coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  void add_term(Blade b, const K& c) {
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  // -1 if not homogeneous, else the common parity (0 for the zero element).
  int homogeneous_degree() const {
    int deg = 0;
    bool first = true;
    for (auto& [b, c] : terms_) {
      int d = blade_degree(b);
      if (first) {
        deg = d;
        first = false;
      } else if (d != deg) {
        return -1;
      }
    }
    return deg;
  }

  AlgebraElement operator-() const {
    AlgebraElement r(sig_);
    for (auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_ambient(o);
    for (auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_ambient(o);
    for (auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    x.check_ambient(y);
    AlgebraElement r(x.sig_);
    for (auto& [a, ca] : x.terms_)
      for (auto& [b, cb] : y.terms_) {
        auto [sign, blade] = blade_product(a, b, x.sig_);
        K c = ca * cb;
        if (sign < 0) c = -c;
        r.add_term(blade, c);
      }
    return r;
  }

  friend AlgebraElement operator*(const K& c, const AlgebraElement& x) {
    AlgebraElement r(x.sig_);
    for (auto& [b, cb] : x.terms_) r.add_term(b, c * cb);
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [b, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + Traits::str(c) + ")";
      if (b != 0) s += "*" + blade_name(b, sig_);
    }
    return s;
  }

 private:
  void check_ambient(const AlgebraElement& o) const {
    if (!(sig_ == o.sig_)) throw std::invalid_argument("ambient signature mismatch");
  }

  Signature sig_;
  std::map<Blade, K> terms_;
};

// The volume element eps = f_1...f_n of C^{0,n}.
template <class K>
AlgebraElement<K> volume_element(Signature sig) {
  if (sig.p != 0 || sig.q < 1) throw std::invalid_argument("volume element requires C^{0,n}, n >= 1");
  AlgebraElement<K> x(sig);
  x.add_term((Blade(1) << sig.q) - 1, FieldTraits<K>::one());
  return x;
}

}  // namespace cliffk
