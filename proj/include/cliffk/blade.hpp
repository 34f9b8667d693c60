#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliffk {

// A blade is a product of distinct generators in ascending index order,
// stored as a bitmask over generator indices. Bit order is index order,
// so the canonical form is the mask itself. The empty mask is the unit.
using Blade = std::uint32_t;

inline constexpr int kMaxRank = 24;

// Signature of C^{p,q}: the first p generators square to -1, the next q
// square to +1, and distinct generators anticommute.
struct Signature {
  int p = 0;
  int q = 0;

  int rank() const { return p + q; }

  Signature() = default;
  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || p + q > kMaxRank)
      throw std::invalid_argument("signature out of range: C^{" + std::to_string(p_) + "," +
                                  std::to_string(q_) + "}");
  }

  // +1 or -1: the square of generator i.
  int generator_square(int i) const {
    if (i < 0 || i >= rank()) throw std::out_of_range("generator index out of range");
    return i < p ? -1 : +1;
  }

  bool operator==(const Signature&) const = default;

  std::string str() const { return "C^{" + std::to_string(p) + "," + std::to_string(q) + "}"; }

  // Generator display name: e1..ep square to -1, f1..fq square to +1.
  std::string generator_name(int i) const {
    if (i < p) return "e" + std::to_string(i + 1);
    return "f" + std::to_string(i - p + 1);
  }
};

struct BladeProduct {
  int sign;      // +1 or -1
  Blade result;  // symmetric difference of the index sets
};

// Multiply two blades. The sign is the parity of the merge permutation
// times the squares of repeated generators.
inline BladeProduct blade_product(Blade a, Blade b, const Signature& sig) {
  const int n = sig.rank();
  const Blade valid = n >= 32 ? ~Blade(0) : ((Blade(1) << n) - 1);
  if ((a & ~valid) || (b & ~valid)) throw std::out_of_range("blade index out of range for " + sig.str());

  int sign = 1;
  Blade r = a;
  Blade rest = b;
  while (rest) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    // move generator j from the left of b past every generator of r above j
    const Blade above = r >> (j + 1);
    if (std::popcount(above) & 1) sign = -sign;
    const Blade bit = Blade(1) << j;
    if (r & bit) {
      sign *= sig.generator_square(j);
      r &= ~bit;
    } else {
      r |= bit;
    }
  }
  return {sign, r};
}

inline int blade_degree(Blade b) { return std::popcount(b) & 1; }

inline std::string blade_name(Blade b, const Signature& sig) {
  if (b == 0) return "1";
  std::string s;
  for (int i = 0; i < sig.rank(); ++i)
    if (b & (Blade(1) << i)) s += sig.generator_name(i);
  return s;
}

}  // namespace cliffk
