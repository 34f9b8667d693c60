#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace cliffk {

// Exact rational scalar. All arithmetic in the library is exact; nothing
// is ever rounded, so equality tests are meaningful.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

enum class Field { real, complex };

inline const char* field_name(Field f) { return f == Field::real ? "real" : "complex"; }

// Gaussian rational a + b*i. The complex ground field is represented by
// its subfield Q(i), which contains every structure constant we generate.
struct GRat {
  Rat re, im;

  GRat() : re(0), im(0) {}
  GRat(long n) : re(n), im(0) {}
  GRat(const Rat& r) : re(r), im(0) {}
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GRat i() { return GRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GRat conj() const { return GRat(re, -im); }
  Rat norm() const { return re * re + im * im; }  // |z|^2

  GRat operator-() const { return GRat(-re, -im); }
  GRat& operator+=(const GRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GRat& operator-=(const GRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GRat& operator*=(const GRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GRat& operator/=(const GRat& o) {
    Rat n = o.norm();
    GRat c = o.conj();
    *this *= c;
    re /= n;
    im /= n;
    return *this;
  }

  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
  friend GRat operator/(GRat a, const GRat& b) { return a /= b; }
  friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

  // Lexicographic (re, im); used only for deterministic orderings.
  friend bool operator<(const GRat& a, const GRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::string str() const {
    if (im == 0) return re.get_str();
    std::string s = re == 0 ? "" : re.get_str();
    if (im > 0 && !s.empty()) s += "+";
    if (im == -1)
      s += "-i";
    else if (im == 1)
      s += "i";
    else
      s += im.get_str() + "i";
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const GRat& z) { return os << z.str(); }
};

// Field trait layer so the algebra/linear-algebra templates work over
// both Q (real field) and Q(i) (complex field).
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rat> {
  static constexpr Field tag = Field::real;
  static constexpr bool has_i = false;
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static std::string str(const Rat& x) { return x.get_str(); }
};

template <>
struct FieldTraits<GRat> {
  static constexpr Field tag = Field::complex;
  static constexpr bool has_i = true;
  static bool is_zero(const GRat& x) { return x.is_zero(); }
  static GRat zero() { return GRat(); }
  static GRat one() { return GRat(1); }
  static GRat i() { return GRat::i(); }
  static std::string str(const GRat& x) { return x.str(); }
};

}  // namespace cliffk
