#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indroots {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Degree/order guard tripped (see degree_guard()).
struct GuardError : Error {
  using Error::Error;
};

/// Malformed textual input; offset is the byte position of the defect.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

/// Maximum coefficient count any polynomial operation may produce.
/// Default 10^6; override with the INDROOTS_DEGREE_GUARD environment variable.
std::size_t degree_guard();

/// a/b as a canonical rational (b > 0 after reduction).
BigRat make_rat(const BigInt& num, const BigInt& den);

/// Exact Gaussian rational re + im*i.
struct GaussRat {
  BigRat re;
  BigRat im;

  GaussRat() = default;
  GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat unit_i() { return GaussRat(BigRat(0), BigRat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re + b.re, a.im + b.im);
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re - b.re, a.im - b.im);
  }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }

  GaussRat pow(unsigned long e) const;

  std::string to_string() const;
};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeff(k) is the coefficient of x^k. Trailing zeros are trimmed: the zero
/// polynomial is the empty coefficient vector, otherwise the last entry is
/// nonzero and degree() == size() - 1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(BigInt c);
  static IntPoly variable() { return monomial(1, 1); }
  static IntPoly monomial(std::size_t k, BigInt c);
  /// 1 + a*x
  static IntPoly one_plus_ax(const BigInt& a);
  /// (1 + x)^m expanded by binomials.
  static IntPoly binomial_power(unsigned long m);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const BigInt& coeff(std::size_t k) const;
  const BigInt& leading() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool operator==(const IntPoly&) const = default;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  friend IntPoly operator*(const BigInt& c, const IntPoly& p);

  IntPoly pow(unsigned long e) const;
  /// p(inner(x)), exact; degree guarded.
  IntPoly compose(const IntPoly& inner) const;
  IntPoly derivative() const;
  /// Multiply by x^k.
  IntPoly shifted_up(std::size_t k) const;
  /// Divide by x^k; requires the k lowest coefficients to be zero.
  IntPoly shifted_down(std::size_t k) const;
  /// Number of leading zero coefficients, i.e. multiplicity of the root 0.
  std::size_t low_zero_count() const;

  /// (p_even, p_odd) with p(x) = p_even(x^2) + x * p_odd(x^2).
  std::pair<IntPoly, IntPoly> even_odd_split() const;

  BigRat eval_rat(const BigRat& t) const;
  GaussRat eval_gauss(const GaussRat& z) const;
  BigInt eval_int(const BigInt& t) const;
  /// Sign of p(t) without building the value: -1, 0 or +1.
  int sign_at(const BigRat& t) const;

  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;
  /// p / content(p); sign of the leading coefficient preserved.
  IntPoly primitive_part() const;
  /// Primitive part with positive leading coefficient.
  IntPoly positive_primitive() const;

  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
  void trim();
};

/// p_even(x^2) + x * p_odd(x^2); inverse of even_odd_split.
IntPoly even_odd_reconstruct(const IntPoly& even, const IntPoly& odd);

}  // namespace indroots
