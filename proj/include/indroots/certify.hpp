#pragma once

#include <vector>

#include "indroots/intpoly.hpp"
#include "indroots/polyroots.hpp"

namespace indroots {

enum class Verdict { none, exists };

/// A claimed rational root b*i together with its independent exact
/// re-evaluation of the input polynomial (always zero).
struct RootConfirmation {
  BigRat b;
  GaussRat value;
};

/// Machine-checkable evidence for or against purely imaginary roots of an
/// independence polynomial p: p(bi) = 0 iff p_even and p_odd share the root
/// -b^2, so the verdict reduces to negative real roots of their gcd.
struct ImaginaryRootCertificate {
  Verdict verdict = Verdict::none;
  IntPoly gcd_poly;
  NegRootIsolation negative_roots;
  /// Positive rationals b with p(+/- b i) = 0; always of the form 1/n.
  std::vector<BigRat> rational_imaginary_roots;
  std::vector<RootConfirmation> confirmations;
  bool balanced_mod4 = false;
  /// Set when the gcd has negative roots -b^2 with irrational b, either
  /// isolated in intervals or exact rationals that are not rational squares.
  bool irrational_candidates = false;
};

/// Decides purely imaginary roots for p. Requires constant term 1 (every
/// independence polynomial has s_0 = 1); anything else is rejected.
ImaginaryRootCertificate certify_imaginary(const IntPoly& p);

/// The complete list of rational b > 0 with +/- b i roots of p.
std::vector<BigRat> rational_imaginary_classification(const IntPoly& p);

/// Coefficient totals of p by exponent residue mod 4. A graph has an
/// independence root at i exactly when c0 = c2 and c1 = c3.
struct ResidueProfile {
  BigInt c0;
  BigInt c1;
  BigInt c2;
  BigInt c3;
};
ResidueProfile residue_profile(const IntPoly& p);
bool profile_balanced(const ResidueProfile& profile);

/// Regression invariant: polynomials of degree <= 3 never have purely
/// imaginary roots. Returns true when the verdict is none.
bool assert_alpha_le_3_clean(const IntPoly& p);

}  // namespace indroots
