#include "indroots/certify.hpp"

namespace indroots {

namespace {

// For a negative rational r, decide whether -r is the square of a rational;
// if so return b = sqrt(-r) > 0.
bool rational_sqrt_of_negation(const BigRat& r, BigRat& b) {
  BigInt num = -r.get_num();  // > 0
  const BigInt& den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return false;
  }
  BigInt sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  b = make_rat(sn, sd);
  return true;
}

}  // namespace

ImaginaryRootCertificate certify_imaginary(const IntPoly& p) {
  if (p.coeff(0) != 1) {
    throw Error("certify_imaginary: constant term must be 1 for an independence polynomial");
  }
  auto [even, odd] = p.even_odd_split();
  ImaginaryRootCertificate cert;
  cert.gcd_poly = poly_gcd(even, odd);
  if (cert.gcd_poly.degree() >= 1) {
    cert.negative_roots = negative_real_roots(cert.gcd_poly);
  }
  cert.verdict = cert.negative_roots.total_negative_count > 0 ? Verdict::exists : Verdict::none;

  for (const auto& r : cert.negative_roots.exact_rational_roots) {
    BigRat b;
    if (rational_sqrt_of_negation(r, b)) {
      // Every independence polynomial forces b = 1/n: the gcd divides the
      // even part, whose constant term is 1.
      if (b.get_num() != 1) {
        throw Error("certify_imaginary: rational imaginary root with nonunit numerator");
      }
      GaussRat value = p.eval_gauss(GaussRat(BigRat(0), b));
      if (!value.is_zero()) {
        throw Error("certify_imaginary: gcd root failed Gaussian confirmation");
      }
      cert.confirmations.push_back({b, value});
      cert.rational_imaginary_roots.push_back(std::move(b));
    } else {
      cert.irrational_candidates = true;
    }
  }
  if (!cert.negative_roots.irrational_intervals.empty()) cert.irrational_candidates = true;
  cert.balanced_mod4 = profile_balanced(residue_profile(p));
  return cert;
}

std::vector<BigRat> rational_imaginary_classification(const IntPoly& p) {
  return certify_imaginary(p).rational_imaginary_roots;
}

ResidueProfile residue_profile(const IntPoly& p) {
  ResidueProfile profile{BigInt(0), BigInt(0), BigInt(0), BigInt(0)};
  BigInt* buckets[4] = {&profile.c0, &profile.c1, &profile.c2, &profile.c3};
  for (std::size_t k = 0; k < p.size(); ++k) *buckets[k % 4] += p.coeff(k);
  return profile;
}

bool profile_balanced(const ResidueProfile& profile) {
  return profile.c0 == profile.c2 && profile.c1 == profile.c3;
}

bool assert_alpha_le_3_clean(const IntPoly& p) {
  if (p.degree() > 3) throw Error("assert_alpha_le_3_clean: degree exceeds 3");
  return certify_imaginary(p).verdict == Verdict::none;
}

}  // namespace indroots
