#pragma once

#include <utility>
#include <vector>

#include "indroots/intpoly.hpp"

namespace indroots {

/// Primitive gcd over Z[x] with positive leading coefficient, computed by a
/// primitive pseudo-remainder sequence. No floating point anywhere.
/// Errors if both inputs are zero.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

/// Exact quotient p / d; errors if d does not divide p over the integers.
IntPoly divide_exact(const IntPoly& p, const IntPoly& d);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPoly square_free_part(const IntPoly& p);

/// All rational roots of p, each listed once regardless of multiplicity,
/// sorted ascending. Candidates are +/-(divisor of the trailing nonzero
/// coefficient)/(divisor of the leading coefficient); a zero root from an
/// x^k factor is included. Errors on the zero polynomial.
std::vector<BigRat> rational_roots(const IntPoly& p);

/// Complete accounting of the distinct roots of p in (-inf, 0).
struct NegRootIsolation {
  /// Exact rational roots, ascending.
  std::vector<BigRat> exact_rational_roots;
  /// Disjoint open intervals (lo, hi) with lo < hi < 0, each containing
  /// exactly one (irrational) root and no rational root of p.
  std::vector<std::pair<BigRat, BigRat>> irrational_intervals;
  std::size_t total_negative_count = 0;
};

/// Isolates every negative real root of p: rational ones exactly, the rest in
/// disjoint rational intervals certified by Sturm sign-variation counts on the
/// square-free part. The search is confined to [-(1 + Cauchy bound), 0).
/// Errors on the zero polynomial.
NegRootIsolation negative_real_roots(const IntPoly& p);

/// Sturm chain of a square-free polynomial, remainders computed with positive
/// pseudo-division multipliers and stripped to primitive parts so every sign
/// is exact.
std::vector<IntPoly> sturm_chain(const IntPoly& square_free);

/// Sign variations of the chain evaluated at t.
int sturm_variations(const std::vector<IntPoly>& chain, const BigRat& t);

/// 1 + max_k |a_k| / |a_d|: every root r of p satisfies |r| < bound.
BigRat cauchy_root_bound(const IntPoly& p);

}  // namespace indroots
