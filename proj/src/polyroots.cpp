#include "indroots/polyroots.hpp"

#include <algorithm>
#include <set>

namespace indroots {

namespace {

// Pseudo-remainder of a by b where the implied multiplier |lc(b)|^s is
// positive, so the remainder keeps the sign of the exact rational remainder.
IntPoly prem_abs(IntPoly a, const IntPoly& b) {
  const BigInt lead_abs = abs(b.leading());
  const int lead_sign = sgn(b.leading());
  while (!a.is_zero() && a.degree() >= b.degree()) {
    std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
    BigInt factor = a.leading() * lead_sign;
    a = lead_abs * a - IntPoly::monomial(shift, factor) * b;
  }
  return a;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error("gcd of two zero polynomials");
  if (p.is_zero()) return q.positive_primitive();
  if (q.is_zero()) return p.positive_primitive();
  IntPoly a = p.primitive_part();
  IntPoly b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (true) {
    IntPoly r = prem_abs(a, b);
    if (r.is_zero()) return b.positive_primitive();
    a = std::move(b);
    b = r.primitive_part();
  }
}

IntPoly divide_exact(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw Error("division by the zero polynomial");
  if (p.is_zero()) return IntPoly();
  if (p.degree() < d.degree()) throw Error("inexact polynomial division");
  std::vector<BigInt> rem = p.coeffs();
  std::vector<BigInt> quot(static_cast<std::size_t>(p.degree() - d.degree()) + 1);
  const BigInt& lead = d.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + static_cast<std::size_t>(d.degree())];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw Error("inexact polynomial division");
    }
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= static_cast<std::size_t>(d.degree()); ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), d.coeff(j).get_mpz_t());
    }
    quot[k] = std::move(c);
  }
  for (const auto& c : rem) {
    if (c != 0) throw Error("inexact polynomial division");
  }
  return IntPoly(std::move(quot));
}

IntPoly square_free_part(const IntPoly& p) {
  if (p.is_zero()) throw Error("square-free part of the zero polynomial");
  if (p.degree() == 0) return IntPoly::constant(1);
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.positive_primitive();
  return divide_exact(p.primitive_part(), g).positive_primitive();
}

namespace {

// All positive divisors by trial division; adequate for the coefficient
// sizes this library actually meets (certificate gcds have unit constants).
std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> low, high;
  for (BigInt d(1); d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      low.push_back(d);
      BigInt e = n / d;
      if (e != d) high.push_back(e);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace

std::vector<BigRat> rational_roots(const IntPoly& p) {
  if (p.is_zero()) throw Error("rational roots of the zero polynomial");
  std::set<BigRat> roots;
  std::size_t zeros = p.low_zero_count();
  if (zeros > 0) roots.insert(BigRat(0));
  IntPoly q = p.shifted_down(zeros);
  if (q.degree() >= 1) {
    std::vector<BigInt> nums = positive_divisors(q.coeff(0));
    std::vector<BigInt> dens = positive_divisors(q.leading());
    for (const auto& u : nums) {
      for (const auto& v : dens) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
        if (g != 1) continue;
        BigRat cand = make_rat(u, v);
        if (q.sign_at(cand) == 0) roots.insert(cand);
        BigRat neg = -cand;
        if (q.sign_at(neg) == 0) roots.insert(neg);
      }
    }
  }
  return std::vector<BigRat>(roots.begin(), roots.end());
}

std::vector<IntPoly> sturm_chain(const IntPoly& square_free) {
  if (square_free.is_zero()) throw Error("Sturm chain of the zero polynomial");
  std::vector<IntPoly> chain;
  chain.push_back(square_free.primitive_part());
  if (square_free.degree() == 0) return chain;
  chain.push_back(square_free.derivative().primitive_part());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    IntPoly r = prem_abs(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back((-r).primitive_part());
  }
  return chain;
}

int sturm_variations(const std::vector<IntPoly>& chain, const BigRat& t) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(t);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

BigRat cauchy_root_bound(const IntPoly& p) {
  if (p.is_zero()) throw Error("root bound of the zero polynomial");
  BigRat best(0);
  BigInt lead = abs(p.leading());
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    BigRat q = make_rat(abs(p.coeff(k)), lead);
    if (q > best) best = q;
  }
  return best + 1;
}

namespace {

struct Isolator {
  const std::vector<IntPoly>& chain;
  const IntPoly& sf;
  std::vector<std::pair<BigRat, BigRat>> out;

  // Count of sf's roots in (a, b]; requires a <= b.
  int count(const BigRat& a, const BigRat& b) const {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
  }

  void isolate(const BigRat& lo, const BigRat& hi, int roots) {
    if (roots == 0) return;
    if (roots == 1) {
      out.emplace_back(lo, hi);
      return;
    }
    BigRat mid = (lo + hi) / 2;
    int left = count(lo, mid);
    isolate(lo, mid, left);
    isolate(mid, hi, roots - left);
  }

  // Shrink (lo, hi] until hi < 0 and no point of `avoid` lies inside.
  // sf has no rational roots here, so rational endpoints are never roots and
  // the single enclosed root keeps a strict sign change across the interval.
  std::pair<BigRat, BigRat> refine(BigRat lo, BigRat hi,
                                   const std::vector<BigRat>& avoid) const {
    auto clean = [&](const BigRat& a, const BigRat& b) {
      if (b >= 0) return false;
      for (const auto& r : avoid) {
        if (a < r && r < b) return false;
      }
      return true;
    };
    while (!clean(lo, hi)) {
      BigRat mid = (lo + hi) / 2;
      if (sf.sign_at(lo) * sf.sign_at(mid) < 0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return {lo, hi};
  }
};

}  // namespace

NegRootIsolation negative_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw Error("root isolation for the zero polynomial");
  NegRootIsolation result;
  IntPoly q = p.shifted_down(p.low_zero_count());
  if (q.degree() == 0) return result;

  std::vector<BigRat> rats = rational_roots(q);
  for (const auto& r : rats) {
    if (r < 0) result.exact_rational_roots.push_back(r);
  }

  // Remove every rational root from the square-free part; what remains has
  // only irrational real roots, so rational bisection points are never roots.
  IntPoly sf = square_free_part(q);
  for (const auto& r : rats) {
    IntPoly lin({-r.get_num(), r.get_den()});
    sf = divide_exact(sf, lin);
  }

  if (sf.degree() >= 1) {
    std::vector<IntPoly> chain = sturm_chain(sf);
    BigRat lo = -cauchy_root_bound(sf);
    BigRat hi(0);
    Isolator iso{chain, sf, {}};
    int negatives = iso.count(lo, hi);
    iso.isolate(lo, hi, negatives);
    for (auto& [a, b] : iso.out) {
      result.irrational_intervals.push_back(
          iso.refine(a, b, result.exact_rational_roots));
    }
    std::sort(result.irrational_intervals.begin(), result.irrational_intervals.end());
  }

  result.total_negative_count =
      result.exact_rational_roots.size() + result.irrational_intervals.size();
  return result;
}

}  // namespace indroots
