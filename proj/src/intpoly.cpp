#include "indroots/intpoly.hpp"

#include <cstdlib>
#include <sstream>

namespace indroots {

std::size_t degree_guard() {
  const char* env = std::getenv("INDROOTS_DEGREE_GUARD");
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

namespace {

void check_coeff_count(std::size_t count, const char* what) {
  if (count > degree_guard()) {
    throw GuardError(std::string(what) + " would need " + std::to_string(count) +
                     " coefficients, exceeding the degree guard of " +
                     std::to_string(degree_guard()));
  }
}

}  // namespace

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

GaussRat GaussRat::pow(unsigned long e) const {
  GaussRat acc(BigRat(1), BigRat(0));
  GaussRat base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string GaussRat::to_string() const {
  std::ostringstream os;
  os << re.get_str() << (sgn(im) < 0 ? " - " : " + ")
     << BigRat(abs(im)).get_str() << "*i";
  return os.str();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
  IntPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(std::size_t k, BigInt c) {
  IntPoly p;
  if (c != 0) {
    check_coeff_count(k + 1, "monomial");
    p.coeffs_.assign(k + 1, BigInt(0));
    p.coeffs_[k] = std::move(c);
  }
  return p;
}

IntPoly IntPoly::one_plus_ax(const BigInt& a) {
  IntPoly p;
  p.coeffs_ = {BigInt(1), a};
  p.trim();
  return p;
}

IntPoly IntPoly::binomial_power(unsigned long m) {
  check_coeff_count(m + 1, "binomial power");
  std::vector<BigInt> c(m + 1);
  for (unsigned long k = 0; k <= m; ++k) mpz_bin_uiui(c[k].get_mpz_t(), m, k);
  return IntPoly(std::move(c));
}

const BigInt& IntPoly::coeff(std::size_t k) const {
  static const BigInt kZero(0);
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const BigInt& IntPoly::leading() const {
  if (is_zero()) throw Error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < a.coeffs_.size()) r.coeffs_[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) r.coeffs_[i] += b.coeffs_[i];
  }
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < a.coeffs_.size()) r.coeffs_[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) r.coeffs_[i] -= b.coeffs_[i];
  }
  r.trim();
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  check_coeff_count(a.coeffs_.size() + b.coeffs_.size() - 1, "product");
  IntPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator*(const BigInt& c, const IntPoly& p) {
  if (c == 0) return IntPoly();
  IntPoly r = p;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

IntPoly IntPoly::pow(unsigned long e) const {
  if (e == 0) return constant(1);
  if (is_zero()) return zero();
  check_coeff_count(static_cast<std::size_t>(degree()) * e + 1, "power");
  IntPoly acc = constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
    if (e == 0) break;
  }
  return acc;
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
  if (is_zero()) return zero();
  if (degree() > 0 && inner.degree() > 0) {
    check_coeff_count(
        static_cast<std::size_t>(degree()) * static_cast<std::size_t>(inner.degree()) + 1,
        "composition");
  }
  // Horner from the top coefficient down.
  IntPoly acc = constant(coeffs_.back());
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
    acc = acc * inner + constant(coeffs_[k]);
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  IntPoly r;
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    r.coeffs_[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  }
  r.trim();
  return r;
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  check_coeff_count(coeffs_.size() + k, "shift");
  IntPoly r;
  r.coeffs_.assign(coeffs_.size() + k, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

IntPoly IntPoly::shifted_down(std::size_t k) const {
  if (k == 0) return *this;
  if (low_zero_count() < k) throw Error("shifted_down would drop nonzero coefficients");
  IntPoly r;
  r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  return r;
}

std::size_t IntPoly::low_zero_count() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k;
}

std::pair<IntPoly, IntPoly> IntPoly::even_odd_split() const {
  IntPoly even, odd;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    auto& dst = (k % 2 == 0) ? even.coeffs_ : odd.coeffs_;
    dst.resize(k / 2 + 1, BigInt(0));
    dst[k / 2] = coeffs_[k];
  }
  even.trim();
  odd.trim();
  return {std::move(even), std::move(odd)};
}

IntPoly even_odd_reconstruct(const IntPoly& even, const IntPoly& odd) {
  IntPoly x2 = IntPoly::monomial(2, 1);
  return even.compose(x2) + odd.compose(x2).shifted_up(1);
}

BigRat IntPoly::eval_rat(const BigRat& t) const {
  BigRat acc(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * t + BigRat(coeffs_[k]);
  }
  return acc;
}

GaussRat IntPoly::eval_gauss(const GaussRat& z) const {
  GaussRat acc;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * z + GaussRat(BigRat(coeffs_[k]), BigRat(0));
  }
  return acc;
}

BigInt IntPoly::eval_int(const BigInt& t) const {
  BigInt acc(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * t + coeffs_[k];
  }
  return acc;
}

int IntPoly::sign_at(const BigRat& t) const {
  // Homogeneous Horner keeps everything in integers: for t = u/v with v > 0
  // the sign of p(t) equals the sign of sum a_k u^k v^(d-k).
  if (is_zero()) return 0;
  const BigInt& u = t.get_num();
  const BigInt& v = t.get_den();
  BigInt acc = coeffs_.back();
  BigInt vp(1);
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
    vp *= v;
    acc = acc * u + coeffs_[k] * vp;
  }
  return sgn(acc);
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return zero();
  BigInt g = content();
  if (g == 1) return *this;
  IntPoly r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

IntPoly IntPoly::positive_primitive() const {
  IntPoly r = primitive_part();
  if (!r.is_zero() && sgn(r.coeffs_.back()) < 0) r = -r;
  return r;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    BigInt a = abs(c);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace indroots
