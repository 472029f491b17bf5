#include "etcs/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

namespace etcs::cyclo {

namespace {

using Poly = std::vector<Rational>;  // low-to-high, no trailing zeros enforced by trim

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact division of polynomials over Q, remainder must vanish.
Poly div_exact(Poly num, const Poly& den) {
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rational c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  if (!num.empty()) throw std::logic_error("cyclotomic: inexact polynomial division");
  return q;
}

Poly cyclotomic_poly(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  Poly p(n + 1, Rational(0));
  p[0] = Rational(-1);
  p[n] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = div_exact(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

}  // namespace

Field::Field(int n) : n_(n), phi_(cyclotomic_poly(n)) {
  if (n < 1) throw std::domain_error("cyclo::Field: n must be positive");
}

std::vector<Rational> Field::reduce(std::vector<Rational> p) const {
  const std::size_t deg = phi_.size() - 1;
  while (p.size() > deg) {
    Rational c = p.back();
    std::size_t shift = p.size() - phi_.size();
    if (!c.is_zero()) {
      for (std::size_t i = 0; i < phi_.size(); ++i) p[shift + i] -= c * phi_[i];
    }
    p.pop_back();
  }
  p.resize(deg, Rational(0));
  return p;
}

Field::Elem Field::from_rational(const Rational& r) const {
  Elem e = zero();
  e[0] = r;
  return e;
}

Field::Elem Field::zeta_pow(long long e) const {
  long long r = e % n_;
  if (r < 0) r += n_;
  std::vector<Rational> p(static_cast<std::size_t>(r) + 1, Rational(0));
  p.back() = Rational(1);
  return reduce(std::move(p));
}

Field::Elem Field::add(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Field::Elem Field::sub(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Field::Elem Field::neg(const Elem& a) const {
  Elem out = a;
  for (auto& c : out) c = -c;
  return out;
}

Field::Elem Field::mul(const Elem& a, const Elem& b) const {
  std::vector<Rational> p(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      p[i + j] += a[i] * b[j];
    }
  }
  return reduce(std::move(p));
}

Field::Elem Field::scal(const Rational& c, const Elem& a) const {
  Elem out = a;
  for (auto& x : out) x *= c;
  return out;
}

Field::Elem Field::inverse(const Elem& a) const {
  // Extended Euclid over Q[x] against phi: s*a + t*phi = gcd = const.
  Poly r0 = phi_;
  Poly r1(a.begin(), a.end());
  trim(r1);
  if (r1.empty()) throw std::domain_error("cyclo::Field: inverse of zero");
  Poly s0{}, s1{Rational(1)};
  while (true) {
    trim(r1);
    if (r1.empty()) throw std::logic_error("cyclo::Field: element not invertible");
    if (r1.size() == 1) break;
    // r0 = q*r1 + r2
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
    Poly r2 = r0;
    while (r2.size() >= r1.size() && !r2.empty()) {
      Rational c = r2.back() / r1.back();
      std::size_t shift = r2.size() - r1.size();
      q[shift] += c;
      for (std::size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= c * r1[i];
      trim(r2);
    }
    // s2 = s0 - q*s1
    Poly qs(q.size() + s1.size() ? q.size() + s1.size() - 1 : 0, Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i].is_zero()) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    Poly s2 = s0;
    s2.resize(std::max(s2.size(), qs.size()), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational lead = r1[0];
  Poly inv = s1;
  for (auto& c : inv) c /= lead;
  inv.resize(degree(), Rational(0));
  return reduce(std::move(inv));
}

bool Field::is_zero(const Elem& a) const {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

bool Field::is_rational(const Elem& a) const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!a[i].is_zero()) return false;
  return true;
}

Rational Field::rational_part(const Elem& a) const {
  if (!is_rational(a)) throw std::logic_error("cyclo::Field: value is irrational");
  return a[0];
}

Field::Elem Field::cos2pi(long long e) const {
  // (zeta^e + zeta^-e)/2
  return scal(Rational(BigInt(1), BigInt(2)), add(zeta_pow(e), zeta_pow(-e)));
}

Field::Elem Field::sin2pi(long long e) const {
  if (n_ % 4 != 0) throw std::logic_error("cyclo::Field: sin needs 4 | N");
  // (zeta^e - zeta^-e)/(2i) with i = zeta^{N/4}
  Elem diff = sub(zeta_pow(e), zeta_pow(-e));
  Elem minus_i = neg(zeta_pow(n_ / 4));
  return scal(Rational(BigInt(1), BigInt(2)), mul(diff, minus_i));
}

}  // namespace etcs::cyclo
