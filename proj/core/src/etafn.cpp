#include "etcs/etafn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "etcs/ratarith.hpp"

namespace etcs::etafn {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

long long divisor_sum(long long n) {
  long long s = 0;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += d;
    if (d != n / d) s += n / d;
  }
  return s;
}

long long round_ll(Real x) { return static_cast<long long>(std::llroundl(x)); }

}  // namespace

EtaLogValue eta_log(Complex tau, Real tol) {
  if (!(tau.imag() > 0)) throw std::domain_error("eta_log: Im tau must be positive");
  if (!(tol > 0)) throw std::domain_error("eta_log: tol must be positive");

  EtaLogValue out;
  out.tau = tau;

  // Move tau into |Re| <= 1/2, |tau| >= 1.  A translation by t shifts L by
  // pi*i*t/12; the inversion contributes -(1/4) Log(-tau^2) and no integer
  // term.  corr maintains L(tau_orig) = L(tau_cur) + corr.
  Complex cur = tau;
  Complex corr = 0;
  for (int iter = 0;; ++iter) {
    if (iter > 256) throw std::runtime_error("eta_log: reduction did not converge");
    long long shift = round_ll(cur.real());
    if (shift != 0) {
      cur -= static_cast<Real>(shift);
      corr += Complex(0, kPi / 12) * static_cast<Real>(shift);
    }
    if (std::norm(cur) < 1.0L - 1e-18L) {
      corr -= std::log(-(cur * cur)) / Real(4);
      cur = Complex(-1, 0) / cur;
      continue;
    }
    break;
  }

  // q-series with the certified tail sum_{n>N} n|q|^n (sigma(n) <= n^2).
  const Complex q = std::exp(Complex(0, 2 * kPi) * cur);
  const Real x = std::abs(q);
  Complex series = 0;
  Complex qn = 1;
  int n = 0;
  Real tail = 1;
  while (true) {
    tail = std::pow(x, n + 1) * ((n + 1) - n * x) / ((1 - x) * (1 - x));
    if (tail <= tol || n > 4096) break;
    ++n;
    qn *= q;
    series += Real(divisor_sum(n)) / Real(n) * qn;
  }
  out.truncation_n = n;
  out.tail_bound = tail;
  out.value = Complex(0, kPi / 12) * cur - series + corr;
  return out;
}

bool functional_equation_check(Complex tau, long long a, long long b, long long c,
                               long long d, Real tol) {
  if (a * d - b * c != 1)
    throw std::domain_error("functional_equation_check: determinant must be 1");
  const Complex denom = Real(c) * tau + Real(d);
  const Complex lhs = eta_log((Real(a) * tau + Real(b)) / denom, tol / 16).value;
  const Rational n_val = ratarith::zagier_n(a, b, c, d);
  Complex rhs = eta_log(tau, tol / 16).value +
                Complex(0, kPi / 12) * static_cast<Real>(n_val.to_double());
  // For c = 0 the map is a translation and -(c tau + d)^2 = -1 sits on the
  // branch cut; the Log term is absent there.
  if (c != 0) rhs += std::log(-(denom * denom)) / Real(4);
  return std::abs(lhs - rhs) <= tol;
}

Real f_value(long long k, long long eps, Real s, Real tol) {
  if (k < 1 || !(s > 0)) throw std::domain_error("f_value: need k >= 1 and s > 0");
  const long long eps_star = ratarith::mod_inverse(eps, k).convert_to<long long>();
  const Complex tau(Real(-eps_star) / Real(k), 1 / (s * Real(k)));
  return 2 * eta_log(tau, tol / 4).value.imag() + kPi * Real(eps_star) / (6 * Real(k));
}

Real f_value_alt(long long k, long long eps, Real s, Real tol) {
  if (k < 1 || !(s > 0)) throw std::domain_error("f_value_alt: need k >= 1 and s > 0");
  long long e = eps % k;
  if (e < 0) e += k;
  const Complex tau(Real(e) / Real(k), s / Real(k));
  const Real sk = static_cast<Real>(ratarith::dedekind_sum(e, k).to_double());
  return 2 * eta_log(tau, tol / 4).value.imag() + 2 * kPi * sk - kPi * Real(e) / (6 * Real(k));
}

Real theta_oracle(long long k, long long eps, Real s, Real coarse_tol) {
  if (!(s >= 0.1L)) throw std::domain_error("theta_oracle: s must be >= 1/10");
  // F'(s) = (4 pi / k) sum sigma(n) sin(2 pi eps n / k) exp(-2 pi n s / k);
  // integrating each term from s to infinity against the large-s limit
  // F(inf) = 2 pi S(eps, k) gives
  //   F(s) = 2 pi S(eps,k) - 2 sum (sigma(n)/n) sin(2 pi eps n/k) e^{-2 pi n s/k}.
  long long e = eps % k;
  if (e < 0) e += k;
  const Real x = std::exp(-2 * kPi * s / Real(k));
  Real sum = 0;
  for (long long n = 1; n <= 200000; ++n) {
    const Real decay = std::pow(x, static_cast<Real>(n));
    const Real tail = decay * x * ((n + 1) - n * x) / ((1 - x) * (1 - x));
    sum += Real(divisor_sum(n)) / Real(n) *
           std::sin(2 * kPi * Real(e * (n % k)) / Real(k)) * decay;
    if (tail < coarse_tol / 64) break;
  }
  const Real sk = static_cast<Real>(ratarith::dedekind_sum(e, k).to_double());
  return 2 * kPi * sk - 2 * sum;
}

Real nu_bar_analytic(const gluing::GluingData& g, const Rational& d_plus,
                     const Rational& d_minus, int m_rho, Real tol) {
  const auto geo = gluing::geometry(g);
  const Real s_plus = std::sqrt(static_cast<Real>(geo.s_plus_sq.to_long_double()));
  const Real s_minus = std::sqrt(static_cast<Real>(geo.s_minus_sq.to_long_double()));
  const Real f_plus = f_value(g.k_plus, g.eps_plus, s_plus, tol);
  const Real f_minus = f_value(g.k_minus, g.eps_minus, s_minus, tol);
  const Real rho_over_pi = static_cast<Real>(geo.rho_over_pi);
  return static_cast<Real>(d_plus.to_long_double()) +
         static_cast<Real>(d_minus.to_long_double()) -
         (144 / kPi) * (f_plus + f_minus) - 72 * rho_over_pi + 3 * m_rho;
}

CalFCheck calF_rationality(const gluing::GluingData& g, Real tol) {
  if (g.n <= 0) throw std::domain_error("calF_rationality: requires n > 0");
  const auto geo = gluing::geometry(g);
  CalFCheck out;
  const Real s_plus = std::sqrt(static_cast<Real>(geo.s_plus_sq.to_long_double()));
  const Real s_minus = std::sqrt(static_cast<Real>(geo.s_minus_sq.to_long_double()));
  out.lhs = (f_value(g.k_plus, g.eps_plus, s_plus, tol / 100) +
             f_value(g.k_minus, g.eps_minus, s_minus, tol / 100) +
             static_cast<Real>(geo.rho_over_pi) * kPi / 2) /
            kPi;
  const BigInt eps_star = ratarith::mod_inverse(g.eps_plus, g.k_plus);
  const BigInt a = (BigInt(g.m) - eps_star * g.n) / g.k_plus;
  out.rhs = Rational(BigInt(1), BigInt(6)) *
            (Rational(BigInt(g.m), BigInt(g.k_plus) * g.n) -
             Rational(BigInt(g.q), BigInt(g.k_minus) * g.n) -
             Rational(12) * ratarith::dedekind_sum(a, g.n));
  out.pass = std::abs(out.lhs - static_cast<Real>(out.rhs.to_long_double())) <= tol;
  return out;
}

namespace {

Real sextic_p(Real x) {
  return ((((((16 * x - 416) * x + 2440) * x + 4880) * x - 12615) * x - 1826) * x -
          32159);
}

Real sextic_q(Real x) {
  return (((((16 * x - 32) * x + 200) * x + 560) * x + 105) * x - 402) * x - 191;
}

// Bisection on [seed - 0.05, seed + 0.05]; the tabulated decimal brackets
// exactly one simple root of f.
template <class F>
Real root_near(F f, Real seed) {
  Real lo = seed - 0.05L, hi = seed + 0.05L;
  Real flo = f(lo), fhi = f(hi);
  if (!(flo * fhi < 0)) throw std::runtime_error("special value root not bracketed");
  for (int i = 0; i < 200; ++i) {
    Real mid = (lo + hi) / 2;
    Real fm = f(mid);
    if (flo * fm <= 0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace

std::vector<SpecialValueRow> special_values() {
  const Real r2 = std::sqrt(2.0L), r3 = std::sqrt(3.0L), r5 = std::sqrt(5.0L);
  const Real r7 = std::sqrt(7.0L), r11 = std::sqrt(11.0L), r15 = std::sqrt(15.0L);
  const Real r21 = std::sqrt(21.0L);
  const Real cbrt2 = std::cbrt(2.0L);
  auto q = [](long long n, long long d) { return Rational(BigInt(n), BigInt(d)); };

  std::vector<SpecialValueRow> rows = {
      {3, 1, 1, q(0, 1), 1, 1, "k3 s1"},
      {4, 1, 1, q(0, 1), 1, 1, "k4 s1"},
      {4, 1, r3, q(1, 12), 1, 1, "k4 s=sqrt3"},
      {5, 1, 1, q(0, 1), 1, 1, "k5 s1"},
      {6, 1, 1, q(0, 1), 1, 1, "k6 s1"},
      {6, 1, r3, q(1, 6), 1, 1, "k6 s=sqrt3"},
      {3, 1, r2, q(-1, 6), 1, 1.0L / 3, "k3 s=sqrt2"},
      {3, 1, r5, q(-1, 12), 1, 2.0L / 3, "k3 s=sqrt5"},
      {3, 1, 2 * r2, q(1, 4), -1, 1.0L / 3, "k3 s=2sqrt2"},
      {4, 1, r7, q(0, 1), 1, 3.0L / 4, "k4 s=sqrt7"},
      {4, 1, r15, q(-1, 6), 1, -1.0L / 4, "k4 s=sqrt15"},
      {4, 1, std::sqrt(5.0L / 3), q(-1, 6), 1, 1.0L / 4, "k4 s=sqrt(5/3)"},
      {5, 1, 2, q(0, 1), 1, 3.0L / 5, "k5 s2"},
      {5, 2, 1, q(1, 10), -1, 3.0L / 5, "k5 e2 s1"},
      {5, 2, 4, q(1, 10), -1, 4.0L / 5, "k5 e2 s4"},
      {6, 1, r2, q(-1, 12), 1, 1.0L / 3, "k6 s=sqrt2"},
      {6, 1, r5, q(1, 12), 1, 2.0L / 3, "k6 s=sqrt5"},
      {6, 1, r11, q(1, 6), 1, 5.0L / 6, "k6 s=sqrt11"},
      {3, 1, 2, q(1, 6), -1, r3 - 1, "k3 s2"},
      {4, 1, r2, q(-1, 8), 1, r2 - 1, "k4 s=sqrt2"},
      {4, 1, r5, q(-1, 4), 1, (1 - r5) / 2, "k4 s=sqrt5"},
      {4, 1, 3, q(0, 1), 1, r3 - 1, "k4 s3"},
      {4, 1, 5, q(0, 1), 1, 3 * r5 - 6, "k4 s5"},
      {5, 2, 2, q(1, 10), -1, 3 * r5 - 6, "k5 e2 s2"},
      {6, 1, r7, q(2, 3), -1, (1 - r21) / 4, "k6 s=sqrt7"},
      {3, 1, r3, q(-1, 6), 1, cbrt2 - 1, "k3 s=sqrt3"},
      {4, 1, 3 * r3, q(-1, 12), 1, cbrt2 - 1, "k4 s=3sqrt3"},
      {3, 1, 2 * r5, q(-1, 6), 1,
       (1 - r5 + std::sqrt(5 * (r5 - 1) / 2)) / 3, "k3 s=2sqrt5"},
      {3, 1, 4 * r2, q(-1, 12), 1,
       (6 - 5 * r2 + (4 * r2 + 2) * std::sqrt(r2 - 1)) / 6, "k3 s=4sqrt2"},
      {3, 1, r5 / 2, q(0, 1), 1,
       (r5 - 1 + std::sqrt(5 * (r5 - 1) / 2)) / 3, "k3 s=sqrt5/2"},
      {4, 1, 3 * r7, q(0, 1), 1,
       (9 + r21 - std::sqrt(26 * r21 - 114)) / 16, "k4 s=3sqrt7"},
      {4, 1, 3 / r7, q(0, 1), 1,
       (9 + r21 + std::sqrt(26 * r21 - 114)) / 16, "k4 s=3/sqrt7"},
      {3, 1, 5 * r2, q(1, 6), -1,
       root_near([](Real c) { return sextic_p(3 * c); }, 0.766L), "k3 s=5sqrt2 (sextic)"},
      {3, 1, 5 / r2, q(0, 1), 1,
       root_near([](Real c) { return sextic_p(-3 * c); }, 0.940L), "k3 s=5/sqrt2 (sextic)"},
      {5, 1, r2, q(0, 1), 1, root_near(sextic_q, 0.861L), "k5 s=sqrt2 (sextic)"},
      {5, 2, r2, q(1, 10), -1,
       root_near([](Real c) { return sextic_q(-c); }, 0.634L), "k5 e2 s=sqrt2 (sextic)"},
  };
  return rows;
}

Table3Report table3_check(Real tol) {
  Table3Report report;
  for (const auto& row : special_values()) {
    ++report.rows;
    const Real sk = static_cast<Real>(ratarith::dedekind_sum(row.eps, row.k).to_double());
    const Real b = static_cast<Real>(row.b.to_long_double());
    const Real expected = kPi * (sk + b) + Real(row.sigma) / 2 * std::acos(row.c);
    const Real got = f_value(row.k, row.eps, row.s, tol / 100);
    const long long eps_star =
        ratarith::mod_inverse(row.eps, row.k).convert_to<long long>();
    const Real companion_expected = kPi * (sk - b) - Real(row.sigma) / 2 * std::acos(row.c);
    const Real companion_got = f_value(row.k, eps_star, 1 / row.s, tol / 100);
    const Real pair_sum = got + companion_got;
    bool ok = std::abs(got - expected) <= tol &&
              std::abs(companion_got - companion_expected) <= tol &&
              std::abs(pair_sum - 2 * kPi * sk) <= tol;
    if (!ok) {
      ++report.failures;
      report.messages.push_back(std::string("special value mismatch: ") + row.label);
    }
  }
  return report;
}

}  // namespace etcs::etafn
