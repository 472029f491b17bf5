#include "etcs/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "etcs/ratarith.hpp"

namespace etcs::gluing {

namespace {

long long llgcd(long long a, long long b) { return std::gcd(a, b); }

long long mod_reduce(long long e, long long k) {
  long long r = e % k;
  if (r < 0) r += k;
  return r;
}

long long det(const GluingData& g) { return g.m * g.q - g.n * g.p; }

}  // namespace

std::string GluingData::str() const {
  std::ostringstream os;
  os << "k=(" << k_plus << "," << k_minus << ") eps=(" << eps_signed(eps_plus, k_plus)
     << "," << eps_signed(eps_minus, k_minus) << ") G=(" << m << " " << p << "; " << n
     << " " << q << ")";
  return os.str();
}

GluingData make_gluing(long long k_plus, long long k_minus, long long eps_plus,
                       long long eps_minus, long long m, long long p, long long n,
                       long long q) {
  if (k_plus < 1 || k_minus < 1) throw std::domain_error("make_gluing: k must be >= 1");
  GluingData g;
  g.k_plus = k_plus;
  g.k_minus = k_minus;
  g.eps_plus = mod_reduce(eps_plus, k_plus);
  g.eps_minus = mod_reduce(eps_minus, k_minus);
  g.m = m;
  g.p = p;
  g.n = n;
  g.q = q;
  return g;
}

long long eps_signed(long long eps, long long k) {
  long long e = mod_reduce(eps, k);
  return 2 * e > k ? e - k : e;
}

Verdict validate(const GluingData& g) {
  Verdict v;
  auto fail = [&v](const char* tag) {
    v.ok = false;
    v.violations.push_back(tag);
  };

  if (g.k_plus < 1 || g.k_minus < 1) {
    fail("k>=1");
    return v;
  }
  const long long kp = g.k_plus, km = g.k_minus;
  const long long m = g.m, p = g.p, n = g.n, q = g.q;
  const long long ep = g.eps_plus, em = g.eps_minus;

  if (llgcd(ep, kp) != 1) fail("gcd(eps+,k+)=1");
  if (llgcd(em, km) != 1) fail("gcd(eps-,k-)=1");

  if (det(g) != -kp * km) fail("(1.7)");

  const bool c18a = (ep * m - n) % kp == 0 && (ep * p - q) % kp == 0;
  if (!c18a) fail("(1.8a)");
  const bool c18b = (em * p + m) % km == 0 && (em * q + n) % km == 0;
  if (!c18b) fail("(1.8b)");

  if (c18a) {
    if (llgcd((n - ep * m) / kp, m) != 1 || llgcd((q - ep * p) / kp, p) != 1)
      fail("(1.9a)");
  }
  if (c18b) {
    if (llgcd((m + em * p) / km, p) != 1 || llgcd((n + em * q) / km, q) != 1)
      fail("(1.9b)");
  }

  if (!(llgcd(m, n) == llgcd(m, kp) && llgcd(m, kp) == llgcd(n, kp) &&
        llgcd(p, q) == llgcd(p, kp) && llgcd(p, kp) == llgcd(q, kp)))
    fail("(3.1a)");
  if (!(llgcd(m, p) == llgcd(m, km) && llgcd(m, km) == llgcd(p, km) &&
        llgcd(n, q) == llgcd(n, km) && llgcd(n, km) == llgcd(q, km)))
    fail("(3.1b)");

  const long long prod = (n * p) * (m * q);
  if (prod > 0) {
    fail("(3.2)");
  } else if (prod == 0) {
    if (!((n == 0 && p == 0) || (m == 0 && q == 0))) fail("(3.2)");
  }
  return v;
}

EpsMinusResult derive_eps_minus(long long k_plus, long long eps_plus, long long m,
                                long long p, long long n, long long q) {
  if (k_plus < 1) throw std::domain_error("derive_eps_minus: k+ must be positive");
  const long long d = m * q - n * p;
  if (d >= 0) throw std::domain_error("derive_eps_minus: determinant not negative (1.7)");
  if (d % k_plus != 0) throw std::domain_error("derive_eps_minus: k+ does not divide det (1.7)");
  const long long kp = k_plus;
  const long long ep = mod_reduce(eps_plus, kp);
  if (llgcd(ep, kp) != 1) throw std::domain_error("derive_eps_minus: gcd(eps+,k+) != 1");
  if ((ep * m - n) % kp != 0 || (ep * p - q) % kp != 0)
    throw std::domain_error("derive_eps_minus: (1.8a) violated");
  const long long u = (n - ep * m) / kp;
  const long long w = (q - ep * p) / kp;
  if (llgcd(u, m) != 1 || llgcd(w, p) != 1)
    throw std::domain_error("derive_eps_minus: (1.9a) violated");
  const long long prod = (n * p) * (m * q);
  if (prod > 0 || (prod == 0 && !((n == 0 && p == 0) || (m == 0 && q == 0))))
    throw std::domain_error("derive_eps_minus: (3.2) violated");

  const long long km = -d / kp;
  if (km == 1) return {1, 0};
  // Bezout: 1 = b*p - a*(q - eps+*p)/k+, then eps- = a*(n - eps+*m)/k+ - b*m.
  BigInt g0 = p, g1 = -w;
  BigInt b0 = 1, b1 = 0;  // coefficients of p
  BigInt a0 = 0, a1 = 1;  // coefficients of -w
  while (g1 != 0) {
    BigInt qq = g0 / g1;
    std::swap(g0 -= qq * g1, g1);
    std::swap(b0 -= qq * b1, b1);
    std::swap(a0 -= qq * a1, a1);
  }
  if (g0 < 0) {
    g0 = -g0;
    b0 = -b0;
    a0 = -a0;
  }
  if (g0 != 1) throw std::domain_error("derive_eps_minus: (1.9a) violated");
  // b0*p + a0*(-w) = 1, i.e. b = b0, a = a0.
  BigInt em = a0 * u - b0 * m;
  BigInt r = em % km;
  if (r < 0) r += km;
  return {km, r.convert_to<long long>()};
}

GluingGeometry geometry(const GluingData& g) {
  GluingGeometry geo;
  geo.cos2_theta = Rational(-g.m * g.q, g.k_plus * g.k_minus);
  if (g.m == 0 && g.q == 0) {
    geo.right_angle = true;
    geo.s_plus_sq = Rational(1);
    geo.s_minus_sq = Rational(1);
    geo.theta = std::acos(0.0);
    geo.rho_over_pi = 0.0;
    return geo;
  }
  geo.s_plus_sq = Rational(-g.n * g.q, g.m * g.p);
  geo.s_minus_sq = Rational(-g.m * g.n, g.p * g.q);
  const double c = (g.m > 0 ? 1.0 : -1.0) * std::sqrt(geo.cos2_theta.to_double());
  geo.theta = std::acos(c);
  geo.rho_over_pi = 1.0 - 2.0 * geo.theta / M_PI;
  return geo;
}

long long fundamental_group(const GluingData& g) { return g.p < 0 ? -g.p : g.p; }

GluingData covering(const GluingData& g, long long ell) {
  if (ell < 1 || g.p < 1 || g.p % ell != 0)
    throw std::domain_error("covering: ell must divide p");
  const long long gp = llgcd(ell, g.k_plus);
  const long long gm = llgcd(ell, g.k_minus);
  if (g.m % gm != 0 || g.q % gp != 0 || (g.n * ell) % (gp * gm) != 0)
    throw std::logic_error("covering: matrix entries of the cover are not integral");
  GluingData out;
  out.k_plus = g.k_plus / gp;
  out.k_minus = g.k_minus / gm;
  out.eps_plus = mod_reduce(ell / gp * g.eps_plus, out.k_plus);
  out.eps_minus = mod_reduce(ell / gm * g.eps_minus, out.k_minus);
  out.m = g.m / gm;
  out.p = g.p / ell;
  out.n = g.n * ell / (gp * gm);
  out.q = g.q / gp;
  return out;
}

GluingData swap_sides(const GluingData& g) {
  GluingData out;
  out.k_plus = g.k_minus;
  out.k_minus = g.k_plus;
  out.eps_plus = g.eps_minus;
  out.eps_minus = g.eps_plus;
  out.m = -g.q;
  out.p = g.p;
  out.n = g.n;
  out.q = -g.m;
  return out;
}

GluingData orientation_flip(const GluingData& g) {
  GluingData out = g;
  out.eps_plus = mod_reduce(-g.eps_plus, g.k_plus);
  out.eps_minus = mod_reduce(-g.eps_minus, g.k_minus);
  out.m = g.m;
  out.p = -g.p;
  out.n = -g.n;
  out.q = g.q;
  return out;
}

GluingData rotate_half(const GluingData& g) {
  GluingData out = g;
  out.m = -g.m;
  out.p = -g.p;
  out.n = -g.n;
  out.q = -g.q;
  return out;
}

std::vector<GluingData> symmetry_orbit(const GluingData& g) {
  std::set<GluingData> seen;
  for (int mask = 0; mask < 8; ++mask) {
    GluingData cur = g;
    if (mask & 1) cur = swap_sides(cur);
    if (mask & 2) cur = orientation_flip(cur);
    if (mask & 4) cur = rotate_half(cur);
    seen.insert(cur);
  }
  return {seen.begin(), seen.end()};
}

GluingData t_dual(const GluingData& g) {
  GluingData out;
  out.k_plus = g.k_plus;
  out.k_minus = g.k_minus;
  const long long isp = ratarith::mod_inverse(g.eps_plus, g.k_plus).convert_to<long long>();
  const long long ism = ratarith::mod_inverse(g.eps_minus, g.k_minus).convert_to<long long>();
  out.eps_plus = mod_reduce(-isp, g.k_plus);
  out.eps_minus = mod_reduce(-ism, g.k_minus);
  out.m = -g.q;
  out.p = g.n;
  out.n = g.p;
  out.q = -g.m;
  return out;
}

QuarterTurn quarter_turn(const GluingData& g) {
  if (g.m == 0 && g.q == 0)
    throw std::domain_error("quarter_turn: undefined at theta = pi/2");
  GluingData out;
  out.k_plus = g.k_plus;
  out.k_minus = g.k_minus;
  out.eps_plus = mod_reduce(-g.eps_plus, g.k_plus);
  out.eps_minus =
      ratarith::mod_inverse(g.eps_minus, g.k_minus).convert_to<long long>();
  out.m = g.p;
  out.p = g.m;
  out.n = -g.q;
  out.q = -g.n;
  return {out};
}

namespace {

bool in_cone(const GluingData& g) {
  return g.n > 0 && g.p > 0 && g.m >= 0 && g.q <= 0;
}

// Flip-reduce eps+ at right angles: representative in [1, k/2] (0 for k = 1).
bool right_angle_canonical(const GluingData& g) {
  if (!(g.m == 0 && g.q == 0)) return true;
  return 2 * g.eps_plus <= g.k_plus || g.k_plus == 1;
}

std::array<long long, 6> lex_key(const GluingData& g) {
  return {g.m, g.p, g.n, g.q, g.eps_plus, g.eps_minus};
}

}  // namespace

GluingData normalize(const GluingData& g) {
  std::vector<GluingData> candidates;
  for (int mask = 0; mask < 8; ++mask) {
    GluingData cur = g;
    if (mask & 1) {
      if (g.k_plus != g.k_minus) continue;  // keep the side labels stable
      cur = swap_sides(cur);
    }
    if (mask & 2) cur = orientation_flip(cur);
    if (mask & 4) cur = rotate_half(cur);
    if (!in_cone(cur)) continue;
    if (!right_angle_canonical(cur)) continue;
    candidates.push_back(cur);
  }
  if (candidates.empty())
    throw std::domain_error("normalize: no H-image in the normalized cone (degenerate data)");
  if (g.k_plus == g.k_minus) {
    std::vector<GluingData> tighter;
    for (const auto& c : candidates)
      if (c.m + c.q <= 0) tighter.push_back(c);
    if (!tighter.empty()) candidates = std::move(tighter);
  }
  return *std::min_element(candidates.begin(), candidates.end(),
                           [](const GluingData& a, const GluingData& b) {
                             return lex_key(a) < lex_key(b);
                           });
}

std::vector<GluingData> enumerate_gluings_raw(long long k_plus, long long k_minus) {
  if (k_plus < 1 || k_minus < 1)
    throw std::domain_error("enumerate_gluings: k must be >= 1");
  const long long K = k_plus * k_minus;
  std::vector<GluingData> out;
  for (long long np_val = 1; np_val <= K; ++np_val) {
    const long long mq_val = np_val - K;
    std::vector<std::pair<long long, long long>> mqs;
    if (mq_val == 0) {
      mqs.emplace_back(0, 0);
    } else {
      for (long long m = 1; m <= -mq_val; ++m)
        if ((-mq_val) % m == 0) mqs.emplace_back(m, mq_val / m);
    }
    for (long long n = 1; n <= np_val; ++n) {
      if (np_val % n != 0) continue;
      const long long p = np_val / n;
      for (auto [m, q] : mqs) {
        for (long long ep = 0; ep < k_plus; ++ep) {
          if (llgcd(ep, k_plus) != 1) continue;
          if ((ep * m - n) % k_plus != 0 || (ep * p - q) % k_plus != 0) continue;
          if (llgcd((n - ep * m) / k_plus, m) != 1) continue;
          if (llgcd((q - ep * p) / k_plus, p) != 1) continue;
          EpsMinusResult em;
          try {
            em = derive_eps_minus(k_plus, ep, m, p, n, q);
          } catch (const std::domain_error&) {
            continue;
          }
          if (em.k_minus != k_minus) continue;
          GluingData g = make_gluing(k_plus, k_minus, ep, em.eps_minus, m, p, n, q);
          if (!right_angle_canonical(g)) continue;
          if (!validate(g).ok) continue;
          out.push_back(g);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const GluingData& a, const GluingData& b) {
    return std::array{a.p, a.m, a.n, a.q, a.eps_plus} <
           std::array{b.p, b.m, b.n, b.q, b.eps_plus};
  });
  return out;
}

std::vector<GluingData> enumerate_gluings(long long k_plus, long long k_minus) {
  auto raw = enumerate_gluings_raw(k_plus, k_minus);
  if (k_plus != k_minus) return raw;
  // Identify side-swap pairs: keep m + q < 0, and for m + q = 0 (the swap
  // fixes the matrix and exchanges eps+ and eps-) the lexicographically
  // smaller eps assignment.
  std::vector<GluingData> out;
  for (const auto& g : raw) {
    if (g.m + g.q > 0) continue;
    if (g.m + g.q == 0 && g.eps_plus > g.eps_minus) continue;
    out.push_back(g);
  }
  return out;
}

}  // namespace etcs::gluing
