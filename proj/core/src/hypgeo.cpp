#include "etcs/hypgeo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace etcs::hypgeo {

Rational CuspPoint::value() const {
  if (is_infinity()) throw std::domain_error("CuspPoint: infinity has no rational value");
  return Rational(e, f);
}

std::string CuspPoint::str() const {
  if (is_infinity()) return "inf";
  return Rational(e, f).str();
}

CuspPoint make_cusp(BigInt e, BigInt f) {
  if (f < 0) {
    e = -e;
    f = -f;
  }
  if (f == 0) {
    if (e == 0) throw std::domain_error("make_cusp: 0/0");
    return {1, 0};
  }
  BigInt g = big_gcd(e, f);
  return {e / g, f / g};
}

Rational cusp_angle(const CuspPoint& cusp, const CuspPoint& x, const CuspPoint& y) {
  if (x == cusp || y == cusp)
    throw std::domain_error("cusp_angle: geodesic endpoint equals the cusp");
  if (cusp.is_infinity()) return x.value() - y.value();
  const Rational e(cusp.e), f(cusp.f);
  if (x.is_infinity() && y.is_infinity()) return Rational(0);
  if (x.is_infinity()) return Rational(1) / (f * (f * y.value() - e));
  if (y.is_infinity()) return Rational(-1) / (f * (f * x.value() - e));
  return (x.value() - y.value()) / ((f * x.value() - e) * (f * y.value() - e));
}

GeodesicEndpoints geodesic_endpoints(const gluing::GluingData& g) {
  GeodesicEndpoints out;
  out.gamma_plus_re = Rational(BigInt(g.eps_plus), BigInt(g.k_plus));
  out.gamma_minus_a = make_cusp(BigInt(g.eps_plus) * g.m - g.n, BigInt(g.k_plus) * g.m);
  out.gamma_minus_b = make_cusp(BigInt(g.eps_plus) * g.p - g.q, BigInt(g.k_plus) * g.p);
  return out;
}

bool intersection_angle_check(const gluing::GluingData& g, double tol) {
  if (g.m <= 0) throw std::domain_error("intersection_angle_check: requires m > 0");
  const auto geo = gluing::geometry(g);
  const auto ends = geodesic_endpoints(g);
  const double x1 = ends.gamma_minus_a.value().to_double();
  const double x2 = ends.gamma_minus_b.value().to_double();
  const double center = (x1 + x2) / 2;
  const double x0 = static_cast<double>(g.eps_plus) / g.k_plus;
  const double y0 = std::sqrt(geo.s_plus_sq.to_double()) / g.k_plus;
  const double r = std::hypot(x0 - center, y0);
  // Tangent of gamma- towards the adiabatic end x1 against the downward
  // vertical of gamma+.
  const double angle = std::acos((center - x0) / r);
  return std::abs(angle - 2.0 * geo.theta) <= tol;
}

bool reflection_fixed(const CuspPoint& a, const CuspPoint& b) {
  BigInt det = a.e * b.f - a.f * b.e;
  if (det < 0) det = -det;
  return det == 1 || det == 2;
}

IdealPolygon build_polygon(const gluing::GluingData& g) {
  if (g.n <= 0 || g.m < 0)
    throw std::domain_error("build_polygon: requires n > 0 and m >= 0");
  if (g.m == 0)
    throw std::domain_error("build_polygon: degenerate at theta = pi/2 (m = 0)");
  const BigInt kp = g.k_plus;
  const BigInt eps = g.eps_plus;
  const BigInt eps_star = ratarith::mod_inverse(g.eps_plus, g.k_plus);
  const BigInt a0_num = BigInt(g.m) - eps_star * g.n;
  if (a0_num % kp != 0)
    throw std::domain_error("build_polygon: (m - eps+^* n)/k+ not an integer");

  IdealPolygon poly;
  poly.expansion = ratarith::hj_expand(Rational(a0_num / kp, BigInt(g.n)));
  poly.convergents = ratarith::hj_convergents(poly.expansion);
  if (poly.convergents.b_prime.at(0) != g.n)
    throw std::domain_error("build_polygon: a'_0/b'_0 not reduced against n");
  poly.ell = static_cast<long long>(poly.expansion.digits.size());

  // r with eps+ * eps+^* = k+ * r + 1; the inverse rotation is (eps r; k eps^*).
  const BigInt r = (eps * eps_star - 1) / kp;
  for (std::size_t j = 0; j < poly.convergents.a_prime.size(); ++j) {
    const BigInt aj = poly.convergents.a_prime[j];
    const BigInt bj = poly.convergents.b_prime[j];
    poly.prime_corners.push_back(make_cusp(aj, bj));
    poly.corners.push_back(make_cusp(eps * aj + r * bj, kp * aj + eps_star * bj));
  }
  const auto geo = gluing::geometry(g);
  poly.finite_vertex = {static_cast<double>(g.eps_plus) / g.k_plus,
                        std::sqrt(geo.s_plus_sq.to_double()) / g.k_plus};

  const auto ends = geodesic_endpoints(g);
  if (!(poly.corners.front() == ends.gamma_minus_a))
    throw std::logic_error("build_polygon: first corner mismatch");
  if (!(poly.corners.back() == make_cusp(eps, kp)))
    throw std::logic_error("build_polygon: last corner mismatch");
  return poly;
}

PolygonIdentity polygon_identity_check(const gluing::GluingData& g) {
  const auto poly = build_polygon(g);
  const auto& c = poly.expansion.digits;
  const BigInt b1 = poly.convergents.b_prime.at(1);
  const BigInt eps_star = ratarith::mod_inverse(g.eps_plus, g.k_plus);

  PolygonIdentity out;
  Rational lhs = Rational(BigInt(-g.q), BigInt(g.k_minus) * g.n) + Rational(b1, BigInt(g.n)) +
                 Rational(eps_star, BigInt(g.k_plus)) + Rational(c.at(0));
  for (std::size_t j = 1; j < c.size(); ++j) lhs += Rational(c[j]);
  out.lhs = lhs;
  out.rhs = Rational(3 * (poly.ell - 1)) + Rational(BigInt(g.m), BigInt(g.k_plus) * g.n) -
            Rational(BigInt(g.q), BigInt(g.k_minus) * g.n) -
            Rational(12) * ratarith::dedekind_sum(-b1, g.n);
  out.pass = out.lhs == out.rhs;

  const BigInt eps_minus_star = ratarith::mod_inverse(g.eps_minus, g.k_minus);
  const BigInt cong_num = BigInt(g.q) + eps_minus_star * g.n;
  out.b1_congruence =
      cong_num % g.k_minus == 0 && (b1 - cong_num / g.k_minus) % g.n == 0;
  return out;
}

bool triangle_sanity() {
  const CuspPoint zero = make_cusp(0, 1);
  const CuspPoint one = make_cusp(1, 1);
  const CuspPoint inf = CuspPoint::infinity();
  const Rational a = cusp_angle(zero, inf, one);
  const Rational b = cusp_angle(one, zero, inf);
  const Rational c = cusp_angle(inf, one, zero);
  if (!(a == Rational(1) && b == Rational(1) && c == Rational(1))) return false;
  const Rational sum = a + b + c;
  return sum == Rational(3) && sum / Rational(12) == Rational(BigInt(1), BigInt(4));
}

bool endpoint_unit_check(const gluing::GluingData& g) {
  if (g.m <= 0 || g.p <= 0) throw std::domain_error("endpoint_unit_check: needs m, p > 0");
  // Endpoints in lowest terms: u/m and w/p with u = (eps+ m - n)/k+ etc.
  const BigInt u = (BigInt(g.eps_plus) * g.m - g.n) / g.k_plus;
  const BigInt w = (BigInt(g.eps_plus) * g.p - g.q) / g.k_plus;
  if (big_gcd(u, BigInt(g.m)) != 1 || big_gcd(w, BigInt(g.p)) != 1) return false;
  if (w * g.m - BigInt(g.p) * u != g.k_minus) return false;
  const BigInt km(g.k_minus);
  return (u + BigInt(g.eps_minus) * w) % km == 0 &&
         (BigInt(g.m) + BigInt(g.eps_minus) * g.p) % km == 0;
}

namespace {

void svg_geodesic(std::ostringstream& os, double x1, double x2, bool to_infinity,
                  double scale, double ox, double oy, const char* color) {
  if (to_infinity) {
    os << "<line x1='" << ox + scale * x1 << "' y1='" << oy << "' x2='"
       << ox + scale * x1 << "' y2='0' stroke='" << color << "' fill='none'/>\n";
    return;
  }
  const double c = ox + scale * (x1 + x2) / 2;
  const double r = scale * std::abs(x2 - x1) / 2;
  os << "<path d='M " << ox + scale * x1 << " " << oy << " A " << r << " " << r
     << " 0 0 1 " << ox + scale * x2 << " " << oy << "' stroke='" << color
     << "' fill='none'/>\n";
  (void)c;
}

}  // namespace

std::string polygon_svg(const gluing::GluingData& g) {
  const auto poly = build_polygon(g);
  std::vector<double> xs;
  for (const auto& corner : poly.corners)
    if (!corner.is_infinity()) xs.push_back(corner.value().to_double());
  xs.push_back(poly.finite_vertex.real());
  const double lo = *std::min_element(xs.begin(), xs.end());
  const double hi = *std::max_element(xs.begin(), xs.end());
  const double span = std::max(hi - lo, 1e-3);
  const double width = 640, height = 360, margin = 40;
  const double scale = (width - 2 * margin) / span;
  const double ox = margin - scale * lo;
  const double oy = height - margin;

  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='"
     << height << "'>\n";
  os << "<line x1='0' y1='" << oy << "' x2='" << width << "' y2='" << oy
     << "' stroke='black'/>\n";
  for (std::size_t j = 0; j + 1 < poly.corners.size(); ++j) {
    const auto& a = poly.corners[j];
    const auto& b = poly.corners[j + 1];
    if (a.is_infinity()) {
      svg_geodesic(os, b.value().to_double(), 0, true, scale, ox, oy, "steelblue");
    } else if (b.is_infinity()) {
      svg_geodesic(os, a.value().to_double(), 0, true, scale, ox, oy, "steelblue");
    } else {
      svg_geodesic(os, a.value().to_double(), b.value().to_double(), false, scale, ox,
                   oy, "steelblue");
    }
  }
  // The two sides through the finite vertex.
  const auto ends = geodesic_endpoints(g);
  svg_geodesic(os, ends.gamma_plus_re.to_double(), 0, true, scale, ox, oy, "darkred");
  if (!ends.gamma_minus_a.is_infinity())
    svg_geodesic(os, ends.gamma_minus_a.value().to_double(),
                 ends.gamma_minus_b.value().to_double(), false, scale, ox, oy,
                 "darkred");
  os << "<circle cx='" << ox + scale * poly.finite_vertex.real() << "' cy='"
     << oy - scale * poly.finite_vertex.imag() << "' r='3' fill='black'/>\n";
  for (const auto& corner : poly.corners) {
    if (corner.is_infinity()) continue;
    os << "<circle cx='" << ox + scale * corner.value().to_double() << "' cy='" << oy
       << "' r='2.5' fill='steelblue'/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace etcs::hypgeo
