#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etcs/hypgeo.hpp"
#include "etcs/matching.hpp"

using namespace etcs;
using namespace etcs::hypgeo;

namespace {

const std::vector<matching::EtcsExample>& table() {
  static const auto rows = matching::enumerate_examples(blocks::default_catalog());
  return rows;
}

gluing::GluingData example_228() { return gluing::make_gluing(3, 5, 1, -1, 1, 1, 10, -5); }

}  // namespace

TEST_CASE("cusp angles") {
  const auto zero = make_cusp(0, 1);
  const auto one = make_cusp(1, 1);
  const auto inf = CuspPoint::infinity();
  CHECK(cusp_angle(zero, inf, one) == Rational(1));
  CHECK(cusp_angle(inf, make_cusp(5, 1), zero) == Rational(5));
  CHECK(cusp_angle(make_cusp(1, 2), zero, zero) == Rational(0));
  CHECK_THROWS_AS(cusp_angle(zero, zero, one), std::domain_error);
}

TEST_CASE("triangle sanity") { CHECK(triangle_sanity()); }

TEST_CASE("reflection criterion") {
  CHECK(reflection_fixed(make_cusp(0, 1), make_cusp(1, 1)));
  CHECK(reflection_fixed(make_cusp(1, 2), CuspPoint::infinity()));
  CHECK_FALSE(reflection_fixed(make_cusp(2, 5), CuspPoint::infinity()));
}

TEST_CASE("geodesic endpoints of the standard example") {
  auto ends = geodesic_endpoints(example_228());
  CHECK(ends.gamma_plus_re == Rational(BigInt(1), BigInt(3)));
  CHECK(ends.gamma_minus_a == make_cusp(-3, 1));
  CHECK(ends.gamma_minus_b == make_cusp(2, 1));

  // m = 0 sends the adiabatic end to infinity.
  auto right = gluing::make_gluing(3, 3, 1, 1, 0, 3, 3, 0);
  CHECK(geodesic_endpoints(right).gamma_minus_a.is_infinity());
}

TEST_CASE("intersection angle") {
  CHECK(intersection_angle_check(example_228(), 1e-9));
  CHECK(intersection_angle_check(gluing::make_gluing(1, 2, 0, 1, 1, 1, 1, -1), 1e-9));
}

TEST_CASE("polygon of the standard example") {
  auto poly = build_polygon(example_228());
  CHECK(poly.ell == 4);
  CHECK(poly.expansion.digits == std::vector<BigInt>{0, 4, 2, 2});
  REQUIRE(poly.corners.size() == 5);
  CHECK(poly.corners.front() == make_cusp(-3, 1));
  CHECK(poly.corners.back() == make_cusp(1, 3));
  for (std::size_t j = 0; j + 1 < poly.corners.size(); ++j) {
    CHECK(reflection_fixed(poly.corners[j], poly.corners[j + 1]));
    // Adjacent determinant +1 in both pictures.
    CHECK(poly.corners[j + 1].e * poly.corners[j].f -
              poly.corners[j + 1].f * poly.corners[j].e ==
          1);
  }
  CHECK_THROWS_AS(build_polygon(gluing::make_gluing(3, 3, 1, 1, 0, 3, 3, 0)),
                  std::domain_error);
}

TEST_CASE("single-digit polygon") {
  auto g = gluing::make_gluing(1, 2, 0, 1, 1, 1, 1, -1);
  auto poly = build_polygon(g);
  CHECK(poly.ell == 1);
  CHECK(poly.expansion.digits == std::vector<BigInt>{1});
}

TEST_CASE("polygon identity on worked rows") {
  auto id228 = polygon_identity_check(example_228());
  CHECK(id228.pass);
  CHECK(id228.b1_congruence);
  CHECK(id228.lhs == Rational(BigInt(137), BigInt(15)));

  auto g208 = gluing::make_gluing(3, 3, -1, -1, 1, 1, 8, -1);
  auto id208 = polygon_identity_check(g208);
  CHECK(id208.pass);
  CHECK(id208.b1_congruence);
}

TEST_CASE("cusp angles agree in the two pictures") {
  // The rotated picture turns interior corner angles into the digits; the
  // original picture must give the same exact values.
  for (const auto& r : table()) {
    if (r.g.m == 0) continue;
    auto poly = build_polygon(r.g);
    const auto& c = poly.expansion.digits;
    for (std::size_t j = 0; j + 2 < poly.corners.size(); ++j) {
      const Rational original =
          cusp_angle(poly.corners[j + 1], poly.corners[j], poly.corners[j + 2]);
      const Rational rotated = cusp_angle(poly.prime_corners[j + 1],
                                          poly.prime_corners[j], poly.prime_corners[j + 2]);
      CHECK(original == rotated);
      CHECK(original == Rational(c[c.size() - 1 - j]));
    }
  }
}

TEST_CASE("polygon identity holds on every applicable table row") {
  int checked = 0;
  for (const auto& r : table()) {
    if (r.g.m <= 0) continue;
    ++checked;
    auto id = polygon_identity_check(r.g);
    CHECK(id.pass);
    CHECK(id.b1_congruence);
    CHECK(intersection_angle_check(r.g, 1e-9));
    CHECK(endpoint_unit_check(r.g));
  }
  CHECK(checked > 200);
}

TEST_CASE("gauss-bonnet bookkeeping") {
  // Area = ell*pi - 2*theta matches (vertices - 2)*pi minus the interior
  // angle sum, whose only nonzero term is 2*theta; as coefficients of
  // (pi, theta) both sides read (ell, -2).
  for (const auto& r : table()) {
    if (r.g.m == 0) continue;
    auto poly = build_polygon(r.g);
    const long long vertices = poly.ell + 2;
    const std::pair<long long, long long> lhs{poly.ell, -2};
    const std::pair<long long, long long> rhs{vertices - 2, -2};
    CHECK(lhs == rhs);
  }
}

TEST_CASE("aggregate identity splits into rational and angle parts") {
  // 288*(area/4pi) - 24*(cusp sum) = 72 rho/pi + 24(q/(k-n) - m/(k+n) + 12 S(A,n)):
  // the theta-linear parts are -144 theta/pi on both sides, and the rational
  // parts reduce to the polygon identity with S(A, n) in place of S(-b'_1, n).
  for (const auto& r : table()) {
    if (r.g.m <= 0) continue;
    auto poly = build_polygon(r.g);
    auto id = polygon_identity_check(r.g);
    const BigInt eps_star = ratarith::mod_inverse(r.g.eps_plus, r.g.k_plus);
    const BigInt a = (BigInt(r.g.m) - eps_star * r.g.n) / r.g.k_plus;
    const Rational rational_side =
        Rational(3 * (poly.ell - 1)) + Rational(BigInt(r.g.m), BigInt(r.g.k_plus) * r.g.n) -
        Rational(BigInt(r.g.q), BigInt(r.g.k_minus) * r.g.n) -
        Rational(12) * ratarith::dedekind_sum(a, r.g.n);
    CHECK(id.lhs == rational_side);  // S(A, n) = S(-b'_1, n) via the inverse relation
  }
}

TEST_CASE("svg diagnostic emits a document") {
  auto svg = polygon_svg(example_228());
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("path") != std::string::npos);
}
