#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include <algorithm>
#include <set>

#include "etcs/gluing.hpp"
#include "etcs/ratarith.hpp"

using namespace etcs;
using namespace etcs::gluing;

namespace {

GluingData example_228() { return make_gluing(3, 5, 1, -1, 1, 1, 10, -5); }

GluingData rectangular() { return make_gluing(1, 1, 0, 0, 0, 1, 1, 0); }

}  // namespace

TEST_CASE("validate accepts the standard example") {
  CHECK(validate(example_228()).ok);
  CHECK(validate(rectangular()).ok);
  CHECK(validate(make_gluing(2, 2, 1, 1, 1, 1, 3, -1)).ok);
}

TEST_CASE("validate reports the violated sign condition") {
  // All linear relations hold but the sign condition fails.
  auto g = make_gluing(4, 4, 1, -1, 0, 4, 4, -8);
  auto v = validate(g);
  CHECK_FALSE(v.ok);
  CHECK(std::find(v.violations.begin(), v.violations.end(), "(3.2)") !=
        v.violations.end());
}

TEST_CASE("validate flags a wrong determinant") {
  auto g = make_gluing(3, 5, 1, -1, 1, 1, 10, -4);
  auto v = validate(g);
  CHECK_FALSE(v.ok);
  CHECK(std::find(v.violations.begin(), v.violations.end(), "(1.7)") !=
        v.violations.end());
}

TEST_CASE("derive_eps_minus") {
  auto r = derive_eps_minus(3, 1, 1, 1, 10, -5);
  CHECK(r.k_minus == 5);
  CHECK(r.eps_minus == 4);  // -1 mod 5

  for (long long k : {2, 3, 4, 5, 6}) {
    auto r2 = derive_eps_minus(k, 1, 0, k, k, 0);
    CHECK(r2.k_minus == k);
    CHECK(r2.eps_minus == ratarith::mod_inverse(1, k));
  }

  auto r3 = derive_eps_minus(2, 1, 1, 1, 3, -1);
  CHECK(r3.k_minus == 2);
  CHECK(r3.eps_minus == 1);

  CHECK_THROWS_AS(derive_eps_minus(3, 1, 1, 1, 10, 5), std::domain_error);
}

TEST_CASE("derive_eps_minus does not depend on the Bezout pair") {
  // Re-derive for every enumerated datum and compare against the stored eps-.
  for (auto [kp, km] : {std::pair{3LL, 5LL}, {2LL, 6LL}, {4LL, 4LL}, {6LL, 6LL}}) {
    for (const auto& g : enumerate_gluings_raw(kp, km)) {
      auto r = derive_eps_minus(g.k_plus, g.eps_plus, g.m, g.p, g.n, g.q);
      CHECK(r.k_minus == g.k_minus);
      CHECK(r.eps_minus == g.eps_minus);
    }
  }
}

TEST_CASE("geometry of the standard example") {
  auto geo = geometry(example_228());
  CHECK(geo.cos2_theta == Rational(BigInt(1), BigInt(3)));
  CHECK(geo.s_plus_sq == Rational(50));
  CHECK(geo.s_minus_sq == Rational(2));
  CHECK(geo.theta == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))).epsilon(1e-12));
}

TEST_CASE("geometry at special angles") {
  auto g = make_gluing(1, 2, 0, 1, 1, 1, 1, -1);
  CHECK(geometry(g).theta == doctest::Approx(M_PI / 4).epsilon(1e-12));

  auto r = make_gluing(3, 3, 1, 1, 0, 3, 3, 0);
  auto geo = geometry(r);
  CHECK(geo.cos2_theta == Rational(0));
  CHECK(geo.right_angle);
  CHECK(geo.theta == doctest::Approx(M_PI / 2).epsilon(1e-12));

  // Cross-check s+^2 * s-^2 = n^2/p^2 on a batch.
  for (const auto& d : enumerate_gluings_raw(3, 4)) {
    if (d.m == 0) continue;
    auto gg = geometry(d);
    CHECK(gg.s_plus_sq * gg.s_minus_sq ==
          Rational(BigInt(d.n) * d.n, BigInt(d.p) * d.p));
    CHECK(gg.s_plus_sq.sign() > 0);
    CHECK(gg.s_minus_sq.sign() > 0);
  }
}

TEST_CASE("fundamental group is the order of p") {
  CHECK(fundamental_group(example_228()) == 1);
  CHECK(fundamental_group(make_gluing(4, 6, -1, 1, 3, 21, 1, -1)) == 21);
  CHECK(fundamental_group(make_gluing(3, 5, -1, 2, 1, 2, 5, -5)) == 2);
}

TEST_CASE("covering: the 10-fold cover of the dual example") {
  auto g = make_gluing(3, 5, -1, 1, 5, 10, 1, -1);
  auto cov = covering(g, 10);
  CHECK(cov.k_plus == 3);
  CHECK(cov.k_minus == 1);
  CHECK(cov.m == 1);
  CHECK(cov.p == 1);
  CHECK(cov.n == 2);
  CHECK(cov.q == -1);
  CHECK(cov.eps_plus == 2);  // -1 mod 3
  CHECK(validate(cov).ok);

  CHECK(covering(g, 1) == g);
  CHECK_THROWS_AS(covering(g, 3), std::domain_error);
}

TEST_CASE("covering composes and reaches a simply connected total space") {
  auto g = make_gluing(4, 6, -1, 1, 3, 21, 1, -1);  // pi1 = Z/21
  auto universal = covering(g, 21);
  CHECK(fundamental_group(universal) == 1);
  CHECK(validate(universal).ok);
  auto two_step = covering(covering(g, 3), 7);
  CHECK(two_step == universal);
  auto other_order = covering(covering(g, 7), 3);
  CHECK(other_order == universal);
}

TEST_CASE("symmetry orbit maps valid data to valid data") {
  for (const auto& g : {example_228(), make_gluing(2, 2, 1, 1, 1, 1, 3, -1)}) {
    auto orbit = symmetry_orbit(g);
    CHECK(orbit.size() <= 8);
    for (const auto& img : orbit) CHECK(validate(img).ok);
  }
  // The orientation flip is an involution.
  auto g = example_228();
  CHECK(orientation_flip(orientation_flip(g)) == g);
  // The swap behaves as stated.
  auto s = swap_sides(g);
  CHECK(s.k_plus == 5);
  CHECK(s.m == 5);
  CHECK(s.p == 1);
  CHECK(s.n == 10);
  CHECK(s.q == -1);
}

TEST_CASE("t_dual") {
  auto d = t_dual(example_228());
  CHECK(d.m == 5);
  CHECK(d.p == 10);
  CHECK(d.n == 1);
  CHECK(d.q == -1);
  CHECK(d.eps_plus == 2);   // -1 mod 3
  CHECK(d.eps_minus == 1);  // matches the table's dual row
  CHECK(validate(d).ok);
  CHECK(geometry(d).cos2_theta == geometry(example_228()).cos2_theta);

  // Applying twice returns the H-orbit of the original.
  auto dd = normalize(t_dual(d));
  CHECK(dd == normalize(example_228()));

  // At right angles the dual is a composite of the three H generators.
  auto r = make_gluing(5, 5, 2, -2, 0, 5, 5, 0);
  auto rd = t_dual(r);
  auto composite = rotate_half(orientation_flip(swap_sides(r)));
  CHECK(rd == composite);
}

TEST_CASE("quarter_turn") {
  auto g = example_228();
  auto qt = quarter_turn(g);
  CHECK(validate(qt.data).ok);
  // theta' = pi/2 - theta, so cos^2 theta' = 1 - cos^2 theta.
  CHECK(geometry(qt.data).cos2_theta ==
        Rational(1) - geometry(g).cos2_theta);
  CHECK_THROWS_AS(quarter_turn(make_gluing(2, 2, 1, 1, 0, 2, 2, 0)),
                  std::domain_error);

  // pi/4 data is self-complementary up to H.
  auto s = make_gluing(1, 2, 0, 1, 1, 1, 1, -1);
  CHECK(normalize(quarter_turn(s).data) == normalize(s));

  // Together with H the quarter turn generates a group of order <= 32.
  std::set<GluingData> closure{normalize(g)};
  for (int round = 0; round < 6; ++round) {
    std::set<GluingData> next = closure;
    for (const auto& cur : closure) {
      for (const auto& img : symmetry_orbit(cur)) next.insert(img);
      if (!(cur.m == 0 && cur.q == 0)) next.insert(quarter_turn(cur).data);
    }
    closure.swap(next);
  }
  CHECK(closure.size() <= 32);
  CHECK(32 % closure.size() == 0);
}

TEST_CASE("normalize") {
  // Mixed-sign input lands in the cone with eps flipped.
  auto g = make_gluing(2, 2, 1, 1, -1, 1, 1, 3);
  auto n = normalize(g);
  CHECK(n.m == 1);
  CHECK(n.p == 1);
  CHECK(n.n == 1);
  CHECK(n.q == -3);
  CHECK(n.eps_plus == 1);

  // Idempotent and constant on H-orbits.
  for (const auto& base : enumerate_gluings(2, 2)) {
    CHECK(normalize(base) == base);
    for (const auto& img : symmetry_orbit(base)) CHECK(normalize(img) == base);
  }
}

TEST_CASE("enumerate_gluings for small orders") {
  auto e12 = enumerate_gluings(1, 2);
  REQUIRE(e12.size() == 1);
  CHECK(e12[0].m == 1);
  CHECK(e12[0].p == 1);
  CHECK(e12[0].n == 1);
  CHECK(e12[0].q == -1);

  // Together with the order-(2,2) list this is the classical set of five.
  auto e22 = enumerate_gluings(2, 2);
  std::set<std::array<long long, 4>> mats;
  for (const auto& g : e22) mats.insert({g.m, g.p, g.n, g.q});
  CHECK(mats == std::set<std::array<long long, 4>>{
                    {0, 2, 2, 0}, {1, 1, 1, -3}, {1, 1, 3, -1}, {1, 3, 1, -1}});

  auto e35 = enumerate_gluings(3, 5);
  bool found = false;
  for (const auto& g : e35)
    if (g.m == 1 && g.p == 1 && g.n == 10 && g.q == -5 && g.eps_plus == 1 &&
        g.eps_minus == 4)
      found = true;
  CHECK(found);
}

TEST_CASE("right-angle data for equal orders") {
  for (long long k : {2, 3, 4, 5, 6}) {
    int count = 0;
    for (const auto& g : enumerate_gluings(k, k)) {
      if (!(g.m == 0 && g.q == 0)) continue;
      ++count;
      CHECK(g.n == k);
      CHECK(g.p == k);
      CHECK(g.eps_minus == ratarith::mod_inverse(g.eps_plus, k));
      CHECK(2 * g.eps_plus <= k);
    }
    // One datum per flip class of units.
    int expected = 0;
    for (long long e = 1; 2 * e <= k; ++e)
      if (std::gcd(e, k) == 1) ++expected;
    CHECK(count == expected);
  }
}

TEST_CASE("divisibility identities on enumerated data") {
  for (auto [kp, km] : {std::pair{3LL, 5LL}, {2LL, 6LL}, {4LL, 6LL}, {3LL, 3LL}}) {
    for (const auto& g : enumerate_gluings_raw(kp, km)) {
      const long long K = g.k_plus * g.k_minus;
      const long long isp =
          ratarith::mod_inverse(g.eps_plus, g.k_plus).convert_to<long long>();
      const long long ism =
          ratarith::mod_inverse(g.eps_minus, g.k_minus).convert_to<long long>();
      // (3.4) and (3.5)
      CHECK((g.n - g.eps_plus * g.m + g.eps_minus * g.q -
             g.eps_plus * g.eps_minus * g.p) % K == 0);
      CHECK((g.p - isp * g.q + ism * g.m - isp * ism * g.n) % K == 0);
      // (3.6)
      if (g.n != 0) {
        long long a = (g.m - isp * g.n) / g.k_plus;
        long long b = (g.q + ism * g.n) / g.k_minus;
        CHECK((-a * b - 1) % g.n == 0);
      }
      // Lattice index computed four ways
      long long idx = std::gcd(std::gcd(g.m, g.p), g.k_plus);
      CHECK(idx == std::gcd(std::gcd(g.n, g.q), g.k_plus));
      CHECK(idx == std::gcd(std::gcd(g.m, g.n), g.k_minus));
      CHECK(idx == std::gcd(std::gcd(g.p, g.q), g.k_minus));
    }
  }
}

TEST_CASE("enumerations of swapped orders correspond under the side swap") {
  for (auto [kp, km] : {std::pair{2LL, 3LL}, {3LL, 5LL}, {4LL, 6LL}}) {
    auto fwd = enumerate_gluings(kp, km);
    auto bwd = enumerate_gluings(km, kp);
    REQUIRE(fwd.size() == bwd.size());
    std::set<GluingData> bwd_set(bwd.begin(), bwd.end());
    for (const auto& g : fwd) {
      auto image = swap_sides(g);
      // The swap leaves the cone; renormalize within the (km, kp) labels.
      bool found = bwd_set.count(image) > 0;
      if (!found) {
        for (const auto& cand : symmetry_orbit(g)) {
          if (cand.k_plus != km) continue;
          if (bwd_set.count(cand)) {
            found = true;
            break;
          }
        }
      }
      CHECK(found);
    }
  }
}
