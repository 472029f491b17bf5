#include "etcs/blocks.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "etcs/cyclotomic.hpp"
#include "etcs/ratarith.hpp"

namespace etcs::blocks {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

FixpointOrbit parse_orbit(const std::string& text, int line_no) {
  // "j1|j2|...:count:(b1,b2,b3)"
  auto parts = split(text, ':');
  if (parts.size() != 3)
    throw std::runtime_error("catalog line " + std::to_string(line_no) +
                             ": malformed fixpoint orbit '" + text + "'");
  FixpointOrbit orbit;
  for (const auto& j : split(parts[0], '|')) orbit.j_set.push_back(std::stoi(strip(j)));
  orbit.point_count = std::stoi(strip(parts[1]));
  std::string tr = strip(parts[2]);
  if (tr.size() < 2 || tr.front() != '(' || tr.back() != ')')
    throw std::runtime_error("catalog line " + std::to_string(line_no) +
                             ": malformed exponent triple '" + tr + "'");
  auto comps = split(tr.substr(1, tr.size() - 2), ',');
  if (comps.size() != 3)
    throw std::runtime_error("catalog line " + std::to_string(line_no) +
                             ": exponent triple needs 3 entries");
  for (int i = 0; i < 3; ++i) orbit.exponents[i] = std::stoll(strip(comps[i]));
  return orbit;
}

void check_record(const BlockRecord& b) {
  auto bad = [&b](const std::string& why) {
    throw std::runtime_error("catalog block " + std::to_string(b.id) + ": " + why);
  };
  if (b.k < 1) bad("automorphism order must be >= 1");
  if (b.index_r >= 1 && b.degree % (b.index_r * b.index_r) == 0 &&
      b.n_norm != b.degree / (b.index_r * b.index_r))
    bad("norm-square must equal degree / r^2");
  if (b.k <= 2 && !b.fixpoints.empty())
    bad("involutions and trivial groups cannot have isolated fixpoints");
  for (const auto& orbit : b.fixpoints) {
    long long sum = orbit.exponents[0] + orbit.exponents[1] + orbit.exponents[2];
    if (sum != 0) bad("exponent triple must sum to zero");
    if (orbit.point_count < 1) bad("orbit needs a positive point count");
    for (int j : orbit.j_set) {
      if (j <= 0 || j >= b.k) bad("orbit power outside (0, k)");
      for (long long e : orbit.exponents)
        if ((static_cast<long long>(j) * e) % b.k == 0)
          bad("unit eigenvalue: fixpoint not isolated");
    }
  }
}

}  // namespace

Catalog load_catalog(const std::string& text) {
  Catalog cat;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    auto fields = split(t, ',');
    // The exponent triples contain commas; re-join everything from field 10 on.
    if (fields.size() < 10)
      throw std::runtime_error("catalog line " + std::to_string(line_no) +
                               ": expected at least 10 fields");
    std::string fix_text;
    for (std::size_t i = 10; i < fields.size(); ++i) {
      if (i > 10) fix_text += ',';
      fix_text += fields[i];
    }
    BlockRecord b;
    try {
      b.id = std::stoi(strip(fields[0]));
      b.fano_label = strip(fields[1]);
      b.index_r = std::stoi(strip(fields[2]));
      b.degree = std::stoi(strip(fields[3]));
      b.n_norm = std::stoi(strip(fields[4]));
      b.b3_y = std::stoi(strip(fields[5]));
      b.c2h = std::stoi(strip(fields[6]));
      b.k = std::stoi(strip(fields[7]));
      b.b3_gamma = std::stoi(strip(fields[8]));
      b.example_ref = strip(fields[9]);
    } catch (const std::exception&) {
      throw std::runtime_error("catalog line " + std::to_string(line_no) +
                               ": malformed numeric field");
    }
    fix_text = strip(fix_text);
    if (!fix_text.empty())
      for (const auto& orbit_text : split(fix_text, ';'))
        b.fixpoints.push_back(parse_orbit(strip(orbit_text), line_no));
    check_record(b);
    cat.push_back(std::move(b));
  }
  return cat;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog(buf.str());
}

std::string default_catalog_text() {
  return R"(# Rank-1 building blocks.
# id,fano_label,r,degree,n_norm,b3_Y,c2H,k,b3_gamma,example_ref,fixpoints
1,P3,4,64,4,0,22,1,66,5.3,
2,Q,3,54,6,0,26,1,56,5.3,
3,V1,2,8,2,42,16,1,52,5.3,
4,V2,2,16,4,20,20,1,38,5.3,
5,V2,2,16,4,20,20,2,18,5.4,
6,V3,2,24,6,10,24,1,36,5.3,
7,V4,2,32,8,4,28,1,38,5.3,
8,V5,2,40,10,0,32,1,42,5.3,
9,X2,1,2,2,104,26,1,108,5.3,
10,X2,1,2,2,104,26,2,46,5.4,
11,X2,1,2,2,104,26,3,24,5.9,1|2:2:(1,1,-2)
12,X2,1,2,2,104,26,5,8,5.10,1|2|3|4:1:(1,1,-2)
13,X2,1,2,2,104,26,6,4,5.9,2|4:2:(1,1,-2)
14,X4,1,4,4,60,28,1,66,5.3,
15,X4,1,4,4,60,28,2,26,5.4,
16,X4,1,4,4,60,28,3,12,5.8,1|2:1:(1,1,-2)
17,X4,1,4,4,60,28,4,6,5.6,
18,X6,1,6,6,40,30,1,48,5.3,
19,X6,1,6,6,40,30,2,18,5.4,
20,X6,1,6,6,40,30,3,8,5.5,
21,X8,1,8,8,28,32,1,38,5.3,
22,X8,1,8,8,28,32,2,14,5.4,
23,X10,1,10,10,20,34,1,32,5.3,
24,X10,1,10,10,20,34,2,12,5.4,
25,X12,1,12,12,14,36,1,28,5.3,
26,X14,1,14,14,10,38,1,26,5.3,
27,X16,1,16,16,6,40,1,24,5.3,
28,X18,1,18,18,4,42,1,24,5.3,
29,X22,1,22,22,0,46,1,24,5.3,
)";
}

const Catalog& default_catalog() {
  static const Catalog cat = load_catalog(default_catalog_text());
  return cat;
}

const BlockRecord& block_by_id(const Catalog& cat, int id) {
  for (const auto& b : cat)
    if (b.id == id) return b;
  throw std::domain_error("no catalog block with id " + std::to_string(id));
}

namespace {

// Lift an exponent triple mod k to an integer triple with sum in 2kZ, so the
// half angles pi*a_l/k are admissible.  The value below is independent of
// the lift within that constraint.
std::array<long long, 3> zero_sum_lift(std::array<long long, 3> a, long long k) {
  long long sum = a[0] + a[1] + a[2];
  long long r = sum % (2 * k);
  if (r < 0) r += 2 * k;
  if (r == 0) return a;
  if (r == k) {
    a[2] -= k;
    return a;
  }
  throw std::logic_error("fixpoint exponents: angle sum not a multiple of 2*pi");
}

}  // namespace

Rational d_gamma(const BlockRecord& b, long long eps) {
  const long long k = b.k;
  long long e = eps % k;
  if (e < 0) e += k;
  if (std::gcd(e, k) != 1)
    throw std::domain_error("d_gamma: eps must be a unit mod k");
  if (b.fixpoints.empty()) return Rational(0);

  // Everything lives in Q(zeta_{4k}), where cos(pi*a/k) = cos(2*pi*(2a)/(4k))
  // and sin likewise; the j-sum collapses to a rational.
  cyclo::Field F(static_cast<int>(4 * k));
  cyclo::Field::Elem total = F.zero();
  for (long long j = 1; j < k; ++j) {
    const long long t = (e * j) % k;  // gamma^j = tau^t
    // cot(pi j / k), as a field element: angle 2*pi*j/(2k) = 2*pi*(2j)/(4k)
    cyclo::Field::Elem cot_j =
        F.mul(F.cos2pi(2 * j), F.inverse(F.sin2pi(2 * j)));
    cyclo::Field::Elem inner = F.zero();
    bool any = false;
    for (const auto& orbit : b.fixpoints) {
      if (std::find(orbit.j_set.begin(), orbit.j_set.end(), static_cast<int>(t)) ==
          orbit.j_set.end())
        continue;
      std::array<long long, 3> a =
          zero_sum_lift({t * orbit.exponents[0], t * orbit.exponents[1],
                         t * orbit.exponents[2]},
                        k);
      cyclo::Field::Elem num = F.from_rational(Rational(1));
      cyclo::Field::Elem den = F.from_rational(Rational(1));
      for (long long al : a) {
        num = F.mul(num, F.cos2pi(2 * al));
        den = F.mul(den, F.sin2pi(2 * al));
      }
      num = F.sub(num, F.from_rational(Rational(1)));
      cyclo::Field::Elem term = F.mul(num, F.inverse(den));
      term = F.scal(Rational(orbit.point_count), term);
      inner = F.add(inner, term);
      any = true;
    }
    if (!any) continue;
    total = F.add(total, F.mul(cot_j, inner));
  }
  total = F.scal(Rational(3, k), total);
  if (!F.is_rational(total))
    throw std::logic_error("d_gamma: power sum did not collapse to a rational");
  return F.rational_part(total);
}

bool integrality_check(const BlockRecord& b, long long eps) {
  const BigInt inv = ratarith::mod_inverse(eps, b.k);
  Rational v = d_gamma(b, eps) - Rational(24 * inv, BigInt(b.k));
  return v.is_integer();
}

}  // namespace etcs::blocks
