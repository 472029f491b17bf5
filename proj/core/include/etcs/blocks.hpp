#pragma once

#include <array>
#include <string>
#include <vector>

#include "etcs/rational.hpp"

namespace etcs::blocks {

// One orbit of isolated fixpoints: the powers tau^j (j in j_set) fix each of
// the point_count points, acting on the tangent space with eigenvalue angles
// 2*pi*j*b_l/k.  The stored triple has b_1 + b_2 + b_3 = 0.
struct FixpointOrbit {
  std::vector<int> j_set;
  int point_count = 0;
  std::array<long long, 3> exponents{};
};

// One building block: a rank-1 family with an automorphism group Z/k acting
// trivially on the polarising lattice.
struct BlockRecord {
  int id = 0;
  std::string fano_label;
  int index_r = 1;
  int degree = 0;   // -K_Y^3
  int n_norm = 0;   // square-norm of the polarising-lattice generator
  int b3_y = 0;
  int c2h = 0;
  int k = 1;        // automorphism order (1 = none)
  int b3_gamma = 0; // invariant third Betti number of the block
  std::vector<FixpointOrbit> fixpoints;
  std::string example_ref;
};

using Catalog = std::vector<BlockRecord>;

// Parses the catalog text format: one record per line,
//   id,fano_label,r,degree,n_norm,b3_Y,c2H,k,b3_gamma,example_ref,fixpoints
// where fixpoints is a semicolon-separated list of "j1|j2|...:count:(b1,b2,b3)"
// (empty = no isolated fixpoints).  '#' starts a comment line.
Catalog load_catalog(const std::string& text);
Catalog load_catalog_file(const std::string& path);

// The built-in catalog of the 29 rank-1 blocks.
const Catalog& default_catalog();
std::string default_catalog_text();

const BlockRecord& block_by_id(const Catalog& cat, int id);

// Fixpoint contribution D_{tau^eps}(V): the cotangent-weighted sum over the
// isolated fixpoints of the powers of tau^eps.  Exact; the sum over powers
// always lands in Q even though the individual terms live in a cyclotomic
// field.  Requires gcd(eps, k) = 1.
Rational d_gamma(const BlockRecord& b, long long eps);

// Checks D_{tau^eps}(V) - 24*eps^*/k in Z.
bool integrality_check(const BlockRecord& b, long long eps);

}  // namespace etcs::blocks
