#include "etcs/matching.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "etcs/nu.hpp"

namespace etcs::matching {

ConfigAngles config_angles_rank1(const Configuration& c) {
  ConfigAngles out;
  const double theta =
      std::acos(static_cast<double>(c.h) /
                std::sqrt(static_cast<double>(c.n_plus) * static_cast<double>(c.n_minus)));
  double two_theta = 2.0 * theta;  // in (0, pi], pi exactly when h = 0
  out.alpha_plus = {two_theta, two_theta >= M_PI ? M_PI : -two_theta, 0.0};
  out.alpha_minus.assign(19, 0.0);
  return out;
}

int m_rho(int rho_sign, double rho_abs, const std::vector<double>& alpha_minus) {
  if (rho_sign == 0) return 0;
  const double eps = 1e-12;
  int at_boundary = 0;
  int inside = 0;
  for (double a : alpha_minus) {
    if (std::abs(a - (M_PI - rho_abs)) < eps || std::abs(a - M_PI) < eps)
      ++at_boundary;
    else if (a > M_PI - rho_abs && a < M_PI)
      ++inside;
  }
  return rho_sign * (at_boundary - 1) + 2 * rho_sign * inside;
}

int b3(const blocks::BlockRecord& z_plus, const blocks::BlockRecord& z_minus,
       bool theta_is_right_angle) {
  return (theta_is_right_angle ? 23 : 22) + z_plus.b3_gamma + z_minus.b3_gamma;
}

CotorsionReport cotorsion_h3(const Configuration&) { return {}; }

namespace {

struct Section {
  long long k_plus;
  long long k_minus;
};

std::vector<EtcsExample> enumerate_section(const blocks::Catalog& catalog,
                                           const Section& sec) {
  std::vector<const blocks::BlockRecord*> plus_blocks, minus_blocks;
  for (const auto& b : catalog) {
    if (b.k == sec.k_plus) plus_blocks.push_back(&b);
    if (b.k == sec.k_minus) minus_blocks.push_back(&b);
  }
  auto by_id = [](const blocks::BlockRecord* a, const blocks::BlockRecord* b) {
    return a->id < b->id;
  };
  std::sort(plus_blocks.begin(), plus_blocks.end(), by_id);
  std::sort(minus_blocks.begin(), minus_blocks.end(), by_id);
  if (plus_blocks.empty() || minus_blocks.empty()) return {};

  std::set<long long> plus_norms, minus_norms;
  for (auto* b : plus_blocks) plus_norms.insert(b->n_norm);
  for (auto* b : minus_blocks) minus_norms.insert(b->n_norm);

  const auto raw = gluing::enumerate_gluings_raw(sec.k_plus, sec.k_minus);

  // Fixpoint contributions depend only on (block, eps); cache per section.
  std::map<std::pair<int, long long>, Rational> d_cache;
  auto fixpoint_term = [&](const blocks::BlockRecord& b, long long eps) {
    auto key = std::make_pair(b.id, eps);
    auto it = d_cache.find(key);
    if (it == d_cache.end())
      it = d_cache.emplace(key, blocks::d_gamma(b, eps)).first;
    return it->second;
  };

  std::vector<EtcsExample> out;
  for (long long n_plus : plus_norms) {
    for (long long n_minus : minus_norms) {
      if (sec.k_plus == sec.k_minus && n_plus > n_minus) continue;  // side-swap convention
      for (long long h = 0; h * h < n_plus * n_minus; ++h) {
        Configuration config{n_plus, n_minus, h};
        const Rational cos2 = config.cos2_theta();

        std::vector<gluing::GluingData> mats;
        for (const auto& g : raw) {
          if (gluing::geometry(g).cos2_theta != cos2) continue;
          if (sec.k_plus == sec.k_minus && n_plus == n_minus) {
            // Symmetric Gram: the side swap acts within the cell, so keep
            // one representative per swap pair.
            if (g.m + g.q > 0) continue;
            if (g.m + g.q == 0 && g.eps_plus > g.eps_minus) continue;
          }
          mats.push_back(g);
        }
        if (mats.empty()) continue;
        std::sort(mats.begin(), mats.end(),
                  [](const gluing::GluingData& a, const gluing::GluingData& b) {
                    return std::array{a.p, a.m, a.eps_plus} <
                           std::array{b.p, b.m, b.eps_plus};
                  });

        for (const auto& g : mats) {
          const auto geo = gluing::geometry(g);
          const auto angles = config_angles_rank1(config);
          const int rho_sign = geo.right_angle ? 0 : (geo.rho_over_pi > 0 ? 1 : -1);
          const int mr =
              m_rho(rho_sign, std::abs(geo.rho_over_pi) * M_PI, angles.alpha_minus);
          for (auto* zm : minus_blocks) {
            if (zm->n_norm != n_minus) continue;
            for (auto* zp : plus_blocks) {
              if (zp->n_norm != n_plus) continue;
              EtcsExample ex;
              ex.g = g;
              ex.config = config;
              ex.z_plus = zp->id;
              ex.z_minus = zm->id;
              ex.b3 = b3(*zp, *zm, geo.right_angle);
              ex.pi1_order = gluing::fundamental_group(g);
              ex.d_plus = fixpoint_term(*zp, g.eps_plus);
              ex.d_minus = fixpoint_term(*zm, g.eps_minus);
              ex.m_rho = mr;
              auto breakdown = nu::nu_bar_exact(g, ex.d_plus, ex.d_minus, mr);
              ex.nu_bar = breakdown.nu_bar.to_integer();
              auto n48 = nu::nu_mod48(ex.nu_bar);
              ex.nu_mod48 = n48.nu;
              ex.nullbordant = n48.nullbordant;
              out.push_back(std::move(ex));
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<EtcsExample> enumerate_examples(const blocks::Catalog& catalog, int workers) {
  std::set<long long> orders;
  for (const auto& b : catalog) orders.insert(b.k);
  std::vector<Section> sections;
  for (long long kp : orders)
    for (long long km : orders) {
      if (kp > km) continue;
      if (kp == 1 && km == 1) continue;  // ordinary twisted connected sums
      sections.push_back({kp, km});
    }
  std::sort(sections.begin(), sections.end(), [](const Section& a, const Section& b) {
    return std::pair{a.k_plus, a.k_minus} < std::pair{b.k_plus, b.k_minus};
  });

  std::vector<std::vector<EtcsExample>> per_section(sections.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < sections.size(); ++i)
      per_section[i] = enumerate_section(catalog, sections[i]);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= sections.size()) return;
          per_section[i] = enumerate_section(catalog, sections[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<EtcsExample> out;
  for (auto& part : per_section)
    for (auto& ex : part) {
      ex.row_id = static_cast<int>(out.size()) + 1;
      out.push_back(std::move(ex));
    }
  return out;
}

namespace {

// Passing to a subgroup keeps the underlying family; blocks are keyed by
// (label, index, degree) and looked up at the shrunken automorphism order.
std::optional<int> block_at_order(const blocks::Catalog& catalog, int block_id,
                                  long long order) {
  const auto& b = blocks::block_by_id(catalog, block_id);
  if (b.k == order) return b.id;
  for (const auto& cand : catalog)
    if (cand.k == order && cand.fano_label == b.fano_label &&
        cand.index_r == b.index_r && cand.degree == b.degree)
      return cand.id;
  return std::nullopt;
}

}  // namespace

std::vector<CoverEdge> covering_edges(const blocks::Catalog& catalog,
                                      const std::vector<EtcsExample>& rows) {
  std::vector<CoverEdge> edges;
  for (const auto& row : rows) {
    if (row.pi1_order <= 1) continue;
    for (long long ell = 2; ell <= row.pi1_order; ++ell) {
      if (row.pi1_order % ell != 0) continue;
      gluing::GluingData cov = gluing::covering(row.g, ell);
      auto zp = block_at_order(catalog, row.z_plus, cov.k_plus);
      auto zm = block_at_order(catalog, row.z_minus, cov.k_minus);
      if (!zp || !zm) continue;
      for (const auto& target : rows) {
        auto matches = [&](const gluing::GluingData& g, int tzp, int tzm) {
          if (g.k_plus != target.g.k_plus || g.k_minus != target.g.k_minus) return false;
          if (tzp != target.z_plus || tzm != target.z_minus) return false;
          try {
            return gluing::normalize(g) == target.g;
          } catch (const std::exception&) {
            return false;
          }
        };
        if (matches(cov, *zp, *zm)) {
          edges.push_back({row.row_id, ell, target.row_id, false});
          break;
        }
        if (matches(gluing::swap_sides(cov), *zm, *zp)) {
          edges.push_back({row.row_id, ell, target.row_id, true});
          break;
        }
      }
    }
  }
  return edges;
}

}  // namespace etcs::matching
