#pragma once

#include <Eigen/Dense>
#include <cstdio>
#include <string>
#include <vector>

#include "frameforge/besselian.hpp"
#include "frameforge/paire.hpp"

namespace frameforge {

/// The Haar system on a dyadic grid of 2^level cells, as a paire over the
/// weighted l1 space whose norm matches the L1([0,1]) integral of step
/// functions (weights 1/N).  Vectors are L1-normalized; functionals come from
/// the inverse Haar matrix, so reconstruction is exact.
struct HaarDiscretization {
  int level = 0;
  Eigen::Index n = 1;  // 2^level grid cells
  NormedSpace space;
  Paire paire;
};

inline HaarDiscretization haar_paire(int level, int level_cap = 4) {
  if (level < 0) throw InvalidArgumentError("haar_paire: level must be >= 0");
  if (level > level_cap)
    throw LevelTooLargeError("haar_paire: level " + std::to_string(level) +
                             " above cap " + std::to_string(level_cap) +
                             " (exact constants enumerate 2^N dual extreme points)");
  const Eigen::Index n = Eigen::Index{1} << level;
  NormedSpace space(n, 1.0, Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)));

  Eigen::MatrixXd H(n, n);
  H.col(0) = Eigen::VectorXd::Ones(n);  // the constant function
  Eigen::Index col = 1;
  for (int j = 0; j < level; ++j) {
    const Eigen::Index support = n >> j;       // cells under one step
    const double height = static_cast<double>(Eigen::Index{1} << j);  // L1 normalization
    for (Eigen::Index m = 0; m < (Eigen::Index{1} << j); ++m) {
      Eigen::VectorXd h = Eigen::VectorXd::Zero(n);
      const Eigen::Index start = m * support;
      h.segment(start, support / 2).setConstant(height);
      h.segment(start + support / 2, support / 2).setConstant(-height);
      H.col(col++) = h;
    }
  }

  const Eigen::MatrixXd Hinv = H.partialPivLu().inverse();
  std::vector<PaireTerm> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) terms.push_back({H.col(k), Hinv.row(k).transpose()});
  return {level, n, space, Paire(space, std::move(terms))};
}

struct HaarGrowthRow {
  int level = 0;
  Eigen::Index n = 1;
  double besselian_exact = 0.0;
  double frame_constant = 0.0;
  double nuclearity_sum = 0.0;
};

/// Exact constants per level, for eyeballing how fast the besselian constant
/// grows on the discretized L1 space.  Monotonicity is a checked property;
/// the growth magnitude is reported, not judged.
inline std::vector<HaarGrowthRow> besselian_growth_study(int max_level, int level_cap = 4) {
  std::vector<HaarGrowthRow> rows;
  rows.reserve(static_cast<std::size_t>(max_level) + 1);
  for (int level = 0; level <= max_level; ++level) {
    const HaarDiscretization h = haar_paire(level, level_cap);
    HaarGrowthRow row;
    row.level = level;
    row.n = h.n;
    // the dual enumeration is 2^N sign vectors; the default cap in
    // BesselianOptions still applies, so raising level_cap past it fails
    // loudly instead of grinding
    row.besselian_exact =
        besselian_constant(h.paire, BesselianMethod::exact).constant.value();
    row.frame_constant = frame_constant(h.paire, ConstantMethod::exact).value();
    row.nuclearity_sum = frameforge::nuclearity_sum(h.paire);
    rows.push_back(row);
  }
  return rows;
}

/// CSV with 17 significant digits (round-trip exact for doubles).
inline std::string growth_csv(const std::vector<HaarGrowthRow>& rows) {
  std::string out = "level,N,besselian_exact,frame_constant,nuclearity_sum\n";
  char buf[160];
  for (const HaarGrowthRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%lld,%.17g,%.17g,%.17g\n", r.level,
                  static_cast<long long>(r.n), r.besselian_exact, r.frame_constant,
                  r.nuclearity_sum);
    out += buf;
  }
  return out;
}

}  // namespace frameforge
