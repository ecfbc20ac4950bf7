#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "frameforge/bound.hpp"
#include "frameforge/space.hpp"

namespace frameforge {

/// Unweighted lq norm for q in [1, inf].
inline double lq_norm(const Eigen::VectorXd& v, double q) {
  if (q == 1.0) return v.lpNorm<1>();
  if (q == 2.0) return v.norm();
  if (q == kInfinity) return v.lpNorm<Eigen::Infinity>();
  return std::pow(v.array().abs().pow(q).sum(), 1.0 / q);
}

struct OperatorNormOptions {
  Eigen::Index extreme_cap = 20;  // cap on 2^dim enumerations
  int random_probes = 64;
  std::uint64_t seed = 0;
};

namespace detail {

inline double largest_singular_value(const Eigen::MatrixXd& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  return svd.singularValues()[0];
}

}  // namespace detail

/// Norm of M as an operator from `space` to itself; exact for p in {1, 2, inf}.
/// p = 1 reads the value off the columns, p = inf enumerates the sign vectors
/// (convexity puts the sup at extreme points), p = 2 is a singular value after
/// symmetrizing the weights away.
inline double operator_norm_exact(const Eigen::MatrixXd& M, const NormedSpace& space,
                                  Eigen::Index extreme_cap = 20) {
  if (M.rows() != space.dim() || M.cols() != space.dim())
    throw DimensionMismatchError("operator_norm_exact: matrix shape does not match space");
  const double p = space.p();
  if (p == 1.0) {
    double best = 0.0;
    for (Eigen::Index j = 0; j < space.dim(); ++j)
      best = std::max(best, space.norm(M.col(j)) / space.weights()[j]);
    return best;
  }
  if (p == kInfinity) {
    double best = 0.0;
    for (const Vector& u : space.extreme_points(extreme_cap))
      best = std::max(best, space.norm(M * u));
    return best;
  }
  if (p == 2.0) {
    if (space.has_unit_weights()) return detail::largest_singular_value(M);
    const Eigen::VectorXd s = space.scaling();
    return detail::largest_singular_value(s.asDiagonal() * M *
                                          s.cwiseInverse().asDiagonal());
  }
  throw UnsupportedExactNormError("operator_norm_exact: p = " + std::to_string(p) +
                                  " (exact values exist for p in {1, 2, inf})");
}

/// Bounds on sup{ ||M x||_q : ||x||_source <= 1 } for q in [1, inf].
///
/// Exact when the source ball is polyhedral (within the cap) or when the
/// source is an L2 space and q = 2.  Otherwise: a seeded probe lower bound and
/// the best of two analytic uppers -- the row-wise Holder bound
/// (sum_n dual(row_n)^q)^(1/q) and the Riesz-Thorin interpolation
/// C1^(1/p) Cinf^(1-1/p) of the column/row sums, adjusted when q < p.
inline BoundPair lp_to_lq_operator_norm(const Eigen::MatrixXd& M,
                                        const NormedSpace& source, double q,
                                        const OperatorNormOptions& opt = {}) {
  if (M.cols() != source.dim())
    throw DimensionMismatchError("lp_to_lq_operator_norm: matrix/source shape mismatch");
  if (!(q >= 1.0))
    throw InvalidArgumentError("lp_to_lq_operator_norm: q must be >= 1 or inf");
  if (M.rows() == 0) return BoundPair::exact(0.0);

  const double p = source.p();

  // Exact: polyhedral source balls have finitely many extreme points and
  // x -> ||Mx||_q is convex, so the sup sits on one of them.
  if (source.is_polyhedral() && (p == 1.0 || source.dim() <= opt.extreme_cap)) {
    double best = 0.0;
    for (const Vector& u : source.extreme_points(opt.extreme_cap))
      best = std::max(best, lq_norm(M * u, q));
    return BoundPair::exact(best);
  }

  const Eigen::VectorXd scale_inv = source.scaling().cwiseInverse();
  const Eigen::MatrixXd Mt = M * scale_inv.asDiagonal();  // unweighted-p source

  // Exact: L2 source into l2 is the largest singular value.
  if (p == 2.0 && q == 2.0) return BoundPair::exact(detail::largest_singular_value(Mt));

  // Lower bound: coordinate directions plus seeded random unit vectors.
  double lower = 0.0;
  for (Eigen::Index i = 0; i < source.dim(); ++i) {
    Vector e = Vector::Zero(source.dim());
    e[i] = 1.0;
    lower = std::max(lower, lq_norm(M * e, q) / source.norm(e));
  }
  Rng rng(opt.seed);
  for (int k = 0; k < opt.random_probes; ++k)
    lower = std::max(lower, lq_norm(M * source.random_unit_vector(rng), q));

  // Upper 1: row-wise Holder.
  double row_bound;
  {
    Eigen::VectorXd d(M.rows());
    for (Eigen::Index n = 0; n < M.rows(); ++n)
      d[n] = source.dual_norm(M.row(n).transpose());
    row_bound = lq_norm(d, q);
  }

  // Upper 2: interpolation between the l1 and linf operator norms.
  const Eigen::ArrayXXd absMt = Mt.array().abs();
  const double c1 = absMt.colwise().sum().maxCoeff();
  const double cinf = absMt.rowwise().sum().maxCoeff();
  double pp_bound;
  if (p == kInfinity) {
    pp_bound = cinf;
  } else {
    pp_bound = std::pow(c1, 1.0 / p) * std::pow(cinf, 1.0 - 1.0 / p);
  }
  double interp_bound = pp_bound;
  if (q < p)  // ||v||_q <= m^(1/q - 1/p) ||v||_p on R^m
    interp_bound *= std::pow(static_cast<double>(M.rows()), 1.0 / q - 1.0 / p);

  const double upper = std::min(row_bound, interp_bound);
  BoundPair out{lower, upper, BoundMethod::sampled, BoundMethod::holder};
  return out.validate();
}

}  // namespace frameforge
