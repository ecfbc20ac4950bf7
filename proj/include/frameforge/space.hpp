#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "frameforge/errors.hpp"
#include "frameforge/random.hpp"

namespace frameforge {

using Vector = Eigen::VectorXd;

/// A functional is stored by its coordinate vector and acts by dot product.
using Functional = Eigen::VectorXd;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Finite-dimensional real space carrying a (weighted) Lp norm:
///   ||x|| = (sum_i w_i |x_i|^p)^(1/p)   for p < inf,
///   ||x|| = max_i w_i |x_i|             for p = inf.
/// Dual norms are computed in closed form for the dot-product pairing.
class NormedSpace {
 public:
  NormedSpace(Eigen::Index dim, double p, Eigen::VectorXd weights)
      : dim_(dim), p_(p), weights_(std::move(weights)) {
    if (dim_ < 1) throw InvalidArgumentError("NormedSpace: dim must be >= 1");
    if (!(p_ >= 1.0)) throw InvalidArgumentError("NormedSpace: p must be >= 1 or inf");
    if (weights_.size() != dim_)
      throw InvalidArgumentError("NormedSpace: weight count does not match dim");
    if ((weights_.array() <= 0.0).any())
      throw InvalidArgumentError("NormedSpace: weights must be positive");
    unit_weights_ = (weights_.array() == 1.0).all();
  }

  static NormedSpace lp(Eigen::Index dim, double p) {
    return NormedSpace(dim, p, Eigen::VectorXd::Ones(dim));
  }
  static NormedSpace weighted_lp(double p, Eigen::VectorXd weights) {
    const Eigen::Index dim = weights.size();
    return NormedSpace(dim, p, std::move(weights));
  }
  static NormedSpace l1(Eigen::Index dim) { return lp(dim, 1.0); }
  static NormedSpace l2(Eigen::Index dim) { return lp(dim, 2.0); }
  static NormedSpace linf(Eigen::Index dim) { return lp(dim, kInfinity); }

  Eigen::Index dim() const { return dim_; }
  double p() const { return p_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  bool has_unit_weights() const { return unit_weights_; }

  bool is_polyhedral() const { return p_ == 1.0 || p_ == kInfinity; }
  bool is_euclidean() const { return p_ == 2.0 && unit_weights_; }

  /// Conjugate exponent p/(p-1); inf for p = 1 and 1 for p = inf.
  double dual_exponent() const {
    if (p_ == 1.0) return kInfinity;
    if (p_ == kInfinity) return 1.0;
    return p_ / (p_ - 1.0);
  }

  double norm(const Vector& x) const {
    require_dim(x, "norm");
    if (p_ == 1.0) return (weights_.array() * x.array().abs()).sum();
    if (p_ == kInfinity) return (weights_.array() * x.array().abs()).maxCoeff();
    if (p_ == 2.0) {
      if (unit_weights_) return x.norm();
      return std::sqrt((weights_.array() * x.array().square()).sum());
    }
    return std::pow((weights_.array() * x.array().abs().pow(p_)).sum(), 1.0 / p_);
  }

  /// sup { |f(x)| : ||x|| <= 1 }.  Dual of Lp(w) is Lp*(w^(1-p*)); the
  /// polyhedral cases reduce to max / sum against the inverse weights.
  double dual_norm(const Functional& f) const {
    require_dim(f, "dual_norm");
    if (p_ == 1.0) return (f.array().abs() / weights_.array()).maxCoeff();
    if (p_ == kInfinity) return (f.array().abs() / weights_.array()).sum();
    const double q = dual_exponent();
    if (p_ == 2.0) {
      if (unit_weights_) return f.norm();
      return std::sqrt((f.array().square() / weights_.array()).sum());
    }
    return std::pow((f.array().abs().pow(q) * weights_.array().pow(1.0 - q)).sum(),
                    1.0 / q);
  }

  /// The dual space under the dot-product pairing, as another NormedSpace.
  NormedSpace dual() const {
    if (p_ == 1.0) return NormedSpace(dim_, kInfinity, weights_.cwiseInverse());
    if (p_ == kInfinity) return NormedSpace(dim_, 1.0, weights_.cwiseInverse());
    const double q = dual_exponent();
    return NormedSpace(dim_, q, weights_.array().pow(1.0 - q).matrix());
  }

  /// Diagonal scaling s with ||x||_space = || diag(s) x ||_p (unweighted p).
  Eigen::VectorXd scaling() const {
    if (p_ == kInfinity) return weights_;
    return weights_.array().pow(1.0 / p_).matrix();
  }

  /// Extreme points of the closed unit ball.  Only polyhedral norms have
  /// finitely many: 2*dim points for p = 1 and 2^dim sign vectors for p = inf
  /// (capped, the enumeration is exponential).
  std::vector<Vector> extreme_points(Eigen::Index max_inf_dim = 20) const {
    if (!is_polyhedral())
      throw NonPolyhedralNormError("extreme_points: p = " + std::to_string(p_) +
                                   " has a smooth unit ball");
    std::vector<Vector> pts;
    if (p_ == 1.0) {
      pts.reserve(2 * static_cast<std::size_t>(dim_));
      for (Eigen::Index i = 0; i < dim_; ++i) {
        Vector e = Vector::Zero(dim_);
        e[i] = 1.0 / weights_[i];
        pts.push_back(e);
        pts.push_back(-e);
      }
      return pts;
    }
    if (dim_ > max_inf_dim)
      throw DimensionTooLargeError("extreme_points: 2^" + std::to_string(dim_) +
                                   " sign vectors exceed the cap (dim <= " +
                                   std::to_string(max_inf_dim) + ")");
    const std::size_t count = std::size_t{1} << dim_;
    pts.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
      Vector v(dim_);
      for (Eigen::Index i = 0; i < dim_; ++i)
        v[i] = ((mask >> i) & 1u) ? -1.0 / weights_[i] : 1.0 / weights_[i];
      pts.push_back(std::move(v));
    }
    return pts;
  }

  /// Number of extreme points without materializing them.
  std::size_t extreme_point_count() const {
    if (!is_polyhedral())
      throw NonPolyhedralNormError("extreme_point_count: smooth unit ball");
    if (p_ == 1.0) return 2 * static_cast<std::size_t>(dim_);
    return std::size_t{1} << dim_;
  }

  /// The k-th extreme point in the same order as extreme_points(), generated
  /// on demand so exponential families can be streamed instead of stored.
  Vector extreme_point(std::size_t k) const {
    if (p_ == 1.0) {
      Vector e = Vector::Zero(dim_);
      const Eigen::Index i = static_cast<Eigen::Index>(k >> 1);
      e[i] = ((k & 1u) ? -1.0 : 1.0) / weights_[i];
      return e;
    }
    if (p_ == kInfinity) {
      Vector v(dim_);
      for (Eigen::Index i = 0; i < dim_; ++i)
        v[i] = ((k >> i) & 1u) ? -1.0 / weights_[i] : 1.0 / weights_[i];
      return v;
    }
    throw NonPolyhedralNormError("extreme_point: smooth unit ball");
  }

  /// A vector of unit norm drawn from a seeded source (Gaussian direction).
  Vector random_unit_vector(Rng& rng) const {
    for (;;) {
      Vector v = rng.gaussian_vector(dim_);
      const double n = norm(v);
      if (n > 1e-12) return v / n;
    }
  }

  bool operator==(const NormedSpace& other) const {
    return dim_ == other.dim_ && p_ == other.p_ && weights_ == other.weights_;
  }

 private:
  void require_dim(const Eigen::VectorXd& v, const char* where) const {
    if (v.size() != dim_)
      throw DimensionMismatchError(std::string(where) + ": vector of length " +
                                   std::to_string(v.size()) + " in a space of dim " +
                                   std::to_string(dim_));
  }

  Eigen::Index dim_;
  double p_;
  Eigen::VectorXd weights_;
  bool unit_weights_;
};

/// The pairing y*(x); both arguments must have the same length.
inline double apply(const Functional& f, const Vector& x) {
  if (f.size() != x.size())
    throw DimensionMismatchError("apply: functional of length " +
                                 std::to_string(f.size()) + " against vector of length " +
                                 std::to_string(x.size()));
  return f.dot(x);
}

}  // namespace frameforge
