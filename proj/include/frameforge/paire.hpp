#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frameforge/bound.hpp"
#include "frameforge/operator_norms.hpp"
#include "frameforge/space.hpp"

namespace frameforge {

struct PaireTerm {
  Vector a;
  Functional b_star;
};

/// A finite ordered family of (vector, functional) pairs over one space.
/// Nothing is assumed about reconstruction; Schauder-frame status is checked,
/// not declared.
class Paire {
 public:
  Paire(NormedSpace space, std::vector<PaireTerm> terms)
      : space_(std::move(space)), terms_(std::move(terms)) {
    if (terms_.empty()) throw InvalidArgumentError("Paire: needs at least one term");
    for (const PaireTerm& t : terms_)
      if (t.a.size() != space_.dim() || t.b_star.size() != space_.dim())
        throw DimensionMismatchError("Paire: term does not live in the ambient space");
  }

  const NormedSpace& space() const { return space_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(terms_.size()); }
  const PaireTerm& term(Eigen::Index n) const { return terms_[static_cast<std::size_t>(n)]; }
  const std::vector<PaireTerm>& terms() const { return terms_; }

  /// Rows are the vectors a_n (size N x dim).
  Eigen::MatrixXd vector_matrix() const {
    Eigen::MatrixXd A(size(), space_.dim());
    for (Eigen::Index n = 0; n < size(); ++n) A.row(n) = terms_[n].a.transpose();
    return A;
  }

  /// Rows are the functionals b_n* (size N x dim).
  Eigen::MatrixXd functional_matrix() const {
    Eigen::MatrixXd B(size(), space_.dim());
    for (Eigen::Index n = 0; n < size(); ++n) B.row(n) = terms_[n].b_star.transpose();
    return B;
  }

  /// Analysis coefficients (b_n*(x))_n.
  Vector coefficients(const Vector& x) const {
    if (x.size() != space_.dim())
      throw DimensionMismatchError("coefficients: vector does not match the space");
    Vector c(size());
    for (Eigen::Index n = 0; n < size(); ++n) c[n] = terms_[n].b_star.dot(x);
    return c;
  }

  /// sum_n coeffs[n] a_n.
  Vector synthesize(const Vector& coeffs) const {
    if (coeffs.size() != size())
      throw DimensionMismatchError("synthesize: coefficient count does not match N");
    Vector s = Vector::Zero(space_.dim());
    for (Eigen::Index n = 0; n < size(); ++n) s += coeffs[n] * terms_[n].a;
    return s;
  }

  /// S_n(x) = sum_{j<=n} b_j*(x) a_j, with 1 <= n <= N.
  Vector partial_sum(Eigen::Index n, const Vector& x) const {
    if (n < 1 || n > size())
      throw InvalidArgumentError("partial_sum: index " + std::to_string(n) +
                                 " out of range 1.." + std::to_string(size()));
    if (x.size() != space_.dim())
      throw DimensionMismatchError("partial_sum: vector does not match the space");
    Vector s = Vector::Zero(space_.dim());
    for (Eigen::Index j = 0; j < n; ++j) s += terms_[j].b_star.dot(x) * terms_[j].a;
    return s;
  }

  /// Matrix of S_n, i.e. sum_{j<=n} a_j b_j^T.
  Eigen::MatrixXd partial_sum_matrix(Eigen::Index n) const {
    if (n < 1 || n > size())
      throw InvalidArgumentError("partial_sum_matrix: index out of range");
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(space_.dim(), space_.dim());
    for (Eigen::Index j = 0; j < n; ++j) M += terms_[j].a * terms_[j].b_star.transpose();
    return M;
  }

  /// Terms inserted as (0, 0) fillers by combinators; empty when none.
  const std::vector<bool>& padding() const { return padding_; }
  bool is_padded(Eigen::Index n) const {
    return !padding_.empty() && padding_[static_cast<std::size_t>(n)];
  }
  void set_padding(std::vector<bool> padding) {
    if (!padding.empty() && padding.size() != terms_.size())
      throw InvalidArgumentError("set_padding: flag count does not match N");
    padding_ = std::move(padding);
  }

 private:
  NormedSpace space_;
  std::vector<PaireTerm> terms_;
  std::vector<bool> padding_;
};

/// Per-probe decay of ||x - S_n(x)|| together with the final verdict.
struct ReconstructionReport {
  std::vector<std::vector<double>> residuals;  // [probe][n-1] = ||x - S_n x||
  double max_final_residual = 0.0;
  bool pass = false;
  /// True when the probes span the space: reconstruction is linear, so passing
  /// on a spanning set proves it everywhere (otherwise the verdict is sampled).
  bool proven = false;
  double tolerance = 0.0;
  Eigen::Index probe_count = 0;
};

/// Unit coordinate vectors plus `random_count` seeded unit-norm probes.
inline std::vector<Vector> default_probes(const NormedSpace& space, int random_count = 16,
                                          std::uint64_t seed = 0) {
  std::vector<Vector> probes;
  probes.reserve(static_cast<std::size_t>(space.dim() + random_count));
  for (Eigen::Index i = 0; i < space.dim(); ++i) {
    Vector e = Vector::Zero(space.dim());
    e[i] = 1.0;
    probes.push_back(std::move(e));
  }
  Rng rng(seed);
  for (int k = 0; k < random_count; ++k) probes.push_back(space.random_unit_vector(rng));
  return probes;
}

/// Checks exact reconstruction at the final index: pass iff
/// ||x - S_N(x)|| <= tol * max(1, ||x||) for every probe.
inline ReconstructionReport check_schauder_frame(const Paire& paire,
                                                 const std::vector<Vector>& probes,
                                                 double tol = 1e-9) {
  if (probes.empty())
    throw InvalidArgumentError("check_schauder_frame: probe set must be nonempty");
  ReconstructionReport report;
  report.tolerance = tol;
  report.probe_count = static_cast<Eigen::Index>(probes.size());
  const Eigen::Index N = paire.size();
  report.residuals.reserve(probes.size());
  bool pass = true;
  for (const Vector& x : probes) {
    Vector s = Vector::Zero(paire.space().dim());
    std::vector<double> decay(static_cast<std::size_t>(N));
    for (Eigen::Index n = 0; n < N; ++n) {
      s += paire.term(n).b_star.dot(x) * paire.term(n).a;
      decay[static_cast<std::size_t>(n)] = paire.space().norm(x - s);
    }
    const double final_res = decay.back();
    report.max_final_residual = std::max(report.max_final_residual, final_res);
    if (final_res > tol * std::max(1.0, paire.space().norm(x))) pass = false;
    report.residuals.push_back(std::move(decay));
  }
  report.pass = pass;

  Eigen::MatrixXd P(paire.space().dim(), static_cast<Eigen::Index>(probes.size()));
  for (std::size_t i = 0; i < probes.size(); ++i)
    P.col(static_cast<Eigen::Index>(i)) = probes[i];
  report.proven = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(P).rank() ==
                  paire.space().dim();
  return report;
}

inline ReconstructionReport check_schauder_frame(const Paire& paire, double tol = 1e-9,
                                                 int random_probes = 16,
                                                 std::uint64_t seed = 0) {
  return check_schauder_frame(paire, default_probes(paire.space(), random_probes, seed),
                              tol);
}

enum class ConstantMethod { exact, sampled };

struct FrameConstantOptions {
  Eigen::Index extreme_cap = 20;
  int random_probes = 64;
  std::uint64_t seed = 0;
};

/// K_F = max_n ||S_n||.  Exact needs p in {1, 2, inf}; the sampled mode pairs a
/// probe lower bound with the prefix sums of ||a_j|| dual(b_j*).
inline BoundPair frame_constant(const Paire& paire, ConstantMethod method,
                                const FrameConstantOptions& opt = {}) {
  const NormedSpace& space = paire.space();
  const Eigen::Index N = paire.size();

  if (method == ConstantMethod::exact) {
    const double p = space.p();
    if (p != 1.0 && p != 2.0 && p != kInfinity)
      throw UnsupportedExactNormError("frame_constant: exact mode needs p in {1, 2, inf}");
    double best = 0.0;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(space.dim(), space.dim());
    for (Eigen::Index n = 0; n < N; ++n) {
      M += paire.term(n).a * paire.term(n).b_star.transpose();
      best = std::max(best, operator_norm_exact(M, space, opt.extreme_cap));
    }
    return BoundPair::exact(best);
  }

  // Sampled: evaluate every prefix on every probe in one sweep per probe.
  std::vector<Vector> probes;
  if (space.is_polyhedral() && (space.p() == 1.0 || space.dim() <= opt.extreme_cap))
    probes = space.extreme_points(opt.extreme_cap);
  for (Eigen::Index i = 0; i < space.dim(); ++i) {
    Vector e = Vector::Zero(space.dim());
    e[i] = 1.0;
    probes.push_back(e / space.norm(e));
  }
  Rng rng(opt.seed);
  for (int k = 0; k < opt.random_probes; ++k) probes.push_back(space.random_unit_vector(rng));

  double lower = 0.0;
  for (const Vector& u : probes) {
    Vector s = Vector::Zero(space.dim());
    for (Eigen::Index n = 0; n < N; ++n) {
      s += paire.term(n).b_star.dot(u) * paire.term(n).a;
      lower = std::max(lower, space.norm(s));
    }
  }
  double upper = 0.0;
  for (Eigen::Index n = 0; n < N; ++n)
    upper += space.norm(paire.term(n).a) * space.dual_norm(paire.term(n).b_star);
  BoundPair out{lower, upper, BoundMethod::sampled, BoundMethod::prefix_sum};
  return out.validate();
}

}  // namespace frameforge
