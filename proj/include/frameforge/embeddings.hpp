#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "frameforge/besselian.hpp"
#include "frameforge/paire.hpp"
#include "frameforge/space.hpp"

namespace frameforge {

/// An element of the truncated sequence space built over one paire: the
/// sequence (c_n a_n)_n, stored by its coefficients.  The generating paire is
/// held through a shared handle, so elements derived from one another do not
/// copy it and never dangle.
class FrameElement {
 public:
  FrameElement(const Paire& paire, Vector coefficients)
      : FrameElement(std::make_shared<const Paire>(paire), std::move(coefficients)) {}

  FrameElement(std::shared_ptr<const Paire> paire, Vector coefficients)
      : paire_(std::move(paire)), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != paire_->size())
      throw DimensionMismatchError("FrameElement: coefficient count does not match N");
  }

  const Paire& paire() const { return *paire_; }
  const std::shared_ptr<const Paire>& paire_handle() const { return paire_; }
  const Vector& coefficients() const { return coefficients_; }

  /// The n-th represented term c_n a_n (0-based).
  Vector term(Eigen::Index n) const {
    return coefficients_[n] * paire_->term(n).a;
  }

  /// sum_n c_n a_n.
  Vector sum() const { return paire_->synthesize(coefficients_); }

  /// The basis element A_n = (delta_nm a_n)_m, i.e. coefficient e_n.
  static FrameElement basis_element(const Paire& paire, Eigen::Index n) {
    Vector c = Vector::Zero(paire.size());
    c[n] = 1.0;
    return FrameElement(paire, std::move(c));
  }

  FrameElement operator+(const FrameElement& other) const {
    return FrameElement(paire_, coefficients_ + other.coefficients_);
  }
  FrameElement operator-(const FrameElement& other) const {
    return FrameElement(paire_, coefficients_ - other.coefficients_);
  }
  friend FrameElement operator*(double s, const FrameElement& z) {
    return FrameElement(z.paire_, s * z.coefficients_);
  }

 private:
  std::shared_ptr<const Paire> paire_;
  Vector coefficients_;
};

/// || z ||_{Z}: max over prefixes n of || sum_{j<=n} c_j a_j ||.
inline double ze_norm(const FrameElement& z) {
  const Paire& paire = z.paire();
  Vector s = Vector::Zero(paire.space().dim());
  double best = 0.0;
  for (Eigen::Index n = 0; n < paire.size(); ++n) {
    s += z.coefficients()[n] * paire.term(n).a;
    best = std::max(best, paire.space().norm(s));
  }
  return best;
}

/// || z ||_{W}: at finite N the sup over permuted prefixes equals the sup over
/// nonempty subsets (every permuted prefix is a subset and conversely), so the
/// exact mode enumerates subsets.  Sampled mode: prefixes plus random subsets
/// below, the triangle inequality sum_j ||c_j a_j|| above.
inline BoundPair we_norm(const FrameElement& z, SubsetMethod method = SubsetMethod::exact,
                         const SubsetOptions& opt = {}) {
  const Paire& paire = z.paire();
  const NormedSpace& space = paire.space();
  const Eigen::Index N = paire.size();
  std::vector<Vector> terms;
  terms.reserve(static_cast<std::size_t>(N));
  for (Eigen::Index n = 0; n < N; ++n) terms.push_back(z.term(n));

  if (method == SubsetMethod::exact) {
    if (N > opt.exact_cap)
      throw DimensionTooLargeError("we_norm: N = " + std::to_string(N) +
                                   " exceeds the enumeration cap");
    const double value =
        detail::max_subset_norm(terms, space, 0, /*want_witness=*/false).value;
    return BoundPair::exact(value);
  }

  double lower = 0.0;
  Vector s = Vector::Zero(space.dim());
  for (Eigen::Index n = 0; n < N; ++n) {
    s += terms[static_cast<std::size_t>(n)];
    lower = std::max(lower, space.norm(s));
  }
  Rng rng(opt.seed);
  for (int k = 0; k < opt.samples; ++k) {
    Vector sub = Vector::Zero(space.dim());
    bool any = false;
    for (Eigen::Index n = 0; n < N; ++n)
      if (rng.uniform() < 0.5) {
        sub += terms[static_cast<std::size_t>(n)];
        any = true;
      }
    if (any) lower = std::max(lower, space.norm(sub));
  }
  double upper = 0.0;
  for (const Vector& t : terms) upper += space.norm(t);
  BoundPair out{lower, upper, BoundMethod::sampled, BoundMethod::prefix_sum};
  return out.validate();
}

/// T_0(x) = (b_n*(x) a_n)_n into the prefix-sup space; requires the paire to
/// reconstruct (Schauder frame), which makes ||x|| <= ||T_0 x|| <= K_F ||x||.
inline FrameElement t0_embed(const Paire& paire, const Vector& x, double frame_tol = 1e-9) {
  if (!check_schauder_frame(paire, frame_tol).pass)
    throw NotASchauderFrameError("t0_embed: paire does not reconstruct at tolerance");
  return FrameElement(paire, paire.coefficients(x));
}

/// T_2(x): same coefficients as T_0, destined for the subset-sup norm; needs a
/// besselian certificate so the sandwich ||x|| <= ||T_2 x|| <= L_F ||x|| has a
/// certified right-hand side.
inline FrameElement t2_embed(const Paire& paire, const Vector& x,
                             const BesselianCertificate& certificate,
                             double frame_tol = 1e-9) {
  const BoundPair& c = certificate.constant;
  if (!(c.lower >= 0.0) || !(c.upper >= c.lower - 1e-12) || !std::isfinite(c.upper))
    throw NotBesselianCertifiedError("t2_embed: certificate bounds are not usable");
  if (!check_schauder_frame(paire, frame_tol).pass)
    throw NotASchauderFrameError("t2_embed: paire does not reconstruct at tolerance");
  return FrameElement(paire, paire.coefficients(x));
}

inline FrameElement t2_embed(const Paire& paire, const Vector& x, double frame_tol = 1e-9) {
  return t2_embed(paire, x, besselian_constant(paire, BesselianMethod::bounds), frame_tol);
}

/// rho(z) = (b_n*(sum_m c_m a_m) a_n)_n: sum the represented sequence, then
/// re-analyze.  Idempotent whenever the paire reconstructs, with range T_0(E)
/// (T_2(E) under the subset-sup norm).
inline FrameElement rho_project(const FrameElement& z, double frame_tol = 1e-9) {
  const Paire& paire = z.paire();
  if (!check_schauder_frame(paire, frame_tol).pass)
    throw NotASchauderFrameError("rho_project: paire does not reconstruct at tolerance");
  return FrameElement(z.paire_handle(), paire.coefficients(z.sum()));
}

enum class EmbeddingVariant { Z, W };

struct MonotonicityReport {
  int trials = 0;
  int checks = 0;
  int violations = 0;
  double max_violation = 0.0;
  Eigen::Index skipped_zero_terms = 0;  // zero basis directions are excluded
  bool pass = true;
};

/// Random-coefficient monotonicity of the candidate basis (A_n): prefix
/// monotonicity of the prefix-sup norm for Z, subset monotonicity of the
/// subset-sup norm for W (A within A' implies no larger norm).
inline MonotonicityReport basis_monotonicity_check(const Paire& paire, EmbeddingVariant variant,
                                                   int trials, std::uint64_t seed = 0,
                                                   double tol = 1e-12,
                                                   const SubsetOptions& opt = {}) {
  const Eigen::Index N = paire.size();
  MonotonicityReport report;
  report.trials = trials;

  std::vector<bool> zero_term(static_cast<std::size_t>(N), false);
  for (Eigen::Index n = 0; n < N; ++n) {
    const PaireTerm& t = paire.term(n);
    if (t.a.norm() == 0.0 || t.b_star.norm() == 0.0) {
      zero_term[static_cast<std::size_t>(n)] = true;
      ++report.skipped_zero_terms;
    }
  }

  if (variant == EmbeddingVariant::W && N > opt.exact_cap)
    throw DimensionTooLargeError("basis_monotonicity_check: W variant enumerates subsets");

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Vector alpha = rng.gaussian_vector(N);
    for (Eigen::Index n = 0; n < N; ++n)
      if (zero_term[static_cast<std::size_t>(n)]) alpha[n] = 0.0;

    if (variant == EmbeddingVariant::Z) {
      double previous = 0.0;
      Vector s = Vector::Zero(paire.space().dim());
      double running = 0.0;
      for (Eigen::Index n = 0; n < N; ++n) {
        s += alpha[n] * paire.term(n).a;
        running = std::max(running, paire.space().norm(s));
        ++report.checks;
        if (previous > running + tol) {
          ++report.violations;
          report.max_violation = std::max(report.max_violation, previous - running);
        }
        previous = running;
      }
    } else {
      // Random nested pair A within A'.
      Vector outer = Vector::Zero(N);
      Vector inner = Vector::Zero(N);
      for (Eigen::Index n = 0; n < N; ++n) {
        if (zero_term[static_cast<std::size_t>(n)]) continue;
        if (rng.uniform() < 0.7) {
          outer[n] = alpha[n];
          if (rng.uniform() < 0.6) inner[n] = alpha[n];
        }
      }
      const double wo = we_norm(FrameElement(paire, outer), SubsetMethod::exact, opt).value();
      const double wi = we_norm(FrameElement(paire, inner), SubsetMethod::exact, opt).value();
      ++report.checks;
      if (wi > wo + tol) {
        ++report.violations;
        report.max_violation = std::max(report.max_violation, wi - wo);
      }
    }
  }
  report.pass = report.violations == 0;
  return report;
}

struct SandwichReport {
  int trials = 0;
  double kf_upper = 0.0;
  double lf_upper = 0.0;
  int violations_e = 0;      // ||x|| <= ze(T0 x) <= K_F ||x||
  int violations_f = 0;      // ||x|| <= we(T2 x) <= L_F ||x||
  int rho_idempotence_violations = 0;
  int rho_bound_violations = 0;  // ze(rho z) <= K_F ze(z), we(rho z) <= L_F we(z)
  int order_violations = 0;      // we >= ze
  bool pass = true;
};

/// Random-probe verification of the two embedding sandwiches and the rho
/// projection bounds for one paire with certified constants.
inline SandwichReport embedding_sandwich_check(const Paire& paire, double kf_upper,
                                               double lf_upper, int trials,
                                               std::uint64_t seed = 0, double tol = 1e-9,
                                               const SubsetOptions& opt = {}) {
  SandwichReport report;
  report.trials = trials;
  report.kf_upper = kf_upper;
  report.lf_upper = lf_upper;
  const NormedSpace& space = paire.space();
  if (!check_schauder_frame(paire).pass)
    throw NotASchauderFrameError("embedding_sandwich_check: paire does not reconstruct");
  if (paire.size() > opt.exact_cap)
    throw DimensionTooLargeError("embedding_sandwich_check: subset norms need N within cap");

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Vector x = rng.gaussian_vector(space.dim());
    const double nx = space.norm(x);
    const FrameElement zx(paire, paire.coefficients(x));
    const double ze = ze_norm(zx);
    const double we = we_norm(zx, SubsetMethod::exact, opt).value();
    if (nx > ze + tol || ze > kf_upper * nx + tol) ++report.violations_e;
    if (nx > we + tol || we > lf_upper * nx + tol) ++report.violations_f;
    if (we < ze - 1e-12) ++report.order_violations;

    const FrameElement z(paire, rng.gaussian_vector(paire.size()));
    const FrameElement rz = rho_project(z);
    const FrameElement rrz = rho_project(rz);
    const double scale = std::max(1.0, ze_norm(rz));
    if (ze_norm(rrz - rz) > 1e-12 * scale) ++report.rho_idempotence_violations;
    const double z_ze = ze_norm(z);
    const double z_we = we_norm(z, SubsetMethod::exact, opt).value();
    const double rz_ze = ze_norm(rz);
    const double rz_we = we_norm(rz, SubsetMethod::exact, opt).value();
    if (rz_ze > kf_upper * z_ze + tol) ++report.rho_bound_violations;
    if (rz_we > lf_upper * z_we + tol) ++report.rho_bound_violations;
  }
  report.pass = report.violations_e == 0 && report.violations_f == 0 &&
                report.rho_idempotence_violations == 0 &&
                report.rho_bound_violations == 0 && report.order_violations == 0;
  return report;
}

}  // namespace frameforge
