#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frameforge/bound.hpp"
#include "frameforge/operator_norms.hpp"
#include "frameforge/paire.hpp"
#include "frameforge/parallel.hpp"
#include "frameforge/space.hpp"

namespace frameforge {

/// sum_n |b_n*(u)| |v*(a_n)|, the bilinear-in-modulus form whose sup over the
/// two unit balls is the besselian constant L_F.
inline double besselian_form(const Paire& paire, const Vector& u, const Functional& v_star) {
  if (u.size() != paire.space().dim() || v_star.size() != paire.space().dim())
    throw DimensionMismatchError("besselian_form: arguments do not match the space");
  double s = 0.0;
  for (const PaireTerm& t : paire.terms())
    s += std::abs(t.b_star.dot(u)) * std::abs(v_star.dot(t.a));
  return s;
}

struct BesselianWitness {
  Vector u;
  Functional v_star;
};

struct BesselianCertificate {
  BoundPair constant;
  bool is_exact = false;
  std::optional<BesselianWitness> witness;
  int ascent_iterations = 0;
  std::uint64_t seed = 0;
};

enum class BesselianMethod { exact, bounds };

struct BesselianOptions {
  Eigen::Index extreme_cap = 20;  // cap on 2^dim extreme-point enumerations
  int random_pairs = 256;
  std::uint64_t seed = 0;
  int max_ascent_iterations = 200;
  double ascent_tolerance = 1e-10;
  // Holder exponent grid; p and p* are appended when they lie in (1, inf).
  std::vector<double> holder_grid = {1.1, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0};
};

/// Least C with (sum_n |f*(x_n)|^p)^(1/p) <= C ||f*||: the norm of the
/// coefficient operator f* -> (f*(x_n))_n from E* into l^p.
inline BoundPair weak_p_summing_constant(const std::vector<Vector>& vectors,
                                         const NormedSpace& space, double p,
                                         const OperatorNormOptions& opt = {}) {
  if (!(p > 1.0) || p == kInfinity)
    throw InvalidArgumentError("weak_p_summing_constant: exponent must lie in (1, inf)");
  if (vectors.empty()) return BoundPair::exact(0.0);
  Eigen::MatrixXd M(static_cast<Eigen::Index>(vectors.size()), space.dim());
  for (std::size_t n = 0; n < vectors.size(); ++n) {
    if (vectors[n].size() != space.dim())
      throw DimensionMismatchError("weak_p_summing_constant: vector outside the space");
    M.row(static_cast<Eigen::Index>(n)) = vectors[n].transpose();
  }
  return lp_to_lq_operator_norm(M, space.dual(), p, opt);
}

/// Least C with (sum_n |f_n*(x)|^p)^(1/p) <= C ||x||: the norm of the mirror
/// operator x -> (f_n*(x))_n from E into l^p.
inline BoundPair star_weak_p_summing_constant(const std::vector<Functional>& functionals,
                                              const NormedSpace& space, double p,
                                              const OperatorNormOptions& opt = {}) {
  if (!(p > 1.0) || p == kInfinity)
    throw InvalidArgumentError("star_weak_p_summing_constant: exponent must lie in (1, inf)");
  if (functionals.empty()) return BoundPair::exact(0.0);
  Eigen::MatrixXd M(static_cast<Eigen::Index>(functionals.size()), space.dim());
  for (std::size_t n = 0; n < functionals.size(); ++n) {
    if (functionals[n].size() != space.dim())
      throw DimensionMismatchError("star_weak_p_summing_constant: functional outside the space");
    M.row(static_cast<Eigen::Index>(n)) = functionals[n].transpose();
  }
  return lp_to_lq_operator_norm(M, space, p, opt);
}

/// Upper bound L_F <= C_V(q*) C_U(q): split the form by Holder with exponent q
/// on the |v*(a_n)| factor and q* on the |b_n*(u)| factor.
inline double holder_besselian_bound(const Paire& paire, double exponent,
                                     const OperatorNormOptions& opt = {}) {
  if (!(exponent > 1.0) || exponent == kInfinity)
    throw InvalidArgumentError("holder_besselian_bound: exponent must lie in (1, inf)");
  std::vector<Vector> as;
  std::vector<Functional> bs;
  as.reserve(static_cast<std::size_t>(paire.size()));
  bs.reserve(static_cast<std::size_t>(paire.size()));
  for (const PaireTerm& t : paire.terms()) {
    as.push_back(t.a);
    bs.push_back(t.b_star);
  }
  const double conj = exponent / (exponent - 1.0);
  const double cu = weak_p_summing_constant(as, paire.space(), exponent, opt).upper;
  const double cv = star_weak_p_summing_constant(bs, paire.space(), conj, opt).upper;
  return cv * cu;
}

/// Least B with sum_n |<y, y_n>|^2 <= B ||y||^2 on a Euclidean space: the top
/// eigenvalue of the frame operator sum_n y_n y_n^T.
inline double bessel_sequence_constant(const std::vector<Vector>& vectors,
                                       const NormedSpace& space) {
  if (!space.is_euclidean())
    throw InvalidArgumentError("bessel_sequence_constant: space must be Euclidean (p = 2, unit weights)");
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(space.dim(), space.dim());
  for (const Vector& y : vectors) {
    if (y.size() != space.dim())
      throw DimensionMismatchError("bessel_sequence_constant: vector outside the space");
    S += y * y.transpose();
  }
  if (vectors.empty()) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  return es.eigenvalues().maxCoeff();
}

/// sqrt(B_g) sqrt(B_f): certifies the paire (f_n, T_{g_n}) as besselian with
/// this constant via Cauchy-Schwarz.
inline double cauchy_schwarz_besselian_bound(const std::vector<Vector>& f_vectors,
                                             const std::vector<Vector>& g_vectors,
                                             const NormedSpace& space) {
  return std::sqrt(bessel_sequence_constant(g_vectors, space)) *
         std::sqrt(bessel_sequence_constant(f_vectors, space));
}

/// sum_n ||a_n|| dual(b_n*); finite forces finite dimension in the limit, so
/// at truncated scale it is reported as growth data rather than checked.
inline double nuclearity_sum(const Paire& paire) {
  double s = 0.0;
  for (const PaireTerm& t : paire.terms())
    s += paire.space().norm(t.a) * paire.space().dual_norm(t.b_star);
  return s;
}

namespace detail {

struct EnumBest {
  double value = -1.0;
  std::size_t stream_idx = 0;
  std::size_t fixed_idx = 0;
};

/// Coordinate-wise hill climb of the form over the two unit spheres, starting
/// from (u, v); step halves when a full sweep improves by less than tol.
inline double ascend_besselian_form(const Paire& paire, Vector& u, Functional& v,
                                    int max_iterations, double tol, int& iterations) {
  const NormedSpace& primal = paire.space();
  const NormedSpace dual = primal.dual();
  double best = besselian_form(paire, u, v);
  double step = 0.5;
  iterations = 0;
  for (int it = 0; it < max_iterations && step > 1e-9; ++it) {
    ++iterations;
    const double before = best;
    for (Eigen::Index i = 0; i < primal.dim(); ++i) {
      for (double s : {step, -step}) {
        Vector cand = u;
        cand[i] += s;
        const double n = primal.norm(cand);
        if (n < 1e-15) continue;
        cand /= n;
        const double f = besselian_form(paire, cand, v);
        if (f > best) {
          best = f;
          u = cand;
        }
      }
    }
    for (Eigen::Index i = 0; i < dual.dim(); ++i) {
      for (double s : {step, -step}) {
        Functional cand = v;
        cand[i] += s;
        const double n = dual.norm(cand);
        if (n < 1e-15) continue;
        cand /= n;
        const double f = besselian_form(paire, u, cand);
        if (f > best) {
          best = f;
          v = cand;
        }
      }
    }
    if (best - before <= tol * std::max(1.0, before)) step *= 0.5;
  }
  return best;
}

}  // namespace detail

/// The besselian constant L_F = sup over B_E x B_E* of the form.
///
/// Exact mode needs a polyhedral norm: the form is convex in each argument
/// separately (a sum of moduli of linear maps), so the sup over the product of
/// balls is attained on the product of extreme-point sets, which are finite
/// exactly when p is 1 or inf.  The larger family is streamed in parallel
/// chunks; the reduction keeps the first maximizer in enumeration order, so
/// the witness does not depend on the thread count.
///
/// Bounds mode: seeded probe pairs refined by coordinate ascent (lower), and
/// the best Holder / Cauchy-Schwarz product bound (upper).
inline BesselianCertificate besselian_constant(const Paire& paire, BesselianMethod method,
                                               const BesselianOptions& opt = {}) {
  const NormedSpace& primal = paire.space();
  BesselianCertificate cert;
  cert.seed = opt.seed;

  if (method == BesselianMethod::exact) {
    if (!primal.is_polyhedral())
      throw NonPolyhedralNormError("besselian_constant: exact mode needs p in {1, inf}");
    if (primal.p() == kInfinity && primal.dim() > opt.extreme_cap)
      throw DimensionTooLargeError("besselian_constant: primal enumeration over cap");
    const NormedSpace dual = primal.dual();
    if (dual.p() == kInfinity && dual.dim() > opt.extreme_cap)
      throw DimensionTooLargeError("besselian_constant: dual enumeration over cap");

    const Eigen::MatrixXd A = paire.vector_matrix();      // rows a_n
    const Eigen::MatrixXd B = paire.functional_matrix();  // rows b_n
    const std::size_t n_primal = primal.extreme_point_count();
    const std::size_t n_dual = dual.extreme_point_count();

    // Fix the smaller family in memory, stream the larger one.
    const bool stream_dual = n_dual >= n_primal;
    const NormedSpace& fixed_space = stream_dual ? primal : dual;
    const NormedSpace& stream_space = stream_dual ? dual : primal;
    const Eigen::MatrixXd& fixed_mat = stream_dual ? B : A;
    const Eigen::MatrixXd& stream_mat = stream_dual ? A : B;
    const std::size_t n_fixed = stream_dual ? n_primal : n_dual;
    const std::size_t n_stream = stream_dual ? n_dual : n_primal;

    Eigen::MatrixXd F(static_cast<Eigen::Index>(n_fixed), paire.size());
    for (std::size_t k = 0; k < n_fixed; ++k)
      F.row(static_cast<Eigen::Index>(k)) =
          (fixed_mat * fixed_space.extreme_point(k)).cwiseAbs().transpose();

    auto chunk = [&](std::size_t begin, std::size_t end) {
      detail::EnumBest best;
      for (std::size_t k = begin; k < end; ++k) {
        const Eigen::VectorXd w = (stream_mat * stream_space.extreme_point(k)).cwiseAbs();
        Eigen::Index arg = 0;
        const double val = (F * w).maxCoeff(&arg);
        if (val > best.value) {
          best.value = val;
          best.stream_idx = k;
          best.fixed_idx = static_cast<std::size_t>(arg);
        }
      }
      return best;
    };
    detail::EnumBest best;
    for (const detail::EnumBest& b : map_chunked<detail::EnumBest>(n_stream, chunk))
      if (b.value > best.value) best = b;

    cert.constant = BoundPair::exact(std::max(best.value, 0.0));
    cert.is_exact = true;
    if (best.value >= 0.0) {
      BesselianWitness w;
      if (stream_dual) {
        w.u = primal.extreme_point(best.fixed_idx);
        w.v_star = dual.extreme_point(best.stream_idx);
      } else {
        w.u = primal.extreme_point(best.stream_idx);
        w.v_star = dual.extreme_point(best.fixed_idx);
      }
      cert.witness = std::move(w);
    }
    return cert;
  }

  // Bounds mode.
  const NormedSpace dual = primal.dual();

  Vector best_u = Vector::Zero(primal.dim());
  Functional best_v = Vector::Zero(primal.dim());
  double lower = -1.0;
  auto consider = [&](const Vector& u, const Functional& v) {
    const double f = besselian_form(paire, u, v);
    if (f > lower) {
      lower = f;
      best_u = u;
      best_v = v;
    }
  };
  for (Eigen::Index i = 0; i < primal.dim(); ++i) {
    Vector e = Vector::Zero(primal.dim());
    e[i] = 1.0;
    const Vector u = e / primal.norm(e);
    for (Eigen::Index j = 0; j < primal.dim(); ++j) {
      Vector f = Vector::Zero(primal.dim());
      f[j] = 1.0;
      consider(u, f / dual.norm(f));
    }
  }
  Rng rng(opt.seed);
  for (int k = 0; k < opt.random_pairs; ++k)
    consider(primal.random_unit_vector(rng), dual.random_unit_vector(rng));

  lower = detail::ascend_besselian_form(paire, best_u, best_v, opt.max_ascent_iterations,
                                        opt.ascent_tolerance, cert.ascent_iterations);

  std::vector<double> grid = opt.holder_grid;
  const double p = primal.p();
  if (p > 1.0 && p != kInfinity) grid.push_back(p);
  const double pstar = primal.dual_exponent();
  if (pstar > 1.0 && pstar != kInfinity) grid.push_back(pstar);

  double upper = std::numeric_limits<double>::infinity();
  BoundMethod upper_method = BoundMethod::holder;
  OperatorNormOptions norm_opt;
  norm_opt.extreme_cap = opt.extreme_cap;
  norm_opt.seed = opt.seed;
  for (double q : grid)
    upper = std::min(upper, holder_besselian_bound(paire, q, norm_opt));
  if (primal.is_euclidean()) {
    std::vector<Vector> as, gs;
    for (const PaireTerm& t : paire.terms()) {
      as.push_back(t.a);
      gs.push_back(t.b_star);
    }
    const double cs = cauchy_schwarz_besselian_bound(as, gs, primal);
    if (cs < upper) {
      upper = cs;
      upper_method = BoundMethod::cauchy_schwarz;
    }
  }

  cert.constant = BoundPair{std::max(lower, 0.0), upper, BoundMethod::sampled, upper_method};
  cert.constant.validate();
  cert.is_exact = false;
  cert.witness = BesselianWitness{best_u, best_v};
  return cert;
}

enum class SubsetMethod { exact, sampled };

struct SubsetOptions {
  Eigen::Index exact_cap = 20;  // max N for full subset enumeration
  int samples = 4096;
  std::uint64_t seed = 0;
};

namespace detail {

struct SubsetBest {
  double value = 0.0;
  std::vector<int> indices;  // 1-based, ascending
};

/// Witness tie-break: fewer indices first, then lexicographic.
inline bool tie_break_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Exhaustive max of ||sum_{j in A} terms[j]|| over nonempty A within
/// {start..N-1} (0-based), with witness tracking when requested.
inline SubsetBest max_subset_norm(const std::vector<Vector>& terms, const NormedSpace& space,
                                  std::size_t start, bool want_witness) {
  SubsetBest best;
  bool have_best = false;
  std::vector<int> chosen;
  Vector sum = Vector::Zero(space.dim());
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == terms.size()) {
      if (chosen.empty()) return;
      const double v = space.norm(sum);
      bool better = !have_best || v > best.value;
      if (!better && want_witness && v == best.value)
        better = tie_break_less(chosen, best.indices);
      if (better) {
        have_best = true;
        best.value = v;
        if (want_witness) best.indices = chosen;
      }
      return;
    }
    self(self, j + 1);
    sum += terms[j];
    chosen.push_back(static_cast<int>(j) + 1);
    self(self, j + 1);
    chosen.pop_back();
    sum -= terms[j];
  };
  if (start < terms.size()) rec(rec, start);
  return best;
}

}  // namespace detail

/// Finite-scale unconditional-convergence data for sum b_n*(x) a_n: the sup of
/// subset-sum norms, its witness, and tail sups over {k+1..N} for every k.
/// k_epsilon is the least k whose tail sup is within tol * max(1, ||x||).
struct SubsetConvergenceReport {
  double subset_sup = 0.0;
  std::vector<int> witness;        // 1-based indices; smallest subset, then lexicographic
  std::vector<double> tail_sups;   // [k] = sup over nonempty A with min(A) > k, k = 0..N
  Eigen::Index k_epsilon = 0;
  bool pass = false;
  bool exact = true;
  double tolerance = 0.0;
};

inline SubsetConvergenceReport unconditional_convergence_check(
    const Paire& paire, const Vector& x, double tol,
    SubsetMethod method = SubsetMethod::exact, const SubsetOptions& opt = {}) {
  const NormedSpace& space = paire.space();
  const Eigen::Index N = paire.size();
  std::vector<Vector> terms;
  terms.reserve(static_cast<std::size_t>(N));
  for (const PaireTerm& t : paire.terms()) terms.push_back(t.b_star.dot(x) * t.a);

  SubsetConvergenceReport report;
  report.tolerance = tol;
  report.tail_sups.assign(static_cast<std::size_t>(N) + 1, 0.0);

  if (method == SubsetMethod::exact) {
    if (N > opt.exact_cap)
      throw DimensionTooLargeError("unconditional_convergence_check: N = " +
                                   std::to_string(N) + " exceeds the enumeration cap");
    for (Eigen::Index k = 0; k <= N; ++k) {
      detail::SubsetBest best = detail::max_subset_norm(
          terms, space, static_cast<std::size_t>(k), /*want_witness=*/k == 0);
      report.tail_sups[static_cast<std::size_t>(k)] = best.value;
      if (k == 0) {
        report.subset_sup = best.value;
        report.witness = std::move(best.indices);
      }
    }
    report.exact = true;
  } else {
    Rng rng(opt.seed);
    detail::SubsetBest best;
    bool have_best = false;
    auto consider = [&](const std::vector<int>& idx) {
      if (idx.empty()) return;
      Vector s = Vector::Zero(space.dim());
      for (int j : idx) s += terms[static_cast<std::size_t>(j - 1)];
      const double v = space.norm(s);
      const std::size_t k0 = static_cast<std::size_t>(idx.front() - 1);
      for (std::size_t k = 0; k <= k0; ++k)
        report.tail_sups[k] = std::max(report.tail_sups[k], v);
      bool better = !have_best || v > best.value;
      if (!better && v == best.value) better = detail::tie_break_less(idx, best.indices);
      if (better) {
        have_best = true;
        best.value = v;
        best.indices = idx;
      }
    };
    std::vector<int> idx;
    for (Eigen::Index n = 1; n <= N; ++n) {  // prefixes and singletons
      idx.push_back(static_cast<int>(n));
      consider(idx);
      consider({static_cast<int>(n)});
    }
    for (int s = 0; s < opt.samples; ++s) {
      std::vector<int> subset;
      for (Eigen::Index n = 1; n <= N; ++n)
        if (rng.uniform() < 0.5) subset.push_back(static_cast<int>(n));
      consider(subset);
    }
    report.subset_sup = best.value;
    report.witness = std::move(best.indices);
    report.exact = false;
  }

  const double threshold = tol * std::max(1.0, space.norm(x));
  Eigen::Index k_eps = N;
  for (Eigen::Index k = 0; k <= N; ++k)
    if (report.tail_sups[static_cast<std::size_t>(k)] <= threshold) {
      k_eps = k;
      break;
    }
  report.k_epsilon = k_eps;
  report.pass = report.tail_sups[static_cast<std::size_t>(k_eps)] <= threshold;
  return report;
}

}  // namespace frameforge
