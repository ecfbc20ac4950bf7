#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "frameforge/paire.hpp"
#include "frameforge/space.hpp"

namespace frameforge {

struct BasisFrameResult {
  Paire paire;
  double condition_number = 0.0;
};

/// The paire (f_j, f_j*) of a basis and its dual basis: functionals are the
/// rows of the inverse basis matrix, so reconstruction is exact by algebra.
inline BasisFrameResult basis_frame(const NormedSpace& space, const std::vector<Vector>& basis,
                                    double condition_limit = 1e12) {
  if (static_cast<Eigen::Index>(basis.size()) != space.dim())
    throw InvalidArgumentError("basis_frame: need exactly dim basis vectors");
  Eigen::MatrixXd M(space.dim(), space.dim());
  for (Eigen::Index j = 0; j < space.dim(); ++j) {
    if (basis[static_cast<std::size_t>(j)].size() != space.dim())
      throw DimensionMismatchError("basis_frame: basis vector outside the space");
    M.col(j) = basis[static_cast<std::size_t>(j)];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  const double cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  if (!(cond <= condition_limit))
    throw SingularBasisError("basis_frame: condition number " + std::to_string(cond) +
                             " exceeds " + std::to_string(condition_limit));
  const Eigen::MatrixXd Minv = M.inverse();
  std::vector<PaireTerm> terms;
  terms.reserve(basis.size());
  for (Eigen::Index j = 0; j < space.dim(); ++j)
    terms.push_back({basis[static_cast<std::size_t>(j)], Minv.row(j).transpose()});
  return {Paire(space, std::move(terms)), cond};
}

/// Identity paire (e_n, e_n*) on any space descriptor.
inline Paire identity_paire(const NormedSpace& space) {
  std::vector<PaireTerm> terms;
  terms.reserve(static_cast<std::size_t>(space.dim()));
  for (Eigen::Index n = 0; n < space.dim(); ++n) {
    Vector e = Vector::Zero(space.dim());
    e[n] = 1.0;
    terms.push_back({e, e});
  }
  return Paire(space, std::move(terms));
}

/// Truncated canonical frames of l1, lp and c0 (at finite dimension the c0
/// truncation is linf).
inline Paire canonical_l1(Eigen::Index n) { return identity_paire(NormedSpace::l1(n)); }
inline Paire canonical_lp(double p, Eigen::Index n) {
  return identity_paire(NormedSpace::lp(n, p));
}
inline Paire canonical_c0(Eigen::Index n) { return identity_paire(NormedSpace::linf(n)); }

struct HilbertFrameResult {
  Paire paire;
  Eigen::MatrixXd frame_operator;  // S = sum_n x_n x_n^T
  double alpha = 0.0;              // smallest eigenvalue of S
  double beta = 0.0;               // largest eigenvalue of S
  std::vector<Vector> dual_vectors;
};

/// Turns a Hilbert frame (x_n) into the Schauder paire (x_n, <., S^-1 x_n>):
/// the frame operator is inverted by a solve, never by trusting tightness.
inline HilbertFrameResult hilbert_frame_to_schauder(const std::vector<Vector>& vectors,
                                                    const NormedSpace& space,
                                                    double rank_tol = 1e-12) {
  if (!space.is_euclidean())
    throw InvalidArgumentError("hilbert_frame_to_schauder: space must be Euclidean");
  if (vectors.empty()) throw InvalidArgumentError("hilbert_frame_to_schauder: no vectors");
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(space.dim(), space.dim());
  for (const Vector& x : vectors) {
    if (x.size() != space.dim())
      throw DimensionMismatchError("hilbert_frame_to_schauder: vector outside the space");
    S += x * x.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  const double alpha = es.eigenvalues().minCoeff();
  const double beta = es.eigenvalues().maxCoeff();
  if (!(alpha > rank_tol * std::max(beta, 1.0)))
    throw NotAFrameError("hilbert_frame_to_schauder: vectors do not span (alpha = " +
                         std::to_string(alpha) + ")");
  const Eigen::LDLT<Eigen::MatrixXd> solver(S);
  std::vector<PaireTerm> terms;
  std::vector<Vector> duals;
  terms.reserve(vectors.size());
  duals.reserve(vectors.size());
  for (const Vector& x : vectors) {
    Vector d = solver.solve(x);
    terms.push_back({x, d});
    duals.push_back(std::move(d));
  }
  return {Paire(space, std::move(terms)), S, alpha, beta, std::move(duals)};
}

/// The tight three-vector frame of R^2 at mutual angles of 120 degrees.
inline std::vector<Vector> mercedes_vectors() {
  const double s = std::sqrt(3.0) / 2.0;
  std::vector<Vector> v(3, Vector(2));
  v[0] << 1.0, 0.0;
  v[1] << -0.5, s;
  v[2] << -0.5, -s;
  return v;
}

inline HilbertFrameResult mercedes_frame() {
  return hilbert_frame_to_schauder(mercedes_vectors(), NormedSpace::l2(2));
}

namespace detail {

/// Inherited norm on a subspace: same exponent; ambient weights are kept when
/// the basis columns are signed coordinate vectors, unit weights otherwise.
inline NormedSpace subspace_space(const NormedSpace& ambient, const Eigen::MatrixXd& basis) {
  Eigen::VectorXd w = Eigen::VectorXd::Ones(basis.cols());
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    Eigen::Index nonzero = -1;
    bool coordinate = true;
    for (Eigen::Index i = 0; i < basis.rows(); ++i) {
      const double v = basis(i, j);
      if (v == 0.0) continue;
      if (nonzero >= 0 || std::abs(std::abs(v) - 1.0) > 1e-12) {
        coordinate = false;
        break;
      }
      nonzero = i;
    }
    if (coordinate && nonzero >= 0) w[j] = ambient.weights()[nonzero];
  }
  return NormedSpace(basis.cols(), ambient.p(), std::move(w));
}

}  // namespace detail

/// Restriction of a paire to a complemented subspace: terms become
/// (P a_n, b_n* composed with the basis map), re-expressed in subspace
/// coordinates.  The projector must be idempotent with range spanned by the
/// basis columns.
inline Paire restrict_frame(const Paire& paire, const Eigen::MatrixXd& projector,
                            const Eigen::MatrixXd& subspace_basis, double tol = 1e-10) {
  const Eigen::Index dim = paire.space().dim();
  if (projector.rows() != dim || projector.cols() != dim)
    throw DimensionMismatchError("restrict_frame: projector shape does not match the space");
  if (subspace_basis.rows() != dim || subspace_basis.cols() < 1 || subspace_basis.cols() > dim)
    throw DimensionMismatchError("restrict_frame: bad subspace basis shape");
  if ((projector * projector - projector).norm() > tol)
    throw NotIdempotentError("restrict_frame: ||P^2 - P|| > tolerance");

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> basis_qr(subspace_basis);
  if (basis_qr.rank() != subspace_basis.cols())
    throw RangeMismatchError("restrict_frame: subspace basis is rank deficient");
  if ((projector * subspace_basis - subspace_basis).norm() > tol)
    throw RangeMismatchError("restrict_frame: basis columns are not fixed by P");
  if (Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(projector).rank() != subspace_basis.cols())
    throw RangeMismatchError("restrict_frame: rank(P) differs from the basis size");

  const NormedSpace sub = detail::subspace_space(paire.space(), subspace_basis);
  std::vector<PaireTerm> terms;
  terms.reserve(static_cast<std::size_t>(paire.size()));
  for (const PaireTerm& t : paire.terms()) {
    const Vector pa = projector * t.a;
    Vector coords = basis_qr.solve(pa);
    if ((subspace_basis * coords - pa).norm() > tol * std::max(1.0, pa.norm()))
      throw RangeMismatchError("restrict_frame: P a_n fell outside span(basis)");
    terms.push_back({std::move(coords), subspace_basis.transpose() * t.b_star});
  }
  return Paire(sub, std::move(terms));
}

struct DirectSumComponent {
  Paire paire;
  double weight = 1.0;  // factor of this block in the sum norm
};

/// Round-robin interleaving of component frames on the sum-normed product
/// space: term kN + l comes from component l, padded with (0, 0) pairs past a
/// component's length.  The sum of weighted L1 norms is again a weighted L1
/// norm on the concatenation, which is the only multi-component case this
/// space model can represent.
inline Paire direct_sum_frames(const std::vector<DirectSumComponent>& components) {
  if (components.empty())
    throw InvalidArgumentError("direct_sum_frames: need at least one component");
  for (const DirectSumComponent& c : components)
    if (!(c.weight > 0.0))
      throw InvalidArgumentError("direct_sum_frames: weights must be positive");

  if (components.size() == 1) {
    // Product of one factor: same paire, block norm scaled by the weight.
    const Paire& src = components[0].paire;
    const NormedSpace& s = src.space();
    const double lambda = components[0].weight;
    Eigen::VectorXd w = s.weights();
    if (s.p() == kInfinity)
      w *= lambda;
    else
      w *= std::pow(lambda, s.p());
    Paire out(NormedSpace(s.dim(), s.p(), std::move(w)), src.terms());
    out.set_padding(src.padding());
    return out;
  }

  Eigen::Index total_dim = 0;
  Eigen::Index max_terms = 0;
  for (const DirectSumComponent& c : components) {
    if (c.paire.space().p() != 1.0)
      throw UnsupportedProductNormError(
          "direct_sum_frames: the sum norm of several blocks is weighted L1, so every "
          "component must carry an L1 norm");
    total_dim += c.paire.space().dim();
    max_terms = std::max(max_terms, c.paire.size());
  }

  Eigen::VectorXd weights(total_dim);
  std::vector<Eigen::Index> offsets;
  offsets.reserve(components.size());
  Eigen::Index at = 0;
  for (const DirectSumComponent& c : components) {
    offsets.push_back(at);
    weights.segment(at, c.paire.space().dim()) =
        c.weight * c.paire.space().weights();
    at += c.paire.space().dim();
  }
  const NormedSpace product(total_dim, 1.0, std::move(weights));

  const Eigen::Index n_components = static_cast<Eigen::Index>(components.size());
  std::vector<PaireTerm> terms;
  std::vector<bool> padding;
  terms.reserve(static_cast<std::size_t>(max_terms * n_components));
  padding.reserve(static_cast<std::size_t>(max_terms * n_components));
  for (Eigen::Index k = 0; k < max_terms; ++k) {
    for (Eigen::Index l = 0; l < n_components; ++l) {
      const Paire& comp = components[static_cast<std::size_t>(l)].paire;
      Vector a = Vector::Zero(total_dim);
      Functional b = Vector::Zero(total_dim);
      bool pad = true;
      if (k < comp.size()) {
        const PaireTerm& t = comp.term(k);
        a.segment(offsets[static_cast<std::size_t>(l)], comp.space().dim()) = t.a;
        b.segment(offsets[static_cast<std::size_t>(l)], comp.space().dim()) = t.b_star;
        pad = comp.is_padded(k);
      }
      terms.push_back({std::move(a), std::move(b)});
      padding.push_back(pad);
    }
  }
  Paire out(product, std::move(terms));
  if (std::find(padding.begin(), padding.end(), true) != padding.end())
    out.set_padding(std::move(padding));
  return out;
}

}  // namespace frameforge
