#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "frameforge/besselian.hpp"
#include "frameforge/constructions.hpp"
#include "frameforge/embeddings.hpp"
#include "frameforge/haar.hpp"
#include "frameforge/paire.hpp"
#include "frameforge/space.hpp"

namespace frameforge {

using Json = nlohmann::ordered_json;

inline Json vector_to_json(const Eigen::VectorXd& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

inline Eigen::VectorXd vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgumentError("expected a JSON array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const Json& x : j) {
    if (!x.is_number()) throw InvalidArgumentError("expected a JSON array of numbers");
    v[i++] = x.get<double>();
  }
  return v;
}

/// {"dim": n, "norm": {"kind": "lp", "p": <number or "inf">}, "weights": [..]?}
inline Json space_to_json(const NormedSpace& space) {
  Json j;
  j["dim"] = space.dim();
  j["norm"] = Json{{"kind", "lp"},
                   {"p", space.p() == kInfinity ? Json("inf") : Json(space.p())}};
  if (!space.has_unit_weights()) j["weights"] = vector_to_json(space.weights());
  return j;
}

inline NormedSpace space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("norm"))
    throw InvalidArgumentError("space descriptor needs \"dim\" and \"norm\"");
  const Eigen::Index dim = j.at("dim").get<Eigen::Index>();
  const Json& norm = j.at("norm");
  if (!norm.is_object() || norm.value("kind", "") != "lp")
    throw InvalidArgumentError("space descriptor: only norm kind \"lp\" is supported");
  double p;
  const Json& pj = norm.at("p");
  if (pj.is_string()) {
    if (pj.get<std::string>() != "inf")
      throw InvalidArgumentError("space descriptor: p must be a number or \"inf\"");
    p = kInfinity;
  } else if (pj.is_number()) {
    p = pj.get<double>();
  } else {
    throw InvalidArgumentError("space descriptor: p must be a number or \"inf\"");
  }
  Eigen::VectorXd weights = j.contains("weights") ? vector_from_json(j.at("weights"))
                                                  : Eigen::VectorXd::Ones(dim);
  return NormedSpace(dim, p, std::move(weights));
}

/// {"space": <descriptor>, "terms": [{"a": [..], "b_star": [..]}, ...]}
inline Json paire_to_json(const Paire& paire) {
  Json j;
  j["space"] = space_to_json(paire.space());
  Json terms = Json::array();
  for (const PaireTerm& t : paire.terms())
    terms.push_back(Json{{"a", vector_to_json(t.a)}, {"b_star", vector_to_json(t.b_star)}});
  j["terms"] = std::move(terms);
  if (!paire.padding().empty()) {
    Json padded = Json::array();
    for (Eigen::Index n = 0; n < paire.size(); ++n)
      if (paire.is_padded(n)) padded.push_back(n + 1);  // 1-based like reports
    j["padded_terms"] = std::move(padded);
  }
  return j;
}

inline Paire paire_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("terms"))
    throw InvalidArgumentError("paire descriptor needs \"space\" and \"terms\"");
  NormedSpace space = space_from_json(j.at("space"));
  std::vector<PaireTerm> terms;
  for (const Json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("a") || !t.contains("b_star"))
      throw InvalidArgumentError("paire term needs \"a\" and \"b_star\"");
    terms.push_back({vector_from_json(t.at("a")), vector_from_json(t.at("b_star"))});
  }
  Paire paire(space, std::move(terms));
  if (j.contains("padded_terms")) {
    std::vector<bool> padding(static_cast<std::size_t>(paire.size()), false);
    for (const Json& idx : j.at("padded_terms")) {
      if (!idx.is_number_integer())
        throw InvalidArgumentError("padded_terms: indices must be integers");
      const long long k = idx.get<long long>();
      if (k < 1 || k > static_cast<long long>(padding.size()))
        throw InvalidArgumentError("padded_terms: index out of range");
      padding[static_cast<std::size_t>(k) - 1] = true;
    }
    paire.set_padding(std::move(padding));
  }
  return paire;
}

inline Json bound_pair_to_json(const BoundPair& b) {
  return Json{{"lower", b.lower},
              {"upper", b.upper},
              {"lower_method", to_string(b.lower_method)},
              {"upper_method", to_string(b.upper_method)}};
}

inline Json certificate_to_json(const BesselianCertificate& cert) {
  Json j;
  j["constant"] = bound_pair_to_json(cert.constant);
  j["is_exact"] = cert.is_exact;
  if (cert.witness) {
    j["witness"] = Json{{"u", vector_to_json(cert.witness->u)},
                        {"v_star", vector_to_json(cert.witness->v_star)}};
  }
  j["ascent_iterations"] = cert.ascent_iterations;
  j["seed"] = cert.seed;
  return j;
}

inline Json reconstruction_report_to_json(const ReconstructionReport& r,
                                          bool include_decay = true) {
  Json j;
  j["pass"] = r.pass;
  j["proven"] = r.proven;
  j["max_final_residual"] = r.max_final_residual;
  j["tolerance"] = r.tolerance;
  j["probe_count"] = r.probe_count;
  if (include_decay) {
    Json rows = Json::array();
    for (const auto& decay : r.residuals) {
      Json row = Json::array();
      for (double v : decay) row.push_back(v);
      rows.push_back(std::move(row));
    }
    j["residuals"] = std::move(rows);
  }
  return j;
}

inline Json subset_report_to_json(const SubsetConvergenceReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["exact"] = r.exact;
  j["subset_sup"] = r.subset_sup;
  j["witness"] = r.witness;  // 1-based indices
  j["k_epsilon"] = r.k_epsilon;
  j["tolerance"] = r.tolerance;
  Json tails = Json::array();
  for (double v : r.tail_sups) tails.push_back(v);
  j["tail_sups"] = std::move(tails);
  return j;
}

inline Json frame_element_to_json(const FrameElement& z, const std::string& paire_ref) {
  return Json{{"paire_ref", paire_ref},
              {"coefficients", vector_to_json(z.coefficients())}};
}

inline Json monotonicity_report_to_json(const MonotonicityReport& r) {
  return Json{{"pass", r.pass},          {"trials", r.trials},
              {"checks", r.checks},      {"violations", r.violations},
              {"max_violation", r.max_violation},
              {"skipped_zero_terms", r.skipped_zero_terms}};
}

inline Json sandwich_report_to_json(const SandwichReport& r) {
  return Json{{"pass", r.pass},
              {"trials", r.trials},
              {"kf_upper", r.kf_upper},
              {"lf_upper", r.lf_upper},
              {"violations_e", r.violations_e},
              {"violations_f", r.violations_f},
              {"rho_idempotence_violations", r.rho_idempotence_violations},
              {"rho_bound_violations", r.rho_bound_violations},
              {"order_violations", r.order_violations}};
}

inline Json hilbert_result_to_json(const HilbertFrameResult& h) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < h.frame_operator.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < h.frame_operator.cols(); ++j)
      row.push_back(h.frame_operator(i, j));
    rows.push_back(std::move(row));
  }
  Json duals = Json::array();
  for (const Vector& d : h.dual_vectors) duals.push_back(vector_to_json(d));
  return Json{{"frame_operator", std::move(rows)},
              {"alpha", h.alpha},
              {"beta", h.beta},
              {"dual_vectors", std::move(duals)},
              {"paire", paire_to_json(h.paire)}};
}

inline Json growth_rows_to_json(const std::vector<HaarGrowthRow>& rows) {
  Json arr = Json::array();
  for (const HaarGrowthRow& r : rows)
    arr.push_back(Json{{"level", r.level},
                       {"N", r.n},
                       {"besselian_exact", r.besselian_exact},
                       {"frame_constant", r.frame_constant},
                       {"nuclearity_sum", r.nuclearity_sum}});
  return arr;
}

}  // namespace frameforge
