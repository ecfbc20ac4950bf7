// frame-forge: batch experiment runner over Schauder frames.  Reports are
// deterministic for a fixed config + seed; every report embeds the config
// that produced it.
//
// Exit codes: 0 success, 1 invariant violation, 2 config error, 3 computation
// error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <frameforge/frameforge.hpp>

namespace {

using frameforge::Json;

constexpr int kExitOk = 0;
constexpr int kExitInvariantViolation = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitComputationError = 3;

struct InputOptions {
  std::string preset;
  std::string paire_file;
  std::string paire_inline;
  long long n = 4;
  double p = 2.0;
  int level = 2;
};

struct OutputOptions {
  std::string path;
  std::string format = "json";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* preset = cmd->add_option("--preset", in.preset,
                                 "named preset: canonical_l1 | canonical_lp | canonical_c0 | "
                                 "mercedes | haar");
  auto* file = cmd->add_option("--paire", in.paire_file, "paire JSON file");
  auto* inl = cmd->add_option("--paire-json", in.paire_inline, "inline paire JSON");
  preset->excludes(file)->excludes(inl);
  file->excludes(inl);
  cmd->add_option("--n", in.n, "size of canonical presets")->check(CLI::PositiveNumber);
  cmd->add_option("--p", in.p, "exponent for canonical_lp");
  cmd->add_option("--level", in.level, "level for the haar preset");
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--out", out.path, "output path (stdout when absent)");
  cmd->add_option("--format", out.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

std::string read_file(const std::string& path) {
  std::ifstream ifs(path, std::ios::binary);
  if (!ifs) throw frameforge::InvalidArgumentError("cannot open " + path);
  std::ostringstream ss;
  ss << ifs.rdbuf();
  return ss.str();
}

void emit(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream ofs(out.path, std::ios::binary | std::ios::trunc);
  if (!ofs) throw frameforge::InvalidArgumentError("cannot write " + out.path);
  ofs << text;
  if (text.empty() || text.back() != '\n') ofs << "\n";
}

std::string format17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

frameforge::Paire build_preset(const InputOptions& in) {
  using namespace frameforge;
  if (in.preset == "canonical_l1") return canonical_l1(in.n);
  if (in.preset == "canonical_lp") return canonical_lp(in.p, in.n);
  if (in.preset == "canonical_c0") return canonical_c0(in.n);
  if (in.preset == "mercedes") return mercedes_frame().paire;
  if (in.preset == "haar") return haar_paire(in.level).paire;
  throw InvalidArgumentError("unknown preset \"" + in.preset + "\"");
}

frameforge::Paire resolve_paire(const InputOptions& in) {
  using namespace frameforge;
  const int sources = (!in.preset.empty()) + (!in.paire_file.empty()) +
                      (!in.paire_inline.empty());
  if (sources != 1)
    throw InvalidArgumentError("exactly one of --preset / --paire / --paire-json required");
  if (!in.preset.empty()) return build_preset(in);
  // any defect in user-supplied input is a config error (exit 2)
  try {
    const Json j =
        Json::parse(in.paire_file.empty() ? in.paire_inline : read_file(in.paire_file));
    return paire_from_json(j);
  } catch (const InvalidArgumentError&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidArgumentError(std::string("bad paire input: ") + e.what());
  }
}

Json input_config_json(const InputOptions& in) {
  Json j;
  if (!in.preset.empty()) {
    j["preset"] = in.preset;
    if (in.preset == "canonical_l1" || in.preset == "canonical_lp" ||
        in.preset == "canonical_c0")
      j["n"] = in.n;
    if (in.preset == "canonical_lp") j["p"] = in.p;
    if (in.preset == "haar") j["level"] = in.level;
  }
  if (!in.paire_file.empty()) j["paire_file"] = in.paire_file;
  if (!in.paire_inline.empty()) j["paire_json"] = "(inline)";
  return j;
}

Json report_shell(const std::string& command, Json config) {
  Json j;
  j["tool"] = "frame-forge";
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

/// K_F upper bound usable on any space: exact when p (and the enumeration cap)
/// allow it, the sampled prefix-sum bound otherwise.
double frame_constant_upper(const frameforge::Paire& paire, std::uint64_t seed) {
  using namespace frameforge;
  const double p = paire.space().p();
  if (p == 1.0 || p == 2.0 || p == kInfinity) {
    try {
      return frame_constant(paire, ConstantMethod::exact).upper;
    } catch (const DimensionTooLargeError&) {
      // sign-vector enumeration over cap: fall through to sampled
    }
  }
  FrameConstantOptions opt;
  opt.seed = seed;
  return frame_constant(paire, ConstantMethod::sampled, opt).upper;
}

/// L_F upper bound: exact on polyhedral norms within cap, Holder bounds else.
double besselian_upper(const frameforge::Paire& paire, std::uint64_t seed) {
  using namespace frameforge;
  BesselianOptions opt;
  opt.seed = seed;
  const NormedSpace& s = paire.space();
  // either side of the enumeration is 2^dim sign vectors
  if (s.is_polyhedral() && s.dim() <= opt.extreme_cap)
    return besselian_constant(paire, BesselianMethod::exact, opt).constant.upper;
  return besselian_constant(paire, BesselianMethod::bounds, opt).constant.upper;
}

// ---------------------------------------------------------------------------
// verify: invariant suites over presets and seeded random paires
// ---------------------------------------------------------------------------

struct VerifyContext {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string filter;
  int failures = 0;
  int checks = 0;
  Json lines = Json::array();

  bool enabled(const std::string& suite) const {
    return filter.empty() || suite.find(filter) != std::string::npos;
  }
  void record(const std::string& suite, const std::string& what, bool ok,
              const std::string& detail = "") {
    ++checks;
    if (!ok) ++failures;
    std::cout << (ok ? "PASS " : "FAIL ") << suite << ": " << what
              << (detail.empty() ? "" : " [" + detail + "]") << "\n";
    lines.push_back(Json{{"suite", suite}, {"check", what}, {"pass", ok}});
  }
};

std::vector<std::pair<std::string, frameforge::Paire>> verify_presets() {
  using namespace frameforge;
  std::vector<std::pair<std::string, Paire>> out;
  out.emplace_back("canonical_l1(5)", canonical_l1(5));
  out.emplace_back("canonical_l2(4)", canonical_lp(2.0, 4));
  out.emplace_back("canonical_lp(1.5,4)", canonical_lp(1.5, 4));
  out.emplace_back("canonical_c0(4)", canonical_c0(4));
  out.emplace_back("mercedes", mercedes_frame().paire);
  out.emplace_back("haar(2)", haar_paire(2).paire);
  std::vector<DirectSumComponent> comps;
  comps.push_back({canonical_l1(2), 1.0});
  comps.push_back({canonical_l1(1), 1.0});
  out.emplace_back("direct_sum(l1:2,l1:1)", direct_sum_frames(comps));
  return out;
}

frameforge::Paire random_basis_paire(frameforge::Rng& rng, Eigen::Index dim, double p) {
  using namespace frameforge;
  const NormedSpace space = NormedSpace::lp(dim, p);
  for (;;) {
    std::vector<Vector> basis;
    for (Eigen::Index i = 0; i < dim; ++i) basis.push_back(rng.gaussian_vector(dim));
    try {
      return basis_frame(space, basis).paire;
    } catch (const SingularBasisError&) {
      // resample
    }
  }
}

void verify_spaces(VerifyContext& ctx) {
  using namespace frameforge;
  if (!ctx.enabled("spaces")) return;
  Rng rng(ctx.seed + 1);
  const double ps[] = {1.0, 1.5, 2.0, 3.0, kInfinity};
  bool homog = true, triangle = true, pairing = true, extreme_unit = true,
       extreme_dual = true;
  for (int trial = 0; trial < 400; ++trial) {
    const Eigen::Index dim = 1 + trial % 5;
    const double p = ps[trial % 5];
    Eigen::VectorXd w = Eigen::VectorXd::Ones(dim);
    if (trial % 3 == 0)
      for (Eigen::Index i = 0; i < dim; ++i) w[i] = 0.25 + 2.0 * rng.uniform();
    const NormedSpace space(dim, p, w);
    const Vector x = rng.gaussian_vector(dim);
    const Vector y = rng.gaussian_vector(dim);
    const double c = 4.0 * rng.uniform() - 2.0;
    homog &= std::abs(space.norm(c * x) - std::abs(c) * space.norm(x)) <= 1e-12 * (1.0 + space.norm(x));
    triangle &= space.norm(x + y) <= space.norm(x) + space.norm(y) + 1e-12;
    pairing &= std::abs(apply(y, x)) <= space.dual_norm(y) * space.norm(x) + 1e-9;
    if (space.is_polyhedral() && dim <= 10) {
      const Vector f = rng.gaussian_vector(dim);
      double best = 0.0;
      for (const Vector& e : space.extreme_points()) {
        extreme_unit &= std::abs(space.norm(e) - 1.0) <= 1e-12;
        best = std::max(best, std::abs(apply(f, e)));
      }
      extreme_dual &= std::abs(best - space.dual_norm(f)) <= 1e-9 * (1.0 + best);
    }
  }
  ctx.record("spaces", "norm homogeneity (400 random inputs)", homog);
  ctx.record("spaces", "triangle inequality (400 random inputs)", triangle);
  ctx.record("spaces", "pairing bounded by dual norm", pairing);
  ctx.record("spaces", "extreme points have unit norm", extreme_unit);
  ctx.record("spaces", "dual norm attained on extreme points", extreme_dual);
}

void verify_reconstruction(VerifyContext& ctx) {
  using namespace frameforge;
  if (!ctx.enabled("reconstruction")) return;
  for (const auto& [name, paire] : verify_presets()) {
    const auto rep = check_schauder_frame(paire, ctx.tol, 16, ctx.seed);
    ctx.record("reconstruction", name + " reconstructs", rep.pass && rep.proven,
               "max residual " + format17(rep.max_final_residual));
  }
  Rng rng(ctx.seed + 2);
  bool ok = true;
  for (int i = 0; i < 10; ++i) {
    const Paire paire = random_basis_paire(rng, 2 + i % 3, i % 2 ? 1.0 : 2.0);
    ok &= check_schauder_frame(paire, 1e-8).pass;
  }
  ctx.record("reconstruction", "random basis frames reconstruct", ok);
}

void verify_frame_constants(VerifyContext& ctx) {
  using namespace frameforge;
  if (!ctx.enabled("constant")) return;
  bool canonical_one = true;
  for (Eigen::Index n = 1; n <= 6; ++n) {
    canonical_one &= std::abs(frame_constant(canonical_l1(n), ConstantMethod::exact).value() - 1.0) <= 1e-9;
    canonical_one &= std::abs(frame_constant(canonical_lp(2.0, n), ConstantMethod::exact).value() - 1.0) <= 1e-9;
    canonical_one &= std::abs(frame_constant(canonical_c0(n), ConstantMethod::exact).value() - 1.0) <= 1e-9;
  }
  ctx.record("constant", "canonical frames have K_F = 1", canonical_one);

  bool sampled_brackets = true, at_least_one = true;
  Rng rng(ctx.seed + 3);
  for (int i = 0; i < 20; ++i) {
    const Paire paire = random_basis_paire(rng, 2 + i % 2, i % 2 ? 1.0 : 2.0);
    const double exact = frame_constant(paire, ConstantMethod::exact).value();
    FrameConstantOptions opt;
    opt.seed = ctx.seed + static_cast<std::uint64_t>(i);
    const BoundPair sampled = frame_constant(paire, ConstantMethod::sampled, opt);
    sampled_brackets &= sampled.lower <= exact + 1e-9 && exact <= sampled.upper + 1e-9;
    at_least_one &= exact >= 1.0 - 1e-9;
  }
  ctx.record("constant", "sampled bounds bracket the exact value", sampled_brackets);
  ctx.record("constant", "K_F >= 1 on Schauder frames", at_least_one);
}

void verify_besselian(VerifyContext& ctx) {
  using namespace frameforge;
  if (!ctx.enabled("besselian")) return;
  bool l1_exact = true;
  for (Eigen::Index n = 2; n <= 6; ++n) {
    const auto cert = besselian_constant(canonical_l1(n), BesselianMethod::exact);
    l1_exact &= std::abs(cert.constant.value() - 1.0) <= 1e-10;
  }
  ctx.record("besselian", "canonical l1 frames have L_F = 1", l1_exact);

  bool lp_tight = true;
  for (double p : {1.5, 2.0, 3.0}) {
    BesselianOptions opt;
    opt.seed = ctx.seed;
    const auto cert = besselian_constant(canonical_lp(p, 4), BesselianMethod::bounds, opt);
    lp_tight &= std::abs(cert.constant.lower - 1.0) <= 1e-6 &&
                std::abs(cert.constant.upper - 1.0) <= 1e-6;
  }
  ctx.record("besselian", "canonical lp bounds pinch to 1", lp_tight);

  bool scaling = true;
  Rng rng(ctx.seed + 4);
  for (int i = 0; i < 25; ++i) {
    const Paire paire = random_basis_paire(rng, 2, 1.0);
    const double c = 0.25 + 4.0 * rng.uniform();
    std::vector<PaireTerm> scaled;
    for (const PaireTerm& t : paire.terms()) scaled.push_back({c * t.a, t.b_star / c});
    const Paire paire2(paire.space(), scaled);
    const Vector u = rng.gaussian_vector(2);
    const Vector v = rng.gaussian_vector(2);
    scaling &= std::abs(besselian_form(paire, u, v) - besselian_form(paire2, u, v)) <=
               1e-12 * (1.0 + besselian_form(paire, u, v));
    scaling &= std::abs(nuclearity_sum(paire) - nuclearity_sum(paire2)) <=
               1e-12 * (1.0 + nuclearity_sum(paire));
    const double e1 = besselian_constant(paire, BesselianMethod::exact).constant.value();
    const double e2 = besselian_constant(paire2, BesselianMethod::exact).constant.value();
    scaling &= std::abs(e1 - e2) <= 1e-10 * (1.0 + e1);
  }
  ctx.record("besselian", "scale change (c a_n, b_n*/c) is invisible", scaling);

  bool brackets = true;
  for (int i = 0; i < 25; ++i) {
    const Eigen::Index dim = 2 + i % 2;
    const Paire paire = random_basis_paire(rng, dim, i % 2 ? 1.0 : kInfinity);
    const double exact = besselian_constant(paire, BesselianMethod::exact).constant.value();
    BesselianOptions opt;
    opt.seed = ctx.seed + static_cast<std::uint64_t>(i);
    const auto bounds = besselian_constant(paire, BesselianMethod::bounds, opt);
    brackets &= bounds.constant.lower <= exact + 1e-9 && exact <= bounds.constant.upper + 1e-9;
    for (double q : {1.5, 2.0, 3.0})
      brackets &= holder_besselian_bound(paire, q) >= exact - 1e-9;
  }
  ctx.record("besselian", "sampled/Holder bounds bracket exact values", brackets);
}

void verify_embeddings(VerifyContext& ctx) {
  using namespace frameforge;
  if (!ctx.enabled("embed")) return;
  for (const auto& [name, paire] : verify_presets()) {
    const double kf = frame_constant_upper(paire, ctx.seed);
    const double lf = besselian_upper(paire, ctx.seed);
    const auto rep = embedding_sandwich_check(paire, kf, lf, 50, ctx.seed, 1e-9);
    ctx.record("embeddings", name + " sandwich/rho checks", rep.pass);
    const auto mono_z = basis_monotonicity_check(paire, EmbeddingVariant::Z, 50, ctx.seed);
    const auto mono_w = basis_monotonicity_check(paire, EmbeddingVariant::W, 50, ctx.seed);
    ctx.record("embeddings", name + " basis monotonicity", mono_z.pass && mono_w.pass);
  }
}

void verify_haar(VerifyContext& ctx) {
  using namespace frameforge;
  if (!ctx.enabled("haar")) return;
  const auto rows = besselian_growth_study(3);
  bool recon = true, monotone = true, kf_one = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    recon &= check_schauder_frame(haar_paire(rows[i].level).paire, 1e-10).pass;
    kf_one &= std::abs(rows[i].frame_constant - 1.0) <= 1e-9;
    if (i > 0) monotone &= rows[i].besselian_exact >= rows[i - 1].besselian_exact - 1e-10;
  }
  ctx.record("haar", "levels 0..3 reconstruct exactly", recon);
  ctx.record("haar", "K_F = 1 at every level", kf_one);
  ctx.record("haar", "L_F nondecreasing in level", monotone);
}

void verify_user_paire(VerifyContext& ctx, const frameforge::Paire& paire) {
  using namespace frameforge;
  const auto rep = check_schauder_frame(paire, ctx.tol, 16, ctx.seed);
  ctx.record("user_paire", "claimed frame reconstructs", rep.pass,
             "max residual " + format17(rep.max_final_residual));
  if (!rep.pass) return;  // remaining checks presuppose a frame
  const double kf = frame_constant_upper(paire, ctx.seed);
  const double lf = besselian_upper(paire, ctx.seed);
  ctx.record("user_paire", "K_F >= 1", kf >= 1.0 - 1e-9);
  BesselianOptions bopt;
  bopt.seed = ctx.seed;
  const auto cert = besselian_constant(paire, BesselianMethod::bounds, bopt);
  ctx.record("user_paire", "besselian bounds are consistent",
             cert.constant.lower <= cert.constant.upper + 1e-12 &&
                 cert.constant.lower >= 0.0 && std::isfinite(cert.constant.upper));
  if (paire.size() <= 20) {
    const auto sandwich = embedding_sandwich_check(paire, kf, lf, 50, ctx.seed, 1e-9);
    ctx.record("user_paire", "embedding sandwiches hold", sandwich.pass);
  }
}

// ---------------------------------------------------------------------------
// subcommand runners
// ---------------------------------------------------------------------------

int run_check(const InputOptions& in, const OutputOptions& out, double tol,
              std::uint64_t seed, int probes) {
  using namespace frameforge;
  const Paire paire = resolve_paire(in);
  const auto rep = check_schauder_frame(paire, tol, probes, seed);
  Json config = input_config_json(in);
  config["tol"] = tol;
  config["seed"] = seed;
  config["probes"] = probes;
  Json j = report_shell("check", std::move(config));
  j["results"] = reconstruction_report_to_json(rep);
  emit(out, j.dump(2));
  return rep.pass ? kExitOk : kExitInvariantViolation;
}

int run_constant(const InputOptions& in, const OutputOptions& out, const std::string& method,
                 std::uint64_t seed) {
  using namespace frameforge;
  const Paire paire = resolve_paire(in);
  FrameConstantOptions opt;
  opt.seed = seed;
  const BoundPair kf = frame_constant(
      paire, method == "exact" ? ConstantMethod::exact : ConstantMethod::sampled, opt);
  Json config = input_config_json(in);
  config["method"] = method;
  config["seed"] = seed;
  Json j = report_shell("constant", std::move(config));
  j["results"] = Json{{"frame_constant", bound_pair_to_json(kf)},
                      {"nuclearity_sum", nuclearity_sum(paire)}};
  if (out.format == "csv") {
    std::string csv = "quantity,lower,upper,lower_method,upper_method\n";
    csv += "frame_constant," + format17(kf.lower) + "," + format17(kf.upper) + "," +
           to_string(kf.lower_method) + "," + std::string(to_string(kf.upper_method)) + "\n";
    emit(out, csv);
  } else {
    emit(out, j.dump(2));
  }
  return kExitOk;
}

int run_besselian(const InputOptions& in, const OutputOptions& out, const std::string& method,
                  std::uint64_t seed, double tol) {
  using namespace frameforge;
  const Paire paire = resolve_paire(in);
  BesselianOptions opt;
  opt.seed = seed;
  const auto cert = besselian_constant(
      paire, method == "exact" ? BesselianMethod::exact : BesselianMethod::bounds, opt);

  // Witness must reproduce the lower bound from inside the two unit balls.
  bool witness_ok = true;
  if (cert.witness) {
    const double f = besselian_form(paire, cert.witness->u, cert.witness->v_star);
    witness_ok = std::abs(f - cert.constant.lower) <= 1e-9 * (1.0 + cert.constant.lower) &&
                 paire.space().norm(cert.witness->u) <= 1.0 + 1e-9 &&
                 paire.space().dual_norm(cert.witness->v_star) <= 1.0 + 1e-9;
  }

  Json config = input_config_json(in);
  config["method"] = method;
  config["seed"] = seed;
  config["tol"] = tol;
  Json j = report_shell("besselian", std::move(config));
  j["results"] = Json{{"certificate", certificate_to_json(cert)},
                      {"witness_consistent", witness_ok}};
  if (out.format == "csv") {
    std::string csv = "quantity,lower,upper,lower_method,upper_method\n";
    csv += "besselian_constant," + format17(cert.constant.lower) + "," +
           format17(cert.constant.upper) + "," + to_string(cert.constant.lower_method) +
           "," + std::string(to_string(cert.constant.upper_method)) + "\n";
    emit(out, csv);
  } else {
    emit(out, j.dump(2));
  }
  return witness_ok ? kExitOk : kExitInvariantViolation;
}

frameforge::DirectSumComponent parse_component(const std::string& text) {
  using namespace frameforge;
  try {
    std::string body = text;
    double weight = 1.0;
    if (const auto at = text.find('@'); at != std::string::npos) {
      body = text.substr(0, at);
      weight = std::stod(text.substr(at + 1));
    }
    std::vector<std::string> parts;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.empty()) throw InvalidArgumentError("empty direct-sum component");
    if (parts[0] == "l1" && parts.size() == 2)
      return {canonical_l1(std::stoll(parts[1])), weight};
    if (parts[0] == "lp" && parts.size() == 3)
      return {canonical_lp(std::stod(parts[1]), std::stoll(parts[2])), weight};
    if (parts[0] == "c0" && parts.size() == 2)
      return {canonical_c0(std::stoll(parts[1])), weight};
    if (parts[0] == "mercedes" && parts.size() == 1) return {mercedes_frame().paire, weight};
    if (parts[0] == "haar" && parts.size() == 2)
      return {haar_paire(std::stoi(parts[1])).paire, weight};
  } catch (const frameforge::Error&) {
    throw;
  } catch (const std::exception&) {
    // fall through to the usage message
  }
  throw InvalidArgumentError("bad direct-sum component \"" + text + "\" (use l1:N, lp:P:N, "
                             "c0:N, mercedes, haar:L, optionally @weight)");
}

int run_construct(const InputOptions& in, const OutputOptions& out,
                  const std::vector<std::string>& sum_components,
                  const std::string& restrict_coords, const std::string& paire_out,
                  double tol) {
  using namespace frameforge;
  Json config = input_config_json(in);
  Json meta;

  std::optional<Paire> paire;
  if (!sum_components.empty()) {
    std::vector<DirectSumComponent> comps;
    for (const std::string& s : sum_components) comps.push_back(parse_component(s));
    paire = direct_sum_frames(comps);
    config["direct_sum"] = sum_components;
  } else {
    paire = resolve_paire(in);
    if (in.preset == "mercedes") {
      const auto hres = mercedes_frame();
      meta["hilbert"] = Json{{"alpha", hres.alpha}, {"beta", hres.beta}};
    }
  }

  if (!restrict_coords.empty()) {
    std::vector<Eigen::Index> coords;
    std::stringstream ss(restrict_coords);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        coords.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        throw InvalidArgumentError("--restrict-coords: \"" + tok + "\" is not an index");
      }
    }
    if (coords.empty()) throw InvalidArgumentError("--restrict-coords: no indices given");
    const Eigen::Index dim = paire->space().dim();
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd V = Eigen::MatrixXd::Zero(dim, static_cast<Eigen::Index>(coords.size()));
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const Eigen::Index c = coords[k] - 1;  // 1-based on the command line
      if (c < 0 || c >= dim) throw InvalidArgumentError("restrict coordinate out of range");
      P(c, c) = 1.0;
      V(c, static_cast<Eigen::Index>(k)) = 1.0;
    }
    paire = restrict_frame(*paire, P, V);
    config["restrict_coords"] = restrict_coords;
  }

  const auto rep = check_schauder_frame(*paire, tol);
  Json j = report_shell("construct", std::move(config));
  j["results"] = Json{{"paire", paire_to_json(*paire)},
                      {"reconstruction", reconstruction_report_to_json(rep, false)}};
  if (!meta.is_null()) j["results"]["metadata"] = std::move(meta);
  emit(out, j.dump(2));
  if (!paire_out.empty()) {
    OutputOptions bare;
    bare.path = paire_out;
    emit(bare, paire_to_json(*paire).dump(2));
  }
  return rep.pass ? kExitOk : kExitInvariantViolation;
}

int run_embed(const InputOptions& in, const OutputOptions& out, const std::string& x_json,
              bool check_sandwich, int trials, std::uint64_t seed, double tol) {
  using namespace frameforge;
  const Paire paire = resolve_paire(in);
  Json config = input_config_json(in);
  config["seed"] = seed;
  config["tol"] = tol;
  Json results;

  const double kf = frame_constant_upper(paire, seed);
  const double lf = besselian_upper(paire, seed);
  results["kf_upper"] = kf;
  results["lf_upper"] = lf;

  int exit_code = kExitOk;
  if (!x_json.empty()) {
    Vector x;
    try {
      x = vector_from_json(Json::parse(x_json));
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidArgumentError(std::string("--x parse error: ") + e.what());
    }
    config["x"] = Json::parse(x_json);
    const FrameElement z = t0_embed(paire, x, tol);
    const double nx = paire.space().norm(x);
    const double ze = ze_norm(z);
    const double we = we_norm(z).value();
    results["embedding"] = Json{{"element", frame_element_to_json(z, "input")},
                                {"norm_x", nx},
                                {"ze_norm", ze},
                                {"we_norm", we}};
    const bool sandwich_ok = nx <= ze + 1e-9 && ze <= kf * nx + 1e-9 &&
                             nx <= we + 1e-9 && we <= lf * nx + 1e-9;
    results["embedding"]["sandwich_ok"] = sandwich_ok;
    if (!sandwich_ok) exit_code = kExitInvariantViolation;
  }
  if (check_sandwich) {
    config["check_sandwich"] = true;
    config["trials"] = trials;
    const auto rep = embedding_sandwich_check(paire, kf, lf, trials, seed, 1e-9);
    results["sandwich"] = sandwich_report_to_json(rep);
    const auto mono_z = basis_monotonicity_check(paire, EmbeddingVariant::Z, trials, seed);
    const auto mono_w = basis_monotonicity_check(paire, EmbeddingVariant::W, trials, seed);
    results["monotonicity_z"] = monotonicity_report_to_json(mono_z);
    results["monotonicity_w"] = monotonicity_report_to_json(mono_w);
    if (!rep.pass || !mono_z.pass || !mono_w.pass) exit_code = kExitInvariantViolation;
  }

  Json j = report_shell("embed", std::move(config));
  j["results"] = std::move(results);
  emit(out, j.dump(2));
  return exit_code;
}

int run_haar(const OutputOptions& out, int max_level, int cap) {
  using namespace frameforge;
  const auto rows = besselian_growth_study(max_level, cap);
  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    monotone &= rows[i].besselian_exact >= rows[i - 1].besselian_exact - 1e-10;

  if (out.format == "csv") {
    std::string csv = "# config: {\"command\":\"haar\",\"max_level\":" +
                      std::to_string(max_level) + "}\n";
    csv += growth_csv(rows);
    emit(out, csv);
  } else {
    Json j = report_shell("haar", Json{{"max_level", max_level}});
    j["results"] = Json{{"rows", growth_rows_to_json(rows)},
                        {"besselian_monotone", monotone}};
    emit(out, j.dump(2));
  }
  return monotone ? kExitOk : kExitInvariantViolation;
}

int run_verify(const InputOptions& in, const OutputOptions& out, const std::string& filter,
               std::uint64_t seed, double tol) {
  using namespace frameforge;
  VerifyContext ctx;
  ctx.seed = seed;
  ctx.tol = tol;
  ctx.filter = filter;

  const bool has_input = !in.preset.empty() || !in.paire_file.empty() ||
                         !in.paire_inline.empty();
  if (has_input) {
    verify_user_paire(ctx, resolve_paire(in));
  } else {
    verify_spaces(ctx);
    verify_reconstruction(ctx);
    verify_frame_constants(ctx);
    verify_besselian(ctx);
    verify_embeddings(ctx);
    verify_haar(ctx);
  }

  std::cout << (ctx.failures == 0 ? "OK" : "FAILED") << ": " << ctx.checks - ctx.failures
            << "/" << ctx.checks << " checks passed\n";
  if (!out.path.empty()) {
    Json config = input_config_json(in);
    config["filter"] = filter;
    config["seed"] = seed;
    config["tol"] = tol;
    Json j = report_shell("verify", std::move(config));
    j["results"] = Json{{"checks", ctx.checks},
                        {"failures", ctx.failures},
                        {"matrix", ctx.lines}};
    emit(out, j.dump(2));
  }
  return ctx.failures == 0 ? kExitOk : kExitInvariantViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frame-forge: Schauder frame experiments with certified constants"};
  app.require_subcommand(1);

  InputOptions in;
  OutputOptions out;
  std::string method = "exact";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int trials = 100;
  int probes = 16;

  auto* check = app.add_subcommand("check", "reconstruction report for a paire");
  add_input_options(check, in);
  add_output_options(check, out);
  check->add_option("--tol", tol, "relative reconstruction tolerance");
  check->add_option("--seed", seed, "probe seed");
  check->add_option("--probes", probes, "random probes beyond the coordinate ones");

  auto* constant = app.add_subcommand("constant", "frame constant K_F");
  add_input_options(constant, in);
  add_output_options(constant, out);
  constant->add_option("--method", method, "exact | sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  constant->add_option("--seed", seed, "probe seed");

  auto* besselian = app.add_subcommand("besselian", "besselian constant L_F");
  add_input_options(besselian, in);
  add_output_options(besselian, out);
  besselian->add_option("--method", method, "exact | bounds")
      ->check(CLI::IsMember({"exact", "bounds"}));
  besselian->add_option("--seed", seed, "probe seed");
  besselian->add_option("--tol", tol, "tolerance recorded in the report");

  std::vector<std::string> sum_components;
  std::string restrict_coords;
  std::string paire_out;
  auto* construct = app.add_subcommand("construct", "build a paire and emit its JSON");
  add_input_options(construct, in);
  add_output_options(construct, out);
  construct->add_option("--direct-sum", sum_components,
                        "components l1:N | lp:P:N | c0:N | mercedes | haar:L, "
                        "each optionally @weight");
  construct->add_option("--restrict-coords", restrict_coords,
                        "comma list of 1-based coordinates to restrict onto");
  construct->add_option("--paire-out", paire_out,
                        "also write the bare paire JSON here (feeds --paire elsewhere)");
  construct->add_option("--tol", tol, "reconstruction tolerance");

  std::string x_json;
  bool check_sandwich = false;
  auto* embed = app.add_subcommand("embed", "embedding norms and sandwich checks");
  add_input_options(embed, in);
  add_output_options(embed, out);
  embed->add_option("--x", x_json, "vector to embed, as a JSON array");
  embed->add_flag("--check-sandwich", check_sandwich, "run the random sandwich suite");
  embed->add_option("--trials", trials, "random trials for --check-sandwich");
  embed->add_option("--seed", seed, "probe seed");
  embed->add_option("--tol", tol, "frame tolerance");

  int max_level = 4;
  int level_cap = 4;
  auto* haar = app.add_subcommand("haar", "Haar growth study on discretized L1");
  add_output_options(haar, out);
  haar->add_option("--max-level", max_level, "deepest level to compute");
  haar->add_option("--cap", level_cap, "hard level cap");

  std::string filter;
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  add_input_options(verify, in);
  add_output_options(verify, out);
  verify->add_option("--filter", filter, "only suites whose name contains this");
  verify->add_option("--seed", seed, "suite seed");
  verify->add_option("--tol", tol, "reconstruction tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (check->parsed()) return run_check(in, out, tol, seed, probes);
    if (constant->parsed()) return run_constant(in, out, method, seed);
    if (besselian->parsed()) return run_besselian(in, out, method, seed, tol);
    if (construct->parsed())
      return run_construct(in, out, sum_components, restrict_coords, paire_out, tol);
    if (embed->parsed()) return run_embed(in, out, x_json, check_sandwich, trials, seed, tol);
    if (haar->parsed()) return run_haar(out, max_level, level_cap);
    if (verify->parsed()) return run_verify(in, out, filter, seed, tol);
  } catch (const frameforge::InvalidArgumentError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const frameforge::Error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputationError;
  }
  return kExitConfigError;
}
