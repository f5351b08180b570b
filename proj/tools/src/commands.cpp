#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "symm/bezout.hpp"
#include "symm/energy.hpp"
#include "symm/errors.hpp"
#include "symm/leray.hpp"
#include "symm/nuij.hpp"
#include "symm/quasi.hpp"
#include "symm/real_roots.hpp"
#include "symm/spectral.hpp"

namespace symm::cli {
namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json roots_json(const RootProfile<double>& r) {
  return Json{{"roots", r.distinct()}, {"multiplicities", r.multiplicities()}};
}

Json grid_json(const std::vector<double>& grid) { return Json(grid); }

CertifiedReport start(const std::string& command, const CommonOptions& common) {
  CertifiedReport rep;
  rep.command = command;
  rep.seed = common.seed;
  rep.input["poly"] = polynomial_to_json(common.poly.poly);
  rep.input["poly_text"] = common.poly_text;
  rep.input["backend"] = common.poly.from_float ? "rational (converted from float input)" : "rational";
  rep.input["tol"] = common.tol;
  return rep;
}

/// Monic normalization is recorded in the input echo.
RationalPolynomial monic_input(const CommonOptions& common, CertifiedReport& rep) {
  const RationalPolynomial& p = common.poly.poly;
  if (p.degree() < 1) throw DegreeMismatchError("polynomial must have degree at least 1");
  if (!p.is_monic()) {
    rep.input["normalized_to_monic"] = true;
    return p.monic();
  }
  return p;
}

HyperbolicityVerdict require_hyperbolic(const RationalPolynomial& p) {
  HyperbolicityVerdict v = is_hyperbolic(p);
  if (!v.is_hyperbolic) throw NonHyperbolicError(v.failure_reason.empty() ? "not hyperbolic" : v.failure_reason);
  return v;
}

Verdict pass_if(bool ok) { return ok ? Verdict::kPass : Verdict::kFail; }

}  // namespace

std::vector<std::string> checks_csv(const CertifiedReport& report) {
  std::vector<std::string> rows{"name,anchor,value,verdict"};
  for (const CheckRecord& c : report.checks)
    rows.push_back(c.name + "," + c.anchor + "," + (c.value ? num(*c.value) : "nan") + "," + verdict_name(c.verdict));
  return rows;
}

CommandResult run_analyze(const CommonOptions& common, const AnalyzeOptions& opts) {
  CommandResult res{start("analyze", common), {}};
  CertifiedReport& rep = res.report;
  const RationalPolynomial p = monic_input(common, rep);
  const HyperbolicityVerdict hv = require_hyperbolic(p);
  const RationalPolynomial dp = p.derivative();
  const RationalPolynomial q = opts.q ? opts.q->poly : dp;
  rep.input["q"] = polynomial_to_json(q);
  rep.input["q_default"] = !opts.q.has_value();
  const int m = p.degree();

  const BezoutMatrix<Rational> h = bezout_matrix(p, q);
  const SylvesterMatrix<Rational> a = sylvester_matrix(p);
  const Rational defect = symmetrization_defect(h, a);
  rep.add("symmetrization_defect", "bezout-symmetrizes-companion", to_double(defect), "residual",
          pass_if(is_zero(defect)), "exact");

  const PsdCertificate hermite = psd_check(bezout_matrix(p, dp));
  rep.add("hermite_psd", "hermite-criterion", hermite.min_eigenvalue, "constant", pass_if(hermite.is_psd),
          hermite.is_psd ? "Bezout(p, p') is PSD" : hermite.reason);

  const PsdCertificate hpsd = psd_check(h);
  rep.add("bezout_psd", "bezout-psd-separating", hpsd.min_eigenvalue, "constant", pass_if(hpsd.is_psd),
          hpsd.is_psd ? "" : hpsd.reason);

  const SeparationCertificate sep = separates(p, q, common.tol);
  rep.add("separation", "separation-lemma", sep.constant_c, "constant", pass_if(sep.separates),
          sep.failure_reason.value_or("q separates p"));
  if (sep.separates) {
    const PsdCertificate lb =
        separation_lower_bound_certificate(p.cast<double>(), q.cast<double>(), sep.constant_c, common.tol);
    rep.add("separation_lower_bound", "separation-lemma", lb.min_eigenvalue, "constant", pass_if(lb.is_psd),
            "H - c Bezout(p, p') is PSD");
  }

  const RootProfile<double>& roots = *hv.witness;
  if (hv.is_strict) {
    const FactorizationBundle<double> fb = factorization_bundle(p, q, common.tol);
    const double scale = std::max(1.0, max_abs(fb.h));
    rep.add("factorization_residual", "lagrange-factorization", fb.residual, "residual",
            pass_if(fb.residual <= 1e-8 * scale), "max |tG Lambda G - H|");
    rep.data["lambda"] = fb.lambda;
  }

  const Rational disc = discriminant(p);
  double vander = 1.0;
  const std::vector<double> flat = roots.flattened();
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = i + 1; j < flat.size(); ++j) vander *= (flat[j] - flat[i]) * (flat[j] - flat[i]);
  const double dgap = std::fabs(to_double(disc) - vander) / std::max(1.0, std::fabs(to_double(disc)));
  rep.add("discriminant", "discriminant-bezout", dgap, "residual", pass_if(dgap <= 1e-8),
          "det Bezout(p, p') against the squared difference product");

  const ResultantReport<Rational> rr = resultant(p, q);
  rep.add("resultant_sign", "resultant-sign", rr.relative_gap, "residual", pass_if(rr.relative_gap <= 1e-8),
          "det H = sigma(m) prod q(lambda_j), sigma(m) = " + std::to_string(rr.sign_factor));

  rep.data["degree"] = m;
  rep.data["strict"] = hv.is_strict;
  rep.data["roots"] = roots_json(roots);
  rep.data["H"] = to_json(h.h);
  rep.data["A"] = to_json(a.a);
  rep.data["discriminant"] = to_json(disc);
  rep.data["det_H"] = to_json(rr.det_h);
  rep.data["alpha"] = sep.alpha;
  Json witness = Json::array();
  for (const InterlacingEntry& e : sep.interlacing_witness)
    witness.push_back(Json{{"value", e.value}, {"source", e.source == InterlacingEntry::Source::kP ? "p" : "q"},
                           {"multiplicity", e.multiplicity}});
  rep.data["interlacing"] = std::move(witness);
  res.csv = checks_csv(rep);
  return res;
}

CommandResult run_nuij(const CommonOptions& common, const NuijOptions& opts) {
  CommandResult res{start("nuij", common), {}};
  CertifiedReport& rep = res.report;
  const RationalPolynomial p = monic_input(common, rep);
  require_hyperbolic(p);
  const int m = p.degree();
  rep.input["eps_grid"] = grid_json(opts.grid);

  if (m >= 2) {
    const GapConstantTable table = gap_constants(m);
    Json cj = Json::object();
    for (int ell = 2; ell <= m; ++ell) cj["c_" + std::to_string(ell)] = table.at(ell);
    rep.data["gap_constants"] = std::move(cj);
    Json inv = Json::array();
    for (const Rational& c : nuij_inverse_coeffs(m)) inv.push_back(to_json(c));
    rep.data["inverse_coeffs"] = std::move(inv);
    const SeparationCertificate dsep = separates(p, p.derivative(), common.tol);
    rep.add_flag("derivative_separates", "derivative-separates", dsep.separates, dsep.failure_reason.value_or(""));
  }

  res.csv.push_back("epsilon,min_gap,c_m,pass");
  Json rows = Json::array();
  for (double eps : opts.grid) {
    const GapCheck g = verify_gaps(p, eps, common.tol);
    const std::string tag = "@" + num(eps);
    rep.add("gap" + tag, "nuij-root-gap", g.min_gap / eps, "constant", g.verdict,
            "min gap / eps against c_m = " + num(g.c_m));
    const std::vector<RootProfile<double>> stages = stage_roots(p, eps, common.tol);
    bool cascade = true;
    for (std::size_t k = 0; k + 1 < stages.size(); ++k)
      cascade = cascade && interlaces_stagewise(stages[k], stages[k + 1], common.tol);
    rep.add_flag("interlacing" + tag, "nuij-interlacing", cascade);
    const Rational eps_q = to_rational(eps);
    const bool inverted = m < 2 || nuij_invert(nuij_transform(p, eps_q), eps_q, m) == p;
    rep.add_flag("inversion" + tag, "nuij-inversion", inverted, "exact");
    res.csv.push_back(num(eps) + "," + num(g.min_gap) + "," + num(g.c_m) + "," + verdict_name(g.verdict));
    rows.push_back(Json{{"epsilon", eps}, {"min_gap", g.min_gap}, {"verdict", verdict_name(g.verdict)},
                        {"roots", roots_json(g.roots)}});
  }
  rep.data["gaps"] = std::move(rows);
  return res;
}

CommandResult run_quasi(const CommonOptions& common, const QuasiOptions& opts) {
  CommandResult res{start("quasi", common), {}};
  CertifiedReport& rep = res.report;
  const RationalPolynomial p = monic_input(common, rep);
  const HyperbolicityVerdict hv = require_hyperbolic(p);
  const int rho = max_multiplicity(*hv.witness);
  const double r = opts.r.value_or(rho - 1);
  const double s = opts.s.value_or(1.0);
  rep.input["eps_grid"] = grid_json(opts.grid);
  rep.input["r"] = r;
  rep.input["s"] = s;
  rep.input["samples"] = opts.samples;

  const QuasiConditions cond = check_conditions(p, opts.grid, r, s, common.tol);
  const QuasiVerdict v = verify_quasi(p, opts.grid, r, s, opts.samples, common.seed, common.tol);

  std::vector<double> eps, c1, c2;
  for (const ConditionRow& row : cond.rows) {
    eps.push_back(row.epsilon);
    c1.push_back(row.cond1);
    c2.push_back(row.cond2);
  }
  const bool cond1_ok = cond.c_lower > 0.0 && tail_slope(eps, c1, Trend::kMustNotDecay) <= kMaxTailSlope;
  const bool cond2_ok = std::isfinite(cond.C_upper) && tail_slope(eps, c2, Trend::kMustNotGrow) <= kMaxTailSlope;
  rep.add("condition_lower", "quasi-condition-lower", cond.c_lower, "constant", pass_if(cond1_ok),
          "inf_j |p'_eps(lambda_j)| / eps^r over the grid");
  rep.add("condition_upper", "quasi-condition-upper", cond.C_upper, "constant", pass_if(cond2_ok),
          "sup_j |q_eps(lambda_j)| / (eps^s |p'_eps(lambda_j)|) over the grid");
  rep.add("lower_bound_uniform", "quasi-symmetrizer-bound", v.lower_variation, "constant",
          pass_if(v.lower_bounded), "max/min of lambda_min(H_eps)/eps^2r; tail slope " + num(v.lower_tail_slope));
  rep.add("commutator_uniform", "quasi-commutator-bound", v.commutator_variation, "constant",
          pass_if(v.commutator_bounded), "max/min of the commutator constant; tail slope " + num(v.commutator_tail_slope));
  rep.add_flag("sampling_cross_check", "quasi-commutator-bound", v.samples_consistent,
               "no random (z, w) exceeds the certified norm");
  bool split = true;
  double qsg = 0.0;
  for (const QuasiPoint& row : v.rows) {
    split = split && row.a_eps_symmetrized;
    qsg = std::max(qsg, row.qsg_residual);
  }
  rep.add_flag("companion_splitting", "companion-splitting", split, "H_eps A_eps symmetric, exact");
  rep.add("qsg_identity", "companion-splitting", qsg, "residual", pass_if(qsg <= 1e-9), "max |Q_eps - S_eps G_eps|");

  res.csv.push_back("epsilon,min_eig_over_eps2r,commutator_const,cond1,cond2");
  Json rows = Json::array();
  for (const QuasiPoint& row : v.rows) {
    res.csv.push_back(num(row.epsilon) + "," + num(row.lower_bound_constant) + "," + num(row.commutator_constant) +
                      "," + num(row.cond1) + "," + num(row.cond2));
    rows.push_back(Json{{"epsilon", row.epsilon},
                        {"min_eigenvalue", row.min_eigenvalue},
                        {"lower_bound_constant", row.lower_bound_constant},
                        {"lower_bound_reciprocal", row.lower_bound_reciprocal},
                        {"commutator_constant", row.commutator_constant},
                        {"sampled_commutator", row.sampled_commutator},
                        {"cond1", row.cond1},
                        {"cond2", row.cond2}});
  }
  rep.data["rows"] = std::move(rows);
  rep.data["uniformity"] = "over the smallest decade of the grid, lower constants decay and commutator constants "
                           "grow with log-log slope at most " + num(kMaxTailSlope);
  return res;
}

CommandResult run_leray(const CommonOptions& common) {
  CommandResult res{start("leray", common), {}};
  CertifiedReport& rep = res.report;
  const RationalPolynomial p = monic_input(common, rep);
  const int m = p.degree();
  const LeraySymmetrizer ls = leray_symmetrizer(p);
  const Rational det_b = determinant(ls.b);
  Rational det_s_pow(1);
  for (int k = 0; k < m - 1; ++k) det_s_pow *= ls.det_s;

  rep.add("ba_symmetric", "leray-ba-symmetric", to_double(ls.ba_defect), "residual", pass_if(is_zero(ls.ba_defect)),
          "exact");
  rep.add_flag("det_s_is_discriminant", "leray-det-s", ls.det_s == discriminant(p), "exact");
  rep.add_flag("det_b", "leray-det-b", det_b == det_s_pow, "det B = (det S)^(m-1), exact");

  const HyperbolicityVerdict hv = is_hyperbolic(p);
  const bool strict = hv.is_hyperbolic && hv.is_strict;
  rep.add_flag("b_positive_definite", "leray-positive-definite", ls.positive_definite == strict,
               std::string("B positive definite: ") + (ls.positive_definite ? "yes" : "no") +
                   ", strictly hyperbolic: " + (strict ? "yes" : "no"));
  if (m == 2 && hv.is_hyperbolic) {
    const bool same = ls.b == bezout_matrix(p, p.derivative()).h;
    rep.add_flag("b_equals_h", "leray-equals-bezout-quadratic", same, "B = H for m = 2");
  }
  if (strict) {
    const HBRelation rel = h_b_relation_check(p, common.tol);
    rep.add("h_b_relation", "leray-bezout-relation", rel.relative_residual, "residual",
            pass_if(rel.relative_residual <= 1e-10), "relative to max(1, |Delta^-2 B|)");
  }
  rep.data["S"] = to_json(ls.s);
  rep.data["B"] = to_json(ls.b);
  rep.data["det_S"] = to_json(ls.det_s);
  rep.data["det_B"] = to_json(det_b);
  res.csv = checks_csv(rep);
  return res;
}

CommandResult run_energy(const CommonOptions& common, const EnergyOptions& opts) {
  CommandResult res{start("energy", common), {}};
  CertifiedReport& rep = res.report;
  const RationalPolynomial p = monic_input(common, rep);
  require_hyperbolic(p);
  const int m = p.degree();
  const RationalPolynomial q = opts.q ? opts.q->poly : p.derivative();
  rep.input["q"] = polynomial_to_json(q);
  rep.input["T"] = opts.t_end;
  rep.input["steps"] = opts.steps;
  Json u0 = Json::array();
  for (const auto& z : opts.u0) u0.push_back(Json{z.real(), z.imag()});
  rep.input["U0"] = std::move(u0);

  const Trajectory traj = propagate(sylvester_matrix(p), opts.u0, opts.t_end, opts.steps, common.tol);
  const EnergySeries es = energy_series(p, q, traj);
  double scale = 0.0, lowest = std::numeric_limits<double>::infinity();
  for (double v : es.values) {
    scale = std::max(scale, std::fabs(v));
    lowest = std::min(lowest, v);
  }
  const double drift_tol = traj.method == "eigen" ? 1e-12 : 1e-6;
  rep.add("conservation", "energy-conservation", es.relative_drift, "residual",
          pass_if(es.relative_drift <= drift_tol), "relative drift, propagation by " + traj.method);
  rep.add("real_valued", "energy-conservation", es.max_imag, "residual",
          pass_if(es.max_imag <= 1e-9 * std::max(1.0, scale)));
  const SeparationCertificate sep = separates(p, q, common.tol);
  if (sep.separates)
    rep.add("nonnegative", "energy-nonnegative", lowest, "constant",
            pass_if(lowest >= -1e-9 * std::max(1.0, scale)), "q separates p");
  for (int j = 0; j + 2 <= m; ++j) {
    const ChainBound cb = chain_bound_check(p, j, traj);
    rep.add("chain_bound_j" + std::to_string(j), "energy-chain-bound", cb.max_violation, "residual",
            pass_if(cb.holds), "c_j = " + num(cb.c_j) + ", constant-bound slack " + num(cb.constant_bound_slack));
  }

  res.csv.push_back("t,value");
  for (std::size_t k = 0; k < es.times.size(); ++k) res.csv.push_back(num(es.times[k]) + "," + num(es.values[k]));
  rep.data["method"] = traj.method;
  rep.data["energy_first"] = es.values.front();
  rep.data["energy_last"] = es.values.back();
  return res;
}

}  // namespace symm::cli
