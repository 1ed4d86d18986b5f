#include "nilsol/solve.hpp"

#include <algorithm>
#include <cmath>

#include "nilsol/curvature.hpp"
#include "nilsol/least_squares.hpp"
#include "nilsol/random.hpp"
#include "nilsol/soliton.hpp"

namespace nilsol {

namespace {

struct Parametrization {
  std::vector<std::string> free;          // solver unknowns, param_names order
  std::vector<std::string> zeros;         // pinned to 0 by the domain
  std::map<std::string, std::string> ties;  // tied = source
  std::string gauge;

  ParamMap to_theta(const Eigen::VectorXd& z) const {
    ParamMap theta;
    theta[gauge] = 1.0;
    for (const std::string& p : zeros) theta[p] = 0.0;
    for (size_t k = 0; k < free.size(); ++k) theta[free[k]] = z[static_cast<int>(k)];
    for (const auto& [p, q] : ties) theta[p] = theta.at(q);
    return theta;
  }
};

Parametrization make_parametrization(const FamilyEntry& entry, const std::string& gauge_flag) {
  Parametrization par;
  par.gauge = gauge_flag.empty() ? entry.default_gauge : gauge_flag;
  par.zeros = entry.zero_pinned();
  par.ties = entry.tied();

  const bool known =
      std::find(entry.param_names.begin(), entry.param_names.end(), par.gauge) != entry.param_names.end();
  const bool zero_pinned = std::find(par.zeros.begin(), par.zeros.end(), par.gauge) != par.zeros.end();
  if (!known || zero_pinned || par.ties.contains(par.gauge)) {
    throw Error("invalid gauge parameter '" + par.gauge + "' for family " + to_string(entry.id) +
                " (must be a family parameter that is not fixed by a domain equality)");
  }
  for (const std::string& p : entry.param_names) {
    if (p == par.gauge) continue;
    if (std::find(par.zeros.begin(), par.zeros.end(), p) != par.zeros.end()) continue;
    if (par.ties.contains(p)) continue;
    par.free.push_back(p);
  }
  return par;
}

}  // namespace

SolveReport solve_family(const FamilyEntry& entry, const SolveOptions& opts) {
  const Parametrization par = make_parametrization(entry, opts.gauge);
  const int k = static_cast<int>(par.free.size());

  SolveReport report;
  report.id = entry.id;
  report.gauge = par.gauge;
  report.options = opts;
  report.best_residual = std::numeric_limits<double>::infinity();

  const double converged_tol = 1e2 * opts.residual_tol;
  Eigen::VectorXd overall_best;
  double overall_best_res = std::numeric_limits<double>::infinity();

  // cluster membership is keyed on the first-found point so that results do
  // not depend on the order later points arrive in
  std::vector<Eigen::VectorXd> cluster_keys;
  std::vector<Eigen::VectorXd> cluster_best;
  std::vector<double> cluster_res;
  std::vector<int> cluster_hits;

  const ResidualFn residual = [&](const Eigen::VectorXd& z) {
    const ParamMap theta = par.to_theta(z.head(k));
    const SolitonResidual r = soliton_residual(entry.build(theta), z[k]);
    return Eigen::Map<const Eigen::VectorXd>(r.tensor.data(), static_cast<int>(r.tensor.size()));
  };

  for (int start = 0; start < opts.multistarts; ++start) {
    std::mt19937_64 rng = start_rng(opts.seed, static_cast<std::uint64_t>(start));
    Eigen::VectorXd z0(k + 1);
    for (int idx = 0; idx < k; ++idx) {
      const double u = uniform(rng, -3.0, 3.0);
      z0[idx] = entry.requires_nonnegative(par.free[static_cast<size_t>(idx)]) ? std::abs(u) : u;
    }
    z0[k] = best_c(entry.build(par.to_theta(z0.head(k)))).c;

    LeastSquaresOptions lm;
    lm.max_iterations = opts.max_iterations;
    lm.target_residual = opts.residual_tol * 1e-2;
    const LeastSquaresResult res = levenberg_marquardt(residual, z0, lm);
    if (!std::isfinite(res.residual_norm)) continue;

    if (res.residual_norm < overall_best_res) {
      overall_best_res = res.residual_norm;
      overall_best = res.x;
    }
    if (res.residual_norm > converged_tol) continue;

    bool placed = false;
    for (size_t ci = 0; ci < cluster_keys.size(); ++ci) {
      if ((cluster_keys[ci] - res.x).cwiseAbs().maxCoeff() < 1e-6) {
        ++cluster_hits[ci];
        if (res.residual_norm < cluster_res[ci]) {
          cluster_res[ci] = res.residual_norm;
          cluster_best[ci] = res.x;
        }
        placed = true;
        break;
      }
    }
    if (!placed) {
      cluster_keys.push_back(res.x);
      cluster_best.push_back(res.x);
      cluster_res.push_back(res.residual_norm);
      cluster_hits.push_back(1);
    }
  }

  report.no_convergence = cluster_keys.empty();
  if (report.no_convergence && overall_best.size() > 0) {
    // still report the best point found, flagged by no_convergence
    cluster_keys.push_back(overall_best);
    cluster_best.push_back(overall_best);
    cluster_res.push_back(overall_best_res);
    cluster_hits.push_back(1);
  }
  report.best_residual = std::isfinite(overall_best_res) ? overall_best_res : 0.0;

  for (size_t ci = 0; ci < cluster_keys.size(); ++ci) {
    FamilySolution sol;
    sol.parameters = par.to_theta(cluster_best[ci].head(k));
    sol.c = cluster_best[ci][k];
    sol.residual = cluster_res[ci];
    sol.hits = cluster_hits[ci];
    sol.canonical = entry.canonical_signs(sol.parameters, par.gauge);
    sol.interior = entry.in_domain(sol.canonical, opts.domain_margin);
    const RicciData ric = ricci_tensor(entry.build(sol.parameters));
    sol.derivation = ric.operator_ - sol.c * Eigen::MatrixXd::Identity(5, 5);
    report.clusters.push_back(std::move(sol));
  }
  return report;
}

}  // namespace nilsol
