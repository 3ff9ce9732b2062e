#include "linarg/runner.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "linarg/scenarios.hpp"
#include "linarg/serialize.hpp"
#include "linarg/stability.hpp"

namespace linarg {

namespace {

std::string json_artifact(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

RunResult run_simulate(const RunConfig& config, const std::string& out_path,
                       OutputFormat format) {
  if (!config.eq) throw config_error("simulate needs an \"equation\" section");
  std::vector<std::vector<Element>> inits = resolve_inits(config);

  Trajectory traj = iterate(*config.eq, inits.front(), config.horizon);

  std::ostringstream summary;
  summary << "simulated " << traj.steps() << " steps, final norm "
          << format_double(traj.norms.back())
          << (traj.diverged ? " (diverged)" : "") << "\n";

  const double alpha = alpha_direct(*config.eq);
  summary << "alpha_direct = " << format_double(alpha) << "\n";
  if (alpha < 1.0 && !traj.diverged) {
    EnvelopeReport env = envelope_check(traj, alpha);
    summary << "envelope " << (env.holds ? "holds" : "violated")
            << ", worst margin " << format_double(env.worst_margin) << "\n";
  }

  if (!out_path.empty())
    write_file(out_path, format == OutputFormat::Csv
                             ? trajectory_to_csv(traj)
                             : json_artifact(trajectory_to_json(traj)));
  return {0, summary.str()};
}

RunResult run_reduce(const RunConfig& config, const std::string& out_path) {
  if (!config.eq) throw config_error("reduce needs an \"equation\" section");
  if (!config.root)
    throw config_error("reduce needs a candidate root (\"root\" key or a "
                       "scenario shape with a known root)");

  ReductionOutcome outcome = reduce_order(*config.eq, *config.root, config.root_tol);
  nlohmann::json artifact = reduction_outcome_to_json(outcome);

  std::ostringstream summary;
  if (outcome.accepted()) {
    summary << "root accepted, |P(rho)| = " << format_double(outcome.residual_P)
            << ", |Q(rho)| = " << format_double(outcome.residual_Q) << "\n";
    double worst = 0.0;
    for (const auto& init : resolve_inits(config))
      worst = std::max(worst,
                       split_consistency_check(*config.eq, *config.root, init,
                                               config.horizon, config.root_tol));
    artifact["split_max_deviation"] = worst;
    summary << "split consistency max deviation " << format_double(worst) << "\n";
  } else {
    summary << "root rejected (" << artifact["status"].get<std::string>()
            << "), |P(rho)| = " << format_double(outcome.residual_P)
            << ", |Q(rho)| = " << format_double(outcome.residual_Q) << "\n";
  }

  if (!out_path.empty()) write_file(out_path, json_artifact(artifact));
  return {0, summary.str()};
}

RunResult run_check(const RunConfig& config, const std::string& out_path) {
  if (!config.eq) throw config_error("check needs an \"equation\" section");
  StabilityReport report = check_theorem1(*config.eq, config.root, config.root_tol);
  if (!out_path.empty())
    write_file(out_path, json_artifact(stability_report_to_json(report)));
  return {0, stability_report_to_table(report)};
}

RunResult run_scan(const RunConfig& config, const std::string& out_path) {
  if (!config.scan) throw config_error("scan needs a \"scan\" section");
  const ScanParams& p = *config.scan;
  BifurcationScan scan =
      bifurcation_scan(p.b, p.sigma, p.a_min, p.a_max, p.steps);

  int bands[4] = {0, 0, 0, 0};
  for (const ScanRow& row : scan.rows) bands[static_cast<int>(row.regime)]++;
  std::ostringstream summary;
  summary << "scanned " << scan.rows.size() << " points: "
          << bands[0] << " global_convergence, " << bands[1] << " local_basin, "
          << bands[2] << " repelling_origin, " << bands[3] << " invalid\n";

  if (!out_path.empty()) write_file(out_path, scan_to_csv(scan));
  return {0, summary.str()};
}

RunResult run_axioms(const RunConfig& config, const std::string& out_path) {
  AxiomReport report =
      check_axioms(config.ctx, config.axioms.samples, config.seed);
  std::ostringstream summary;
  summary << axiom_report_to_table(report);
  summary << "worst violation " << format_double(report.worst()) << " ("
          << (report.all_within(config.axioms.tol) ? "within" : "EXCEEDS")
          << " tol " << format_double(config.axioms.tol) << ")\n";
  if (!out_path.empty())
    write_file(out_path, json_artifact(axiom_report_to_json(report)));
  return {0, summary.str()};
}

int run_command(const std::string& subcommand, const std::string& config_path,
                const std::string& out_path, const std::string& format,
                const std::string& seed_override) {
  try {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read config file: " << config_path << "\n";
      return 1;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    RunConfig config = parse_config(buffer.str());
    if (!seed_override.empty())
      config.seed = static_cast<std::uint64_t>(std::stoull(seed_override));

    OutputFormat fmt;
    if (format == "csv")
      fmt = OutputFormat::Csv;
    else if (format == "json")
      fmt = OutputFormat::Json;
    else
      throw config_error("format must be csv or json");

    RunResult result;
    if (subcommand == "simulate")
      result = run_simulate(config, out_path, fmt);
    else if (subcommand == "reduce")
      result = run_reduce(config, out_path);
    else if (subcommand == "check")
      result = run_check(config, out_path);
    else if (subcommand == "scan")
      result = run_scan(config, out_path);
    else if (subcommand == "axioms")
      result = run_axioms(config, out_path);
    else
      throw config_error("unknown subcommand: " + subcommand);

    std::cout << result.summary;
    return result.exit_code;
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const shape_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace linarg
