#include "linarg/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace linarg {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw numeric_error("double formatting failed");
  return std::string(buf, ptr);
}

nlohmann::json element_to_json(const Element& e) {
  return nlohmann::json(e.data);
}

Element element_from_json(const AlgebraContext& ctx, const nlohmann::json& j) {
  if (j.is_number()) return ctx.constant(j.get<double>());
  if (!j.is_array())
    throw config_error("element must be a number (scalar multiple of the "
                       "identity) or an array of payload components");
  std::vector<double> payload;
  payload.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw config_error("element payload entries must be numbers");
    payload.push_back(v.get<double>());
  }
  return ctx.from_payload(std::move(payload));
}

std::string trajectory_to_csv(const Trajectory& traj) {
  std::string out = "n,norm";
  const std::size_t comps = traj.values.empty() ? 0 : traj.values[0].data.size();
  for (std::size_t c = 0; c < comps; ++c) out += ",c" + std::to_string(c);
  out += "\n";
  for (std::size_t i = 0; i < traj.values.size(); ++i) {
    out += std::to_string(static_cast<int>(i) - traj.k);
    out += ",";
    out += format_double(traj.norms[i]);
    for (double v : traj.values[i].data) {
      out += ",";
      out += format_double(v);
    }
    out += "\n";
  }
  return out;
}

nlohmann::json trajectory_to_json(const Trajectory& traj) {
  nlohmann::json j;
  j["k"] = traj.k;
  j["mu"] = traj.mu;
  j["diverged"] = traj.diverged;
  j["norms"] = traj.norms;
  nlohmann::json values = nlohmann::json::array();
  for (const Element& e : traj.values) values.push_back(element_to_json(e));
  j["values"] = std::move(values);
  return j;
}

namespace {

std::string root_status_name(RootStatus status) {
  switch (status) {
    case RootStatus::Accepted: return "accepted";
    case RootStatus::NotAUnit: return "not_a_unit";
    case RootStatus::ResidualTooLarge: return "root_rejected";
  }
  return "?";
}

}  // namespace

nlohmann::json reduction_outcome_to_json(const ReductionOutcome& outcome) {
  nlohmann::json j;
  j["status"] = root_status_name(outcome.status);
  j["residual_P"] = outcome.residual_P;
  j["residual_Q"] = outcome.residual_Q;
  if (outcome.result) {
    j["rho"] = element_to_json(outcome.result->rho);
    nlohmann::json p = nlohmann::json::array();
    for (const Element& e : outcome.result->p) p.push_back(element_to_json(e));
    nlohmann::json q = nlohmann::json::array();
    for (const Element& e : outcome.result->q) q.push_back(element_to_json(e));
    j["p"] = std::move(p);
    j["q"] = std::move(q);
  }
  return j;
}

nlohmann::json stability_report_to_json(const StabilityReport& report) {
  nlohmann::json j;
  j["alpha_direct"] = report.alpha_direct_value;
  j["direct_holds"] = report.direct_holds;
  j["root_status"] = root_status_name(report.root_status);
  if (report.rho_used) {
    j["rho"] = element_to_json(*report.rho_used);
    j["rho_norm"] = *report.rho_norm;
    j["alpha_factored"] = *report.alpha_factored_value;
    j["factored_holds"] = *report.factored_holds;
    j["residual_P"] = report.residual_P;
    j["residual_Q"] = report.residual_Q;
  }
  j["verdict"] = to_string(report.verdict);
  return j;
}

std::string stability_report_to_table(const StabilityReport& report) {
  std::ostringstream out;
  out << "criterion           value      holds\n";
  out << "direct (as)         " << format_double(report.alpha_direct_value)
      << "  " << (report.direct_holds ? "yes" : "no") << "\n";
  if (report.rho_used) {
    out << "|rho|               " << format_double(*report.rho_norm) << "\n";
    out << "factored (spq)      " << format_double(*report.alpha_factored_value)
        << "  " << (*report.factored_holds ? "yes" : "no") << "\n";
  } else if (report.root_status != RootStatus::Accepted) {
    out << "root                " << root_status_name(report.root_status)
        << " (|P|=" << format_double(report.residual_P)
        << ", |Q|=" << format_double(report.residual_Q) << ")\n";
  }
  out << "verdict             " << to_string(report.verdict) << "\n";
  return out.str();
}

std::string scan_to_csv(const BifurcationScan& scan) {
  std::string out = "a,sig_ok,regime,tau\n";
  for (const ScanRow& row : scan.rows) {
    out += format_double(row.a);
    out += ",";
    out += row.sig_ok ? "1" : "0";
    out += ",";
    out += to_string(row.regime);
    out += ",";
    if (row.tau) out += format_double(*row.tau);
    out += "\n";
  }
  return out;
}

std::string axiom_report_to_table(const AxiomReport& report) {
  std::ostringstream out;
  out << "axiom                max violation\n";
  out << "submultiplicative    " << format_double(report.submultiplicative) << "\n";
  out << "triangle             " << format_double(report.triangle) << "\n";
  out << "identity norm        " << format_double(report.identity_norm) << "\n";
  out << "scalar norm          " << format_double(report.scalar_norm) << "\n";
  out << "associativity        " << format_double(report.associativity) << "\n";
  out << "distributivity       " << format_double(report.distributivity) << "\n";
  out << "scalar compat        " << format_double(report.scalar_compat) << "\n";
  out << "identity law         " << format_double(report.identity_law) << "\n";
  return out.str();
}

nlohmann::json axiom_report_to_json(const AxiomReport& report) {
  return nlohmann::json{{"submultiplicative", report.submultiplicative},
                        {"triangle", report.triangle},
                        {"identity_norm", report.identity_norm},
                        {"scalar_norm", report.scalar_norm},
                        {"associativity", report.associativity},
                        {"distributivity", report.distributivity},
                        {"scalar_compat", report.scalar_compat},
                        {"identity_law", report.identity_law},
                        {"worst", report.worst()}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot open output file: " + path);
  out << content;
  if (!out) throw numeric_error("failed writing output file: " + path);
}

}  // namespace linarg
