#include "linarg/config.hpp"

#include <initializer_list>
#include <set>

#include <json.hpp>

#include "linarg/scenarios.hpp"
#include "linarg/serialize.hpp"

namespace linarg {

namespace {

using nlohmann::json;

void require_known_keys(const json& obj, const std::string& where,
                        std::initializer_list<const char*> allowed) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!ok.contains(key))
      throw config_error("unknown key \"" + key + "\" in " + where);
}

double get_number(const json& obj, const std::string& where,
                  const std::string& key) {
  if (!obj.contains(key))
    throw config_error(where + " is missing required key \"" + key + "\"");
  if (!obj[key].is_number())
    throw config_error(where + "." + key + " must be a number");
  return obj[key].get<double>();
}

int get_int(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.contains(key))
    throw config_error(where + " is missing required key \"" + key + "\"");
  if (!obj[key].is_number_integer())
    throw config_error(where + "." + key + " must be an integer");
  return obj[key].get<int>();
}

AlgebraContext parse_algebra(const json& j) {
  require_known_keys(j, "algebra", {"kind", "dimension", "points"});
  if (!j.contains("kind")) throw config_error("algebra.kind is required");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "real") return AlgebraContext::real();
  if (kind == "complex") return AlgebraContext::complex();
  if (kind == "matrix") return AlgebraContext::matrix(get_int(j, "algebra", "dimension"));
  if (kind == "grid") {
    const int points = j.contains("points") ? get_int(j, "algebra", "points") : 101;
    return AlgebraContext::grid(points);
  }
  throw config_error("algebra.kind must be one of real, complex, matrix, grid");
}

CoefficientRule parse_rule(const json& j) {
  require_known_keys(j, "rule", {"type", "value", "values", "seed", "bound"});
  const std::string type = j.value("type", "constant");
  if (type == "constant")
    return CoefficientRule::constant(get_number(j, "rule", "value"));
  if (type == "periodic") {
    if (!j.contains("values") || !j["values"].is_array())
      throw config_error("periodic rule needs a \"values\" array");
    return CoefficientRule::periodic(j["values"].get<std::vector<double>>());
  }
  if (type == "random")
    return CoefficientRule::seeded_random(
        static_cast<std::uint64_t>(get_number(j, "rule", "seed")),
        get_number(j, "rule", "bound"));
  throw config_error("rule.type must be one of constant, periodic, random");
}

NonlinearityFamily parse_family(const std::string& name) {
  if (name == "linear_scale") return NonlinearityFamily::LinearScale;
  if (name == "norm_saturated") return NonlinearityFamily::NormSaturated;
  if (name == "pointwise_tanh") return NonlinearityFamily::PointwiseTanh;
  if (name == "pointwise_sin") return NonlinearityFamily::PointwiseSin;
  if (name == "cumulative_integral") return NonlinearityFamily::CumulativeIntegral;
  if (name == "rational_cubic") return NonlinearityFamily::RationalCubic;
  throw config_error("unknown nonlinearity family \"" + name + "\"");
}

NonlinearitySpec parse_nonlinearity(const json& j) {
  require_known_keys(j, "nonlinearity", {"family", "sigma", "rule"});
  if (!j.contains("family"))
    throw config_error("nonlinearity.family is required");
  NonlinearitySpec g;
  g.family = parse_family(j["family"].get<std::string>());
  g.sigma = get_number(j, "nonlinearity", "sigma");
  if (j.contains("rule"))
    g.rule = parse_rule(j["rule"]);
  else if (g.family == NonlinearityFamily::CumulativeIntegral)
    g.rule = CoefficientRule::constant(1.0);
  else
    g.rule = CoefficientRule::constant(g.sigma);
  return g;
}

std::vector<Element> parse_element_list(const AlgebraContext& ctx, const json& j,
                                        const std::string& where) {
  if (!j.is_array()) throw config_error(where + " must be an array of elements");
  std::vector<Element> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(element_from_json(ctx, v));
  return out;
}

LinearArgEquation parse_equation(const AlgebraContext& ctx, const json& j,
                                 std::optional<Element>& default_root) {
  const std::string shape = j.value("shape", "general");

  if (shape == "dham") {
    require_known_keys(j, "equation", {"shape", "a", "k", "sigma", "rule"});
    const double a = get_number(j, "equation", "a");
    const int k = get_int(j, "equation", "k");
    const double sigma = get_number(j, "equation", "sigma");
    CoefficientRule rule = j.contains("rule") ? parse_rule(j["rule"])
                                              : CoefficientRule::constant(sigma);
    ScenarioEquation scenario = make_dham(a, k, sigma, std::move(rule));
    default_root = scenario.rho;
    return scenario.eq;
  }
  if (shape == "c01") {
    require_known_keys(j, "equation",
                       {"shape", "alpha", "beta", "sigma", "points", "rule"});
    const double alpha = get_number(j, "equation", "alpha");
    const double beta = get_number(j, "equation", "beta");
    const double sigma = get_number(j, "equation", "sigma");
    const int points = j.contains("points") ? get_int(j, "equation", "points") : 101;
    CoefficientRule rule =
        j.contains("rule") ? parse_rule(j["rule"]) : CoefficientRule::constant(1.0);
    ScenarioEquation scenario = make_c01(alpha, beta, sigma, points, std::move(rule));
    default_root = scenario.rho;
    return scenario.eq;
  }
  if (shape == "th") {
    require_known_keys(j, "equation", {"shape", "a", "b", "sigma"});
    ScenarioEquation scenario =
        make_th(get_number(j, "equation", "a"), get_number(j, "equation", "b"),
                get_number(j, "equation", "sigma"));
    default_root = scenario.rho;
    return scenario.eq;
  }

  require_known_keys(j, "equation", {"shape", "k", "a", "b", "nonlinearity"});
  if (!j.contains("nonlinearity"))
    throw config_error("equation.nonlinearity is required");
  NonlinearitySpec g = parse_nonlinearity(j["nonlinearity"]);

  LinearArgEquation eq{ctx, 0, {}, {}, std::move(g)};

  if (shape == "general") {
    eq.k = get_int(j, "equation", "k");
    if (!j.contains("a") || !j.contains("b"))
      throw config_error("general equations need coefficient lists \"a\" and \"b\"");
    eq.a = parse_element_list(ctx, j["a"], "equation.a");
    eq.b = parse_element_list(ctx, j["b"], "equation.b");
  } else if (shape == "gla0") {
    // x_{n+1} = a x_n + g_n(b_0 x_n + ... + b_k x_{n-k})
    if (!j.contains("a") || !j.contains("b"))
      throw config_error("gla0 needs a single \"a\" and the list \"b\"");
    eq.b = parse_element_list(ctx, j["b"], "equation.b");
    eq.k = static_cast<int>(eq.b.size()) - 1;
    eq.a.assign(eq.b.size(), ctx.zero());
    eq.a[0] = element_from_json(ctx, j["a"]);
    default_root = eq.a[0];
  } else if (shape == "gla1" || shape == "gla2") {
    // x_{n+1} = a_0 x_n + ... + a_k x_{n-k} + g_n(x_n - b x_{n-1})
    if (!j.contains("a") || !j.contains("b"))
      throw config_error(shape + " needs the list \"a\" and a single \"b\"");
    eq.a = parse_element_list(ctx, j["a"], "equation.a");
    eq.k = static_cast<int>(eq.a.size()) - 1;
    if (shape == "gla2" && eq.k != 1)
      throw config_error("gla2 is second order: \"a\" must have exactly 2 entries");
    if (eq.k < 1) throw config_error(shape + " needs at least 2 \"a\" entries");
    Element b = element_from_json(ctx, j["b"]);
    eq.b.assign(eq.a.size(), ctx.zero());
    eq.b[0] = ctx.identity();
    eq.b[1] = ctx.negate(b);
    default_root = std::move(b);
  } else {
    throw config_error("unknown equation shape \"" + shape + "\"");
  }

  eq.validate();
  return eq;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  require_known_keys(j, "config",
                     {"algebra", "equation", "root", "init", "horizon",
                      "tolerances", "seed", "scan", "axioms"});

  RunConfig config;
  if (j.contains("algebra")) config.ctx = parse_algebra(j["algebra"]);
  config.root_tol = config.ctx.kind() == AlgebraKind::Matrix ? 1e-8 : 1e-9;

  if (j.contains("equation")) {
    config.shape = j["equation"].value("shape", "general");
    std::optional<Element> default_root;
    config.eq = parse_equation(config.ctx, j["equation"], default_root);
    config.root = std::move(default_root);
    // scenario shapes fix their own algebra (real for dham/th, grid for c01)
    config.ctx = config.eq->ctx;
  }

  if (j.contains("root")) {
    if (!config.eq) throw config_error("\"root\" given without an equation");
    config.root = element_from_json(config.ctx, j["root"]);
  }

  if (j.contains("init")) {
    const json& init = j["init"];
    require_known_keys(init, "init", {"values", "random_count", "scale"});
    if (init.contains("values")) {
      if (!config.eq) throw config_error("\"init\" given without an equation");
      if (!init["values"].is_array())
        throw config_error("init.values must be an array of initial-value sets");
      for (const auto& set : init["values"]) {
        std::vector<Element> one = parse_element_list(config.ctx, set, "init.values[]");
        if (one.size() != static_cast<std::size_t>(config.eq->k + 1))
          throw config_error("each init set needs exactly k+1 elements (x_{-k}..x_0)");
        config.inits.push_back(std::move(one));
      }
      if (config.inits.empty())
        throw config_error("init.values must contain at least one set");
    }
    if (init.contains("random_count")) {
      config.random_init_count = get_int(init, "init", "random_count");
      if (config.random_init_count < 1)
        throw config_error("init.random_count must be >= 1");
    }
    if (init.contains("scale")) config.init_scale = get_number(init, "init", "scale");
  }

  if (j.contains("horizon")) {
    config.horizon = get_int(j, "config", "horizon");
    if (config.horizon < 0) throw config_error("horizon must be nonnegative");
  }

  if (j.contains("tolerances")) {
    const json& tol = j["tolerances"];
    require_known_keys(tol, "tolerances", {"root_tol"});
    if (tol.contains("root_tol")) {
      config.root_tol = get_number(tol, "tolerances", "root_tol");
      if (config.root_tol <= 0.0) throw config_error("root_tol must be positive");
    }
  }

  if (j.contains("seed"))
    config.seed = static_cast<std::uint64_t>(get_number(j, "config", "seed"));

  if (j.contains("scan")) {
    const json& s = j["scan"];
    require_known_keys(s, "scan", {"b", "sigma", "a_min", "a_max", "steps"});
    ScanParams params;
    params.b = get_number(s, "scan", "b");
    params.sigma = get_number(s, "scan", "sigma");
    params.a_min = get_number(s, "scan", "a_min");
    params.a_max = get_number(s, "scan", "a_max");
    params.steps = get_int(s, "scan", "steps");
    if (params.steps < 2) throw config_error("scan.steps must be >= 2");
    if (params.a_min > params.a_max)
      throw config_error("scan requires a_min <= a_max");
    config.scan = params;
  }

  if (j.contains("axioms")) {
    const json& a = j["axioms"];
    require_known_keys(a, "axioms", {"samples", "tol"});
    if (a.contains("samples")) {
      config.axioms.samples = get_int(a, "axioms", "samples");
      if (config.axioms.samples < 1)
        throw config_error("axioms.samples must be >= 1");
    }
    if (a.contains("tol")) config.axioms.tol = get_number(a, "axioms", "tol");
  }

  return config;
}

std::vector<std::vector<Element>> resolve_inits(const RunConfig& config) {
  if (!config.eq) throw config_error("no equation configured");
  if (!config.inits.empty()) return config.inits;
  std::mt19937_64 rng(config.seed);
  std::vector<std::vector<Element>> sets;
  sets.reserve(static_cast<std::size_t>(config.random_init_count));
  for (int s = 0; s < config.random_init_count; ++s) {
    std::vector<Element> one;
    one.reserve(static_cast<std::size_t>(config.eq->k + 1));
    for (int i = 0; i <= config.eq->k; ++i)
      one.push_back(config.ctx.scale(config.init_scale,
                                     config.ctx.random_element(rng)));
    sets.push_back(std::move(one));
  }
  return sets;
}

}  // namespace linarg
