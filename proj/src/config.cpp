#include "reachkit/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

namespace reachkit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void expect_keys(const json& obj, const std::string& where,
                 std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) fail(where, "unknown key '" + key + "'");
  }
}

double get_number(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail(where, std::string("missing key '") + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key, "expected a number");
  return v.get<double>();
}

double get_number_or(const json& obj, const std::string& where, const char* key,
                     double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key, "expected a number");
  return v.get<double>();
}

Interval get_interval(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(where, "expected [lo, hi]");
  }
  Interval iv{v[0].get<double>(), v[1].get<double>()};
  if (!(iv.hi >= iv.lo)) fail(where, "interval has lo > hi");
  return iv;
}

BrakingProfile parse_profile(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return BrakingProfile::from_label(v.get<std::string>());
    if (v.is_object()) {
      expect_keys(v, where, {"ramp_s", "peak_decel"});
      return BrakingProfile::custom(get_number(v, where, "ramp_s"),
                                    get_number(v, where, "peak_decel"));
    }
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  fail(where, "expected a profile label or {ramp_s, peak_decel}");
}

aeb::AebSpec parse_scenario(const json& v, const std::string& where) {
  expect_keys(v, where, {"n_cars", "v0", "d", "r", "profiles", "theta"});
  aeb::AebSpec spec;
  double n = get_number(v, where, "n_cars");
  spec.n_cars = static_cast<int>(n);
  if (!v.contains("v0") || !v.at("v0").is_array()) fail(where, "missing array 'v0'");
  for (const auto& x : v.at("v0")) {
    if (!x.is_number()) fail(where + ".v0", "expected numbers");
    spec.v0.push_back(x.get<double>());
  }
  if (!v.contains("d") || !v.at("d").is_array()) fail(where, "missing array 'd'");
  for (const auto& x : v.at("d")) spec.d_range.push_back(get_interval(x, where + ".d"));
  if (!v.contains("r") || !v.at("r").is_array()) fail(where, "missing array 'r'");
  for (const auto& x : v.at("r")) spec.r_range.push_back(get_interval(x, where + ".r"));
  if (!v.contains("profiles") || !v.at("profiles").is_array()) {
    fail(where, "missing array 'profiles'");
  }
  std::size_t pi = 0;
  for (const auto& x : v.at("profiles")) {
    spec.profiles.push_back(
        parse_profile(x, where + ".profiles[" + std::to_string(pi++) + "]"));
  }
  spec.theta = get_number_or(v, where, "theta", 2.0);
  try {
    spec.check();
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  return spec;
}

VerifierConfig parse_verifier(const json& v, const std::string& where) {
  expect_keys(v, where,
              {"delta_cover", "max_refine_depth", "tau", "T", "seed", "m_train",
               "epsilon", "confidence_delta", "boundary_margin", "lipschitz_L"});
  VerifierConfig cfg;
  cfg.delta_cover = get_number_or(v, where, "delta_cover", 0.5);
  cfg.max_refine_depth =
      static_cast<int>(get_number_or(v, where, "max_refine_depth", 12));
  cfg.tau = get_number_or(v, where, "tau", 0.01);
  cfg.horizon = get_number_or(v, where, "T", 20.0);
  cfg.seed = static_cast<std::uint64_t>(get_number_or(v, where, "seed", 1));
  // the margin guards the disjointness test against inter-sample excursions
  cfg.boundary_margin = get_number_or(v, where, "boundary_margin", 1e-3);
  bool has_m = v.contains("m_train");
  bool has_pac = v.contains("epsilon") || v.contains("confidence_delta");
  if (has_m && has_pac) {
    fail(where, "give either m_train or {epsilon, confidence_delta}, not both");
  }
  if (has_m) {
    cfg.m_train = static_cast<int>(get_number(v, where, "m_train"));
  } else if (has_pac) {
    PacParams pac;
    pac.epsilon = get_number(v, where, "epsilon");
    pac.confidence_delta = get_number(v, where, "confidence_delta");
    cfg.pac = pac;
  }
  if (v.contains("lipschitz_L")) {
    cfg.lipschitz = get_number(v, where, "lipschitz_L");
  }
  try {
    cfg.check();
    cfg.resolved_m();
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  return cfg;
}

risk::ParamDistribution parse_dist(const json& v, const std::string& where) {
  expect_keys(v, where, {"kind", "location", "scale", "shape", "support", "rows"});
  if (!v.contains("kind") || !v.at("kind").is_string()) {
    fail(where, "missing string 'kind'");
  }
  std::string kind = v.at("kind").get<std::string>();
  try {
    if (kind == "skew_normal") {
      if (!v.contains("support")) fail(where, "skew_normal needs 'support'");
      return risk::ParamDistribution::skew_normal(
          get_number(v, where, "location"), get_number(v, where, "scale"),
          get_number(v, where, "shape"),
          get_interval(v.at("support"), where + ".support"));
    }
    if (kind == "table") {
      if (!v.contains("rows") || !v.at("rows").is_array()) {
        fail(where, "table needs array 'rows'");
      }
      std::vector<std::pair<Interval, double>> rows;
      std::size_t ri = 0;
      for (const auto& row : v.at("rows")) {
        std::string rw = where + ".rows[" + std::to_string(ri++) + "]";
        expect_keys(row, rw, {"interval", "p"});
        if (!row.contains("interval")) fail(rw, "missing 'interval'");
        rows.emplace_back(get_interval(row.at("interval"), rw + ".interval"),
                          get_number(row, rw, "p"));
      }
      return risk::ParamDistribution::table(std::move(rows));
    }
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  fail(where + ".kind", "expected 'skew_normal' or 'table'");
}

risk::GridAxes parse_axes(const json& v, const std::string& where, int n_cars) {
  if (!v.is_array() || v.size() != 2) fail(where, "expected two axis names");
  auto parse_one = [&](const json& a, bool& is_d, std::size_t& idx) {
    if (!a.is_string()) fail(where, "axis names must be strings");
    std::string s = a.get<std::string>();
    if (s == "d" || s == "d12") { is_d = true; idx = 0; }
    else if (s == "d23") { is_d = true; idx = 1; }
    else if (s == "r" || s == "r2") { is_d = false; idx = 0; }
    else if (s == "r3") { is_d = false; idx = 1; }
    else fail(where, "unknown axis '" + s + "'");
    if (idx == 1 && n_cars < 3) fail(where, "axis '" + s + "' needs 3 cars");
  };
  risk::GridAxes axes;
  parse_one(v[0], axes.first_is_d, axes.first_idx);
  parse_one(v[1], axes.second_is_d, axes.second_idx);
  if (axes.first_is_d == axes.second_is_d && axes.first_idx == axes.second_idx) {
    fail(where, "the two axes must differ");
  }
  return axes;
}

RiskSection parse_risk(const json& v, const std::string& where, int n_cars) {
  expect_keys(v, where, {"n_d", "n_r", "d_dist", "r_dist", "axes"});
  RiskSection section;
  section.n_d = static_cast<std::size_t>(get_number_or(v, where, "n_d", 10));
  section.n_r = static_cast<std::size_t>(get_number_or(v, where, "n_r", 17));
  if (section.n_d < 1 || section.n_r < 1) fail(where, "n_d and n_r must be >= 1");
  if (v.contains("d_dist")) section.d_dist = parse_dist(v.at("d_dist"), where + ".d_dist");
  if (v.contains("r_dist")) section.r_dist = parse_dist(v.at("r_dist"), where + ".r_dist");
  if (v.contains("axes")) section.axes = parse_axes(v.at("axes"), where + ".axes", n_cars);
  return section;
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line;
    }
    throw ConfigError(path + ":" + std::to_string(line) + ": " + e.what());
  }

  expect_keys(root, path, {"scenario", "verifier", "risk", "outputs"});
  if (!root.contains("scenario")) fail(path, "missing 'scenario'");
  if (!root.contains("verifier")) fail(path, "missing 'verifier'");

  RunConfig cfg;
  cfg.scenario = parse_scenario(root.at("scenario"), path + ": scenario");
  cfg.verifier = parse_verifier(root.at("verifier"), path + ": verifier");
  if (root.contains("risk")) {
    cfg.risk = parse_risk(root.at("risk"), path + ": risk", cfg.scenario.n_cars);
  }
  if (root.contains("outputs")) {
    if (!root.at("outputs").is_string()) fail(path, "'outputs' must be a string");
    cfg.outputs = root.at("outputs").get<std::string>();
  }
  return cfg;
}

}  // namespace reachkit
