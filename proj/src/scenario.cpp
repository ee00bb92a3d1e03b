#include "survopt/scenario.hpp"

#include <fstream>

namespace survopt::scenario {

namespace {

using nlohmann::json;

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object())
    throw SchemaError(path.empty() ? "(root)" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw SchemaError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string join(const std::string& path, const char* key) {
  return path.empty() ? key : path + "." + key;
}

double as_num(const json& v, const std::string& path) {
  if (!v.is_number()) throw SchemaError(path, "expected a number");
  return v.get<double>();
}

double need_num(const json& j, const char* key, const std::string& path) {
  return as_num(need(j, key, path), join(path, key));
}

double opt_num(const json& j, const char* key, const std::string& path,
               double fallback) {
  if (!j.is_object()) return fallback;
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  return as_num(*it, join(path, key));
}

std::string opt_str(const json& j, const char* key, std::string fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_string()) throw SchemaError(key, "expected a string");
  return it->get<std::string>();
}

// four-component quadruple [c, a, b, d]
fuzzy::TrapezoidalFuzzy need_quad(const json& j, const char* key,
                                  const std::string& path) {
  const json& v = need(j, key, path);
  const std::string p = join(path, key);
  if (!v.is_array() || v.size() != 4)
    throw SchemaError(p, "expected an array of 4 numbers");
  fuzzy::TrapezoidalFuzzy t;
  t.c = as_num(v[0], p + "[0]");
  t.a = as_num(v[1], p + "[1]");
  t.b = as_num(v[2], p + "[2]");
  t.d = as_num(v[3], p + "[3]");
  return t;
}

stats::StratifiedFrame parse_stratified(const json& j) {
  const json& arr = need(j, "strata", "");
  if (!arr.is_array() || arr.empty())
    throw SchemaError("strata", "expected a non-empty array");
  std::vector<stats::Stratum> strata;
  for (std::size_t h = 0; h < arr.size(); ++h) {
    const std::string p = "strata[" + std::to_string(h) + "]";
    const json& e = arr[h];
    if (!e.is_object()) throw SchemaError(p, "expected an object");
    stats::Stratum s;
    s.N = as_num(need(e, "N", p), p + ".N");
    s.n = as_num(need(e, "n", p), p + ".n");
    s.ybar = as_num(need(e, "ybar", p), p + ".ybar");
    s.xbar = as_num(need(e, "xbar", p), p + ".xbar");
    s.zbar = as_num(need(e, "zbar", p), p + ".zbar");
    s.sy = as_num(need(e, "sy", p), p + ".sy");
    s.sx = as_num(need(e, "sx", p), p + ".sx");
    s.sz = as_num(need(e, "sz", p), p + ".sz");
    auto opt = [&](const char* key) -> std::optional<double> {
      auto it = e.find(key);
      if (it == e.end()) return std::nullopt;
      return as_num(*it, p + "." + key);
    };
    s.rho_xy = opt("rho_xy");
    s.rho_yz = opt("rho_yz");
    s.rho_xz = opt("rho_xz");
    s.cov_xy = opt("cov_xy");
    s.cov_yz = opt("cov_yz");
    s.cov_xz = opt("cov_xz");
    strata.push_back(s);
  }
  try {
    return stats::StratifiedFrame(std::move(strata));
  } catch (const std::exception& e) {
    throw SchemaError("strata", e.what());
  }
}

SrsSet parse_srs(const json& j) {
  const json& arr = need(j, "populations", "");
  if (!arr.is_array() || arr.empty())
    throw SchemaError("populations", "expected a non-empty array");
  SrsSet out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = "populations[" + std::to_string(i) + "]";
    const json& e = arr[i];
    if (!e.is_object()) throw SchemaError(p, "expected an object");
    srs::Population pop;
    pop.N = as_num(need(e, "N", p), p + ".N");
    pop.n = as_num(need(e, "n", p), p + ".n");
    pop.ybar = as_num(need(e, "ybar", p), p + ".ybar");
    pop.xbar = as_num(need(e, "xbar", p), p + ".xbar");
    pop.cy = as_num(need(e, "cy", p), p + ".cy");
    pop.cx = as_num(need(e, "cx", p), p + ".cx");
    pop.rho = as_num(need(e, "rho", p), p + ".rho");
    if (!(pop.N > pop.n) || !(pop.n > 0))
      throw SchemaError(p, "need 0 < n < N");
    out.names.push_back(opt_str(e, "name", std::to_string(i + 1)));
    out.pops.push_back(pop);
  }
  return out;
}

AttrSet parse_attr(const json& j) {
  const json& arr = need(j, "populations", "");
  if (!arr.is_array() || arr.empty())
    throw SchemaError("populations", "expected a non-empty array");
  AttrSet out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = "populations[" + std::to_string(i) + "]";
    const json& e = arr[i];
    if (!e.is_object()) throw SchemaError(p, "expected an object");
    attr::Population pop;
    pop.N = as_num(need(e, "N", p), p + ".N");
    pop.n = as_num(need(e, "n", p), p + ".n");
    pop.ybar = as_num(need(e, "ybar", p), p + ".ybar");
    pop.P = as_num(need(e, "P", p), p + ".P");
    pop.cy = as_num(need(e, "cy", p), p + ".cy");
    pop.cp = as_num(need(e, "cp", p), p + ".cp");
    pop.rho = as_num(need(e, "rho", p), p + ".rho");
    pop.beta2 = opt_num(e, "beta2", p, 0.0);
    pop.nprime = opt_num(e, "nprime", p, 0.0);
    pop.pprime = opt_num(e, "pprime", p, 0.0);
    if (!(pop.N > pop.n) || !(pop.n > 0))
      throw SchemaError(p, "need 0 < n < N");
    if (!(pop.P > 0.0) || !(pop.P < 1.0))
      throw SchemaError(p + ".P", "need 0 < P < 1");
    if (pop.nprime > 0.0 && !(pop.nprime < pop.N))
      throw SchemaError(p + ".nprime", "need nprime < N");
    out.names.push_back(opt_str(e, "name", std::to_string(i + 1)));
    out.pops.push_back(pop);
  }
  return out;
}

EoqScenario parse_eoq(const json& j) {
  EoqScenario out;
  const json& c = need(j, "crisp", "");
  out.crisp.D = need_num(c, "D", "crisp");
  out.crisp.A = need_num(c, "A", "crisp");
  out.crisp.F = need_num(c, "F", "crisp");
  out.crisp.H = need_num(c, "H", "crisp");
  out.crisp.W = need_num(c, "W", "crisp");
  const json& f = need(j, "fuzzy", "");
  out.fuzzy.D = need_quad(f, "D", "fuzzy");
  out.fuzzy.F = need_quad(f, "F", "fuzzy");
  out.fuzzy.H = need_quad(f, "H", "fuzzy");
  out.fuzzy.A = need_quad(f, "A", "fuzzy");
  out.fuzzy.W = need_quad(f, "W", "fuzzy");
  const double ct = need_num(j, "ct", "");
  out.crisp.Ct = ct;
  out.fuzzy.Ct = ct;
  if (j.contains("ct_star")) {
    const double cs = as_num(j["ct_star"], "ct_star");
    out.crisp.Ct_star = cs;
    out.fuzzy.Ct_star = cs;
  }
  if (!(out.crisp.D > 0) || !(out.crisp.A > 0) || !(out.crisp.W > 0))
    throw SchemaError("crisp", "D, A and W must be positive");
  if (!(out.crisp.F > out.crisp.H))
    throw SchemaError("crisp", "rented-warehouse rate F must exceed H");
  return out;
}

horizon::HorizonParams parse_horizon(const json& j) {
  const json& pj = need(j, "params", "");
  horizon::HorizonParams par;
  struct Field {
    const char* key;
    double* slot;
  };
  const Field fields[] = {
      {"a", &par.a},         {"b", &par.b},       {"W1", &par.W1},
      {"A", &par.A},         {"Chr", &par.Chr},   {"Cho", &par.Cho},
      {"C2", &par.C2},       {"C3", &par.C3},     {"C4", &par.C4},
      {"p", &par.p},         {"s", &par.s},       {"alpha", &par.alpha},
      {"beta", &par.beta},   {"delta", &par.delta}, {"mu1", &par.mu1},
      {"mu2", &par.mu2},     {"R", &par.R},       {"H", &par.H},
  };
  for (const auto& f : fields) *f.slot = need_num(pj, f.key, "params");
  try {
    horizon::validate(par);
  } catch (const std::exception& e) {
    throw SchemaError("params", e.what());
  }
  return par;
}

}  // namespace

Scenario parse_scenario(const json& j) {
  if (!j.is_object()) throw SchemaError("(root)", "expected an object");
  const json& kj = need(j, "kind", "");
  if (!kj.is_string()) throw SchemaError("kind", "expected a string");
  Scenario sc;
  sc.kind = kj.get<std::string>();
  sc.label = opt_str(j, "label", "");
  if (sc.kind == "stratified")
    sc.payload = parse_stratified(j);
  else if (sc.kind == "srs")
    sc.payload = parse_srs(j);
  else if (sc.kind == "attribute")
    sc.payload = parse_attr(j);
  else if (sc.kind == "fuzzy-eoq")
    sc.payload = parse_eoq(j);
  else if (sc.kind == "horizon")
    sc.payload = parse_horizon(j);
  else
    throw SchemaError("kind",
                      "must be one of stratified, srs, attribute, fuzzy-eoq, "
                      "horizon");
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is)
    throw std::runtime_error("cannot open scenario: " + path.string());
  json j;
  try {
    j = json::parse(is);
  } catch (const json::parse_error& e) {
    throw SchemaError("(root)", std::string("not valid JSON: ") + e.what());
  }
  return parse_scenario(j);
}

}  // namespace survopt::scenario
