#include "heis/run.hpp"

#include <algorithm>

namespace heis {

namespace {

using json = nlohmann::json;

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

LocalScalar random_local(const LocalRing& r, std::mt19937_64& rng, int first_power, int bound = 3) {
  std::vector<Scalar> c(r.N, Scalar(0, r.field));
  for (int s = first_power; s < r.N; ++s) c[s] = Scalar(uniform(rng, -bound, bound), r.field);
  return LocalScalar(std::move(c));
}

Check check(const std::string& rel, const std::string& kase, int instance, bool pass, const std::string& witness = "") {
  Check c;
  c.relation = rel;
  c.kase = kase;
  c.indices = {instance};
  c.pass = pass;
  if (!pass) c.witness = witness;
  return c;
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(Errc::ConfigError, what + " must be a list of coefficient strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (e.is_string())
      out.push_back(e.get<std::string>());
    else if (e.is_number_integer())
      out.push_back(std::to_string(e.get<long>()));
    else
      throw Error(Errc::ConfigError, what + " entries must be strings or integers");
  }
  return out;
}

BaseField parse_field(const json& j) {
  if (j.is_number_integer()) {
    long p = j.get<long>();
    return p == 0 ? BaseField::rationals() : BaseField::prime(static_cast<std::uint32_t>(p));
  }
  if (!j.is_string()) throw Error(Errc::ConfigError, "field must be \"Q\", \"F_p\" or an integer");
  std::string s = j.get<std::string>();
  if (s == "Q") return BaseField::rationals();
  if (s.rfind("F_", 0) == 0) {
    try {
      return BaseField::prime(static_cast<std::uint32_t>(std::stoul(s.substr(2))));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(Errc::ConfigError, "unknown field " + s);
}

json instance_json(const Check& c, const std::string& prefix) {
  json e;
  e["key"] = prefix + c.key();
  e["pass"] = c.pass;
  e["detail"] = c.witness;
  return e;
}

void add_report(json& instances, const Report& rep, const std::string& prefix = "") {
  for (const auto& c : rep.checks) instances.push_back(instance_json(c, prefix));
}

json suite_hensel(const RunConfig& cfg, const GCQData&) {
  json inst = json::array();
  auto factor_check = [&](const MonicPoly& f, const std::string& name) {
    ClusterMap cl = cluster_factor(f);
    bool ok = cluster_product(cl, f.ring()) == f;
    bool jcond = true;
    for (const auto& [i, fi] : cl) jcond = jcond && fi.poly().nonleading_in_J();
    inst.push_back({{"key", "config/" + name + " = prod f_i(u - i)"}, {"pass", ok}, {"detail", ok ? "" : f.str()}});
    inst.push_back({{"key", "config/" + name + " f_i in u^p + J[u]"}, {"pass", jcond}, {"detail", ""}});
  };
  factor_check(cfg.m, "m");
  factor_check(cfg.n, "n");
  add_report(inst, hensel_property(cfg.ring, 20, 6, cfg.seed), "random/");
  return inst;
}

json suite_series(const RunConfig& cfg, const GCQData& g) {
  json inst = json::array();
  const int P = cfg.effective_precision();
  LaurentSeries a = rational_to_series(g.n.poly(), g.m.poly(), P), b = rational_to_series(g.m.poly(), g.n.poly(), P);
  inst.push_back({{"key", "config/(n/m)(m/n) = 1"}, {"pass", (a * b).is_one()}, {"detail", ""}});
  add_report(inst, series_property(cfg.ring, 10, 8, cfg.seed), "random/");
  return inst;
}

json suite_dims(const RunConfig& cfg, const GCQData& g) {
  json inst = json::array();
  for (const auto& row : dim_report(g, cfg.d_max)) {
    json detail;
    detail["computed"] = row.computed;
    detail["predicted"] = row.predicted;
    detail["relations_hold"] = row.relations_hold;
    json blocks = json::array();
    for (const auto& b : row.blocks) {
      json tup = json::array();
      for (const auto& s : b.tuple) tup.push_back(s.str());
      blocks.push_back({{"tuple", tup}, {"k_dimension", b.k_dim}, {"weight", weight_json(b.weight)}});
    }
    detail["blocks"] = blocks;
    bool pass = row.relations_hold && row.computed == row.predicted;
    inst.push_back({{"key", "d=" + std::to_string(row.d)}, {"pass", pass}, {"detail", detail.dump()}});
  }
  return inst;
}

json suite_klr(const RunConfig& cfg, const GCQData& g) {
  json inst = json::array();
  for (int d = 0; d <= cfg.d_max; ++d) {
    KLRGenerators klr(HeckeAlgebra::create(cfg.param, d, cfg.m));
    std::string pre = "d=" + std::to_string(d) + " ";
    add_report(inst, verify_klr_relations(klr), pre);
    add_report(inst, verify_cyclotomic_klr(klr, g.mu_i), pre);
    add_report(inst, rank_check(klr), pre);
  }
  return inst;
}

json suite_roundtrip(const RunConfig& cfg, const GCQData&) {
  json inst = json::array();
  for (int d = 0; d <= cfg.d_max; ++d) {
    KLRGenerators klr(HeckeAlgebra::create(cfg.param, d, cfg.m));
    add_report(inst, roundtrip_check(klr), "d=" + std::to_string(d) + " ");
  }
  return inst;
}

json suite_bubbles(const RunConfig& cfg, const GCQData& g) {
  json inst = json::array();
  const int P = cfg.effective_precision();
  add_report(inst, bubble_factorization_check(g, P), "config/");
  BubbleSeries b = bubble_series(g, P);
  json coeffs;
  for (const auto& [r, c] : b.coeffs) coeffs[std::to_string(r)] = c.str();
  json tilde;
  for (const auto& [r, c] : b.coeffs_tilde) tilde[std::to_string(r)] = c.str();
  inst.push_back({{"key", "config/bubble coefficients"}, {"pass", true},
                  {"detail", json{{"O", coeffs}, {"O~", tilde}}.dump()}});
  add_report(inst, bubble_property(cfg.param, cfg.ring, 5, 12, cfg.seed), "random/");
  return inst;
}

json suite_endchecks(const RunConfig& cfg, const GCQData& g) {
  json inst = json::array();
  add_report(inst, end_object_checks(g));
  add_report(inst, spectral_closure_check(g, cfg.d_max));
  inst.push_back({{"key", "derived data"}, {"pass", true}, {"detail", to_json(g).dump()}});
  return inst;
}

json suite_tparam(const RunConfig& cfg, const GCQData& g) {
  json inst = json::array();
  if (!cfg.param.is_quantum()) {
    inst.push_back({{"key", "degenerate case: no t parameter"}, {"pass", true}, {"detail", ""}});
    return inst;
  }
  add_report(inst, quantum_t_check(g, cfg.d_max));
  return inst;
}

}  // namespace

int RunConfig::effective_precision() const {
  if (precision) return *precision;
  return m.degree() + n.degree() + 2 * d_max + 4;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"bubbles", "dims", "endchecks", "hensel",
                                                 "klr", "roundtrip", "series", "tparam"};
  return names;
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw Error(Errc::ConfigError, "configuration must be a JSON object");
  static const std::vector<std::string> known = {"field", "case", "q", "N", "m", "n", "d_max", "suites",
                                                 "precision", "sqrt", "cyclic", "seed"};
  for (const auto& [key, v] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw Error(Errc::ConfigError, "unknown configuration key " + key);
  RunConfig cfg;
  cfg.echo = j;
  try {
    BaseField f = parse_field(j.value("field", json("Q")));
    int N = j.value("N", 1);
    if (N < 1) throw Error(Errc::ConfigError, "N must be at least 1");
    cfg.ring = {f, N};
    std::string kase = j.value("case", std::string("degenerate"));
    if (kase == "degenerate") {
      if (j.contains("q")) throw Error(Errc::ConfigError, "q given in the degenerate case");
      cfg.param = QuantumParam::degenerate(f);
    } else if (kase == "quantum") {
      if (!j.contains("q")) throw Error(Errc::ConfigError, "quantum case requires q");
      const json& q = j["q"];
      std::string qs = q.is_string() ? q.get<std::string>() : std::to_string(q.get<long>());
      cfg.param = QuantumParam::quantum(Scalar::parse(qs, f));
    } else {
      throw Error(Errc::ConfigError, "case must be degenerate or quantum");
    }
    if (!j.contains("m") || !j.contains("n")) throw Error(Errc::ConfigError, "m and n are required");
    Poly m = Poly::parse(string_list(j["m"], "m"), cfg.ring), n = Poly::parse(string_list(j["n"], "n"), cfg.ring);
    if (!m.is_monic() || !n.is_monic()) throw Error(Errc::ConfigError, "m and n must be monic");
    cfg.m = MonicPoly(m);
    cfg.n = MonicPoly(n);
    cfg.d_max = j.value("d_max", 2);
    if (cfg.d_max < 0 || cfg.d_max > 6) throw Error(Errc::ConfigError, "d_max must lie in [0, 6]");
    if (j.contains("suites")) {
      for (const auto& s : j["suites"]) cfg.suites.push_back(s.get<std::string>());
    }
    for (const auto& s : cfg.suites)
      if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
        throw Error(Errc::ConfigError, "unknown suite " + s);
    if (j.contains("precision")) {
      cfg.precision = j["precision"].get<int>();
      if (*cfg.precision < 1) throw Error(Errc::ConfigError, "precision must be positive");
    }
    if (j.contains("sqrt")) {
      for (const auto& pr : j["sqrt"]) {
        if (!pr.is_array() || pr.size() != 2) throw Error(Errc::ConfigError, "sqrt overrides are [c, root] pairs");
        Scalar c = Scalar::parse(pr[0].get<std::string>(), f), root = Scalar::parse(pr[1].get<std::string>(), f);
        if (!(root * root == c)) throw Error(Errc::ConfigError, "sqrt override " + root.str() + " does not square to " + c.str());
        cfg.sqrt.overrides.emplace_back(c, root);
      }
    }
    cfg.allow_cyclic = j.value("cyclic", false);
    cfg.seed = j.value("seed", std::uint64_t{0});
  } catch (const json::exception& e) {
    throw Error(Errc::ConfigError, std::string("malformed configuration: ") + e.what());
  }
  return cfg;
}

RunResult run(const RunConfig& cfg) {
  RunResult res;
  json& rep = res.report;
  rep["config_echo"] = cfg.echo;
  GCQData g;
  try {
    if (cfg.param.is_quantum() && !cfg.m.coeff(0).is_unit())
      throw Error(Errc::InvalidLevelData, "m(0) = " + cfg.m.coeff(0).str() + " is not a unit");
    g = derive_km_data(cfg.m, cfg.n, cfg.param, cfg.sqrt, cfg.allow_cyclic);
  } catch (const Error& e) {
    rep["error"] = e.what();
    rep["suites"] = json::array();
    rep["pass"] = false;
    res.exit_code = 2;
    return res;
  }
  std::vector<std::string> suites = cfg.suites.empty() ? suite_names() : cfg.suites;
  std::sort(suites.begin(), suites.end());
  suites.erase(std::unique(suites.begin(), suites.end()), suites.end());
  using Fn = json (*)(const RunConfig&, const GCQData&);
  const std::map<std::string, Fn> table = {
      {"hensel", suite_hensel}, {"series", suite_series},       {"dims", suite_dims},
      {"klr", suite_klr},       {"roundtrip", suite_roundtrip}, {"bubbles", suite_bubbles},
      {"endchecks", suite_endchecks}, {"tparam", suite_tparam}};
  bool all = true;
  rep["suites"] = json::array();
  for (const auto& name : suites) {
    json s;
    s["name"] = name;
    json inst;
    try {
      inst = table.at(name)(cfg, g);
    } catch (const Error& e) {
      inst = json::array({{{"key", "error"}, {"pass", false}, {"detail", e.what()}}});
    }
    std::stable_sort(inst.begin(), inst.end(),
                     [](const json& a, const json& b) { return a["key"].get<std::string>() < b["key"].get<std::string>(); });
    bool pass = true;
    for (const auto& i : inst) pass = pass && i["pass"].get<bool>();
    s["instances"] = inst;
    s["pass"] = pass;
    all = all && pass;
    rep["suites"].push_back(s);
  }
  rep["pass"] = all;
  res.exit_code = all ? 0 : 1;
  return res;
}

MonicPoly random_split_monic(const LocalRing& r, int degree, std::mt19937_64& rng, int lo, int hi, bool nonzero) {
  std::vector<LocalScalar> roots;
  while (static_cast<int>(roots.size()) < degree) {
    int v = uniform(rng, lo, hi);
    if (nonzero && v == 0) continue;
    roots.emplace_back(r, v);
  }
  Poly f = MonicPoly::from_roots(roots, r).poly();
  if (r.N > 1) {
    std::vector<LocalScalar> pert;
    for (int j = 0; j < degree; ++j) pert.push_back(random_local(r, rng, 1));
    f += Poly(r, pert);
  }
  return MonicPoly(f);
}

Report hensel_property(const LocalRing& r, int count, int max_degree, std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed);
  for (int n = 0; n < count; ++n) {
    MonicPoly f = random_split_monic(r, uniform(rng, 1, max_degree), rng);
    ClusterMap cl = cluster_factor(f);
    rep.checks.push_back(check("hensel", "f = prod f_i(u - i)", n, cluster_product(cl, r) == f, f.str()));
    bool jcond = true;
    for (const auto& [i, fi] : cl) jcond = jcond && fi.poly().nonleading_in_J();
    rep.checks.push_back(check("hensel", "f_i in u^p + J[u]", n, jcond));
    if (r.N > 1) {
      // Perturb one factor by a nonzero J-polynomial of lower degree.
      auto it = cl.begin();
      std::advance(it, uniform(rng, 0, static_cast<int>(cl.size()) - 1));
      int deg = it->second.degree();
      LocalScalar c = random_local(r, rng, 1);
      if (c.is_zero()) c = LocalScalar::t(r);
      ClusterMap bad = cl;
      bad[it->first] = MonicPoly(it->second.poly() + Poly::monomial(r, uniform(rng, 0, deg - 1), c));
      rep.checks.push_back(check("hensel", "perturbed factor breaks the product", n, !(cluster_product(bad, r) == f)));
    }
    if (cl.size() >= 2) {
      // Split off the first cluster and compare the two lifting procedures.
      const auto& [i0, f0] = *cl.begin();
      LocalRing k = r.residue_ring();
      Poly g = Poly::linear(LocalScalar(k, i0)).pow(f0.degree());
      MonicPoly gbar(g);
      auto [hbar, rem] = divmod(f.residue().poly(), gbar);
      auto a = coprime_factor_lift(f, gbar, MonicPoly(hbar));
      auto b = filtration_lift(f, gbar, MonicPoly(hbar));
      rep.checks.push_back(check("hensel", "direct lift = filtration lift", n,
                                 a.first == b.first && a.second == b.second && rem.is_zero()));
    }
  }
  return rep;
}

Report series_property(const LocalRing& r, int count, int max_r, std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed + 1);
  for (int n = 0; n < count; ++n) {
    std::vector<LocalScalar> f{LocalScalar(r, 1)};
    for (int j = 1; j <= max_r; ++j) f.push_back(random_local(r, rng, 0));
    LaurentSeries s(r, uniform(rng, -2, 3), f);
    LaurentSeries inv = s.invert();
    bool ok = true;
    for (int j = 0; j <= max_r; ++j) ok = ok && det_inversion_coeff(f, j) == inv.coeffs()[j];
    rep.checks.push_back(check("series", "det(-f_{s-t+1}) = coefficients of f^{-1}", n, ok));
    rep.checks.push_back(check("series", "invert twice", n, inv.invert().agrees_with(s) && inv.lead_exp() == -s.lead_exp()));
    MonicPoly m = random_split_monic(r, uniform(rng, 1, 3), rng), nn = random_split_monic(r, uniform(rng, 0, 3), rng);
    LaurentSeries O = rational_to_series(nn.poly(), m.poly(), 12);
    rep.checks.push_back(check("series", "(n/m)(m/n) = 1", n, (O * rational_to_series(m.poly(), nn.poly(), 12)).is_one()));
  }
  for (int v = 1; v <= 5; ++v) rep.checks.push_back(check("series", "e(u) h(-u) = 1", v, symfun_check(v, seed)));
  return rep;
}

Report bubble_property(const QuantumParam& p, const LocalRing& r, int count, int precision, std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed + 2);
  const bool quantum = p.is_quantum();
  for (int n = 0; n < count; ++n) {
    std::optional<GCQData> g;
    // Quantum data needs m(0)/n(0) to have a square root in k; resample until it does.
    for (int attempt = 0; !g; ++attempt) {
      MonicPoly m = random_split_monic(r, uniform(rng, 1, 3), rng, -3, 3, quantum);
      MonicPoly nn = random_split_monic(r, uniform(rng, 0, 3), rng, -3, 3, quantum);
      try {
        g = derive_km_data(m, nn, p);
      } catch (const Error& e) {
        if (e.code() != Errc::NoSquareRoot || attempt > 1000) throw;
      }
    }
    for (auto c : bubble_factorization_check(*g, precision).checks) {
      c.indices = {n};
      rep.checks.push_back(c);
    }
  }
  return rep;
}

}  // namespace heis
