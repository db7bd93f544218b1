#include "heis/gcq.hpp"

namespace heis {

namespace {

// p(u - i), or p(u/i - 1) in the quantum case.
Poly shifted_factor(const Poly& p, const Scalar& i, bool quantum) {
  const LocalRing& r = p.ring();
  if (!quantum) return p.taylor_shift(LocalScalar(r, -i));
  return p.taylor_shift(LocalScalar(r, -1)).scale_variable(LocalScalar(r, i.inv()));
}

// num/den for polynomials with unit leading coefficients.
LaurentSeries ratio_series(const Poly& num, const Poly& den, int precision) {
  LocalScalar a = num.lead(), b = den.lead();
  LocalScalar binv = b.inv_unit();
  MonicPoly mn(num * a.inv_unit()), md(den * binv);
  return rational_to_series(mn.poly(), md.poly(), precision) * (a * binv);
}

Check make_check(const std::string& rel, const std::string& kase, bool pass, const std::string& witness = "") {
  Check c;
  c.relation = rel;
  c.kase = kase;
  c.pass = pass;
  if (!pass) c.witness = witness;
  return c;
}

std::vector<std::string> tuple_strings(const Tuple& i) {
  std::vector<std::string> out;
  for (const auto& s : i) out.push_back(s.str());
  return out;
}

long factorial(int d) {
  long f = 1;
  for (int j = 2; j <= d; ++j) f *= j;
  return f;
}

}  // namespace

MonicPoly GCQData::mu_at(const Scalar& i) const {
  auto it = mu_i.find(i);
  return it == mu_i.end() ? MonicPoly(Poly::constant(LocalScalar(ring(), 1))) : it->second;
}

MonicPoly GCQData::nu_at(const Scalar& i) const {
  auto it = nu_i.find(i);
  return it == nu_i.end() ? MonicPoly(Poly::constant(LocalScalar(ring(), 1))) : it->second;
}

GCQData derive_km_data(const MonicPoly& m, const MonicPoly& n, const QuantumParam& param, const SqrtConvention& conv,
                       bool allow_cyclic) {
  if (!(m.ring() == n.ring())) throw Error(Errc::ConfigError, "m and n live over different coefficient rings");
  if (!(m.ring().field == param.z.field())) throw Error(Errc::ConfigError, "level data over a different field");
  const bool quantum = param.is_quantum();
  if (quantum && (!m.coeff(0).is_unit() || !n.coeff(0).is_unit()))
    throw Error(Errc::InvalidLevelData, "quantum level data needs m(0) and n(0) to be units");
  GCQData g;
  g.param = param;
  g.m = m;
  g.n = n;
  g.sqrt = conv;
  g.k = n.degree() - m.degree();
  g.ell = m.degree();
  const LocalRing& r = m.ring();
  ClusterMap fm = cluster_factor(m), fn = cluster_factor(n);
  std::vector<Scalar> seeds;
  for (const auto& [i, f] : fm) seeds.push_back(i);
  for (const auto& [i, f] : fn) seeds.push_back(i);
  g.quiver = Quiver(param, seeds, allow_cyclic);
  auto to_km = [&](const Scalar& i, const MonicPoly& f) {
    if (!quantum) return f;
    // i^{-p} f(i w)
    return MonicPoly(f.poly().scale_variable(LocalScalar(r, i)) * LocalScalar(r, i.pow(-f.degree())));
  };
  for (const auto& [i, f] : fm) {
    g.mu_i.emplace(i, to_km(i, f));
    g.mu.add(g.vertex(i), f.degree());
  }
  for (const auto& [i, f] : fn) {
    g.nu_i.emplace(i, to_km(i, f));
    g.nu.add(g.vertex(i), f.degree());
  }
  g.kappa = g.nu - g.mu;
  if (quantum) g.t = (m.coeff(0) * n.coeff(0).inv_unit()).sqrt_unit(conv);
  return g;
}

std::pair<MonicPoly, MonicPoly> reconstruct(const GCQData& g) {
  const bool quantum = g.param.is_quantum();
  const LocalRing& r = g.ring();
  auto build = [&](const ClusterMap& factors) {
    Poly acc = Poly::constant(LocalScalar(r, 1));
    for (const auto& [i, f] : factors) {
      Poly s = shifted_factor(f.poly(), i, quantum);
      if (quantum) s = s * LocalScalar(r, i.pow(f.degree()));
      acc *= s;
    }
    return MonicPoly(acc);
  };
  return {build(g.mu_i), build(g.nu_i)};
}

BubbleSeries bubble_series(const GCQData& g, int precision) {
  const LocalRing& r = g.ring();
  LaurentSeries O = rational_to_series(g.n.poly(), g.m.poly(), precision);
  LaurentSeries Oinv = O.invert();
  BubbleSeries b{O, Oinv, {}, {}};
  if (!g.param.is_quantum()) {
    // O(u) = sum O^{(r)} u^{-r-1},  O(u)^{-1} = -sum O~^{(r)} u^{-r-1}
    for (int e = O.lead_exp(); e >= O.known_floor(); --e) b.coeffs.emplace(-e - 1, O.coeff_of(e));
    for (int e = Oinv.lead_exp(); e >= Oinv.known_floor(); --e) b.coeffs_tilde.emplace(-e - 1, -Oinv.coeff_of(e));
    return b;
  }
  // O(u) = z t^{-1} sum O^{(r)} u^{-r},  O(u)^{-1} = -z t sum O~^{(r)} u^{-r}
  LocalScalar z(r, g.param.z);
  LocalScalar zinv = z.inv_unit();
  const LocalScalar& t = *g.t;
  LocalScalar tinv = t.inv_unit();
  for (int e = O.lead_exp(); e >= O.known_floor(); --e) b.coeffs.emplace(-e, O.coeff_of(e) * t * zinv);
  for (int e = Oinv.lead_exp(); e >= Oinv.known_floor(); --e)
    b.coeffs_tilde.emplace(-e, -(Oinv.coeff_of(e) * tinv * zinv));
  return b;
}

Report bubble_factorization_check(const GCQData& g, int precision) {
  const LocalRing& r = g.ring();
  const bool quantum = g.param.is_quantum();
  BubbleSeries b = bubble_series(g, precision);
  LaurentSeries anti = LaurentSeries::one(r, precision), clock = LaurentSeries::one(r, precision);
  std::vector<Scalar> vertices;
  for (const auto& [i, f] : g.mu_i) vertices.push_back(i);
  for (const auto& [i, f] : g.nu_i)
    if (!g.mu_i.count(i)) vertices.push_back(i);
  for (const auto& i : vertices) {
    Poly nu = shifted_factor(g.nu_at(i).poly(), i, quantum);
    Poly mu = shifted_factor(g.mu_at(i).poly(), i, quantum);
    LaurentSeries a = ratio_series(nu, mu, precision), c = ratio_series(mu, nu, precision);
    if (quantum) {
      long kap = pairing(g.vertex(i), g.kappa);
      a = a * LocalScalar(r, i.pow(kap));
      c = c * LocalScalar(r, i.pow(-kap));
    }
    anti = anti * a;
    clock = clock * c;
  }
  Report rep;
  rep.checks.push_back(make_check("bubbles", "prod over vertices = O(u)", anti.agrees_with(b.anticlockwise) &&
                                                                          anti.precision() >= precision));
  rep.checks.push_back(make_check("bubbles", "prod over vertices = O(u)^{-1}", clock.agrees_with(b.clockwise)));
  rep.checks.push_back(make_check("bubbles", "O(u) O(u)^{-1} = 1", (b.anticlockwise * b.clockwise).is_one()));
  // The negatively dotted bubbles from the determinant formula.
  const auto& c = b.anticlockwise.coeffs();
  LocalScalar lead = c[0];
  bool det_ok = lead.is_unit();
  if (det_ok) {
    LocalScalar linv = lead.inv_unit();
    std::vector<LocalScalar> f;
    for (const auto& x : c) f.push_back(x * linv);
    for (int j = 0; j < precision && det_ok; ++j)
      det_ok = det_inversion_coeff(f, j) * linv == b.clockwise.coeffs()[j];
  }
  rep.checks.push_back(make_check("bubbles", "determinant formula for O(u)^{-1}", det_ok));
  return rep;
}

Report end_object_checks(const GCQData& g) {
  Report rep;
  const LocalRing& r = g.ring();
  const int N = r.N;
  HeckePtr H1 = HeckeAlgebra::create(g.param, 1, g.m);
  bool unique = false;
  MonicPoly mz = min_poly_over_Z(H1->x(1), H1->one(), &unique);
  rep.checks.push_back(make_check("end(EP)", "min poly of x_1 over Z is m", mz == g.m && unique, mz.str()));
  MonicPoly mk = min_poly(H1->x(1));
  if (N == 1)
    rep.checks.push_back(make_check("end(EP)", "min poly of x_1 over k is m-bar", mk == g.m.residue(), mk.str()));
  else
    rep.checks.push_back(make_check("end(EP)", "residue of the Z-min poly is m-bar", mz.residue() == g.m.residue()));
  int rank = H1->closure_rank();
  rep.checks.push_back(make_check("end(EP)", "dim_k = deg m * dim Z", rank == g.ell * N && H1->k_dim() == rank,
                                  std::to_string(rank)));

  KLRGenerators klr(H1);
  std::size_t expected_blocks = g.mu_i.size();
  rep.checks.push_back(make_check("end(E_iP)", "one block per root of m-bar", klr.blocks().size() == expected_blocks,
                                  std::to_string(klr.blocks().size())));
  for (const auto& blk : klr.blocks()) {
    const Scalar& i = blk.tuple[0];
    MonicPoly mu = g.mu_at(i);
    int dim = block_dimension(blk, H1);
    Check c = make_check("end(E_iP)", "k-dim = deg mu_i * dim Z", dim == mu.degree() * N, std::to_string(dim));
    c.tuple = tuple_strings(blk.tuple);
    rep.checks.push_back(c);
    bool u2 = false;
    MonicPoly my = min_poly_over_Z(klr.dot(1, blk.tuple), blk.element, &u2);
    Check c2 = make_check("end(E_iP)", "min poly of y_1 on the block is mu_i", my == mu && u2, my.str());
    c2.tuple = tuple_strings(blk.tuple);
    rep.checks.push_back(c2);
  }

  // Exponent of (u - i) in the residue of O(u) is <h_i, kappa>.
  std::map<Scalar, int, ScalarLess> mult;
  if (g.n.degree() > 0)
    for (const auto& [root, e] : split_roots(g.n.residue().poly())) mult[root] += e;
  if (g.m.degree() > 0)
    for (const auto& [root, e] : split_roots(g.m.residue().poly())) mult[root] -= e;
  for (const auto& [i, e] : mult) {
    Check c = make_check("weights", "order of O-bar at i is <h_i, kappa>", e == pairing(g.vertex(i), g.kappa));
    c.tuple = {i.str()};
    rep.checks.push_back(c);
  }
  rep.checks.push_back(make_check("weights", "sum of <h_i, kappa> is k", central_charge(g.kappa) == g.k));
  auto [m2, n2] = reconstruct(g);
  rep.checks.push_back(make_check("weights", "m, n rebuilt from mu_i, nu_i", m2 == g.m && n2 == g.n));

  const int P = g.m.degree() + g.n.degree() + 2;
  LaurentSeries O = rational_to_series(g.n.poly(), g.m.poly(), P);
  LaurentSeries prod = LaurentSeries::from_poly(g.m.poly(), P) * O;
  rep.checks.push_back(make_check("monic transfer", "O(u) m(u) = n(u)", prod.agrees_with(LaurentSeries::from_poly(g.n.poly(), P)) &&
                                                                   prod.lead_exp() == g.n.degree()));
  return rep;
}

Report quantum_t_check(const GCQData& g, int d_max) {
  Report rep;
  if (!g.param.is_quantum()) return rep;
  const LocalRing& r = g.ring();
  const LocalScalar& t = *g.t;
  LocalScalar ratio = g.m.coeff(0) * g.n.coeff(0).inv_unit();
  rep.checks.push_back(make_check("tparam", "t^2 = m(0)/n(0)", t * t == ratio, t.str()));
  auto root = distinguished_sqrt(ratio.residue(), g.sqrt);
  rep.checks.push_back(make_check("tparam", "residue of t is the distinguished root", root && *root == t.residue(),
                                  t.residue().str()));
  (void)r;
  const Scalar t0sq = t.residue() * t.residue();
  for (int d = 0; d <= d_max; ++d) {
    HeckePtr H = HeckeAlgebra::create(g.param, d, g.m);
    for (const auto& blk : block_idempotents(H)) {
      Weight lambda = g.kappa;
      for (const auto& i : blk.tuple) lambda += alpha(g.vertex(i), g.quiver);
      Scalar prod(1, r.field);
      for (const auto& [v, c] : lambda.support()) prod *= (-g.quiver.value(v)).pow(-c);
      Check ck = make_check("tparam", "t^2 residue = prod (-i)^{-<h_i, lambda>}", prod == t0sq, prod.str());
      ck.tuple = tuple_strings(blk.tuple);
      ck.indices = {d};
      rep.checks.push_back(ck);
    }
  }
  return rep;
}

Report spectral_closure_check(const GCQData& g, int d_max) {
  Report rep;
  for (int d = 1; d <= d_max; ++d) {
    HeckePtr H = HeckeAlgebra::create(g.param, d, g.m);
    for (int r = 1; r <= d; ++r)
      for (const auto& i : spectrum(r, H)) {
        Check c = make_check("closure", "eigenvalue of x_r lies in I", g.quiver.locate(i).has_value());
        c.tuple = {i.str()};
        c.indices = {d, r};
        rep.checks.push_back(c);
      }
  }
  return rep;
}

std::vector<DimRow> dim_report(const GCQData& g, int d_max, bool with_blocks) {
  std::vector<DimRow> rows;
  const int N = g.ring().N;
  for (int d = 0; d <= d_max; ++d) {
    HeckePtr H = HeckeAlgebra::create(g.param, d, g.m);
    DimRow row;
    row.d = d;
    row.relations_hold = H->verify_operator_relations().failures.empty();
    row.computed = H->closure_rank();
    long pred = factorial(d) * N;
    for (int j = 0; j < d; ++j) pred *= g.ell;
    row.predicted = pred;
    if (with_blocks) {
      for (const auto& blk : block_idempotents(H)) {
        BlockDim b;
        b.tuple = blk.tuple;
        b.weight = g.kappa;
        for (const auto& i : blk.tuple) b.weight += alpha(g.vertex(i), g.quiver);
        b.k_dim = block_dimension(blk, H);
        row.blocks.push_back(std::move(b));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json weight_json(const Weight& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& tr : w.triples()) out.push_back({tr[0], tr[1], tr[2]});
  return out;
}

nlohmann::json to_json(const GCQData& g) {
  nlohmann::json j;
  j["field"] = g.ring().field.str();
  j["N"] = g.ring().N;
  j["case"] = g.param.is_quantum() ? "quantum" : "degenerate";
  if (g.param.is_quantum()) {
    j["q"] = g.param.q->str();
    j["z"] = g.param.z.str();
    j["t"] = g.t->str();
  }
  j["m"] = g.m.poly().to_strings();
  j["n"] = g.n.poly().to_strings();
  j["k"] = g.k;
  j["ell"] = g.ell;
  nlohmann::json verts = nlohmann::json::array();
  std::map<Vertex, Scalar> seen;
  for (const auto& [i, f] : g.mu_i) seen.emplace(g.vertex(i), i);
  for (const auto& [i, f] : g.nu_i) seen.emplace(g.vertex(i), i);
  for (const auto& [v, i] : seen) {
    nlohmann::json e;
    e["orbit"] = v.orbit;
    e["offset"] = v.offset;
    e["value"] = i.str();
    e["mu_i"] = g.mu_at(i).poly().to_strings();
    e["nu_i"] = g.nu_at(i).poly().to_strings();
    verts.push_back(e);
  }
  j["vertices"] = verts;
  j["mu"] = weight_json(g.mu);
  j["nu"] = weight_json(g.nu);
  j["kappa"] = weight_json(g.kappa);
  return j;
}

}  // namespace heis
