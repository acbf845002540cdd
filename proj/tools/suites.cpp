#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "rootharm/ghecke.hpp"
#include "rootharm/hyper.hpp"
#include "rootharm/jacobi.hpp"
#include "rootharm/satake.hpp"
#include "rootharm/shift.hpp"

namespace rootharm::cli {

namespace {

struct Case {
  std::string label;
  std::string k;
  int height;
};

// Default cases, narrowed by --type and overridden by --k / --height.
std::vector<Case> resolve(std::vector<Case> defaults, const RunConfig& cfg) {
  std::string label = cfg.label();
  if (!label.empty()) {
    std::vector<Case> kept;
    for (const auto& c : defaults)
      if (c.label == label) kept.push_back(c);
    if (kept.empty()) kept.push_back({label, defaults.front().k, defaults.front().height});
    defaults = kept;
  }
  std::vector<Case> out;
  for (auto c : defaults) {
    if (!cfg.k.empty()) c.k = cfg.k;
    if (cfg.height >= 0) c.height = cfg.height;
    bool dup = std::any_of(out.begin(), out.end(), [&](const Case& o) {
      return o.label == c.label && o.k == c.k && o.height == c.height;
    });
    if (!dup) out.push_back(c);
  }
  return out;
}

Multiplicity multiplicity(const RootDatum& rd, const std::string& text) {
  try {
    return Multiplicity::parse(rd, text);
  } catch (const std::exception& e) {
    throw ConfigError("bad --k '" + text + "' for " + rd.label() + ": " + e.what());
  }
}

RootDatum datum(const std::string& label) {
  try {
    return RootDatum::build(label);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Json case_json(const Case& c) { return Json{{"type", c.label}, {"k", c.k}, {"height", c.height}}; }

// Runs `body` on every case and folds the results under details["cases"].
Report per_case(const std::string& relation, const std::vector<Case>& cases,
                const std::function<void(const Case&, const Multiplicity&, Report&)>& body) {
  Report rep(relation);
  Json log = Json::array();
  for (const auto& c : cases) {
    RootDatum rd = datum(c.label);
    Multiplicity k = multiplicity(rd, c.k);
    Report sub(relation);
    sub.details["case"] = case_json(c);
    try {
      body(c, k, sub);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      // Degenerate parameters surface as exceptions from the modules; they are failures, not crashes.
      sub.fail(Json{{"exception", e.what()}});
    }
    log.push_back(sub.to_json());
    if (!sub.pass) rep.fail(Json{{"case", case_json(c)}, {"witness", sub.witness}});
  }
  rep.details["cases"] = log;
  return rep;
}

// Moves a module check into the case report.
void merge(Report& into, const Report& sub) {
  Json entry = sub.to_json();
  into.details["checks"].push_back(entry);
  if (!sub.pass) into.fail(Json{{"relation", sub.relation}, {"witness", sub.witness}});
}

LaurentPolynomial monomial1(int m) {
  Weight w;
  w.c[0] = m;
  return LaurentPolynomial::monomial(w);
}

const std::vector<Case> kDunklTypes = {{"A2", "symbolic", 4}, {"B2", "symbolic", 4}, {"BC1", "symbolic", 4}};

Report commutativity(const RunConfig& cfg) {
  return per_case("T(xi,k) T(eta,k) = T(eta,k) T(xi,k)", resolve(kDunklTypes, cfg),
                  [](const Case& c, const Multiplicity& k, Report& rep) {
                    merge(rep, check_commutativity(DunklFamily(k), c.height));
                  });
}

Report hecke(const RunConfig& cfg) {
  return per_case("Hecke relations of eta", resolve(kDunklTypes, cfg),
                  [&](const Case& c, const Multiplicity& k, Report& rep) {
                    merge(rep, check_hecke_relations(DunklFamily(k), c.height));
                    merge(rep, check_algebra_axioms(GradedHeckeAlgebra(k), cfg.seed, 8));
                  });
}

Report center(const RunConfig& cfg) {
  std::vector<Case> defaults = {{"A1", "symbolic", 4}, {"A2", "symbolic", 3}, {"B2", "symbolic", 4},
                                {"BC1", "symbolic", 4}, {"G2", "symbolic", 2}};
  return per_case("W-invariant polynomials are central", resolve(defaults, cfg),
                  [](const Case& c, const Multiplicity& k, Report& rep) {
                    const RootDatum& rd = k.datum();
                    GradedHeckeAlgebra H(k);
                    int count = 0;
                    for (const auto& p : invariants_up_to(rd, c.height)) {
                      merge(rep, H.is_central(HeckeElement::polynomial(p)));
                      ++count;
                    }
                    rep.details["invariants"] = count;
                  });
}

Report adjoint(const RunConfig& cfg) {
  std::vector<Case> defaults;
  for (const char* t : {"A1", "A2"})
    for (const char* kv : {"0", "1", "2"}) defaults.push_back({t, kv, std::string(t) == "A1" ? 5 : 3});
  return per_case("<T(xi,k) f, g>_k = <f, T(conj xi,k) g>_k", resolve(defaults, cfg),
                  [](const Case& c, const Multiplicity& k, Report& rep) {
                    merge(rep, check_adjointness(DunklFamily(k), c.height));
                  });
}

const std::vector<Case> kJacobiCases = {{"A1", "1", 4}, {"A1", "2", 4}, {"A1", "3", 4}, {"BC1", "1,1", 4}, {"A2", "1", 2}};

Report jacobi_orthogonality(const RunConfig& cfg) {
  return per_case("E(mu,k) are orthogonal eigenfunctions", resolve(kJacobiCases, cfg),
                  [](const Case& c, const Multiplicity& k, Report& rep) {
                    JacobiSystem J(k);
                    merge(rep, check_eigenfunctions(J, c.height));
                    merge(rep, check_orthogonality(J, c.height));
                  });
}

Report norms(const RunConfig& cfg) {
  return per_case("||E(mu,k)||^2 from the constant term equals the Gamma formula", resolve(kJacobiCases, cfg),
                  [](const Case& c, const Multiplicity& k, Report& rep) {
                    JacobiSystem J(k);
                    Report orth = check_orthogonality(J, c.height);
                    if (orth.pass) {
                      rep.details["<1,1>"] = orth.details["constant_term"];
                      rep.details["norms"] = orth.details["norms"];
                    } else {
                      rep.fail(orth.witness);
                    }
                  });
}

Scalar factorial(long n) {
  Scalar f(1);
  for (long i = 2; i <= n; ++i) f *= Scalar(i);
  return f;
}

Report constant_term(const RunConfig& cfg) {
  std::vector<Case> defaults = {{"A1", "1", 0}, {"A1", "2", 0}, {"A1", "3", 0}, {"A2", "1", 0},
                                {"A2", "2", 0}, {"A3", "1", 0}, {"BC1", "1,1", 0}, {"B2", "1,1", 0}};
  return per_case("<1,1>_k by the constant term", resolve(defaults, cfg),
                  [](const Case&, const Multiplicity& k, Report& rep) {
                    const RootDatum& rd = k.datum();
                    if (!k.is_nonnegative_integer()) throw ConfigError("constant-term needs nonnegative integer k");
                    Scalar ct = constant_term_value(k);
                    Scalar gamma = norm_formula(k, Weight{});
                    rep.details["<1,1>"] = ct.to_string();
                    rep.details["gamma_formula"] = gamma.to_string();
                    if (ct != gamma) rep.fail(Json{{"constant_term", ct.to_string()}, {"gamma_formula", gamma.to_string()}});
                    // Type A: (nk)! / (k!)^n / n! with n = rank + 1.
                    if (rd.label()[0] == 'A') {
                      long n = rd.rank() + 1;
                      Rational kv = k.values()[0].rational_value();
                      long kk = kv.get_num().get_si();
                      Scalar dyson = factorial(n * kk);
                      for (long i = 0; i < n; ++i) dyson /= factorial(kk);
                      dyson /= factorial(n);
                      rep.details["dyson"] = dyson.to_string();
                      if (ct != dyson) rep.fail(Json{{"constant_term", ct.to_string()}, {"dyson", dyson.to_string()}});
                    }
                  });
}

const std::vector<Case> kRaiseCases = {{"A1", "symbolic", 5}, {"A2", "symbolic", 5}, {"BC1", "symbolic", 5}};

Report shift_raise(const RunConfig& cfg) {
  return per_case("G_+(k) D(p,k) = D(p,k+1) G_+(k)", resolve(kRaiseCases, cfg),
                  [](const Case& c, const Multiplicity& k, Report& rep) {
                    ShiftOperator g = heckman_shift(1, k, c.height);
                    merge(rep, check_heckman_shift(g, c.height));
                    if (k.datum().rank() == 1 && k.datum().orbit_count() == 1) {
                      Report ex("G_+(X+X^-1) = 1, G_+(1) = 0");
                      LaurentPolynomial one = heckman_apply(1, k, monomial1(1) + monomial1(-1));
                      LaurentPolynomial zero = heckman_apply(1, k, monomial1(0));
                      if (one != monomial1(0)) ex.fail(Json{{"G(X+X^-1)", one.to_string(k.datum())}});
                      if (!zero.is_zero()) ex.fail(Json{{"G(1)", zero.to_string(k.datum())}});
                      merge(rep, ex);
                    }
                  });
}

Report shift_nonsym(const RunConfig& cfg) {
  std::vector<Case> defaults = {{"A1", "symbolic", 6}, {"BC1", "symbolic", 6}, {"A2", "symbolic", 3}};
  return per_case("S(k) T(xi,k) = T(xi,k+1) S(k), unique", resolve(defaults, cfg),
                  [](const Case& c, const Multiplicity& k, Report& rep) {
                    try {
                      ShiftOperator s = nonsymmetric_shift(k, c.height);
                      rep.details["kernel_dimension"] = s.certificate["kernel_dimension"];
                      rep.details["unknowns"] = s.certificate["unknowns"];
                      merge(rep, check_nonsymmetric_shift(s, c.height));
                      if (k.datum().rank() == 1) merge(rep, compare_with_closed_form(s, c.height));
                    } catch (const NonUnique& e) {
                      rep.details["kernel_dimension"] = e.kernel_dimension;
                      rep.fail(Json{{"error", e.what()}, {"kernel_dimension", e.kernel_dimension}});
                    } catch (const NoSolution& e) {
                      rep.fail(Json{{"error", e.what()}});
                    }
                  });
}

Report shift_compose(const RunConfig& cfg) {
  std::vector<Case> defaults = {{"A1", "symbolic", 4}, {"BC1", "symbolic", 4}};
  return per_case("S(k)^bullet S(k) and S(k)^* S(k) products", resolve(defaults, cfg),
                  [](const Case& c, const Multiplicity& k, Report& rep) {
                    merge(rep, composition_identities(k, c.height));
                  });
}

Report shift_lowering(const RunConfig& cfg) {
  std::vector<Case> defaults = {{"A1", "1", 3}, {"A1", "2", 3}, {"BC1", "1", 3}, {"BC1", "2", 3}};
  return per_case("e_+ S_-(k) = e_+ G_-(k); no nonsymmetric lowering operator", resolve(defaults, cfg),
                  [](const Case& c, const Multiplicity& k, Report& rep) {
                    for (auto kind : {ShiftKind::LowerBullet, ShiftKind::LowerTilde})
                      merge(rep, check_adjoint_shift(adjoint_shift(kind, k, c.height), c.height));
                    merge(rep, nonexistence_probe(k, c.height));
                  });
}

Report radial(const RunConfig& cfg) {
  std::vector<Case> defaults = {{"A1", "symbolic", 6}, {"A2", "symbolic", 4}};
  return per_case("coth-form Laplacian = D(p2,k) - (rho,rho)", resolve(defaults, cfg),
                  [](const Case& c, const Multiplicity& k, Report& rep) {
                    merge(rep, check_radial_laplacian(DunklFamily(k), c.height));
                  });
}

HeckeParam hecke_param(const RootDatum& rd, const std::string& text) {
  try {
    return HeckeParam::parse(rd, text);
  } catch (const std::exception& e) {
    throw ConfigError("bad --q '" + text + "' for " + rd.label() + ": " + e.what());
  }
}

Report satake(const RunConfig& cfg) {
  std::vector<Case> defaults = {{"A1", "symbolic", 4}, {"A2", "symbolic", 2}, {"B2", "symbolic", 2},
                                {"G2", "symbolic", 2}, {"A2", "3", 3}};
  std::vector<Case> cases = resolve(defaults, cfg);
  if (!cfg.q.empty())
    for (auto& c : cases) c.k = cfg.q;
  if (cfg.k.empty() && cfg.q.empty() && !cfg.label().empty())
    for (auto& c : cases) c.k = "symbolic";
  Report rep("Satake images are pole-free W-invariant and match the tree count");
  Json log = Json::array();
  for (const auto& c : cases) {
    RootDatum rd = datum(c.label);
    Report sub = check_satake(hecke_param(rd, c.k), c.height);
    sub.details["case"] = Json{{"type", c.label}, {"q", c.k}, {"height", c.height}};
    log.push_back(sub.to_json());
    if (!sub.pass) rep.fail(Json{{"case", sub.details["case"]}, {"witness", sub.witness}});
  }
  if (cfg.label().empty() || cfg.label() == "A1")
    for (long q : {2L, 3L}) {
      Report tree = check_tree_oracle(5, q);
      log.push_back(tree.to_json());
      if (!tree.pass) rep.fail(Json{{"tree_q", q}, {"witness", tree.witness}});
    }
  rep.details["cases"] = log;
  return rep;
}

Report hyper_rank1(const RunConfig&) { return check_hyper_rank1(); }

using SuiteFn = Report (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"commutativity", commutativity},
      {"hecke", hecke},
      {"adjoint", adjoint},
      {"center", center},
      {"jacobi-orthogonality", jacobi_orthogonality},
      {"norms", norms},
      {"constant-term", constant_term},
      {"shift-raise", shift_raise},
      {"shift-nonsym", shift_nonsym},
      {"shift-compose", shift_compose},
      {"shift-lowering-nonexist", shift_lowering},
      {"satake", satake},
      {"radial-laplacian", radial},
      {"hyper-rank1", hyper_rank1},
  };
  return r;
}

// ---------------------------------------------------------------------------
// tables

std::vector<int> lambda_range(const std::string& text) {
  std::vector<int> out;
  auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
      for (int m = lo; m <= hi; ++m) out.push_back(m);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    throw ConfigError("bad --lambda '" + text + "'");
  }
  return out;
}

std::string single_label(const RunConfig& cfg, const char* fallback) {
  std::string l = cfg.label();
  return l.empty() ? fallback : l;
}

Json table_e(const RunConfig& cfg, bool symmetric) {
  RootDatum rd = datum(single_label(cfg, "A1"));
  Multiplicity k = multiplicity(rd, cfg.k.empty() ? "symbolic" : cfg.k);
  int h = cfg.height >= 0 ? cfg.height : 2;
  JacobiSystem J(k);
  Json rows = Json::array();
  if (symmetric) {
    for (int d = 0; d <= h; ++d)
      for (const auto& lambda : rd.dominant_of_height(d))
        rows.push_back(Json{{"lambda", rd.weight_string(lambda)}, {"P", J.symmetric(lambda).to_string(rd)}});
  } else {
    for (const auto& mu : truncation_basis(rd, h)) {
      Json row{{"mu", rd.weight_string(mu)}, {"E", J.nonsymmetric(mu).to_string(rd)}};
      row["eigenvalue"] = Json::array();
      for (const auto& v : J.eigenvalue(mu)) row["eigenvalue"].push_back(v.to_string());
      rows.push_back(row);
    }
  }
  return rows;
}

Json table_satake(const RunConfig& cfg) {
  RootDatum rd = datum(single_label(cfg, "A1"));
  HeckeParam q = hecke_param(rd, cfg.q.empty() ? "symbolic" : cfg.q);
  std::vector<Weight> lambdas;
  if (!cfg.lambda.empty()) {
    if (rd.rank() != 1) throw ConfigError("--lambda is only accepted in rank one");
    for (int m : lambda_range(cfg.lambda)) {
      if (m < 0) throw ConfigError("--lambda must be dominant");
      Weight w;
      w.c[0] = m;
      lambdas.push_back(w);
    }
  } else {
    int h = cfg.height >= 0 ? cfg.height : 2;
    for (int d = 0; d <= h; ++d)
      for (const auto& l : rd.dominant_of_height(d)) lambdas.push_back(l);
  }
  Json rows = Json::array();
  for (const auto& l : lambdas) {
    try {
      rows.push_back(Json{{"lambda", rd.weight_string(l)},
                          {"satake_image", satake_image(l, q).to_string(rd)},
                          {"spherical_value", spherical_value(l, q).to_string(rd)}});
    } catch (const PoleCancellationFailure& e) {
      rows.push_back(Json{{"lambda", rd.weight_string(l)}, {"error", e.what()}});
    }
  }
  return rows;
}

Json table_cfun(const RunConfig& cfg) {
  RootDatum rd = datum(single_label(cfg, "A1"));
  Multiplicity k = multiplicity(rd, cfg.k.empty() ? "symbolic" : cfg.k);
  Spectral lambda;
  for (int j = 0; j < rd.rank(); ++j) lambda.push_back(Scalar::variable("l" + std::to_string(j + 1)));
  Json rows = Json::array();
  rows.push_back(Json{{"name", "c_tilde"}, {"value", c_tilde(k, lambda, 0).to_string()}});
  rows.push_back(Json{{"name", "c_star"}, {"value", c_star(k, lambda, 0).to_string()}});
  rows.push_back(Json{{"name", "c"}, {"value", c_normalized(k, lambda).to_string()}});
  try {
    rows.push_back(Json{{"name", "c_padic"}, {"value", c_padic(HeckeParam::symbolic(rd)).to_string(rd)}});
  } catch (const PoleCancellationFailure& e) {
    rows.push_back(Json{{"name", "c_padic"}, {"value", std::string("unavailable: ") + e.what()}});
  }
  return rows;
}

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

std::string RunConfig::label() const {
  if (type.empty()) return {};
  bool has_digit = std::any_of(type.begin(), type.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (has_digit) {
    if (rank > 0 && type.substr(type.find_first_of("0123456789")) != std::to_string(rank))
      throw ConfigError("--rank " + std::to_string(rank) + " conflicts with --type " + type);
    return type;
  }
  if (rank <= 0) throw ConfigError("--type " + type + " needs --rank");
  return type + std::to_string(rank);
}

void RunConfig::validate() const {
  if (format != "json" && format != "csv") throw ConfigError("--format must be json or csv");
  if (height < -1) throw ConfigError("--height must be nonnegative");
  if (rank < 0) throw ConfigError("--rank must be positive");
  std::string l = label();
  if (!l.empty()) datum(l);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds = {"E", "P", "satake", "cfun"};
  return kinds;
}

Report run_suite(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  for (const auto& [n, fn] : registry())
    if (n == name) {
      Report r = fn(cfg);
      r.details["suite"] = name;
      return r;
    }
  throw ConfigError("unknown suite '" + name + "'");
}

Json make_table(const std::string& kind, const RunConfig& cfg) {
  cfg.validate();
  if (kind == "E") return table_e(cfg, false);
  if (kind == "P") return table_e(cfg, true);
  if (kind == "satake") return table_satake(cfg);
  if (kind == "cfun") return table_cfun(cfg);
  throw ConfigError("unknown table '" + kind + "'");
}

std::string render_report(const Report& r, const std::string& format) {
  if (format == "json") return r.to_json().dump(2) + "\n";
  std::string out = "relation,status,witness\n";
  out += csv_field(r.relation) + "," + (r.pass ? "pass" : "fail") + "," + csv_field(r.witness.is_null() ? Json("") : r.witness) + "\n";
  return out;
}

std::string render_table(const Json& rows, const std::string& format) {
  if (format == "json") return rows.dump(2) + "\n";
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [key, v] : row.items())
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      out += (i ? "," : "") + (row.contains(cols[i]) ? csv_field(row[cols[i]]) : std::string());
    out += "\n";
  }
  return out;
}

}  // namespace rootharm::cli
