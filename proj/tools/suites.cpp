#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "json.hpp"

#include "cdv/clifford.hpp"
#include "cdv/instanton.hpp"
#include "cdv/nrmoduli.hpp"
#include "cdv/oddmoduli.hpp"
#include "cdv/repsl2.hpp"
#include "cdv/thetachar.hpp"

namespace cdv::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "skipped";
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.status == Status::Pass; });
}

bool all_passed(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"clifford", "instanton", "nr", "odd", "parity", "repsl2", "theta"};
  return names;
}

std::vector<std::string> expand_suite(const std::string& name) {
  if (name == "all") return suite_names();
  const auto& all = suite_names();
  if (std::find(all.begin(), all.end(), name) == all.end()) throw UsageError("unknown suite: " + name);
  return {name};
}

namespace {

Rational parse_rational(const std::string& tok) {
  Rational q;
  if (tok.empty() || q.set_str(tok, 10) != 0) throw UsageError("not a rational number: '" + tok + "'");
  if (tok.find('/') != std::string::npos && sgn(q.get_den()) == 0) throw UsageError("zero denominator: " + tok);
  q.canonicalize();
  return q;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    out.push_back(tok);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

}  // namespace

std::vector<Rational> parse_rational_csv(const std::string& csv) {
  std::vector<Rational> out;
  for (const auto& t : split_csv(csv)) out.push_back(parse_rational(t));
  return out;
}

std::vector<int> parse_int_csv(const std::string& csv) {
  std::vector<int> out;
  for (const auto& t : split_csv(csv)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size()) throw UsageError("not an integer: '" + t + "'");
    out.push_back(v);
  }
  return out;
}

hyperell::HyperCurve parse_curve(const std::string& text) {
  std::istringstream in(text);
  std::string line1, line2;
  if (!std::getline(in, line1) || !std::getline(in, line2)) throw UsageError("curve fixture: expected two lines");
  int genus = 0;
  {
    std::istringstream g(line1);
    std::string extra;
    if (!(g >> genus) || (g >> extra)) throw UsageError("curve fixture: line 1 must be the genus");
  }
  std::vector<Rational> coeffs;
  std::istringstream c(line2);
  std::string tok;
  while (c >> tok) coeffs.push_back(parse_rational(tok));
  if (coeffs.empty()) throw UsageError("curve fixture: no coefficients");
  try {
    return hyperell::HyperCurve::from_coefficients(genus, UPoly(coeffs));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("curve fixture: ") + e.what());
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Runs `body`, which fills details and returns the verdict; exceptions
/// become failures with the message as the counterexample.
CheckReport check(const std::string& name, const std::function<bool(CheckReport&)>& body) {
  CheckReport r;
  r.name = name;
  auto t0 = Clock::now();
  try {
    r.status = body(r) ? Status::Pass : Status::Fail;
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.add("counterexample", std::string("exception: ") + e.what());
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

template <class T>
std::string csv(const std::vector<T>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) {
    if constexpr (std::is_same_v<T, Rational>)
      parts.push_back(cdv::to_string(x));
    else
      parts.push_back(std::to_string(x));
  }
  return join(parts, ",");
}

// ---- clifford ----------------------------------------------------------------

std::string mv_string(const clifford::MV& w) {
  std::vector<std::string> parts;
  for (clifford::Blade b = 0; b < 16; ++b)
    if (sgn(w[b]) != 0) parts.push_back(cdv::to_string(w[b]) + "*" + clifford::blade_name(b));
  return parts.empty() ? "0" : join(parts, " + ");
}

std::vector<std::pair<std::string, std::string>> clifford_convention() {
  auto rec = clifford::asd_chirality_record();
  return {{"orientation", "e1e2e3e4"},
          {"star3_sign", clifford::calibrated_star().three_form_sign < 0 ? "-1" : "+1"},
          {"asd_acts_on", rec.acted_on == clifford::Chirality::Plus ? "S+" : "S-"}};
}

clifford::MV basis_vector(int i) {
  clifford::MV a;
  a[clifford::Blade(1u << (i - 1))] = 1;
  return a;
}

SuiteReport clifford_suite(const Options&) {
  SuiteReport s{"clifford", {}, 0};
  auto asd = clifford::asd_basis();
  auto sd = clifford::sd_basis();
  s.checks.push_back(check("decomposition_identity_asd", [&](CheckReport& r) {
    int held = 0;
    for (int i = 1; i <= 4; ++i)
      for (std::size_t k = 0; k < 3; ++k) {
        if (clifford::decomposition_identity_holds(basis_vector(i), asd[k])) {
          ++held;
        } else {
          r.add("counterexample", "e" + std::to_string(i) + " . (" + mv_string(asd[k]) + ")");
          return false;
        }
      }
    r.add("pairs", std::to_string(held));
    return held == 12;
  }));
  s.checks.push_back(check("sandwich_asd_zero", [&](CheckReport& r) {
    for (std::size_t k = 0; k < 3; ++k) {
      clifford::MV v = clifford::identity_sandwich(asd[k]);
      if (!v.is_zero()) {
        r.add("counterexample", "sum e_i (" + mv_string(asd[k]) + ") e_i = " + mv_string(v));
        return false;
      }
    }
    r.add("forms", "3");
    return true;
  }));
  s.checks.push_back(check("sd_decomposition_control", [&](CheckReport& r) {
    int failed = 0;
    for (int i = 1; i <= 4; ++i)
      for (std::size_t k = 0; k < 3; ++k) failed += !clifford::decomposition_identity_holds(basis_vector(i), sd[k]);
    r.add("sd_pairs_violating_identity", std::to_string(failed));
    std::vector<std::string> sums;
    for (const auto& w : sd) sums.push_back(mv_string(clifford::sandwich_sum(w)));
    r.add("sd_sandwich_sums", join(sums, "; "));
    if (failed != 12) r.add("counterexample", "identity held on " + std::to_string(12 - failed) + " SD pairs");
    return failed == 12;
  }));
  s.checks.push_back(check("chirality", [&](CheckReport& r) {
    auto rec = clifford::asd_chirality_record();
    r.add("annihilated", rec.annihilated == clifford::Chirality::Plus ? "S+" : "S-");
    r.add("acted_on", rec.acted_on == clifford::Chirality::Plus ? "S+" : "S-");
    if (!rec.consistent) r.add("counterexample", "ASD basis forms disagree on the annihilated block");
    return rec.consistent;
  }));
  for (auto& c : s.checks) c.convention = clifford_convention();
  return s;
}

// ---- instanton ---------------------------------------------------------------

const std::vector<std::array<Gaussian, 4>>& probe_points() {
  static const std::vector<std::array<Gaussian, 4>> p{{Gaussian(1), Gaussian(0), Gaussian(2), Gaussian(-1)},
                                                      {Gaussian(Rational(1, 2)), Gaussian(1), Gaussian(-1), Gaussian(3)},
                                                      {Gaussian(2), Gaussian(-3), Gaussian(1), Gaussian(5)}};
  return p;
}

std::string point_string(const std::array<Gaussian, 4>& x) {
  std::vector<std::string> parts;
  for (const auto& v : x) parts.push_back(cdv::to_string(v));
  return "(" + join(parts, ",") + ")";
}

/// Names entry (i, j) of a nonzero matrix together with a nonzero value at a probe point.
std::optional<std::string> nonzero_mat(const instanton::Mat2& m, const std::string& label) {
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      if (m(i, j).is_zero()) continue;
      std::string where = label + " entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (const auto& x : probe_points()) {
        Gaussian v = m.evaluate(x)[2 * i + j];
        if (!cdv::is_zero(v)) return where + " = " + cdv::to_string(v) + " at x=" + point_string(x);
      }
      return where + " = " + m(i, j).to_string();
    }
  return std::nullopt;
}

std::optional<std::string> nonzero_component(const instanton::CoupledSpinor& psi, const std::string& label) {
  for (std::size_t c = 0; c < 4; ++c)
    if (auto w = nonzero_mat(psi[c], label + " component " + std::to_string(c))) return w;
  return std::nullopt;
}

SuiteReport instanton_suite(const Options& opt) {
  SuiteReport s{"instanton", {}, 0};
  instanton::Connection a = opt.scale_a1 ? instanton::scaled_bpst(Gaussian(*opt.scale_a1)) : instanton::bpst_connection();
  instanton::CurvatureForm f = instanton::curvature(a);
  s.checks.push_back(check("curvature_asd", [&](CheckReport& r) {
    auto split = instanton::sd_asd_split(f);
    for (std::size_t k = 0; k < 6; ++k) {
      auto [mu, nu] = instanton::pair_of(k);
      auto w = nonzero_mat(split.plus.f[k], "F+_" + std::to_string(mu + 1) + std::to_string(nu + 1));
      if (w) {
        r.add("counterexample", *w);
        return false;
      }
    }
    r.add("self_dual_part", "0");
    return true;
  }));
  s.checks.push_back(check("bianchi", [&](CheckReport& r) {
    auto res = instanton::bianchi_residual(a, f);
    for (std::size_t k = 0; k < res.size(); ++k)
      if (auto w = nonzero_mat(res[k], "bianchi[" + std::to_string(k) + "]")) {
        r.add("counterexample", *w);
        return false;
      }
    r.add("triples", "4");
    return true;
  }));
  s.checks.push_back(check("yang_mills", [&](CheckReport& r) {
    auto res = instanton::yang_mills_residual(a);
    for (std::size_t k = 0; k < res.size(); ++k)
      if (auto w = nonzero_mat(res[k], "yang_mills[nu=" + std::to_string(k + 1) + "]")) {
        r.add("counterexample", *w);
        return false;
      }
    r.add("components", "4");
    return true;
  }));
  auto basis = instanton::twistor_basis();
  std::vector<instanton::CoupledSpinor> produced;
  for (const auto& psi : basis) produced.push_back(instanton::curvature_action(f, psi));
  s.checks.push_back(check("twistor_basis", [&](CheckReport& r) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      auto res = instanton::twistor_residual(basis[k]);
      for (std::size_t i = 0; i < res.size(); ++i)
        for (std::size_t c = 0; c < 4; ++c)
          if (!res[i][c].is_zero()) {
            r.add("counterexample", "twistor residual of basis " + std::to_string(k) + " at index " + std::to_string(i));
            return false;
          }
    }
    r.add("solutions", std::to_string(basis.size()));
    return true;
  }));
  s.checks.push_back(check("coupled_dirac", [&](CheckReport& r) {
    bool ok = true;
    for (std::size_t k = 0; k < produced.size(); ++k) {
      auto w = nonzero_component(instanton::coupled_dirac(a, produced[k]), "D_A(F.psi_" + std::to_string(k) + ")");
      r.add("psi_" + std::to_string(k), w ? "nonzero" : "0");
      if (w && ok) {
        r.add("counterexample", *w);
        ok = false;
      }
    }
    return ok;
  }));
  s.checks.push_back(check("evaluation_rank", [&](CheckReport& r) {
    std::size_t rank = instanton::evaluation_rank(produced);
    r.add("rank", std::to_string(rank));
    r.add("expected", "4k with k=1");
    if (rank != 4) r.add("counterexample", "rank " + std::to_string(rank) + " != 4");
    return rank == 4;
  }));
  const std::string conv = instanton::instanton_convention().describe();
  for (auto& c : s.checks) {
    c.convention = {{"instanton", conv}, {"orientation", "e1e2e3e4"}};
    if (opt.scale_a1) c.convention.emplace_back("scale_a1", cdv::to_string(*opt.scale_a1));
  }
  return s;
}

// ---- repsl2 ------------------------------------------------------------------

SuiteReport repsl2_suite(const Options& opt) {
  SuiteReport s{"repsl2", {}, 0};
  for (int m : opt.m) {
    const std::string tag = "m=" + std::to_string(m);
    auto report_check = [&](const std::string& name, repsl2::Sl2Report (*fn)(int)) {
      s.checks.push_back(check(name + "[" + tag + "]", [&](CheckReport& r) {
        repsl2::Sl2Report rep = fn(m);
        r.add("cases", std::to_string(rep.cases));
        if (!rep.passed()) r.add("counterexample", rep.describe_failures());
        return rep.passed();
      }));
    };
    report_check("invariance", &repsl2::invariance_check);
    report_check("equivariance", &repsl2::equivariance_check);
    s.checks.push_back(check("commutation[" + tag + "]", [&](CheckReport& r) {
      bool ok = repsl2::commutation_check(m);
      if (!ok) r.add("counterexample", "bracket relation violated on S^" + std::to_string(m));
      return ok;
    }));
    s.checks.push_back(check("top_transvectant[" + tag + "]", [&](CheckReport& r) {
      bool ok = repsl2::top_transvectant_check(m);
      r.add("constant", cdv::to_string(repsl2::top_transvectant_constant(m)));
      if (!ok) r.add("counterexample", "(u,v)_m != m! w(u,v) on S^" + std::to_string(m));
      return ok;
    }));
  }
  s.checks.push_back(check("nilpotency_m1", [&](CheckReport& r) {
    Poly<Rational> d = repsl2::nilpotency_determinant_m1();
    r.add("determinant", d.to_string());
    if (!d.is_zero()) r.add("counterexample", d.to_string());
    return d.is_zero();
  }));
  s.checks.push_back(check("isotropy_m3", [&](CheckReport& r) {
    auto rep = repsl2::isotropy_check_m3();
    r.add("dimension", std::to_string(rep.dimension));
    r.add("omega_e0_e3", cdv::to_string(rep.omega_e0_e3));
    if (!rep.passed()) r.add("counterexample", rep.isotropic ? "degenerate pairing" : "span of a2, a3 not isotropic");
    return rep.passed();
  }));
  return s;
}

// ---- theta and parity --------------------------------------------------------

std::string counts_string(const thetachar::ParityCounts& c) {
  return "odd=" + std::to_string(c.odd) + " even=" + std::to_string(c.even);
}

SuiteReport theta_suite(const Options& opt) {
  SuiteReport s{"theta", {}, 0};
  for (int g : opt.g) {
    s.checks.push_back(check("subset_counts[g=" + std::to_string(g) + "]", [&](CheckReport& r) {
      auto got = thetachar::parity_counts(g);
      auto want = thetachar::closed_form_counts(g);
      r.add("subset_model", counts_string(got));
      r.add("closed_form", counts_string(want));
      if (!(got == want)) r.add("counterexample", counts_string(got) + " vs " + counts_string(want));
      return got == want;
    }));
  }
  return s;
}

hyperell::HyperCurve curve_or_fixture(const Options& opt) {
  return opt.curve ? *opt.curve : hyperell::HyperCurve::fixture_genus2();
}

SuiteReport parity_suite(const Options& opt) {
  SuiteReport s{"parity", {}, 0};
  for (int g : opt.g) {
    if (g > 4) continue;  // quadratic form enumeration is limited to g <= 4
    const std::string name = "arf_model[g=" + std::to_string(g) + "]";
    s.checks.push_back(check(name, [&](CheckReport& r) {
      auto x = thetachar::arf_model_crosscheck(g);
      r.add("subset_model", counts_string(x.subset_model));
      r.add("arf_model", counts_string(x.arf_model));
      r.add("basis_formula_agrees", x.basis_formula_agrees ? "true" : "false");
      if (!x.bijection.empty()) r.add("bijection_ok", x.bijection_ok ? "true" : "false");
      if (!x.passed()) r.add("counterexample", counts_string(x.subset_model) + " vs " + counts_string(x.arf_model));
      return x.passed();
    }));
  }
  hyperell::HyperCurve c = curve_or_fixture(opt);
  s.checks.push_back(check("riemann_roch_table[g=" + std::to_string(c.genus()) + "]", [&](CheckReport& r) {
    hyperell::ThetaTable t = hyperell::h0_all_theta(c);
    r.add("curve", "y^2 = " + c.f().to_string());
    r.add("counts", "odd=" + std::to_string(t.odd) + " even=" + std::to_string(t.even));
    std::vector<std::string> odd;
    for (const auto& row : t.rows) {
      if (row.parity() == thetachar::Parity::Odd) odd.push_back(row.chr.to_string());
      int want = thetachar::expected_h0(row.chr);
      if (static_cast<int>(row.h0) != want || row.parity() != thetachar::parity(row.chr)) {
        r.add("counterexample",
              row.chr.to_string() + ": h0=" + std::to_string(row.h0) + " expected " + std::to_string(want));
        return false;
      }
    }
    r.add("odd_classes", join(odd, " "));
    auto want = thetachar::closed_form_counts(c.genus());
    if (t.odd != want.odd || t.even != want.even) {
      r.add("counterexample", "counts differ from " + counts_string(want));
      return false;
    }
    return true;
  }));
  return s;
}

// ---- nr ----------------------------------------------------------------------

SuiteReport nr_suite(const Options& opt) {
  SuiteReport s{"nr", {}, 0};
  nrmoduli::BranchConfig b = nrmoduli::BranchConfig::from(opt.branch);
  s.checks.push_back(check("kernel_vector_vanishing", [&](CheckReport& r) {
    auto rep = nrmoduli::verify_prop4();
    std::vector<std::string> v;
    for (const auto& e : nrmoduli::pstar()) v.push_back(e.to_string(nrmoduli::variable_names()));
    r.add("vector", "(" + join(v, ", ") + ")");
    for (std::size_t k = 0; k < rep.residuals.size(); ++k)
      if (!rep.residuals[k].is_zero()) {
        r.add("counterexample",
              "l_1" + std::to_string(k + 2) + " = " + rep.residuals[k].to_string(nrmoduli::variable_names()));
        return false;
      }
    if (!rep.pairing.is_zero()) r.add("counterexample", "pairing " + rep.pairing.to_string(nrmoduli::variable_names()));
    return rep.passed();
  }));
  s.checks.push_back(check("h_consistency", [&](CheckReport& r) {
    r.add("branch", csv(opt.branch));
    bool ok = nrmoduli::h_consistency(b);
    if (!ok) r.add("counterexample", "partial fraction form times y^2 differs from the polynomial form");
    return ok;
  }));
  s.checks.push_back(check("kernels", [&](CheckReport& r) {
    auto ks = nrmoduli::all_kernels(b);
    bool ok = ks.size() == 6;
    for (const auto& k : ks) {
      r.add("kernel_" + std::to_string(k.branch), "(" + join(k.serialized(), ", ") + ")");
      bool good = k.dimension == 1 && k.pairing_zero && (k.branch != 1 || k.proportional_to_pstar);
      if (!good && ok) r.add("counterexample", "branch " + std::to_string(k.branch));
      ok = ok && good;
    }
    return ok;
  }));
  return s;
}

// ---- odd ---------------------------------------------------------------------

std::string triple_string(const oddmoduli::Triple& t) {
  return t[0].to_string() + " " + t[1].to_string() + " " + t[2].to_string();
}

SuiteReport odd_suite(const Options& opt) {
  SuiteReport s{"odd", {}, 0};
  hyperell::HyperCurve c = curve_or_fixture(opt);
  if (c.genus() != 2) {
    CheckReport r;
    r.name = "embedding";
    r.status = Status::Skipped;
    r.add("reason", "the P^1 x P^1 model needs genus 2");
    s.checks.push_back(r);
    return s;
  }
  std::optional<oddmoduli::EmbeddedCurve> e;
  s.checks.push_back(check("embedding", [&](CheckReport& r) {
    e = oddmoduli::embed(c, thetachar::make_char(2, {1, 2, 3}));
    r.add("theta", e->theta.to_string());
    r.add("implicit", e->implicit.to_string(std::vector<std::string>{"s0", "s1", "t0", "t1"}));
    r.add("bidegree", "(3 in s, 2 in t)");
    std::size_t n = oddmoduli::relation_count(*e, 3, 2);
    r.add("relations", std::to_string(n));
    if (n != 1) r.add("counterexample", "relation count " + std::to_string(n));
    return n == 1;
  }));
  if (!e) return s;
  auto pool = oddmoduli::point_pool(c, 12);
  s.checks.push_back(check("involution", [&](CheckReport& r) {
    auto m = oddmoduli::involution_matrix(*e);
    auto rep = oddmoduli::check_involution(*e, m, pool);
    r.add("points_checked", std::to_string(rep.points_checked));
    if (!rep.passed()) r.add("counterexample", "involution matrix fails a projective check");
    return rep.passed();
  }));
  auto triples = oddmoduli::sample_triples(pool, opt.triples, opt.seed);
  auto engineered = oddmoduli::engineered_collinear_triples(*e);
  triples.insert(triples.end(), engineered.begin(), engineered.end());
  s.checks.push_back(check("triple_criterion", [&](CheckReport& r) {
    auto reports = oddmoduli::prop5_reports(*e, triples);
    std::size_t collinear = 0;
    bool ok = true;
    for (const auto& p : reports) {
      collinear += p.collinear;
      if (!p.passed() && ok) {
        r.add("counterexample", p.describe());
        ok = false;
      }
    }
    r.add("triples", std::to_string(reports.size()));
    r.add("engineered", std::to_string(engineered.size()));
    r.add("collinear", std::to_string(collinear));
    for (std::size_t k = 0; k < reports.size(); ++k)
      r.add("triple_" + std::to_string(k),
            triple_string(reports[k].triple) + " | h0=" + std::to_string(reports[k].h0_lk12) +
                (reports[k].collinear ? " collinear" : ""));
    return ok;
  }));
  return s;
}

using Runner = SuiteReport (*)(const Options&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> r{
      {"clifford", &clifford_suite}, {"instanton", &instanton_suite}, {"nr", &nr_suite},    {"odd", &odd_suite},
      {"parity", &parity_suite},     {"repsl2", &repsl2_suite},       {"theta", &theta_suite}};
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const Options& opt) {
  auto it = runners().find(name);
  if (it == runners().end()) throw UsageError("unknown suite: " + name);
  auto t0 = Clock::now();
  SuiteReport r;
  try {
    r = it->second(opt);
  } catch (const std::exception& e) {
    r = SuiteReport{name, {}, 0};
    CheckReport c;
    c.name = "setup";
    c.status = Status::Fail;
    c.add("counterexample", std::string("exception: ") + e.what());
    r.checks.push_back(c);
  }
  r.wall_ms = elapsed_ms(t0);
  return r;
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const Options& opt) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& n : sorted)
    if (!runners().count(n)) throw UsageError("unknown suite: " + n);
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& n : sorted) jobs.push_back(std::async(std::launch::async, [&opt, n] { return run_suite(n, opt); }));
  std::vector<SuiteReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::string to_json(const std::vector<SuiteReport>& reports, const Options& opt, bool timings) {
  using nlohmann::ordered_json;
  ordered_json root;
  root["schema"] = 1;
  root["seed"] = opt.seed;
  ordered_json inputs;
  inputs["curve"] = opt.curve ? "y^2 = " + opt.curve->f().to_string() : "fixture";
  inputs["branch"] = csv(opt.branch);
  inputs["m"] = csv(opt.m);
  inputs["g"] = csv(opt.g);
  inputs["triples"] = opt.triples;
  if (opt.scale_a1) inputs["scale_a1"] = cdv::to_string(*opt.scale_a1);
  root["inputs"] = inputs;
  root["passed"] = all_passed(reports);
  ordered_json suites = ordered_json::array();
  for (const auto& s : reports) {
    ordered_json js;
    js["suite"] = s.suite;
    js["passed"] = s.passed();
    if (timings) js["wall_ms"] = s.wall_ms;
    ordered_json checks = ordered_json::array();
    for (const auto& c : s.checks) {
      ordered_json jc;
      jc["name"] = c.name;
      jc["status"] = to_string(c.status);
      ordered_json d = ordered_json::object();
      for (const auto& [k, v] : c.details) d[k] = v;
      jc["details"] = d;
      ordered_json conv = ordered_json::object();
      for (const auto& [k, v] : c.convention) conv[k] = v;
      jc["convention"] = conv;
      if (timings) jc["wall_ms"] = c.wall_ms;
      checks.push_back(jc);
    }
    js["checks"] = checks;
    suites.push_back(js);
  }
  root["suites"] = suites;
  return root.dump(2) + "\n";
}

}  // namespace cdv::cli
