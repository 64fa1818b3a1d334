// Acceptance suite: one PASS/FAIL line per criterion, exact checks plus
// pinned runtime budgets.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdv/clifford.hpp"
#include "cdv/hyperell.hpp"
#include "cdv/instanton.hpp"
#include "cdv/nrmoduli.hpp"
#include "cdv/oddmoduli.hpp"
#include "cdv/repsl2.hpp"
#include "cdv/thetachar.hpp"

namespace {

using namespace cdv;

// Exactness: every comparison below is over Q or Q(i); the numeric tolerance is zero.
constexpr double kTolerance = 0.0;

struct Budget {
  int criterion;
  double seconds;
};
constexpr Budget kBudgets[] = {{1, 1.0}, {2, 60.0}, {3, 10.0}, {4, 30.0}, {5, 10.0}, {6, 30.0}, {7, 60.0}};

constexpr std::size_t kRandomTriples = 20;
constexpr std::uint64_t kTripleSeed = 20240611;

double budget_for(int n) {
  for (const auto& b : kBudgets)
    if (b.criterion == n) return b.seconds;
  return 0;
}

struct Outcome {
  std::vector<std::pair<std::string, bool>> parts;
  void record(const std::string& what, bool ok) { parts.emplace_back(what, ok); }
  bool ok() const {
    for (const auto& [w, v] : parts)
      if (!v) return false;
    return true;
  }
};

clifford::MV basis_vector(int i) {
  clifford::MV a;
  a[clifford::Blade(1u << (i - 1))] = 1;
  return a;
}

Outcome criterion1() {
  Outcome o;
  auto asd = clifford::asd_basis();
  auto sd = clifford::sd_basis();
  int held = 0, sandwich_zero = 0;
  for (int i = 1; i <= 4; ++i)
    for (const auto& w : asd) held += clifford::decomposition_identity_holds(basis_vector(i), w);
  for (const auto& w : asd) sandwich_zero += clifford::identity_sandwich(w).is_zero();
  o.record("decomposition identity on " + std::to_string(held) + "/12 (e_i, ASD) pairs", held == 12);
  o.record("sum e_i w e_i = 0 on " + std::to_string(sandwich_zero) + "/3 ASD basis forms", sandwich_zero == 3);
  int sd_nonzero = 0;
  for (const auto& w : sd) sd_nonzero += !clifford::sandwich_sum(w).is_zero();
  o.record("SD control: sum e_i w e_i nonzero on " + std::to_string(sd_nonzero) + "/3 SD basis forms", sd_nonzero == 3);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const instanton::Connection& a = instanton::bpst_connection();
  instanton::CurvatureForm f = instanton::curvature(a);
  o.record("curvature ASD", instanton::asd_check(f));
  bool bianchi = true, ym = true;
  for (const auto& m : instanton::bianchi_residual(a, f)) bianchi = bianchi && m.is_zero();
  for (const auto& m : instanton::yang_mills_residual(a)) ym = ym && m.is_zero();
  o.record("Bianchi residual zero", bianchi);
  o.record("Yang-Mills residual zero", ym);
  instanton::Prop1Report r = instanton::verify_prop1(a);
  int zero = 0;
  for (bool z : r.residual_zero) zero += z;
  o.record("coupled Dirac residual zero for " + std::to_string(zero) + "/4 twistor solutions", zero == 4 && !r.degenerate);
  o.record("evaluation rank " + std::to_string(r.independent_count) + " (4k, k=1)", r.independent_count == 4);
  instanton::Prop1Report bad = instanton::prop1_residuals(instanton::scaled_bpst(Gaussian(2)));
  int nonzero = 0;
  for (bool z : bad.residual_zero) nonzero += !z;
  o.record("perturbed connection: " + std::to_string(nonzero) + "/4 nonzero residuals", nonzero > 0 && !bad.asd);
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int m : {1, 3, 5}) {
    o.record("invariance m=" + std::to_string(m), repsl2::invariance_check(m).passed());
    o.record("equivariance m=" + std::to_string(m), repsl2::equivariance_check(m).passed());
  }
  o.record("m=1 nilpotency determinant identically zero", repsl2::nilpotency_determinant_m1().is_zero());
  o.record("m=3 span{a2, a3} isotropic", repsl2::isotropy_check_m3().passed());
  return o;
}

Outcome criterion4() {
  Outcome o;
  bool subset = true;
  for (int g = 1; g <= 6; ++g) subset = subset && thetachar::parity_counts(g) == thetachar::closed_form_counts(g);
  o.record("subset model counts g=1..6", subset);
  bool arf = true;
  for (int g = 1; g <= 4; ++g) {
    auto x = thetachar::arf_model_crosscheck(g);
    arf = arf && x.passed() && x.arf_model == thetachar::closed_form_counts(g);
  }
  o.record("Arf model counts g=1..4", arf);
  hyperell::HyperCurve c = hyperell::HyperCurve::fixture_genus2();
  hyperell::ThetaTable table = hyperell::h0_all_theta(c);
  auto x2 = thetachar::arf_model_crosscheck(2);
  bool agree = table.rows.size() == 16 && x2.bijection.size() == 16;
  int odd_singletons = 0, odd = 0;
  for (const auto& row : table.rows) {
    thetachar::Parity rr = row.parity();
    if (rr != thetachar::parity(row.chr)) agree = false;
    bool found = false;
    for (const auto& b : x2.bijection)
      if (b.c == row.chr) {
        found = true;
        if (b.parity != rr || b.arf != (rr == thetachar::Parity::Odd ? 1 : 0)) agree = false;
      }
    agree = agree && found;
    if (rr == thetachar::Parity::Odd) {
      ++odd;
      odd_singletons += row.chr.size() == 1;
    }
  }
  o.record("three-way class agreement at g=2", agree);
  o.record("Riemann-Roch: " + std::to_string(odd) + " odd (" + std::to_string(odd_singletons) + " singletons), " +
               std::to_string(table.even) + " even",
           odd == 6 && odd_singletons == 6 && table.even == 10);
  return o;
}

Outcome criterion5() {
  Outcome o;
  oddmoduli::EmbeddedCurve e = oddmoduli::embed_fixture();
  const hyperell::HyperCurve& c = e.curve;
  struct Case {
    std::string name;
    hyperell::Divisor d;
    std::size_t want;
  };
  std::vector<Case> cases{{"L(0)", hyperell::Divisor(), 1},
                          {"H0(K)", e.k_divisor, 2},
                          {"H0(K^{3/2})", e.k32_divisor, 2},
                          {"H0(K^{5/2})", e.k52_divisor, 4}};
  for (const auto& k : cases) {
    hyperell::RRSpace s = hyperell::rr_space(c, k.d);
    o.record("dim " + k.name + " = " + std::to_string(s.dim()), s.dim() == k.want);
    o.record("Riemann-Roch identity for " + k.name, s.riemann_roch_ok && s.pole_bounds_ok);
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  o.record("five l forms vanish at (q2,-q1,q4,-q3)", nrmoduli::verify_prop4().passed());
  auto ks = nrmoduli::all_kernels(nrmoduli::BranchConfig::from({0, 1, 2, 3, 4, 5}));
  int one_dim = 0;
  for (const auto& k : ks) one_dim += k.dimension == 1;
  o.record("1-dimensional kernel at " + std::to_string(one_dim) + "/6 branch points", ks.size() == 6 && one_dim == 6);
  o.record("kernel at x1 proportional to (q2,-q1,q4,-q3)", !ks.empty() && ks[0].proportional_to_pstar);
  o.record("two expressions for h agree", nrmoduli::h_consistency(nrmoduli::BranchConfig::from({0, 1, 2, 3, 4, 5})));
  return o;
}

Outcome criterion7() {
  Outcome o;
  oddmoduli::EmbeddedCurve e = oddmoduli::embed_fixture();
  auto triples = oddmoduli::sample_triples(oddmoduli::point_pool(e.curve, 12), kRandomTriples, kTripleSeed);
  auto engineered = oddmoduli::engineered_collinear_triples(e);
  std::size_t random_count = triples.size();
  triples.insert(triples.end(), engineered.begin(), engineered.end());
  auto reports = oddmoduli::prop5_reports(e, triples);
  std::size_t collinear = 0, equiv = 0, iso = 0, degree = 0;
  for (const auto& r : reports) {
    collinear += r.collinear;
    equiv += r.collinear ? r.h0_lk12 == 2 : r.h0_lk12 == 1;
    iso += !r.collinear || r.h0_l_minus_theta == std::optional<std::size_t>(1);
    degree += r.plane_degree_ok && r.plane_contains_points;
  }
  bool engineered_ok = true;
  for (std::size_t k = random_count; k < reports.size(); ++k) engineered_ok = engineered_ok && reports[k].collinear;
  const std::string n = std::to_string(reports.size());
  o.record(std::to_string(random_count) + " random + " + std::to_string(engineered.size()) + " engineered triples, " +
               std::to_string(collinear) + " collinear",
           random_count >= 20 && engineered.size() >= 2 && engineered_ok);
  o.record("collinear <=> h0(L K^{1/2}) = 2, else 1 on " + std::to_string(equiv) + "/" + n, equiv == reports.size());
  o.record("collinear => L = K^{1/2} on " + std::to_string(iso) + "/" + n, iso == reports.size());
  o.record("plane section degree 5 on " + std::to_string(degree) + "/" + n, degree == reports.size());
  return o;
}

const char* kScope =
    "not reproducible at desk scale: the curved S^4 form of the Dirac statement, non-self-dual solutions, "
    "the d-bar constructions and the mod 2 index theorem; covered only through the finite consequences "
    "checked in criteria 1-7";

int run(int n) {
  if (n == 8) {
    std::cout << "[SCOPE] criterion 8: " << kScope << "\n";
    return 0;
  }
  static const std::function<Outcome()> fns[] = {criterion1, criterion2, criterion3, criterion4,
                                                 criterion5, criterion6, criterion7};
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fns[n - 1]();
  } catch (const std::exception& e) {
    o.record(std::string("exception: ") + e.what(), false);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = secs <= budget_for(n);
  bool ok = o.ok() && in_budget;
  std::ostringstream line;
  line.precision(3);
  line << std::fixed << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << " (" << secs << " s, budget " << budget_for(n)
       << " s, tolerance " << kTolerance << "):";
  for (const auto& [what, v] : o.parts) line << (v ? " ok: " : " FAILED: ") << what << ";";
  if (!in_budget) line << " FAILED: runtime budget;";
  std::cout << line.str() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);
  int failures = 0;
  for (int n = 1; n <= 8; ++n)
    if (only == 0 || only == n) failures += run(n);
  return failures == 0 ? 0 : 1;
}
