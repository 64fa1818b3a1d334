#include "cdv/nrmoduli.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "cdv/matrix.hpp"

namespace cdv::nrmoduli {

P q(int i) { return P::variable(kArity, static_cast<std::size_t>(i - 1)); }
P p(int i) { return P::variable(kArity, static_cast<std::size_t>(3 + i)); }
P xvar() { return P::variable(kArity, kX); }

const std::vector<std::string>& variable_names() {
  static const std::vector<std::string> names{"q1", "q2", "q3", "q4", "p1", "p2", "p3", "p4", "x"};
  return names;
}

P LinearForm::poly() const {
  P r = P::zero(kArity);
  for (int b = 0; b < 4; ++b) r += p_coefficient(b) * p(b + 1);
  return r;
}

P LinearForm::p_coefficient(int b) const {
  P r = P::zero(kArity);
  for (int a = 0; a < 4; ++a)
    if (c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0)
      r += q(a + 1).scaled(Rational(c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]));
  return r;
}

P LinearForm::apply(const std::array<P, 4>& v) const {
  P r = P::zero(kArity);
  for (int b = 0; b < 4; ++b) r += p_coefficient(b) * v[static_cast<std::size_t>(b)];
  return r;
}

P RijEntry::expanded() const {
  P l = ell.poly();
  return (l * l).scaled(Rational(sign));
}

RijTable::RijTable(std::vector<RijEntry> entries) : entries_(std::move(entries)) {
  if (entries_.size() != 15) throw std::invalid_argument("RijTable: expected 15 entries");
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) (void)at(i, j);
}

const RijEntry& RijTable::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : entries_)
    if (e.i == i && e.j == j) return e;
  throw std::out_of_range("RijTable::at: no entry r" + std::to_string(i) + std::to_string(j));
}

RijTable RijTable::with_flipped_sign(int i, int j) const {
  if (i > j) std::swap(i, j);
  std::vector<RijEntry> e = entries_;
  for (auto& r : e)
    if (r.i == i && r.j == j) r.sign = -r.sign;
  return RijTable(std::move(e));
}

namespace {

struct Term {
  int coeff;
  int qa;
  int pb;
};

RijEntry entry(int i, int j, int sign, std::initializer_list<Term> terms) {
  RijEntry e{i, j, sign, {}};
  for (const auto& t : terms) e.ell.c[static_cast<std::size_t>(t.qa - 1)][static_cast<std::size_t>(t.pb - 1)] += t.coeff;
  return e;
}

}  // namespace

RijTable build_r_table() {
  return RijTable({
      entry(1, 2, +1, {{1, 1, 1}, {1, 2, 2}, {-1, 3, 3}, {-1, 4, 4}}),
      entry(1, 3, +1, {{1, 1, 4}, {-1, 2, 3}, {-1, 3, 2}, {1, 4, 1}}),
      entry(1, 4, -1, {{1, 1, 4}, {1, 2, 3}, {-1, 3, 2}, {-1, 4, 1}}),
      entry(1, 5, -1, {{1, 1, 3}, {-1, 2, 4}, {-1, 3, 1}, {1, 4, 2}}),
      entry(1, 6, +1, {{1, 1, 3}, {1, 2, 4}, {1, 3, 1}, {1, 4, 2}}),
      entry(2, 3, -1, {{1, 1, 4}, {-1, 2, 3}, {1, 3, 2}, {-1, 4, 1}}),
      entry(2, 4, +1, {{1, 1, 4}, {1, 2, 3}, {1, 3, 2}, {1, 4, 1}}),
      entry(2, 5, +1, {{1, 1, 3}, {-1, 2, 4}, {1, 3, 1}, {-1, 4, 2}}),
      entry(2, 6, -1, {{1, 1, 3}, {1, 2, 4}, {-1, 3, 1}, {-1, 4, 2}}),
      entry(3, 4, +1, {{1, 1, 1}, {-1, 2, 2}, {1, 3, 3}, {-1, 4, 4}}),
      entry(3, 5, +1, {{1, 1, 2}, {1, 2, 1}, {1, 3, 4}, {1, 4, 3}}),
      entry(3, 6, -1, {{1, 1, 2}, {-1, 2, 1}, {-1, 3, 4}, {1, 4, 3}}),
      entry(4, 5, -1, {{1, 1, 2}, {-1, 2, 1}, {1, 3, 4}, {-1, 4, 3}}),
      entry(4, 6, +1, {{1, 1, 2}, {1, 2, 1}, {-1, 3, 4}, {-1, 4, 3}}),
      entry(5, 6, +1, {{1, 1, 1}, {-1, 2, 2}, {-1, 3, 3}, {1, 4, 4}}),
  });
}

BranchConfig BranchConfig::from(const std::vector<Rational>& xs) {
  if (xs.size() != 6) throw std::invalid_argument("BranchConfig: need six branch points");
  BranchConfig b;
  for (std::size_t k = 0; k < 6; ++k) {
    b.x[k] = xs[k];
    b.x[k].canonicalize();
  }
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t c = a + 1; c < 6; ++c)
      if (b.x[a] == b.x[c]) throw std::invalid_argument("BranchConfig: branch points must be distinct");
  return b;
}

namespace {

P x_minus(const Rational& c) { return xvar() - P::constant(c, kArity); }

void check_index(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("nrmoduli: branch index must be in 1..6");
}

}  // namespace

P BranchConfig::y_squared() const {
  P r = P::constant(Rational(1), kArity);
  for (const auto& c : x) r *= x_minus(c);
  return r;
}

P BranchConfig::cofactor(int i, int j) const {
  check_index(i);
  check_index(j);
  P r = P::constant(Rational(1), kArity);
  for (int k = 1; k <= 6; ++k)
    if (k != i && k != j) r *= x_minus(x[static_cast<std::size_t>(k - 1)]);
  return r;
}

RF h_partial_fractions(const BranchConfig& b, const RijTable& t) {
  RF h(P::zero(kArity));
  for (const auto& e : t.entries()) {
    P den = x_minus(b.x[static_cast<std::size_t>(e.i - 1)]) * x_minus(b.x[static_cast<std::size_t>(e.j - 1)]);
    h = h + RF(e.expanded(), den);
  }
  return h;
}

P h_polynomial(const BranchConfig& b, const RijTable& t) {
  P h = P::zero(kArity);
  for (const auto& e : t.entries()) h += b.cofactor(e.i, e.j) * e.expanded();
  return h;
}

bool h_consistency(const BranchConfig& b, const RijTable& t1, const RijTable& t2) {
  return h_partial_fractions(b, t1) * RF(b.y_squared()) == RF(h_polynomial(b, t2));
}

bool h_consistency(const BranchConfig& b) {
  RijTable t = build_r_table();
  return h_consistency(b, t, t);
}

P eval_at_branch(const BranchConfig& b, int i, const RijTable& t) {
  check_index(i);
  const Rational& xi = b.x[static_cast<std::size_t>(i - 1)];
  P r = P::zero(kArity);
  for (int j = 1; j <= 6; ++j) {
    if (j == i) continue;
    Rational w = 1;
    for (int k = 1; k <= 6; ++k)
      if (k != i && k != j) w *= xi - b.x[static_cast<std::size_t>(k - 1)];
    r += t.at(i, j).expanded().scaled(w);
  }
  return r;
}

P eval_at_branch(const BranchConfig& b, int i) { return eval_at_branch(b, i, build_r_table()); }

std::array<P, 4> pstar() { return {q(2), -q(1), q(4), -q(3)}; }

P pairing(const std::array<P, 4>& v) {
  P r = P::zero(kArity);
  for (int k = 0; k < 4; ++k) r += v[static_cast<std::size_t>(k)] * q(k + 1);
  return r;
}

bool Prop4Report::passed() const {
  return residuals.size() == 5 && pairing.is_zero() &&
         std::all_of(residuals.begin(), residuals.end(), [](const P& r) { return r.is_zero(); });
}

Prop4Report verify_prop4(const std::array<P, 4>& v) {
  RijTable t = build_r_table();
  Prop4Report r;
  for (int j = 2; j <= 6; ++j) r.residuals.push_back(t.at(1, j).ell.apply(v));
  r.pairing = pairing(v);
  return r;
}

namespace {

bool proportional(const std::array<P, 4>& u, const std::array<P, 4>& v) {
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t c = a + 1; c < 4; ++c)
      if (!(u[a] * v[c] - u[c] * v[a]).is_zero()) return false;
  return true;
}

/// Signed permutations of (q1..q4) that pair to zero with q, tried in a fixed order.
std::vector<std::array<P, 4>> signed_permutations() {
  std::vector<std::array<P, 4>> out;
  std::array<int, 4> perm{1, 2, 3, 4};
  do {
    for (int s = 0; s < 16; ++s) {
      std::array<P, 4> v;
      for (std::size_t k = 0; k < 4; ++k) {
        P e = q(perm[k]);
        v[k] = (s >> k) & 1 ? -e : e;
      }
      if (!v[0].is_zero() && (s & 1) == 0) out.push_back(v);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<std::string> KernelResult::serialized() const {
  std::vector<std::string> out;
  for (const auto& e : generator) out.push_back(e.to_string(variable_names()));
  return out;
}

KernelResult kernel_at_branch(const BranchConfig& b, int i) {
  check_index(i);
  (void)b;  // the linear forms do not depend on the branch values
  RijTable t = build_r_table();
  Matrix<P> m(5, 4, P::zero(kArity));
  std::size_t row = 0;
  for (int j = 1; j <= 6; ++j) {
    if (j == i) continue;
    for (int c = 0; c < 4; ++c) m(row, static_cast<std::size_t>(c)) = t.at(i, j).ell.p_coefficient(c);
    ++row;
  }
  auto ns = nullspace(m);
  KernelResult r;
  r.branch = i;
  r.dimension = ns.size();
  if (ns.size() != 1)
    throw UnexpectedKernel("kernel_at_branch: dimension " + std::to_string(ns.size()) + " at branch " + std::to_string(i));
  for (std::size_t k = 0; k < 4; ++k) r.generator[k] = ns[0][k].with_arity(kArity);
  for (const auto& v : signed_permutations())
    if (proportional(v, r.generator)) {
      r.generator = v;
      r.signed_permutation = true;
      break;
    }
  r.pairing_zero = pairing(r.generator).is_zero();
  r.proportional_to_pstar = proportional(r.generator, pstar());
  return r;
}

std::vector<KernelResult> all_kernels(const BranchConfig& b) {
  std::vector<std::future<KernelResult>> jobs;
  for (int i = 1; i <= 6; ++i) jobs.push_back(std::async(std::launch::async, [&b, i] { return kernel_at_branch(b, i); }));
  std::vector<KernelResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

Rational k2_section_eval(const Rational& a0, const Rational& a1, const Rational& a2, const BranchConfig& b, int i) {
  check_index(i);
  const Rational& xi = b.x[static_cast<std::size_t>(i - 1)];
  return a0 + a1 * xi + a2 * xi * xi;
}

}  // namespace cdv::nrmoduli
