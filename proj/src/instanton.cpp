#include "cdv/instanton.hpp"

#include <stdexcept>

#include "cdv/matrix.hpp"

namespace cdv::instanton {

const PolyG& conformal_factor() {
  static const PolyG s = [] {
    PolyG acc = PolyG::constant(Gaussian(1), kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
      PolyG x = PolyG::variable(kDim, i);
      acc = acc + x * x;
    }
    return acc;
  }();
  return s;
}

RF coordinate(std::size_t i) { return RF::variable(kDim, i); }

// ---- Mat2 -----------------------------------------------------------------

bool Mat2::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Mat2 Mat2::operator-() const { return {-e_[0], -e_[1], -e_[2], -e_[3]}; }

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.e_[3] + b.e_[3]};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.e_[3] - b.e_[3]};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      RF acc;
      for (std::size_t k = 0; k < 2; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      r(i, j) = acc;
    }
  return r;
}

Mat2 Mat2::scaled(const Gaussian& c) const { return {e_[0].scaled(c), e_[1].scaled(c), e_[2].scaled(c), e_[3].scaled(c)}; }

Mat2 Mat2::times(const RF& f) const { return {e_[0] * f, e_[1] * f, e_[2] * f, e_[3] * f}; }

Mat2 Mat2::derivative(std::size_t var) const {
  return Mat2{e_[0].derivative(var), e_[1].derivative(var), e_[2].derivative(var), e_[3].derivative(var)}.reduced();
}

Mat2 Mat2::reduced() const {
  const PolyG& s = conformal_factor();
  return {e_[0].cancel(s), e_[1].cancel(s), e_[2].cancel(s), e_[3].cancel(s)};
}

Mat2 Mat2::adjoint_constant() const {
  auto c = [](const RF& f) {
    if (!f.den().is_constant() || !f.num().is_constant()) throw std::invalid_argument("Mat2::adjoint_constant: entry not constant");
    return RF::constant(f.num().constant_term().conj());
  };
  return {c(e_[0]), c(e_[2]), c(e_[1]), c(e_[3])};
}

std::array<Gaussian, 4> Mat2::evaluate(std::span<const Gaussian> point) const {
  return {e_[0].evaluate(point), e_[1].evaluate(point), e_[2].evaluate(point), e_[3].evaluate(point)};
}

// ---- forms ----------------------------------------------------------------

std::size_t pair_index(std::size_t mu, std::size_t nu) {
  static constexpr std::size_t table[4][4] = {{6, 0, 1, 2}, {0, 6, 3, 4}, {1, 3, 6, 5}, {2, 4, 5, 6}};
  if (mu >= kDim || nu >= kDim || mu == nu) throw std::out_of_range("pair_index: bad pair");
  return table[mu][nu];
}

std::pair<std::size_t, std::size_t> pair_of(std::size_t k) {
  static constexpr std::pair<std::size_t, std::size_t> pairs[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return pairs[k];
}

Mat2 CurvatureForm::at(std::size_t mu, std::size_t nu) const {
  if (mu == nu) return Mat2(0);
  const Mat2& v = f[pair_index(mu, nu)];
  return mu < nu ? v : -v;
}

bool CurvatureForm::is_zero() const {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

namespace {

clifford::Blade pair_blade(std::size_t k) {
  auto [mu, nu] = pair_of(k);
  return clifford::blade({static_cast<int>(mu + 1), static_cast<int>(nu + 1)});
}

struct StarEntry {
  std::size_t target;
  int sign;
};

const std::array<StarEntry, 6>& star_table() {
  static const std::array<StarEntry, 6> table = [] {
    std::array<StarEntry, 6> t{};
    for (std::size_t k = 0; k < 6; ++k) {
      clifford::MV s = clifford::hodge_star(clifford::MV::basis(pair_blade(k)));
      for (std::size_t j = 0; j < 6; ++j) {
        const Rational& c = s[pair_blade(j)];
        if (sgn(c) != 0) t[k] = {j, sgn(c)};
      }
    }
    return t;
  }();
  return table;
}

// Quaternion units 1, I, J, K as 2x2 matrices over Q(i).
std::array<Mat2, 4> quaternion_units() {
  const Gaussian z(0), o(1), i = Gaussian::i();
  return {Mat2::constant(o, z, z, o), Mat2::constant(i, z, z, -i), Mat2::constant(z, o, -o, z),
          Mat2::constant(z, i, i, z)};
}

Connection raw_bpst() {
  auto q = quaternion_units();
  Mat2 x, xbar;
  for (std::size_t mu = 0; mu < kDim; ++mu) {
    x += q[mu].times(coordinate(mu));
    xbar += q[mu].adjoint_constant().times(coordinate(mu));
  }
  RF inv_s(PolyG::constant(Gaussian(1), kDim), conformal_factor());
  Connection a;
  for (std::size_t mu = 0; mu < kDim; ++mu) {
    // Im(conj(x) q_mu) = (conj(x) q_mu - conj(q_mu) x) / 2
    Mat2 im = (xbar * q[mu] - q[mu].adjoint_constant() * x).scaled(Gaussian(Rational(1, 2)));
    a.a[mu] = im.times(inv_s);
  }
  return a;
}

Connection swap_e3_e4(const Connection& a) {
  std::vector<RF> images{coordinate(0), coordinate(1), coordinate(3), coordinate(2)};
  auto sub = [&](const Mat2& m) {
    return Mat2{m(0, 0).substitute(images), m(0, 1).substitute(images), m(1, 0).substitute(images),
                m(1, 1).substitute(images)};
  };
  Connection out;
  out.a[0] = sub(a.a[0]);
  out.a[1] = sub(a.a[1]);
  out.a[2] = sub(a.a[3]);
  out.a[3] = sub(a.a[2]);
  return out;
}

struct Bpst {
  Connection connection;
  InstantonConvention convention;
};

const Bpst& bpst() {
  static const Bpst b = [] {
    Bpst out;
    out.convention.three_form_sign = clifford::calibrated_star().three_form_sign;
    out.convention.acted_on = clifford::asd_chirality_record().acted_on;
    out.connection = raw_bpst();
    if (!asd_check(curvature(out.connection))) {
      out.connection = swap_e3_e4(out.connection);
      out.convention.swapped_e3_e4 = true;
      if (!asd_check(curvature(out.connection)))
        throw std::logic_error("bpst_connection: curvature is neither ASD nor ASD after relabelling");
    }
    return out;
  }();
  return b;
}

}  // namespace

std::string InstantonConvention::describe() const {
  return std::string("star3=") + (three_form_sign < 0 ? "-1" : "+1") +
         "; asd_acts_on=" + (acted_on == clifford::Chirality::Plus ? "S+" : "S-") +
         "; e3e4_swapped=" + (swapped_e3_e4 ? "true" : "false");
}

const Connection& bpst_connection() { return bpst().connection; }
const InstantonConvention& instanton_convention() { return bpst().convention; }

Connection scaled_bpst(const Gaussian& factor) {
  Connection a = bpst_connection();
  a.a[0] = a.a[0].scaled(factor);
  return a;
}

CurvatureForm curvature(const Connection& a) {
  CurvatureForm out;
  for (std::size_t k = 0; k < 6; ++k) {
    auto [mu, nu] = pair_of(k);
    out.f[k] = (a.a[nu].derivative(mu) - a.a[mu].derivative(nu) + commutator(a.a[mu], a.a[nu])).reduced();
  }
  return out;
}

CurvatureForm hodge_star(const CurvatureForm& f) {
  CurvatureForm out;
  const auto& t = star_table();
  for (std::size_t k = 0; k < 6; ++k) out.f[t[k].target] += t[k].sign > 0 ? f.f[k] : -f.f[k];
  return out;
}

bool asd_check(const CurvatureForm& f) {
  CurvatureForm s = hodge_star(f);
  for (std::size_t k = 0; k < 6; ++k)
    if (!(s.f[k] + f.f[k]).is_zero()) return false;
  return true;
}

bool sd_check(const CurvatureForm& f) {
  CurvatureForm s = hodge_star(f);
  for (std::size_t k = 0; k < 6; ++k)
    if (!(s.f[k] == f.f[k])) return false;
  return true;
}

SdAsdSplit sd_asd_split(const CurvatureForm& f) {
  CurvatureForm s = hodge_star(f);
  const Gaussian half(Rational(1, 2));
  SdAsdSplit out;
  for (std::size_t k = 0; k < 6; ++k) {
    out.plus.f[k] = (f.f[k] + s.f[k]).scaled(half);
    out.minus.f[k] = (f.f[k] - s.f[k]).scaled(half);
  }
  return out;
}

Mat2 covariant_derivative(const Connection& a, std::size_t mu, const Mat2& x) {
  return (x.derivative(mu) + commutator(a.a[mu], x)).reduced();
}

std::array<Mat2, 4> bianchi_residual(const Connection& a, const CurvatureForm& f) {
  static constexpr std::size_t triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::array<Mat2, 4> out;
  for (std::size_t t = 0; t < 4; ++t) {
    auto [l, m, n] = triples[t];
    out[t] = covariant_derivative(a, l, f.at(m, n)) + covariant_derivative(a, m, f.at(n, l)) +
             covariant_derivative(a, n, f.at(l, m));
  }
  return out;
}

std::array<Mat2, kDim> yang_mills_residual(const Connection& a) {
  CurvatureForm f = curvature(a);
  std::array<Mat2, kDim> out;
  for (std::size_t nu = 0; nu < kDim; ++nu) {
    Mat2 acc;
    for (std::size_t mu = 0; mu < kDim; ++mu)
      if (mu != nu) acc += covariant_derivative(a, mu, f.at(mu, nu));
    out[nu] = acc.reduced();
  }
  return out;
}

// ---- spinor fields --------------------------------------------------------

namespace {

template <class R>
clifford::Spinor<R> spinor_sum(const clifford::Spinor<R>& a, const clifford::Spinor<R>& b) {
  clifford::Spinor<R> r;
  for (std::size_t k = 0; k < 4; ++k) r[k] = a[k] + b[k];
  return r;
}

ScalarSpinor unit_spinor(std::size_t k) {
  ScalarSpinor s{RF(0), RF(0), RF(0), RF(0)};
  s[k] = RF(1);
  return s;
}

ScalarSpinor spinor_derivative(const ScalarSpinor& psi, std::size_t var) {
  ScalarSpinor r;
  for (std::size_t k = 0; k < 4; ++k) r[k] = psi[k].derivative(var);
  return r;
}

}  // namespace

std::array<ScalarSpinor, 4> twistor_basis() {
  const auto& rep = clifford::GammaRep::standard();
  auto rec = clifford::asd_chirality_record();
  std::array<ScalarSpinor, 4> out;
  std::size_t n = 0;
  for (std::size_t k : clifford::GammaRep::block(rec.annihilated)) {
    ScalarSpinor psi1 = unit_spinor(k);
    ScalarSpinor field{RF(0), RF(0), RF(0), RF(0)};
    for (std::size_t i = 0; i < kDim; ++i) {
      ScalarSpinor g = clifford::apply(rep.gamma(static_cast<int>(i + 1)), psi1);
      for (auto& c : g) c = c * coordinate(i);
      field = spinor_sum(field, g);
    }
    out[n++] = field;
  }
  for (std::size_t k : clifford::GammaRep::block(rec.acted_on)) out[n++] = unit_spinor(k);
  return out;
}

ScalarSpinor flat_dirac(const ScalarSpinor& psi) {
  const auto& rep = clifford::GammaRep::standard();
  ScalarSpinor acc{RF(0), RF(0), RF(0), RF(0)};
  for (std::size_t i = 0; i < kDim; ++i)
    acc = spinor_sum(acc, clifford::apply(rep.gamma(static_cast<int>(i + 1)), spinor_derivative(psi, i)));
  return acc;
}

std::array<ScalarSpinor, kDim> twistor_residual(const ScalarSpinor& psi) {
  const auto& rep = clifford::GammaRep::standard();
  ScalarSpinor d = flat_dirac(psi);
  std::array<ScalarSpinor, kDim> out;
  for (std::size_t i = 0; i < kDim; ++i) {
    ScalarSpinor e = clifford::apply(rep.gamma(static_cast<int>(i + 1)), d);
    for (auto& c : e) c = c.scaled(Gaussian(Rational(1, 4)));
    out[i] = spinor_sum(spinor_derivative(psi, i), e);
  }
  return out;
}

CoupledSpinor curvature_action(const CurvatureForm& f, const ScalarSpinor& psi) {
  const auto& rep = clifford::GammaRep::standard();
  CoupledSpinor out{Mat2(0), Mat2(0), Mat2(0), Mat2(0)};
  for (std::size_t k = 0; k < 6; ++k) {
    if (f.f[k].is_zero()) continue;
    ScalarSpinor v = clifford::apply(rep.blade_matrix(pair_blade(k)), psi);
    for (std::size_t c = 0; c < 4; ++c)
      if (!v[c].is_zero()) out[c] += f.f[k].times(v[c]);
  }
  for (auto& m : out) m = m.reduced();
  return out;
}

CoupledSpinor coupled_dirac(const Connection& a, const CoupledSpinor& psi) {
  const auto& rep = clifford::GammaRep::standard();
  CoupledSpinor acc{Mat2(0), Mat2(0), Mat2(0), Mat2(0)};
  for (std::size_t i = 0; i < kDim; ++i) {
    CoupledSpinor nabla;
    for (std::size_t c = 0; c < 4; ++c) nabla[c] = covariant_derivative(a, i, psi[c]);
    acc = spinor_sum(acc, clifford::apply(rep.gamma(static_cast<int>(i + 1)), nabla));
  }
  for (auto& m : acc) m = m.reduced();
  return acc;
}

bool is_zero(const CoupledSpinor& psi) {
  for (const auto& m : psi)
    if (!m.is_zero()) return false;
  return true;
}

bool Prop1Report::passed() const {
  if (!asd || degenerate || independent_count != 4) return false;
  for (bool z : residual_zero)
    if (!z) return false;
  return true;
}

std::size_t evaluation_rank(const std::vector<CoupledSpinor>& fields) {
  const std::vector<std::array<Gaussian, kDim>> points = {
      {Gaussian(1), Gaussian(0), Gaussian(2), Gaussian(-1)},
      {Gaussian(Rational(1, 2)), Gaussian(1), Gaussian(-1), Gaussian(3)}};
  Matrix<Gaussian> m(fields.size(), points.size() * 16, Gaussian(0));
  for (std::size_t r = 0; r < fields.size(); ++r) {
    std::size_t col = 0;
    for (const auto& p : points)
      for (const auto& comp : fields[r])
        for (const auto& v : comp.evaluate(p)) m(r, col++) = v;
  }
  return rank(m);
}

Prop1Report prop1_residuals(const Connection& a) {
  Prop1Report rep;
  rep.convention = instanton_convention();
  CurvatureForm f = curvature(a);
  rep.asd = asd_check(f);
  std::vector<CoupledSpinor> produced;
  bool all_zero = true;
  auto basis = twistor_basis();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    CoupledSpinor phi = curvature_action(f, basis[k]);
    if (!is_zero(phi)) all_zero = false;
    rep.residual_zero[k] = is_zero(coupled_dirac(a, phi));
    produced.push_back(std::move(phi));
  }
  rep.degenerate = all_zero;
  rep.independent_count = evaluation_rank(produced);
  return rep;
}

Prop1Report verify_prop1(const Connection& a) {
  if (!asd_check(curvature(a))) throw clifford::NotAntiSelfDual("verify_prop1: curvature is not anti-self-dual");
  return prop1_residuals(a);
}

}  // namespace cdv::instanton
