#include "cdv/clifford.hpp"

namespace cdv::clifford {

std::string blade_name(Blade b) {
  if (b == 0) return "1";
  std::string s = "e";
  for (int i = 1; i <= 4; ++i)
    if (b & (1u << (i - 1))) s += std::to_string(i);
  return s;
}

namespace {

MV two_form(Blade a, int sign_a, Blade b, int sign_b) {
  return MV::basis(a, Rational(sign_a)) + MV::basis(b, Rational(sign_b));
}

StarConvention calibrate() {
  const MV a = MV::e(1);
  const MV w = two_form(blade({1, 2}), 1, blade({3, 4}), -1);
  for (int sign : {1, -1}) {
    StarConvention conv{sign};
    MV prod = a * w;
    MV aw = wedge(a, w);
    if (prod.grade_project(1) == -hodge_star(aw, conv)) return conv;
  }
  throw std::logic_error("calibrated_star: no 3-form sign satisfies the probe identity");
}

}  // namespace

const StarConvention& calibrated_star() {
  static const StarConvention conv = calibrate();
  return conv;
}

std::array<MV, 3> asd_basis() {
  return {two_form(blade({1, 2}), 1, blade({3, 4}), -1), two_form(blade({2, 3}), 1, blade({1, 4}), -1),
          // e3e1 = -e1e3
          two_form(blade({1, 3}), -1, blade({2, 4}), -1)};
}

std::array<MV, 3> sd_basis() {
  return {two_form(blade({1, 2}), 1, blade({3, 4}), 1), two_form(blade({2, 3}), 1, blade({1, 4}), 1),
          two_form(blade({1, 3}), -1, blade({2, 4}), 1)};
}

MV volume_form() { return MV::basis(kVolume); }

bool is_two_form(const MV& w) { return (w.grades_present() & ~(1u << 2)) == 0; }

bool is_anti_self_dual(const MV& w, const StarConvention& conv) {
  return is_two_form(w) && hodge_star(w, conv) == -w;
}

bool is_self_dual(const MV& w, const StarConvention& conv) { return is_two_form(w) && hodge_star(w, conv) == w; }

Decomposition identity_decomposition(const MV& a, const MV& w, const StarConvention& conv) {
  if ((a.grades_present() & ~(1u << 1)) != 0) throw NotHomogeneous("identity_decomposition: a is not a 1-form");
  if (!is_anti_self_dual(w, conv)) throw NotAntiSelfDual("identity_decomposition: w is not anti-self-dual");
  MV prod = a * w;
  return {prod.grade_project(3), prod.grade_project(1)};
}

bool decomposition_identity_holds(const MV& a, const MV& w, const StarConvention& conv) {
  MV prod = a * w;
  if ((prod.grades_present() & ~((1u << 1) | (1u << 3))) != 0) return false;
  MV aw = wedge(a, w);
  return prod.grade_project(3) == aw && prod.grade_project(1) == -hodge_star(aw, conv);
}

MV sandwich_sum(const MV& w) {
  MV acc;
  for (int i = 1; i <= 4; ++i) acc += MV::e(i) * w * MV::e(i);
  return acc;
}

MV identity_sandwich(const MV& w) {
  if (!is_anti_self_dual(w)) throw NotAntiSelfDual("identity_sandwich: w is not anti-self-dual");
  return sandwich_sum(w);
}

// ---- spinor representation ------------------------------------------------

Matrix4 mat_mul(const Matrix4& a, const Matrix4& b) {
  Matrix4 r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Matrix4 mat_identity() {
  Matrix4 r{};
  for (std::size_t i = 0; i < 4; ++i) r[i][i] = Gaussian(1);
  return r;
}

bool mat_is_zero(const Matrix4& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (!is_zero(v)) return false;
  return true;
}

namespace {

using Quat = std::array<std::array<Gaussian, 2>, 2>;

// Unit quaternions 1, I, J, K as 2x2 complex matrices.
std::array<Quat, 4> quaternion_units() {
  const Gaussian i = Gaussian::i();
  Quat one{{{Gaussian(1), Gaussian(0)}, {Gaussian(0), Gaussian(1)}}};
  Quat qi{{{i, Gaussian(0)}, {Gaussian(0), -i}}};
  Quat qj{{{Gaussian(0), Gaussian(1)}, {Gaussian(-1), Gaussian(0)}}};
  Quat qk{{{Gaussian(0), i}, {i, Gaussian(0)}}};
  return {one, qi, qj, qk};
}

Quat quat_conj(const Quat& q) {
  // Quaternion conjugate is the conjugate transpose in this model.
  Quat r;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) r[a][b] = q[b][a].conj();
  return r;
}

}  // namespace

GammaRep::GammaRep() {
  auto q = quaternion_units();
  // gamma_mu = [[0, -conj(q_mu)], [q_mu, 0]]
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Matrix4 g{};
    Quat qc = quat_conj(q[mu]);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        g[a][b + 2] = -qc[a][b];
        g[a + 2][b] = q[mu][a][b];
      }
    gamma_[mu] = g;
  }
  chirality_ = mat_mul(mat_mul(gamma_[0], gamma_[1]), mat_mul(gamma_[2], gamma_[3]));
}

const GammaRep& GammaRep::standard() {
  static const GammaRep rep;
  return rep;
}

Matrix4 GammaRep::blade_matrix(Blade b) const {
  Matrix4 m = mat_identity();
  for (int i = 1; i <= 4; ++i)
    if (b & (1u << (i - 1))) m = mat_mul(m, gamma(i));
  return m;
}

Matrix4 GammaRep::matrix_of(const MV& a) const {
  Matrix4 r{};
  for (Blade b = 0; b < 16; ++b) {
    if (is_zero(a[b])) continue;
    Matrix4 bm = blade_matrix(b);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r[i][j] += bm[i][j] * Gaussian(a[b]);
  }
  return r;
}

ChiralityRecord asd_chirality_record(const GammaRep& rep) {
  auto kills = [&](const Matrix4& m, Chirality c) {
    for (auto j : GammaRep::block(c))
      for (std::size_t i = 0; i < 4; ++i)
        if (!is_zero(m[i][j])) return false;
    return true;
  };
  int plus_killed = 0, minus_killed = 0;
  for (const auto& w : asd_basis()) {
    Matrix4 m = rep.matrix_of(w);
    if (kills(m, Chirality::Plus)) ++plus_killed;
    if (kills(m, Chirality::Minus)) ++minus_killed;
  }
  ChiralityRecord rec{};
  if (plus_killed == 3 && minus_killed == 0) {
    rec = {Chirality::Plus, Chirality::Minus, true};
  } else if (minus_killed == 3 && plus_killed == 0) {
    rec = {Chirality::Minus, Chirality::Plus, true};
  } else {
    rec = {Chirality::Minus, Chirality::Plus, false};
  }
  return rec;
}

}  // namespace cdv::clifford
