#include "cdv/repsl2.hpp"

namespace cdv::repsl2 {

using BF = BinaryForm<Rational>;

std::string generator_name(Generator x) {
  switch (x) {
    case Generator::E:
      return "E";
    case Generator::H:
      return "H";
    case Generator::F:
      return "F";
  }
  return "?";
}

std::string Sl2Report::describe_failures() const {
  std::string s;
  for (const auto& f : failures) {
    if (!s.empty()) s += ", ";
    s += generator_name(f.x) + "(e" + std::to_string(f.i) + ",e" + std::to_string(f.j) + ")";
  }
  return s;
}

Matrix<Rational> symplectic_matrix(int m) {
  Matrix<Rational> w(static_cast<std::size_t>(m + 1), static_cast<std::size_t>(m + 1), Rational(0));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      w(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = symplectic_form(BF::basis(m, i), BF::basis(m, j));
  return w;
}

Sl2Report invariance_check(int m) {
  if (m % 2 == 0) throw EvenDegree("invariance_check: degree must be odd");
  Sl2Report rep;
  rep.m = m;
  for (Generator x : kGenerators)
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) {
        BF u = BF::basis(m, i), v = BF::basis(m, j);
        Rational s = symplectic_form(generator_action(x, u), v) + symplectic_form(u, generator_action(x, v));
        ++rep.cases;
        if (s != 0) rep.failures.push_back({x, i, j});
      }
  return rep;
}

Sl2Report equivariance_check(int m) {
  if (m % 2 == 0) throw EvenDegree("equivariance_check: degree must be odd");
  Sl2Report rep;
  rep.m = m;
  for (Generator x : kGenerators)
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) {
        BF u = BF::basis(m, i), v = BF::basis(m, j);
        BF lhs = moment_map(generator_action(x, u), v) + moment_map(u, generator_action(x, v));
        BF rhs = generator_action(x, moment_map(u, v));
        ++rep.cases;
        if (!(lhs == rhs)) rep.failures.push_back({x, i, j});
      }
  return rep;
}

bool commutation_check(int m) {
  auto act = [](Generator x, const BF& u) { return generator_action(x, u); };
  for (int j = 0; j <= m; ++j) {
    BF u = BF::basis(m, j);
    BF he = act(Generator::H, act(Generator::E, u)) - act(Generator::E, act(Generator::H, u));
    BF hf = act(Generator::H, act(Generator::F, u)) - act(Generator::F, act(Generator::H, u));
    BF ef = act(Generator::E, act(Generator::F, u)) - act(Generator::F, act(Generator::E, u));
    if (!(he == act(Generator::E, u).scaled(2))) return false;
    if (!(hf == act(Generator::F, u).scaled(-2))) return false;
    if (!(ef == act(Generator::H, u))) return false;
  }
  return true;
}

bool top_transvectant_check(int m) {
  const Rational c = top_transvectant_constant(m);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      BF u = BF::basis(m, i), v = BF::basis(m, j);
      BF t = transvectant(u, v, m);
      if (t.a[0] != c * symplectic_form(u, v)) return false;
    }
  return true;
}

Poly<Rational> nilpotency_determinant_m1() {
  using P = Poly<Rational>;
  BinaryForm<P> u(1, {P::variable(2, 0), P::variable(2, 1)});
  return sl2_determinant(moment_map(u, u));
}

IsotropyReport isotropy_check_m3() {
  IsotropyReport rep;
  const std::vector<BF> span = {BF::basis(3, 2), BF::basis(3, 3)};
  rep.dimension = span.size();
  rep.isotropic = true;
  for (const auto& u : span)
    for (const auto& v : span)
      if (symplectic_form(u, v) != 0) rep.isotropic = false;
  rep.omega_e0_e3 = symplectic_form(BF::basis(3, 0), BF::basis(3, 3));
  return rep;
}

int degree_bookkeeping(int g, int deg_l) {
  if (g < 2) throw std::invalid_argument("degree_bookkeeping: genus must be at least 2");
  return g - 1 - deg_l;
}

}  // namespace cdv::repsl2
