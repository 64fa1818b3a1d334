#include "cdv/oddmoduli.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>

namespace cdv::oddmoduli {

namespace {


constexpr std::size_t kArity = 4;  // s0, s1, t0, t1

Function add(const Function& u, const Function& v) {
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  UPoly g = UPoly::gcd(u.q, v.q);
  UPoly mu = v.q.divmod(g).first, mv = u.q.divmod(g).first;
  return {u.a * mu + v.a * mv, u.b * mu + v.b * mv, u.q * mu};
}

Function scale(const Function& u, const Rational& s) { return {u.a.scaled(s), u.b.scaled(s), u.q}; }

Function power_product(const HyperCurve& c, const Function& u0, const Function& u1, int e0, int e1) {
  Function r = Function::polynomial(UPoly::constant(1));
  for (int k = 0; k < e0; ++k) r = hyperell::multiply(c, r, u0);
  for (int k = 0; k < e1; ++k) r = hyperell::multiply(c, r, u1);
  return r;
}

Monomial bimonomial(int i, int a, int j, int b) {
  Monomial m;
  m.exp[0] = static_cast<std::uint16_t>(a - i);
  m.exp[1] = static_cast<std::uint16_t>(i);
  m.exp[2] = static_cast<std::uint16_t>(b - j);
  m.exp[3] = static_cast<std::uint16_t>(j);
  return m;
}

struct Relations {
  std::vector<Monomial> monomials;
  std::vector<std::vector<Rational>> kernel;
};

Relations relations(const EmbeddedCurve& e, int a, int b) {
  Relations r;
  std::vector<Function> fs;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      r.monomials.push_back(bimonomial(i, a, j, b));
      fs.push_back(hyperell::multiply(e.curve, power_product(e.curve, e.k_basis[0], e.k_basis[1], a - i, i),
                                      power_product(e.curve, e.k32_basis[0], e.k32_basis[1], b - j, j)));
    }
  r.kernel = hyperell::linear_relations(fs);
  return r;
}

Mat sigma_matrix(const std::vector<Function>& basis) {
  Mat m(basis.size(), basis.size(), Rational(0));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    auto coeffs = hyperell::express_in_basis(basis[a].sigma(), basis);
    if (!coeffs) throw std::logic_error("involution_matrix: sigma does not preserve the section space");
    for (std::size_t c = 0; c < basis.size(); ++c) m(a, c) = (*coeffs)[c];
  }
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat r(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
  return r;
}

Mat transpose(const Mat& a) {
  Mat r(a.cols(), a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

bool matrix_proportional(const Mat& a, const Mat& b) {
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(b(i, j)) == 0) {
        if (sgn(a(i, j)) != 0) return false;
        continue;
      }
      Rational q = a(i, j) / b(i, j);
      if (sgn(q) == 0 || (ratio && *ratio != q)) return false;
      ratio = q;
    }
  return ratio.has_value();
}

Point4 transform(const Mat& m, const Point4& z) {
  Point4 r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i] += m(i, j) * z[j];
  return r;
}

Rational dot(const Point4& a, const Point4& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < 4; ++k) s += a[k] * b[k];
  return s;
}

bool poly_proportional(const P& a, const P& b) {
  if (a.is_zero() || b.is_zero()) return false;
  Rational r = a.leading_coefficient() / b.leading_coefficient();
  return a == b.scaled(r);
}

Place image(const HyperCurve& c, const Place& p, bool apply_sigma) { return apply_sigma ? c.sigma(p) : p; }

void require_distinct(const Triple& t) {
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) throw std::invalid_argument("PointTriple: coincident points");
}

}  // namespace

EmbeddedCurve embed(const HyperCurve& c, const thetachar::CharClass& theta) {
  if (c.genus() != 2) throw std::invalid_argument("embed: genus 2 only");
  ThetaObstruction ob = even_theta_obstruction(c, theta);
  if (ob.h0 != 0) throw OddTheta("embed: theta " + theta.to_string() + " has sections");
  EmbeddedCurve e{c, theta, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  e.theta_divisor = hyperell::theta_divisor(c, theta.members()).divisor;
  e.k_divisor = hyperell::canonical_divisor(c);
  e.k32_divisor = e.k_divisor + e.theta_divisor;
  e.k52_divisor = e.k32_divisor + e.k_divisor;
  e.k_basis = hyperell::rr_space(c, e.k_divisor).basis;
  e.k32_basis = hyperell::rr_space(c, e.k32_divisor).basis;
  if (e.k_basis.size() != 2 || e.k32_basis.size() != 2) throw std::logic_error("embed: expected two sections each");

  std::vector<Place> special{c.infinity(1), c.infinity(-1)};
  for (int i = 1; i <= 6; ++i) special.push_back(c.branch(i));
  for (const auto& p : special) {
    for (const auto& [basis, d] : {std::pair{&e.k_basis, &e.k_divisor}, std::pair{&e.k32_basis, &e.k32_divisor}}) {
      int v = std::min(hyperell::valuation(c, p, (*basis)[0]), hyperell::valuation(c, p, (*basis)[1]));
      if (v != -(*d)[p]) throw BasePoint("embed: base point at " + p.to_string());
    }
  }

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      e.segre[static_cast<std::size_t>(2 * a + b)] =
          hyperell::multiply(c, e.k_basis[static_cast<std::size_t>(a)], e.k32_basis[static_cast<std::size_t>(b)]);

  Relations r = relations(e, 3, 2);
  if (r.kernel.size() != 1) throw std::logic_error("embed: expected a unique class (2,3) relation");
  e.implicit = P::zero(kArity);
  for (std::size_t k = 0; k < r.monomials.size(); ++k) e.implicit.add_term(r.monomials[k], r.kernel[0][k]);
  e.implicit = e.implicit.scaled(Rational(1) / e.implicit.leading_coefficient());

  e.ms = sigma_matrix(e.k_basis);
  e.mt = sigma_matrix(e.k32_basis);
  return e;
}

EmbeddedCurve embed_fixture() {
  return embed(HyperCurve::fixture_genus2(), thetachar::make_char(2, {1, 2, 3}));
}

std::size_t relation_count(const EmbeddedCurve& e, int a, int b) { return relations(e, a, b).kernel.size(); }

Point4 segre_point(const EmbeddedCurve& e, const Place& p) {
  int v = hyperell::valuation(e.curve, p, e.segre[0]);
  for (std::size_t k = 1; k < 4; ++k) v = std::min(v, hyperell::valuation(e.curve, p, e.segre[k]));
  Point4 z{};
  for (std::size_t k = 0; k < 4; ++k) z[k] = hyperell::local_coefficients(e.curve, p, e.segre[k], v, 1)[0];
  for (const auto& x : z)
    if (sgn(x) != 0) {
      Rational s = x;
      for (auto& y : z) y /= s;
      break;
    }
  return z;
}

bool on_segre_quadric(const Point4& z) { return z[0] * z[3] == z[1] * z[2]; }

Rational implicit_at(const EmbeddedCurve& e, const Point4& z) {
  std::array<Rational, 2> s = sgn(z[0]) != 0 || sgn(z[2]) != 0 ? std::array{z[0], z[2]} : std::array{z[1], z[3]};
  std::array<Rational, 2> t = sgn(z[0]) != 0 || sgn(z[1]) != 0 ? std::array{z[0], z[1]} : std::array{z[2], z[3]};
  std::vector<Rational> pt{s[0], s[1], t[0], t[1]};
  return e.implicit.evaluate(pt);
}

bool proportional(const Point4& a, const Point4& b) {
  bool nonzero_a = false, nonzero_b = false;
  for (std::size_t k = 0; k < 4; ++k) {
    nonzero_a |= sgn(a[k]) != 0;
    nonzero_b |= sgn(b[k]) != 0;
    for (std::size_t l = k + 1; l < 4; ++l)
      if (a[k] * b[l] != a[l] * b[k]) return false;
  }
  return nonzero_a && nonzero_b;
}

Mat involution_matrix(const EmbeddedCurve& e) {
  Mat m(4, 4, Rational(0));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) m(2 * a + b, 2 * c + d) = e.ms(a, c) * e.mt(b, d);
  return m;
}

InvolutionChecks check_involution(const EmbeddedCurve& e, const Mat& m, const std::vector<Place>& sample) {
  InvolutionChecks r;
  r.pointwise = true;
  for (const auto& p : sample) {
    r.pointwise &= proportional(transform(m, segre_point(e, p)), segre_point(e, e.curve.sigma(p)));
    ++r.points_checked;
  }
  Mat id(4, 4, Rational(0));
  for (std::size_t k = 0; k < 4; ++k) id(k, k) = 1;
  r.squares_to_scalar = matrix_proportional(mul(m, m), id);
  Mat quad(4, 4, Rational(0));
  quad(0, 3) = quad(3, 0) = Rational(1, 2);
  quad(1, 2) = quad(2, 1) = Rational(-1, 2);
  r.preserves_quadric = matrix_proportional(mul(transpose(m), mul(quad, m)), quad);
  std::vector<P> images(4, P::zero(kArity));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c) {
      images[a] += P::variable(kArity, c).scaled(e.ms(a, c));
      images[2 + a] += P::variable(kArity, 2 + c).scaled(e.mt(a, c));
    }
  r.preserves_curve = poly_proportional(e.implicit.substitute(images), e.implicit);
  r.fixes_weierstrass = true;
  for (int i = 1; i <= 6; ++i) {
    Point4 z = segre_point(e, e.curve.branch(i));
    r.fixes_weierstrass &= proportional(transform(m, z), z);
  }
  return r;
}

PlaneResult plane_through(const EmbeddedCurve& e, const Triple& t, bool apply_sigma) {
  require_distinct(t);
  std::array<Point4, 3> pts;
  Mat m(3, 4, Rational(0));
  for (std::size_t i = 0; i < 3; ++i) {
    pts[i] = segre_point(e, image(e.curve, t[i], apply_sigma));
    for (std::size_t k = 0; k < 4; ++k) m(i, k) = pts[i][k];
  }
  PlaneResult r;
  r.rank = rank(m);
  r.collinear = r.rank <= 2;
  if (r.collinear) return r;
  auto ns = nullspace(m);
  for (std::size_t k = 0; k < 4; ++k) r.plane[k] = ns.at(0)[k];
  r.incidence_ok = std::all_of(pts.begin(), pts.end(), [&](const Point4& z) { return sgn(dot(r.plane, z)) == 0; });
  return r;
}

Function plane_pullback(const EmbeddedCurve& e, const Point4& plane) {
  Function h{UPoly(), UPoly(), UPoly::constant(1)};
  for (std::size_t k = 0; k < 4; ++k)
    if (sgn(plane[k]) != 0) h = add(h, scale(e.segre[k], plane[k]));
  return h;
}

hyperell::ZeroDivisor plane_curve_divisor(const EmbeddedCurve& e, const Point4& plane) {
  Function h = plane_pullback(e, plane);
  if (h.is_zero()) throw std::domain_error("plane_curve_divisor: plane contains the curve");
  return hyperell::zero_divisor(e.curve, h, e.k52_divisor);
}

bool Prop5Report::equivalence_ok() const {
  if (collinear != sigma_collinear) return false;
  if (collinear) return h0_lk12 == 2 && h0_l_minus_theta == std::optional<std::size_t>(1);
  return h0_lk12 == 1;
}

std::string Prop5Report::describe() const {
  std::string s = "{" + triple[0].to_string() + ", " + triple[1].to_string() + ", " + triple[2].to_string() + "}: ";
  s += collinear ? "collinear" : "plane";
  s += ", h0(LK^1/2)=" + std::to_string(h0_lk12);
  if (h0_l_minus_theta) s += ", h0(L-K^1/2)=" + std::to_string(*h0_l_minus_theta);
  if (!remark_section.empty()) s += ", section " + remark_section;
  return s;
}

Prop5Report prop5_hypothesis_report(const EmbeddedCurve& e, const Triple& t) {
  require_distinct(t);
  const HyperCurve& c = e.curve;
  Prop5Report r;
  r.triple = t;
  PlaneResult direct = plane_through(e, t, false), sigma = plane_through(e, t, true);
  r.collinear = direct.collinear;
  r.sigma_collinear = sigma.collinear;
  Divisor pqr;
  for (const auto& p : t) pqr.add(p, 1);
  r.h0_lk12 = hyperell::rr_space(c, pqr - e.k_divisor + e.theta_divisor).dim();
  if (r.collinear) {
    r.h0_l_minus_theta = hyperell::rr_space(c, pqr - e.k32_divisor).dim();
    r.remark_section = "a=c=0, b=1";
  }
  for (const auto& [res, flip] : {std::pair{&direct, false}, std::pair{&sigma, true}}) {
    if (res->collinear) continue;
    hyperell::ZeroDivisor z = plane_curve_divisor(e, res->plane);
    r.plane_degree_ok &= z.degree() == 5;
    r.plane_contains_points &= res->incidence_ok;
    for (const auto& p : t) r.plane_contains_points &= z.rational[image(c, p, flip)] >= 1;
  }
  if (!direct.collinear && !sigma.collinear) {
    Mat mt = transpose(involution_matrix(e));
    r.sigma_plane_matches = proportional(sigma.plane, transform(mt, direct.plane));
  }
  const std::array<Triple, 3> others{Triple{t[0], c.sigma(t[1]), c.sigma(t[2])}, Triple{c.sigma(t[0]), t[1], c.sigma(t[2])},
                                     Triple{c.sigma(t[0]), c.sigma(t[1]), t[2]}};
  for (const auto& o : others) {
    try {
      r.other_triple_planes += !plane_through(e, o, false).collinear;
    } catch (const std::invalid_argument&) {
    }
  }
  return r;
}

std::vector<Prop5Report> prop5_reports(const EmbeddedCurve& e, const std::vector<Triple>& ts) {
  std::vector<std::future<Prop5Report>> jobs;
  for (const auto& t : ts) jobs.push_back(std::async(std::launch::async, [&e, t] { return prop5_hypothesis_report(e, t); }));
  std::vector<Prop5Report> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

ThetaObstruction even_theta_obstruction(const HyperCurve& c, const thetachar::CharClass& theta) {
  Divisor th = hyperell::theta_divisor(c, theta.members()).divisor;
  ThetaObstruction r;
  r.h0 = hyperell::rr_space(c, th).dim();
  r.h1 = hyperell::rr_space(c, hyperell::canonical_divisor(c) - th).dim();
  return r;
}

int riemann_hurwitz(int g_base, int degree, int branch_count) {
  if (g_base < 0 || degree < 1 || branch_count < 0) throw std::invalid_argument("riemann_hurwitz: invalid data");
  const int twice = degree * (2 * g_base - 2) + branch_count + 2;
  if (twice < 0 || twice % 2 != 0) throw std::invalid_argument("riemann_hurwitz: genus is not a nonnegative integer");
  return twice / 2;
}

int prym_dimension(int g) { return riemann_hurwitz(g, 2, 4 * g - 4) - g; }

std::vector<Place> point_pool(const HyperCurve& c, int bound) {
  std::vector<Place> pool;
  for (int i = 1; i <= static_cast<int>(c.branch_points().size()); ++i) pool.push_back(c.branch(i));
  pool.push_back(c.infinity(1));
  pool.push_back(c.infinity(-1));
  for (const auto& p : c.search_rational_places(bound)) pool.push_back(p);
  return pool;
}

std::vector<Triple> sample_triples(const std::vector<Place>& pool, std::size_t n, std::uint64_t seed) {
  if (pool.size() < 3) throw std::invalid_argument("sample_triples: need at least three points");
  std::mt19937_64 rng(seed);
  std::vector<Triple> out;
  while (out.size() < n) {
    std::array<std::size_t, 3> idx;
    for (auto& i : idx) i = static_cast<std::size_t>(rng() % pool.size());
    if (idx[0] == idx[1] || idx[0] == idx[2] || idx[1] == idx[2]) continue;
    out.push_back({pool[idx[0]], pool[idx[1]], pool[idx[2]]});
  }
  return out;
}

std::vector<Triple> engineered_collinear_triples(const EmbeddedCurve& e) {
  std::vector<int> in = e.theta.members(), out;
  for (int i = 1; i <= 6; ++i)
    if (std::find(in.begin(), in.end(), i) == in.end()) out.push_back(i);
  auto triple = [&](const std::vector<int>& idx) {
    return Triple{e.curve.branch(idx.at(0)), e.curve.branch(idx.at(1)), e.curve.branch(idx.at(2))};
  };
  return {triple(in), triple(out)};
}

std::vector<Triple> ruling_triples(const EmbeddedCurve& e, int bound) {
  std::set<std::vector<Place>> seen;
  std::vector<Triple> out;
  for (int b = 0; b <= bound; ++b)
    for (int a = -bound; a <= bound; ++a) {
      if (std::gcd(a, b) != 1 || (b == 0 && a != 1)) continue;
      Function h = add(scale(e.k32_basis[0], b), scale(e.k32_basis[1], -a));
      hyperell::ZeroDivisor z = hyperell::zero_divisor(e.curve, h, e.k32_divisor);
      if (z.other_degree != 0 || z.rational.terms().size() != 3) continue;
      std::vector<Place> pts;
      for (const auto& [p, n] : z.rational.terms()) pts.push_back(p);
      if (seen.insert(pts).second) out.push_back({pts[0], pts[1], pts[2]});
    }
  return out;
}

RandomCurve random_curve_with_point(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto rational = [&](int bound) {
    Rational q(static_cast<long>(rng() % static_cast<unsigned>(2 * bound + 1)) - bound,
               static_cast<long>(rng() % 3) + 1);
    q.canonicalize();
    return q;
  };
  while (true) {
    std::vector<Rational> xs;
    for (int k = 0; k < 5; ++k) xs.push_back(rational(6));
    Rational c = rational(6), s = rational(6);
    std::set<Rational> distinct(xs.begin(), xs.end());
    if (distinct.size() != 5 || distinct.count(c) || sgn(s) == 0) continue;
    Rational prod = 1;
    for (const auto& x : xs) prod *= c - x;
    Rational x6 = c - s * s / prod;
    if (distinct.count(x6)) continue;
    xs.push_back(x6);
    HyperCurve curve = HyperCurve::from_roots(xs);
    return {curve, curve.split(c, s)};
  }
}

}  // namespace cdv::oddmoduli
