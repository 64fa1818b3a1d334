#include "cdv/hyperell.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "cdv/matrix.hpp"

namespace cdv::hyperell {

// ---- places ---------------------------------------------------------------

namespace {

int kind_rank(Place::Kind k) { return static_cast<int>(k); }

}  // namespace

bool operator==(const Place& a, const Place& b) {
  return a.kind == b.kind && a.index == b.index && a.x == b.x && a.y == b.y && a.sign == b.sign;
}

bool operator<(const Place& a, const Place& b) {
  if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
  if (a.index != b.index) return a.index < b.index;
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.sign > b.sign;
}

std::string Place::to_string() const {
  switch (kind) {
    case Kind::Branch:
      return "x" + std::to_string(index) + "~";
    case Kind::Split:
      return "(" + x.get_str() + "," + y.get_str() + ")";
    case Kind::Infinity:
      return sign > 0 ? "inf+" : "inf-";
  }
  return "?";
}

int ramification(const Place& p) { return p.kind == Place::Kind::Branch ? 2 : 1; }

// ---- curve ----------------------------------------------------------------

HyperCurve HyperCurve::from_roots(std::vector<Rational> roots, const Rational& lead) {
  for (auto& r : roots) r.canonicalize();
  const std::size_t n = roots.size();
  if (n < 4 || n % 2 != 0) throw CurveError("HyperCurve: need an even number (>= 4) of branch points");
  std::vector<Rational> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw CurveError("HyperCurve: branch points must be distinct");
  HyperCurve c;
  if (sgn(lead) == 0 || !rational_sqrt(lead, c.lead_sqrt_))
    throw CurveError("HyperCurve: leading coefficient must be a nonzero square");
  c.genus_ = static_cast<int>(n / 2) - 1;
  c.roots_ = std::move(roots);
  c.f_ = UPoly::from_roots(c.roots_, lead);
  if (UPoly::gcd(c.f_, c.f_.derivative()).degree() != 0) throw CurveError("HyperCurve: f is not squarefree");
  return c;
}

HyperCurve HyperCurve::from_coefficients(int genus, const UPoly& f) {
  if (genus < 1) throw CurveError("HyperCurve: genus must be positive");
  if (f.degree() != 2 * genus + 2) throw CurveError("HyperCurve: deg f must be 2g+2");
  if (UPoly::gcd(f, f.derivative()).degree() != 0) throw CurveError("HyperCurve: f is not squarefree");
  std::vector<Rational> roots = f.rational_roots();
  if (static_cast<int>(roots.size()) != 2 * genus + 2) throw CurveError("HyperCurve: f must split into rational linear factors");
  HyperCurve c = from_roots(roots, f.leading());
  if (!(c.f_ == f)) throw CurveError("HyperCurve: internal mismatch rebuilding f");
  return c;
}

HyperCurve HyperCurve::fixture_genus2() { return from_roots({0, 1, 2, 3, 4, 5}); }

Place HyperCurve::branch(int i) const {
  if (i < 1 || i > static_cast<int>(roots_.size())) throw std::out_of_range("HyperCurve::branch: index out of range");
  Place p;
  p.kind = Place::Kind::Branch;
  p.index = i;
  p.x = roots_[static_cast<std::size_t>(i - 1)];
  return p;
}

Place HyperCurve::infinity(int sign) const {
  Place p;
  p.kind = Place::Kind::Infinity;
  p.sign = sign >= 0 ? 1 : -1;
  return p;
}

Place HyperCurve::split(const Rational& c, const Rational& s) const {
  Rational v = f_(c);
  if (sgn(v) == 0) throw CurveError("HyperCurve::split: x is a branch point");
  if (s * s != v) throw CurveError("HyperCurve::split: point is not on the curve");
  Place p;
  p.kind = Place::Kind::Split;
  p.x = c;
  p.y = s;
  p.x.canonicalize();
  p.y.canonicalize();
  return p;
}

std::vector<Place> HyperCurve::places_over(const Rational& c) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i] == c) return {branch(static_cast<int>(i + 1))};
  Rational s;
  if (!rational_sqrt(f_(c), s)) return {};
  return {split(c, s), split(c, -s)};
}

bool HyperCurve::contains(const Place& p) const {
  switch (p.kind) {
    case Place::Kind::Branch:
      return p.index >= 1 && p.index <= static_cast<int>(roots_.size()) && roots_[static_cast<std::size_t>(p.index - 1)] == p.x;
    case Place::Kind::Split:
      return sgn(p.y) != 0 && p.y * p.y == f_(p.x);
    case Place::Kind::Infinity:
      return p.sign == 1 || p.sign == -1;
  }
  return false;
}

Place HyperCurve::sigma(const Place& p) const {
  Place q = p;
  if (p.kind == Place::Kind::Split) q.y = -p.y;
  if (p.kind == Place::Kind::Infinity) q.sign = -p.sign;
  return q;
}

std::vector<Place> HyperCurve::search_rational_places(int bound) const {
  std::vector<Place> out;
  std::set<Rational> seen;
  for (int den = 1; den <= bound; ++den)
    for (int num = -bound; num <= bound; ++num) {
      Rational c(num, den);
      c.canonicalize();
      if (!seen.insert(c).second) continue;
      Rational v = f_(c), s;
      if (sgn(v) == 0 || !rational_sqrt(v, s)) continue;
      out.push_back(split(c, s));
      out.push_back(split(c, -s));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- divisors -------------------------------------------------------------

Divisor Divisor::of(const Place& p, int n) { return Divisor().add(p, n); }

int Divisor::operator[](const Place& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

int Divisor::degree() const {
  int d = 0;
  for (const auto& [p, n] : terms_) d += n;
  return d;
}

bool Divisor::is_effective() const {
  for (const auto& [p, n] : terms_)
    if (n < 0) return false;
  return true;
}

Divisor& Divisor::add(const Place& p, int n) {
  int v = (*this)[p] + n;
  if (v == 0)
    terms_.erase(p);
  else
    terms_[p] = v;
  return *this;
}

Divisor operator+(Divisor a, const Divisor& b) {
  for (const auto& [p, n] : b.terms_) a.add(p, n);
  return a;
}

Divisor operator-(Divisor a, const Divisor& b) {
  for (const auto& [p, n] : b.terms_) a.add(p, -n);
  return a;
}

Divisor Divisor::scaled(int k) const {
  Divisor r;
  if (k == 0) return r;
  for (const auto& [p, n] : terms_) r.terms_[p] = n * k;
  return r;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, n] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(n) + "*" + p.to_string();
  }
  return s;
}

std::string Function::to_string() const {
  std::string s = "(" + a.to_string() + ") + (" + b.to_string() + ")*y";
  if (q.degree() == 0 && q.leading() == 1) return s;
  return "(" + s + ")/(" + q.to_string() + ")";
}

Function multiply(const HyperCurve& c, const Function& u, const Function& v) {
  return {u.a * v.a + u.b * v.b * c.f(), u.a * v.b + u.b * v.a, u.q * v.q};
}

// ---- local expansions -----------------------------------------------------

namespace {

constexpr int kExact = 1 << 20;

// Truncated Laurent series: c[k] is the coefficient of t^(start + k); all
// coefficients of order < prec are known.
struct Series {
  int start = 0;
  int prec = kExact;
  std::vector<Rational> c;

  static Series monomial(const Rational& coeff, int order) { return {order, kExact, {coeff}}; }

  Rational at(int o) const {
    if (o >= prec) throw std::logic_error("Series: coefficient beyond precision");
    if (o < start) return 0;
    auto k = static_cast<std::size_t>(o - start);
    return k < c.size() ? c[k] : Rational(0);
  }

  /// First nonzero order below prec, if any.
  std::optional<int> valuation() const {
    for (std::size_t k = 0; k < c.size(); ++k) {
      int o = start + static_cast<int>(k);
      if (o >= prec) break;
      if (sgn(c[k]) != 0) return o;
    }
    return std::nullopt;
  }

  Series derivative() const {
    Series r{start - 1, prec >= kExact ? kExact : prec - 1, {}};
    for (std::size_t k = 0; k < c.size(); ++k) r.c.push_back(c[k] * (start + static_cast<int>(k)));
    return r;
  }
};

Series operator+(const Series& a, const Series& b) {
  Series r;
  r.start = std::min(a.start, b.start);
  r.prec = std::min(a.prec, b.prec);
  int end = std::max(a.start + static_cast<int>(a.c.size()), b.start + static_cast<int>(b.c.size()));
  end = std::min(end, r.prec);
  for (int o = r.start; o < end; ++o) r.c.push_back((o < a.prec ? a.at(o) : Rational(0)) + (o < b.prec ? b.at(o) : Rational(0)));
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r;
  r.start = a.start + b.start;
  r.prec = std::min({kExact, a.prec + b.start, b.prec + a.start});
  if (a.c.empty() || b.c.empty()) return r;
  int len = std::min(static_cast<int>(a.c.size() + b.c.size()) - 1, r.prec - r.start);
  if (len <= 0) return r;
  r.c.assign(static_cast<std::size_t>(len), Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c.size() && static_cast<int>(i + j) < len; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

/// Power series square root with given constant term, n terms.
std::vector<Rational> sqrt_series(const std::vector<Rational>& g, const Rational& root0, int n) {
  std::vector<Rational> y(static_cast<std::size_t>(n), Rational(0));
  if (n == 0) return y;
  y[0] = root0;
  for (int k = 1; k < n; ++k) {
    Rational acc = k < static_cast<int>(g.size()) ? g[static_cast<std::size_t>(k)] : Rational(0);
    for (int j = 1; j < k; ++j) acc -= y[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(k - j)];
    y[static_cast<std::size_t>(k)] = acc / (2 * root0);
  }
  return y;
}

/// w(u) = sum_{k>=1} w_k u^k with F(w(u)) = u, F(0) = 0, F'(0) != 0; n terms.
std::vector<Rational> reversion(const std::vector<Rational>& f, int n) {
  std::vector<Rational> w(static_cast<std::size_t>(n + 1), Rational(0));
  const Rational f1 = f.at(1);
  for (int k = 1; k <= n; ++k) {
    // Coefficient of u^k in F(w) using w_1..w_{k-1}.
    std::vector<Rational> power(static_cast<std::size_t>(k + 1), Rational(0));
    power[0] = 1;
    Rational acc = 0;
    for (std::size_t j = 1; j < f.size(); ++j) {
      std::vector<Rational> next(static_cast<std::size_t>(k + 1), Rational(0));
      for (int a = 0; a <= k; ++a) {
        if (sgn(power[static_cast<std::size_t>(a)]) == 0) continue;
        for (int b = 1; a + b <= k; ++b) next[static_cast<std::size_t>(a + b)] += power[static_cast<std::size_t>(a)] * w[static_cast<std::size_t>(b)];
      }
      power = std::move(next);
      acc += f[j] * power[static_cast<std::size_t>(k)];
    }
    Rational target = k == 1 ? Rational(1) : Rational(0);
    w[static_cast<std::size_t>(k)] = (target - acc) / f1;
  }
  return w;
}

struct Local {
  Series x;
  Series y;
};

/// Expansions of x and y at p such that x^k and x^k y have precision at
/// least `target` for k <= max_deg.
Local local_expansion(const HyperCurve& c, const Place& p, int target, int max_deg) {
  const int g = c.genus();
  Local loc;
  switch (p.kind) {
    case Place::Kind::Branch: {
      // Uniformiser y; x = x_i + w(y^2) with f(x_i + w) = y^2.
      int n = std::max(1, (std::max(target, 1) + 1) / 2 + 1);
      std::vector<Rational> w = reversion(c.f().shifted(p.x).coeffs(), n);
      loc.x.start = 0;
      loc.x.prec = 2 * (n + 1);
      loc.x.c.assign(static_cast<std::size_t>(2 * n + 1), Rational(0));
      loc.x.c[0] = p.x;
      for (int k = 1; k <= n; ++k) loc.x.c[static_cast<std::size_t>(2 * k)] = w[static_cast<std::size_t>(k)];
      loc.y = Series::monomial(1, 1);
      break;
    }
    case Place::Kind::Split: {
      // Uniformiser x - c; y = sqrt(f(c + t)) with y(0) = s.
      int n = std::max(target, 1) + 1;
      loc.x = Series{0, kExact, {p.x, Rational(1)}};
      loc.y = Series{0, n, sqrt_series(c.f().shifted(p.x).coeffs(), p.y, n)};
      break;
    }
    case Place::Kind::Infinity: {
      // Uniformiser 1/x; y = sign t^(-g-1) sqrt(t^(2g+2) f(1/t)).
      int n = std::max(1, target + g + 1 + std::max(max_deg, 0) + 1);
      std::vector<Rational> rev(c.f().coeffs().rbegin(), c.f().coeffs().rend());
      std::vector<Rational> s = sqrt_series(rev, c.lead_sqrt() * p.sign, n);
      loc.x = Series::monomial(1, -1);
      loc.y = Series{-(g + 1), n - (g + 1), std::move(s)};
      break;
    }
  }
  return loc;
}

Series eval(const UPoly& p, const Series& x) {
  Series acc{0, kExact, {}};
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + Series::monomial(p.coeff(k), 0);
  return acc;
}

/// Valuation of A + B y at p, raising precision until a nonzero term shows.
int numerator_valuation(const HyperCurve& c, const Place& p, const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("valuation: zero function");
  int max_deg = std::max(a.degree(), b.degree());
  for (int target = 8;; target *= 2) {
    Local loc = local_expansion(c, p, target, max_deg);
    Series s = eval(a, loc.x) + eval(b, loc.x) * loc.y;
    if (auto v = s.valuation()) return *v;
    if (target > 4096) throw std::logic_error("valuation: precision exhausted");
  }
}

}  // namespace

int valuation(const HyperCurve& c, const Place& p, const Function& h) {
  if (h.q.is_zero()) throw std::domain_error("valuation: zero denominator");
  return numerator_valuation(c, p, h.a, h.b) - numerator_valuation(c, p, h.q, UPoly());
}

std::vector<Rational> local_coefficients(const HyperCurve& c, const Place& p, const Function& h, int from, int count) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(count, 0)), Rational(0));
  if (h.is_zero() || count <= 0) return out;
  const int vn = numerator_valuation(c, p, h.a, h.b), vd = numerator_valuation(c, p, h.q, UPoly());
  const int v = vn - vd;
  const int terms = from + count - v;
  if (terms <= 0) return out;
  const int max_deg = std::max({h.a.degree(), h.b.degree(), h.q.degree()});
  for (int target = std::max(8, std::max(vn, vd) + terms + 1);; target *= 2) {
    Local loc = local_expansion(c, p, target, max_deg);
    Series num = eval(h.a, loc.x) + eval(h.b, loc.x) * loc.y;
    Series den = eval(h.q, loc.x);
    if (num.prec < vn + terms || den.prec < vd + terms) {
      if (target > 1 << 14) throw std::logic_error("local_coefficients: precision exhausted");
      continue;
    }
    std::vector<Rational> quot(static_cast<std::size_t>(terms));
    const Rational d0 = den.at(vd);
    for (int k = 0; k < terms; ++k) {
      Rational acc = num.at(vn + k);
      for (int j = 1; j <= k; ++j) acc -= den.at(vd + j) * quot[static_cast<std::size_t>(k - j)];
      quot[static_cast<std::size_t>(k)] = acc / d0;
    }
    for (int k = 0; k < count; ++k) {
      int o = from + k - v;
      if (o >= 0) out[static_cast<std::size_t>(k)] = quot[static_cast<std::size_t>(o)];
    }
    return out;
  }
}

int differential_valuation(const HyperCurve& c, const Place& p) {
  for (int target = 8;; target *= 2) {
    Local loc = local_expansion(c, p, target, 1);
    auto vdx = loc.x.derivative().valuation();
    auto vy = loc.y.valuation();
    if (vdx && vy) return *vdx - *vy;
    if (target > 4096) throw std::logic_error("differential_valuation: precision exhausted");
  }
}

Divisor canonical_divisor(const HyperCurve& c) {
  Divisor k;
  for (int s : {1, -1}) k.add(c.infinity(s), differential_valuation(c, c.infinity(s)));
  for (int i = 1; i <= static_cast<int>(c.branch_points().size()); ++i) {
    int v = differential_valuation(c, c.branch(i));
    if (v != 0) throw std::logic_error("canonical_divisor: dx/y has a zero or pole at a branch place");
  }
  if (k.degree() != 2 * c.genus() - 2) throw std::logic_error("canonical_divisor: degree is not 2g-2");
  return k;
}

bool is_divisor_of(const HyperCurve& c, const Function& h, const Divisor& e) {
  if (h.is_zero() || e.degree() != 0) return false;
  std::set<Place> places;
  for (const auto& [p, n] : e.terms()) places.insert(p);
  places.insert(c.infinity(1));
  places.insert(c.infinity(-1));
  std::vector<Rational> roots = h.q.rational_roots();
  UPoly split = UPoly::constant(1);
  for (const auto& r : roots) {
    for (const auto& p : c.places_over(r)) places.insert(p);
    split = split * UPoly::linear(r);
  }
  // Poles over irrational or non-square x-values cannot be certified here.
  UPoly rest = h.q;
  for (const auto& r : roots)
    while (sgn(rest(r)) == 0) rest = rest.divmod(UPoly::linear(r)).first;
  if (rest.degree() != 0) return false;
  for (const auto& r : roots)
    if (c.places_over(r).empty()) return false;
  for (const auto& p : places)
    if (valuation(c, p, h) < e[p]) return false;
  return true;
}

namespace {

int root_order(UPoly p, const Rational& r) {
  int k = 0;
  while (!p.is_zero() && sgn(p(r)) == 0) {
    p = p.divmod(UPoly::linear(r)).first;
    ++k;
  }
  return k;
}

}  // namespace

ZeroDivisor zero_divisor(const HyperCurve& c, const Function& h, const Divisor& d) {
  if (h.is_zero()) throw std::domain_error("zero_divisor: zero function");
  const UPoly norm = h.a * h.a - h.b * h.b * c.f();
  std::set<Place> places{c.infinity(1), c.infinity(-1)};
  for (const auto& [p, n] : d.terms()) places.insert(p);
  ZeroDivisor z;
  std::vector<Rational> roots = norm.rational_roots();
  for (const auto& r : h.q.rational_roots())
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  UPoly rest_n = norm, rest_q = h.q;
  for (const auto& r : roots) {
    const int on = root_order(norm, r), oq = root_order(h.q, r);
    for (int k = 0; k < on; ++k) rest_n = rest_n.divmod(UPoly::linear(r)).first;
    for (int k = 0; k < oq; ++k) rest_q = rest_q.divmod(UPoly::linear(r)).first;
    auto over = c.places_over(r);
    if (over.empty())
      z.other_degree += on - 2 * oq;
    else
      places.insert(over.begin(), over.end());
  }
  if (rest_q.degree() != 0) throw std::logic_error("zero_divisor: denominator has irrational roots");
  z.other_degree += rest_n.degree();
  for (const auto& p : places) {
    const int m = valuation(c, p, h) + d[p];
    if (m < 0) throw std::domain_error("zero_divisor: function not in L(D) at " + p.to_string());
    if (m > 0) z.rational.add(p, m);
  }
  if (z.degree() != d.degree()) throw std::logic_error("zero_divisor: degree mismatch for " + h.to_string());
  return z;
}

// ---- theta characteristics ------------------------------------------------

namespace {

Divisor infinity_pair(const HyperCurve& c, int k) { return Divisor::of(c.infinity(1), k) + Divisor::of(c.infinity(-1), k); }

}  // namespace

ThetaDivisor theta_divisor(const HyperCurve& c, const std::vector<int>& t) {
  ThetaDivisor out;
  out.chr = thetachar::make_char(c.genus(), t);
  const int g = c.genus(), n = static_cast<int>(t.size());
  for (int i : t) out.divisor.add(c.branch(i), 1);
  out.divisor = out.divisor + infinity_pair(c, (g - 1 - n) / 2);
  UPoly w = UPoly::constant(1);
  for (int i : t) w = w * UPoly::linear(c.branch_point(i));
  out.witness = Function::polynomial(w);
  out.witness_ok = is_divisor_of(c, out.witness, out.divisor.scaled(2) - canonical_divisor(c));
  return out;
}

Function complement_witness(const HyperCurve& c, const std::vector<int>& t) {
  UPoly q = UPoly::constant(1);
  for (int i : t) q = q * UPoly::linear(c.branch_point(i));
  Rational lead = c.lead_sqrt() * c.lead_sqrt();
  return {UPoly(), UPoly::constant(Rational(1) / lead), q};
}

// ---- Riemann-Roch ---------------------------------------------------------

std::vector<Function> rr_basis(const HyperCurve& c, const Divisor& d, Part part) {
  const int g = c.genus();
  // Pole orders allowed over each finite x-value, in powers of (x - c).
  std::map<Rational, int> e;
  for (const auto& [p, n] : d.terms()) {
    if (!p.is_finite() || n <= 0) continue;
    int r = ramification(p);
    int need = (n + r - 1) / r;
    int& slot = e[p.x];
    slot = std::max(slot, need);
  }
  UPoly q = UPoly::constant(1);
  int deg_q = 0;
  for (const auto& [x, k] : e) {
    q = q * UPoly::linear(x).pow(static_cast<unsigned>(k));
    deg_q += k;
  }
  const Place inf_p = c.infinity(1), inf_m = c.infinity(-1);
  const int big_n = std::max(d[inf_p], d[inf_m]) + deg_q;
  if (big_n < 0) return {};
  const int deg_a = part == Part::Odd ? -1 : big_n;
  const int deg_b = part == Part::Even ? -1 : big_n - g - 1;
  const int cols_a = deg_a + 1, cols_b = std::max(deg_b + 1, 0);
  const int cols = cols_a + cols_b;
  if (cols <= 0) return {};

  std::set<Place> places{inf_p, inf_m};
  for (const auto& [p, n] : d.terms()) places.insert(p);
  for (const auto& [x, k] : e)
    for (const auto& p : c.places_over(x)) places.insert(p);

  std::vector<std::vector<Rational>> rows;
  const int max_deg = std::max(deg_a, deg_b);
  for (const auto& p : places) {
    int required;
    if (p.is_finite()) {
      auto it = e.find(p.x);
      int ek = it == e.end() ? 0 : it->second;
      required = -d[p] + ek * ramification(p);
    } else {
      required = -d[p] - deg_q;
    }
    const int lowest = p.is_finite() ? 0 : -std::max(deg_a, deg_b + g + 1);
    if (required <= lowest) continue;
    Local loc = local_expansion(c, p, required, max_deg);
    std::vector<Series> columns;
    Series xk = Series::monomial(1, 0);
    std::vector<Series> powers;
    for (int k = 0; k <= std::max(max_deg, 0); ++k) {
      powers.push_back(xk);
      xk = xk * loc.x;
    }
    for (int k = 0; k <= deg_a; ++k) columns.push_back(powers[static_cast<std::size_t>(k)]);
    for (int k = 0; k <= deg_b; ++k) columns.push_back(powers[static_cast<std::size_t>(k)] * loc.y);
    for (int o = lowest; o < required; ++o) {
      std::vector<Rational> row;
      for (const auto& s : columns) row.push_back(s.at(o));
      rows.push_back(std::move(row));
    }
  }

  Matrix<Rational> m(rows.size(), static_cast<std::size_t>(cols), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j) m(i, j) = rows[i][j];
  std::vector<Function> basis;
  for (const auto& v : nullspace(m)) {
    std::vector<Rational> a(v.begin(), v.begin() + cols_a), b(v.begin() + cols_a, v.end());
    basis.push_back({UPoly(a), UPoly(b), q});
  }
  return basis;
}

std::vector<std::vector<Rational>> linear_relations(const std::vector<Function>& hs) {
  if (hs.empty()) return {};
  // Common denominator, then compare coefficients of a and b.
  UPoly common = UPoly::constant(1);
  for (const auto& g : hs) common = common.divmod(UPoly::gcd(common, g.q)).first * g.q;
  std::vector<std::pair<UPoly, UPoly>> cols;
  int deg = 0;
  for (const auto& g : hs) {
    UPoly m = common.divmod(g.q).first;
    cols.emplace_back(g.a * m, g.b * m);
    deg = std::max({deg, cols.back().first.degree(), cols.back().second.degree()});
  }
  Matrix<Rational> m(2 * static_cast<std::size_t>(deg + 1), cols.size(), Rational(0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int k = 0; k <= deg; ++k) {
      m(static_cast<std::size_t>(k), j) = cols[j].first.coeff(k);
      m(static_cast<std::size_t>(deg + 1 + k), j) = cols[j].second.coeff(k);
    }
  return nullspace(m);
}

std::optional<std::vector<Rational>> express_in_basis(const Function& h, const std::vector<Function>& basis) {
  std::vector<Function> all = basis;
  all.push_back(h);
  for (const auto& v : linear_relations(all)) {
    if (sgn(v.back()) == 0) continue;
    std::vector<Rational> out;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) out.push_back(-v[j] / v.back());
    return out;
  }
  return std::nullopt;
}

RRSpace rr_space(const HyperCurve& c, const Divisor& d) {
  RRSpace out;
  out.divisor = d;
  out.basis = rr_basis(c, d);
  out.dim_dual = rr_basis(c, canonical_divisor(c) - d).size();
  const long lhs = static_cast<long>(out.basis.size()) - static_cast<long>(out.dim_dual);
  out.riemann_roch_ok = lhs == d.degree() - c.genus() + 1;
  out.pole_bounds_ok = true;
  std::set<Place> places{c.infinity(1), c.infinity(-1)};
  for (const auto& [p, n] : d.terms()) places.insert(p);
  for (const auto& h : out.basis) {
    for (const auto& r : h.q.rational_roots())
      for (const auto& p : c.places_over(r)) places.insert(p);
    for (const auto& p : places)
      if (valuation(c, p, h) < -d[p]) out.pole_bounds_ok = false;
  }
  if (!out.riemann_roch_ok) throw std::logic_error("rr_space: Riemann-Roch identity fails for " + d.to_string());
  if (!out.pole_bounds_ok) throw std::logic_error("rr_space: basis violates a pole bound for " + d.to_string());
  return out;
}

ThetaTable h0_all_theta(const HyperCurve& c) {
  ThetaTable table;
  for (const auto& chr : thetachar::enumerate_chars(c.genus())) {
    ThetaDivisor td = theta_divisor(c, chr.members());
    if (!td.witness_ok) throw std::logic_error("h0_all_theta: 2D ~ K witness failed for " + chr.to_string());
    ThetaRow row{chr, rr_space(c, td.divisor).dim()};
    (row.parity() == thetachar::Parity::Odd ? table.odd : table.even) += 1;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace cdv::hyperell
