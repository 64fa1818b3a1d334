#include "cdv/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdv {

UPoly::UPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::from_roots(const std::vector<Rational>& roots, const Rational& lead) {
  UPoly p = constant(lead);
  for (const auto& r : roots) p = p * linear(r);
  return p;
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const { return scaled(-1); }

UPoly UPoly::scaled(const Rational& s) const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= s;
  return UPoly(std::move(r));
}

UPoly UPoly::pow(unsigned n) const {
  UPoly r = constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::shifted(const Rational& c) const {
  UPoly r;
  UPoly base({c, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * base + constant(*it);
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("UPoly::divmod: division by zero");
  std::vector<Rational> rem = c_;
  if (degree() < d.degree()) return {UPoly(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - d.degree() + 1), Rational(0));
  const Rational lead = d.leading();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + d.degree());
    Rational f = rem[top] / lead;
    q[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());
}

namespace {

/// Sign variations of (1+t)^n p((a + b t)/(1 + t)): an upper bound for the
/// number of roots in (a, b), exact when it is 0 or 1.
int descartes_bound(const UPoly& p, const Rational& a, const Rational& b) {
  const int n = p.degree();
  UPoly q;
  for (int k = 0; k <= n; ++k) {
    if (sgn(p.coeff(k)) == 0) continue;
    q = q + (UPoly({a, b}).pow(static_cast<unsigned>(k)) * UPoly({Rational(1), Rational(1)}).pow(static_cast<unsigned>(n - k)))
                .scaled(p.coeff(k));
  }
  int changes = 0, last = 0;
  for (const auto& c : q.coeffs()) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

mpz_class floor_of(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(Rational lo, Rational hi) {
  mpz_class fl = floor_of(lo);
  if (fl == lo) return Rational(fl);
  if (fl + 1 <= hi) return Rational(fl + 1);
  // lo and hi share the integer part; recurse on reciprocals of fractional parts.
  Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  Rational r = fl + 1 / inner;
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<Rational> UPoly::rational_roots() const {
  if (is_zero()) throw std::invalid_argument("UPoly::rational_roots: zero polynomial");
  if (degree() <= 0) return {};
  UPoly p = divmod(gcd(*this, derivative())).first;  // squarefree part
  p = p.scaled(Rational(1) / p.leading());
  mpz_class l = 1;
  for (const auto& c : p.c_) l = lcm(l, mpz_class(c.get_den()));
  const mpz_class lead = mpz_class(p.leading() * l);
  // Interval width below which at most one fraction with denominator <= lead fits.
  const Rational width(1, lead * lead * 2);
  Rational bound = 0;
  for (const auto& c : p.c_) bound = std::max(bound, Rational(abs(c)));
  bound += 1;

  std::vector<Rational> roots;
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  auto sign_at = [&](const Rational& x) { return sgn(p(x)); };
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int v = descartes_bound(p, a, b);
    if (v == 0) continue;
    const int sa = sign_at(a), sb = sign_at(b);
    if (v == 1 && sa != 0 && sb != 0) {
      while (b - a > width) {
        Rational m = (a + b) / 2;
        int sm = sign_at(m);
        if (sm == 0) {
          a = b = m;
          break;
        }
        if (sm == sa) a = m; else b = m;
      }
      Rational r = simplest_between(a, b);
      if (sign_at(r) == 0) roots.push_back(r);
      continue;
    }
    Rational m = (a + b) / 2;
    if (sign_at(m) == 0) roots.push_back(m);
    stack.push_back({a, m});
    stack.push_back({m, b});
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (!s.empty()) s += " + ";
    s += c.get_str();
    if (k >= 1) s += "*" + var;
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

bool rational_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace cdv
