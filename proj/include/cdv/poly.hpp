#pragma once

// Sparse multivariate polynomials with exact coefficients.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdv/scalar.hpp"

namespace cdv {

inline constexpr std::size_t kMaxVars = 12;

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  auto operator<=>(const Monomial&) const = default;

  static Monomial var(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.exp.at(i) = static_cast<std::uint16_t>(power);
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + o.exp[i]);
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }

  /// Requires divides(o) for the quotient o / *this.
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(o.exp[i] - exp[i]);
    return r;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
};

/// Polynomial in `arity` variables. Arity 0 denotes a constant and combines
/// with polynomials of any arity; two nonzero arities must agree.
template <class K>
class Poly {
 public:
  using Terms = std::map<Monomial, K, std::greater<Monomial>>;

  Poly() = default;
  /// Integer constant of arity 0, so generic code can write R(0) and R(1).
  Poly(int c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, K(c));
  }
  /// Field constant of arity 0.
  explicit Poly(const K& c) {
    if (!cdv::is_zero(c)) terms_.emplace(Monomial{}, c);
  }

  static Poly zero(std::size_t arity) {
    Poly p;
    p.arity_ = check_arity(arity);
    return p;
  }
  static Poly constant(const K& c, std::size_t arity = 0) {
    Poly p = zero(arity);
    if (!cdv::is_zero(c)) p.terms_.emplace(Monomial{}, c);
    return p;
  }
  static Poly variable(std::size_t arity, std::size_t i) {
    if (i >= arity) throw std::out_of_range("Poly::variable: index out of range");
    Poly p = zero(arity);
    p.terms_.emplace(Monomial::var(i), K(1));
    return p;
  }
  static Poly monomial(std::size_t arity, const Monomial& m, const K& c) {
    Poly p = zero(arity);
    p.add_term(m, c);
    return p;
  }

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  K constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? K(0) : it->second;
  }
  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const K& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const K& c) {
    if (cdv::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (cdv::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    arity_ = joint_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    arity_ = joint_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r = zero(a.joint_arity(b));
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_) {
      auto hint = r.terms_.end();
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma * mb;
        K c = ca * cb;
        hint = r.terms_.find(m);
        if (hint == r.terms_.end()) {
          r.terms_.emplace(m, std::move(c));
        } else {
          hint->second += c;
          if (cdv::is_zero(hint->second)) r.terms_.erase(hint);
        }
      }
    }
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly scaled(const K& c) const {
    Poly r = zero(arity_);
    if (cdv::is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
  }

  Poly pow(unsigned n) const {
    Poly r = constant(K(1), arity_);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  Poly derivative(std::size_t var) const {
    if (arity_ != 0 && var >= arity_) throw std::out_of_range("Poly::derivative: variable out of range");
    Poly r = zero(arity_);
    for (const auto& [m, c] : terms_) {
      if (m.exp[var] == 0) continue;
      Monomial d = m;
      --d.exp[var];
      r.terms_.emplace(d, c * K(static_cast<long>(m.exp[var])));
    }
    return r;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.exp.at(var));
    return d;
  }

  K evaluate(std::span<const K> point) const {
    if (point.size() < arity_) throw ArityMismatch("Poly::evaluate: point too short");
    K acc(0);
    for (const auto& [m, c] : terms_) {
      K t = c;
      for (std::size_t i = 0; i < arity_; ++i)
        for (unsigned e = 0; e < m.exp[i]; ++e) t *= point[i];
      acc += t;
    }
    return acc;
  }

  /// Composition: variable i is replaced by images[i].
  Poly substitute(std::span<const Poly> images) const {
    if (images.size() < arity_) throw ArityMismatch("Poly::substitute: too few images");
    Poly r;
    for (const auto& [m, c] : terms_) {
      Poly t = Poly::constant(c);
      for (std::size_t i = 0; i < arity_; ++i)
        if (m.exp[i] > 0) t = t * images[i].pow(m.exp[i]);
      r += t;
    }
    return r;
  }

  /// Same polynomial viewed in a larger variable context.
  Poly with_arity(std::size_t arity) const {
    for (const auto& [m, c] : terms_)
      for (std::size_t i = arity; i < kMaxVars; ++i)
        if (m.exp[i] != 0) throw ArityMismatch("Poly::with_arity: variable would be dropped");
    Poly r = *this;
    r.arity_ = check_arity(arity);
    return r;
  }

  /// Quotient when `d` divides *this exactly in K[x], nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly::divide_exact: division by zero");
    Poly q = zero(joint_arity(d));
    if (is_zero()) return q;
    if (d.is_constant()) return scaled(K(1) / d.leading_coefficient());
    const Monomial& lm = d.leading_monomial();
    K inv_lc = K(1) / d.leading_coefficient();
    Poly r = *this;
    while (!r.is_zero()) {
      const Monomial rm = r.leading_monomial();
      if (!lm.divides(rm)) return std::nullopt;
      Monomial qm = lm.quotient_of(rm);
      K qc = r.leading_coefficient() * inv_lc;
      for (const auto& [m, c] : d.terms_) r.add_term(qm * m, -(qc * c));
      q.terms_.emplace(qm, std::move(qc));
    }
    return q;
  }

  /// Canonical text: terms in descending lex order of exponent vectors,
  /// each "coeff*name^e*...", joined by " + "; zero prints as "0".
  std::string to_string(std::span<const std::string> names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += cdv::to_string(c);
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (m.exp[i] == 0) continue;
        out += '*';
        out += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
      }
    }
    return out;
  }

  static Poly parse(std::string_view text, std::size_t arity, std::span<const std::string> names = {});

 private:
  static std::size_t check_arity(std::size_t a) {
    if (a > kMaxVars) throw std::invalid_argument("Poly: arity exceeds kMaxVars");
    return a;
  }
  std::size_t joint_arity(const Poly& o) const {
    if (arity_ == 0) return o.arity_;
    if (o.arity_ == 0 || o.arity_ == arity_) return arity_;
    throw ArityMismatch("Poly: arity mismatch (" + std::to_string(arity_) + " vs " +
                        std::to_string(o.arity_) + ")");
  }

  std::size_t arity_ = 0;
  Terms terms_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

template <class K>
Poly<K> Poly<K>::parse(std::string_view text, std::size_t arity, std::span<const std::string> names) {
  Poly p = zero(arity);
  if (text == "0") return p;
  auto var_index = [&](std::string_view name) -> std::size_t {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    if (names.empty() && name.size() > 1 && name[0] == 'x') {
      std::size_t idx = 0;
      for (char ch : name.substr(1)) {
        if (ch < '0' || ch > '9') throw ParseError("Poly::parse: bad variable '" + std::string(name) + "'");
        idx = idx * 10 + static_cast<std::size_t>(ch - '0');
      }
      return idx;
    }
    throw ParseError("Poly::parse: unknown variable '" + std::string(name) + "'");
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(" + ", pos);
    std::string_view term = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    std::size_t star = term.find('*');
    K c = parse_scalar<K>(term.substr(0, star));
    Monomial m;
    while (star != std::string_view::npos) {
      std::size_t next = term.find('*', star + 1);
      std::string_view factor = term.substr(star + 1, next == std::string_view::npos ? std::string_view::npos : next - star - 1);
      std::size_t caret = factor.find('^');
      std::size_t idx = var_index(factor.substr(0, caret));
      if (idx >= arity) throw ParseError("Poly::parse: variable index beyond arity");
      unsigned e = 1;
      if (caret != std::string_view::npos) {
        e = static_cast<unsigned>(std::stoul(std::string(factor.substr(caret + 1))));
        if (e < 2) throw ParseError("Poly::parse: non-canonical exponent");
      }
      if (m.exp[idx] != 0) throw ParseError("Poly::parse: repeated variable in term");
      m.exp[idx] = static_cast<std::uint16_t>(e);
      star = next;
    }
    if (cdv::is_zero(c)) throw ParseError("Poly::parse: explicit zero coefficient");
    if (p.terms_.count(m)) throw ParseError("Poly::parse: repeated monomial");
    p.terms_.emplace(m, c);
    if (end == std::string_view::npos) break;
    pos = end + 3;
  }
  return p;
}

}  // namespace cdv
