#pragma once

// Seeded random generators for exact property tests.

#include <random>

#include "cdv/poly.hpp"
#include "cdv/ratfunc.hpp"

namespace cdv::testing {

class Gen {
 public:
  explicit Gen(unsigned long seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 9) {
    Rational q(integer(-bound, bound), integer(1, bound));
    q.canonicalize();
    return q;
  }

  Gaussian gaussian(long bound = 9) { return {rational(bound), rational(bound)}; }

  template <class K>
  K scalar(long bound = 9);

  template <class K>
  Poly<K> poly(std::size_t arity, unsigned max_terms = 4, unsigned max_exp = 3) {
    Poly<K> p = Poly<K>::zero(arity);
    unsigned n = static_cast<unsigned>(integer(0, max_terms));
    for (unsigned t = 0; t < n; ++t) {
      Monomial m;
      for (std::size_t i = 0; i < arity; ++i) m.exp[i] = static_cast<std::uint16_t>(integer(0, max_exp));
      p.add_term(m, scalar<K>());
    }
    return p;
  }

  template <class K>
  Poly<K> nonzero_poly(std::size_t arity) {
    Poly<K> p = poly<K>(arity);
    return p.is_zero() ? Poly<K>::constant(K(1), arity) : p;
  }

  template <class K>
  RatFunc<K> ratfunc(std::size_t arity) {
    return RatFunc<K>(poly<K>(arity, 3, 2), nonzero_poly<K>(arity));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

template <>
inline Rational Gen::scalar<Rational>(long bound) {
  return rational(bound);
}
template <>
inline Gaussian Gen::scalar<Gaussian>(long bound) {
  return gaussian(bound);
}

}  // namespace cdv::testing
