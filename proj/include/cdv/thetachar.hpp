#pragma once

// Theta characteristics of a hyperelliptic curve as subsets of the 2g+2
// branch points, and quadratic forms on (Z/2)^(2g) with their Arf invariant.

#include <cstdint>
#include <string>
#include <vector>

namespace cdv::thetachar {

/// Subset T of {1..2g+2} with |T| = g+1 mod 2, modulo T ~ complement. The
/// stored representative has |T| <= g+1; at |T| = g+1 it is the one
/// containing 1.
struct CharClass {
  int genus = 0;
  std::uint32_t mask = 0;  // bit i-1 set iff branch point i is in T

  std::vector<int> members() const;
  int size() const;
  std::string to_string() const;
  friend bool operator==(const CharClass&, const CharClass&) = default;
};

/// Canonical representative of the class of T; throws std::invalid_argument
/// if |T| has the wrong parity or g is out of range.
CharClass reduce(int g, std::uint32_t mask);
CharClass make_char(int g, const std::vector<int>& members);

std::vector<CharClass> enumerate_chars(int g);

enum class Parity { Even = 0, Odd = 1 };
std::string to_string(Parity p);

/// (g + 1 - |T|)/2 mod 2 on the reduced representative.
Parity parity(const CharClass& c);
/// (g + 1 - |T|)/2 itself, the expected h0.
int expected_h0(const CharClass& c);

struct ParityCounts {
  long odd = 0;
  long even = 0;
  friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};
ParityCounts parity_counts(int g);
/// 2^(g-1)(2^g - 1) odd and 2^(g-1)(2^g + 1) even.
ParityCounts closed_form_counts(int g);

// ---- quadratic forms over GF(2) -------------------------------------------

/// Vectors in (Z/2)^(2g) as bitmasks; standard form pairs bit i with bit g+i.
int standard_pairing(int g, std::uint32_t u, std::uint32_t v);

/// q(u) = sum_i u_i u_{g+i} + <l, u>, indexed by the linear part l.
int standard_quadratic(int g, std::uint32_t l, std::uint32_t u);

/// Arf invariant by value counting: 1 iff q takes the value 1 on
/// 2^(2g-1) + 2^(g-1) vectors.
template <class Q>
int arf_by_counting(int dim, Q q) {
  long ones = 0;
  for (std::uint32_t u = 0; u < (1u << dim); ++u) ones += q(u);
  return ones > (1L << (dim - 1)) ? 1 : 0;
}

/// Arf invariant as sum_i q(a_i) q(b_i) over a symplectic basis.
int arf_by_basis(int g, std::uint32_t l);

struct ArfCrosscheck {
  int genus = 0;
  ParityCounts subset_model;
  ParityCounts arf_model;
  bool basis_formula_agrees = false;
  /// g = 2 only: each class, its parity and the Arf invariant of the
  /// attached quadratic form on the 2-torsion.
  struct Row {
    CharClass c;
    Parity parity;
    int arf;
  };
  std::vector<Row> bijection;
  bool bijection_ok = false;
  bool passed() const;
};

/// Subset model against the quadratic-form model (g <= 4); for g = 2 also the
/// class-by-class bijection T -> q_T, q_T(S) = parity(T + S) - parity(T).
ArfCrosscheck arf_model_crosscheck(int g);

/// Predicted parity of h0(E (x) K^(1/2)) for odd rank: base + w2 mod 2.
int w2_parity_shift(int rank, int w2, int base_parity);

}  // namespace cdv::thetachar
