#include "cdv/thetachar.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace cdv::thetachar {

namespace {

int points(int g) { return 2 * g + 2; }
std::uint32_t full_mask(int g) { return (1u << points(g)) - 1; }

void check_genus(int g) {
  if (g < 1 || g > 6) throw std::invalid_argument("thetachar: genus must be in 1..6");
}

}  // namespace

std::vector<int> CharClass::members() const {
  std::vector<int> out;
  for (int i = 0; i < points(genus); ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

int CharClass::size() const { return std::popcount(mask); }

std::string CharClass::to_string() const {
  std::string s = "{";
  for (int i : members()) {
    if (s.size() > 1) s += ",";
    s += std::to_string(i);
  }
  return s + "}";
}

CharClass reduce(int g, std::uint32_t mask) {
  check_genus(g);
  if ((mask & ~full_mask(g)) != 0) throw std::invalid_argument("thetachar: index out of range");
  int n = std::popcount(mask);
  if ((n - (g + 1)) % 2 != 0) throw std::invalid_argument("thetachar: |T| must be congruent to g+1 mod 2");
  std::uint32_t comp = full_mask(g) ^ mask;
  if (n > g + 1 || (n == g + 1 && !(mask & 1u))) mask = comp;
  return CharClass{g, mask};
}

CharClass make_char(int g, const std::vector<int>& members) {
  std::uint32_t mask = 0;
  for (int i : members) {
    if (i < 1 || i > points(g)) throw std::invalid_argument("thetachar: index out of range");
    if (mask & (1u << (i - 1))) throw std::invalid_argument("thetachar: repeated index");
    mask |= 1u << (i - 1);
  }
  return reduce(g, mask);
}

std::vector<CharClass> enumerate_chars(int g) {
  check_genus(g);
  std::set<std::uint32_t> seen;
  std::vector<CharClass> out;
  for (std::uint32_t m = 0; m <= full_mask(g); ++m) {
    if ((std::popcount(m) - (g + 1)) % 2 != 0) continue;
    CharClass c = reduce(g, m);
    if (seen.insert(c.mask).second) out.push_back(c);
  }
  if (out.size() != (std::size_t{1} << (2 * g))) throw std::logic_error("enumerate_chars: reduction is not 2-to-1");
  return out;
}

std::string to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

int expected_h0(const CharClass& c) { return (c.genus + 1 - c.size()) / 2; }

Parity parity(const CharClass& c) { return expected_h0(c) % 2 == 1 ? Parity::Odd : Parity::Even; }

ParityCounts parity_counts(int g) {
  ParityCounts pc;
  for (const auto& c : enumerate_chars(g)) (parity(c) == Parity::Odd ? pc.odd : pc.even) += 1;
  return pc;
}

ParityCounts closed_form_counts(int g) {
  long a = 1L << (g - 1), b = 1L << g;
  return {a * (b - 1), a * (b + 1)};
}

int standard_pairing(int g, std::uint32_t u, std::uint32_t v) {
  std::uint32_t lo = (1u << g) - 1;
  std::uint32_t cross = ((u & lo) & (v >> g)) ^ ((u >> g) & (v & lo));
  return std::popcount(cross) & 1;
}

int standard_quadratic(int g, std::uint32_t l, std::uint32_t u) {
  std::uint32_t lo = (1u << g) - 1;
  return (std::popcount((u & lo) & (u >> g)) + std::popcount(l & u)) & 1;
}

int arf_by_basis(int g, std::uint32_t l) {
  int s = 0;
  for (int i = 0; i < g; ++i) s += standard_quadratic(g, l, 1u << i) * standard_quadratic(g, l, 1u << (g + i));
  return s & 1;
}

bool ArfCrosscheck::passed() const {
  if (!(subset_model == arf_model) || !(subset_model == closed_form_counts(genus)) || !basis_formula_agrees) return false;
  return genus != 2 || bijection_ok;
}

ArfCrosscheck arf_model_crosscheck(int g) {
  if (g < 1 || g > 4) throw std::invalid_argument("arf_model_crosscheck: genus must be in 1..4");
  ArfCrosscheck out;
  out.genus = g;
  out.subset_model = parity_counts(g);
  out.basis_formula_agrees = true;
  const int dim = 2 * g;
  for (std::uint32_t l = 0; l < (1u << dim); ++l) {
    int arf = arf_by_counting(dim, [&](std::uint32_t u) { return standard_quadratic(g, l, u); });
    if (arf != arf_by_basis(g, l)) out.basis_formula_agrees = false;
    (arf == 1 ? out.arf_model.odd : out.arf_model.even) += 1;
  }
  if (g != 2) return out;

  // Two-torsion as even subsets of the branch points modulo complement,
  // represented with the last point absent; pairing |S n S'| mod 2.
  const int n = points(g);
  std::vector<std::uint32_t> torsion;
  for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s)
    if (std::popcount(s) % 2 == 0) torsion.push_back(s);
  auto pairing = [](std::uint32_t a, std::uint32_t b) { return std::popcount(a & b) & 1; };
  auto canon = [&](std::uint32_t s) { return (s & (1u << (n - 1))) ? (full_mask(g) ^ s) : s; };

  out.bijection_ok = true;
  std::set<std::vector<int>> forms;
  for (const auto& c : enumerate_chars(g)) {
    const int base = static_cast<int>(parity(c));
    std::vector<int> q;
    for (std::uint32_t s : torsion) q.push_back((static_cast<int>(parity(reduce(g, c.mask ^ s))) + base) & 1);
    // Refinement of the pairing: q(S + S') = q(S) + q(S') + <S, S'>.
    for (std::size_t i = 0; i < torsion.size(); ++i)
      for (std::size_t j = 0; j < torsion.size(); ++j) {
        std::uint32_t sum = canon(torsion[i] ^ torsion[j]);
        std::size_t k = 0;
        while (torsion[k] != sum) ++k;
        if (q[k] != ((q[i] + q[j] + pairing(torsion[i], torsion[j])) & 1)) out.bijection_ok = false;
      }
    long ones = 0;
    for (int v : q) ones += v;
    int arf = ones > static_cast<long>(torsion.size() / 2) ? 1 : 0;
    if (arf != base) out.bijection_ok = false;
    forms.insert(q);
    out.bijection.push_back({c, parity(c), arf});
  }
  if (forms.size() != torsion.size()) out.bijection_ok = false;
  return out;
}

int w2_parity_shift(int rank, int w2, int base_parity) {
  if (rank % 2 == 0) throw std::invalid_argument("w2_parity_shift: rank must be odd");
  if ((w2 != 0 && w2 != 1) || (base_parity != 0 && base_parity != 1))
    throw std::invalid_argument("w2_parity_shift: arguments must be 0 or 1");
  return (base_parity + w2) & 1;
}

}  // namespace cdv::thetachar
