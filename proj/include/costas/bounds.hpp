#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "costas/ff.hpp"
#include "costas/golomb.hpp"

namespace costas {

/// Relative exponents of a permutation pair: g3 = g1^r, g4 = g2^s.
struct ExponentPair {
  std::uint32_t r = 1;
  std::uint32_t s = 1;
  std::uint32_t r_inv = 1;  // inverses modulo q-1
  std::uint32_t s_inv = 1;
};

/// Validates 1 <= r, s <= q-2 and gcd(rs, q-1) = 1.
ExponentPair make_exponent_pair(std::uint64_t q, std::uint64_t r, std::uint64_t s);
ExponentPair exponent_pair(const Field& field, GolombPair first, GolombPair second);
/// (g1^r, g2^s).
GolombPair partner(const Field& field, GolombPair first, ExponentPair ep);
/// r = s = p^j (mod q-1) for some j, i.e. the two pairs generate one permutation.
bool is_conjugate_exponents(std::uint64_t q, ExponentPair ep);

enum class BoundKind { UpperBound, Exact };

struct CGqBound {
  BoundKind kind = BoundKind::UpperBound;
  std::uint64_t value = 0;
};

/// 1 + floor(sqrt q) for safe prime powers, (q-1)/t - 1 (exact) otherwise.
CGqBound bound_CGq(std::uint64_t q);

struct BoundCandidate {
  std::string label;
  double value = 0.0;
  bool certified = false;
};

enum class BoundMode { Certified, All };

struct BoundReport {
  std::uint64_t q = 0;
  ExponentPair ep;
  std::vector<BoundCandidate> candidates;
  double best = 0.0;
  std::optional<std::uint32_t> exact;
};

/// Candidate upper bounds on max_{u,v} C for one non-conjugate exponent pair.
/// Throws std::invalid_argument for conjugate exponents.
BoundReport bound_pair(std::uint64_t q, ExponentPair ep, BoundMode mode = BoundMode::Certified);

/// max over all primitive (g1, g2) and all shifts of C_{pi(g1,g2), pi(g1^r, g2^s)}.
std::uint32_t exhaustive_exponent_max(const Field& field, ExponentPair ep, unsigned threads = 1);

struct SubfamilySpec {
  std::uint64_t q = 0;
  double delta = 0.0;
  std::uint32_t a = 3;
  std::uint32_t theta = 0;
  std::vector<FieldElement> A;  // g^{a^i} for i = -theta..theta

  std::size_t expected_size(std::uint64_t phi) const { return phi * A.size(); }
};

struct Subfamily {
  SubfamilySpec spec;
  Family family;  // g2 in A order, then g1 ascending by encoding
};

/// 3 unless q is a power of 3, then 5.
std::uint32_t subfamily_base(std::uint64_t q);
std::uint32_t subfamily_theta(std::uint64_t q, double delta);
SubfamilySpec subfamily_spec(const Field& field, double delta);
Subfamily subfamily(const Field& field, double delta);

struct Theorem1Bound {
  std::uint32_t a = 3;
  std::uint32_t theta = 0;
  double sharp = 0.0;  // 1 + a^{2 theta} sqrt q
  double cap = 0.0;    // 1 + q^{1/2 + delta}
};

Theorem1Bound theorem1_bound(std::uint64_t q, double delta);

enum class EquationForm {
  Ceq,          // y != 1:       g1^{ru} (1-y)^r = 1 - g4^v y^s
  Substituted,  // z != g4^v:    g1^{-u} (1-z)^{r'} = 1 - g4^{-v s'} z^{s'}
  Incidence,    // any x:        g4^v (1-x)^s + g1^{ru} x^r = 1
};

/// Exact solution count by scanning the field; g4 = g2^s.
std::uint64_t solution_count(const Field& field, GolombPair first, ExponentPair ep, std::int64_t u, std::int64_t v,
                             EquationForm form);

/// #{x : alpha (1-x)^r + beta x^s = 1}; alpha and beta must be nonzero.
std::uint64_t count_alpha_beta(const Field& field, FieldElement alpha, FieldElement beta, std::uint64_t r,
                               std::uint64_t s);

inline constexpr double kWeilTolerance = 1e-6;

struct WeilResult {
  double magnitude = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// |sum_y chi_j(g1^{ru} (1-y)^r (1 - g4^v y^s)^{q-2})| against s sqrt q.
/// Requires j != 0, s > 1 and gcd(s, p) = 1.
WeilResult weil_oracle(const Field& field, GolombPair first, ExponentPair ep, std::int64_t u, std::int64_t v,
                       std::uint32_t j);

/// (1/(q-1)) sum over all characters of the same sum, including the principal
/// one; by orthogonality this is the Ceq solution count.
double character_average(const Field& field, GolombPair first, ExponentPair ep, std::int64_t u, std::int64_t v);

}  // namespace costas
