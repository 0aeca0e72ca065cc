#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace costas {

/// Base-p encoding sum c_i p^i of the coefficient vector of a residue
/// modulo the field's defining polynomial.
struct FieldElement {
  std::uint32_t enc = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Multiplicative character chi_j(g^k) = exp(2 pi i j k / (q-1)), chi_j(0) = 0.
struct CharacterSpec {
  std::uint32_t j = 0;
  std::uint32_t order = 1;
};

/// GF(p^w) with the lexicographically smallest monic irreducible modulus,
/// the smallest primitive element as generator, and complete log/exp tables.
/// Immutable after construction.
class Field {
 public:
  static constexpr std::uint64_t kDefaultLimit = std::uint64_t{1} << 22;

  Field(std::uint64_t p, unsigned w, std::uint64_t limit = kDefaultLimit);

  /// Throws std::invalid_argument unless q is a prime power within limit.
  static Field from_order(std::uint64_t q, std::uint64_t limit = kDefaultLimit);

  std::uint32_t p() const { return p_; }
  unsigned w() const { return w_; }
  std::uint32_t q() const { return q_; }
  /// q - 1, the order of the multiplicative group.
  std::uint32_t order() const { return q_ - 1; }

  /// Ascending coefficients c_0..c_{w-1}, 1. For w = 1 this is X (i.e. {0, 1}).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement generator() const { return exp_[1 % order()]; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// Checked conversion from an encoding.
  FieldElement element(std::uint64_t enc) const;
  bool contains(FieldElement a) const { return a.enc < q_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  /// a^e with a^0 = 1 (including 0^0). Negative e requires a != 0.
  FieldElement pow(FieldElement a, std::int64_t e) const;
  FieldElement frobenius(FieldElement a) const;

  /// Discrete log to the canonical generator, in [0, q-2]. Throws on zero.
  std::uint32_t log(FieldElement a) const;
  /// g^k for any integer k.
  FieldElement exp(std::int64_t k) const;
  /// Unchecked table access for hot loops; a must be nonzero.
  std::uint32_t log_unchecked(FieldElement a) const { return log_[a.enc]; }
  FieldElement exp_unchecked(std::uint32_t k) const { return exp_[k]; }

  bool is_primitive(FieldElement a) const;
  /// All generators of the multiplicative group, ascending by encoding.
  std::vector<FieldElement> primitive_elements() const;
  /// Primitive elements as exponents of the canonical generator, ascending.
  std::vector<std::uint32_t> primitive_exponents() const;

  CharacterSpec character(std::uint32_t j) const;
  std::complex<double> char_value(CharacterSpec chi, FieldElement a) const;

 private:
  std::uint32_t p_;
  unsigned w_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i for i = 0..w
  std::vector<FieldElement> exp_;     // size q-1
  std::vector<std::uint32_t> log_;    // size q, log_[0] unused
};

}  // namespace costas
