#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "costas/ff.hpp"

namespace costas {

/// Two primitive elements (g1, g2) defining pi(x) = y iff g1^x + g2^y = 1.
struct GolombPair {
  FieldElement g1;
  FieldElement g2;

  friend auto operator<=>(const GolombPair&, const GolombPair&) = default;
};

/// A permutation of {1..n}; values[x-1] = f(x).
struct CostasPermutation {
  std::vector<std::int32_t> values;
  std::optional<GolombPair> origin;

  std::size_t size() const { return values.size(); }
  std::int32_t operator()(std::size_t x) const { return values[x - 1]; }
  std::span<const std::int32_t> view() const { return values; }
};

struct NotAPermutation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConjugacyClass {
  std::vector<GolombPair> members;  // Frobenius images j = 0..w-1, duplicates removed
  GolombPair canonical;             // lexicographic minimum by (enc(g1), enc(g2))
};

struct Family {
  std::string name;
  std::vector<CostasPermutation> members;
};

void require_golomb_pair(const Field& field, GolombPair pair);

CostasPermutation golomb_perm(const Field& field, GolombPair pair);

/// Throws NotAPermutation when f is not a permutation of {1..n}.
void require_permutation(std::span<const std::int32_t> f);
bool is_costas(std::span<const std::int32_t> f);

ConjugacyClass conjugates(const Field& field, GolombPair pair);
bool are_conjugate(const Field& field, GolombPair a, GolombPair b);

/// G_q: one permutation per primitive g1, ascending by enc(g1).
Family family_G(const Field& field, FieldElement g2);
/// The canonical pair of every conjugacy class, ascending by (log g1, log g2).
std::vector<GolombPair> family_L_pairs(const Field& field);
/// L_q: one permutation per conjugacy class, in family_L_pairs order.
Family family_L(const Field& field);

}  // namespace costas
