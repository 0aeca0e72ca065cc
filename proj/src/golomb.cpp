#include "costas/golomb.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "costas/numtheory.hpp"

namespace costas {

void require_golomb_pair(const Field& field, GolombPair pair) {
  if (!field.is_primitive(pair.g1) || !field.is_primitive(pair.g2))
    throw std::invalid_argument("(" + std::to_string(pair.g1.enc) + ", " + std::to_string(pair.g2.enc) +
                                ") is not a pair of primitive elements of GF(" + std::to_string(field.q()) + ")");
}

CostasPermutation golomb_perm(const Field& field, GolombPair pair) {
  require_golomb_pair(field, pair);
  const std::uint32_t n = field.q() - 2;
  const std::uint32_t order = field.order();
  const std::uint32_t l1 = field.log(pair.g1);
  // y = log_{g2}(z) = log(z) * log(g2)^{-1} mod (q-1)
  const std::uint64_t l2_inv = nt::mod_inverse(field.log(pair.g2), order);
  CostasPermutation perm;
  perm.origin = pair;
  perm.values.resize(n);
  std::uint64_t k = 0;
  for (std::uint32_t x = 1; x <= n; ++x) {
    k += l1;
    if (k >= order) k -= order;
    const FieldElement rhs = field.sub(field.one(), field.exp_unchecked(static_cast<std::uint32_t>(k)));
    perm.values[x - 1] = static_cast<std::int32_t>(field.log_unchecked(rhs) * l2_inv % order);
  }
  return perm;
}

void require_permutation(std::span<const std::int32_t> f) {
  const auto n = static_cast<std::int64_t>(f.size());
  std::vector<bool> seen(f.size() + 1, false);
  for (std::int32_t y : f) {
    if (y < 1 || y > n || seen[y]) throw NotAPermutation("sequence is not a permutation of {1.." + std::to_string(n) + "}");
    seen[y] = true;
  }
}

bool is_costas(std::span<const std::int32_t> f) {
  require_permutation(f);
  const auto n = static_cast<std::int64_t>(f.size());
  // differences lie in [1-n, n-1]; stamp[d] == k marks d as seen in row k
  std::vector<std::int64_t> stamp(2 * f.size() + 1, 0);
  for (std::int64_t k = 1; k <= n - 2; ++k) {
    for (std::int64_t i = 0; i + k < n; ++i) {
      const std::int64_t d = f[i + k] - f[i] + n;
      if (stamp[d] == k) return false;
      stamp[d] = k;
    }
  }
  return true;
}

ConjugacyClass conjugates(const Field& field, GolombPair pair) {
  require_golomb_pair(field, pair);
  ConjugacyClass cls;
  GolombPair cur = pair;
  for (unsigned j = 0; j < field.w(); ++j) {
    if (std::find(cls.members.begin(), cls.members.end(), cur) == cls.members.end()) cls.members.push_back(cur);
    cur = {field.frobenius(cur.g1), field.frobenius(cur.g2)};
  }
  cls.canonical = *std::min_element(cls.members.begin(), cls.members.end());
  return cls;
}

bool are_conjugate(const Field& field, GolombPair a, GolombPair b) {
  const auto cls = conjugates(field, a);
  return std::find(cls.members.begin(), cls.members.end(), b) != cls.members.end();
}

Family family_G(const Field& field, FieldElement g2) {
  if (!field.is_primitive(g2)) throw std::invalid_argument("family_G: g2 is not primitive");
  Family fam{"G_" + std::to_string(field.q()), {}};
  for (FieldElement g1 : field.primitive_elements()) fam.members.push_back(golomb_perm(field, {g1, g2}));
  return fam;
}

std::vector<GolombPair> family_L_pairs(const Field& field) {
  const auto exps = field.primitive_exponents();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> keys;
  for (std::uint32_t d1 : exps) {
    for (std::uint32_t d2 : exps) {
      const GolombPair pair{field.exp_unchecked(d1), field.exp_unchecked(d2)};
      if (conjugates(field, pair).canonical == pair) keys.emplace_back(d1, d2);
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<GolombPair> out;
  out.reserve(keys.size());
  for (auto [d1, d2] : keys) out.push_back({field.exp_unchecked(d1), field.exp_unchecked(d2)});
  return out;
}

Family family_L(const Field& field) {
  Family fam{"L_" + std::to_string(field.q()), {}};
  for (GolombPair pair : family_L_pairs(field)) fam.members.push_back(golomb_perm(field, pair));
  return fam;
}

}  // namespace costas
