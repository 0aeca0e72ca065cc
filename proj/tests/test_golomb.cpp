#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "costas/golomb.hpp"
#include "costas/numtheory.hpp"
#include "oracle.hpp"

using namespace costas;

namespace {

using Perm = std::vector<std::int32_t>;

// Solve g1^x + g2^y = 1 by search, with independent polynomial arithmetic.
Perm brute_golomb(const Field& f, GolombPair pr) {
  oracle::PolyField pf{f.p(), f.w(), {}};
  for (auto c : f.modulus()) pf.modulus.push_back(c);
  const std::uint64_t n = f.q() - 2;
  Perm out;
  for (std::uint64_t x = 1; x <= n; ++x) {
    int found = 0;
    const std::uint64_t gx = pf.pow(pr.g1.enc, x);
    for (std::uint64_t y = 1; y <= n; ++y)
      if (pf.add(gx, pf.pow(pr.g2.enc, y)) == 1) {
        REQUIRE(found == 0);
        found = static_cast<int>(y);
      }
    out.push_back(found);
  }
  return out;
}

std::vector<GolombPair> all_pairs(const Field& f) {
  std::vector<GolombPair> out;
  for (auto a : f.primitive_elements())
    for (auto b : f.primitive_elements()) out.push_back({a, b});
  return out;
}

}  // namespace

TEST_CASE("golomb_perm examples") {
  const Field f5(5, 1);
  CHECK(golomb_perm(f5, {{2}, {2}}).values == Perm{2, 1, 3});
  CHECK(golomb_perm(f5, {{3}, {2}}).values == Perm{3, 1, 2});
  const Field f4(2, 2);
  CHECK(golomb_perm(f4, {{2}, {2}}).values == Perm{2, 1});
  const auto p = golomb_perm(f5, {{3}, {2}});
  REQUIRE(p.origin);
  CHECK(p.origin->g1.enc == 3);
  CHECK(p(1) == 3);
  CHECK_THROWS_AS(golomb_perm(f5, {{4}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(golomb_perm(f5, {{2}, {0}}), std::invalid_argument);
}

TEST_CASE("golomb_perm matches the brute-force solver") {
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32}) {
    const Field f = Field::from_order(q);
    for (const auto& pr : all_pairs(f)) REQUIRE(golomb_perm(f, pr).values == brute_golomb(f, pr));
  }
}

TEST_CASE("is_costas") {
  CHECK(is_costas(Perm{2, 1, 3}));
  CHECK_FALSE(is_costas(Perm{1, 2, 3, 4}));
  CHECK(is_costas(Perm{1}));
  CHECK(is_costas(Perm{}));
  CHECK_THROWS_AS(is_costas(Perm{1, 1, 2}), NotAPermutation);
  CHECK_THROWS_AS(is_costas(Perm{0, 1}), NotAPermutation);
  CHECK_THROWS_AS(require_permutation(Perm{2, 3}), NotAPermutation);

  // every permutation of {1..6} against the definition
  Perm f{1, 2, 3, 4, 5, 6};
  int costas = 0;
  do {
    REQUIRE(is_costas(f) == oracle::costas(f));
    costas += oracle::costas(f);
  } while (std::next_permutation(f.begin(), f.end()));
  CHECK(costas == 116);  // known count of 6x6 Costas arrays
}

TEST_CASE("every Golomb permutation is Costas (q <= 64)") {
  for (std::uint64_t q : nt::prime_powers(4, 64)) {
    const Field f = Field::from_order(q);
    for (const auto& pr : all_pairs(f)) {
      const auto p = golomb_perm(f, pr);
      REQUIRE(is_costas(p.view()));
      if (q <= 32) REQUIRE(oracle::costas(p.values));
    }
  }
}

TEST_CASE("conjugates") {
  const Field f7(7, 1);
  const auto c7 = conjugates(f7, {{3}, {5}});
  CHECK(c7.members.size() == 1);
  CHECK(c7.canonical == GolombPair{{3}, {5}});
  const Field f4(2, 2);
  const auto c4 = conjugates(f4, {{2}, {2}});
  CHECK(c4.members.size() == 2);
  CHECK(std::set<GolombPair>(c4.members.begin(), c4.members.end()) == std::set<GolombPair>{{{2}, {2}}, {{3}, {3}}});
  CHECK(c4.canonical == GolombPair{{2}, {2}});
  const Field f27(3, 3);
  for (const auto& pr : all_pairs(f27)) {
    const auto c = conjugates(f27, pr);
    REQUIRE(c.members.size() == 3);
    REQUIRE(c.canonical == *std::min_element(c.members.begin(), c.members.end()));
    for (const auto& m : c.members) REQUIRE(golomb_perm(f27, m).values == golomb_perm(f27, pr).values);
  }
}

TEST_CASE("equal permutations iff conjugate") {
  for (std::uint64_t q : {8, 9, 16, 27}) {
    const Field f = Field::from_order(q);
    const auto pairs = all_pairs(f);
    std::vector<Perm> perms;
    for (const auto& pr : pairs) perms.push_back(golomb_perm(f, pr).values);
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        // conjugacy straight from the definition: some j with g3 = g1^{p^j}, g4 = g2^{p^j}
        bool conj = false;
        std::int64_t pj = 1;
        for (unsigned j = 0; j < f.w(); ++j, pj *= f.p())
          conj = conj || (f.pow(pairs[a].g1, pj) == pairs[b].g1 && f.pow(pairs[a].g2, pj) == pairs[b].g2);
        REQUIRE((perms[a] == perms[b]) == conj);
        REQUIRE(are_conjugate(f, pairs[a], pairs[b]) == conj);
      }
  }
}

TEST_CASE("family sizes and order") {
  CHECK(family_G(Field(5, 1), {2}).members.size() == 2);
  CHECK(family_L(Field(5, 1)).members.size() == 4);
  CHECK(family_L(Field(2, 3)).members.size() == 12);
  CHECK(family_L(Field(3, 3)).members.size() == 48);
  CHECK(family_G(Field(5, 1), {2}).name == "G_5");
  CHECK(family_L(Field(5, 1)).name == "L_5");
  CHECK_THROWS_AS(family_G(Field(5, 1), {4}), std::invalid_argument);
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 16, 25, 27, 32, 49, 64, 81}) {
    const Field f = Field::from_order(q);
    const std::uint64_t phi = nt::euler_phi(q - 1);
    const auto G = family_G(f, f.generator());
    const auto L = family_L(f);
    REQUIRE(G.members.size() == phi);
    REQUIRE(L.members.size() == phi * phi / f.w());
    std::set<Perm> distinct;
    for (const auto& m : L.members) distinct.insert(m.values);
    REQUIRE(distinct.size() == L.members.size());
    const auto pairs = family_L_pairs(f);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      REQUIRE(conjugates(f, pairs[i]).canonical == pairs[i]);
      if (i) {
        const auto a = std::pair(f.log(pairs[i - 1].g1), f.log(pairs[i - 1].g2));
        const auto b = std::pair(f.log(pairs[i].g1), f.log(pairs[i].g2));
        REQUIRE(a < b);
      }
    }
    for (std::size_t i = 1; i < G.members.size(); ++i) REQUIRE(G.members[i - 1].origin->g1 < G.members[i].origin->g1);
  }
}

TEST_CASE("pi_{g1,g2}(x) = j pi_{g1,g2^j}(x) mod (q-1)") {
  for (std::uint64_t q : nt::prime_powers(4, 32)) {
    const Field f = Field::from_order(q);
    for (const auto& pr : all_pairs(f)) {
      const auto base = golomb_perm(f, pr);
      for (std::uint32_t j : f.primitive_exponents()) {
        const auto other = golomb_perm(f, {pr.g1, f.pow(pr.g2, j)});
        for (std::size_t x = 1; x <= base.size(); ++x)
          REQUIRE(base(x) == static_cast<std::int32_t>(static_cast<std::uint64_t>(j) * other(x) % (q - 1)));
      }
    }
  }
}
