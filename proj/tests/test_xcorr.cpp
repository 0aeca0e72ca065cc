#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "costas/golomb.hpp"
#include "costas/numtheory.hpp"
#include "costas/xcorr.hpp"
#include "oracle.hpp"

using namespace costas;

namespace {

using Perm = std::vector<std::int32_t>;

std::vector<Perm> values(const Family& fam) {
  std::vector<Perm> out;
  for (const auto& m : fam.members) out.push_back(m.values);
  return out;
}

}  // namespace

TEST_CASE("cross_correlation examples") {
  const Perm f1{2, 1, 3}, f2{3, 1, 2};
  CHECK(cross_correlation(f1, f1, 0, 0) == 3);
  CHECK(cross_correlation(f1, f2, 0, 0) == 1);
  CHECK(cross_correlation(f1, f2, 0, 1) == 1);
  CHECK(max_cross_correlation(f1, f2) == 1);
  CHECK_THROWS_AS(cross_correlation(f1, Perm{1, 2}, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(cross_correlation(f1, f2, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(cross_correlation(f1, f2, 0, -3), std::out_of_range);
}

TEST_CASE("tables match the definition") {
  for (std::uint64_t q : {5, 7, 8, 9, 11, 13}) {
    const Field f = Field::from_order(q);
    const auto L = values(family_L(f));
    const int n = static_cast<int>(q - 2);
    for (const auto& a : L)
      for (const auto& b : L) {
        const CorrelationTable t = correlation_table(a, b);
        std::uint32_t mx = 0;
        for (int u = 1 - n; u <= n - 1; ++u) {
          std::uint64_t row = 0;
          for (int v = 1 - n; v <= n - 1; ++v) {
            const unsigned c = oracle::xcorr(a, b, u, v);
            REQUIRE(t.at(u, v) == c);
            REQUIRE(cross_correlation(a, b, u, v) == c);
            REQUIRE(c <= static_cast<unsigned>(n - std::abs(u)));
            row += c;
            mx = std::max<std::uint32_t>(mx, c);
          }
          REQUIRE(row == static_cast<std::uint64_t>(n - std::abs(u)));
          REQUIRE(t.row_sum(u) == row);
        }
        REQUIRE(t.max() == mx);
        REQUIRE(max_cross_correlation(a, b) == mx);
      }
  }
}

TEST_CASE("autocorrelation of Costas permutations") {
  for (std::uint64_t q : nt::prime_powers(4, 64)) {
    const Field f = Field::from_order(q);
    const int n = static_cast<int>(q - 2);
    for (const auto& m : family_L(f).members) {
      const CorrelationTable t = correlation_table(m.view(), m.view());
      for (int u = 1 - n; u <= n - 1; ++u)
        for (int v = 1 - n; v <= n - 1; ++v)
          if (u || v) REQUIRE(t.at(u, v) <= 1);
      REQUIRE(t.at(0, 0) == static_cast<std::uint32_t>(n));
    }
  }
}

TEST_CASE("family_max examples") {
  const auto g = [](std::uint64_t q) {
    const Field f = Field::from_order(q);
    return family_max(family_G(f, f.generator())).value;
  };
  CHECK(g(5) == 1);
  CHECK(g(9) == 3);
  CHECK(g(13) == 5);
  Family one{"one", {golomb_perm(Field(5, 1), {{2}, {2}})}};
  CHECK_THROWS_AS(family_max(one), std::invalid_argument);
  Family twice{"twice", {one.members[0], one.members[0]}};
  CHECK_THROWS_AS(family_max(twice), std::invalid_argument);
}

TEST_CASE("symmetry-reduced scan equals brute force") {
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16}) {
    const Field f = Field::from_order(q);
    for (const Family& fam : {family_G(f, f.generator()), family_L(f)}) {
      if (fam.members.size() < 2) continue;
      const auto ref = oracle::family_max(values(fam));
      const auto rep = family_max(fam);
      REQUIRE(rep.value == ref.value);
      REQUIRE(rep.occurrences == ref.occurrences);
      ScanOptions plain;
      plain.use_symmetry = false;
      const auto rep2 = family_max(fam, plain);
      REQUIRE(rep2.value == ref.value);
      REQUIRE(rep2.occurrences == ref.occurrences);
      REQUIRE(rep2.symmetry_order == 1);
    }
  }
}

TEST_CASE("restricted scan equals the full scan on L_q") {
  for (std::uint64_t q : {5, 7, 8, 9, 11, 13, 16}) {
    const Field f = Field::from_order(q);
    const Family L = family_L(f);
    ScanOptions r;
    r.restrict_nonneg = true;
    const auto rest = family_max(L, r);
    CHECK(rest.restricted);
    CHECK(rest.value == family_max(L).value);
    CHECK(rest.occurrences == oracle::family_max(values(L), true).occurrences);
  }
}

TEST_CASE("C(L_q) >= C(G_q)") {
  for (std::uint64_t q : nt::prime_powers(5, 49)) {
    const Field f = Field::from_order(q);
    REQUIRE(family_max(family_L(f)).value >= family_max(family_G(f, f.generator())).value);
  }
}

TEST_CASE("witnesses reproduce the value; output independent of threads") {
  for (std::uint64_t q : {16, 23, 27}) {
    const Field f = Field::from_order(q);
    const Family L = family_L(f);
    ScanOptions one, many;
    many.threads = 4;
    const auto a = family_max(L, one);
    const auto b = family_max(L, many);
    REQUIRE(a.value == b.value);
    REQUIRE(a.occurrences == b.occurrences);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    REQUIRE(a.witnesses.size() <= one.witness_cap);
    REQUIRE(!a.witnesses.empty());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
      const Witness& w = a.witnesses[i];
      REQUIRE(w.first == b.witnesses[i].first);
      REQUIRE(w.second == b.witnesses[i].second);
      REQUIRE(w.u == b.witnesses[i].u);
      REQUIRE(w.v == b.witnesses[i].v);
      REQUIRE(w.first != w.second);
      REQUIRE(cross_correlation(L.members[w.first].view(), L.members[w.second].view(), w.u, w.v) == a.value);
    }
    REQUIRE(a.value <= q - 2);
  }
}

TEST_CASE("work estimate") {
  const Field f = Field::from_order(11);
  const Family L = family_L(f);
  ScanOptions plain;
  plain.use_symmetry = false;
  const double m = static_cast<double>(L.members.size());
  CHECK(estimate_family_work(L, plain) == doctest::Approx(m * (m - 1) * 81));
  CHECK(estimate_family_work(L) < estimate_family_work(L, plain));
  CHECK(family_symmetries(L).size() == 8);
  CHECK(family_symmetries(L)[0][3] == 3);
}

TEST_CASE("symmetry_check") {
  for (std::uint64_t q : {5, 8}) {
    const Field f = Field::from_order(q);
    const auto L = family_L(f);
    for (const auto& a : L.members)
      for (const auto& b : L.members) REQUIRE(symmetry_check(f, a, b));
  }
  const Field f7(7, 1);
  const auto p = golomb_perm(f7, {{3}, {5}});
  CHECK(symmetry_check(f7, p, p));
}
