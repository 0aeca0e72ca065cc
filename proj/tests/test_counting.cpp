#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "costas/counting.hpp"
#include "costas/numtheory.hpp"
#include "oracle.hpp"

using namespace costas;

namespace {

double ref(const std::vector<ReferenceBound>& refs, const std::string& label) {
  for (const auto& r : refs)
    if (r.label == label) return r.value;
  FAIL("missing reference " << label);
  return 0;
}

bool has(const std::vector<ReferenceBound>& refs, const std::string& label) {
  for (const auto& r : refs)
    if (r.label == label) return true;
  return false;
}

}  // namespace

TEST_CASE("ShiftSet") {
  const ShiftSet s(7, {{1, 2}, {0, 0}, {1, 2}, {4, 4}});
  CHECK(s.size() == 3);
  CHECK(s.shifts().front() == Shift{0, 0});
  CHECK_THROWS_AS(ShiftSet(7, {{5, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ShiftSet(7, {{-1, 0}}), std::invalid_argument);
  CHECK(ShiftSet::rectangle(7, 1, 2, 0, 3).size() == 8);
  CHECK(ShiftSet::full(7).size() == 25);
  CHECK_THROWS_AS(ShiftSet::rectangle(7, 0, 5, 0, 0), std::invalid_argument);
}

TEST_CASE("count_N examples") {
  const Field f = Field::from_order(5);
  const GolombPair a{{2}, {2}}, b{{3}, {2}};
  const CountResult res = count_N(f, a, b, 1, ShiftSet::full(5));
  CHECK(res.exact == 4);
  CHECK(res.query == "N");
  CHECK(res.chain_holds);
  CHECK(count_N(f, a, b, 4, ShiftSet::full(5)).exact == 0);
  CHECK_THROWS_AS(count_N(f, a, a, 1, ShiftSet::full(5)), std::invalid_argument);
  CHECK_THROWS_AS(count_N(f, a, b, 0, ShiftSet::full(5)), std::invalid_argument);
  // conjugate pairs give the same permutation
  const Field f4 = Field::from_order(4);
  CHECK_THROWS_AS(count_N(f4, {{2}, {2}}, {{3}, {3}}, 1, ShiftSet::full(4)), std::invalid_argument);
}

TEST_CASE("incidence") {
  const Field f3 = Field::from_order(3);
  IncidencePlane plane;
  for (std::uint32_t x = 0; x < 3; ++x) plane.points.push_back({{x}, {x}});
  CHECK(incidence(f3, plane) == 0);
  plane.lines.push_back({{1}, {1}});
  CHECK(incidence(f3, plane) == 1);

  const Field f = Field::from_order(13);
  const GolombPair first{f.generator(), f.exp(5)};
  const ExponentPair ep = make_exponent_pair(13, 5, 7);
  const ShiftSet S = ShiftSet::rectangle(13, 0, 4, 2, 9);
  const IncidencePlane p = make_plane(f, first, ep, S);
  CHECK(p.points.size() == 13);
  CHECK(p.lines.size() == S.size());
  std::uint64_t sum = 0;
  for (const Shift& sh : S.shifts()) sum += solution_count(f, first, ep, sh.u, sh.v, EquationForm::Incidence);
  CHECK(incidence(f, p) == sum);
  CHECK(incidence(f, p) <= p.points.size() * p.lines.size());
}

TEST_CASE("count_N chain on random configurations") {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {5, 7, 8, 11, 13}) {
    const Field f = Field::from_order(q);
    const auto prims = f.primitive_elements();
    const auto exps = f.primitive_exponents();
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    int done = 0;
    while (done < 20) {
      const GolombPair a{prims[pick(prims.size())], prims[pick(prims.size())]};
      const ExponentPair ep = make_exponent_pair(q, exps[pick(exps.size())], exps[pick(exps.size())]);
      if (is_conjugate_exponents(q, ep)) continue;
      std::vector<Shift> sh;
      const std::size_t k = 1 + pick((q - 2) * (q - 2));
      for (std::size_t i = 0; i < k; ++i) sh.push_back({int(pick(q - 2)), int(pick(q - 2))});
      const ShiftSet S(q, sh);
      const std::uint64_t B = 1 + pick(3);
      const CountResult res = count_N(f, a, partner(f, a, ep), B, S);
      REQUIRE(res.chain_holds);
      REQUIRE(res.exact <= S.size());
      // independent recount
      const auto f1 = golomb_perm(f, a), f2 = golomb_perm(f, partner(f, a, ep));
      std::uint64_t n = 0;
      for (const Shift& s : S.shifts()) n += oracle::xcorr(f1.values, f2.values, s.u, s.v) >= B;
      REQUIRE(res.exact == n);
      REQUIRE(res.certified_bound);
      REQUIRE(double(res.exact) <= *res.certified_bound);
      ++done;
    }
  }
}

TEST_CASE("bound_N_reference pieces") {
  const auto big = bound_N_reference(101, 1, 200, false);
  CHECK(ref(big, "S^(1/2) q / B") == doctest::Approx(std::sqrt(200.0) * 101));
  const auto small = bound_N_reference(101, 2, 5, false);
  CHECK(ref(small, "q / B") == doctest::Approx(101.0 / 2));
  const auto prime = bound_N_reference(101, 1, 101, true);
  CHECK(has(prime, "(S q)^(11/15) / B"));
  CHECK(ref(prime, "(S q)^(11/15) / B") == doctest::Approx(std::pow(101.0 * 101, 11.0 / 15)));
  CHECK(ref(prime, "S^(1/2) q / B") == doctest::Approx(std::pow(101.0, 1.5)));
  CHECK_FALSE(has(bound_N_reference(101, 1, 101, false), "(S q)^(11/15) / B"));
}

TEST_CASE("incidence_bound_reference pieces") {
  CHECK(ref(incidence_bound_reference(100, 5, 7), "|P|") == doctest::Approx(100));
  CHECK(ref(incidence_bound_reference(10, 100, 7), "|L|") == doctest::Approx(100));
  const auto sq = incidence_bound_reference(49, 49, 7);
  double v = 0;
  for (const auto& r : sq)
    if (r.label != "(|P| |L|)^(11/15)") v = r.value;
  CHECK(v == doctest::Approx(std::pow(49.0, 1.5)));
}

TEST_CASE("count_M") {
  const Field f8 = Field::from_order(8);
  const CountResult m = count_M(f8, 0, 0, 2);
  REQUIRE(m.certified_bound);
  CHECK(*m.certified_bound == doctest::Approx(1512));
  CHECK(m.query == "M(u=0,v=0)");
  CHECK(m.chain_holds);
  CHECK(double(m.exact) < *m.certified_bound);
  for (std::uint64_t q : {5, 7, 8, 9, 11}) {
    const Field f = Field::from_order(q);
    const Family L = family_L(f);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 0}, {1, 2}, {int(q) - 3, int(q) - 3}})
      for (std::uint64_t B : {1, 2, 4}) {
        const CountResult r = count_M(f, u, v, B);
        std::uint64_t brute = 0;
        for (const auto& a : L.members)
          for (const auto& b : L.members) brute += oracle::xcorr(a.values, b.values, u, v) >= B;
        REQUIRE(r.exact == brute);
        REQUIRE(r.exact <= L.members.size() * L.members.size());
        REQUIRE(r.chain_holds);
        REQUIRE(double(r.exact) < *r.certified_bound);
      }
    CHECK(count_M(f, 0, 0, q - 1).exact == 0);
  }
  CHECK(count_M(f8, 0, 0, 1, 3).exact == count_M(f8, 0, 0, 1, 1).exact);
}

TEST_CASE("divisor_sum_bound") {
  CHECK(divisor_sum_bound(8).sum == 13);
  CHECK(divisor_sum_bound(8).cap == 14);
  CHECK(divisor_sum_bound(5).sum == 8);
  CHECK(divisor_sum_bound(5).cap == 12);
  for (std::uint64_t q : nt::prime_powers(3, 512)) {
    const DivisorSum d = divisor_sum_bound(q);
    std::uint64_t sum = 0;
    for (std::uint64_t k = 1; k <= q - 1; ++k)
      if ((q - 1) % k == 0) sum += nt::euler_phi((q - 1) / k) * k;
    REQUIRE(d.sum == sum);
    REQUIRE(d.cap == nt::tau(q - 1) * (q - 1));
    REQUIRE(d.strict);
    if (oracle::is_prime(q - 1)) REQUIRE(d.sum == 2 * q - 3);
  }
}
