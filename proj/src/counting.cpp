#include "costas/counting.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "costas/numtheory.hpp"
#include "costas/parallel.hpp"

namespace costas {

ShiftSet::ShiftSet(std::uint64_t q, std::vector<Shift> shifts) : q_(q), shifts_(std::move(shifts)) {
  if (q < 4) throw std::invalid_argument("shift sets need q >= 4");
  const int hi = static_cast<int>(q) - 3;
  for (const Shift& s : shifts_)
    if (s.u < 0 || s.u > hi || s.v < 0 || s.v > hi)
      throw std::invalid_argument("shift (" + std::to_string(s.u) + ", " + std::to_string(s.v) + ") outside [0, " +
                                  std::to_string(hi) + "]^2");
  std::sort(shifts_.begin(), shifts_.end());
  shifts_.erase(std::unique(shifts_.begin(), shifts_.end()), shifts_.end());
}

ShiftSet ShiftSet::rectangle(std::uint64_t q, int u0, int u1, int v0, int v1) {
  std::vector<Shift> out;
  for (int u = u0; u <= u1; ++u)
    for (int v = v0; v <= v1; ++v) out.push_back({u, v});
  return ShiftSet(q, std::move(out));
}

ShiftSet ShiftSet::full(std::uint64_t q) {
  const int hi = static_cast<int>(q) - 3;
  return rectangle(q, 0, hi, 0, hi);
}

IncidencePlane make_plane(const Field& field, GolombPair first, ExponentPair ep, const ShiftSet& S) {
  require_golomb_pair(field, first);
  if (S.q() != field.q()) throw std::invalid_argument("shift set built for a different q");
  const ExponentPair e = make_exponent_pair(field.q(), ep.r, ep.s);
  const FieldElement g4 = field.pow(first.g2, e.s);
  std::set<PlanePoint> points;
  for (std::uint32_t enc = 0; enc < field.q(); ++enc) {
    const FieldElement x{enc};
    points.insert({field.pow(field.sub(field.one(), x), e.s), field.pow(x, e.r)});
  }
  std::set<PlaneLine> lines;
  for (const Shift& sh : S.shifts())
    lines.insert({field.pow(g4, sh.v), field.pow(first.g1, static_cast<std::int64_t>(e.r) * sh.u)});
  return {{points.begin(), points.end()}, {lines.begin(), lines.end()}};
}

std::uint64_t incidence(const Field& field, const IncidencePlane& plane) {
  std::uint64_t count = 0;
  for (const auto& pt : plane.points)
    for (const auto& ln : plane.lines)
      if (field.add(field.mul(ln.a, pt.y), field.mul(ln.b, pt.z)) == field.one()) ++count;
  return count;
}

std::vector<ReferenceBound> bound_N_reference(std::uint64_t q, std::uint64_t B, std::uint64_t size_S,
                                              bool q_is_prime) {
  if (size_S < 1 || B < 1) throw std::invalid_argument("bound_N_reference needs |S| >= 1 and B >= 1");
  const double Q = static_cast<double>(q), S = static_cast<double>(size_S), b = static_cast<double>(B);
  std::vector<ReferenceBound> out;
  if (S >= Q)
    out.push_back({"S^(1/2) q / B", std::sqrt(S) * Q / b});
  else if (S >= std::sqrt(Q))
    out.push_back({"S q^(1/2) / B", S * std::sqrt(Q) / b});
  else
    out.push_back({"q / B", Q / b});
  if (q_is_prime && std::pow(Q, 7.0 / 8.0) < S && S < std::pow(Q, 8.0 / 7.0))
    out.push_back({"(S q)^(11/15) / B", std::pow(S * Q, 11.0 / 15.0) / b});
  return out;
}

std::vector<ReferenceBound> incidence_bound_reference(std::uint64_t size_P, std::uint64_t size_L, std::uint64_t p) {
  if (size_P < 1 || size_L < 1) throw std::invalid_argument("incidence_bound_reference needs nonempty sets");
  const double P = static_cast<double>(size_P), L = static_cast<double>(size_L), pc = static_cast<double>(p);
  std::vector<ReferenceBound> out;
  if (P * P <= L)
    out.push_back({"|L|", L});
  else if (P <= L)
    out.push_back({"|P| |L|^(1/2)", P * std::sqrt(L)});
  else if (std::sqrt(P) <= L)
    out.push_back({"|P|^(1/2) |L|", std::sqrt(P) * L});
  else
    out.push_back({"|P|", P});
  const double upper = std::min(std::pow(P, 8.0 / 7.0), std::pow(P, 2.0 / 13.0) * std::pow(pc, 15.0 / 13.0));
  if (P < std::pow(pc, 8.0 / 5.0) && std::pow(P, 7.0 / 8.0) < L && L < upper)
    out.push_back({"(|P| |L|)^(11/15)", std::pow(P * L, 11.0 / 15.0)});
  return out;
}

CountResult count_N(const Field& field, GolombPair first, GolombPair second, std::uint64_t B, const ShiftSet& S) {
  if (B < 1) throw std::invalid_argument("B must be at least 1");
  const auto f1 = golomb_perm(field, first);
  const auto f2 = golomb_perm(field, second);
  if (f1.values == f2.values) throw std::invalid_argument("count_N needs two distinct permutations");
  const ExponentPair ep = exponent_pair(field, first, second);

  CountResult res;
  res.q = field.q();
  res.B = B;
  res.query = "N";
  std::uint64_t sum_c = 0;
  for (const Shift& sh : S.shifts()) {
    const std::uint32_t c = cross_correlation(f1.view(), f2.view(), sh.u, sh.v);
    sum_c += c;
    if (c >= B) ++res.exact;
  }
  const IncidencePlane plane = make_plane(field, first, ep, S);
  const std::uint64_t inc = incidence(field, plane);
  std::uint64_t sum_solutions = 0;
  for (const Shift& sh : S.shifts())
    sum_solutions += solution_count(field, first, ep, sh.u, sh.v, EquationForm::Incidence);

  res.chain = {{"B*N", static_cast<double>(B * res.exact)},
               {"sum_S C(u,v)", static_cast<double>(sum_c)},
               {"I(P,L)", static_cast<double>(inc)}};
  res.chain_holds = B * res.exact <= sum_c && sum_c <= inc && inc == sum_solutions &&
                    plane.points.size() == field.q() && plane.lines.size() == S.size();
  res.certified_bound = static_cast<double>(inc) / static_cast<double>(B);
  res.reference_bounds = bound_N_reference(field.q(), B, S.size(), field.w() == 1);
  for (auto& r : incidence_bound_reference(plane.points.size(), plane.lines.size(), field.p()))
    res.reference_bounds.push_back({"I(P,L) <~ " + r.label, r.value});
  return res;
}

CountResult count_M(const Field& field, int u, int v, std::uint64_t B, unsigned threads) {
  if (B < 1) throw std::invalid_argument("B must be at least 1");
  const int hi = static_cast<int>(field.q()) - 3;
  if (u < 0 || u > hi || v < 0 || v > hi) throw std::invalid_argument("(u, v) must lie in [0, q-3]^2");
  const std::uint64_t n = field.order();
  const std::uint64_t phi = nt::euler_phi(n);
  const std::uint64_t tau = nt::tau(n);

  const Family fam = family_L(field);
  const std::size_t m = fam.members.size();
  std::vector<std::uint64_t> hits(m, 0), sums(m, 0);
  parallel_for(m, threads, [&](std::size_t i) {
    for (std::size_t k = 0; k < m; ++k) {
      const std::uint32_t c = cross_correlation(fam.members[i].view(), fam.members[k].view(), u, v);
      sums[i] += c;
      if (c >= B) ++hits[i];
    }
  });

  // Solutions of g1^{ru} x^r = 1 - (g2^v (1-x))^s over x in F_q^* \ {1}, summed
  // over g1, g2 primitive and r, s in [1, q-1] coprime to q-1. For fixed
  // (g1, g2, s) each x contributes the number of coprime r with j r = k mod (q-1).
  const bool use_table = n <= 4096;
  std::vector<std::uint32_t> rcount;
  if (use_table) {
    rcount.assign(n * n, 0);
    for (std::uint64_t j = 0; j < n; ++j)
      for (std::uint64_t r = 1; r <= n; ++r)
        if (nt::gcd(r, n) == 1) ++rcount[j * n + j * r % n];
  }
  auto coprime_solutions = [&](std::uint64_t j, std::uint64_t k) -> std::uint64_t {
    if (use_table) return rcount[j * n + k];
    const std::uint64_t d = nt::gcd(j, n);
    if (k % d != 0) return 0;
    const std::uint64_t step = n / d;
    const std::uint64_t r0 = step == 1 ? 0 : (k / d) % step * nt::mod_inverse((j / d) % step, step) % step;
    std::uint64_t c = 0;
    for (std::uint64_t i = 0; i < d; ++i) {
      const std::uint64_t r = r0 + i * step;
      if (nt::gcd(r == 0 ? n : r, n) == 1) ++c;
    }
    return c;
  };

  const auto prims = field.primitive_elements();
  const auto coprime_s = field.primitive_exponents();  // exponents in [1, q-2] coprime to q-1
  const std::size_t np = prims.size();
  std::vector<std::uint64_t> sol(np, 0), triple_max(np, 0);
  parallel_for(np, threads, [&](std::size_t a) {
    const FieldElement g1 = prims[a];
    const FieldElement g1u = field.pow(g1, u);
    for (FieldElement g2 : prims) {
      const FieldElement g2v = field.pow(g2, v);
      for (std::uint32_t s : coprime_s) {
        std::uint64_t pairs = 0;
        for (std::uint32_t enc = 2; enc < field.q(); ++enc) {
          const FieldElement x = field.element(enc);
          const FieldElement rhs = field.sub(field.one(), field.pow(field.mul(g2v, field.sub(field.one(), x)), s));
          if (rhs.enc == 0) continue;
          pairs += coprime_solutions(field.log_unchecked(field.mul(g1u, x)), field.log_unchecked(rhs));
        }
        sol[a] += pairs;
        triple_max[a] = std::max(triple_max[a], pairs);
      }
    }
  });

  std::uint64_t exact = 0, sum_c = 0, sum_sol = 0, max_triple = 0;
  for (std::size_t i = 0; i < m; ++i) {
    exact += hits[i];
    sum_c += sums[i];
  }
  for (std::size_t a = 0; a < np; ++a) {
    sum_sol += sol[a];
    max_triple = std::max(max_triple, triple_max[a]);
  }
  const DivisorSum ds = divisor_sum_bound(field.q());
  const double cap = static_cast<double>(tau) * std::pow(static_cast<double>(phi), 3) * static_cast<double>(n);

  CountResult res;
  res.q = field.q();
  res.B = B;
  res.query = "M(u=" + std::to_string(u) + ",v=" + std::to_string(v) + ")";
  res.exact = exact;
  res.certified_bound = cap / static_cast<double>(B);
  const double phi3 = std::pow(static_cast<double>(phi), 3);
  res.chain = {{"B*M", static_cast<double>(B * exact)},
               {"sum_{L_q^2} C(u,v)", static_cast<double>(sum_c)},
               {"sum_{g1,g2,r,s} #solutions", static_cast<double>(sum_sol)},
               {"max_{g1,g2,s} #(r,x)", static_cast<double>(max_triple)},
               {"sum_{d|q-1} phi((q-1)/d) d", static_cast<double>(ds.sum)},
               {"phi^3 * divisor sum", phi3 * static_cast<double>(ds.sum)},
               {"tau(q-1) phi(q-1)^3 (q-1)", cap}};
  res.chain_holds = B * exact <= sum_c && sum_c <= sum_sol && max_triple <= ds.sum &&
                    static_cast<double>(sum_sol) <= phi3 * static_cast<double>(ds.sum) && ds.strict &&
                    static_cast<double>(exact) < cap / static_cast<double>(B);
  res.reference_bounds.push_back({"q^4 / B", std::pow(static_cast<double>(field.q()), 4) / static_cast<double>(B)});
  return res;
}

DivisorSum divisor_sum_bound(std::uint64_t q) {
  if (!nt::is_prime_power(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  const std::uint64_t n = q - 1;
  DivisorSum ds;
  for (std::uint64_t d : nt::divisors(n)) ds.sum += nt::euler_phi(n / d) * d;
  ds.cap = nt::tau(n) * n;
  ds.strict = ds.sum < ds.cap;
  return ds;
}

}  // namespace costas
