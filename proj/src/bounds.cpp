#include "costas/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "costas/numtheory.hpp"
#include "costas/parallel.hpp"
#include "costas/xcorr.hpp"

namespace costas {
namespace {

std::uint64_t require_q(std::uint64_t q) {
  if (q < 4 || !nt::is_prime_power(q))
    throw std::invalid_argument("q = " + std::to_string(q) + " must be a prime power >= 4");
  return q;
}

}  // namespace

ExponentPair make_exponent_pair(std::uint64_t q, std::uint64_t r, std::uint64_t s) {
  if (q < 3) throw std::invalid_argument("q must be at least 3");
  const std::uint64_t n = q - 1;
  if (r < 1 || r > q - 2 || s < 1 || s > q - 2)
    throw std::invalid_argument("exponents must lie in [1, q-2]");
  if (nt::gcd(r, n) != 1 || nt::gcd(s, n) != 1)
    throw std::invalid_argument("gcd(rs, q-1) must be 1 (r = " + std::to_string(r) + ", s = " + std::to_string(s) +
                                ", q = " + std::to_string(q) + ")");
  return {static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s),
          static_cast<std::uint32_t>(nt::mod_inverse(r, n)), static_cast<std::uint32_t>(nt::mod_inverse(s, n))};
}

ExponentPair exponent_pair(const Field& field, GolombPair first, GolombPair second) {
  require_golomb_pair(field, first);
  require_golomb_pair(field, second);
  const std::uint64_t n = field.order();
  const std::uint64_t r = std::uint64_t{field.log(second.g1)} * nt::mod_inverse(field.log(first.g1), n) % n;
  const std::uint64_t s = std::uint64_t{field.log(second.g2)} * nt::mod_inverse(field.log(first.g2), n) % n;
  return make_exponent_pair(field.q(), r, s);
}

GolombPair partner(const Field& field, GolombPair first, ExponentPair ep) {
  return {field.pow(first.g1, ep.r), field.pow(first.g2, ep.s)};
}

bool is_conjugate_exponents(std::uint64_t q, ExponentPair ep) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw std::invalid_argument("q is not a prime power");
  if (ep.r != ep.s) return false;
  std::uint64_t pj = 1;
  for (unsigned j = 0; j < pp->w; ++j) {
    if (pj % (q - 1) == ep.r) return true;
    pj *= pp->p;
  }
  return false;
}

CGqBound bound_CGq(std::uint64_t q) {
  const auto cls = nt::classify_safe(q);
  if (cls.kind != nt::SafeKind::NotSafe) return {BoundKind::UpperBound, 1 + nt::iroot(q, 2)};
  return {BoundKind::Exact, (q - 1) / cls.t - 1};
}

BoundReport bound_pair(std::uint64_t q, ExponentPair ep, BoundMode mode) {
  require_q(q);
  const ExponentPair checked = make_exponent_pair(q, ep.r, ep.s);
  if (is_conjugate_exponents(q, checked))
    throw std::invalid_argument("exponent pair (r, s) = (" + std::to_string(ep.r) + ", " + std::to_string(ep.s) +
                                ") describes conjugate pairs");
  const double sq = std::sqrt(static_cast<double>(q));
  const double r = checked.r, s = checked.s, ri = checked.r_inv, si = checked.s_inv, Q = static_cast<double>(q);
  const double eight[] = {s, si, r, ri, Q - s, Q - r, Q - ri, Q - si};
  const double m = *std::min_element(std::begin(eight), std::end(eight));
  const bool safe = nt::classify_safe(q).kind != nt::SafeKind::NotSafe;

  BoundReport rep;
  rep.q = q;
  rep.ep = checked;
  auto add = [&](std::string label, double value, bool certified) {
    if (certified || mode == BoundMode::All) rep.candidates.push_back({std::move(label), value, certified});
  };
  // Exponent 1 gives no Weil bound (the proof needs s > 1). It reduces to the
  // G_q situation, which has a square-root bound only when q is safe.
  double m2 = std::numeric_limits<double>::infinity();
  for (double k : eight)
    if (k >= 2.0) m2 = std::min(m2, k);
  add("weil_min8", 1.0 + m2 * sq, true);
  if (m < 2.0) add("exponent_one_safe", 1.0 + sq, safe);
  add("lagrange_max_rs", std::max(r, s), true);
  add("degree_r_plus_q1_minus_s", (Q - 1 - s) + r, true);
  add("degree_s_plus_q1_minus_r", (Q - 1 - r) + s, true);
  add("trivial_q_minus_2", Q - 2, true);
  if (q % 2 == 1) {
    // Splitting x^r = x^{(q-1)/2} x^{r0} by quadratic character; distances
    // are taken from the exponents themselves (k and q-1-k are equidistant).
    // |r0| = 1 leaves a linear equation that can hold identically.
    const double half = (Q - 1) / 2;
    double dist = std::numeric_limits<double>::infinity();
    for (double k : {s, si, r, ri}) dist = std::min(dist, std::abs(k - half));
    add("odd_split", 1.0 + 2.0 * dist * sq, dist >= 2.0);
    double literal = std::numeric_limits<double>::infinity();
    for (double k : eight) literal = std::min(literal, std::abs(k - half));
    add("odd_split_eight", 1.0 + 2.0 * literal * sq, false);
  }
  add("lagrange_swap_r", std::max(Q - 1 - r, s), false);
  add("lagrange_swap_s", std::max(r, Q - 1 - s), false);
  add("lagrange_swap_both", std::max(Q - 1 - r, Q - 1 - s), false);

  rep.best = std::numeric_limits<double>::infinity();
  for (const auto& c : rep.candidates) rep.best = std::min(rep.best, c.value);
  return rep;
}

std::uint32_t exhaustive_exponent_max(const Field& field, ExponentPair ep, unsigned threads) {
  const auto pairs = family_L_pairs(field);
  std::vector<std::uint32_t> best(pairs.size(), 0);
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    const auto a = golomb_perm(field, pairs[i]);
    const auto b = golomb_perm(field, partner(field, pairs[i], ep));
    best[i] = max_cross_correlation(a.view(), b.view());
  });
  return best.empty() ? 0 : *std::max_element(best.begin(), best.end());
}

std::uint32_t subfamily_base(std::uint64_t q) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw std::invalid_argument("q is not a prime power");
  return pp->p == 3 ? 5 : 3;
}

std::uint32_t subfamily_theta(std::uint64_t q, double delta) {
  const double a = subfamily_base(q);
  return static_cast<std::uint32_t>(std::floor(delta * std::log(static_cast<double>(q)) / (2.0 * std::log(a))));
}

SubfamilySpec subfamily_spec(const Field& field, double delta) {
  const std::uint64_t q = field.q();
  if (q <= 7 || nt::classify_safe(q).kind == nt::SafeKind::NotSafe)
    throw std::invalid_argument("subfamily needs a safe prime power q > 7, got " + std::to_string(q));
  if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("delta must lie in (0, 1/2)");
  SubfamilySpec spec;
  spec.q = q;
  spec.delta = delta;
  spec.a = subfamily_base(q);
  const std::uint64_t n = q - 1;
  std::uint32_t smallest = 2;
  while (nt::gcd(smallest, n) != 1 || smallest == field.p()) ++smallest;
  if (smallest != spec.a || nt::gcd(spec.a, n) != 1)
    throw std::logic_error("subfamily base " + std::to_string(spec.a) + " is not the least admissible integer");
  spec.theta = subfamily_theta(q, delta);
  const std::uint64_t a_inv = nt::mod_inverse(spec.a, n);
  const auto t = static_cast<std::int64_t>(spec.theta);
  std::vector<std::uint64_t> exps;
  for (std::int64_t i = -t; i <= t; ++i) {
    const std::uint64_t e = i < 0 ? nt::pow_mod(a_inv, static_cast<std::uint64_t>(-i), n)
                                  : nt::pow_mod(spec.a, static_cast<std::uint64_t>(i), n);
    if (std::find(exps.begin(), exps.end(), e) != exps.end())
      throw std::invalid_argument("exponents a^i collide modulo q-1; delta too large for this q");
    exps.push_back(e);
    spec.A.push_back(field.exp(static_cast<std::int64_t>(e)));
  }
  return spec;
}

Subfamily subfamily(const Field& field, double delta) {
  Subfamily out;
  out.spec = subfamily_spec(field, delta);
  out.family.name = "Ldelta_" + std::to_string(field.q());
  const auto prims = field.primitive_elements();
  for (FieldElement g2 : out.spec.A)
    for (FieldElement g1 : prims) out.family.members.push_back(golomb_perm(field, {g1, g2}));
  return out;
}

Theorem1Bound theorem1_bound(std::uint64_t q, double delta) {
  if (q <= 7 || nt::classify_safe(q).kind == nt::SafeKind::NotSafe)
    throw std::invalid_argument("theorem1_bound needs a safe prime power q > 7");
  if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("delta must lie in (0, 1/2)");
  Theorem1Bound b;
  b.a = subfamily_base(q);
  b.theta = subfamily_theta(q, delta);
  const double Q = static_cast<double>(q);
  b.sharp = 1.0 + std::pow(static_cast<double>(b.a), 2.0 * b.theta) * std::sqrt(Q);
  b.cap = 1.0 + std::pow(Q, 0.5 + delta);
  return b;
}

std::uint64_t solution_count(const Field& field, GolombPair first, ExponentPair ep, std::int64_t u, std::int64_t v,
                             EquationForm form) {
  require_golomb_pair(field, first);
  const ExponentPair e = make_exponent_pair(field.q(), ep.r, ep.s);
  const FieldElement g1 = first.g1;
  const FieldElement g4 = field.pow(first.g2, e.s);
  const FieldElement one = field.one();
  std::uint64_t count = 0;
  switch (form) {
    case EquationForm::Ceq: {
      const FieldElement A = field.pow(g1, static_cast<std::int64_t>(e.r) * u);
      const FieldElement B = field.pow(g4, v);
      for (std::uint32_t enc = 0; enc < field.q(); ++enc) {
        const FieldElement y{enc};
        if (y == one) continue;
        const FieldElement lhs = field.mul(A, field.pow(field.sub(one, y), e.r));
        const FieldElement rhs = field.sub(one, field.mul(B, field.pow(y, e.s)));
        if (lhs == rhs) ++count;
      }
      break;
    }
    case EquationForm::Substituted: {
      const FieldElement A = field.pow(g1, -u);
      const FieldElement B = field.pow(g4, -v * static_cast<std::int64_t>(e.s_inv));
      const FieldElement excluded = field.pow(g4, v);
      for (std::uint32_t enc = 0; enc < field.q(); ++enc) {
        const FieldElement z{enc};
        if (z == excluded) continue;
        const FieldElement lhs = field.mul(A, field.pow(field.sub(one, z), e.r_inv));
        const FieldElement rhs = field.sub(one, field.mul(B, field.pow(z, e.s_inv)));
        if (lhs == rhs) ++count;
      }
      break;
    }
    case EquationForm::Incidence: {
      const FieldElement A = field.pow(g4, v);
      const FieldElement B = field.pow(g1, static_cast<std::int64_t>(e.r) * u);
      for (std::uint32_t enc = 0; enc < field.q(); ++enc) {
        const FieldElement x{enc};
        const FieldElement lhs =
            field.add(field.mul(A, field.pow(field.sub(one, x), e.s)), field.mul(B, field.pow(x, e.r)));
        if (lhs == one) ++count;
      }
      break;
    }
  }
  return count;
}

std::uint64_t count_alpha_beta(const Field& field, FieldElement alpha, FieldElement beta, std::uint64_t r,
                               std::uint64_t s) {
  if (alpha.enc == 0 || beta.enc == 0) throw std::invalid_argument("alpha and beta must be nonzero");
  std::uint64_t count = 0;
  for (std::uint32_t enc = 0; enc < field.q(); ++enc) {
    const FieldElement x{enc};
    const FieldElement lhs = field.add(field.mul(alpha, field.pow(field.sub(field.one(), x), static_cast<std::int64_t>(r))),
                                       field.mul(beta, field.pow(x, static_cast<std::int64_t>(s))));
    if (lhs == field.one()) ++count;
  }
  return count;
}

namespace {

// g1^{ru} (1-y)^r (1 - g4^v y^s)^{q-2} for every y, indexed by encoding.
std::vector<FieldElement> weil_arguments(const Field& field, GolombPair first, const ExponentPair& e, std::int64_t u,
                                         std::int64_t v) {
  const FieldElement one = field.one();
  const FieldElement A = field.pow(first.g1, static_cast<std::int64_t>(e.r) * u);
  const FieldElement B = field.pow(field.pow(first.g2, e.s), v);
  std::vector<FieldElement> args(field.q());
  for (std::uint32_t enc = 0; enc < field.q(); ++enc) {
    const FieldElement y{enc};
    const FieldElement left = field.mul(A, field.pow(field.sub(one, y), e.r));
    const FieldElement right = field.pow(field.sub(one, field.mul(B, field.pow(y, e.s))), field.q() - 2);
    args[enc] = field.mul(left, right);
  }
  return args;
}

}  // namespace

WeilResult weil_oracle(const Field& field, GolombPair first, ExponentPair ep, std::int64_t u, std::int64_t v,
                       std::uint32_t j) {
  require_golomb_pair(field, first);
  const ExponentPair e = make_exponent_pair(field.q(), ep.r, ep.s);
  if (j == 0) throw std::invalid_argument("weil_oracle: principal character");
  if (e.s <= 1) throw std::invalid_argument("weil_oracle: needs s > 1");
  if (e.s % field.p() == 0) throw std::invalid_argument("weil_oracle: needs gcd(s, p) = 1");
  const CharacterSpec chi = field.character(j);
  std::complex<double> sum{0.0, 0.0};
  for (FieldElement a : weil_arguments(field, first, e, u, v)) sum += field.char_value(chi, a);
  WeilResult res;
  res.magnitude = std::abs(sum);
  res.bound = static_cast<double>(e.s) * std::sqrt(static_cast<double>(field.q()));
  res.pass = res.magnitude <= res.bound + kWeilTolerance;
  return res;
}

double character_average(const Field& field, GolombPair first, ExponentPair ep, std::int64_t u, std::int64_t v) {
  require_golomb_pair(field, first);
  const ExponentPair e = make_exponent_pair(field.q(), ep.r, ep.s);
  const auto args = weil_arguments(field, first, e, u, v);
  std::complex<double> total{0.0, 0.0};
  for (std::uint32_t j = 0; j < field.order(); ++j) {
    const CharacterSpec chi = field.character(j);
    for (FieldElement a : args) total += field.char_value(chi, a);
  }
  return total.real() / static_cast<double>(field.order());
}

}  // namespace costas
