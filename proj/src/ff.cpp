#include "costas/ff.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "costas/numtheory.hpp"

namespace costas {
namespace {

using Poly = std::vector<std::uint64_t>;  // ascending coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic.
Poly reduce(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i < df; ++i) a[shift + i] = (a[shift + i] + (p - lead) * f[i] % p) % p;
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return reduce(std::move(c), f, p);
}

Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = reduce(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    const std::uint64_t inv = nt::mod_inverse(b.back(), p);
    for (auto& c : b) c = c * inv % p;
    a = reduce(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p, unsigned w) {
  std::vector<Poly> frob(w + 1);  // X^{p^i} mod f
  frob[0] = reduce(Poly{0, 1}, f, p);
  for (unsigned i = 1; i <= w; ++i) frob[i] = powmod(frob[i - 1], p, f, p);
  if (frob[w] != frob[0]) return false;
  for (const auto& pf : nt::factorize(w).factors) {
    Poly h = frob[w / pf.prime];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (poly_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

Poly decode(std::uint64_t enc, std::uint64_t p) {
  Poly a;
  while (enc > 0) {
    a.push_back(enc % p);
    enc /= p;
  }
  return a;
}

std::uint64_t encode(const Poly& a, std::uint64_t p) {
  std::uint64_t enc = 0;
  for (std::size_t i = a.size(); i-- > 0;) enc = enc * p + a[i];
  return enc;
}

}  // namespace

Field Field::from_order(std::uint64_t q, std::uint64_t limit) {
  const auto pp = nt::prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return Field(pp->p, pp->w, limit);
}

Field::Field(std::uint64_t p, unsigned w, std::uint64_t limit) {
  if (!nt::is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (w == 0) throw std::invalid_argument("extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < w; ++i) {
    q *= p;
    if (q > limit)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(w) +
                                  " exceeds limit " + std::to_string(limit));
  }
  p_ = static_cast<std::uint32_t>(p);
  w_ = w;
  q_ = static_cast<std::uint32_t>(q);
  pow_p_.resize(w + 1);
  pow_p_[0] = 1;
  for (unsigned i = 1; i <= w; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  Poly f;
  if (w == 1) {
    f = {0, 1};
  } else {
    for (std::uint64_t e = 0; e < q; ++e) {
      Poly cand = decode(e, p);
      cand.resize(w + 1, 0);
      cand[w] = 1;
      if (is_irreducible(cand, p, w)) {
        f = std::move(cand);
        break;
      }
    }
  }
  modulus_.assign(f.begin(), f.end());

  const std::uint64_t n = q - 1;
  const auto n_factors = nt::factorize(n).factors;
  auto primitive_by_poly = [&](std::uint64_t enc) {
    if (enc == 0) return false;
    const Poly a = decode(enc, p);
    for (const auto& pf : n_factors)
      if (powmod(a, n / pf.prime, f, p) == Poly{1}) return false;
    return true;
  };
  std::uint64_t g = 1;
  while (!primitive_by_poly(g)) ++g;

  exp_.resize(n);
  log_.assign(q, 0);
  if (w == 1) {
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
      exp_[k] = {static_cast<std::uint32_t>(x)};
      log_[x] = static_cast<std::uint32_t>(k);
      x = x * g % p;
    }
  } else {
    const Poly gp = decode(g, p);
    Poly x{1};
    for (std::uint64_t k = 0; k < n; ++k) {
      const auto enc = static_cast<std::uint32_t>(encode(x, p));
      exp_[k] = {enc};
      log_[enc] = static_cast<std::uint32_t>(k);
      x = mulmod(x, gp, f, p);
    }
  }
}

FieldElement Field::element(std::uint64_t enc) const {
  if (enc >= q_)
    throw std::invalid_argument("encoding " + std::to_string(enc) + " out of range for GF(" + std::to_string(q_) + ")");
  return {static_cast<std::uint32_t>(enc)};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (w_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.enc} + b.enc) % p_)};
  if (p_ == 2) return {a.enc ^ b.enc};
  std::uint32_t out = 0;
  for (unsigned i = 0; i < w_; ++i) {
    const std::uint32_t da = a.enc / pow_p_[i] % p_;
    const std::uint32_t db = b.enc / pow_p_[i] % p_;
    out += (da + db) % p_ * pow_p_[i];
  }
  return {out};
}

FieldElement Field::neg(FieldElement a) const {
  if (w_ == 1) return {a.enc == 0 ? 0 : p_ - a.enc};
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  for (unsigned i = 0; i < w_; ++i) {
    const std::uint32_t d = a.enc / pow_p_[i] % p_;
    out += (p_ - d) % p_ * pow_p_[i];
  }
  return {out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.enc == 0 || b.enc == 0) return zero();
  std::uint32_t k = log_[a.enc] + log_[b.enc];
  if (k >= order()) k -= order();
  return exp_[k];
}

FieldElement Field::inv(FieldElement a) const {
  if (a.enc == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t k = log_[a.enc];
  return exp_[k == 0 ? 0 : order() - k];
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
  if (a.enc == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t n = order();
  std::int64_t k = static_cast<std::int64_t>(static_cast<__int128>(log_[a.enc]) * e % n);
  if (k < 0) k += n;
  return exp_[static_cast<std::size_t>(k)];
}

FieldElement Field::frobenius(FieldElement a) const { return pow(a, p_); }

std::uint32_t Field::log(FieldElement a) const {
  if (a.enc == 0 || a.enc >= q_) throw std::domain_error("discrete log of zero or out-of-range element");
  return log_[a.enc];
}

FieldElement Field::exp(std::int64_t k) const {
  const std::int64_t n = order();
  k %= n;
  if (k < 0) k += n;
  return exp_[static_cast<std::size_t>(k)];
}

bool Field::is_primitive(FieldElement a) const {
  if (a.enc == 0 || a.enc >= q_) return false;
  return nt::gcd(log_[a.enc], order()) == 1;
}

std::vector<FieldElement> Field::primitive_elements() const {
  std::vector<FieldElement> out;
  for (std::uint32_t e = 1; e < q_; ++e)
    if (is_primitive({e})) out.push_back({e});
  return out;
}

std::vector<std::uint32_t> Field::primitive_exponents() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < order(); ++k)
    if (nt::gcd(k, order()) == 1) out.push_back(k);
  return out;
}

CharacterSpec Field::character(std::uint32_t j) const {
  if (j >= order()) throw std::invalid_argument("character index out of range");
  return {j, static_cast<std::uint32_t>(order() / nt::gcd(j, order()))};
}

std::complex<double> Field::char_value(CharacterSpec chi, FieldElement a) const {
  if (a.enc == 0) return {0.0, 0.0};
  const std::uint64_t k = std::uint64_t{chi.j} * log_[a.enc] % order();
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order());
  return std::polar(1.0, angle);
}

}  // namespace costas
