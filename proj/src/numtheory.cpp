#include "costas/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace costas::nt {

std::string_view to_string(SafeKind kind) {
  switch (kind) {
    case SafeKind::SafePrime: return "SafePrime";
    case SafeKind::MersenneEven: return "MersenneEven";
    case SafeKind::StrictSafePower3: return "StrictSafePower3";
    case SafeKind::NotSafe: return "NotSafe";
  }
  return "?";
}

u64 Factorization::product() const {
  u64 r = 1;
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.exponent; ++i) r *= f.prime;
  return r;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 3.3 * 10^24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0 || n > kFactorLimit)
    throw std::invalid_argument("factorize: n must be in [1, 2^40], got " + std::to_string(n));
  Factorization f;
  f.n = n;
  u64 m = n;
  for (u64 d = 2; d * d <= m && d <= (u64{1} << 20); d += (d == 2 ? 1 : 2)) {
    if (m % d != 0) continue;
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    f.factors.push_back({d, e});
  }
  if (m > 1) f.factors.push_back({m, 1});
  return f;
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (const auto& f : factorize(n).factors) r = r / f.prime * (f.prime - 1);
  return r;
}

u64 tau(u64 n) {
  u64 r = 1;
  for (const auto& f : factorize(n).factors) r *= f.exponent + 1;
  return r;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> ds{1};
  for (const auto& f : factorize(n).factors) {
    const std::size_t base = ds.size();
    u64 pk = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

u64 mod_inverse(u64 a, u64 m) {
  if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  using i128 = __int128;
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 qt = old_r / r;
    i128 tmp = old_r - qt * r;
    old_r = r;
    r = tmp;
    tmp = old_s - qt * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1)
    throw std::invalid_argument("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                                std::to_string(m));
  i128 x = old_s % static_cast<i128>(m);
  if (x < 0) x += m;
  return static_cast<u64>(x);
}

u64 iroot(u64 n, unsigned k) {
  if (k == 0) throw std::invalid_argument("iroot: k must be positive");
  if (k == 1 || n < 2) return n;
  auto pow_le = [&](u64 base) {
    // true iff base^k <= n, without overflow
    u64 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (acc > n / base) return false;
      acc *= base;
    }
    return true;
  };
  u64 lo = 1, hi = u64{1} << ((64 + k - 1) / k);
  while (lo < hi) {
    u64 mid = lo + (hi - lo + 1) / 2;
    if (pow_le(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::optional<PrimePower> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  for (unsigned w = 63; w >= 1; --w) {
    u64 root = iroot(q, w);
    if (root < 2) continue;
    u64 back = 1;
    for (unsigned i = 0; i < w; ++i) back *= root;
    if (back == q && is_prime(root)) return PrimePower{root, w};
  }
  return std::nullopt;
}

bool is_prime_power(u64 q) { return prime_power(q).has_value(); }

std::vector<u64> prime_powers(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 q = std::max<u64>(lo, 2); q <= hi; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

SafeClass classify_safe(u64 q) {
  const auto pp = prime_power(q);
  if (q < 4 || !pp)
    throw std::invalid_argument("classify_safe: q must be a prime power >= 4, got " +
                                std::to_string(q));
  const bool odd = (q & 1) != 0;
  const u64 m = odd ? (q - 1) / 2 : q - 1;
  SafeClass c{q, SafeKind::NotSafe, factorize(m).factors.front().prime};
  if (c.t != m) return c;
  if (!odd)
    c.kind = SafeKind::MersenneEven;
  else if (pp->w == 1)
    c.kind = SafeKind::SafePrime;
  else
    c.kind = SafeKind::StrictSafePower3;
  return c;
}

std::vector<u64> safe_list(u64 qmax) {
  std::vector<u64> out;
  for (u64 q : prime_powers(4, qmax))
    if (classify_safe(q).kind != SafeKind::NotSafe) out.push_back(q);
  return out;
}

}  // namespace costas::nt
