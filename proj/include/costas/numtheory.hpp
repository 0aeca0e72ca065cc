#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace costas::nt {

using u64 = std::uint64_t;

/// Largest argument accepted by factorize().
inline constexpr u64 kFactorLimit = u64{1} << 40;

struct PrimeFactor {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

struct Factorization {
  u64 n = 1;
  std::vector<PrimeFactor> factors;  // primes strictly increasing

  u64 product() const;
};

struct PrimePower {
  u64 p = 0;
  unsigned w = 0;
};

enum class SafeKind { SafePrime, MersenneEven, StrictSafePower3, NotSafe };

struct SafeClass {
  u64 q = 0;
  SafeKind kind = SafeKind::NotSafe;
  u64 t = 0;  // smallest prime divisor of (q-1)/2 (odd q) or q-1 (even q)
};

std::string_view to_string(SafeKind kind);

u64 gcd(u64 a, u64 b);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Deterministic for all 64-bit inputs.
bool is_prime(u64 n);

/// Trial division up to 2^20; whatever remains is prime for n <= 2^40.
Factorization factorize(u64 n);

u64 euler_phi(u64 n);
u64 tau(u64 n);
std::vector<u64> divisors(u64 n);

/// Unique x in [1, m-1] with a*x = 1 (mod m). Throws std::invalid_argument
/// when gcd(a, m) != 1 or m < 2.
u64 mod_inverse(u64 a, u64 m);

/// Integer k-th root, floor.
u64 iroot(u64 n, unsigned k);

std::optional<PrimePower> prime_power(u64 q);
bool is_prime_power(u64 q);

/// Prime powers in [lo, hi], ascending.
std::vector<u64> prime_powers(u64 lo, u64 hi);

SafeClass classify_safe(u64 q);
std::vector<u64> safe_list(u64 qmax);

}  // namespace costas::nt
