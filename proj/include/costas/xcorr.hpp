#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "costas/ff.hpp"
#include "costas/golomb.hpp"

namespace costas {

/// Shift (u, v) with 1-n <= u, v <= n-1; v is compared over the integers.
struct Shift {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Shift&, const Shift&) = default;
};

/// Number of x in [max(1,1-u), min(n,n-u)] with f1(x) + v = f2(x + u).
std::uint32_t cross_correlation(std::span<const std::int32_t> f1, std::span<const std::int32_t> f2, int u, int v);

/// Counts C(u, v) for every shift of a pair of length-n sequences.
class CorrelationTable {
 public:
  explicit CorrelationTable(int n);

  int n() const { return n_; }
  std::uint32_t at(int u, int v) const { return counts_[index(u, v)]; }
  std::uint32_t& at(int u, int v) { return counts_[index(u, v)]; }
  std::uint32_t max() const;
  std::uint64_t row_sum(int u) const;

 private:
  std::size_t index(int u, int v) const;

  int n_;
  std::vector<std::uint32_t> counts_;
};

CorrelationTable correlation_table(std::span<const std::int32_t> f1, std::span<const std::int32_t> f2);

/// max over all shifts of C_{f1,f2}(u, v), O(n^2) with O(n) memory.
std::uint32_t max_cross_correlation(std::span<const std::int32_t> f1, std::span<const std::int32_t> f2);

struct Witness {
  std::size_t first = 0;   // family index of f1
  std::size_t second = 0;  // family index of f2
  int u = 0;
  int v = 0;
};

struct FamilyMaxReport {
  std::string family;
  std::size_t family_size = 0;
  std::uint32_t value = 0;
  /// Number of (ordered pair, shift) triples attaining value within the
  /// scanned window (full window, or 0 <= u, v <= n-1 when restricted).
  std::uint64_t occurrences = 0;
  std::vector<Witness> witnesses;  // capped; lowest pair index, then u, then v
  bool restricted = false;
  std::uint64_t pairs_scanned = 0;
  std::size_t symmetry_order = 1;
};

struct ScanOptions {
  /// Scan only 0 <= u, v <= n-1 over all ordered pairs.
  bool restrict_nonneg = false;
  /// Reduce by the flips/transposition the family is closed under and by the
  /// f1 <-> f2 swap. Ignored when restrict_nonneg is set.
  bool use_symmetry = true;
  unsigned threads = 1;
  std::size_t witness_cap = 100;
};

FamilyMaxReport family_max(const Family& family, const ScanOptions& options = {});

/// Elementary correlation steps family_max() will perform (approximate when
/// the symmetry reduction is on).
double estimate_family_work(const Family& family, const ScanOptions& options = {});

/// Index maps for the subgroup of {reverse positions, reverse values,
/// inverse} under which the family is closed; element 0 is the identity.
std::vector<std::vector<std::uint32_t>> family_symmetries(const Family& family);

/// Checks C_{f1,f2}(-u,v) = C_{f2,f1}(u,-v) and
/// C_{pi(g1,g2), pi(g3,g4)}(u,-v) = C_{pi(g1,1/g2), pi(g3,1/g4)}(u,v) at every shift.
bool symmetry_check(const Field& field, const CostasPermutation& f1, const CostasPermutation& f2);

}  // namespace costas
