#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "costas/bounds.hpp"
#include "costas/ff.hpp"
#include "costas/golomb.hpp"
#include "costas/xcorr.hpp"

namespace costas {

/// Distinct shifts with 0 <= u, v <= q-3, kept sorted.
class ShiftSet {
 public:
  ShiftSet(std::uint64_t q, std::vector<Shift> shifts);
  static ShiftSet rectangle(std::uint64_t q, int u0, int u1, int v0, int v1);
  static ShiftSet full(std::uint64_t q);

  const std::vector<Shift>& shifts() const { return shifts_; }
  std::size_t size() const { return shifts_.size(); }
  std::uint64_t q() const { return q_; }

 private:
  std::uint64_t q_;
  std::vector<Shift> shifts_;
};

struct PlanePoint {
  FieldElement y, z;
  friend auto operator<=>(const PlanePoint&, const PlanePoint&) = default;
};

/// The line a*y + b*z = 1.
struct PlaneLine {
  FieldElement a, b;
  friend auto operator<=>(const PlaneLine&, const PlaneLine&) = default;
};

struct IncidencePlane {
  std::vector<PlanePoint> points;  // distinct
  std::vector<PlaneLine> lines;    // distinct
};

/// Points ((1-x)^s, x^r) for x in F_q; lines g4^v y + g1^{ru} z = 1 for (u,v) in S.
IncidencePlane make_plane(const Field& field, GolombPair first, ExponentPair ep, const ShiftSet& S);

/// Direct point-on-line count, O(|P| |L|).
std::uint64_t incidence(const Field& field, const IncidencePlane& plane);

struct ReferenceBound {
  std::string label;
  double value = 0.0;
};

struct ChainLink {
  std::string label;
  double value = 0.0;
};

struct CountResult {
  std::uint64_t q = 0;
  std::uint64_t B = 0;
  std::string query;
  std::uint64_t exact = 0;
  std::optional<double> certified_bound;
  /// Links of the inequality chain, each <= the next (strict where marked).
  std::vector<ChainLink> chain;
  bool chain_holds = false;
  std::vector<ReferenceBound> reference_bounds;  // implied constant taken as 1
};

/// N_{q,B,S}: shifts in S where the pair's cross-correlation reaches B.
CountResult count_N(const Field& field, GolombPair first, GolombPair second, std::uint64_t B, const ShiftSet& S);

/// M_{q,B}: ordered pairs of L_q (diagonal included) whose C(u, v) reaches B.
CountResult count_M(const Field& field, int u, int v, std::uint64_t B, unsigned threads = 1);

std::vector<ReferenceBound> bound_N_reference(std::uint64_t q, std::uint64_t B, std::uint64_t size_S, bool q_is_prime);
std::vector<ReferenceBound> incidence_bound_reference(std::uint64_t size_P, std::uint64_t size_L, std::uint64_t p);

struct DivisorSum {
  std::uint64_t sum = 0;  // sum over d | q-1 of phi((q-1)/d) d
  std::uint64_t cap = 0;  // tau(q-1) (q-1)
  bool strict = false;
};

DivisorSum divisor_sum_bound(std::uint64_t q);

}  // namespace costas
