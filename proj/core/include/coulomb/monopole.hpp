#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "coulomb/lie.hpp"
#include "coulomb/quiver.hpp"
#include "coulomb/series.hpp"

namespace coulomb {

/// Magnetic charge of a whole quiver, indexed like Quiver::nodes(). Flavor
/// and fixed nodes carry zero vectors of their rank.
struct QuiverCharge {
  std::vector<DominantCharge> nodes;

  bool is_zero() const;
  bool operator==(const QuiverCharge&) const = default;
};

QuiverCharge zero_charge(const Quiver& q);

/// Throws ChamberViolation / InvalidArgument if m does not fit q.
void validate_charge(const Quiver& q, const QuiverCharge& m, const LieConventions& conv = {});

/// Conformal dimension Delta(m), stored exactly as the integer 4*Delta.
class ConformalDimension {
 public:
  constexpr ConformalDimension() = default;
  static constexpr ConformalDimension from_quarters(long quarters) { return ConformalDimension(quarters); }
  static constexpr ConformalDimension from_halves(long halves) { return ConformalDimension(2 * halves); }

  constexpr long quarters() const noexcept { return quarters_; }
  /// True when 2*Delta is an integer (the t-grading is integral).
  constexpr bool integral_grading() const noexcept { return quarters_ % 2 == 0; }
  /// 2*Delta; requires integral_grading().
  long t_exponent() const;
  /// "3/2", "2", "-1/4".
  std::string str() const;

  constexpr auto operator<=>(const ConformalDimension&) const = default;

 private:
  constexpr explicit ConformalDimension(long q) : quarters_(q) {}
  long quarters_ = 0;
};

struct ChargeBoundPolicy {
  /// Shells below this radius are always scanned.
  int initial_bound = 0;
  /// Hard limit on the shell radius; exceeding it raises ConvergenceNotReached.
  int max_bound = 48;
  /// Scanning stops after this many consecutive shells contribute nothing.
  int empty_shells = 2;
};

enum class EngineStrategy {
  Auto,           ///< tree messages when the gauge graph is a forest, else lattice sum
  TreeMessages,   ///< exact message passing over a tree-shaped gauge graph
  LatticeSum,     ///< direct sum over enumerate_charges
};

struct HSRequest {
  Quiver quiver;
  int order = 8;
  /// Gauge nodes carrying a topological fugacity z_<id>.
  std::vector<std::string> refined;
  /// U(1) gauge node to pin to zero charge before summing.
  std::optional<std::string> ungauge;
  ChargeBoundPolicy policy;
  LieConventions conventions;
  EngineStrategy strategy = EngineStrategy::Auto;
  unsigned threads = 1;
};

struct EngineStats {
  std::string strategy;
  /// Number of (node or quiver) charges that contributed to the sum.
  std::size_t charges = 0;
  /// Largest shell radius scanned.
  int bound_reached = 0;
  double seconds = 0.0;
};

template <class C>
struct HSResult {
  Series<C> series;
  EngineStats stats;
};

ConformalDimension delta(const Quiver& q, const QuiverCharge& m, const LieConventions& conv = {});

/// P_G(m, t) to order K; fixed and flavor nodes contribute 1.
TruncatedSeries dressing_factor(const Quiver& q, const QuiverCharge& m, int order, const LieConventions& conv = {});

struct ChargeEnumeration {
  std::vector<QuiverCharge> charges;
  int bound_reached = 0;
};

/// Every charge with Delta(m) <= delta_max, found shell by shell in the
/// max-|entry| norm. Order: by shell, then lexicographic in node order.
/// Throws BadTheory on a nonzero charge with Delta <= 0 and
/// ConvergenceNotReached when max_bound is hit while shells still contribute.
ChargeEnumeration enumerate_charges(const Quiver& q, ConformalDimension delta_max, const ChargeBoundPolicy& policy = {},
                                    const LieConventions& conv = {});

/// Unrefined Coulomb branch Hilbert series; `refined` must be empty.
HSResult<BigInt> coulomb_hilbert_series(const HSRequest& request);

/// Series refined by z_<id> for each id in request.refined.
HSResult<LaurentMultinomial> refined_coulomb_hilbert_series(const HSRequest& request);

/// The fugacity name used for a refined node.
std::string fugacity_name(const std::string& node_id);

/// Coefficient of t^2, the expected dimension of the global symmetry.
long symmetry_dimension(const TruncatedSeries& s);

}  // namespace coulomb
