#pragma once

#include <span>
#include <vector>

#include "coulomb/group.hpp"
#include "coulomb/numeric.hpp"

namespace coulomb {

/// Magnetic charge of one gauge node, as a Weyl-chamber representative:
///   U(N):       m_1 >= ... >= m_N
///   USp(2r):    m_1 >= ... >= m_r >= 0
///   SO(2r+1):   m_1 >= ... >= m_r >= 0
///   SO(2r):     m_1 >= ... >= m_{r-1} >= |m_r|   (r >= 2)
///   SO(2):      any integer (m >= 0 when SO(2) is treated as O(2))
using DominantCharge = std::vector<int>;

/// Normalisation of an SO x USp bifundamental half-hypermultiplet in the
/// conformal dimension, as a fraction of the sum over its full weight set.
enum class HalfHyperWeight {
  Quarter,  ///< half of a full hyper: 1/2 * 1/2 * sum_w |w(m)|
  Eighth,   ///< every sign-reduced pair |m_i +- n_j| weighted by 1/2 once more
};

struct LieConventions {
  HalfHyperWeight half_hyper = HalfHyperWeight::Quarter;
  /// Treat SO(2) gauge nodes as O(2): chamber m >= 0, Z_2-extended dressing at m = 0.
  bool so2_as_o2 = false;

  bool operator==(const LieConventions&) const = default;
};

bool in_chamber(const GaugeGroup& g, std::span<const int> m, const LieConventions& conv = {});

/// Throws ChamberViolation unless m is a dominant representative for g.
void require_chamber(const GaugeGroup& g, std::span<const int> m, const LieConventions& conv = {});

/// {|alpha(m)| : alpha positive root}.
std::vector<int> positive_root_values(const GaugeGroup& g, std::span<const int> m);

/// One term of the matter contribution: Delta gains (1/2) * weight * value.
struct WeightedValue {
  int value;
  Rational weight;
};

/// Matter values for an edge between node a (charge ma) and node b (charge
/// mb). When `b_is_background` the b side is a flavor or fixed node and its
/// charges are zero; mb is ignored. A unitary background of dimension F is
/// folded into weight F on each |m_i|.
std::vector<WeightedValue> matter_weight_values(const GaugeGroup& a, std::span<const int> ma, const GaugeGroup& b,
                                                std::span<const int> mb, bool b_is_background = false,
                                                const LieConventions& conv = {});

/// Stabiliser of m inside g, as a list of classical factors.
std::vector<GaugeGroup> residual_stabilizer(const GaugeGroup& g, std::span<const int> m,
                                            const LieConventions& conv = {});

/// Degrees of the adjoint-invariant generators of g.
std::vector<int> casimir_degrees(const GaugeGroup& g);

/// Casimir degrees of the residual stabiliser of m (the exponents d_i(m)).
/// Honours the O(2) convention for SO(2) nodes.
std::vector<int> dressing_degrees(const GaugeGroup& g, std::span<const int> m, const LieConventions& conv = {});

/// Chamber representative of the Weyl orbit of an arbitrary cocharacter.
DominantCharge dominant_representative(const GaugeGroup& g, std::span<const int> m, const LieConventions& conv = {});

/// Every element of the Weyl orbit of m, sorted and without repeats.
std::vector<DominantCharge> weyl_orbit(const GaugeGroup& g, std::span<const int> m, const LieConventions& conv = {});

/// All chamber representatives with max |entry| <= bound, ascending lexicographic.
std::vector<DominantCharge> dominant_charges(const GaugeGroup& g, int bound, const LieConventions& conv = {});

/// Chamber representatives with every entry in [lo, hi] for unitary groups,
/// or with every |entry| <= hi for the other families (lo is ignored).
std::vector<DominantCharge> dominant_charges_in_box(const GaugeGroup& g, int lo, int hi,
                                                    const LieConventions& conv = {});

// ---------------------------------------------------------------------------
// Integer conformal-dimension kernels. All return 4*Delta contributions so
// that both half-integral unitary and quarter-integral alternative
// orthosymplectic normalisations stay exact.
// ---------------------------------------------------------------------------

/// -4 * sum |alpha(m)|.
long vector_quarter_delta(const GaugeGroup& g, std::span<const int> m);

/// 4 * (matter contribution) of `multiplicity` copies of the a-b edge.
long edge_quarter_delta(const GaugeGroup& a, std::span<const int> ma, const GaugeGroup& b, std::span<const int> mb,
                        int multiplicity, const LieConventions& conv);

/// 4 * matter contribution of an edge to a background node of group b.
long background_quarter_delta(const GaugeGroup& a, std::span<const int> ma, const GaugeGroup& b, int multiplicity,
                              const LieConventions& conv);

}  // namespace coulomb
