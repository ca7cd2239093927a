#pragma once

// Shared internals of the two monopole-formula evaluators.

#include <vector>

#include "coulomb/monopole.hpp"

namespace coulomb::detail {

struct PreparedRequest {
  Quiver quiver;                       // after ungauging
  std::vector<std::string> fugacities; // z_<id> per refined node
  std::vector<int> fugacity_slot;      // per quiver node, -1 if unrefined
  LieConventions conv;
  ChargeBoundPolicy policy;
  int order = 0;
  unsigned threads = 1;
};

/// Applies ungauging and validates the request. Throws
/// DecoupledU1Unresolved when the diagonal U(1) has not been removed.
PreparedRequest prepare(const HSRequest& request);

/// True when the gauge nodes with their mutual edges form a forest
/// (parallel edges between the same pair count once).
bool gauge_graph_is_forest(const Quiver& q);

/// 4*Delta of a full charge.
long quarter_delta(const Quiver& q, const QuiverCharge& m, const LieConventions& conv);

template <class C>
C unit_coefficient(const LaurentMultinomial::Exponents& fugacity_exponents);

template <>
inline BigInt unit_coefficient<BigInt>(const LaurentMultinomial::Exponents&) {
  return 1;
}

template <>
inline LaurentMultinomial unit_coefficient<LaurentMultinomial>(const LaurentMultinomial::Exponents& e) {
  return LaurentMultinomial::monomial(e);
}

inline BigInt scaled(const BigInt& c, const BigInt& s) { return c * s; }

inline LaurentMultinomial scaled(const LaurentMultinomial& c, const BigInt& s) {
  LaurentMultinomial out;
  for (const auto& [e, x] : c.terms()) out.add_term(e, x * s);
  return out;
}

/// Coefficients of prod_d 1/(1 - x^{step * d}) up to x^max_exponent. With
/// step 2 and x = t this is P_G(m, t).
std::vector<BigInt> dressing_counts(const std::vector<int>& degrees, int max_exponent, int step);

template <class C>
Series<C> tree_hilbert_series(const PreparedRequest& request, EngineStats& stats);

template <class C>
Series<C> lattice_hilbert_series(const PreparedRequest& request, EngineStats& stats);

}  // namespace coulomb::detail
