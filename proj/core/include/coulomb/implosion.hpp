#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coulomb/monopole.hpp"

namespace coulomb {

/// prod_{i=1}^n (1 - t^{2i}) / (1 - t^2)^{n^2}, the Hilbert series of the
/// nilpotent cone of sl(n), expanded to order K.
TruncatedSeries nilcone_reference_hs(int n, int order);

/// Bouquet quiver for SU(n) with the leaf b1 ungauged.
HSRequest ungauged_bouquet_request(int n, int order);

/// As above, with topological fugacities on the leaves b2..bn.
HSRequest refined_bouquet_request(int n, int order);

/// (1 - t^2)^e times the refined series, then the constant term in every
/// fugacity of the request. e defaults to n - 1; `prefactor_exponent`
/// overrides it (used as a negative control). Requires exactly n - 1
/// refined nodes.
TruncatedSeries refined_implosion_integral(const HSRequest& request, int n,
                                           std::optional<int> prefactor_exponent = std::nullopt);

struct ContributionReport {
  int n = 0;
  int order = 0;
  TruncatedSeries series{0};

  BigInt t2;
  long t2_generic = 0;  // n^2 + n - 2
  /// Set for n = 2, 3 where the symmetry enhances beyond the generic count.
  std::optional<std::string> enhanced_group;
  long t2_expected = 0;
  bool t2_matches = false;

  BigInt t_n_minus_1;
  /// Bare monopoles with 2*Delta = n - 1: +-1 on each free leaf and the
  /// shift of everything but the ungauged leaf.
  std::vector<QuiverCharge> identified;
  bool identified_have_degree = false;
};

ContributionReport hs_contribution_check(int n, unsigned threads = 1);

}  // namespace coulomb
