#include "coulomb/implosion.hpp"

#include <algorithm>

namespace coulomb {

TruncatedSeries nilcone_reference_hs(int n, int order) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "nilcone_reference_hs needs n >= 1");
  // 1/(1 - t^2)^{n^2}: the t^{2k} coefficient is binom(n^2 - 1 + k, k).
  TruncatedSeries s(order);
  BigInt c = 1;
  const long dim = static_cast<long>(n) * n;
  for (int k = 0; 2 * k <= order; ++k) {
    if (k > 0) c = c * (dim - 1 + k) / k;
    s.set(2 * k, c);
  }
  for (int i = 1; i <= n; ++i) {
    TruncatedSeries factor = TruncatedSeries::one(order);
    if (2 * i <= order) factor.set(2 * i, -1);
    s = s * factor;
  }
  return s;
}

HSRequest ungauged_bouquet_request(int n, int order) {
  HSRequest r;
  r.quiver = build_bouquet_quiver(n);
  r.ungauge = "b1";
  r.order = order;
  return r;
}

HSRequest refined_bouquet_request(int n, int order) {
  HSRequest r = ungauged_bouquet_request(n, order);
  for (int i = 2; i <= n; ++i) r.refined.push_back("b" + std::to_string(i));
  return r;
}

TruncatedSeries refined_implosion_integral(const HSRequest& request, int n, std::optional<int> prefactor_exponent) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "refined_implosion_integral needs n >= 1");
  if (static_cast<int>(request.refined.size()) != n - 1) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n - 1) + " refined bouquet nodes, got " +
                                                std::to_string(request.refined.size()));
  }
  const int e = prefactor_exponent.value_or(n - 1);
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "prefactor exponent must be non-negative");

  RefinedSeries hs = refined_coulomb_hilbert_series(request).series;
  TruncatedSeries prefactor = TruncatedSeries::one(request.order);
  TruncatedSeries one_minus_t2 = TruncatedSeries::one(request.order);
  if (request.order >= 2) one_minus_t2.set(2, -1);
  for (int i = 0; i < e; ++i) prefactor = prefactor * one_minus_t2;

  RefinedSeries integrand = hs * to_refined(prefactor, hs.fugacities());
  for (const std::string& id : request.refined) integrand = constant_term(integrand, fugacity_name(id));
  return to_unrefined(integrand);
}

ContributionReport hs_contribution_check(int n, unsigned threads) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "hs_contribution_check needs n >= 2");
  ContributionReport r;
  r.n = n;
  r.order = std::max(2, n - 1);

  HSRequest request = ungauged_bouquet_request(n, r.order);
  request.threads = threads;
  r.series = coulomb_hilbert_series(request).series;

  r.t2 = r.series.at(2);
  r.t2_generic = static_cast<long>(n) * n + n - 2;
  if (n == 2) {
    r.enhanced_group = "Sp(2)";
    r.t2_expected = 10;
  } else if (n == 3) {
    r.enhanced_group = "SO(8)";
    r.t2_expected = 28;
  } else {
    r.t2_expected = r.t2_generic;
  }
  r.t2_matches = r.t2 == r.t2_expected;
  r.t_n_minus_1 = r.series.at(n - 1);

  const Quiver q = ungauge(request.quiver, "b1");
  for (int leaf = 2; leaf <= n; ++leaf) {
    for (int sign : {1, -1}) {
      QuiverCharge m = zero_charge(q);
      m.nodes[q.index_of("b" + std::to_string(leaf))] = {sign};
      r.identified.push_back(std::move(m));
    }
  }
  // The ungauged leaf's monopoles appear as a common shift of every other node.
  for (int sign : {1, -1}) {
    QuiverCharge m = zero_charge(q);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q.node(i).is_gauge()) std::fill(m.nodes[i].begin(), m.nodes[i].end(), sign);
    }
    r.identified.push_back(std::move(m));
  }
  r.identified_have_degree = std::all_of(r.identified.begin(), r.identified.end(), [&](const QuiverCharge& m) {
    const ConformalDimension d = delta(q, m);
    return d.integral_grading() && d.t_exponent() == n - 1;
  });
  return r;
}

}  // namespace coulomb
