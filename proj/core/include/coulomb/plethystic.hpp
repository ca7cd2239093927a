#pragma once

#include "coulomb/series.hpp"

namespace coulomb {

/// Moebius function mu(k), k >= 1.
int mobius(int k);

/// PL[s](t) = sum_{k>=1} mu(k)/k * log s(t^k), to order min(K, s.order()).
/// Positive terms count generators, negative terms relations.
RationalSeries plethystic_log(const TruncatedSeries& s, int order);
RationalSeries plethystic_log(const RationalSeries& s, int order);

/// PE[f](t) = exp(sum_{k>=1} f(t^k)/k), exact rational result.
RationalSeries plethystic_exp_rational(const RationalSeries& f, int order);

/// Integer-valued PE; throws NonIntegralResult when the expansion is not integral.
TruncatedSeries plethystic_exp(const RationalSeries& f, int order);

}  // namespace coulomb
