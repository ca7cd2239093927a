#include "coulomb/plethystic.hpp"

namespace coulomb {

int mobius(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "mobius needs k >= 1");
  int result = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    result = -result;
  }
  if (k > 1) result = -result;
  return result;
}

namespace {

// log s via n*b_n = n*a_n - sum_{k=1}^{n-1} k*b_k*a_{n-k}, for a_0 = 1.
std::vector<Rational> series_log(const RationalSeries& s, int order) {
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) {
    Rational acc = Rational(n) * s.at(n);
    for (int k = 1; k < n; ++k) acc -= Rational(k) * b[static_cast<std::size_t>(k)] * s.at(n - k);
    b[static_cast<std::size_t>(n)] = acc / n;
  }
  return b;
}

}  // namespace

RationalSeries plethystic_log(const RationalSeries& s, int order) {
  if (s.at(0) != 1) throw Error(ErrorCode::NonUnitConstantTerm, "plethystic log needs s(0) = 1");
  order = std::min(order, s.order());
  const std::vector<Rational> log_s = series_log(s, order);
  RationalSeries out(order);
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      const int mu = mobius(k);
      if (mu != 0) acc += Rational(mu, k) * log_s[static_cast<std::size_t>(n / k)];
    }
    out.set(n, acc);
  }
  return out;
}

RationalSeries plethystic_log(const TruncatedSeries& s, int order) { return plethystic_log(to_rational(s), order); }

RationalSeries plethystic_exp_rational(const RationalSeries& f, int order) {
  if (f.at(0) != 0) throw Error(ErrorCode::NonzeroConstantTerm, "plethystic exp needs f(0) = 0");
  order = std::min(order, f.order());
  // g = sum_k f(t^k)/k, then E = exp(g) through n*e_n = sum_{k=1}^n k*g_k*e_{n-k}.
  std::vector<Rational> g(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) {
    for (int j = 1; j * k <= order; ++j) g[static_cast<std::size_t>(j * k)] += f.at(j) / k;
  }
  RationalSeries e(order);
  e.set(0, 1);
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += Rational(k) * g[static_cast<std::size_t>(k)] * e.at(n - k);
    e.set(n, acc / n);
  }
  return e;
}

TruncatedSeries plethystic_exp(const RationalSeries& f, int order) {
  return to_integral(plethystic_exp_rational(f, order));
}

}  // namespace coulomb
