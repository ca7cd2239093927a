// Acceptance run: one PASS/FAIL line per criterion. Expected values come
// from closed forms, hand-counted integers and small brute-force oracles
// written here with their own polynomial arithmetic.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coulomb/gale.hpp"
#include "coulomb/implosion.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/plethystic.hpp"
#include "coulomb/quiver.hpp"

using namespace coulomb;

namespace {

using Poly = std::vector<BigInt>;  // coefficients of t^0..t^K

Poly one(int order) {
  Poly p(static_cast<std::size_t>(order) + 1);
  p[0] = 1;
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// 1 - t^d
Poly binomial(int d, int order) {
  Poly p = one(order);
  if (d <= order) p[static_cast<std::size_t>(d)] -= 1;
  return p;
}

// 1 / (1 - t^d)
Poly geometric(int d, int order) {
  Poly p(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k * d <= order; ++k) p[static_cast<std::size_t>(k * d)] = 1;
  return p;
}

Poly power(const Poly& p, int e) {
  Poly out = one(static_cast<int>(p.size()) - 1);
  for (int i = 0; i < e; ++i) out = mul(out, p);
  return out;
}

Poly u1_flavors_closed_form(int d, int order) {
  return mul(mul(binomial(2 * d, order), geometric(2, order)), power(geometric(d, order), 2));
}

Poly nilcone(int n, int order) {
  Poly p = power(geometric(2, order), n * n);
  for (int i = 1; i <= n; ++i) p = mul(p, binomial(2 * i, order));
  return p;
}

Poly as_poly(const TruncatedSeries& s) { return Poly(s.coefficients().begin(), s.coefficients().end()); }

std::string first_difference(const Poly& got, const Poly& want) {
  const std::size_t n = std::min(got.size(), want.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (got[k] != want[k]) return "t^" + std::to_string(k) + " " + got[k].str() + " vs " + want[k].str();
  }
  if (got.size() < want.size()) return "computed series too short";
  return "";
}

TruncatedSeries hs(const Quiver& q, int order, std::optional<std::string> ungauge = std::nullopt,
                   const ChargeBoundPolicy& policy = {}, EngineStrategy strategy = EngineStrategy::Auto) {
  HSRequest r;
  r.quiver = q;
  r.order = order;
  r.ungauge = std::move(ungauge);
  r.policy = policy;
  r.strategy = strategy;
  return coulomb_hilbert_series(r).series;
}

Quiver single_node(GaugeGroup g, GaugeGroup flavor) {
  Quiver q;
  q.add_node("g", NodeKind::Gauge, g);
  q.add_node("f", NodeKind::Flavor, flavor);
  q.add_edge("g", "f");
  return q;
}

// ---------------------------------------------------------------------------
// Quiver bookkeeping recomputed from nodes and edges.

int group_rank(const GaugeGroup& g) { return g.is_unitary() ? g.n() : g.n() / 2; }

int total_gauge_rank(const Quiver& q) {
  int r = 0;
  for (const QuiverNode& node : q.nodes()) {
    if (node.is_gauge()) r += group_rank(node.group);
  }
  return r;
}

// Unitary: N_f - 2N. SO(N): (sum USp dims)/2 - (N - 1). USp(2k): (sum SO dims)/2 - (2k + 1).
int balance_of(const Quiver& q, std::size_t i) {
  int adjacent = 0;
  for (const QuiverEdge& e : q.edges()) {
    if (e.a == i && e.b != i) adjacent += q.node(e.b).group.n();
    if (e.b == i && e.a != i) adjacent += q.node(e.a).group.n();
  }
  const GaugeGroup& g = q.node(i).group;
  switch (g.family()) {
    case Family::Unitary:
      return adjacent - 2 * g.n();
    case Family::Orthogonal:
      return adjacent / 2 - (g.n() - 1);
    case Family::Symplectic:
      return adjacent / 2 - (g.n() + 1);
  }
  return 0;
}

bool all_gauge_balanced(const Quiver& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.node(i).is_gauge() && balance_of(q, i) != 0) return false;
  }
  return true;
}

// Symmetry dimension of a unitary quiver whose balanced subgraph is a union
// of simple chains: A_k per chain, one U(1) per unbalanced gauge node, minus
// the decoupled diagonal U(1) when nothing is flavored. -1 if a balanced
// component is not a chain.
long chain_symmetry_dimension(const Quiver& q) {
  std::vector<std::size_t> balanced;
  long abelian = 0;
  bool has_flavor = false;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q.node(i).is_gauge()) {
      has_flavor = true;
      continue;
    }
    if (balance_of(q, i) == 0) {
      balanced.push_back(i);
    } else {
      ++abelian;
    }
  }
  const std::set<std::size_t> in_set(balanced.begin(), balanced.end());
  std::set<std::size_t> seen;
  long dim = 0;
  for (std::size_t start : balanced) {
    if (seen.count(start)) continue;
    std::vector<std::size_t> stack{start};
    seen.insert(start);
    long nodes = 0;
    long edge_ends = 0;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      ++nodes;
      int degree = 0;
      for (const QuiverEdge& e : q.edges()) {
        const std::size_t w = e.a == v ? e.b : (e.b == v ? e.a : v);
        if (w == v || !in_set.count(w)) continue;
        ++degree;
        if (seen.insert(w).second) stack.push_back(w);
      }
      if (degree > 2) return -1;
      edge_ends += degree;
    }
    if (edge_ends / 2 != nodes - 1) return -1;
    dim += nodes * (nodes + 2);
  }
  return dim + abelian - (has_flavor ? 0 : 1);
}

// ---------------------------------------------------------------------------
// Weyl-group brute force for a single gauge node with a flavor node.

bool even_signs_only(const GaugeGroup& g) { return g.family() == Family::Orthogonal && g.n() % 2 == 0; }

// Number of signed permutations in W(g) fixing m, and |W(g)|.
std::pair<long, long> stabilizer_and_order(const GaugeGroup& g, const std::vector<int>& m) {
  const std::size_t r = m.size();
  const bool signs = g.is_orthosymplectic() && !(g.family() == Family::Orthogonal && g.n() == 2);
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  long fixing = 0;
  long order = 0;
  do {
    const std::size_t masks = signs ? (std::size_t{1} << r) : 1;
    for (std::size_t mask = 0; mask < masks; ++mask) {
      if (even_signs_only(g) && std::popcount(mask) % 2 == 1) continue;
      ++order;
      bool fixes = true;
      for (std::size_t i = 0; i < r && fixes; ++i) {
        const int image = (mask >> i & 1U) ? -m[perm[i]] : m[perm[i]];
        fixes = image == m[i];
      }
      if (fixes) ++fixing;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {fixing, order};
}

// 2 * Delta for a charge anywhere in the lattice; flavors of total
// dimension D contribute (D/2) sum |m_i|.
long twice_delta(const GaugeGroup& g, const std::vector<int>& m, int flavor_dim) {
  long roots = 0;
  long abs_sum = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    abs_sum += std::abs(m[i]);
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      roots += std::abs(m[i] - m[j]);
      if (g.is_orthosymplectic()) roots += std::abs(m[i] + m[j]);
    }
    if (g.family() == Family::Symplectic) roots += 2L * std::abs(m[i]);
    if (g.family() == Family::Orthogonal && g.n() % 2 == 1) roots += std::abs(m[i]);
  }
  return flavor_dim * abs_sum - 2 * roots;
}

std::vector<int> chamber_image(const GaugeGroup& g, std::vector<int> m) {
  if (g.is_unitary()) {
    std::sort(m.rbegin(), m.rend());
    return m;
  }
  if (g.family() == Family::Orthogonal && g.n() == 2) return m;
  int negatives = 0;
  for (int& x : m) {
    negatives += x < 0;
    x = std::abs(x);
  }
  std::sort(m.rbegin(), m.rend());
  if (even_signs_only(g) && negatives % 2 == 1) m.back() = -m.back();
  return m;
}

// Returns an empty string on agreement.
std::string weyl_check(const GaugeGroup& g, const GaugeGroup& flavor, int order) {
  const Quiver q = single_node(g, flavor);
  const int box = 2 * order + 2;
  const int r = group_rank(g);
  std::vector<Rational> sum(static_cast<std::size_t>(order) + 1);
  std::vector<int> m(static_cast<std::size_t>(r), -box);
  while (true) {
    const long h = twice_delta(g, m, flavor.n());
    const int shell = r == 0 ? 0 : std::abs(*std::max_element(m.begin(), m.end(), [](int a, int b) {
      return std::abs(a) < std::abs(b);
    }));
    if (shell == box && h <= order) return "box too small";
    if (h <= order) {
      if (h < 0) return "negative dimension";
      const auto [fixing, w] = stabilizer_and_order(g, m);
      const QuiverCharge charge{{chamber_image(g, m), std::vector<int>(static_cast<std::size_t>(group_rank(flavor)), 0)}};
      const Poly p = as_poly(dressing_factor(q, charge, order));
      for (long k = 0; k + h <= order; ++k) {
        sum[static_cast<std::size_t>(k + h)] += Rational(p[static_cast<std::size_t>(k)] * fixing, w);
      }
    }
    std::size_t i = 0;
    while (i < m.size() && ++m[i] > box) m[i++] = -box;
    if (i == m.size()) break;
  }
  const Poly engine = as_poly(hs(q, order));
  for (int k = 0; k <= order; ++k) {
    if (sum[static_cast<std::size_t>(k)] != Rational(engine[static_cast<std::size_t>(k)])) {
      return "t^" + std::to_string(k);
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Exact linear algebra for the Gale checks.

std::size_t rational_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rational(m(i, j));
  return out;
}

BigInt determinant(std::vector<std::vector<Rational>> a) {
  Rational det = 1;
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return numerator(det);
}

// gcd of maximal minors: 1 iff the row lattice is saturated.
BigInt minor_gcd(const IntMatrix& m) {
  const std::size_t k = m.rows();
  const std::size_t d = m.cols();
  if (k == 0) return 1;
  BigInt g = 0;
  std::vector<bool> pick(d, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::vector<Rational>> sub(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (pick[j]) sub[i].push_back(Rational(m(i, j)));
    g = gcd(g, abs(determinant(sub)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

// Saturated lattices of equal rank are equal iff they span the same space.
bool same_saturated_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows()) return false;
  auto stacked = rows_of(a);
  for (auto& row : rows_of(b)) stacked.push_back(row);
  return rational_rank(rows_of(a)) == a.rows() && rational_rank(stacked) == a.rows();
}

std::string gale_check(int configs) {
  std::mt19937 rng(8128);
  std::uniform_int_distribution<int> dd(1, 8);
  std::uniform_int_distribution<long> entry(-3, 3);
  int done = 0;
  int attempts = 0;
  while (done < configs) {
    if (++attempts > 100 * configs) return "could not draw enough saturated configurations";
    const std::size_t d = static_cast<std::size_t>(dd(rng));
    const std::size_t n = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, static_cast<int>(std::min<std::size_t>(d, 4)))(rng));
    std::vector<std::vector<long>> cols(d, std::vector<long>(n));
    for (auto& c : cols)
      for (long& x : c) x = entry(rng);
    const ToricConfig c = ToricConfig::from_columns(n, cols);
    if (rational_rank(rows_of(c.u)) != n || minor_gcd(c.u) != 1) continue;
    ++done;

    const ToricConfig dual = gale_dual(c);
    const std::string where = " (config " + std::to_string(done) + ")";
    if (dual.n() != d - n || dual.d() != d) return "dual has the wrong shape" + where;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < dual.n(); ++k) {
        BigInt dot = 0;
        for (std::size_t j = 0; j < d; ++j) dot += c.u(i, j) * dual.u(k, j);
        if (dot != 0) return "dual is not orthogonal" + where;
      }
    if (minor_gcd(dual.u) != 1) return "dual lattice not saturated" + where;
    if (!same_saturated_lattice(gale_dual(dual).u, c.u)) return "double dual differs" + where;

    const DualityReport p = duality_report(c);
    const DualityReport q = duality_report(dual);
    if (p.dim_primal != q.dim_dual || p.dim_dual != q.dim_primal || p.fi_primal != q.fi_dual ||
        p.fi_dual != q.fi_primal || p.isometry_rank_primal != q.isometry_rank_dual ||
        p.fi_primal != p.isometry_rank_dual || p.dim_primal != 4 * n || p.dim_dual != 4 * (d - n)) {
      return "exchange fails" + where;
    }
  }
  return "";
}

// ---------------------------------------------------------------------------

struct Criterion {
  int number;
  std::string description;
  double limit;  // seconds, 0 = none
  std::function<std::string(std::string&)> body;  // returns failure text; fills the summary
};

}  // namespace

int main() {
  std::map<std::string, Poly> golden;
  std::vector<Criterion> criteria;

  criteria.push_back({1, "U(1) with d flavors, d=1..5, order 20", 1.0, [&](std::string& summary) {
                        for (int d = 1; d <= 5; ++d) {
                          Quiver q = single_node(GaugeGroup::U(1), GaugeGroup::U(d));
                          const Poly got = as_poly(hs(q, 20));
                          const std::string diff = first_difference(got, u1_flavors_closed_form(d, 20));
                          if (!diff.empty()) return "d=" + std::to_string(d) + ": " + diff;
                          golden["u1 d=" + std::to_string(d)] = got;
                        }
                        summary = "closed form matches for d=1..5";
                        return std::string();
                      }});

  criteria.push_back({2, "nilpotent quiver, n=2,3, order 10", 60.0, [&](std::string& summary) {
                        for (int n = 2; n <= 3; ++n) {
                          const Poly got = as_poly(hs(build_linear_nilpotent_quiver(n), 10));
                          std::string diff = first_difference(got, nilcone(n, 10));
                          if (diff.empty()) diff = first_difference(as_poly(nilcone_reference_hs(n, 10)), nilcone(n, 10));
                          if (!diff.empty()) return "n=" + std::to_string(n) + ": " + diff;
                          golden["nilpotent n=" + std::to_string(n)] = got;
                        }
                        summary = "nilpotent cone series for n=2,3";
                        return std::string();
                      }});

  criteria.push_back({3, "ungauged bouquet n=2: t = 4, t^2 = 10", 1.0, [&](std::string& summary) {
                        const Poly got = as_poly(hs(build_bouquet_quiver(2), 2, "b1"));
                        summary = "t = " + got[1].str() + ", t^2 = " + got[2].str();
                        return got[1] == 4 && got[2] == 10 ? std::string() : summary;
                      }});

  criteria.push_back({4, "ungauged bouquet n=3, order 4: t^2 = 28", 60.0, [&](std::string& summary) {
                        const Poly got = as_poly(hs(build_bouquet_quiver(3), 4, "b1"));
                        golden["bouquet n=3"] = got;
                        summary = "t^2 = " + got[2].str();
                        return got[2] == 28 ? std::string() : summary;
                      }});

  criteria.push_back({5, "ungauged bouquet n=4,5, order 4: t^2 = n^2+n-2", 600.0, [&](std::string& summary) {
                        for (int n = 4; n <= 5; ++n) {
                          const Poly got = as_poly(hs(build_bouquet_quiver(n), 4, "b1"));
                          summary += (summary.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) +
                                     ": t^2 = " + got[2].str();
                          if (got[2] != n * n + n - 2) return summary;
                        }
                        return std::string();
                      }});

  criteria.push_back({6, "refined integral n=2,3, order 8", 60.0, [&](std::string& summary) {
                        for (int n = 2; n <= 3; ++n) {
                          HSRequest r;
                          r.quiver = build_bouquet_quiver(n);
                          r.order = 8;
                          r.ungauge = "b1";
                          for (int i = 2; i <= n; ++i) r.refined.push_back("b" + std::to_string(i));
                          const RefinedSeries refined = refined_coulomb_hilbert_series(r).series;
                          // Constant term: every fugacity exponent zero.
                          Poly constant(9);
                          for (int k = 0; k <= 8; ++k) {
                            for (const auto& [e, c] : refined.at(k).terms()) {
                              if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) {
                                constant[static_cast<std::size_t>(k)] += c;
                              }
                            }
                          }
                          const Poly integral = mul(power(binomial(2, 8), n - 1), constant);
                          std::string diff = first_difference(integral, nilcone(n, 8));
                          if (diff.empty()) {
                            diff = first_difference(as_poly(refined_implosion_integral(r, n)), nilcone(n, 8));
                          }
                          if (!diff.empty()) return "n=" + std::to_string(n) + ": " + diff;
                          golden["refined integral n=" + std::to_string(n)] = integral;
                        }
                        summary = "nilpotent cone series for n=2,3";
                        return std::string();
                      }});

  criteria.push_back({7, "D_n bouquet quiver: D_3 t^2 = 18, D_4 t^2 = 32", 600.0, [&](std::string& summary) {
                        for (int n = 3; n <= 4; ++n) {
                          const Poly got = as_poly(hs(build_dn_implosion_quiver(n), 2));
                          summary += (summary.empty() ? "" : ", ") + std::string("D_") + std::to_string(n) +
                                     ": t^2 = " + got[2].str();
                          if (got[2] != 2 * n * n) return summary;
                        }
                        return std::string();
                      }});

  criteria.push_back({8, "4 rank: 2(n^2+n-2) for bouquets n=2..10, 4n^2 for D_n n=2..8", 0.0,
                      [&](std::string& summary) {
                        for (int n = 2; n <= 10; ++n) {
                          const Quiver q = ungauge(build_bouquet_quiver(n), "b1");
                          if (4 * total_gauge_rank(q) != 2 * (n * n + n - 2) ||
                              expected_coulomb_dimension_real(q) != 2 * (n * n + n - 2)) {
                            return "bouquet n=" + std::to_string(n);
                          }
                        }
                        for (int n = 2; n <= 8; ++n) {
                          const Quiver q = build_dn_implosion_quiver(n);
                          if (4 * total_gauge_rank(q) != 4 * n * n || 4 * gauge_group_rank(q) != 4 * n * n) {
                            return "D_" + std::to_string(n);
                          }
                        }
                        summary = "all identities hold";
                        return std::string();
                      }});

  criteria.push_back({9, "balance and symmetry bookkeeping", 0.0, [&](std::string& summary) {
                        for (int n = 2; n <= 12; ++n) {
                          const Quiver q = build_linear_nilpotent_quiver(n);
                          if (!all_gauge_balanced(q) || !balance_report(q).all_balanced) {
                            return "nilpotent quiver n=" + std::to_string(n) + " not balanced";
                          }
                          const Quiver b = build_bouquet_quiver(n);
                          for (int i = 1; i <= n; ++i) {
                            const std::string id = "b" + std::to_string(i);
                            if (balance_of(b, b.index_of(id)) != n - 3 || node_balance(b, id) != n - 3) {
                              return "bouquet n=" + std::to_string(n) + " leaf " + id;
                            }
                          }
                          if (n >= 4) {
                            const long want = n * n + n - 2;
                            if (chain_symmetry_dimension(b) != want ||
                                predict_global_symmetry(b).total_dimension != want) {
                              return "symmetry dimension of bouquet n=" + std::to_string(n);
                            }
                          }
                        }
                        for (int n = 2; n <= 8; ++n) {
                          const Quiver q = build_dn_implosion_quiver(n, DnVariant::Flavor);
                          if (!all_gauge_balanced(q) || !balance_report(q).all_balanced) {
                            return "D_" + std::to_string(n) + " chain not balanced";
                          }
                        }
                        summary = "nilpotent n=2..12 balanced, leaf balance n-3, D_n chains balanced, "
                                  "symmetry n^2+n-2";
                        return std::string();
                      }});

  criteria.push_back({10, "property suites", 0.0, [&](std::string& summary) {
                        for (const auto& [name, p] : golden) {
                          const int order = std::min(static_cast<int>(p.size()) - 1, 10);
                          TruncatedSeries s(order);
                          for (int k = 0; k <= order; ++k) s.set(k, p[static_cast<std::size_t>(k)]);
                          if (plethystic_exp(plethystic_log(s, order), order) != s) return "PE(PL) fails on " + name;
                        }
                        const std::vector<std::pair<GaugeGroup, GaugeGroup>> groups = {
                            {GaugeGroup::U(1), GaugeGroup::U(3)},    {GaugeGroup::U(2), GaugeGroup::U(5)},
                            {GaugeGroup::U(3), GaugeGroup::U(7)},    {GaugeGroup::USp(2), GaugeGroup::SO(8)},
                            {GaugeGroup::USp(4), GaugeGroup::SO(12)}, {GaugeGroup::SO(3), GaugeGroup::USp(6)},
                            {GaugeGroup::SO(4), GaugeGroup::USp(8)},  {GaugeGroup::SO(5), GaugeGroup::USp(10)},
                            {GaugeGroup::SO(6), GaugeGroup::USp(12)}, {GaugeGroup::SO(2), GaugeGroup::USp(4)},
                        };
                        for (const auto& [g, f] : groups) {
                          const std::string diff = weyl_check(g, f, 6);
                          if (!diff.empty()) return "Weyl brute force " + g.label() + ": " + diff;
                        }
                        const std::string gale = gale_check(200);
                        if (!gale.empty()) return "Gale: " + gale;

                        ChargeBoundPolicy wide;
                        wide.initial_bound = 6;
                        wide.empty_shells = 4;
                        for (int n = 2; n <= 3; ++n) {
                          const int order = n == 2 ? 6 : 4;
                          const Quiver q = build_bouquet_quiver(n);
                          const TruncatedSeries base = hs(q, order, "b1");
                          if (hs(q, order, "b1", wide) != base ||
                              hs(q, order, "b1", wide, EngineStrategy::LatticeSum) != base) {
                            return "enumeration stability, bouquet n=" + std::to_string(n);
                          }
                          for (int i = 2; i <= n; ++i) {
                            if (hs(q, order, "b" + std::to_string(i)) != base) {
                              return "ungauging b" + std::to_string(i) + " in bouquet n=" + std::to_string(n);
                            }
                          }
                          if (hs(q, order, "g1") != base) return "ungauging g1 in bouquet n=" + std::to_string(n);
                        }
                        summary = "PE(PL) on " + std::to_string(golden.size()) + " series, Weyl brute force on " +
                                  std::to_string(groups.size()) +
                                  " groups, 200 Gale configurations, stability and ungauging";
                        return std::string();
                      }});

  bool all = true;
  for (const Criterion& c : criteria) {
    std::string summary;
    std::string failure;
    const auto start = std::chrono::steady_clock::now();
    try {
      failure = c.body(summary);
    } catch (const std::exception& e) {
      failure = std::string("error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && c.limit > 0 && seconds > c.limit) failure = "over the time limit";
    const bool pass = failure.empty();
    all = all && pass;
    char timing[64];
    if (c.limit > 0) {
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", seconds, c.limit);
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    }
    std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.description << "  ("
              << (pass ? summary : failure) << "; " << timing << ")" << std::endl;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
