// Exact message passing for quivers whose gauge nodes form a forest.
//
// Work in h = 4*Delta units. For node j with parent charge P the subtree
// generating function is
//   M_j(P) = sum_m x^{local_j(m, P)} D_j(m) prod_c M_c(m),
// where local_j collects the vector multiplet of j, its background edges and
// the edge to its parent. mu_j(P) is the lowest exponent of M_j(P); it lets
// every message be truncated against the budget left by its siblings.

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "engine.hpp"

namespace coulomb::detail {
namespace {

constexpr long kInfinity = std::numeric_limits<long>::max() / 4;
constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

template <class C>
struct Graded {
  long lo = 0;
  std::vector<C> c;  // c[i] multiplies x^{lo + i}

  bool empty() const { return c.empty(); }
  long hi() const { return lo + static_cast<long>(c.size()) - 1; }
};

template <class C>
void add_into(Graded<C>& acc, const Graded<C>& x) {
  if (x.empty()) return;
  if (acc.empty()) {
    acc = x;
    return;
  }
  if (x.lo < acc.lo) {
    acc.c.insert(acc.c.begin(), static_cast<std::size_t>(acc.lo - x.lo), C{});
    acc.lo = x.lo;
  }
  if (x.hi() > acc.hi()) acc.c.resize(static_cast<std::size_t>(x.hi() - acc.lo + 1));
  const std::size_t offset = static_cast<std::size_t>(x.lo - acc.lo);
  for (std::size_t i = 0; i < x.c.size(); ++i) acc.c[offset + i] += x.c[i];
}

template <class C>
Graded<C> multiply(const Graded<C>& a, const Graded<C>& b, long max) {
  Graded<C> out;
  if (a.empty() || b.empty() || a.lo + b.lo > max) return out;
  out.lo = a.lo + b.lo;
  const long hi = std::min(a.hi() + b.hi(), max);
  out.c.resize(static_cast<std::size_t>(hi - out.lo + 1));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (coefficient_traits<C>::is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size() && static_cast<long>(i + j) <= hi - out.lo; ++j) {
      if (coefficient_traits<C>::is_zero(b.c[j])) continue;
      out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return out;
}

struct NodeInfo {
  std::size_t parent = kNoParent;
  int parent_multiplicity = 0;
  std::vector<std::size_t> children;
  std::vector<std::pair<GaugeGroup, int>> backgrounds;
};

struct Forest {
  std::vector<NodeInfo> nodes;
  std::vector<std::size_t> roots;
};

Forest build_forest(const Quiver& q) {
  Forest f;
  f.nodes.resize(q.size());
  std::vector<int> degree(q.size(), 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q.node(i).is_gauge()) continue;
    for (const Neighbor& nb : q.neighbors(i)) {
      if (q.node(nb.node).is_gauge()) {
        ++degree[i];
      } else {
        f.nodes[i].backgrounds.emplace_back(q.node(nb.node).group, nb.multiplicity);
      }
    }
  }

  std::vector<bool> seen(q.size(), false);
  for (std::size_t start = 0; start < q.size(); ++start) {
    if (!q.node(start).is_gauge() || seen[start]) continue;
    // Collect the component, then root it at its busiest node.
    std::vector<std::size_t> component{start};
    seen[start] = true;
    for (std::size_t k = 0; k < component.size(); ++k) {
      for (const Neighbor& nb : q.neighbors(component[k])) {
        if (q.node(nb.node).is_gauge() && !seen[nb.node]) {
          seen[nb.node] = true;
          component.push_back(nb.node);
        }
      }
    }
    const std::size_t root = *std::min_element(component.begin(), component.end(), [&](std::size_t a, std::size_t b) {
      if (degree[a] != degree[b]) return degree[a] > degree[b];
      if (q.node(a).group.rank() != q.node(b).group.rank()) return q.node(a).group.rank() > q.node(b).group.rank();
      return a < b;
    });
    f.roots.push_back(root);

    std::vector<std::size_t> queue{root};
    std::vector<bool> placed(q.size(), false);
    placed[root] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const std::size_t j = queue[k];
      for (const Neighbor& nb : q.neighbors(j)) {
        if (!q.node(nb.node).is_gauge() || placed[nb.node]) continue;
        placed[nb.node] = true;
        f.nodes[nb.node].parent = j;
        f.nodes[nb.node].parent_multiplicity = nb.multiplicity;
        f.nodes[j].children.push_back(nb.node);
        queue.push_back(nb.node);
      }
    }
  }
  return f;
}

bool all_zero(const DominantCharge& m) {
  return std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
}

struct Summary {
  long mu = kInfinity;
};

template <class C>
class TreeContext {
 public:
  TreeContext(const PreparedRequest& request, const Forest& forest) : req_(request), forest_(forest) {}

  long local(std::size_t j, const DominantCharge& m, const DominantCharge& parent_charge) const {
    const GaugeGroup& g = group(j);
    long h = vector_quarter_delta(g, m);
    for (const auto& [bg, mult] : forest_.nodes[j].backgrounds) h += background_quarter_delta(g, m, bg, mult, req_.conv);
    const NodeInfo& info = forest_.nodes[j];
    if (info.parent != kNoParent) {
      h += edge_quarter_delta(g, m, group(info.parent), parent_charge, info.parent_multiplicity, req_.conv);
    }
    return h;
  }

  long children_mu(std::size_t j, const DominantCharge& m) {
    long s = 0;
    for (std::size_t c : forest_.nodes[j].children) s += summary(c, m).mu;
    return s;
  }

  const Summary& summary(std::size_t j, const DominantCharge& parent_charge) {
    const Key key{j, parent_charge};
    if (auto it = summaries_.find(key); it != summaries_.end()) return it->second;

    // With every ancestor at zero charge, a nonzero configuration of this
    // subtree is a nonzero configuration of the whole quiver.
    const bool exposed = all_zero(parent_charge);
    Summary s;
    long nonzero_best = kInfinity;
    int empty_run = 0;
    for (int radius = 0;; ++radius) {
      check_radius(radius);
      bool hit = false;
      for (const DominantCharge& m : shell(j, parent_charge, radius)) {
        const long v = local(j, m, parent_charge) + children_mu(j, m);
        const bool zero = all_zero(m);
        if (!zero && exposed && v <= 0) {
          throw Error(ErrorCode::BadTheory, "node '" + req_.quiver.node(j).id + "' admits a nonzero magnetic charge "
                                                "with Delta = " + ConformalDimension::from_quarters(v).str() +
                                                " <= 0; the monopole sum does not converge");
        }
        if (v <= s.mu) {
          s.mu = v;
          hit = true;
        }
        if (!zero && v <= nonzero_best) {
          nonzero_best = v;
          hit = true;
        }
      }
      empty_run = hit ? 0 : empty_run + 1;
      if (radius >= req_.policy.initial_bound && empty_run >= req_.policy.empty_shells) break;
    }
    return summaries_.emplace(key, s).first->second;
  }

  /// Charges of j with local + children_mu <= budget.
  std::vector<DominantCharge> candidates(std::size_t j, const DominantCharge& parent_charge, long budget) {
    std::vector<DominantCharge> out;
    int empty_run = 0;
    for (int radius = 0;; ++radius) {
      check_radius(radius);
      bool hit = false;
      for (DominantCharge& m : shell(j, parent_charge, radius)) {
        if (local(j, m, parent_charge) + children_mu(j, m) > budget) continue;
        out.push_back(std::move(m));
        hit = true;
      }
      empty_run = hit ? 0 : empty_run + 1;
      if (radius >= req_.policy.initial_bound && empty_run >= req_.policy.empty_shells) break;
    }
    return out;
  }

  const Graded<C>& message(std::size_t j, const DominantCharge& parent_charge, long budget) {
    const Key key{j, parent_charge};
    if (auto it = messages_.find(key); it != messages_.end() && it->second.first >= budget) return it->second.second;
    Graded<C> acc;
    for (const DominantCharge& m : candidates(j, parent_charge, budget)) add_into(acc, term(j, m, parent_charge, budget));
    auto& slot = messages_[key];
    slot = {budget, std::move(acc)};
    return slot.second;
  }

  /// x^{local} D_j(m) prod_c M_c(m), truncated at the budget.
  Graded<C> term(std::size_t j, const DominantCharge& m, const DominantCharge& parent_charge, long budget) {
    ++charges_;
    const long loc = local(j, m, parent_charge);
    const long mus = children_mu(j, m);

    LaurentMultinomial::Exponents z(req_.fugacities.size(), 0);
    if (const int slot = req_.fugacity_slot[j]; slot >= 0) {
      z[static_cast<std::size_t>(slot)] = std::accumulate(m.begin(), m.end(), 0);
    }
    const C unit = unit_coefficient<C>(z);
    const std::vector<BigInt> counts = dressing_counts(dressing_degrees(group(j), m, req_.conv),
                                                       static_cast<int>(budget - mus - loc), 4);
    Graded<C> t;
    t.lo = loc;
    t.c.reserve(counts.size());
    for (const BigInt& n : counts) t.c.push_back(n == 0 ? C{} : scaled(unit, n));

    long remaining = mus;
    for (std::size_t c : forest_.nodes[j].children) {
      const long mu_c = summary(c, m).mu;
      remaining -= mu_c;
      const Graded<C>& msg = message(c, m, budget - loc - mus + mu_c);
      t = multiply(t, msg, budget - remaining);
    }
    return t;
  }

  std::size_t charges() const { return charges_; }
  int radius_reached() const { return radius_reached_; }

 private:
  using Key = std::pair<std::size_t, DominantCharge>;

  const GaugeGroup& group(std::size_t j) const { return req_.quiver.node(j).group; }

  void check_radius(int radius) {
    if (radius > req_.policy.max_bound) {
      throw Error(ErrorCode::ConvergenceNotReached,
                  "charge shells still contribute at radius " + std::to_string(req_.policy.max_bound));
    }
    radius_reached_ = std::max(radius_reached_, radius);
  }

  // Charges in the box of radius R around the parent charge that are not in
  // the box of radius R - 1.
  std::vector<DominantCharge> shell(std::size_t j, const DominantCharge& parent_charge, int radius) const {
    const GaugeGroup& g = group(j);
    int lo = 0;
    int hi = 0;
    int reach = 0;
    for (int x : parent_charge) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      reach = std::max(reach, std::abs(x));
    }
    std::vector<DominantCharge> out;
    if (g.is_unitary()) {
      for (DominantCharge& m : dominant_charges_in_box(g, lo - radius, hi + radius, req_.conv)) {
        const bool inner = radius > 0 && std::all_of(m.begin(), m.end(), [&](int x) {
          return x > lo - radius && x < hi + radius;
        });
        if (!inner) out.push_back(std::move(m));
      }
    } else {
      for (DominantCharge& m : dominant_charges_in_box(g, 0, reach + radius, req_.conv)) {
        const bool inner = radius > 0 && std::all_of(m.begin(), m.end(), [&](int x) {
          return std::abs(x) < reach + radius;
        });
        if (!inner) out.push_back(std::move(m));
      }
    }
    return out;
  }

  const PreparedRequest& req_;
  const Forest& forest_;
  std::map<Key, Summary> summaries_;
  std::map<Key, std::pair<long, Graded<C>>> messages_;
  std::size_t charges_ = 0;
  int radius_reached_ = 0;
};

// Sums the root terms, splitting the root charges across worker contexts.
template <class C>
Graded<C> root_message(TreeContext<C>& ctx, std::size_t root, long budget, unsigned threads, EngineStats& stats) {
  const DominantCharge none;
  const std::vector<DominantCharge> roots = ctx.candidates(root, none, budget);
  const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(roots.size(), 1));
  if (workers <= 1) {
    Graded<C> acc;
    for (const DominantCharge& m : roots) add_into(acc, ctx.term(root, m, none, budget));
    return acc;
  }

  struct Part {
    Graded<C> sum;
    std::size_t charges = 0;
    int radius = 0;
  };
  std::vector<std::future<Part>> parts;
  for (std::size_t w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w, local = ctx]() mutable {
      Part p;
      for (std::size_t k = w; k < roots.size(); k += workers) add_into(p.sum, local.term(root, roots[k], none, budget));
      p.charges = local.charges() - ctx.charges();
      p.radius = local.radius_reached();
      return p;
    }));
  }
  Graded<C> acc;
  for (auto& f : parts) {
    Part p = f.get();
    add_into(acc, p.sum);
    stats.charges += p.charges;
    stats.bound_reached = std::max(stats.bound_reached, p.radius);
  }
  return acc;
}

}  // namespace

template <class C>
Series<C> tree_hilbert_series(const PreparedRequest& request, EngineStats& stats) {
  const Quiver& q = request.quiver;
  const long budget = 2L * request.order;
  const Forest forest = build_forest(q);
  TreeContext<C> ctx(request, forest);

  Graded<C> total;
  total.lo = 0;
  total.c.push_back(unit_coefficient<C>(LaurentMultinomial::Exponents(request.fugacities.size(), 0)));
  stats.charges = 0;
  stats.bound_reached = 0;
  for (std::size_t root : forest.roots) {
    ctx.summary(root, {});
    total = multiply(total, root_message(ctx, root, budget, request.threads, stats), budget);
  }
  stats.charges += ctx.charges();
  stats.bound_reached = std::max(stats.bound_reached, ctx.radius_reached());

  Series<C> out(request.order, request.fugacities);
  for (std::size_t i = 0; i < total.c.size(); ++i) {
    if (coefficient_traits<C>::is_zero(total.c[i])) continue;
    const long h = total.lo + static_cast<long>(i);
    if (h < 0) throw Error(ErrorCode::BadTheory, "negative conformal dimension in the monopole sum");
    out.add_to(static_cast<int>(ConformalDimension::from_quarters(h).t_exponent()), total.c[i]);
  }
  return out;
}

template Series<BigInt> tree_hilbert_series<BigInt>(const PreparedRequest&, EngineStats&);
template Series<LaurentMultinomial> tree_hilbert_series<LaurentMultinomial>(const PreparedRequest&, EngineStats&);

}  // namespace coulomb::detail
