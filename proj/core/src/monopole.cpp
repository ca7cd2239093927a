#include "coulomb/monopole.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "engine.hpp"

namespace coulomb {

bool QuiverCharge::is_zero() const {
  return std::all_of(nodes.begin(), nodes.end(),
                     [](const DominantCharge& m) { return std::all_of(m.begin(), m.end(), [](int x) { return x == 0; }); });
}

QuiverCharge zero_charge(const Quiver& q) {
  QuiverCharge m;
  for (const QuiverNode& node : q.nodes()) m.nodes.emplace_back(static_cast<std::size_t>(node.group.rank()), 0);
  return m;
}

void validate_charge(const Quiver& q, const QuiverCharge& m, const LieConventions& conv) {
  if (m.nodes.size() != q.size()) {
    throw Error(ErrorCode::InvalidArgument, "charge has " + std::to_string(m.nodes.size()) + " entries for " +
                                                std::to_string(q.size()) + " nodes");
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    const QuiverNode& node = q.node(i);
    if (node.is_gauge()) {
      require_chamber(node.group, m.nodes[i], conv);
      continue;
    }
    const auto& pinned = m.nodes[i];
    if (static_cast<int>(pinned.size()) != node.group.rank() ||
        std::any_of(pinned.begin(), pinned.end(), [](int x) { return x != 0; })) {
      throw Error(ErrorCode::ChamberViolation, "non-gauge node '" + node.id + "' must carry zero charge");
    }
  }
}

long ConformalDimension::t_exponent() const {
  if (!integral_grading()) {
    throw Error(ErrorCode::HalfOddGrading, "2*Delta = " + std::to_string(quarters_) + "/2 is not an integer");
  }
  return quarters_ / 2;
}

std::string ConformalDimension::str() const {
  const long g = std::gcd(std::abs(quarters_), 4L);
  const long num = quarters_ / (g == 0 ? 1 : g);
  const long den = 4 / (g == 0 ? 4 : g);
  if (quarters_ == 0) return "0";
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string fugacity_name(const std::string& node_id) { return "z_" + node_id; }

namespace detail {

long quarter_delta(const Quiver& q, const QuiverCharge& m, const LieConventions& conv) {
  long sum = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.node(i).is_gauge()) sum += vector_quarter_delta(q.node(i).group, m.nodes[i]);
  }
  for (const QuiverEdge& e : q.edges()) {
    const QuiverNode& a = q.node(e.a);
    const QuiverNode& b = q.node(e.b);
    if (a.is_gauge() && b.is_gauge()) {
      sum += edge_quarter_delta(a.group, m.nodes[e.a], b.group, m.nodes[e.b], 1, conv);
    } else if (a.is_gauge()) {
      sum += background_quarter_delta(a.group, m.nodes[e.a], b.group, 1, conv);
    } else if (b.is_gauge()) {
      sum += background_quarter_delta(b.group, m.nodes[e.b], a.group, 1, conv);
    }
  }
  return sum;
}

std::vector<BigInt> dressing_counts(const std::vector<int>& degrees, int max_exponent, int step) {
  if (max_exponent < 0) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(max_exponent) + 1);
  c[0] = 1;
  for (int d : degrees) {
    const int s = step * d;
    for (int k = s; k <= max_exponent; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - s)];
  }
  return c;
}

PreparedRequest prepare(const HSRequest& request) {
  if (request.order < 0) throw Error(ErrorCode::InvalidArgument, "truncation order must be non-negative");
  PreparedRequest out;
  out.quiver = request.ungauge ? ungauge(request.quiver, *request.ungauge) : request.quiver;
  if (detect_decoupled_u1(out.quiver)) {
    throw Error(ErrorCode::DecoupledU1Unresolved,
                "the diagonal U(1) of this flavorless unitary quiver acts trivially and the monopole sum "
                "diverges; ungauge one U(1) gauge node (HSRequest::ungauge, command line --ungauge ID)");
  }
  out.conv = request.conventions;
  out.policy = request.policy;
  out.order = request.order;
  out.threads = std::max(1u, request.threads);
  if (out.policy.empty_shells < 1 || out.policy.max_bound < 0 || out.policy.initial_bound < 0) {
    throw Error(ErrorCode::InvalidArgument, "charge bound policy needs empty_shells >= 1 and non-negative bounds");
  }

  for (std::size_t i = 0; i < out.quiver.size(); ++i) {
    if (!out.quiver.node(i).group.is_orthosymplectic()) continue;
    for (const Neighbor& nb : out.quiver.neighbors(i)) {
      if (nb.multiplicity > 1) {
        throw Error(ErrorCode::InvalidEdge, "orthosymplectic edge " + out.quiver.node(i).id + "-" +
                                                out.quiver.node(nb.node).id + " has multiplicity " +
                                                std::to_string(nb.multiplicity) + "; only single edges are supported");
      }
    }
  }

  out.fugacity_slot.assign(out.quiver.size(), -1);
  std::set<std::string> seen;
  for (const std::string& id : request.refined) {
    const auto index = out.quiver.find(id);
    if (!index) throw Error(ErrorCode::UnknownNode, "refined node '" + id + "' does not exist");
    const QuiverNode& node = out.quiver.node(*index);
    if (!node.is_gauge() || !node.group.is_unitary()) {
      throw Error(ErrorCode::InvalidArgument, "only unitary gauge nodes carry topological fugacities; '" + id +
                                                  "' is a " + to_string(node.kind) + " " + node.group.label() +
                                                  " node");
    }
    if (!seen.insert(id).second) throw Error(ErrorCode::InvalidArgument, "node '" + id + "' refined twice");
    out.fugacity_slot[*index] = static_cast<int>(out.fugacities.size());
    out.fugacities.push_back(fugacity_name(id));
  }
  return out;
}

bool gauge_graph_is_forest(const Quiver& q) {
  // Union-find over gauge nodes; a repeated pair is a parallel edge, not a cycle.
  std::vector<std::size_t> parent(q.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const QuiverEdge& e : q.edges()) {
    if (!q.node(e.a).is_gauge() || !q.node(e.b).is_gauge()) continue;
    if (!pairs.insert(std::minmax(e.a, e.b)).second) continue;
    const std::size_t ra = root(e.a);
    const std::size_t rb = root(e.b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

template <class C>
Series<C> lattice_hilbert_series(const PreparedRequest& request, EngineStats& stats) {
  const Quiver& q = request.quiver;
  const ChargeEnumeration found =
      enumerate_charges(q, ConformalDimension::from_quarters(2L * request.order), request.policy, request.conv);

  Series<C> out(request.order, request.fugacities);
  for (const QuiverCharge& m : found.charges) {
    const long qd = quarter_delta(q, m, request.conv);
    const long e = ConformalDimension::from_quarters(qd).t_exponent();
    if (e > request.order) continue;

    std::vector<int> degrees;
    LaurentMultinomial::Exponents z(request.fugacities.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (!q.node(i).is_gauge()) continue;
      for (int d : dressing_degrees(q.node(i).group, m.nodes[i], request.conv)) degrees.push_back(d);
      if (request.fugacity_slot[i] >= 0) {
        const auto& mi = m.nodes[i];
        z[static_cast<std::size_t>(request.fugacity_slot[i])] = std::accumulate(mi.begin(), mi.end(), 0);
      }
    }
    const C unit = unit_coefficient<C>(z);
    const std::vector<BigInt> counts = dressing_counts(degrees, request.order - static_cast<int>(e), 2);
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] != 0) out.add_to(static_cast<int>(e) + static_cast<int>(k), scaled(unit, counts[k]));
    }
  }
  stats.charges = found.charges.size();
  stats.bound_reached = found.bound_reached;
  return out;
}

template Series<BigInt> lattice_hilbert_series<BigInt>(const PreparedRequest&, EngineStats&);
template Series<LaurentMultinomial> lattice_hilbert_series<LaurentMultinomial>(const PreparedRequest&, EngineStats&);

}  // namespace detail

ConformalDimension delta(const Quiver& q, const QuiverCharge& m, const LieConventions& conv) {
  validate_charge(q, m, conv);
  return ConformalDimension::from_quarters(detail::quarter_delta(q, m, conv));
}

TruncatedSeries dressing_factor(const Quiver& q, const QuiverCharge& m, int order, const LieConventions& conv) {
  validate_charge(q, m, conv);
  std::vector<int> degrees;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q.node(i).is_gauge()) continue;
    for (int d : dressing_degrees(q.node(i).group, m.nodes[i], conv)) degrees.push_back(d);
  }
  TruncatedSeries out(order);
  const std::vector<BigInt> counts = detail::dressing_counts(degrees, order, 2);
  for (std::size_t k = 0; k < counts.size(); ++k) out.set(static_cast<int>(k), counts[k]);
  return out;
}

namespace {

bool touches_shell(const DominantCharge& m, int bound) {
  return std::any_of(m.begin(), m.end(), [bound](int x) { return std::abs(x) == bound; });
}

}  // namespace

ChargeEnumeration enumerate_charges(const Quiver& q, ConformalDimension delta_max, const ChargeBoundPolicy& policy,
                                    const LieConventions& conv) {
  if (delta_max.quarters() < 0) throw Error(ErrorCode::InvalidArgument, "delta_max must be non-negative");
  std::vector<std::size_t> gauge;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.node(i).is_gauge()) gauge.push_back(i);
  }

  ChargeEnumeration out;
  int empty_run = 0;
  for (int bound = 0;; ++bound) {
    if (bound > policy.max_bound) {
      throw Error(ErrorCode::ConvergenceNotReached,
                  "charge shells still contribute at bound " + std::to_string(policy.max_bound));
    }
    std::vector<std::vector<DominantCharge>> candidates;
    for (std::size_t i : gauge) candidates.push_back(dominant_charges(q.node(i).group, bound, conv));

    bool hit = false;
    QuiverCharge m = zero_charge(q);
    // Odometer over the per-node candidate lists; only charges on the shell are new.
    std::vector<std::size_t> pos(gauge.size(), 0);
    const bool any_empty = std::any_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.empty(); });
    while (!any_empty) {
      bool on_shell = bound == 0;
      for (std::size_t k = 0; k < gauge.size(); ++k) {
        m.nodes[gauge[k]] = candidates[k][pos[k]];
        on_shell = on_shell || touches_shell(m.nodes[gauge[k]], bound);
      }
      if (on_shell) {
        const long qd = detail::quarter_delta(q, m, conv);
        if (qd <= 0 && !m.is_zero()) {
          throw Error(ErrorCode::BadTheory, "a nonzero magnetic charge has Delta = " +
                                                ConformalDimension::from_quarters(qd).str() +
                                                " <= 0; the monopole sum does not converge");
        }
        if (qd <= delta_max.quarters()) {
          out.charges.push_back(m);
          hit = true;
        }
      }
      std::size_t k = 0;
      while (k < gauge.size() && ++pos[k] == candidates[k].size()) pos[k++] = 0;
      if (k == gauge.size()) break;
    }

    out.bound_reached = bound;
    empty_run = hit ? 0 : empty_run + 1;
    if (bound >= policy.initial_bound && empty_run >= policy.empty_shells) break;
  }
  return out;
}

namespace {

template <class C>
HSResult<C> run(const HSRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  const detail::PreparedRequest prepared = detail::prepare(request);

  EngineStrategy strategy = request.strategy;
  const bool forest = detail::gauge_graph_is_forest(prepared.quiver);
  if (strategy == EngineStrategy::Auto) strategy = forest ? EngineStrategy::TreeMessages : EngineStrategy::LatticeSum;
  if (strategy == EngineStrategy::TreeMessages && !forest) {
    throw Error(ErrorCode::InvalidArgument, "tree message passing needs a gauge graph without cycles");
  }

  HSResult<C> result{Series<C>(request.order, prepared.fugacities), {}};
  if (strategy == EngineStrategy::TreeMessages) {
    result.stats.strategy = "tree";
    result.series = detail::tree_hilbert_series<C>(prepared, result.stats);
  } else {
    result.stats.strategy = "lattice";
    result.series = detail::lattice_hilbert_series<C>(prepared, result.stats);
  }
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

HSResult<BigInt> coulomb_hilbert_series(const HSRequest& request) {
  if (!request.refined.empty()) {
    throw Error(ErrorCode::InvalidArgument, "refined nodes given; use refined_coulomb_hilbert_series");
  }
  return run<BigInt>(request);
}

HSResult<LaurentMultinomial> refined_coulomb_hilbert_series(const HSRequest& request) {
  return run<LaurentMultinomial>(request);
}

long symmetry_dimension(const TruncatedSeries& s) { return s.at(2).convert_to<long>(); }

}  // namespace coulomb
