#include "coulomb/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "coulomb/error.hpp"

namespace coulomb {

const char* to_string(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::Gauge: return "gauge";
    case NodeKind::Flavor: return "flavor";
    case NodeKind::Fixed: return "fixed";
  }
  return "?";
}

std::size_t Quiver::add_node(std::string id, NodeKind kind, GaugeGroup group) {
  if (id.empty()) throw Error(ErrorCode::InvalidArgument, "node id must not be empty");
  if (index_.contains(id)) throw Error(ErrorCode::DuplicateNode, "node '" + id + "' already exists");
  if (kind == NodeKind::Fixed && !(group.is_unitary() && group.n() == 1)) {
    throw Error(ErrorCode::NotAbelianGaugeNode, "fixed node '" + id + "' must be U(1)");
  }
  const std::size_t index = nodes_.size();
  index_.emplace(id, index);
  nodes_.push_back(QuiverNode{std::move(id), kind, group});
  return index;
}

void Quiver::add_edge(std::string_view a, std::string_view b) {
  const auto ia = find(a);
  if (!ia) throw Error(ErrorCode::UnknownNode, "edge endpoint '" + std::string(a) + "' is not a node");
  const auto ib = find(b);
  if (!ib) throw Error(ErrorCode::UnknownNode, "edge endpoint '" + std::string(b) + "' is not a node");
  add_edge(*ia, *ib);
}

void Quiver::add_edge(std::size_t a, std::size_t b) {
  if (a >= nodes_.size() || b >= nodes_.size()) {
    throw Error(ErrorCode::UnknownNode, "edge endpoint index out of range");
  }
  const QuiverNode& na = nodes_[a];
  const QuiverNode& nb = nodes_[b];
  const std::string where = "edge (" + na.id + ", " + nb.id + ")";
  if (a == b) throw Error(ErrorCode::InvalidEdge, where + " is a self-loop");
  if (na.kind == NodeKind::Flavor && nb.kind == NodeKind::Flavor) {
    throw Error(ErrorCode::InvalidEdge, where + " joins two flavor nodes");
  }
  const Family fa = na.group.family();
  const Family fb = nb.group.family();
  const bool unitary = fa == Family::Unitary && fb == Family::Unitary;
  const bool orthosymplectic = (fa == Family::Orthogonal && fb == Family::Symplectic) ||
                               (fa == Family::Symplectic && fb == Family::Orthogonal);
  if (!unitary && !orthosymplectic) {
    throw Error(ErrorCode::MixedFamilyEdge,
                where + " joins " + na.group.label() + " to " + nb.group.label());
  }
  edges_.push_back(QuiverEdge{a, b});
}

std::size_t Quiver::index_of(std::string_view id) const {
  const auto found = find(id);
  if (!found) throw Error(ErrorCode::UnknownNode, "no node named '" + std::string(id) + "'");
  return *found;
}

std::optional<std::size_t> Quiver::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Neighbor> Quiver::neighbors(std::size_t index) const {
  std::map<std::size_t, int> counts;
  for (const QuiverEdge& e : edges_) {
    if (e.a == index) ++counts[e.b];
    if (e.b == index) ++counts[e.a];
  }
  std::vector<Neighbor> out;
  out.reserve(counts.size());
  for (const auto& [node, mult] : counts) out.push_back({node, mult});
  return out;
}

Quiver Quiver::with_kind(std::string_view id, NodeKind kind) const {
  const std::size_t target = index_of(id);
  Quiver out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    out.add_node(nodes_[i].id, i == target ? kind : nodes_[i].kind, nodes_[i].group);
  }
  for (const QuiverEdge& e : edges_) out.add_edge(e.a, e.b);
  return out;
}

bool Quiver::has_gauge_nodes() const noexcept {
  return std::any_of(nodes_.begin(), nodes_.end(), [](const QuiverNode& n) { return n.is_gauge(); });
}

// ---------------------------------------------------------------------------

int node_balance(const Quiver& q, std::string_view id) {
  const std::size_t index = q.index_of(id);
  const QuiverNode& node = q.node(index);
  if (!node.is_gauge()) {
    throw Error(ErrorCode::FlavorNodeHasNoBalance,
                "node '" + node.id + "' is a " + to_string(node.kind) + " node");
  }
  int adjacent = 0;
  for (const Neighbor& nb : q.neighbors(index)) adjacent += nb.multiplicity * q.node(nb.node).group.n();

  const int n = node.group.n();
  switch (node.group.family()) {
    case Family::Unitary:
      return adjacent - 2 * n;
    case Family::Orthogonal:
    case Family::Symplectic: {
      // SO(N) balanced iff 2N = sum + 2; USp(N) balanced iff 2N = sum - 2.
      const int shifted = node.group.family() == Family::Orthogonal ? adjacent + 2 : adjacent - 2;
      if (shifted % 2 != 0) {
        throw Error(ErrorCode::NonIntegralBalance,
                    "node '" + node.id + "' has odd adjacent dimension sum " + std::to_string(adjacent));
      }
      return shifted / 2 - n;
    }
  }
  return 0;
}

BalanceReport balance_report(const Quiver& q) {
  BalanceReport report;
  for (const QuiverNode& node : q.nodes()) {
    if (!node.is_gauge()) continue;
    const int b = node_balance(q, node.id);
    report.balances.push_back({node.id, b});
    if (b == 0) report.balanced.push_back(node.id);
  }
  if (report.balances.empty()) return report;

  const auto [lo, hi] = std::minmax_element(
      report.balances.begin(), report.balances.end(),
      [](const NodeBalance& x, const NodeBalance& y) { return x.balance < y.balance; });
  report.has_negative_below_minus_one = lo->balance < -1;
  report.minimally_unbalanced = lo->balance == -1;
  report.positively_balanced = lo->balance >= 0 && hi->balance > 0;
  report.all_balanced = lo->balance == 0 && hi->balance == 0;
  return report;
}

namespace {

struct ComponentShape {
  DynkinType type = DynkinType::Unrecognized;
  int rank = 0;
  std::string label;
};

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

// Identifies simply-laced Dynkin diagrams among connected graphs on `members`.
ComponentShape classify_component(const Quiver& q, const std::vector<std::size_t>& members) {
  const std::set<std::size_t> inside(members.begin(), members.end());
  const int v = static_cast<int>(members.size());

  std::map<std::size_t, std::vector<std::size_t>> adj;
  int edges = 0;
  bool multi = false;
  bool orthosymplectic = false;
  for (std::size_t m : members) {
    if (q.node(m).group.is_orthosymplectic()) orthosymplectic = true;
    adj[m];
    for (const Neighbor& nb : q.neighbors(m)) {
      if (!inside.contains(nb.node)) continue;
      adj[m].push_back(nb.node);
      if (nb.multiplicity > 1) multi = true;
      if (m < nb.node) ++edges;
    }
  }

  if (orthosymplectic) return {DynkinType::Unrecognized, v, "orthosymplectic component (" + std::to_string(v) + " nodes)"};
  if (multi) return {DynkinType::Unrecognized, v, "graph with multiple edges"};
  if (edges != v - 1) {
    const bool cycle = std::all_of(adj.begin(), adj.end(), [](const auto& kv) { return kv.second.size() == 2; });
    if (cycle) return {DynkinType::Unrecognized, v, "cycle of " + std::to_string(v) + " nodes (affine A_" + std::to_string(v - 1) + ")"};
    return {DynkinType::Unrecognized, v, "graph with cycles"};
  }

  std::vector<std::size_t> branch;
  for (const auto& [node, ns] : adj) {
    if (ns.size() >= 3) branch.push_back(node);
  }
  if (branch.empty()) return {DynkinType::A, v, "A_" + std::to_string(v)};
  if (branch.size() > 1) return {DynkinType::Unrecognized, v, "tree with " + std::to_string(branch.size()) + " branch points"};

  const std::size_t center = branch.front();
  std::vector<int> legs;
  for (std::size_t start : adj[center]) {
    int length = 1;
    std::size_t prev = center;
    std::size_t cur = start;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++length;
    }
    legs.push_back(length);
  }
  std::sort(legs.begin(), legs.end());
  const std::string star = "star with " + std::to_string(legs.size()) + " legs (" + join_ints(legs) + ")";

  if (legs.size() == 3) {
    if (legs[0] == 1 && legs[1] == 1) return {DynkinType::D, v, "D_" + std::to_string(v)};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) return {DynkinType::E, v, "E_" + std::to_string(v)};
  }
  if (legs == std::vector<int>{1, 1, 1, 1}) return {DynkinType::Unrecognized, v, "affine D_4 (" + star + ")"};
  return {DynkinType::Unrecognized, v, star};
}

}  // namespace

std::vector<BalancedComponent> balanced_subquiver_classification(const Quiver& q) {
  std::vector<bool> balanced(q.size(), false);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.node(i).is_gauge()) balanced[i] = node_balance(q, q.node(i).id) == 0;
  }

  std::vector<BalancedComponent> out;
  std::vector<bool> seen(q.size(), false);
  for (std::size_t root = 0; root < q.size(); ++root) {
    if (!balanced[root] || seen[root]) continue;
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      members.push_back(cur);
      for (const Neighbor& nb : q.neighbors(cur)) {
        if (balanced[nb.node] && !seen[nb.node]) {
          seen[nb.node] = true;
          stack.push_back(nb.node);
        }
      }
    }
    std::sort(members.begin(), members.end());
    const ComponentShape shape = classify_component(q, members);
    BalancedComponent comp;
    for (std::size_t m : members) comp.nodes.push_back(q.node(m).id);
    comp.type = shape.type;
    comp.rank = shape.rank;
    comp.label = shape.label;
    out.push_back(std::move(comp));
  }
  return out;
}

int dynkin_dimension(DynkinType type, int rank) {
  switch (type) {
    case DynkinType::A: return rank * rank + 2 * rank;
    case DynkinType::D: return 2 * rank * rank - rank;
    case DynkinType::E:
      if (rank == 6) return 78;
      if (rank == 7) return 133;
      if (rank == 8) return 248;
      break;
    case DynkinType::Unrecognized: break;
  }
  throw Error(ErrorCode::InvalidArgument, "no simple Lie algebra for this Dynkin label");
}

SymmetryPrediction predict_global_symmetry(const Quiver& q) {
  SymmetryPrediction out;
  for (BalancedComponent& comp : balanced_subquiver_classification(q)) {
    if (comp.type == DynkinType::Unrecognized) {
      out.unrecognized.push_back(std::move(comp));
      continue;
    }
    const int dim = dynkin_dimension(comp.type, comp.rank);
    out.factors.push_back({comp.type, comp.rank, dim, comp.label});
    out.total_dimension += dim;
  }

  int unbalanced_unitary = 0;
  for (const QuiverNode& node : q.nodes()) {
    if (node.is_gauge() && node.group.is_unitary() && node_balance(q, node.id) != 0) ++unbalanced_unitary;
  }
  out.abelian_rank = std::max(0, unbalanced_unitary - (detect_decoupled_u1(q) ? 1 : 0));
  out.total_dimension += out.abelian_rank;
  return out;
}

bool detect_decoupled_u1(const Quiver& q) {
  bool any_gauge = false;
  for (const QuiverNode& node : q.nodes()) {
    if (node.kind != NodeKind::Gauge) return false;
    if (!node.group.is_unitary()) return false;
    any_gauge = true;
  }
  return any_gauge;
}

Quiver ungauge(const Quiver& q, std::string_view id) {
  const QuiverNode& node = q.node(id);
  if (!node.is_gauge() || !node.group.is_unitary() || node.group.n() != 1) {
    throw Error(ErrorCode::NotAbelianGaugeNode,
                "only U(1) gauge nodes can be ungauged; '" + node.id + "' is a " + to_string(node.kind) +
                    " " + node.group.label() + " node");
  }
  return q.with_kind(id, NodeKind::Fixed);
}

int gauge_group_rank(const Quiver& q) {
  int rank = 0;
  for (const QuiverNode& node : q.nodes()) {
    if (node.is_gauge()) rank += node.group.rank();
  }
  return rank;
}

int expected_coulomb_dimension_real(const Quiver& q) {
  if (detect_decoupled_u1(q)) {
    throw Error(ErrorCode::DecoupledU1Unresolved,
                "a diagonal U(1) acts trivially; ungauge one U(1) node first");
  }
  return 4 * gauge_group_rank(q);
}

int higgs_quaternionic_dimension(const Quiver& q, bool su_convention) {
  for (const QuiverNode& node : q.nodes()) {
    if (!node.group.is_unitary()) {
      throw Error(ErrorCode::UnsupportedFamily, "Higgs dimension is only implemented for unitary quivers");
    }
  }
  int hypers = 0;
  for (const QuiverEdge& e : q.edges()) hypers += q.node(e.a).group.n() * q.node(e.b).group.n();

  int gauge_dim = 0;
  int gauge_nodes = 0;
  for (const QuiverNode& node : q.nodes()) {
    if (!node.is_gauge()) continue;
    ++gauge_nodes;
    gauge_dim += node.group.n() * node.group.n();
  }
  if (su_convention) {
    // sum (N_j^2 - 1) for the SU parts plus one torus factor per node, less the diagonal U(1).
    gauge_dim = (gauge_dim - gauge_nodes) + gauge_nodes - (detect_decoupled_u1(q) ? 1 : 0);
  }
  return hypers - gauge_dim;
}

// ---------------------------------------------------------------------------

namespace {

std::string gauge_id(int i) { return "g" + std::to_string(i); }

void add_chain(Quiver& q, int top) {
  for (int i = 1; i <= top; ++i) {
    q.add_node(gauge_id(i), NodeKind::Gauge, GaugeGroup::U(i));
    if (i > 1) q.add_edge(gauge_id(i - 1), gauge_id(i));
  }
}

}  // namespace

Quiver build_linear_nilpotent_quiver(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "nilpotent quiver needs n >= 2");
  Quiver q;
  add_chain(q, n - 1);
  q.add_node("f", NodeKind::Flavor, GaugeGroup::U(n));
  q.add_edge(gauge_id(n - 1), "f");
  return q;
}

Quiver bouquet_replace(const Quiver& q, std::string_view flavor_id, int k) {
  const std::size_t target = q.index_of(flavor_id);
  const QuiverNode& flavor = q.node(target);
  if (flavor.kind != NodeKind::Flavor) {
    throw Error(ErrorCode::NotAFlavorNode, "'" + flavor.id + "' is not a flavor node");
  }
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "bouquet size must be positive");

  GaugeGroup leaf = GaugeGroup::U(1);
  int expected = flavor.group.n();
  switch (flavor.group.family()) {
    case Family::Unitary: break;
    case Family::Orthogonal:
      if (flavor.group.n() % 2 != 0) {
        throw Error(ErrorCode::UnsupportedFamily, "bouquet of an odd orthogonal flavor is undefined");
      }
      leaf = GaugeGroup::SO(2);
      expected = flavor.group.n() / 2;
      break;
    case Family::Symplectic:
      throw Error(ErrorCode::UnsupportedFamily, "bouquet of a symplectic flavor is undefined");
  }
  if (k != expected) {
    throw Error(ErrorCode::DimensionMismatch, "flavor " + flavor.group.label() + " needs a bouquet of " +
                                                  std::to_string(expected) + " nodes, got " + std::to_string(k));
  }
  const std::vector<Neighbor> attached = q.neighbors(target);
  if (attached.size() != 1 || attached.front().multiplicity != 1) {
    throw Error(ErrorCode::MultiplyAttachedFlavor, "flavor '" + flavor.id + "' must have exactly one neighbor");
  }
  const std::string hub = q.node(attached.front().node).id;

  Quiver out;
  for (const QuiverNode& node : q.nodes()) {
    if (node.id != flavor.id) out.add_node(node.id, node.kind, node.group);
  }
  for (const QuiverEdge& e : q.edges()) {
    if (e.a == target || e.b == target) continue;
    out.add_edge(q.node(e.a).id, q.node(e.b).id);
  }
  for (int i = 1; i <= k; ++i) {
    const std::string id = "b" + std::to_string(i);
    out.add_node(id, NodeKind::Gauge, leaf);
    out.add_edge(hub, id);
  }
  return out;
}

Quiver build_bouquet_quiver(int n) {
  return bouquet_replace(build_linear_nilpotent_quiver(n), "f", n);
}

Quiver build_partial_implosion_quiver(int n, std::span<const int> partition) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "partial implosion quiver needs n >= 2");
  if (partition.empty() || std::any_of(partition.begin(), partition.end(), [](int p) { return p < 1; })) {
    throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
  }
  const int total = std::accumulate(partition.begin(), partition.end(), 0);
  if (total != n) {
    throw Error(ErrorCode::PartitionSumMismatch,
                "partition sums to " + std::to_string(total) + ", expected " + std::to_string(n));
  }
  Quiver q;
  add_chain(q, n - 1);
  for (std::size_t leg = 0; leg < partition.size(); ++leg) {
    const int top = partition[leg];
    const std::string prefix = "l" + std::to_string(leg + 1) + "_";
    for (int k = top; k >= 1; --k) {
      const std::string id = prefix + std::to_string(k);
      q.add_node(id, NodeKind::Gauge, GaugeGroup::U(k));
      q.add_edge(id, k == top ? gauge_id(n - 1) : prefix + std::to_string(k + 1));
    }
  }
  return q;
}

Quiver build_dn_implosion_quiver(int n, DnVariant variant) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "D_n quiver needs n >= 2");
  Quiver q;
  const int length = 2 * n - 2;
  for (int i = 1; i <= length; ++i) {
    // Odd positions SO(i+1), even positions USp(i).
    const GaugeGroup g = (i % 2 == 1) ? GaugeGroup::SO(i + 1) : GaugeGroup::USp(i);
    const std::string id = "c" + std::to_string(i);
    q.add_node(id, NodeKind::Gauge, g);
    if (i > 1) q.add_edge("c" + std::to_string(i - 1), id);
  }
  q.add_node("f", NodeKind::Flavor, GaugeGroup::SO(2 * n));
  q.add_edge("c" + std::to_string(length), "f");
  if (variant == DnVariant::Flavor) return q;
  return bouquet_replace(q, "f", n);
}

}  // namespace coulomb
