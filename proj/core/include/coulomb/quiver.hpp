#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coulomb/error.hpp"
#include "coulomb/group.hpp"

namespace coulomb {

/// Gauge nodes are dynamical; flavor nodes are frozen background groups;
/// fixed nodes are ungauged U(1)s whose magnetic charge is pinned to zero.
enum class NodeKind { Gauge, Flavor, Fixed };

const char* to_string(NodeKind kind) noexcept;

struct QuiverNode {
  std::string id;
  NodeKind kind;
  GaugeGroup group;

  bool is_gauge() const noexcept { return kind == NodeKind::Gauge; }
};

/// Unordered pair of node indices. Parallel edges are kept as separate entries.
struct QuiverEdge {
  std::size_t a;
  std::size_t b;
};

struct Neighbor {
  std::size_t node;
  int multiplicity;
};

/// Quiver value type. All mutation happens through add_node/add_edge, which
/// enforce the structural invariants, so a constructed Quiver is always valid.
class Quiver {
 public:
  std::size_t add_node(std::string id, NodeKind kind, GaugeGroup group);
  void add_edge(std::string_view a, std::string_view b);
  void add_edge(std::size_t a, std::size_t b);

  std::span<const QuiverNode> nodes() const noexcept { return nodes_; }
  std::span<const QuiverEdge> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  const QuiverNode& node(std::size_t index) const { return nodes_.at(index); }
  const QuiverNode& node(std::string_view id) const { return nodes_[index_of(id)]; }
  std::size_t index_of(std::string_view id) const;
  std::optional<std::size_t> find(std::string_view id) const;

  /// Neighbors with edge multiplicities, ordered by node index.
  std::vector<Neighbor> neighbors(std::size_t index) const;

  /// Copy with one node's kind replaced (structure otherwise unchanged).
  Quiver with_kind(std::string_view id, NodeKind kind) const;

  bool has_gauge_nodes() const noexcept;

 private:
  std::vector<QuiverNode> nodes_;
  std::vector<QuiverEdge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Balance and symmetry analysis
// ---------------------------------------------------------------------------

/// Balance of a gauge node. Unitary: -2N + sum of adjacent dimensions.
/// Orthosymplectic: signed deviation from the balancing condition, so that
/// 0 means balanced in every family.
int node_balance(const Quiver& q, std::string_view id);

struct NodeBalance {
  std::string id;
  int balance;
};

struct BalanceReport {
  std::vector<NodeBalance> balances;
  std::vector<std::string> balanced;
  bool has_negative_below_minus_one = false;
  bool minimally_unbalanced = false;
  bool positively_balanced = false;
  bool all_balanced = false;
};

BalanceReport balance_report(const Quiver& q);

enum class DynkinType { A, D, E, Unrecognized };

struct BalancedComponent {
  std::vector<std::string> nodes;
  DynkinType type = DynkinType::Unrecognized;
  int rank = 0;
  /// "A_5", "D_4", "E_6", or a shape description for unrecognized graphs.
  std::string label;
};

std::vector<BalancedComponent> balanced_subquiver_classification(const Quiver& q);

struct SymmetryFactor {
  DynkinType type;
  int rank;
  int dimension;
  std::string label;
};

struct SymmetryPrediction {
  std::vector<SymmetryFactor> factors;
  int abelian_rank = 0;
  std::vector<BalancedComponent> unrecognized;
  int total_dimension = 0;
};

/// Lie algebra dimension of a simply-laced simple factor.
int dynkin_dimension(DynkinType type, int rank);

SymmetryPrediction predict_global_symmetry(const Quiver& q);

/// True iff every gauge node is unitary and nothing (flavor or fixed node)
/// breaks the diagonal U(1) shift of all magnetic charges.
bool detect_decoupled_u1(const Quiver& q);

/// Pins the magnetic charge of a U(1) gauge node to zero.
Quiver ungauge(const Quiver& q, std::string_view id);

int gauge_group_rank(const Quiver& q);
int expected_coulomb_dimension_real(const Quiver& q);

/// Hypermultiplet count minus gauge group dimension. With su_convention the
/// decoupled diagonal U(1) is removed from the gauge group.
int higgs_quaternionic_dimension(const Quiver& q, bool su_convention = false);

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// U(1)-U(2)-...-U(n-1)-[U(n)] with gauge ids g1..g{n-1} and flavor id "f".
Quiver build_linear_nilpotent_quiver(int n);

/// Replaces a flavor node by k rank-one gauge nodes b1..bk hanging off its
/// unique neighbor: U(k) flavors become U(1) leaves, SO(2k) flavors become
/// SO(2) leaves.
Quiver bouquet_replace(const Quiver& q, std::string_view flavor_id, int k);

/// build_linear_nilpotent_quiver(n) with its flavor replaced by n U(1) leaves.
Quiver build_bouquet_quiver(int n);

/// Nilpotent chain with the flavor node replaced by one A_{n_i} leg per part,
/// attached to U(n-1) through its U(n_i) end. Leg nodes are l{i}_{k}.
Quiver build_partial_implosion_quiver(int n, std::span<const int> partition);

enum class DnVariant { Bouquet, Flavor };

/// SO(2)-USp(2)-SO(4)-...-USp(2n-2) terminated either by an SO(2n) flavor or
/// by a bouquet of n SO(2) gauge nodes. Chain ids are c1..c{2n-2}.
Quiver build_dn_implosion_quiver(int n, DnVariant variant = DnVariant::Bouquet);

}  // namespace coulomb
