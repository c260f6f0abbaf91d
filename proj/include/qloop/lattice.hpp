#ifndef QLOOP_LATTICE_HPP
#define QLOOP_LATTICE_HPP

#include <string>
#include <vector>

namespace qloop {

enum class Side { Left, Right };
enum class BranchId { A, B };
enum class Coupling { None, G, H, Z };

// A node of the loop-graph family: either an outer-chain node x_{-k} / x_{k}
// (side Left/Right, 1 <= k <= K) or a loop-branch node (branch A or B,
// 1 <= j <= L). Branch A is the branch listed first in the canonical order.
struct NodeId {
  enum class Kind { Outer, Branch } kind;
  Side side = Side::Left;      // Outer only
  BranchId branch = BranchId::A;  // Branch only
  int pos = 0;                 // k for Outer, j for Branch

  static NodeId outer(Side s, int k) {
    return NodeId{Kind::Outer, s, BranchId::A, k};
  }
  static NodeId branch_node(BranchId b, int j) {
    return NodeId{Kind::Branch, Side::Left, b, j};
  }
  friend bool operator==(const NodeId&, const NodeId&) = default;
};

// Undirected edge with its coupling tag. The orientation (a, b) is the one
// the matrix entries are read off from: H[a][b] = -1 - sign*c and
// H[b][a] = -1 + sign*c, with c the coupling value (0 for None).
struct EdgeSpec {
  NodeId a, b;
  Coupling coupling = Coupling::None;
  int sign = +1;
};

// Loop-graph family member: two outer chains of K nodes joined through a
// 2L-node loop. Canonical node order is Outer(left,K)..Outer(left,1),
// Branch(A,1..L), Branch(B,1..L), Outer(right,1)..Outer(right,K).
struct GraphFamilySpec {
  int K = 0;
  int L = 0;
  int N = 0;  // 2K + 2L
  std::vector<NodeId> nodes;   // canonical order
  std::vector<EdgeSpec> edges;
  std::vector<int> weights;    // diagonal weight per canonical index

  // Canonical index of a node; throws std::domain_error for a node outside
  // this spec.
  int index_of(const NodeId& node) const;

  // The left-right reflection: Outer(left,k) <-> Outer(right,k),
  // Branch(A,j) <-> Branch(B, L+1-j).
  NodeId reflected(const NodeId& node) const;
  int reflected_index(int idx) const;

  std::string label(int idx) const;  // "x_-3", "a_1", "b_2", "x_3"
};

// Builds the (K, L) family member. K >= 1 and L >= 1 or std::domain_error.
GraphFamilySpec build_graph(int K, int L);

int canonical_index(const GraphFamilySpec& spec, const NodeId& node);

const char* coupling_name(Coupling c);  // "none", "g", "h", "z"

}  // namespace qloop

#endif
