#include "qloop/lattice.hpp"

#include <stdexcept>

namespace qloop {

int GraphFamilySpec::index_of(const NodeId& node) const {
  if (node.kind == NodeId::Kind::Outer) {
    if (node.pos < 1 || node.pos > K)
      throw std::domain_error("outer node index out of range");
    // Left chain runs outermost-in: x_{-K} first. Right chain runs in-out.
    return node.side == Side::Left ? K - node.pos : K + 2 * L + node.pos - 1;
  }
  if (node.pos < 1 || node.pos > L)
    throw std::domain_error("branch node index out of range");
  return K + (node.branch == BranchId::B ? L : 0) + node.pos - 1;
}

NodeId GraphFamilySpec::reflected(const NodeId& node) const {
  if (node.kind == NodeId::Kind::Outer)
    return NodeId::outer(
        node.side == Side::Left ? Side::Right : Side::Left, node.pos);
  return NodeId::branch_node(
      node.branch == BranchId::A ? BranchId::B : BranchId::A,
      L + 1 - node.pos);
}

int GraphFamilySpec::reflected_index(int idx) const {
  return index_of(reflected(nodes.at(std::size_t(idx))));
}

std::string GraphFamilySpec::label(int idx) const {
  const NodeId& n = nodes.at(std::size_t(idx));
  if (n.kind == NodeId::Kind::Outer)
    return (n.side == Side::Left ? "x_-" : "x_") + std::to_string(n.pos);
  return (n.branch == BranchId::A ? "a_" : "b_") + std::to_string(n.pos);
}

GraphFamilySpec build_graph(int K, int L) {
  if (K < 1) throw std::domain_error("K must be >= 1");
  if (L < 1) throw std::domain_error("L must be >= 1");

  GraphFamilySpec spec;
  spec.K = K;
  spec.L = L;
  spec.N = 2 * K + 2 * L;

  for (int k = K; k >= 1; --k) spec.nodes.push_back(NodeId::outer(Side::Left, k));
  for (int j = 1; j <= L; ++j)
    spec.nodes.push_back(NodeId::branch_node(BranchId::A, j));
  for (int j = 1; j <= L; ++j)
    spec.nodes.push_back(NodeId::branch_node(BranchId::B, j));
  for (int k = 1; k <= K; ++k)
    spec.nodes.push_back(NodeId::outer(Side::Right, k));

  // Left chain, outermost edge carries z (K >= 2 only).
  for (int k = K; k >= 2; --k)
    spec.edges.push_back({NodeId::outer(Side::Left, k),
                          NodeId::outer(Side::Left, k - 1),
                          k == K ? Coupling::Z : Coupling::None, +1});
  // Branch interiors.
  for (int j = 1; j < L; ++j)
    spec.edges.push_back({NodeId::branch_node(BranchId::A, j),
                          NodeId::branch_node(BranchId::A, j + 1),
                          Coupling::None, +1});
  for (int j = 1; j < L; ++j)
    spec.edges.push_back({NodeId::branch_node(BranchId::B, j),
                          NodeId::branch_node(BranchId::B, j + 1),
                          Coupling::None, +1});
  // Loop attachments at the central vertices x_{-1} and x_{1}.
  spec.edges.push_back({NodeId::outer(Side::Left, 1),
                        NodeId::branch_node(BranchId::A, 1), Coupling::G, +1});
  spec.edges.push_back({NodeId::outer(Side::Left, 1),
                        NodeId::branch_node(BranchId::B, 1), Coupling::H, +1});
  spec.edges.push_back({NodeId::branch_node(BranchId::A, L),
                        NodeId::outer(Side::Right, 1), Coupling::H, -1});
  spec.edges.push_back({NodeId::branch_node(BranchId::B, L),
                        NodeId::outer(Side::Right, 1), Coupling::G, -1});
  // Right chain, outermost edge carries z.
  for (int k = 1; k < K; ++k)
    spec.edges.push_back({NodeId::outer(Side::Right, k),
                          NodeId::outer(Side::Right, k + 1),
                          k == K - 1 ? Coupling::Z : Coupling::None, -1});

  spec.weights.assign(std::size_t(spec.N), 2);
  spec.weights[std::size_t(spec.index_of(NodeId::outer(Side::Left, 1)))] = 3;
  spec.weights[std::size_t(spec.index_of(NodeId::outer(Side::Right, 1)))] = 3;
  return spec;
}

int canonical_index(const GraphFamilySpec& spec, const NodeId& node) {
  return spec.index_of(node);
}

const char* coupling_name(Coupling c) {
  switch (c) {
    case Coupling::None: return "none";
    case Coupling::G: return "g";
    case Coupling::H: return "h";
    case Coupling::Z: return "z";
  }
  return "none";
}

}  // namespace qloop
