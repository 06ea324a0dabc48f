#pragma once

#include <optional>
#include <set>
#include <vector>

#include "tropic/cone.hpp"

namespace tropic {

/// Directed hypergraph: hyperedges (tail set M, head set M').
/// Reachability uses AND semantics on tails: a hyperedge fires only once
/// every tail node has been reached.
struct Hyperedge {
  std::set<std::size_t> tail;
  std::set<std::size_t> head;
};

struct DirectedHypergraph {
  std::set<std::size_t> nodes;
  std::vector<Hyperedge> edges;
};

/// Tangent directed hypergraph of the solution set of a system at a point,
/// with the generating row recorded per hyperedge.
struct TangentHypergraph {
  DirectedHypergraph graph;
  std::vector<std::size_t> source_row;  // parallel to graph.edges
};

/// Least fixed point of: r reachable iff r = h, or some hyperedge (M, M')
/// has r in M' and all of M reachable.
std::set<std::size_t> reachable_set(const DirectedHypergraph& h, std::size_t from);

/// The strongly connected component reachable from every node, when it
/// exists (the smallest SCC in the order where C1 < C2 iff C1 has a node
/// reachable from a node of C2).
std::optional<std::set<std::size_t>> smallest_scc(const DirectedHypergraph& h);

/// Hyperedges (argmax(b^r y), argmax(a^r y)) over the tight rows
/// a^r y = b^r y != bottom; nodes are the finite coordinates of y.
TangentHypergraph tangent_hypergraph(const InequalitySystem& system, const Vector& y);

/// Extremality of y in the solution set of the system: the tangent
/// hypergraph admits a smallest SCC. Throws if y violates the system
/// (a violation is an error, never "not extreme").
bool is_extreme_general(const InequalitySystem& system, const Vector& y);

/// Star criterion for the i-th polar: b (with b_i finite) is extreme iff for
/// every h != i with b_h finite some row makes the inequality tight with the
/// right-hand argmax attained only at h. Throws when b is not in the i-th
/// polar or b_i is bottom.
bool star_test(const GeneratorCone& k, std::size_t i, const Vector& b);

}  // namespace tropic
