#pragma once

#include <set>
#include <vector>

#include "tropic/cone.hpp"

namespace tropic {

/// Undirected hypergraph for transversal problems: hyperedges over nodes
/// 0..num_nodes-1.
struct UndirectedHypergraph {
  std::size_t num_nodes = 0;
  std::vector<std::set<std::size_t>> edges;
};

/// Tropical cyclic polyhedral cone: G_ij = t_i * (j-1) with t strictly
/// increasing (tropical moment curve).
GeneratorCone cyclic_cone(const std::vector<Rat>& t, std::size_t n);

/// Closed-form count of extreme rays of the polar of the cyclic cone:
/// 2n + sum_i ((p-1)(i-1)(n-i) + n-1).
Int cyclic_polar_count(std::size_t p, std::size_t n);

/// The extreme inequalities of the cyclic cone from their closed-form
/// families: per i the n-1 single-term inequalities (t_p for j < i, t_1 for
/// j > i) and the two-segment family over m in [p-1], j < i < k; plus the
/// trivial inequalities, deduplicated. Same normalization and order as
/// enumerate_polar_extreme.
InequalitySystem cyclic_polar_inequalities(const std::vector<Rat>& t, std::size_t n);

/// The block construction with p blocks of width q (n = pq + 1): inside
/// block k row k carries q+3, q+2, ..., 4, every other entry is 1, and the
/// last column is 0, so each column's maximum is attained on one row only.
GeneratorCone block_example(std::size_t p, std::size_t q);

/// Incidence cone of a hypergraph: G = [F, e] with F_ij = one() iff node j
/// lies on hyperedge i. Throws on an empty hyperedge.
GeneratorCone transversal_matrix(const UndirectedHypergraph& h);

/// All minimal transversals (hitting sets), via the minimal elements of Z_n
/// of the incidence cone; verifies on the way that those elements only take
/// the values one() and bottom.
std::vector<std::set<std::size_t>> minimal_transversals(const UndirectedHypergraph& h);

}  // namespace tropic
