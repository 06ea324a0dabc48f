#include "tropic/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropic {
namespace {

std::set<std::size_t> argmax_set(const Vector& c, const Vector& y) {
  Scalar best = trop_dot(c, y);
  std::set<std::size_t> out;
  if (best.is_bottom()) return out;
  for (std::size_t j = 0; j < c.size(); ++j)
    if ((c[j] * y[j]) == best) out.insert(j);
  return out;
}

}  // namespace

std::set<std::size_t> reachable_set(const DirectedHypergraph& h, std::size_t from) {
  if (!h.nodes.count(from)) throw std::invalid_argument("reachable_set: unknown node");
  std::set<std::size_t> reach{from};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : h.edges) {
      if (!std::includes(reach.begin(), reach.end(), e.tail.begin(), e.tail.end())) continue;
      for (std::size_t v : e.head)
        if (h.nodes.count(v) && reach.insert(v).second) grew = true;
    }
  }
  return reach;
}

std::optional<std::set<std::size_t>> smallest_scc(const DirectedHypergraph& h) {
  if (h.nodes.empty()) return std::nullopt;
  std::vector<std::size_t> nodes(h.nodes.begin(), h.nodes.end());
  std::vector<std::set<std::size_t>> reach;
  reach.reserve(nodes.size());
  for (std::size_t v : nodes) reach.push_back(reachable_set(h, v));
  // a node reachable from every node, if any
  for (std::size_t t = 0; t < nodes.size(); ++t) {
    std::size_t v = nodes[t];
    bool from_all = true;
    for (std::size_t u = 0; u < nodes.size() && from_all; ++u)
      from_all = reach[u].count(v) != 0;
    if (!from_all) continue;
    std::set<std::size_t> scc;
    for (std::size_t u = 0; u < nodes.size(); ++u)
      if (reach[t].count(nodes[u]) && reach[u].count(v)) scc.insert(nodes[u]);
    return scc;
  }
  return std::nullopt;
}

TangentHypergraph tangent_hypergraph(const InequalitySystem& system, const Vector& y) {
  if (y.is_bottom()) throw std::invalid_argument("tangent_hypergraph: y is identically bottom");
  TangentHypergraph out;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (y[j].is_finite()) out.graph.nodes.insert(j);
  for (std::size_t r = 0; r < system.size(); ++r) {
    Scalar lhs = trop_dot(system[r].a, y);
    Scalar rhs = trop_dot(system[r].b, y);
    if (lhs.is_bottom() || lhs != rhs) continue;
    Hyperedge e;
    e.tail = argmax_set(system[r].b, y);
    e.head = argmax_set(system[r].a, y);
    out.graph.edges.push_back(std::move(e));
    out.source_row.push_back(r);
  }
  return out;
}

bool is_extreme_general(const InequalitySystem& system, const Vector& y) {
  for (const auto& q : system)
    if (!(trop_dot(q.a, y) <= trop_dot(q.b, y)))
      throw std::invalid_argument("is_extreme_general: y violates the system");
  return smallest_scc(tangent_hypergraph(system, y).graph).has_value();
}

bool star_test(const GeneratorCone& k, std::size_t i, const Vector& b) {
  if (b.size() != k.dim() || i >= k.dim())
    throw std::invalid_argument("star_test: bad arguments");
  if (b[i].is_bottom()) throw std::invalid_argument("star_test: b_i is bottom");
  if (!ith_polar_membership(k, i, b))
    throw std::invalid_argument("star_test: b is not in the i-th polar");
  const Matrix& g = k.generators();
  for (std::size_t h = 0; h < k.dim(); ++h) {
    if (h == i || b[h].is_bottom()) continue;
    bool witnessed = false;
    for (std::size_t r = 0; r < g.rows() && !witnessed; ++r) {
      Scalar lhs = b[i] * g(r, i);
      if (lhs.is_bottom()) continue;
      Scalar rhs = Scalar::bottom();
      for (std::size_t j = 0; j < k.dim(); ++j)
        if (j != i) rhs += b[j] * g(r, j);
      if (lhs != rhs) continue;
      bool only_h = true;
      for (std::size_t j = 0; j < k.dim() && only_h; ++j)
        if (j != i && j != h && (b[j] * g(r, j)) == rhs) only_h = false;
      witnessed = only_h && (b[h] * g(r, h)) == rhs;
    }
    if (!witnessed) return false;
  }
  return true;
}

}  // namespace tropic
