#include "tropic/game.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tropic {
namespace {

// ---------------------------------------------------------------------------
// Generic weighted digraph with Tarjan SCCs and Karp's max-mean-per-arc.
// ---------------------------------------------------------------------------

struct Digraph {
  std::size_t num_nodes = 0;
  std::vector<std::vector<std::pair<std::size_t, LexWeight>>> out;

  explicit Digraph(std::size_t n) : num_nodes(n), out(n) {}
  void add_arc(std::size_t u, std::size_t v, LexWeight w) { out[u].push_back({v, std::move(w)}); }
};

std::vector<std::vector<std::size_t>> tarjan_sccs(const Digraph& g) {
  std::vector<int> index(g.num_nodes, -1), low(g.num_nodes, 0);
  std::vector<bool> on_stack(g.num_nodes, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> sccs;
  int counter = 0;

  // iterative DFS to avoid depth limits
  struct Frame {
    std::size_t v;
    std::size_t next_arc;
  };
  for (std::size_t root = 0; root < g.num_nodes; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_arc < g.out[f.v].size()) {
        std::size_t w = g.out[f.v][f.next_arc++].first;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<std::size_t> scc;
          while (true) {
            std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            scc.push_back(w);
            if (w == f.v) break;
          }
          sccs.push_back(std::move(scc));
        }
        std::size_t v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return sccs;
}

// Max mean weight per arc over the circuits inside one SCC (Karp); nullopt
// when the SCC carries no circuit.
std::optional<LexWeight> karp_max_mean(const Digraph& g, const std::vector<std::size_t>& scc) {
  const std::size_t m = scc.size();
  std::vector<std::size_t> id(g.num_nodes, std::size_t(-1));
  for (std::size_t t = 0; t < m; ++t) id[scc[t]] = t;
  // arcs within the SCC
  std::vector<std::vector<std::pair<std::size_t, LexWeight>>> arcs(m);
  bool any_arc = false;
  for (std::size_t t = 0; t < m; ++t)
    for (const auto& [v, w] : g.out[scc[t]])
      if (id[v] != std::size_t(-1)) {
        arcs[t].push_back({id[v], w});
        any_arc = true;
      }
  if (!any_arc) return std::nullopt;

  std::vector<std::vector<std::optional<LexWeight>>> d(
      m + 1, std::vector<std::optional<LexWeight>>(m));
  d[0][0] = LexWeight{Rat(0), Rat(0)};  // source = scc[0]
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t u = 0; u < m; ++u) {
      if (!d[k - 1][u]) continue;
      for (const auto& [v, w] : arcs[u]) {
        LexWeight cand = *d[k - 1][u] + w;
        if (!d[k][v] || *d[k][v] < cand) d[k][v] = cand;
      }
    }
  std::optional<LexWeight> best;
  for (std::size_t v = 0; v < m; ++v) {
    if (!d[m][v]) continue;
    std::optional<LexWeight> worst;
    for (std::size_t k = 0; k < m; ++k) {
      if (!d[k][v]) continue;
      LexWeight mean = (*d[m][v] - *d[k][v]).div(static_cast<long>(m - k));
      if (!worst || mean < *worst) worst = mean;
    }
    if (worst && (!best || *best < *worst)) best = worst;
  }
  return best;
}

std::optional<LexWeight> max_mean_per_arc(const Digraph& g) {
  std::optional<LexWeight> best;
  for (const auto& scc : tarjan_sccs(g)) {
    auto m = karp_max_mean(g, scc);
    if (m && (!best || *best < *m)) best = *m;
  }
  return best;
}

// Bipartite digraph as a generic digraph: rows are nodes 0..rows-1, column
// j is node rows + j.
Digraph bipartite_to_digraph(const BipartiteDigraph& g, bool negate) {
  Digraph d(g.rows + g.cols);
  for (std::size_t i = 0; i < g.rows; ++i)
    for (const auto& [j, w] : g.row_arcs[i]) {
      LexWeight lw{w.base, Rat(w.lam)};
      d.add_arc(i, g.rows + j, negate ? -lw : lw);
    }
  for (std::size_t j = 0; j < g.cols; ++j)
    for (const auto& [i, w] : g.col_arcs[j]) {
      LexWeight lw{w.base, Rat(w.lam)};
      d.add_arc(g.rows + j, i, negate ? -lw : lw);
    }
  return d;
}

std::optional<LexWeight> lex_ratio(const BipartiteDigraph& g, bool minimize) {
  auto mean = max_mean_per_arc(bipartite_to_digraph(g, minimize));
  if (!mean) return std::nullopt;
  LexWeight per_col = mean->times(2);  // circuits alternate: arcs = 2 * columns
  return minimize ? -per_col : per_col;
}

void check_strategy(const GameGraph& game, const MinStrategy& s) {
  if (s.sigma.size() != game.n) throw std::invalid_argument("Min strategy: wrong size");
  for (std::size_t j = 0; j < game.n; ++j) {
    bool ok = false;
    for (const auto& [i, w] : game.min_arcs[j]) ok = ok || i == s.sigma[j];
    if (!ok)
      throw std::invalid_argument("Min strategy: no arc from column " + std::to_string(j + 1) +
                                  " to row " + std::to_string(s.sigma[j] + 1));
  }
}

void check_strategy(const GameGraph& game, const MaxStrategy& s) {
  if (s.pi.size() != game.num_rows()) throw std::invalid_argument("Max strategy: wrong size");
  for (std::size_t i = 0; i < game.num_rows(); ++i) {
    bool ok = false;
    for (const auto& [j, w] : game.max_arcs[i]) ok = ok || j == s.pi[i];
    if (!ok)
      throw std::invalid_argument("Max strategy: no arc from row " + std::to_string(i + 1) +
                                  " to column " + std::to_string(s.pi[i] + 1));
  }
}

const ParamWeight& min_arc_weight(const GameGraph& game, std::size_t j, std::size_t i) {
  for (const auto& arc : game.min_arcs[j])
    if (arc.first == i) return arc.second;
  throw std::logic_error("min_arc_weight: missing arc");
}

const Rat& max_arc_weight(const GameGraph& game, std::size_t i, std::size_t j) {
  for (const auto& arc : game.max_arcs[i])
    if (arc.first == j) return arc.second;
  throw std::logic_error("max_arc_weight: missing arc");
}

// Column-to-column contraction of the sub-game of a Min strategy.
Digraph contract_min(const GameGraph& game, const MinStrategy& s) {
  Digraph d(game.n);
  for (std::size_t j = 0; j < game.n; ++j) {
    std::size_t i = s.sigma[j];
    const ParamWeight& wm = min_arc_weight(game, j, i);
    for (const auto& [k, wb] : game.max_arcs[i])
      d.add_arc(j, k, LexWeight{Rat(wm.base + wb), Rat(wm.lam)});
  }
  return d;
}

// Column-to-column contraction of the sub-game of a Max strategy.
Digraph contract_max(const GameGraph& game, const MaxStrategy& s) {
  Digraph d(game.n);
  for (std::size_t j = 0; j < game.n; ++j)
    for (const auto& [i, wm] : game.min_arcs[j]) {
      const Rat& wb = max_arc_weight(game, i, s.pi[i]);
      d.add_arc(j, s.pi[i], LexWeight{Rat(wm.base + wb), Rat(wm.lam)});
    }
  return d;
}

Digraph instantiate(const Digraph& g, const Rat& lambda) {
  Digraph d(g.num_nodes);
  for (std::size_t u = 0; u < g.num_nodes; ++u)
    for (const auto& [v, w] : g.out[u])
      d.add_arc(u, v, LexWeight{Rat(w.base + w.lam * lambda), Rat(0)});
  return d;
}

// chi_j of a one-player (Max strategy fixed) contracted graph: per column
// node, the minimum over reachable circuit-bearing SCCs of the minimal
// cycle mean.
std::vector<std::optional<LexWeight>> chi_of_contracted(const Digraph& g) {
  auto sccs = tarjan_sccs(g);
  std::vector<std::size_t> scc_of(g.num_nodes);
  for (std::size_t s = 0; s < sccs.size(); ++s)
    for (std::size_t v : sccs[s]) scc_of[v] = s;
  std::vector<std::optional<LexWeight>> nu(sccs.size());
  for (std::size_t s = 0; s < sccs.size(); ++s) {
    Digraph neg(g.num_nodes);
    for (std::size_t v : sccs[s])
      for (const auto& [w, lw] : g.out[v])
        if (scc_of[w] == s) neg.add_arc(v, w, -lw);
    auto m = karp_max_mean(neg, sccs[s]);
    if (m) nu[s] = -*m;
  }
  std::vector<std::optional<LexWeight>> chi(g.num_nodes);
  for (std::size_t j = 0; j < g.num_nodes; ++j) {
    // BFS reachability
    std::vector<bool> seen(g.num_nodes, false);
    std::vector<std::size_t> queue{j};
    seen[j] = true;
    while (!queue.empty()) {
      std::size_t v = queue.back();
      queue.pop_back();
      for (const auto& [w, lw] : g.out[v])
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    for (std::size_t s = 0; s < sccs.size(); ++s) {
      if (!nu[s]) continue;
      bool reach = false;
      for (std::size_t v : sccs[s]) reach = reach || seen[v];
      if (reach && (!chi[j] || *nu[s] < *chi[j])) chi[j] = nu[s];
    }
  }
  return chi;
}

}  // namespace

GameGraph build_game(const Matrix& a, const Matrix& b, const Vector& c, const Vector& d) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || c.size() != a.cols() ||
      d.size() != a.cols())
    throw std::invalid_argument("build_game: dimension mismatch");
  GameGraph g;
  g.p = a.rows();
  g.n = a.cols();
  g.max_arcs.resize(g.p + 1);
  g.min_arcs.resize(g.n);
  for (std::size_t i = 0; i < g.p; ++i)
    for (std::size_t j = 0; j < g.n; ++j) {
      if (b(i, j).is_finite()) g.max_arcs[i].push_back({j, b(i, j).rat()});
      if (a(i, j).is_finite()) g.min_arcs[j].push_back({i, ParamWeight{Rat(-a(i, j).rat()), 0}});
    }
  for (std::size_t j = 0; j < g.n; ++j) {
    if (c[j].is_finite()) g.max_arcs[g.p].push_back({j, c[j].rat()});
    if (d[j].is_finite()) g.min_arcs[j].push_back({g.p, ParamWeight{Rat(-d[j].rat()), -1}});
  }
  for (std::size_t i = 0; i <= g.p; ++i)
    if (g.max_arcs[i].empty())
      throw std::invalid_argument("build_game: row node " + std::to_string(i + 1) +
                                  " has no outgoing arc (assumption 1)");
  for (std::size_t j = 0; j < g.n; ++j)
    if (g.min_arcs[j].empty())
      throw std::invalid_argument("build_game: column node " + std::to_string(j + 1) +
                                  " has no outgoing arc (assumption 1)");
  return g;
}

Vector apply_g(const GameGraph& game, const Rat& lambda, const Vector& x) {
  if (x.size() != game.n) throw std::invalid_argument("apply_g: dimension mismatch");
  // value at each row node: weight + max_k (arc + x_k)
  std::vector<Scalar> row_val(game.num_rows());
  for (std::size_t i = 0; i < game.num_rows(); ++i) {
    Scalar acc = Scalar::bottom();
    for (const auto& [k, w] : game.max_arcs[i]) acc += Scalar(w) * x[k];
    row_val[i] = acc;
  }
  Vector out(game.n);
  for (std::size_t j = 0; j < game.n; ++j) {
    bool first = true;
    Scalar v;
    for (const auto& [i, w] : game.min_arcs[j]) {
      Scalar t = Scalar(w.at(lambda)) * row_val[i];
      if (first || t < v) v = t;
      first = false;
    }
    if (first) throw std::logic_error("apply_g: column node without moves");
    out[j] = v;
  }
  return out;
}

BipartiteDigraph restrict_min(const GameGraph& game, const MinStrategy& sigma) {
  check_strategy(game, sigma);
  BipartiteDigraph g;
  g.rows = game.num_rows();
  g.cols = game.n;
  g.row_arcs.resize(g.rows);
  g.col_arcs.resize(g.cols);
  for (std::size_t i = 0; i < g.rows; ++i)
    for (const auto& [j, w] : game.max_arcs[i]) g.row_arcs[i].push_back({j, ParamWeight{w, 0}});
  for (std::size_t j = 0; j < g.cols; ++j)
    g.col_arcs[j].push_back({sigma.sigma[j], min_arc_weight(game, j, sigma.sigma[j])});
  return g;
}

BipartiteDigraph restrict_max(const GameGraph& game, const MaxStrategy& pi) {
  check_strategy(game, pi);
  BipartiteDigraph g;
  g.rows = game.num_rows();
  g.cols = game.n;
  g.row_arcs.resize(g.rows);
  g.col_arcs.resize(g.cols);
  for (std::size_t i = 0; i < g.rows; ++i)
    g.row_arcs[i].push_back({pi.pi[i], ParamWeight{max_arc_weight(game, i, pi.pi[i]), 0}});
  for (std::size_t j = 0; j < g.cols; ++j) g.col_arcs[j] = game.min_arcs[j];
  return g;
}

std::optional<Rat> max_cycle_ratio(const BipartiteDigraph& g, const Rat& lambda) {
  BipartiteDigraph inst = g;
  for (auto& arcs : inst.row_arcs)
    for (auto& [v, w] : arcs) w = ParamWeight{w.at(lambda), 0};
  for (auto& arcs : inst.col_arcs)
    for (auto& [v, w] : arcs) w = ParamWeight{w.at(lambda), 0};
  auto r = lex_ratio(inst, false);
  if (!r) return std::nullopt;
  return r->base;
}

std::optional<Rat> min_cycle_ratio(const BipartiteDigraph& g, const Rat& lambda) {
  BipartiteDigraph inst = g;
  for (auto& arcs : inst.row_arcs)
    for (auto& [v, w] : arcs) w = ParamWeight{w.at(lambda), 0};
  for (auto& arcs : inst.col_arcs)
    for (auto& [v, w] : arcs) w = ParamWeight{w.at(lambda), 0};
  auto r = lex_ratio(inst, true);
  if (!r) return std::nullopt;
  return r->base;
}

std::optional<LexWeight> lex_max_cycle_ratio(const BipartiteDigraph& g) {
  return lex_ratio(g, false);
}

std::optional<LexWeight> lex_min_cycle_ratio(const BipartiteDigraph& g) {
  return lex_ratio(g, true);
}

std::vector<MinStrategy> all_min_strategies(const GameGraph& game, std::size_t cap) {
  std::size_t count = 1;
  for (std::size_t j = 0; j < game.n; ++j) {
    count *= game.min_arcs[j].size();
    if (count > cap) throw std::invalid_argument("all_min_strategies: strategy space too large");
  }
  std::vector<MinStrategy> out;
  MinStrategy cur{std::vector<std::size_t>(game.n)};
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == game.n) {
      out.push_back(cur);
      return;
    }
    for (const auto& [i, w] : game.min_arcs[j]) {
      cur.sigma[j] = i;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<MaxStrategy> all_max_strategies(const GameGraph& game, std::size_t cap) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < game.num_rows(); ++i) {
    count *= game.max_arcs[i].size();
    if (count > cap) throw std::invalid_argument("all_max_strategies: strategy space too large");
  }
  std::vector<MaxStrategy> out;
  MaxStrategy cur{std::vector<std::size_t>(game.num_rows())};
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == game.num_rows()) {
      out.push_back(cur);
      return;
    }
    for (const auto& [j, w] : game.max_arcs[i]) {
      cur.pi[i] = j;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Rat rho(const GameGraph& game, const Rat& lambda) {
  std::optional<Rat> best;
  for (const auto& s : all_min_strategies(game)) {
    auto mean = max_mean_per_arc(instantiate(contract_min(game, s), lambda));
    if (!mean) throw std::logic_error("rho: strategy sub-game without circuits");
    if (!best || mean->base < *best) best = mean->base;
  }
  return *best;
}

std::pair<LexWeight, MinStrategy> lex_rho(const GameGraph& game) {
  std::optional<LexWeight> best;
  MinStrategy arg;
  for (const auto& s : all_min_strategies(game)) {
    auto mean = max_mean_per_arc(contract_min(game, s));
    if (!mean) throw std::logic_error("lex_rho: strategy sub-game without circuits");
    if (!best || *mean < *best) {
      best = *mean;
      arg = s;
    }
  }
  return {*best, arg};
}

std::vector<Rat> cycle_time(const GameGraph& game, const Rat& lambda) {
  std::vector<std::optional<LexWeight>> best(game.n);
  for (const auto& s : all_max_strategies(game)) {
    auto chi = chi_of_contracted(instantiate(contract_max(game, s), lambda));
    for (std::size_t j = 0; j < game.n; ++j) {
      if (!chi[j]) throw std::logic_error("cycle_time: no circuit reachable");
      if (!best[j] || *best[j] < *chi[j]) best[j] = chi[j];
    }
  }
  std::vector<Rat> out(game.n);
  for (std::size_t j = 0; j < game.n; ++j) out[j] = best[j]->base;
  return out;
}

std::vector<Rat> cycle_time_value_iteration(const GameGraph& game, const Rat& lambda) {
  // clear denominators so all arc weights are integers
  DenomLcm lcm;
  for (std::size_t i = 0; i < game.num_rows(); ++i)
    for (const auto& [j, w] : game.max_arcs[i]) lcm.add(w);
  for (std::size_t j = 0; j < game.n; ++j)
    for (const auto& [i, w] : game.min_arcs[j]) lcm.add(w.at(lambda));
  const Int& scale = lcm.value();

  auto to_int = [&](const Rat& q) {
    Rat s = q * scale;
    Int num = boost::multiprecision::numerator(s);
    if (num < std::numeric_limits<std::int64_t>::min() / 4 ||
        num > std::numeric_limits<std::int64_t>::max() / 4)
      throw std::invalid_argument("cycle_time_value_iteration: weights too large");
    return static_cast<std::int64_t>(num);
  };
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> max_arcs(game.num_rows());
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> min_arcs(game.n);
  std::int64_t w_max = 1;
  for (std::size_t i = 0; i < game.num_rows(); ++i)
    for (const auto& [j, w] : game.max_arcs[i]) {
      std::int64_t v = to_int(w);
      max_arcs[i].push_back({j, v});
      w_max = std::max(w_max, std::abs(v));
    }
  for (std::size_t j = 0; j < game.n; ++j)
    for (const auto& [i, w] : game.min_arcs[j]) {
      std::int64_t v = to_int(w.at(lambda));
      min_arcs[j].push_back({i, v});
      w_max = std::max(w_max, std::abs(v));
    }

  const std::int64_t p = static_cast<std::int64_t>(game.p);
  const std::int64_t n = static_cast<std::int64_t>(game.n);
  const std::int64_t c_bound = 8 * (p + n + 2) * (w_max + 1) + 8;
  const std::int64_t iters = 2 * n * n * c_bound + 1;
  if (iters > (std::int64_t{1} << 40) || c_bound > (std::int64_t{1} << 40))
    throw std::invalid_argument("cycle_time_value_iteration: instance too large");

  std::vector<std::int64_t> x(game.n, 0), row_val(game.num_rows()), next(game.n);
  for (std::int64_t t = 0; t < iters; ++t) {
    for (std::size_t i = 0; i < game.num_rows(); ++i) {
      std::int64_t best = std::numeric_limits<std::int64_t>::min();
      for (const auto& [j, w] : max_arcs[i]) best = std::max(best, w + x[j]);
      row_val[i] = best;
    }
    for (std::size_t j = 0; j < game.n; ++j) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (const auto& [i, w] : min_arcs[j]) best = std::min(best, w + row_val[i]);
      next[j] = best;
    }
    x.swap(next);
  }
  std::vector<Rat> out(game.n);
  for (std::size_t j = 0; j < game.n; ++j) {
    Rat scaled_chi = round_to_denominator(Rat(Int(x[j]), Int(iters)), n);
    out[j] = scaled_chi / scale;
  }
  return out;
}

std::vector<std::size_t> winning_states(const GameGraph& game, const Rat& lambda) {
  std::vector<std::size_t> out;
  auto chi = cycle_time(game, lambda);
  for (std::size_t j = 0; j < game.n; ++j)
    if (chi[j] >= 0) out.push_back(j);
  return out;
}

}  // namespace tropic
