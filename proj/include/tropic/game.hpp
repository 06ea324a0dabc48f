#pragma once

#include <optional>
#include <vector>

#include "tropic/linalg.hpp"

namespace tropic {

/// Arc weight affine in the parameter: value(lambda) = base + lam * lambda.
/// lam is -1 exactly on the arcs into row node p+1, 0 elsewhere.
struct ParamWeight {
  Rat base;
  int lam = 0;

  Rat at(const Rat& lambda) const { return lam == 0 ? base : Rat(base + lam * lambda); }
};

/// Weight-per-length pair ordered lexicographically; models the limit
/// lambda -> 0+ (base first, then the coefficient of lambda).
struct LexWeight {
  Rat base;
  Rat lam;

  friend LexWeight operator+(const LexWeight& x, const LexWeight& y) {
    return {Rat(x.base + y.base), Rat(x.lam + y.lam)};
  }
  friend LexWeight operator-(const LexWeight& x, const LexWeight& y) {
    return {Rat(x.base - y.base), Rat(x.lam - y.lam)};
  }
  LexWeight operator-() const { return {Rat(-base), Rat(-lam)}; }
  LexWeight div(long k) const { return {Rat(base / k), Rat(lam / k)}; }
  LexWeight times(long k) const { return {Rat(base * k), Rat(lam * k)}; }
  friend bool operator==(const LexWeight& x, const LexWeight& y) {
    return x.base == y.base && x.lam == y.lam;
  }
  friend bool operator<(const LexWeight& x, const LexWeight& y) {
    return x.base < y.base || (x.base == y.base && x.lam < y.lam);
  }
  friend bool operator<=(const LexWeight& x, const LexWeight& y) { return x < y || x == y; }
};

/// Bipartite mean payoff game graph. Row nodes 0..p (node p is the special
/// row p+1 carrying the goal inequality), column nodes 0..n-1. Max moves at
/// row nodes along max_arcs, Min at column nodes along min_arcs.
struct GameGraph {
  std::size_t p = 0;  // number of system rows; p is also the index of row node p+1
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> max_arcs;          // row -> (col, B_ij | c_j)
  std::vector<std::vector<std::pair<std::size_t, ParamWeight>>> min_arcs;  // col -> (row, -A_ij | -lambda-d_j)

  std::size_t num_rows() const { return p + 1; }
};

/// Strategy of Player Min: column node j moves to row node sigma[j].
struct MinStrategy {
  std::vector<std::size_t> sigma;

  friend bool operator==(const MinStrategy& a, const MinStrategy& b) { return a.sigma == b.sigma; }
};

/// Strategy of Player Max: row node i moves to column node pi[i].
struct MaxStrategy {
  std::vector<std::size_t> pi;

  friend bool operator==(const MaxStrategy& a, const MaxStrategy& b) { return a.pi == b.pi; }
};

/// The restriction of the game to one player's fixed strategy: a bipartite
/// weighted digraph with parametric weights.
struct BipartiteDigraph {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, ParamWeight>>> row_arcs;  // row -> col
  std::vector<std::vector<std::pair<std::size_t, ParamWeight>>> col_arcs;  // col -> row
};

/// Builds the game of the system Ax <= Bx, lambda d x <= c x. Arcs: row i ->
/// col j with weight B_ij; col j -> row i with weight -A_ij; row p+1 -> col j
/// with weight c_j; col j -> row p+1 with weight -lambda - d_j. Throws when
/// some node would have no outgoing arc, naming the deficient node.
GameGraph build_game(const Matrix& a, const Matrix& b, const Vector& c, const Vector& d);

/// Dynamic programming operator g_lambda of the game at an exact rational
/// lambda, continuously extended to vectors with bottom entries.
Vector apply_g(const GameGraph& game, const Rat& lambda, const Vector& x);

/// One-player restrictions.
BipartiteDigraph restrict_min(const GameGraph& game, const MinStrategy& sigma);
BipartiteDigraph restrict_max(const GameGraph& game, const MaxStrategy& pi);

/// Maximal (resp. minimal) weight-to-length ratio over the circuits of a
/// bipartite digraph instantiated at lambda, the length of a circuit being
/// its number of column nodes. absent when the graph is acyclic.
std::optional<Rat> max_cycle_ratio(const BipartiteDigraph& g, const Rat& lambda);
std::optional<Rat> min_cycle_ratio(const BipartiteDigraph& g, const Rat& lambda);

/// Same ratios in the lexicographic lambda -> 0+ model.
std::optional<LexWeight> lex_max_cycle_ratio(const BipartiteDigraph& g);
std::optional<LexWeight> lex_min_cycle_ratio(const BipartiteDigraph& g);

/// All positional strategies. Sizes are products of out-degrees; callers
/// are expected to stay at desk scale (the functions throw above `cap`).
std::vector<MinStrategy> all_min_strategies(const GameGraph& game, std::size_t cap = 1u << 22);
std::vector<MaxStrategy> all_max_strategies(const GameGraph& game, std::size_t cap = 1u << 22);

/// Spectral radius rho(g_lambda) = min over Min strategies of the maximal
/// cycle ratio of the one-player sub-game (exact strategy enumeration).
Rat rho(const GameGraph& game, const Rat& lambda);

/// rho in the lambda -> 0+ lexicographic model, with the minimizing strategy
/// (lexicographically first among optimal ones).
std::pair<LexWeight, MinStrategy> lex_rho(const GameGraph& game);

/// Cycle time chi_j(g_lambda) for every column node: max over Max strategies
/// of (min over circuit-bearing SCCs reachable from j of their minimal cycle
/// ratio). Exact strategy enumeration.
std::vector<Rat> cycle_time(const GameGraph& game, const Rat& lambda);

/// Value-iteration engine: g^K(0)/K rounded to the nearest rational with
/// denominator <= n, with K chosen from the weight range so the rounding is
/// exact for integer-scaled data.
std::vector<Rat> cycle_time_value_iteration(const GameGraph& game, const Rat& lambda);

/// Column nodes j with chi_j(g_lambda) >= 0.
std::vector<std::size_t> winning_states(const GameGraph& game, const Rat& lambda);

}  // namespace tropic
