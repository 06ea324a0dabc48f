#pragma once

#include <optional>
#include <vector>

#include "tropic/linalg.hpp"

namespace tropic {

/// A pair (a, b) encoding the tropical linear inequality a x <= b x.
struct Inequality {
  Vector a;
  Vector b;

  friend bool operator==(const Inequality& l, const Inequality& r) {
    return l.a == r.a && l.b == r.b;
  }
};

using InequalitySystem = std::vector<Inequality>;

enum class InequalityKind { TrivialLower, TrivialSelf, TypeI, General };

/// Total classification of an inequality, up to tropical scaling:
///   TrivialLower  x_i >= -inf      (a = bottom, b ~ e^i)
///   TrivialSelf   x_i <= x_i       (a = b ~ e^i)
///   TypeI         x_i <= sum_{j != i} z_j x_j
struct InequalityClass {
  InequalityKind kind;
  std::size_t i = 0;  // meaningful unless General
};

InequalityClass classify(const Inequality& q);

/// Tropical polyhedral cone given by p generators (rows) in dimension n.
/// Standing assumption: no column of G is identically bottom.
class GeneratorCone {
 public:
  explicit GeneratorCone(Matrix g);

  const Matrix& generators() const { return g_; }
  std::size_t num_generators() const { return g_.rows(); }
  std::size_t dim() const { return g_.cols(); }

 private:
  Matrix g_;
};

/// x in RowSpace(G)? Residuation: lambda_r = min_j (x_j - G_rj) over finite
/// G_rj (the row is unusable when some such x_j is bottom), then test
/// sup_r lambda_r G_r. == x.
bool cone_membership(const GeneratorCone& k, const Vector& x);

/// (a, b) in the polar of RowSpace(G), i.e. G a <= G b componentwise.
bool polar_membership(const GeneratorCone& k, const Inequality& q);

/// b in the i-th polar: b_i G_ki <= max_{j != i} (b_j + G_kj) for every row k.
/// i is 0-based.
bool ith_polar_membership(const GeneratorCone& k, std::size_t i, const Vector& b);

/// The i-th polar of RowSpace(G) written as an inequality system over b:
/// one row per generator, G_ki b_i <= sum_{j != i} G_kj b_j.
InequalitySystem ith_polar_system(const GeneratorCone& k, std::size_t i);

/// One step of the chain of level sets of column j against column i:
/// the set L_j(threshold) together with the minimal threshold attaining it.
struct LevelStep {
  Scalar threshold;            // w_j^r; bottom for the empty level
  std::vector<std::size_t> rows;  // sorted subset of S_i (0-based row indices)
};

/// Per-column chains of level sets for a fixed target column i.
struct LevelChain {
  std::size_t i = 0;                     // target column (0-based)
  std::vector<std::size_t> support;     // S_i = rows with G_ki finite
  std::vector<std::size_t> columns;     // the j != i, ascending
  std::vector<std::vector<LevelStep>> chains;  // per column in `columns`;
                                               // chains[t][0] is the empty level
};

/// Builds the level-set chains for column i: candidate thresholds are the
/// values G_ki - G_kj over rows k in S_i with G_kj finite; equal level sets
/// collapse to one step holding the minimal threshold.
LevelChain build_level_chains(const GeneratorCone& k, std::size_t i);

/// A selection of one level per column; selection[t] indexes chains[t].
struct MinimalCover {
  std::vector<std::size_t> selection;

  friend bool operator==(const MinimalCover& a, const MinimalCover& b) {
    return a.selection == b.selection;
  }
};

/// All minimal covers of S_i by level sets (exhaustive backtracking with
/// cover-feasibility pruning). Empty when S_i cannot be covered.
std::vector<MinimalCover> enumerate_minimal_covers(const LevelChain& chain);

/// z with z_j = w_j^{r_j}: the minimal element of Z_i determined by a cover.
/// The result has length n with entry i forced to bottom (so it can be read
/// either as a z-vector or as the b-side of the type-i inequality).
Vector cover_to_vector(const LevelChain& chain, const MinimalCover& cover);

/// Embeds z as the type-i inequality x_i <= sum z_j x_j (a = e^i, b_i = bottom).
Inequality type_i_inequality(std::size_t n, std::size_t i, const Vector& z);

/// Embeds z as the i-th polar vector (b_i = one(), b_j = z_j).
Vector ith_polar_vector(std::size_t n, std::size_t i, const Vector& z);

/// System of representatives of the extreme inequalities of RowSpace(G):
/// the 2n trivial ones followed by the type-i inequalities (i ascending,
/// z lexicographic), normalized with a = e^i.
InequalitySystem enumerate_polar_extreme(const GeneratorCone& k);

/// Extreme rays of the i-th polar, as vectors b: the basis vectors e^j for
/// j != i, then the nontrivial extreme vectors (b_i = one), z lexicographic.
std::vector<Vector> enumerate_ith_polar_extreme(const GeneratorCone& k, std::size_t i);

}  // namespace tropic
