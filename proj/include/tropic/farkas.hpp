#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropic/cone.hpp"
#include "tropic/game.hpp"

namespace tropic {

/// The decision instance: does A x <= B x imply c x <= d x over R_max^n?
struct Implication {
  Matrix A, B;
  Vector c, d;
};

/// Record of what normalize() did. Replaying it maps solutions of the
/// normalized instance to solutions of the original one: eliminated
/// variables are pinned to bottom, kept rows/columns keep their original
/// indices, and d entries flagged in d_replaced were raised from bottom to
/// -M - 1 + min finite c_j.
struct NormalizationTrace {
  bool trivially_true = false;
  std::string reason;                       // set when trivially_true
  std::vector<std::size_t> kept_rows;       // original row indices
  std::vector<std::size_t> kept_cols;       // original column indices
  std::vector<std::size_t> eliminated_cols; // forced to bottom
  std::vector<bool> d_replaced;             // per kept column
  Rat spread_bound;                         // M used for the d replacement
  Int scale = 1;                            // denominator lcm of the normalized data
};

struct NormalizeResult {
  Implication imp;  // meaningful unless trace.trivially_true
  NormalizationTrace trace;
};

/// (n-1) * max |A_is - B_it| over pairs of finite entries on a common row;
/// a bound on pairwise differences of finite entries of extreme solutions
/// of A x <= B x.
Rat entry_spread_bound(const Matrix& a, const Matrix& b);

/// Normalizes an implication: short-circuits when c is identically bottom,
/// repeatedly drops rows with identically-bottom B side (pinning to bottom
/// the variables their A side touches), and replaces the remaining bottom
/// entries of d by -M - 1 + min finite c_j. The result satisfies the game
/// assumptions: d finite everywhere and every B row has a finite entry.
NormalizeResult normalize(const Implication& imp);

/// Builds the mean payoff game of a normalized implication.
GameGraph implication_game(const Implication& imp);

/// Does the implication hold over R_max^n? Exact; works on rational data by
/// clearing denominators first.
bool holds(const Implication& imp);

/// Does the implication hold for every finite (all-entries-real) vector?
/// Decided by the sign of min_j chi_j(g_1) on the assumption-repaired game
/// with the original d (a raised d would change the finite-vector
/// semantics). When normalization pins any variable to bottom the premise
/// has no finite solutions and the implication is vacuously true.
bool holds_finite(const Implication& imp);

/// The stronger separation property: A x <= B x and x not identically
/// bottom imply c x < d x strictly. Characterized by rho(g_0) < 0.
bool strict_separation(const Implication& imp);

/// Certificate that the implication holds: a Min strategy such that in the
/// sub-game at lambda = 0 every circuit has nonpositive weight and every
/// zero-weight circuit passes through row node p+1.
struct MinCert {
  MinStrategy sigma;
};

/// Certificate that the implication fails: a Max strategy, a winning column
/// node, and a counterexample vector (indices and values refer to the
/// normalized instance).
struct MaxCert {
  MaxStrategy pi;
  std::size_t j = 0;
  Vector x;
};

/// Lexicographically first Min strategy minimizing the lambda -> 0+ cycle
/// mean; absent when the implication fails.
std::optional<MinCert> find_min_certificate(const Implication& imp);

/// Checks the NP certificate: in G_0^sigma every SCC has max cycle mean
/// <= 0, and with row node p+1 deleted every remaining circuit is strictly
/// negative.
bool verify_min_certificate(const Implication& imp, const MinStrategy& sigma);

/// Extracts a Max certificate when the implication fails: the counterexample
/// comes from the decreasing iteration x <- min(x, g_1(x)) with entries cut
/// to bottom once they fall more than M + 1 below the maximum, the strategy
/// from the argmax rows at the counterexample, and the column node is the
/// first one that verifies.
std::optional<MaxCert> find_max_certificate(const Implication& imp);

/// Checks the co-NP certificate: all SCCs reachable from j in G_0^pi have
/// min cycle mean >= 0; zero-mean SCCs, after a shortest-path potential
/// transform, have no zero-reduced-weight circuit through row node p+1; and
/// the embedded x satisfies A x <= B x and c x > d x exactly.
bool verify_max_certificate(const Implication& imp, const MaxCert& cert);

/// Is inequality k implied by the rest of the system?
bool is_redundant(const InequalitySystem& system, std::size_t k);

/// Greedy pass in the given scan order: delete an inequality iff it is
/// implied by the current surviving set. The order is an explicit input
/// because the resulting minimal system depends on it.
InequalitySystem minimize_system(const InequalitySystem& system,
                                 const std::vector<std::size_t>& order);

/// True iff cert_k violates inequality k and satisfies every other one.
bool check_minimality_certificates(const InequalitySystem& system,
                                   const std::vector<Vector>& certs);

}  // namespace tropic
