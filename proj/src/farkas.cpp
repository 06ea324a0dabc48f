#include "tropic/farkas.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace tropic {
namespace {

constexpr std::int64_t kBot = std::numeric_limits<std::int64_t>::min();

struct IntInstance {
  // scaled integer copy of a normalized implication; kBot marks bottom
  std::size_t p = 0, n = 0;
  std::vector<std::vector<std::int64_t>> A, B;
  std::vector<std::int64_t> c, d;
  Int scale = 1;
};

std::int64_t to_i64(const Rat& q) {
  Int num = boost::multiprecision::numerator(q);
  if (num < std::numeric_limits<std::int64_t>::min() / 8 ||
      num > std::numeric_limits<std::int64_t>::max() / 8)
    throw std::invalid_argument("implication data too large for the integer engine");
  return static_cast<std::int64_t>(num);
}

IntInstance scale_instance(const Implication& imp) {
  IntInstance out;
  out.p = imp.A.rows();
  out.n = imp.A.cols();
  DenomLcm lcm;
  auto feed = [&](const Scalar& s) {
    if (s.is_finite()) lcm.add(s.rat());
  };
  for (std::size_t i = 0; i < out.p; ++i)
    for (std::size_t j = 0; j < out.n; ++j) {
      feed(imp.A(i, j));
      feed(imp.B(i, j));
    }
  for (std::size_t j = 0; j < out.n; ++j) {
    feed(imp.c[j]);
    feed(imp.d[j]);
  }
  out.scale = lcm.value();
  auto conv = [&](const Scalar& s) {
    return s.is_bottom() ? kBot : to_i64(Rat(s.rat() * out.scale));
  };
  out.A.assign(out.p, std::vector<std::int64_t>(out.n, kBot));
  out.B.assign(out.p, std::vector<std::int64_t>(out.n, kBot));
  out.c.assign(out.n, kBot);
  out.d.assign(out.n, kBot);
  for (std::size_t i = 0; i < out.p; ++i)
    for (std::size_t j = 0; j < out.n; ++j) {
      out.A[i][j] = conv(imp.A(i, j));
      out.B[i][j] = conv(imp.B(i, j));
    }
  for (std::size_t j = 0; j < out.n; ++j) {
    out.c[j] = conv(imp.c[j]);
    out.d[j] = conv(imp.d[j]);
  }
  return out;
}

// Spread bound of the stacked system [(A; lambda+d), (B; c)] on integers.
std::int64_t int_spread_bound(const IntInstance& inst, std::int64_t lambda_scaled) {
  std::int64_t best = 0;
  auto scan_row = [&](const std::vector<std::int64_t>& ar, const std::vector<std::int64_t>& br) {
    for (std::size_t s = 0; s < ar.size(); ++s) {
      if (ar[s] == kBot) continue;
      for (std::size_t t = 0; t < br.size(); ++t) {
        if (br[t] == kBot) continue;
        best = std::max(best, std::abs(ar[s] - br[t]));
      }
    }
  };
  for (std::size_t i = 0; i < inst.p; ++i) scan_row(inst.A[i], inst.B[i]);
  std::vector<std::int64_t> lam_d(inst.n, kBot);
  for (std::size_t j = 0; j < inst.n; ++j)
    if (inst.d[j] != kBot) lam_d[j] = inst.d[j] + lambda_scaled;
  scan_row(lam_d, inst.c);
  return static_cast<std::int64_t>(inst.n > 0 ? inst.n - 1 : 0) * best;
}

struct Decision {
  bool holds = false;
  std::vector<std::int64_t> counterexample;  // scaled integers, kBot for bottom
};

// Decides whether K_lambda = {A x <= B x, lambda d x <= c x} is trivial by
// the decreasing iteration x <- min(x, g_lambda(x)) from the zero vector,
// with entries cut to bottom once they drop more than M + 1 below the
// maximum. A nontrivial K_lambda pins the maximum at 0 and the iteration
// stabilizes at an exact sub-fixed point; a trivial one drives the maximum
// below 0 within n * transient-bound sweeps.
Decision decide_cone_nontrivial(const IntInstance& inst, std::int64_t lambda_scaled) {
  const std::size_t p = inst.p, n = inst.n;
  std::int64_t w = 1;
  auto see = [&](std::int64_t v) {
    if (v != kBot) w = std::max(w, std::abs(v));
  };
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      see(inst.A[i][j]);
      see(inst.B[i][j]);
    }
  for (std::size_t j = 0; j < n; ++j) {
    see(inst.c[j]);
    if (inst.d[j] != kBot) see(inst.d[j] + lambda_scaled);
  }
  const std::int64_t m_bound = int_spread_bound(inst, lambda_scaled);
  const std::int64_t c_bound =
      8 * static_cast<std::int64_t>(p + n + 2) * (w + 1) + 8;
  const std::int64_t sweeps =
      std::max<std::int64_t>(static_cast<std::int64_t>(n) * (m_bound + 3),
                             static_cast<std::int64_t>(n) * c_bound) +
      4;

  std::vector<std::int64_t> x(n, 0), row_val(p + 1), next(n);
  auto add = [](std::int64_t a, std::int64_t b) {
    return (a == kBot || b == kBot) ? kBot : a + b;
  };
  for (std::int64_t t = 0; t < sweeps; ++t) {
    for (std::size_t i = 0; i < p; ++i) {
      std::int64_t best = kBot;
      for (std::size_t k = 0; k < n; ++k)
        best = std::max(best, add(inst.B[i][k], x[k]));
      row_val[i] = best;
    }
    {
      std::int64_t best = kBot;
      for (std::size_t k = 0; k < n; ++k) best = std::max(best, add(inst.c[k], x[k]));
      row_val[p] = best;
    }
    for (std::size_t j = 0; j < n; ++j) {
      bool any = false;
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (std::size_t i = 0; i < p; ++i) {
        if (inst.A[i][j] == kBot) continue;
        std::int64_t v = row_val[i] == kBot ? kBot : row_val[i] - inst.A[i][j];
        best = std::min(best, v);  // kBot is the smallest value
        any = true;
      }
      if (inst.d[j] != kBot) {
        std::int64_t v =
            row_val[p] == kBot ? kBot : row_val[p] - inst.d[j] - lambda_scaled;
        best = std::min(best, v);
        any = true;
      }
      if (!any) throw std::logic_error("decide: column node without moves");
      next[j] = std::min(best, x[j]);
    }
    std::int64_t mx = kBot;
    for (std::size_t j = 0; j < n; ++j) mx = std::max(mx, next[j]);
    if (mx == kBot || mx < 0) return Decision{true, {}};
    for (std::size_t j = 0; j < n; ++j)
      if (next[j] != kBot && next[j] < mx - m_bound - 1) next[j] = kBot;
    if (next == x) {
      // exact verification of the sub-fixed point
      for (std::size_t i = 0; i < p; ++i) {
        std::int64_t lhs = kBot, rhs = kBot;
        for (std::size_t k = 0; k < n; ++k) {
          lhs = std::max(lhs, add(inst.A[i][k], x[k]));
          rhs = std::max(rhs, add(inst.B[i][k], x[k]));
        }
        if (!(lhs == kBot || (rhs != kBot && lhs <= rhs)))
          throw std::logic_error("decide: stabilized point violates the system");
      }
      std::int64_t dx = kBot, cx = kBot;
      for (std::size_t k = 0; k < n; ++k) {
        if (inst.d[k] != kBot) dx = std::max(dx, add(inst.d[k] + lambda_scaled, x[k]));
        cx = std::max(cx, add(inst.c[k], x[k]));
      }
      if (!(dx == kBot || (cx != kBot && dx <= cx)))
        throw std::logic_error("decide: stabilized point violates the goal row");
      return Decision{false, x};
    }
    x = next;
  }
  throw std::logic_error("decide: iteration did not converge within its bound");
}

Matrix stack_rows(const Matrix& m, const std::vector<Vector>& extra) {
  Matrix out = m;
  for (const auto& v : extra) out.push_row(v);
  return out;
}

// Assumption-1 repair that keeps d: appends the trivial row x_j <= x_j for
// every column where Min would have no move. Used by the finite-vector and
// strict variants, whose semantics a raised d would change.
Implication append_trivial_rows_where_needed(const Implication& imp) {
  std::size_t n = imp.A.cols();
  std::vector<Vector> extraA, extraB;
  for (std::size_t j = 0; j < n; ++j) {
    bool has_move = imp.d[j].is_finite();
    for (std::size_t i = 0; i < imp.A.rows() && !has_move; ++i)
      has_move = imp.A(i, j).is_finite();
    if (!has_move) {
      extraA.push_back(basis_vector(n, j));
      extraB.push_back(basis_vector(n, j));
    }
  }
  if (extraA.empty()) return imp;
  return Implication{stack_rows(imp.A, extraA), stack_rows(imp.B, extraB), imp.c, imp.d};
}

// Row elimination only, keeping d as given.
struct LiteResult {
  bool all_eliminated = false;
  bool vars_eliminated = false;
  bool c_vanished = false;
  Implication imp;
};

LiteResult eliminate_rows(const Implication& imp) {
  const std::size_t p0 = imp.A.rows(), n0 = imp.A.cols();
  std::vector<std::size_t> rows(p0), cols(n0);
  for (std::size_t i = 0; i < p0; ++i) rows[i] = i;
  for (std::size_t j = 0; j < n0; ++j) cols[j] = j;
  bool changed = true;
  LiteResult out;
  while (changed) {
    changed = false;
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      std::size_t r = rows[ri];
      bool b_empty = true;
      for (std::size_t j : cols) b_empty = b_empty && imp.B(r, j).is_bottom();
      if (!b_empty) continue;
      std::vector<std::size_t> keep;
      for (std::size_t j : cols) {
        if (imp.A(r, j).is_finite())
          out.vars_eliminated = true;
        else
          keep.push_back(j);
      }
      cols = keep;
      rows.erase(rows.begin() + ri);
      changed = true;
      break;
    }
  }
  if (cols.empty()) {
    out.all_eliminated = true;
    return out;
  }
  Matrix a2(rows.size(), cols.size()), b2(rows.size(), cols.size());
  Vector c2(cols.size()), d2(cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      a2(i, j) = imp.A(rows[i], cols[j]);
      b2(i, j) = imp.B(rows[i], cols[j]);
    }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    c2[j] = imp.c[cols[j]];
    d2[j] = imp.d[cols[j]];
  }
  out.imp = Implication{std::move(a2), std::move(b2), std::move(c2), std::move(d2)};
  out.c_vanished = out.imp.c.is_bottom();
  return out;
}

// Multiplies every finite entry by the lcm of the denominators, so that the
// lambda = 1 criteria for integer data apply.
Implication clear_denominators(const Implication& imp) {
  DenomLcm lcm;
  auto feed = [&](const Scalar& s) {
    if (s.is_finite()) lcm.add(s.rat());
  };
  for (std::size_t i = 0; i < imp.A.rows(); ++i)
    for (std::size_t j = 0; j < imp.A.cols(); ++j) {
      feed(imp.A(i, j));
      feed(imp.B(i, j));
    }
  for (std::size_t j = 0; j < imp.c.size(); ++j) {
    feed(imp.c[j]);
    feed(imp.d[j]);
  }
  if (lcm.value() == 1) return imp;
  Rat k(lcm.value());
  auto sc = [&](const Scalar& s) { return s.is_bottom() ? s : Scalar(Rat(s.rat() * k)); };
  Implication out = imp;
  for (std::size_t i = 0; i < out.A.rows(); ++i)
    for (std::size_t j = 0; j < out.A.cols(); ++j) {
      out.A(i, j) = sc(imp.A(i, j));
      out.B(i, j) = sc(imp.B(i, j));
    }
  for (std::size_t j = 0; j < out.c.size(); ++j) {
    out.c[j] = sc(imp.c[j]);
    out.d[j] = sc(imp.d[j]);
  }
  return out;
}

std::vector<Rat> chi_exact(const GameGraph& game, const Rat& lambda) {
  try {
    return cycle_time(game, lambda);
  } catch (const std::invalid_argument&) {
    return cycle_time_value_iteration(game, lambda);
  }
}

}  // namespace

Rat entry_spread_bound(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("entry_spread_bound: dimension mismatch");
  Rat best = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t s = 0; s < a.cols(); ++s) {
      if (a(i, s).is_bottom()) continue;
      for (std::size_t t = 0; t < b.cols(); ++t) {
        if (b(i, t).is_bottom()) continue;
        Rat diff = a(i, s).rat() - b(i, t).rat();
        if (diff < 0) diff = -diff;
        if (diff > best) best = diff;
      }
    }
  return Rat(static_cast<long>(a.cols() > 0 ? a.cols() - 1 : 0)) * best;
}

NormalizeResult normalize(const Implication& imp) {
  const std::size_t p0 = imp.A.rows(), n0 = imp.A.cols();
  if (imp.B.rows() != p0 || imp.B.cols() != n0 || imp.c.size() != n0 || imp.d.size() != n0)
    throw std::invalid_argument("normalize: dimension mismatch");
  NormalizeResult out;
  NormalizationTrace& tr = out.trace;
  if (imp.c.is_bottom()) {
    tr.trivially_true = true;
    tr.reason = "goal left-hand side is identically bottom";
    return out;
  }

  std::vector<std::size_t> rows(p0), cols(n0);
  for (std::size_t i = 0; i < p0; ++i) rows[i] = i;
  for (std::size_t j = 0; j < n0; ++j) cols[j] = j;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      std::size_t r = rows[ri];
      bool b_empty = true;
      for (std::size_t j : cols) b_empty = b_empty && imp.B(r, j).is_bottom();
      if (!b_empty) continue;
      std::vector<std::size_t> keep;
      for (std::size_t j : cols) {
        if (imp.A(r, j).is_finite())
          tr.eliminated_cols.push_back(j);
        else
          keep.push_back(j);
      }
      cols = keep;
      rows.erase(rows.begin() + ri);
      changed = true;
      break;
    }
  }
  std::sort(tr.eliminated_cols.begin(), tr.eliminated_cols.end());
  if (cols.empty()) {
    tr.trivially_true = true;
    tr.reason = "every variable is forced to bottom";
    return out;
  }
  bool c_left = false;
  for (std::size_t j : cols) c_left = c_left || imp.c[j].is_finite();
  if (!c_left) {
    tr.trivially_true = true;
    tr.reason = "goal left-hand side is bottom on the remaining variables";
    return out;
  }

  Matrix a2(rows.size(), cols.size()), b2(rows.size(), cols.size());
  Vector c2(cols.size()), d2(cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      a2(i, j) = imp.A(rows[i], cols[j]);
      b2(i, j) = imp.B(rows[i], cols[j]);
    }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    c2[j] = imp.c[cols[j]];
    d2[j] = imp.d[cols[j]];
  }

  tr.spread_bound = entry_spread_bound(a2, b2);
  Rat min_c;
  bool first = true;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (c2[j].is_finite() && (first || c2[j].rat() < min_c)) {
      min_c = c2[j].rat();
      first = false;
    }
  Rat fill = -tr.spread_bound - 1 + min_c;
  tr.d_replaced.assign(cols.size(), false);
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (d2[j].is_bottom()) {
      d2[j] = Scalar(fill);
      tr.d_replaced[j] = true;
    }

  tr.kept_rows = rows;
  tr.kept_cols = cols;
  out.imp = Implication{std::move(a2), std::move(b2), std::move(c2), std::move(d2)};

  DenomLcm lcm;
  auto feed = [&](const Scalar& s) {
    if (s.is_finite()) lcm.add(s.rat());
  };
  for (std::size_t i = 0; i < out.imp.A.rows(); ++i)
    for (std::size_t j = 0; j < out.imp.A.cols(); ++j) {
      feed(out.imp.A(i, j));
      feed(out.imp.B(i, j));
    }
  for (std::size_t j = 0; j < out.imp.c.size(); ++j) {
    feed(out.imp.c[j]);
    feed(out.imp.d[j]);
  }
  tr.scale = lcm.value();
  return out;
}

GameGraph implication_game(const Implication& imp) {
  return build_game(imp.A, imp.B, imp.c, imp.d);
}

bool holds(const Implication& imp) {
  NormalizeResult nm = normalize(imp);
  if (nm.trace.trivially_true) return true;
  IntInstance inst = scale_instance(nm.imp);
  return decide_cone_nontrivial(inst, to_i64(Rat(1 * inst.scale))).holds;
}

bool holds_finite(const Implication& imp) {
  if (imp.c.is_bottom()) return true;
  LiteResult lite = eliminate_rows(imp);
  // a pinned variable means the premise has no finite solution at all
  if (lite.all_eliminated || lite.vars_eliminated) return true;
  if (lite.c_vanished) return true;
  Implication repaired = append_trivial_rows_where_needed(clear_denominators(lite.imp));
  auto chi = chi_exact(implication_game(repaired), Rat(1));
  Rat low = chi.front();
  for (const Rat& v : chi) low = std::min(low, v);
  return low < 0;
}

bool strict_separation(const Implication& imp) {
  if (imp.c.is_bottom())
    throw std::invalid_argument("strict_separation: goal left-hand side is identically bottom");
  LiteResult lite = eliminate_rows(imp);
  if (lite.all_eliminated) return true;  // only the bottom vector satisfies the premise
  if (lite.c_vanished)
    throw std::invalid_argument(
        "strict_separation: goal left-hand side vanishes on the surviving variables");
  Implication repaired = append_trivial_rows_where_needed(clear_denominators(lite.imp));
  IntInstance inst = scale_instance(repaired);
  return decide_cone_nontrivial(inst, 0).holds;
}

std::optional<MinCert> find_min_certificate(const Implication& imp) {
  NormalizeResult nm = normalize(imp);
  if (nm.trace.trivially_true)
    throw std::invalid_argument("find_min_certificate: trivially true instance has no game");
  IntInstance inst = scale_instance(nm.imp);
  if (!decide_cone_nontrivial(inst, to_i64(Rat(1 * inst.scale))).holds) return std::nullopt;
  auto [value, sigma] = lex_rho(implication_game(nm.imp));
  return MinCert{sigma};
}

bool verify_min_certificate(const Implication& imp, const MinStrategy& sigma) {
  NormalizeResult nm = normalize(imp);
  if (nm.trace.trivially_true)
    throw std::invalid_argument("verify_min_certificate: trivially true instance has no game");
  GameGraph game = implication_game(nm.imp);
  BipartiteDigraph sub = restrict_min(game, sigma);  // throws on invalid strategy
  auto top = max_cycle_ratio(sub, Rat(0));
  if (top && *top > 0) return false;
  // delete row node p+1 and its arcs; all remaining circuits must be negative
  BipartiteDigraph cut = sub;
  cut.row_arcs[game.p].clear();
  for (auto& arcs : cut.col_arcs)
    arcs.erase(std::remove_if(arcs.begin(), arcs.end(),
                              [&](const auto& a) { return a.first == game.p; }),
               arcs.end());
  auto inner = max_cycle_ratio(cut, Rat(0));
  return !inner || *inner < 0;
}

std::optional<MaxCert> find_max_certificate(const Implication& imp) {
  NormalizeResult nm = normalize(imp);
  if (nm.trace.trivially_true) return std::nullopt;
  IntInstance inst = scale_instance(nm.imp);
  Decision dec = decide_cone_nontrivial(inst, to_i64(Rat(1 * inst.scale)));
  if (dec.holds) return std::nullopt;

  const std::size_t n = nm.imp.A.cols(), p = nm.imp.A.rows();
  Vector x(n);
  for (std::size_t j = 0; j < n; ++j)
    if (dec.counterexample[j] != kBot)
      x[j] = Scalar(Rat(Int(dec.counterexample[j]), inst.scale));

  // Max plays an argmax selection at the counterexample (lexicographically
  // first argmax per row), which realizes g(x) = g^pi(x) >= x.
  MaxStrategy pi{std::vector<std::size_t>(p + 1, 0)};
  GameGraph game = implication_game(nm.imp);
  for (std::size_t i = 0; i <= p; ++i) {
    Scalar best = Scalar::bottom();
    for (const auto& [k, w] : game.max_arcs[i]) best += Scalar(w) * x[k];
    std::size_t arg = game.max_arcs[i].front().first;
    if (best.is_finite()) {
      for (const auto& [k, w] : game.max_arcs[i])
        if ((Scalar(w) * x[k]) == best) {
          arg = k;
          break;
        }
    }
    pi.pi[i] = arg;
  }
  // prefer a winning column in the support of x with finite c
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < n; ++j)
    if (x[j].is_finite() && nm.imp.c[j].is_finite()) candidates.push_back(j);
  for (std::size_t j = 0; j < n; ++j)
    if (x[j].is_finite() && !nm.imp.c[j].is_finite()) candidates.push_back(j);
  for (std::size_t j = 0; j < n; ++j)
    if (!x[j].is_finite()) candidates.push_back(j);
  for (std::size_t j : candidates) {
    MaxCert cert{pi, j, x};
    if (verify_max_certificate(imp, cert)) return cert;
  }
  throw std::logic_error("find_max_certificate: no verifying column node found");
}

bool verify_max_certificate(const Implication& imp, const MaxCert& cert) {
  NormalizeResult nm = normalize(imp);
  if (nm.trace.trivially_true) return false;
  const std::size_t n = nm.imp.A.cols(), p = nm.imp.A.rows();
  if (cert.x.size() != n || cert.j >= n)
    throw std::invalid_argument("verify_max_certificate: malformed certificate");
  GameGraph game = implication_game(nm.imp);
  BipartiteDigraph sub = restrict_max(game, cert.pi);  // throws on invalid strategy

  // (3) the embedded counterexample is exact
  const Vector& x = cert.x;
  for (std::size_t i = 0; i < p; ++i) {
    if (!(trop_dot(nm.imp.A.row(i), x) <= trop_dot(nm.imp.B.row(i), x))) return false;
  }
  if (!(trop_dot(nm.imp.c, x) > trop_dot(nm.imp.d, x))) return false;

  // (1)+(2) on the bipartite sub-game at lambda = 0.
  // node ids: rows 0..p, column j -> p+1+j
  const std::size_t num = p + 1 + n;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> adj(num);
  for (std::size_t i = 0; i <= p; ++i)
    for (const auto& [j, w] : sub.row_arcs[i]) adj[i].push_back({p + 1 + j, w.at(Rat(0))});
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, w] : sub.col_arcs[j]) adj[p + 1 + j].push_back({i, w.at(Rat(0))});

  // reachability from column node j
  std::vector<bool> reach(num, false);
  {
    std::vector<std::size_t> stack{p + 1 + cert.j};
    reach[p + 1 + cert.j] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& [w, wt] : adj[v])
        if (!reach[w]) {
          reach[w] = true;
          stack.push_back(w);
        }
    }
  }

  // SCCs of the reachable part (Kosaraju)
  std::vector<int> comp(num, -1);
  {
    std::vector<std::size_t> order;
    std::vector<bool> seen(num, false);
    std::vector<std::vector<std::size_t>> radj(num);
    for (std::size_t v = 0; v < num; ++v)
      for (const auto& [w, wt] : adj[v]) radj[w].push_back(v);
    for (std::size_t s = 0; s < num; ++s) {
      if (seen[s] || !reach[s]) continue;
      // iterative post-order
      std::vector<std::pair<std::size_t, std::size_t>> st{{s, 0}};
      seen[s] = true;
      while (!st.empty()) {
        auto& [v, k] = st.back();
        if (k < adj[v].size()) {
          std::size_t w = adj[v][k++].first;
          if (!seen[w] && reach[w]) {
            seen[w] = true;
            st.push_back({w, 0});
          }
        } else {
          order.push_back(v);
          st.pop_back();
        }
      }
    }
    int nc = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (comp[*it] != -1) continue;
      std::vector<std::size_t> st{*it};
      comp[*it] = nc;
      while (!st.empty()) {
        std::size_t v = st.back();
        st.pop_back();
        for (std::size_t w : radj[v])
          if (reach[w] && comp[w] == -1) {
            comp[w] = nc;
            st.push_back(w);
          }
      }
      ++nc;
    }
  }

  // per reachable SCC: min cycle mean via min_cycle_ratio on the sub-digraph
  int num_comps = 0;
  for (std::size_t v = 0; v < num; ++v) num_comps = std::max(num_comps, comp[v] + 1);
  for (int cidx = 0; cidx < num_comps; ++cidx) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < num; ++v)
      if (comp[v] == cidx) members.push_back(v);
    // intra-SCC arcs
    std::vector<std::tuple<std::size_t, std::size_t, Rat>> arcs;
    for (std::size_t v : members)
      for (const auto& [w, wt] : adj[v])
        if (comp[w] == cidx) arcs.push_back({v, w, wt});
    if (arcs.empty()) continue;
    // build a bipartite digraph restricted to this SCC to reuse the ratio code
    BipartiteDigraph piece;
    piece.rows = p + 1;
    piece.cols = n;
    piece.row_arcs.resize(piece.rows);
    piece.col_arcs.resize(piece.cols);
    for (const auto& [v, w, wt] : arcs) {
      if (v <= p)
        piece.row_arcs[v].push_back({w - (p + 1), ParamWeight{wt, 0}});
      else
        piece.col_arcs[v - (p + 1)].push_back({w, ParamWeight{wt, 0}});
    }
    auto mu = min_cycle_ratio(piece, Rat(0));
    if (!mu) continue;
    if (*mu < 0) return false;
    if (*mu == 0) {
      // potential transform: shortest path distances within the SCC
      std::vector<Rat> u(num, Rat(0));
      std::vector<bool> in_scc(num, false);
      for (std::size_t v : members) in_scc[v] = true;
      // Bellman-Ford from members[0]
      std::vector<bool> has(num, false);
      u[members[0]] = 0;
      has[members[0]] = true;
      for (std::size_t it = 0; it + 1 < members.size() + 1; ++it) {
        bool relaxed = false;
        for (const auto& [v, w, wt] : arcs)
          if (has[v] && (!has[w] || u[v] + wt < u[w])) {
            u[w] = u[v] + wt;
            has[w] = true;
            relaxed = true;
          }
        if (!relaxed) break;
      }
      // zero-reduced-weight subgraph; check row node p+1 is on no circuit
      if (in_scc[p]) {
        std::vector<std::vector<std::size_t>> zadj(num);
        for (const auto& [v, w, wt] : arcs)
          if (u[v] + wt - u[w] == 0) zadj[v].push_back(w);
        // is node p on a circuit of zadj? DFS from p looking for a return
        std::vector<bool> seen(num, false);
        std::vector<std::size_t> st(zadj[p].begin(), zadj[p].end());
        bool back = false;
        while (!st.empty() && !back) {
          std::size_t v = st.back();
          st.pop_back();
          if (v == p) {
            back = true;
            break;
          }
          if (seen[v]) continue;
          seen[v] = true;
          for (std::size_t w : zadj[v]) {
            if (w == p) back = true;
            if (!seen[w]) st.push_back(w);
          }
        }
        if (back) return false;
      }
    }
  }
  return true;
}

bool is_redundant(const InequalitySystem& system, std::size_t k) {
  if (system.empty()) throw std::invalid_argument("is_redundant: empty system");
  if (k >= system.size()) throw std::invalid_argument("is_redundant: index out of range");
  std::size_t n = system[k].a.size();
  Matrix a(0, n), b(0, n);
  for (std::size_t r = 0; r < system.size(); ++r) {
    if (r == k) continue;
    a.push_row(system[r].a);
    b.push_row(system[r].b);
  }
  if (a.rows() == 0) {
    // no constraints left: the goal must hold unconditionally
    Matrix unit(1, n), unitb(1, n);  // trivial row x_1 <= x_1 keeps shapes valid
    unit(0, 0) = Scalar::one();
    unitb(0, 0) = Scalar::one();
    return holds(Implication{unit, unitb, system[k].a, system[k].b});
  }
  return holds(Implication{a, b, system[k].a, system[k].b});
}

InequalitySystem minimize_system(const InequalitySystem& system,
                                 const std::vector<std::size_t>& order) {
  std::vector<bool> seen(system.size(), false);
  if (order.size() != system.size())
    throw std::invalid_argument("minimize_system: order must be a permutation of the rows");
  for (std::size_t k : order) {
    if (k >= system.size() || seen[k])
      throw std::invalid_argument("minimize_system: order must be a permutation of the rows");
    seen[k] = true;
  }
  std::vector<bool> alive(system.size(), true);
  for (std::size_t k : order) {
    InequalitySystem rest;
    for (std::size_t r = 0; r < system.size(); ++r)
      if (alive[r] && r != k) rest.push_back(system[r]);
    if (rest.empty()) continue;
    std::size_t n = system[k].a.size();
    Matrix a(0, n), b(0, n);
    for (const auto& q : rest) {
      a.push_row(q.a);
      b.push_row(q.b);
    }
    if (holds(Implication{a, b, system[k].a, system[k].b})) alive[k] = false;
  }
  InequalitySystem out;
  for (std::size_t r = 0; r < system.size(); ++r)
    if (alive[r]) out.push_back(system[r]);
  return out;
}

bool check_minimality_certificates(const InequalitySystem& system,
                                   const std::vector<Vector>& certs) {
  if (certs.size() != system.size())
    throw std::invalid_argument("check_minimality_certificates: count mismatch");
  for (std::size_t k = 0; k < system.size(); ++k) {
    for (std::size_t r = 0; r < system.size(); ++r) {
      bool sat = trop_dot(system[r].a, certs[k]) <= trop_dot(system[r].b, certs[k]);
      if (r == k ? sat : !sat) return false;
    }
  }
  return true;
}

}  // namespace tropic
