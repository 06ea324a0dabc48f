#include "tropic/cone.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <stdexcept>
#include <string>

namespace tropic {
namespace {

// Lexicographic order on vectors with bottom < finite.
bool lex_less(const Vector& x, const Vector& y) {
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] < y[i]) return true;
    if (y[i] < x[i]) return false;
  }
  return x.size() < y.size();
}

std::size_t thread_budget() {
  if (const char* env = std::getenv("TROPIC_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 1) return static_cast<std::size_t>(v);
  }
  return 1;
}

}  // namespace

InequalityClass classify(const Inequality& q) {
  if (q.a.size() != q.b.size()) throw std::invalid_argument("classify: length mismatch");
  std::size_t n = q.a.size();
  auto single_support = [n](const Vector& v) -> std::optional<std::size_t> {
    std::optional<std::size_t> at;
    for (std::size_t j = 0; j < n; ++j)
      if (v[j].is_finite()) {
        if (at) return std::nullopt;
        at = j;
      }
    return at;
  };
  if (q.a.is_bottom()) {
    if (auto i = single_support(q.b)) return {InequalityKind::TrivialLower, *i};
    return {InequalityKind::General, 0};
  }
  auto i = single_support(q.a);
  if (!i) return {InequalityKind::General, 0};
  if (q.a == q.b) return {InequalityKind::TrivialSelf, *i};
  if (q.b[*i].is_bottom()) return {InequalityKind::TypeI, *i};
  return {InequalityKind::General, 0};
}

GeneratorCone::GeneratorCone(Matrix g) : g_(std::move(g)) {
  if (g_.rows() == 0 || g_.cols() == 0)
    throw std::invalid_argument("GeneratorCone: empty matrix");
  for (std::size_t j = 0; j < g_.cols(); ++j) {
    bool any = false;
    for (std::size_t r = 0; r < g_.rows(); ++r) any = any || g_(r, j).is_finite();
    if (!any)
      throw std::invalid_argument("GeneratorCone: column " + std::to_string(j + 1) +
                                  " is identically bottom");
  }
}

bool cone_membership(const GeneratorCone& k, const Vector& x) {
  const Matrix& g = k.generators();
  if (x.size() != g.cols()) throw std::invalid_argument("cone_membership: dimension mismatch");
  Vector combo(x.size());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Scalar lam;  // bottom until a finite bound appears
    bool usable = true;
    bool first = true;
    for (std::size_t j = 0; j < x.size() && usable; ++j) {
      if (g(r, j).is_bottom()) continue;
      if (x[j].is_bottom()) {
        usable = false;
        break;
      }
      Scalar bound(Rat(x[j].rat() - g(r, j).rat()));
      if (first || bound < lam) lam = bound;
      first = false;
    }
    if (!usable || first) continue;
    combo = sup(combo, scalar_mul(lam, g.row(r)));
  }
  return combo == x;
}

bool polar_membership(const GeneratorCone& k, const Inequality& q) {
  const Matrix& g = k.generators();
  if (q.a.size() != g.cols() || q.b.size() != g.cols())
    throw std::invalid_argument("polar_membership: dimension mismatch");
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Vector row = g.row(r);
    if (!(trop_dot(row, q.a) <= trop_dot(row, q.b))) return false;
  }
  return true;
}

bool ith_polar_membership(const GeneratorCone& k, std::size_t i, const Vector& b) {
  const Matrix& g = k.generators();
  if (b.size() != g.cols()) throw std::invalid_argument("ith_polar_membership: dimension mismatch");
  if (i >= g.cols()) throw std::invalid_argument("ith_polar_membership: index out of range");
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Scalar lhs = b[i] * g(r, i);
    Scalar rhs = Scalar::bottom();
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (j != i) rhs += b[j] * g(r, j);
    if (!(lhs <= rhs)) return false;
  }
  return true;
}

InequalitySystem ith_polar_system(const GeneratorCone& k, std::size_t i) {
  const Matrix& g = k.generators();
  if (i >= g.cols()) throw std::invalid_argument("ith_polar_system: index out of range");
  InequalitySystem sys;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    Inequality q{Vector(g.cols()), Vector(g.cols())};
    q.a[i] = g(r, i);
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (j != i) q.b[j] = g(r, j);
    sys.push_back(std::move(q));
  }
  return sys;
}

LevelChain build_level_chains(const GeneratorCone& k, std::size_t i) {
  const Matrix& g = k.generators();
  if (i >= g.cols()) throw std::invalid_argument("build_level_chains: index out of range");
  LevelChain out;
  out.i = i;
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (g(r, i).is_finite()) out.support.push_back(r);
  for (std::size_t j = 0; j < g.cols(); ++j) {
    if (j == i) continue;
    out.columns.push_back(j);
    std::vector<Rat> cands;
    for (std::size_t r : out.support)
      if (g(r, j).is_finite()) cands.push_back(Rat(g(r, i).rat() - g(r, j).rat()));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<LevelStep> chain;
    chain.push_back(LevelStep{Scalar::bottom(), {}});
    for (const Rat& lam : cands) {
      LevelStep step{Scalar(lam), {}};
      for (std::size_t r : out.support)
        if (g(r, j).is_finite() && lam + g(r, j).rat() >= g(r, i).rat()) step.rows.push_back(r);
      if (step.rows != chain.back().rows) chain.push_back(std::move(step));
    }
    out.chains.push_back(std::move(chain));
  }
  return out;
}

std::vector<MinimalCover> enumerate_minimal_covers(const LevelChain& chain) {
  const std::size_t m = chain.columns.size();
  std::vector<MinimalCover> out;
  if (chain.support.empty()) return out;  // nothing to cover: no type-i inequality

  // Remaining coverage masks: union of top levels of columns t..m-1.
  // Supports fit in 64 bits at desk scale; fall back is not needed since
  // enumeration is exponential anyway.
  if (chain.support.size() > 63)
    throw std::invalid_argument("enumerate_minimal_covers: support too large");
  std::map<std::size_t, std::size_t> pos;  // row -> bit
  for (std::size_t t = 0; t < chain.support.size(); ++t) pos[chain.support[t]] = t;
  auto mask_of = [&](const std::vector<std::size_t>& rows) {
    std::uint64_t m2 = 0;
    for (auto r : rows) m2 |= (std::uint64_t{1} << pos.at(r));
    return m2;
  };
  const std::uint64_t full = chain.support.size() == 64
                                 ? ~std::uint64_t{0}
                                 : ((std::uint64_t{1} << chain.support.size()) - 1);
  std::vector<std::vector<std::uint64_t>> level_masks(m);
  for (std::size_t t = 0; t < m; ++t)
    for (const auto& step : chain.chains[t]) level_masks[t].push_back(mask_of(step.rows));
  std::vector<std::uint64_t> suffix_top(m + 1, 0);
  for (std::size_t t = m; t-- > 0;)
    suffix_top[t] = suffix_top[t + 1] | level_masks[t].back();

  std::vector<std::size_t> sel(m, 0);
  auto rec = [&](auto&& self, std::size_t t, std::uint64_t covered) -> void {
    if ((covered | suffix_top[t]) != full) return;
    if (t == m) {
      if (covered != full) return;
      // minimality: stepping any nonempty selection down must lose coverage
      for (std::size_t u = 0; u < m; ++u) {
        if (sel[u] == 0) continue;
        std::uint64_t rest = level_masks[u][sel[u] - 1];
        for (std::size_t v = 0; v < m; ++v)
          if (v != u) rest |= level_masks[v][sel[v]];
        if (rest == full) return;
      }
      out.push_back(MinimalCover{sel});
      return;
    }
    for (std::size_t r = 0; r < level_masks[t].size(); ++r) {
      sel[t] = r;
      self(self, t + 1, covered | level_masks[t][r]);
    }
    sel[t] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

Vector cover_to_vector(const LevelChain& chain, const MinimalCover& cover) {
  if (cover.selection.size() != chain.columns.size())
    throw std::invalid_argument("cover_to_vector: cover does not match chain");
  std::size_t n = chain.columns.size() + 1;
  Vector z(n);
  for (std::size_t t = 0; t < chain.columns.size(); ++t) {
    if (cover.selection[t] >= chain.chains[t].size())
      throw std::invalid_argument("cover_to_vector: selection out of range");
    z[chain.columns[t]] = chain.chains[t][cover.selection[t]].threshold;
  }
  return z;
}

Inequality type_i_inequality(std::size_t n, std::size_t i, const Vector& z) {
  if (z.size() != n || i >= n) throw std::invalid_argument("type_i_inequality: bad arguments");
  Inequality q{Vector(n), z};
  q.a[i] = Scalar::one();
  q.b[i] = Scalar::bottom();
  return q;
}

Vector ith_polar_vector(std::size_t n, std::size_t i, const Vector& z) {
  if (z.size() != n || i >= n) throw std::invalid_argument("ith_polar_vector: bad arguments");
  Vector b = z;
  b[i] = Scalar::one();
  return b;
}

namespace {

std::vector<Vector> minimal_z_vectors(const GeneratorCone& k, std::size_t i) {
  LevelChain chain = build_level_chains(k, i);
  std::vector<Vector> zs;
  for (const auto& cover : enumerate_minimal_covers(chain))
    zs.push_back(cover_to_vector(chain, cover));
  std::sort(zs.begin(), zs.end(), lex_less);
  return zs;
}

}  // namespace

InequalitySystem enumerate_polar_extreme(const GeneratorCone& k) {
  const std::size_t n = k.dim();
  InequalitySystem out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(Inequality{Vector(n), basis_vector(n, i)});  // x_i >= -inf
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(Inequality{basis_vector(n, i), basis_vector(n, i)});  // x_i <= x_i

  std::size_t threads = std::min(thread_budget(), n);
  std::vector<std::vector<Vector>> per_i(n);
  if (threads > 1) {
    std::vector<std::future<std::vector<Vector>>> jobs;
    for (std::size_t i = 0; i < n; ++i)
      jobs.push_back(std::async(std::launch::async, minimal_z_vectors, std::cref(k), i));
    for (std::size_t i = 0; i < n; ++i) per_i[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < n; ++i) per_i[i] = minimal_z_vectors(k, i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& z : per_i[i]) out.push_back(type_i_inequality(n, i, z));
  return out;
}

std::vector<Vector> enumerate_ith_polar_extreme(const GeneratorCone& k, std::size_t i) {
  const std::size_t n = k.dim();
  if (i >= n) throw std::invalid_argument("enumerate_ith_polar_extreme: index out of range");
  std::vector<Vector> out;
  for (std::size_t j = 0; j < n; ++j)
    if (j != i) out.push_back(basis_vector(n, j));
  for (const auto& z : minimal_z_vectors(k, i)) out.push_back(ith_polar_vector(n, i, z));
  return out;
}

}  // namespace tropic
