#include "tropic/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropic {

GeneratorCone cyclic_cone(const std::vector<Rat>& t, std::size_t n) {
  if (t.empty() || n == 0) throw std::invalid_argument("cyclic_cone: empty shape");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i - 1] < t[i])) throw std::invalid_argument("cyclic_cone: t must be strictly increasing");
  Matrix g(t.size(), n);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = Scalar(Rat(t[i] * static_cast<long>(j)));
  return GeneratorCone(std::move(g));
}

Int cyclic_polar_count(std::size_t p, std::size_t n) {
  if (p < 1 || n < 1) throw std::invalid_argument("cyclic_polar_count: p, n >= 1 required");
  Int total = 2 * Int(n);
  for (std::size_t i = 1; i <= n; ++i)
    total += Int(p - 1) * Int(i - 1) * Int(n - i) + Int(n - 1);
  return total;
}

InequalitySystem cyclic_polar_inequalities(const std::vector<Rat>& t, std::size_t n) {
  GeneratorCone cone = cyclic_cone(t, n);  // validates t
  const std::size_t p = t.size();
  InequalitySystem out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(Inequality{Vector(n), basis_vector(n, i)});
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(Inequality{basis_vector(n, i), basis_vector(n, i)});

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> zs;
    // single-term family: z_j = (i - j) t_p for j < i, (i - j) t_1 for j > i
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rat& base = j < i ? t[p - 1] : t[0];
      Vector z(n);
      z[j] = Scalar(Rat(base * (static_cast<long>(i) - static_cast<long>(j))));
      zs.push_back(std::move(z));
    }
    // two-segment family over m in [p-1], j < i < k
    for (std::size_t m = 0; m + 1 < p; ++m)
      for (std::size_t j = 0; j < i; ++j)
        for (std::size_t k = i + 1; k < n; ++k) {
          Vector z(n);
          z[j] = Scalar(Rat(t[m] * (static_cast<long>(i) - static_cast<long>(j))));
          z[k] = Scalar(Rat(t[m + 1] * (static_cast<long>(i) - static_cast<long>(k))));
          zs.push_back(std::move(z));
        }
    std::sort(zs.begin(), zs.end(), [](const Vector& a, const Vector& b) {
      for (std::size_t u = 0; u < a.size(); ++u) {
        if (a[u] < b[u]) return true;
        if (b[u] < a[u]) return false;
      }
      return false;
    });
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    for (const auto& z : zs) out.push_back(type_i_inequality(n, i, z));
  }
  return out;
}

GeneratorCone block_example(std::size_t p, std::size_t q) {
  if (p < 1 || q < 1) throw std::invalid_argument("block_example: p, q >= 1 required");
  const std::size_t n = p * q + 1;
  Matrix g(p, n);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < q; ++c)
        g(k, b * q + c) = (b == k) ? Scalar(Rat(static_cast<long>(q + 3 - c)))
                                   : Scalar(Rat(1));
    g(k, n - 1) = Scalar(0);
  }
  return GeneratorCone(std::move(g));
}

GeneratorCone transversal_matrix(const UndirectedHypergraph& h) {
  if (h.edges.empty()) throw std::invalid_argument("transversal_matrix: no hyperedges");
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    if (h.edges[e].empty())
      throw std::invalid_argument("transversal_matrix: hyperedge " + std::to_string(e + 1) +
                                  " is empty (no cover exists)");
    for (std::size_t v : h.edges[e])
      if (v >= h.num_nodes) throw std::invalid_argument("transversal_matrix: node out of range");
  }
  const std::size_t n = h.num_nodes + 1;
  Matrix g(h.edges.size(), n);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    for (std::size_t v : h.edges[i]) g(i, v) = Scalar::one();
    g(i, n - 1) = Scalar::one();
  }
  return GeneratorCone(std::move(g));
}

std::vector<std::set<std::size_t>> minimal_transversals(const UndirectedHypergraph& h) {
  GeneratorCone cone = transversal_matrix(h);
  const std::size_t n = cone.dim();
  LevelChain chain = build_level_chains(cone, n - 1);
  std::vector<std::set<std::size_t>> out;
  for (const auto& cover : enumerate_minimal_covers(chain)) {
    Vector z = cover_to_vector(chain, cover);
    std::set<std::size_t> support;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (z[j].is_bottom()) continue;
      if (z[j] != Scalar::one())
        throw std::logic_error("minimal_transversals: minimal element entry outside {one, bottom}");
      support.insert(j);
    }
    out.push_back(std::move(support));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace tropic
