#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tropic/hypergraph.hpp"

using namespace tropic;

namespace {

const Scalar bot = Scalar::bottom();

Matrix matrix_g() {
  return Matrix{{Scalar(-3), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(-3), Scalar(0)},
                {Scalar(0), Scalar(0), Scalar(-3)}, {Scalar(1), Scalar(0), Scalar(0)},
                {Scalar(0), Scalar(1), Scalar(0)},  {Scalar(0), Scalar(0), Scalar(1)}};
}

std::mt19937 rng(4242);

GeneratorCone random_cone(std::size_t max_p = 5, std::size_t max_n = 5) {
  std::uniform_int_distribution<std::size_t> dp(1, max_p), dn(2, max_n);
  std::uniform_int_distribution<int> entry(-3, 3), kind(0, 3);
  while (true) {
    std::size_t p = dp(rng), n = dn(rng);
    Matrix m(p, n);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = kind(rng) == 0 ? Scalar::bottom() : Scalar(entry(rng));
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < p; ++i) any = any || m(i, j).is_finite();
      ok = any;
    }
    if (ok) return GeneratorCone(std::move(m));
  }
}

// decomposition brute force: b is extreme in the i-th polar iff there is no
// pair b', b'' in the polar, both below b and different from it, whose sup
// is b. Candidates range over the finite grid of per-coordinate values
// {b_j} union {thresholds} union {bottom}.
bool brute_extreme(const GeneratorCone& k, std::size_t i, const Vector& b) {
  const Matrix& g = k.generators();
  const std::size_t n = k.dim();
  std::vector<std::vector<Scalar>> cand(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::set<Rat> vals;
    if (b[j].is_finite()) vals.insert(b[j].rat());
    for (std::size_t r = 0; r < g.rows(); ++r)
      if (g(r, i).is_finite() && g(r, j).is_finite() && b[i].is_finite())
        vals.insert(Rat(b[i].rat() + g(r, i).rat() - g(r, j).rat()));
    cand[j].push_back(Scalar::bottom());
    for (const auto& v : vals)
      if (b[j].is_finite() && Scalar(v) <= b[j]) cand[j].push_back(Scalar(v));
  }
  std::vector<Vector> lower;  // members of the i-th polar below b
  Vector cur(n);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      if (ith_polar_membership(k, i, cur)) lower.push_back(cur);
      return;
    }
    for (const auto& v : cand[j]) {
      cur[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  for (const auto& u : lower) {
    if (u == b) continue;
    for (const auto& w : lower) {
      if (w == b) continue;
      if (sup(u, w) == b) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("reachability: no hyperedges, chains, and AND-tails") {
  DirectedHypergraph h;
  h.nodes = {1, 2, 3};
  CHECK(reachable_set(h, 1) == std::set<std::size_t>{1});
  CHECK_THROWS_AS(reachable_set(h, 9), std::invalid_argument);

  h.edges.push_back(Hyperedge{{1}, {2}});
  h.edges.push_back(Hyperedge{{2}, {3}});
  CHECK(reachable_set(h, 1) == std::set<std::size_t>{1, 2, 3});

  DirectedHypergraph g;
  g.nodes = {1, 2, 3};
  g.edges.push_back(Hyperedge{{1, 2}, {3}});
  CHECK(reachable_set(g, 1) == std::set<std::size_t>{1});  // tail needs both 1 and 2
  g.edges.push_back(Hyperedge{{1}, {2}});
  CHECK(reachable_set(g, 1) == std::set<std::size_t>{1, 2, 3});
}

TEST_CASE("reachability is monotone under hyperedge addition") {
  std::uniform_int_distribution<std::size_t> dn(2, 6);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = dn(rng);
    DirectedHypergraph h;
    for (std::size_t v = 0; v < n; ++v) h.nodes.insert(v);
    std::uniform_int_distribution<std::size_t> dv(0, n - 1);
    std::uniform_int_distribution<int> sz(1, 2);
    for (int e = 0; e < 4; ++e) {
      Hyperedge ed;
      for (int t = sz(rng); t-- > 0;) ed.tail.insert(dv(rng));
      for (int t = sz(rng); t-- > 0;) ed.head.insert(dv(rng));
      auto before = reachable_set(h, 0);
      h.edges.push_back(ed);
      auto after = reachable_set(h, 0);
      CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
    }
  }
}

TEST_CASE("smallest SCC: single node, incomparable pair, star") {
  DirectedHypergraph one;
  one.nodes = {5};
  auto s = smallest_scc(one);
  REQUIRE(s.has_value());
  CHECK(*s == std::set<std::size_t>{5});

  DirectedHypergraph two;
  two.nodes = {1, 2};
  CHECK_FALSE(smallest_scc(two).has_value());

  DirectedHypergraph star;
  star.nodes = {0, 1, 2, 3};
  for (std::size_t h = 1; h < 4; ++h) star.edges.push_back(Hyperedge{{h}, {0}});
  auto c = smallest_scc(star);
  REQUIRE(c.has_value());
  CHECK(*c == std::set<std::size_t>{0});
}

TEST_CASE("tangent hypergraph basics") {
  CHECK_THROWS_AS(tangent_hypergraph({}, Vector(2)), std::invalid_argument);

  Vector y{Scalar(0), Scalar(0)};
  TangentHypergraph empty = tangent_hypergraph({}, y);
  CHECK(empty.graph.nodes == std::set<std::size_t>{0, 1});
  CHECK(empty.graph.edges.empty());

  // single tight inequality x1 <= x2 at (0, 0): hyperedge ({2}, {1})
  Inequality q{basis_vector(2, 0), basis_vector(2, 1)};
  TangentHypergraph t = tangent_hypergraph({q}, y);
  REQUIRE(t.graph.edges.size() == 1);
  CHECK(t.graph.edges[0].tail == std::set<std::size_t>{1});
  CHECK(t.graph.edges[0].head == std::set<std::size_t>{0});
  CHECK(t.source_row == std::vector<std::size_t>{0});

  // slack inequality contributes nothing
  Inequality slack{basis_vector(2, 0), scalar_mul(Scalar(1), basis_vector(2, 1))};
  CHECK(tangent_hypergraph({slack}, y).graph.edges.empty());
}

TEST_CASE("is_extreme_general: error on violation, basic extremes") {
  InequalitySystem nonneg;  // x_j >= -inf for all j: every vector satisfies
  for (std::size_t j = 0; j < 3; ++j) nonneg.push_back({Vector(3), basis_vector(3, j)});
  CHECK(is_extreme_general(nonneg, basis_vector(3, 1)));

  Inequality tight{basis_vector(2, 0), basis_vector(2, 1)};  // x1 <= x2
  CHECK_THROWS_AS(is_extreme_general({tight}, Vector{Scalar(1), Scalar(0)}),
                  std::invalid_argument);
}

TEST_CASE("sum of two non-proportional extreme vectors is not extreme") {
  GeneratorCone k(matrix_g());
  auto rays = enumerate_ith_polar_extreme(k, 1);
  auto sys = ith_polar_system(k, 1);
  Vector mixed = sup(rays[3], rays[4]);  // (0,0,1) + (1,0,0)
  CHECK_FALSE(is_extreme_general(sys, mixed));
}

TEST_CASE("star test on the worked example") {
  GeneratorCone k(matrix_g());
  CHECK(star_test(k, 1, Vector{Scalar(1), Scalar(0), Scalar(0)}));
  CHECK_FALSE(star_test(k, 1, Vector{Scalar(1), Scalar(0), Scalar(Rat(1, 2))}));
  // all four enumerated type-2 extreme vectors pass
  for (std::size_t t = 2; t < 6; ++t)
    CHECK(star_test(k, 1, enumerate_ith_polar_extreme(k, 1)[t]));
  // vacuous case: only b_i finite
  GeneratorCone small(Matrix{{Scalar(0), Scalar(0)}});
  CHECK(star_test(small, 0, Vector{Scalar(0), Scalar(5)}));
  CHECK_THROWS_AS(star_test(k, 1, Vector{Scalar(0), bot, Scalar(0)}), std::invalid_argument);
  CHECK_THROWS_AS(star_test(k, 1, Vector{bot, Scalar(0), bot}), std::invalid_argument);
}

TEST_CASE("star test = general criterion = decomposition brute force") {
  int checked = 0;
  while (checked < 120) {
    GeneratorCone k = random_cone();
    std::uniform_int_distribution<std::size_t> di(0, k.dim() - 1);
    std::size_t i = di(rng);
    // candidates: emitted extreme vectors and perturbations of them
    auto rays = enumerate_ith_polar_extreme(k, i);
    for (const auto& b : rays) {
      if (b[i].is_bottom()) continue;
      bool st = star_test(k, i, b);
      bool gen = is_extreme_general(ith_polar_system(k, i), b);
      bool brute = brute_extreme(k, i, b);
      CHECK(st == gen);
      CHECK(st == brute);
      CHECK(st);  // enumerated rays must be extreme
      ++checked;
      // sup of two distinct rays is in the polar but not extreme
      for (const auto& other : rays) {
        if (other == b || other[i].is_bottom()) continue;
        Vector mix = sup(b, other);
        bool st2 = star_test(k, i, mix);
        bool gen2 = is_extreme_general(ith_polar_system(k, i), mix);
        CHECK(st2 == gen2);
        CHECK_FALSE(st2);
        ++checked;
        break;
      }
    }
  }
}
