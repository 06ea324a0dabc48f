#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "tropic/cone.hpp"
#include "tropic/farkas.hpp"

using namespace tropic;

namespace {

const Scalar bot = Scalar::bottom();

// the 6x3 matrix from the worked polar example
Matrix matrix_g() {
  return Matrix{{Scalar(-3), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(-3), Scalar(0)},
                {Scalar(0), Scalar(0), Scalar(-3)}, {Scalar(1), Scalar(0), Scalar(0)},
                {Scalar(0), Scalar(1), Scalar(0)},  {Scalar(0), Scalar(0), Scalar(1)}};
}

// the 3x7 block construction (p = 3, q = 2)
Matrix block37() {
  auto s = [](int v) { return Scalar(v); };
  return Matrix{{s(5), s(4), s(1), s(1), s(1), s(1), s(0)},
                {s(1), s(1), s(5), s(4), s(1), s(1), s(0)},
                {s(1), s(1), s(1), s(1), s(5), s(4), s(0)}};
}

std::mt19937 rng(7101);

GeneratorCone random_cone(std::size_t max_p = 5, std::size_t max_n = 5) {
  std::uniform_int_distribution<std::size_t> dp(1, max_p), dn(1, max_n);
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

// brute-force minimal elements of Z_i over the finite grid of candidate
// thresholds per coordinate
std::vector<Vector> brute_minimal_z(const GeneratorCone& k, std::size_t i) {
  const Matrix& g = k.generators();
  const std::size_t n = g.cols();
  std::vector<std::size_t> support;
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (g(r, i).is_finite()) support.push_back(r);
  std::vector<std::size_t> js;
  std::vector<std::vector<Scalar>> cand;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    js.push_back(j);
    std::set<Rat> vals;
    for (std::size_t r : support)
      if (g(r, j).is_finite()) vals.insert(Rat(g(r, i).rat() - g(r, j).rat()));
    std::vector<Scalar> list{Scalar::bottom()};
    for (const auto& v : vals) list.push_back(Scalar(v));
    cand.push_back(std::move(list));
  }
  std::vector<Vector> members;
  Vector z(n);
  auto in_zi = [&](const Vector& zz) {
    for (std::size_t r : support) {
      Scalar lhs = Scalar::bottom();
      for (std::size_t j : js) lhs += zz[j] * g(r, j);
      if (!(g(r, i) <= lhs)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == js.size()) {
      if (in_zi(z)) members.push_back(z);
      return;
    }
    for (const auto& v : cand[t]) {
      z[js[t]] = v;
      self(self, t + 1);
    }
    z[js[t]] = Scalar::bottom();
  };
  rec(rec, 0);
  std::vector<Vector> mins;
  for (const auto& u : members) {
    bool dominated = false;
    for (const auto& w : members)
      if (!(w == u) && leq(w, u)) {
        dominated = true;
        break;
      }
    if (!dominated) mins.push_back(u);
  }
  std::sort(mins.begin(), mins.end(), [](const Vector& a, const Vector& b) {
    for (std::size_t t = 0; t < a.size(); ++t) {
      if (a[t] < b[t]) return true;
      if (b[t] < a[t]) return false;
    }
    return false;
  });
  mins.erase(std::unique(mins.begin(), mins.end()), mins.end());
  return mins;
}

std::vector<Vector> covers_to_vectors(const GeneratorCone& k, std::size_t i) {
  LevelChain chain = build_level_chains(k, i);
  std::vector<Vector> out;
  for (const auto& c : enumerate_minimal_covers(chain)) out.push_back(cover_to_vector(chain, c));
  std::sort(out.begin(), out.end(), [](const Vector& a, const Vector& b) {
    for (std::size_t t = 0; t < a.size(); ++t) {
      if (a[t] < b[t]) return true;
      if (b[t] < a[t]) return false;
    }
    return false;
  });
  return out;
}

}  // namespace

TEST_CASE("generator cone rejects a bottom column") {
  Matrix m{{Scalar(0), bot}, {Scalar(1), bot}};
  CHECK_THROWS_AS(GeneratorCone(m), std::invalid_argument);
}

TEST_CASE("classification is total and recognizes the three shapes") {
  std::size_t n = 3;
  auto low = Inequality{Vector(n), basis_vector(n, 1)};
  CHECK(classify(low).kind == InequalityKind::TrivialLower);
  CHECK(classify(low).i == 1);
  auto self = Inequality{basis_vector(n, 2), basis_vector(n, 2)};
  CHECK(classify(self).kind == InequalityKind::TrivialSelf);
  Vector z(n);
  z[0] = Scalar(1);
  auto ti = type_i_inequality(n, 1, z);
  CHECK(classify(ti).kind == InequalityKind::TypeI);
  CHECK(classify(ti).i == 1);
  Inequality gen{Vector{Scalar(0), Scalar(0), bot}, Vector{bot, bot, Scalar(0)}};
  CHECK(classify(gen).kind == InequalityKind::General);
}

TEST_CASE("cone membership: generators, bottom vector, and a brute-force point") {
  GeneratorCone k(matrix_g());
  for (std::size_t r = 0; r < 6; ++r) CHECK(cone_membership(k, k.generators().row(r)));
  CHECK(cone_membership(k, Vector(3)));
  // derived by brute force over integer lambda grids in [-5,5] + bottom
  CHECK(cone_membership(k, Vector{Scalar(0), Scalar(0), Scalar(0)}));
  CHECK_THROWS_AS(cone_membership(k, Vector(2)), std::invalid_argument);
  // a scaled generator belongs, a perturbed one generally does not
  CHECK(cone_membership(k, scalar_mul(Scalar(7), k.generators().row(0))));
}

TEST_CASE("cone membership agrees with brute-force combination search on small cones") {
  std::uniform_int_distribution<int> entry(-2, 2), pick(0, 2);
  for (int it = 0; it < 40; ++it) {
    GeneratorCone k = random_cone(3, 3);
    const std::size_t p = k.num_generators(), n = k.dim();
    // random tropical combination of generators must belong
    Vector x(n);
    for (std::size_t r = 0; r < p; ++r) {
      Scalar lam = pick(rng) == 0 ? Scalar::bottom() : Scalar(entry(rng));
      x = sup(x, scalar_mul(lam, k.generators().row(r)));
    }
    CHECK(cone_membership(k, x));
  }
}

TEST_CASE("polar membership on the worked example") {
  GeneratorCone k(matrix_g());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(polar_membership(k, Inequality{Vector(3), basis_vector(3, i)}));
    CHECK(polar_membership(k, Inequality{basis_vector(3, i), basis_vector(3, i)}));
  }
  CHECK(polar_membership(k, Inequality{basis_vector(3, 1), Vector{Scalar(3), bot, bot}}));
  CHECK_FALSE(polar_membership(k, Inequality{basis_vector(3, 1), Vector{Scalar(2), bot, bot}}));
}

TEST_CASE("i-th polar membership") {
  GeneratorCone k(matrix_g());
  for (std::size_t j = 0; j < 3; ++j)
    if (j != 1) CHECK(ith_polar_membership(k, 1, basis_vector(3, j)));
  CHECK_FALSE(ith_polar_membership(k, 1, basis_vector(3, 1)));
  CHECK(ith_polar_membership(k, 1, Vector{Scalar(1), Scalar(0), Scalar(0)}));
}

TEST_CASE("level chains: single-row cone") {
  GeneratorCone k(Matrix{{Scalar(0), Scalar(0)}});
  LevelChain chain = build_level_chains(k, 0);
  CHECK(chain.support == std::vector<std::size_t>{0});
  REQUIRE(chain.columns == std::vector<std::size_t>{1});
  REQUIRE(chain.chains[0].size() == 2);
  CHECK(chain.chains[0][0].threshold.is_bottom());
  CHECK(chain.chains[0][1].threshold == Scalar(0));
  CHECK(chain.chains[0][1].rows == std::vector<std::size_t>{0});
}

TEST_CASE("level chains of the 6x3 example at i = 2") {
  // frozen from a hand/brute evaluation of G_k2 - G_k1 per row
  GeneratorCone k(matrix_g());
  LevelChain chain = build_level_chains(k, 1);
  CHECK(chain.support == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
  REQUIRE(chain.columns == std::vector<std::size_t>{0, 2});
  const auto& c1 = chain.chains[0];
  REQUIRE(c1.size() == 6);
  CHECK(c1[0].threshold.is_bottom());
  CHECK(c1[1].threshold == Scalar(-3));
  CHECK(c1[1].rows == std::vector<std::size_t>{1});
  CHECK(c1[2].threshold == Scalar(-1));
  CHECK(c1[2].rows == std::vector<std::size_t>{1, 3});
  CHECK(c1[3].threshold == Scalar(0));
  CHECK(c1[3].rows == std::vector<std::size_t>{1, 2, 3, 5});
  CHECK(c1[4].threshold == Scalar(1));
  CHECK(c1[4].rows == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(c1[5].threshold == Scalar(3));
  CHECK(c1[5].rows == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("level chains of the block example at i = 7") {
  GeneratorCone k(block37());
  LevelChain chain = build_level_chains(k, 6);
  REQUIRE(chain.columns.size() == 6);
  const auto& c1 = chain.chains[0];  // column 1
  REQUIRE(c1.size() == 3);
  CHECK(c1[0].threshold.is_bottom());
  CHECK(c1[1].threshold == Scalar(-5));
  CHECK(c1[1].rows == std::vector<std::size_t>{0});
  CHECK(c1[2].threshold == Scalar(-1));
  CHECK(c1[2].rows == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("minimal covers: single-row example has exactly one") {
  GeneratorCone k(Matrix{{Scalar(0), Scalar(0)}});
  LevelChain chain = build_level_chains(k, 0);
  auto covers = enumerate_minimal_covers(chain);
  REQUIRE(covers.size() == 1);
  CHECK(covers[0].selection == std::vector<std::size_t>{1});
  CHECK(cover_to_vector(chain, covers[0]) == Vector{bot, Scalar(0)});
}

TEST_CASE("minimal covers of the 6x3 example at i = 2: the four z vectors") {
  GeneratorCone k(matrix_g());
  auto zs = covers_to_vectors(k, 1);
  std::vector<Vector> expect{Vector{bot, bot, Scalar(3)}, Vector{Scalar(0), bot, Scalar(1)},
                             Vector{Scalar(1), bot, Scalar(0)}, Vector{Scalar(3), bot, bot}};
  CHECK(zs == expect);
}

TEST_CASE("block example: the eight singleton-selection covers appear") {
  GeneratorCone k(block37());
  LevelChain chain = build_level_chains(k, 6);
  auto covers = enumerate_minimal_covers(chain);
  CHECK(covers.size() >= 8);
  std::set<std::vector<std::string>> got;
  for (const auto& c : covers) {
    Vector z = cover_to_vector(chain, c);
    std::vector<std::string> s;
    for (std::size_t j = 0; j < z.size(); ++j) s.push_back(z[j].str());
    got.insert(s);
  }
  // each block picks one of its two columns at threshold -5 or -4
  int found = 0;
  for (int c0 = 0; c0 < 2; ++c0)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int c2 = 0; c2 < 2; ++c2) {
        Vector z(7);
        z[0 + c0] = Scalar(c0 == 0 ? -5 : -4);
        z[2 + c1] = Scalar(c1 == 0 ? -5 : -4);
        z[4 + c2] = Scalar(c2 == 0 ? -5 : -4);
        std::vector<std::string> s;
        for (std::size_t j = 0; j < z.size(); ++j) s.push_back(z[j].str());
        if (got.count(s)) ++found;
      }
  CHECK(found == 8);
  // the specific singleton cover via columns 1, 3, 5
  std::vector<std::string> special{"-5", "-inf", "-5", "-inf", "-5", "-inf", "-inf"};
  CHECK(got.count(special) == 1);
}

TEST_CASE("cover/minimal-element bijection on random cones") {
  for (int it = 0; it < 60; ++it) {
    GeneratorCone k = random_cone();
    for (std::size_t i = 0; i < k.dim(); ++i) {
      auto via_covers = covers_to_vectors(k, i);
      auto brute = brute_minimal_z(k, i);
      REQUIRE(via_covers == brute);
    }
  }
}

TEST_CASE("emitted z vectors are valid and tight") {
  for (int it = 0; it < 25; ++it) {
    GeneratorCone k = random_cone();
    const Matrix& g = k.generators();
    for (std::size_t i = 0; i < k.dim(); ++i) {
      LevelChain chain = build_level_chains(k, i);
      for (const auto& cover : enumerate_minimal_covers(chain)) {
        Vector z = cover_to_vector(chain, cover);
        auto valid = [&](const Vector& zz) {
          for (std::size_t r = 0; r < g.rows(); ++r) {
            Scalar lhs = Scalar::bottom();
            for (std::size_t j = 0; j < k.dim(); ++j)
              if (j != i) lhs += zz[j] * g(r, j);
            if (!(g(r, i) <= lhs)) return false;
          }
          return true;
        };
        CHECK(valid(z));
        // stepping any finite coordinate down to the previous threshold breaks it
        for (std::size_t t = 0; t < chain.columns.size(); ++t) {
          if (cover.selection[t] == 0) continue;
          Vector down = z;
          down[chain.columns[t]] = chain.chains[t][cover.selection[t] - 1].threshold;
          CHECK_FALSE(valid(down));
        }
      }
    }
  }
}

TEST_CASE("polar enumeration: dimension one is just the trivial pair") {
  GeneratorCone k(Matrix{{Scalar(0)}});
  auto sys = enumerate_polar_extreme(k);
  REQUIRE(sys.size() == 2);
  CHECK(sys[0] == Inequality{Vector(1), basis_vector(1, 0)});
  CHECK(sys[1] == Inequality{basis_vector(1, 0), basis_vector(1, 0)});
}

TEST_CASE("polar enumeration of the 6x3 example") {
  GeneratorCone k(matrix_g());
  auto sys = enumerate_polar_extreme(k);
  // every emitted inequality lies in the polar
  for (const auto& q : sys) CHECK(polar_membership(k, q));
  // the i = 2 slice: four nontrivial inequalities
  InequalitySystem type2;
  for (const auto& q : sys) {
    auto cls = classify(q);
    if (cls.kind == InequalityKind::TypeI && cls.i == 1) type2.push_back(q);
  }
  REQUIRE(type2.size() == 4);
  auto ith = enumerate_ith_polar_extreme(k, 1);
  REQUIRE(ith.size() == 6);  // e^1, e^3 and the four extreme vectors
  CHECK(ith[0] == basis_vector(3, 0));
  CHECK(ith[1] == basis_vector(3, 2));
  CHECK(ith[2] == Vector{bot, Scalar(0), Scalar(3)});
  CHECK(ith[3] == Vector{Scalar(0), Scalar(0), Scalar(1)});
  CHECK(ith[4] == Vector{Scalar(1), Scalar(0), Scalar(0)});
  CHECK(ith[5] == Vector{Scalar(3), Scalar(0), bot});
}

TEST_CASE("scale invariance of the enumeration") {
  std::uniform_int_distribution<int> shift(-4, 4);
  for (int it = 0; it < 15; ++it) {
    GeneratorCone k = random_cone(4, 4);
    Matrix scaled = k.generators();
    for (std::size_t r = 0; r < scaled.rows(); ++r) {
      Scalar lam(shift(rng));
      for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(r, j) = lam * scaled(r, j);
    }
    CHECK(enumerate_polar_extreme(k) == enumerate_polar_extreme(GeneratorCone(scaled)));
  }
}

TEST_CASE("spread bound holds for emitted extreme vectors of the i-th polar") {
  for (int it = 0; it < 20; ++it) {
    GeneratorCone k = random_cone(4, 4);
    const std::size_t n = k.dim();
    for (std::size_t i = 0; i < n; ++i) {
      // the two-sided system defining the i-th polar, as matrices over b
      auto sys = ith_polar_system(k, i);
      Matrix a(0, n), b(0, n);
      for (const auto& q : sys) {
        a.push_row(q.a);
        b.push_row(q.b);
      }
      Rat bound = entry_spread_bound(a, b);
      for (const auto& vec : enumerate_ith_polar_extreme(k, i)) {
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t t = 0; t < n; ++t) {
            if (vec[s].is_bottom() || vec[t].is_bottom()) continue;
            Rat diff = vec[s].rat() - vec[t].rat();
            if (diff < 0) diff = -diff;
            CHECK(diff <= bound);
          }
      }
    }
  }
}

TEST_CASE("empty cover case: a support row no other column can reach") {
  // S_1 = {1} but row 1 is bottom outside column 1: no cover, no type-1 rays
  Matrix m{{Scalar(0), bot}, {bot, Scalar(0)}};
  GeneratorCone k(m);
  LevelChain chain = build_level_chains(k, 0);
  CHECK(enumerate_minimal_covers(chain).empty());
  auto sys = enumerate_polar_extreme(k);
  CHECK(sys.size() == 4);  // only the trivial inequalities
}
