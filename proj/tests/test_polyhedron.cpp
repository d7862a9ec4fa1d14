#include <doctest.h>

#include <random>

#include "alf/error.hpp"
#include "alf/polyhedron.hpp"
#include "oracles.hpp"

using namespace alf;

namespace {

LinearConstraint row(std::initializer_list<Rational> a, Rational c, bool strict) {
  return LinearConstraint{RationalVector(a), c, strict};
}

RationalPolyhedron random_polyhedron(std::mt19937_64& rng, std::size_t dim, int rows) {
  RationalPolyhedron p(dim);
  for (int i = 0; i < rows; ++i) p.add(oracle::random_row(rng, dim, 3, 2, 3, 2));
  return p;
}

void add_box(RationalPolyhedron& p) {
  const RationalPolyhedron box = half_open_box(p.dim());
  for (const auto& c : box.constraints()) p.add(c);
}

}  // namespace

TEST_CASE("constraint basics") {
  const auto c = row({-2, 2}, 0, true);
  CHECK(c.to_string() == "-2β1+2β2>0");
  CHECK(row({-1}, 1, false).to_string() == "-β1+1>=0");
  CHECK(row({0, 0}, 0, true).to_string() == "0>0");
  CHECK(row({ratio(1, 2), -1}, ratio(-3, 4), false).to_string() == "(1/2)β1-β2-3/4>=0");
  CHECK(c.evaluate(RationalVector{ratio(1, 4), ratio(1, 2)}) == ratio(1, 2));
  CHECK(c.satisfied_by(RationalVector{ratio(1, 4), ratio(1, 2)}));
  CHECK_FALSE(c.satisfied_by(RationalVector{1, 1}));
  CHECK(c.negated() == row({2, -2}, 0, false));
  RationalPolyhedron p(2);
  CHECK_THROWS_AS(p.add(row({1}, 0, false)), DimensionMismatch);
  CHECK(half_open_box(2).constraints().size() == 4);
}

TEST_CASE("emptiness examples") {
  CHECK(is_empty(RationalPolyhedron(1, {row({1}, 0, true), row({-1}, 0, true)})));
  CHECK_FALSE(is_empty(RationalPolyhedron(1, {row({1}, 0, false), row({-1}, 0, false)})));
  CHECK(is_empty(RationalPolyhedron(2, {row({0, 0}, 0, true)})));
  CHECK_FALSE(is_empty(RationalPolyhedron(0)));
  RationalPolyhedron aa = half_open_box(2);
  aa.add(row({-2, 2}, 0, true));
  CHECK_FALSE(is_empty(aa));
  CHECK(aa.contains(RationalVector{ratio(1, 4), ratio(1, 2)}));
}

TEST_CASE("closure, implication and equality") {
  const RationalPolyhedron open(1, {row({1}, 0, true)});
  CHECK(equals(closure(open), RationalPolyhedron(1, {row({1}, 0, false)})));
  CHECK_FALSE(equals(open, closure(open)));
  CHECK(equals(RationalPolyhedron(1, {row({1}, 0, false), row({1}, 1, false)}),
               RationalPolyhedron(1, {row({1}, 0, false)})));
  const RationalPolyhedron empty(1, {row({1}, 0, true), row({-1}, 0, true)});
  CHECK(is_empty(closure(empty)));
  CHECK(equals(empty, RationalPolyhedron(1, {row({0}, -1, false)})));
  CHECK(implies(half_open_box(2), row({1, 1}, 0, true)));
  CHECK_FALSE(implies(half_open_box(2), row({1, -1}, 0, true)));
  CHECK(implies(empty, row({1}, -5, true)));
  CHECK_THROWS_AS(equals(half_open_box(1), half_open_box(2)), DimensionMismatch);
}

TEST_CASE("equals is an equivalence relation") {
  std::mt19937_64 rng(99);
  std::vector<RationalPolyhedron> ps;
  for (int i = 0; i < 60; ++i) {
    auto p = random_polyhedron(rng, 2, 1 + i % 3);
    add_box(p);
    ps.push_back(p);
    // A reshuffled, rescaled and padded copy of the same set.
    RationalPolyhedron q(2);
    for (auto it = p.constraints().rbegin(); it != p.constraints().rend(); ++it) {
      LinearConstraint c = *it;
      for (auto& a : c.coefficients) a *= 3;
      c.constant *= 3;
      q.add(c);
    }
    q.add(row({0, 0}, 1, true));
    ps.push_back(q);
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(equals(ps[i], ps[i]));
    if (i % 2 == 0) CHECK(equals(ps[i], ps[i + 1]));
    for (std::size_t j = i + 1; j < std::min(ps.size(), i + 6); ++j) {
      CHECK(equals(ps[i], ps[j]) == equals(ps[j], ps[i]));
      for (std::size_t k = j + 1; k < std::min(ps.size(), i + 6); ++k)
        if (equals(ps[i], ps[j]) && equals(ps[j], ps[k])) CHECK(equals(ps[i], ps[k]));
    }
  }
}

TEST_CASE("redundancy removal keeps the set") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    RationalPolyhedron p = random_polyhedron(rng, dim, 2 + trial % 4);
    add_box(p);
    const auto reduced = remove_redundant(p);
    CHECK(reduced.constraints().size() <= p.constraints().size());
    CHECK(equals(reduced, p));
    if (!is_empty(p)) {
      // Irredundant: dropping any remaining row changes the set.
      for (std::size_t i = 0; i < reduced.constraints().size(); ++i) {
        RationalPolyhedron fewer(dim);
        for (std::size_t j = 0; j < reduced.constraints().size(); ++j)
          if (j != i) fewer.add(reduced.constraints()[j]);
        CHECK_FALSE(equals(fewer, reduced));
      }
    }
  }
  std::vector<bool> removable{true, true, false};
  const RationalPolyhedron p(1, {row({1}, 1, false), row({1}, 0, false), row({1}, 0, false)});
  CHECK(irredundant_indices(p, removable) == std::vector<std::size_t>{2});
}

TEST_CASE("infeasible core") {
  const RationalPolyhedron p(2, {row({1, 0}, -2, false), row({0, 1}, 0, true), row({1, 0}, 0, true),
                                 row({-1, 0}, 1, false)});
  const auto core = infeasible_core(p, {true, true, false, false});
  CHECK(core == std::vector<std::size_t>{0});
}

TEST_CASE("sample points") {
  const RationalPolyhedron unit(1, {row({1}, 0, true), row({-1}, 1, false)});
  const auto x = sample_point(unit);
  REQUIRE(x);
  CHECK(unit.contains(*x));
  RationalPolyhedron aa = half_open_box(2);
  aa.add(row({-4, 2}, 0, true));
  const auto y = sample_point(aa);
  REQUIRE(y);
  CHECK(2 * (*y)[1] > 4 * (*y)[0]);
  CHECK_FALSE(sample_point(RationalPolyhedron(1, {row({1}, 0, true), row({-1}, 0, true)})));
  const auto half_line = sample_point(RationalPolyhedron(1, {row({1}, -3, true)}));
  REQUIRE(half_line);
  CHECK((*half_line)[0] > 3);
}

TEST_CASE("vertices") {
  RationalPolyhedron aa = half_open_box(2);
  aa.add(row({-2, 2}, 0, true));
  using V = std::vector<RationalVector>;
  CHECK(vertices(aa) == V{{0, 0}, {0, 1}, {1, 1}});
  CHECK(vertices(half_open_box(2)) == V{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  aa.add(row({0, 0}, 0, true));
  CHECK(vertices(aa).empty());
  CHECK_THROWS_AS(vertices(RationalPolyhedron(1, {row({1}, 0, false)})), PreconditionError);
  CHECK(is_bounded(half_open_box(3)));
  CHECK_FALSE(is_bounded(RationalPolyhedron(1, {row({1}, 0, false)})));
}

TEST_CASE("vertices agree with subset enumeration") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    RationalPolyhedron p = random_polyhedron(rng, dim, 1 + trial % 4);
    add_box(p);
    // The closure of an empty set is empty even when relaxing its strict
    // rows would not be.
    if (is_empty(p))
      CHECK(vertices(p).empty());
    else
      CHECK(vertices(p) == oracle::brute_force_vertices(p));
  }
}

TEST_CASE("Fourier-Motzkin agrees with a coarse grid and its witnesses") {
  std::mt19937_64 rng(42);
  int nonempty = 0, empty = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    RationalPolyhedron p(dim);
    for (int i = 0; i < 2 + trial % 4; ++i) p.add(oracle::random_row(rng, dim, 5, 1, 5, 1));
    const bool fm_empty = is_empty(p);
    if (oracle::grid_point(p, 8)) CHECK_FALSE(fm_empty);
    const auto x = sample_point(p);
    CHECK(x.has_value() == !fm_empty);
    if (x) CHECK(p.contains(*x));
    (fm_empty ? empty : nonempty)++;
  }
  CHECK(empty > 10);
  CHECK(nonempty > 10);
}
