#include "doctest.h"
#include "fpcube/cubes.hpp"
#include "fpcube/examples.hpp"

using namespace fpcube;

namespace {
FactorSpec abelian(int rank) {
  FactorSpec f;
  f.id = 0;
  f.kind = FactorKind::FreeAbelian;
  f.rank = rank;
  f.name = "a";
  return f;
}
FactorSpec free_factor(int rank) {
  FactorSpec f;
  f.id = 0;
  f.kind = FactorKind::Free;
  f.rank = rank;
  f.name = "x";
  return f;
}
}  // namespace

TEST_CASE("ball sizes") {
  auto zf = abelian(1);
  auto line = CubeModel::for_factor(zf);
  CubeBall lb(line, line.basepoint(), 2);
  CHECK(lb.vertices().size() == 5);
  CHECK(lb.edges().size() == 4);

  auto z2 = abelian(2);
  auto grid = CubeModel::for_factor(z2);
  CubeBall gb(grid, grid.basepoint(), 1);
  CHECK(gb.vertices().size() == 5);
  CHECK(gb.edges().size() == 4);
  CHECK(gb.faces().empty());

  auto f2 = free_factor(2);
  auto tree = CubeModel::for_factor(f2);
  CubeBall tb(tree, tree.basepoint(), 2);
  CHECK(tb.vertices().size() == 17);  // 1 + 4 + 12
}

TEST_CASE("geodesics are deterministic and shortest") {
  auto zf = abelian(1);
  auto line = CubeModel::for_factor(zf);
  auto p = line.geodesic(Elem{0}, Elem{3});
  CHECK(p.size() == 4);

  auto z2 = abelian(2);
  auto grid = CubeModel::for_factor(z2);
  auto q = grid.geodesic(Elem{0, 0}, Elem{2, 1});
  REQUIRE(q.size() == 4);
  // axis-1 steps before axis-2
  CHECK(q[1] == Elem{1, 0});
  CHECK(q[2] == Elem{2, 0});
  CHECK(q[3] == Elem{2, 1});
  CHECK(grid.geodesic(Elem{1, 1}, Elem{1, 1}).size() == 1);
}

TEST_CASE("group action on models") {
  auto zf = abelian(1);
  auto line = CubeModel::for_factor(zf);
  CHECK(line.act(Elem{2}, Elem{1}) == Elem{3});
  CHECK(line.act(Elem{0}, Elem{5}) == Elem{5});
  auto z2 = abelian(2);
  auto grid = CubeModel::for_factor(z2);
  CHECK(grid.act(Elem{1, -1}, Elem{0, 0}) == Elem{1, -1});

  auto f2 = free_factor(2);
  auto tree = CubeModel::for_factor(f2);
  Elem g{1, 2}, h{2, -1}, v{1};
  CHECK(tree.act(g, tree.act(h, v)) == tree.act(f2.mul(g, h), v));
  CHECK(tree.act(Elem{}, v) == v);
  // the action maps edges to edges
  Elem u1{1}, u2 = f2.mul(Elem{2}, u1);
  CHECK(tree.distance(tree.act(g, u1), tree.act(g, u2)) == 1);
}

TEST_CASE("hyperplanes: classes, sides, crossings") {
  auto zf = abelian(1);
  auto line = CubeModel::for_factor(zf);
  CubeBall lb(line, Elem{0}, 2);
  // middle edge {0,1}
  int e = -1;
  for (std::size_t i = 0; i < lb.edges().size(); ++i) {
    const auto& ed = lb.edges()[i];
    if ((lb.vertices()[static_cast<std::size_t>(ed.u)] == Elem{0} &&
         lb.vertices()[static_cast<std::size_t>(ed.v)] == Elem{1}) ||
        (lb.vertices()[static_cast<std::size_t>(ed.u)] == Elem{1} &&
         lb.vertices()[static_cast<std::size_t>(ed.v)] == Elem{0}))
      e = static_cast<int>(i);
  }
  REQUIRE(e >= 0);
  int h = lb.hyperplane_of(e);
  CHECK(lb.hyperplanes()[static_cast<std::size_t>(h)].edges.size() == 1);
  CHECK(lb.separates(h, lb.require_vertex(Elem{0}), lb.require_vertex(Elem{1})));
  CHECK_FALSE(lb.separates(h, lb.require_vertex(Elem{1}), lb.require_vertex(Elem{2})));

  auto z2 = abelian(2);
  auto grid = CubeModel::for_factor(z2);
  CubeBall gb(grid, Elem{0, 0}, 3);
  // all axis-1 edges from x=0 to x=1 belong to one class
  int h01 = -1;
  for (std::size_t i = 0; i < gb.edges().size(); ++i) {
    const auto& ed = gb.edges()[i];
    const Elem &u = gb.vertices()[static_cast<std::size_t>(ed.u)],
               &v = gb.vertices()[static_cast<std::size_t>(ed.v)];
    if (ed.direction == 1 && std::min(u[0], v[0]) == 0 && std::max(u[0], v[0]) == 1 && u[1] == v[1]) {
      int hh = gb.hyperplane_of(static_cast<int>(i));
      if (h01 < 0) h01 = hh;
      CHECK(hh == h01);
    }
  }
  // coordinate predicate agreement on a sample
  CHECK_FALSE(gb.separates(h01, gb.require_vertex(Elem{0, 2}), gb.require_vertex(Elem{0, -2})));
  CHECK(gb.separates(h01, gb.require_vertex(Elem{0, 0}), gb.require_vertex(Elem{1, 0})));

  auto f2 = free_factor(2);
  auto tree = CubeModel::for_factor(f2);
  CubeBall tb(tree, Elem{}, 2);
  for (const auto& hp : tb.hyperplanes()) CHECK(hp.edges.size() == 1);
}

TEST_CASE("hyperplane separation and geodesic crossing invariants") {
  auto z2 = abelian(2);
  auto grid = CubeModel::for_factor(z2);
  CubeBall gb(grid, Elem{0, 0}, 3);
  // every interior edge is separated by its own hyperplane
  for (std::size_t i = 0; i < gb.edges().size(); ++i) {
    const auto& ed = gb.edges()[i];
    int h = gb.hyperplane_of(static_cast<int>(i));
    CHECK(gb.separates(h, ed.u, ed.v));
  }
  // geodesics cross every hyperplane at most once, and the distance equals
  // the number of separating hyperplanes
  const auto& vs = gb.vertices();
  for (int a = 0; a < static_cast<int>(vs.size()); ++a)
    for (int b = a + 1; b < static_cast<int>(vs.size()); ++b) {
      std::vector<int> path;
      try {
        path = gb.geodesic_indices(a, b);
      } catch (const IncompleteError&) {
        continue;
      }
      long long sep = 0;
      for (const auto& hp : gb.hyperplanes()) {
        long long c = gb.crossings(hp.id, path);
        CHECK(c <= 1);
        if (gb.separates(hp.id, a, b)) ++sep;
      }
      CHECK(sep == static_cast<long long>(path.size()) - 1);
    }
}

TEST_CASE("models verify as CAT(0) and satisfy Helly for triples") {
  auto z2 = abelian(2);
  auto grid = CubeModel::for_factor(z2);
  CubeBall gb(grid, Elem{0, 0}, 3);
  CHECK_NOTHROW(gb.verify_cat0());
  CHECK(gb.check_helly_triples());

  auto z3 = abelian(3);
  auto g3 = CubeModel::for_factor(z3);
  CubeBall b3(g3, Elem{0, 0, 0}, 2);
  CHECK_NOTHROW(b3.verify_cat0());

  auto f2 = free_factor(2);
  auto tree = CubeModel::for_factor(f2);
  CubeBall tb(tree, Elem{}, 3);
  CHECK_NOTHROW(tb.verify_cat0());
}

TEST_CASE("point model for finite factors") {
  auto d = examples::dihedral7();
  auto m = CubeModel::for_factor(d.factors.factor(0));
  CHECK(m.geometry == CubeGeometry::Point);
  CubeBall b(m, m.basepoint(), 5);
  CHECK(b.vertices().size() == 1);
  CHECK(b.edges().empty());
}
