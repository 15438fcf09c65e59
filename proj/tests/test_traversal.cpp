#include <doctest.h>

#include <map>
#include <set>

#include "test_graphs.hpp"
#include "tropgenus/errors.hpp"
#include "tropgenus/traversal.hpp"
#include "tropgenus/verify.hpp"

using namespace tropgenus;
using namespace tropgenus::testing;

namespace {

QVector qv(std::initializer_list<int> values) {
  QVector out;
  for (int v : values) out.push_back(Rational(v));
  return out;
}

struct C4Fixture {
  Graph g = make_cycle(4);
  std::vector<Circuit> circuits = enumerate_circuits(g);
  QVector w = qv({1, 2, 3});
};

std::set<QVector> vertex_set(const TropicalCurve& curve) {
  return {curve.vertices.begin(), curve.vertices.end()};
}

}  // namespace

TEST_CASE("blocks at the worked vertex") {
  C4Fixture f;
  BlockPartition blocks = blocks_at(qv({0, 2, 3}), f.circuits, f.w);
  CHECK(blocks.frozen == std::vector<int>{1});
  REQUIRE(blocks.free_blocks.size() == 2);
  CHECK(blocks.free_blocks[0] == std::vector<int>{2});
  CHECK(blocks.free_blocks[1] == std::vector<int>{3});

  // Edge-interior point: both sides freeze one coordinate each.
  BlockPartition interior = blocks_at(qv({0, 1, 3}), f.circuits, f.w);
  CHECK(interior.frozen == std::vector<int>{1, 3});
  REQUIRE(interior.free_blocks.size() == 1);
  CHECK(interior.free_blocks[0] == std::vector<int>{2});

  // A circuit whose minimum is attained three or more times contributes no
  // pair: at (0,0,3) the X-side minimum ties three ways, so coordinates 1
  // and 2 stay separate.
  BlockPartition triple = blocks_at(qv({0, 0, 3}), f.circuits, f.w);
  CHECK(triple.frozen == std::vector<int>{3});
  CHECK(triple.free_blocks.size() == 2);
}

TEST_CASE("candidate directions reproduce the worked example") {
  C4Fixture f;
  auto dirs = candidate_directions(qv({0, 2, 3}), f.circuits, f.w);
  std::set<Direction> expected = {{0, 1, 1}, {0, -1, 0}, {0, 0, -1}};
  CHECK(std::set<Direction>(dirs.begin(), dirs.end()) == expected);

  auto interior = candidate_directions(qv({0, 1, 3}), f.circuits, f.w);
  std::set<Direction> along_edge = {{0, 1, 0}, {0, -1, 0}};
  CHECK(std::set<Direction>(interior.begin(), interior.end()) == along_edge);

  auto at_far_end = candidate_directions(qv({0, 0, 3}), f.circuits, f.w);
  CHECK(std::count(at_far_end.begin(), at_far_end.end(), Direction{0, 1, 0}) == 1);
}

TEST_CASE("travel along the worked directions") {
  C4Fixture f;
  QVector v = qv({0, 2, 3});

  TravelOutcome down_y = travel(v, {0, -1, 0}, f.circuits, f.w);
  REQUIRE(down_y.bounded);
  CHECK(down_y.step == 2);
  CHECK(down_y.next == qv({0, 0, 3}));
  CHECK(on_curve(down_y.next, f.circuits, f.w));

  TravelOutcome down_z = travel(v, {0, 0, -1}, f.circuits, f.w);
  REQUIRE(down_z.bounded);
  CHECK(down_z.step == 3);
  CHECK(down_z.next == qv({0, 2, 0}));

  TravelOutcome ray = travel(v, {0, 1, 1}, f.circuits, f.w);
  CHECK(!ray.bounded);
  // Independent confirmation that the ray stays on the curve.
  for (int lambda : {1, 10, 100}) {
    QVector probe = v;
    probe[1] += lambda;
    probe[2] += lambda;
    CHECK(on_curve(probe, f.circuits, f.w));
  }

  CHECK_THROWS_AS(travel(v, {0, 1, 0}, f.circuits, f.w), Error);  // infeasible
}

TEST_CASE("traversal of the four-cycle curve") {
  C4Fixture f;
  StartPoint start;
  start.point = qv({0, 2, 3});
  start.face_dimension = 0;

  TropicalCurve curve = traverse(start, f.circuits, f.w);
  CHECK(curve.vertices.size() == 6);
  CHECK(curve.bounded_edges.size() == 6);
  CHECK(curve.rays.size() == 6);
  CHECK(genus(curve) == 1);
  CHECK(curve_connected(curve));
  CHECK(curve_inconsistency(curve, f.circuits, f.w) == "");
}

TEST_CASE("edge-interior start yields the identical curve") {
  C4Fixture f;
  StartPoint vertex_start;
  vertex_start.point = qv({0, 2, 3});
  vertex_start.face_dimension = 0;
  TropicalCurve from_vertex = traverse(vertex_start, f.circuits, f.w);

  StartPoint interior;
  interior.point = qv({0, 1, 3});
  interior.face_dimension = 1;
  TropicalCurve from_interior = traverse(interior, f.circuits, f.w);

  CHECK(vertex_set(from_vertex) == vertex_set(from_interior));
  CHECK(from_vertex.bounded_edges.size() == from_interior.bounded_edges.size());
  CHECK(from_vertex.rays.size() == from_interior.rays.size());
  CHECK(curve_inconsistency(from_interior, f.circuits, f.w) == "");
}

TEST_CASE("genus of simple shapes") {
  TropicalCurve tree;
  tree.vertices = {qv({0}), qv({1})};
  tree.bounded_edges.push_back({0, 1, {1}, Rational(1)});
  CHECK(genus(tree) == 0);

  C4Fixture f;
  StartPoint start;
  start.point = qv({0, 2, 3});
  CHECK(genus(traverse(start, f.circuits, f.w)) == 1);
}

TEST_CASE("floor and ceiling of edge-interior points stay on the curve") {
  C4Fixture f;
  StartPoint start;
  start.point = qv({0, 2, 3});
  TropicalCurve curve = traverse(start, f.circuits, f.w);

  for (const auto& e : curve.bounded_edges) {
    // Pick an interior point whose moving coordinates are non-integer.
    QVector probe;
    bool found = false;
    for (int denom : {2, 3, 5, 7, 11}) {
      Rational t = e.length / denom;
      if (denom == 2 && e.length == 1) t = e.length / 3;
      QVector candidate = curve.vertices[e.a];
      bool all_fractional = true;
      for (size_t i = 0; i < candidate.size(); ++i) {
        candidate[i] += t * e.direction[i];
        if (e.direction[i] != 0 && is_integer(candidate[i]))
          all_fractional = false;
      }
      if (all_fractional) {
        probe = candidate;
        found = true;
        break;
      }
    }
    REQUIRE(found);
    QVector floored(probe.size()), ceiled(probe.size());
    for (size_t i = 0; i < probe.size(); ++i) {
      floored[i] = Rational(floor_of(probe[i]));
      ceiled[i] = Rational(ceil_of(probe[i]));
    }
    CHECK(on_curve(floored, f.circuits, f.w));
    CHECK(on_curve(ceiled, f.circuits, f.w));
  }
}

TEST_CASE("compute_genus of the four-cycle and K_{2,3}") {
  PipelineConfig cfg;
  cfg.rng_seed = 7;

  GenusReport c4 = compute_genus(make_cycle(4), cfg);
  CHECK(c4.genus == 1);
  CHECK(c4.vertex_count == 6);
  CHECK(c4.bounded_edge_count == 6);
  CHECK(c4.ray_count == 6);

  GenusReport k23 = compute_genus(make_k2m(3), cfg);
  CHECK(k23.genus == 5);
}

TEST_CASE("compute_genus is seed independent") {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    PipelineConfig cfg;
    cfg.rng_seed = seed;
    CHECK(compute_genus(make_cycle(4), cfg).genus == 1);
    CHECK(compute_genus(make_k2m(3), cfg).genus == 5);
  }
}

TEST_CASE("curves carry the structural invariants") {
  PipelineConfig cfg;
  cfg.rng_seed = 3;
  for (const Graph& g : {make_cycle(4), make_k2m(3)}) {
    GenusReport report = compute_genus(g, cfg);
    auto circuits = enumerate_circuits(g);
    CHECK(curve_inconsistency(report.curve, circuits, report.weights) == "");
  }
}

TEST_CASE("pendant rigid parts do not change the genus") {
  PipelineConfig cfg;
  cfg.rng_seed = 12;
  GenusReport glued = compute_genus(make_c4_glued_triangle(), cfg);
  CHECK(glued.genus == 1);
}

TEST_CASE("the 2-bar linkage has genus zero") {
  Graph g = make_graph(3, {{0, 1}, {0, 2}}, {0, 1});
  PipelineConfig cfg;
  cfg.rng_seed = 5;
  GenusReport report = compute_genus(g, cfg);
  CHECK(report.genus == 0);
  CHECK(report.bounded_edge_count == 0);
}

TEST_CASE("parallel traversal matches single-threaded output") {
  PipelineConfig serial;
  serial.rng_seed = 9;
  PipelineConfig parallel = serial;
  parallel.threads = 4;
  GenusReport a = compute_genus(make_k2m(3), serial);
  GenusReport b = compute_genus(make_k2m(3), parallel);
  CHECK(a.genus == b.genus);
  CHECK(a.vertex_count == b.vertex_count);
  CHECK(a.curve.vertices == b.curve.vertices);  // wave merge keeps the order
}
