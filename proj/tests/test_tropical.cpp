#include <doctest.h>

#include <random>

#include "test_graphs.hpp"
#include "tropgenus/errors.hpp"
#include "tropgenus/linalg.hpp"
#include "tropgenus/tropical.hpp"

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

}  // namespace

TEST_CASE("weight validation") {
  CHECK_NOTHROW(validate_weights(qv({1, 2, 3})));
  CHECK_THROWS_AS(validate_weights(qv({1, 1, 2})), Error);
  CHECK_THROWS_AS(validate_weights(qv({0, 1, 2})), Error);
}

TEST_CASE("slot values of the four-cycle") {
  C4Fixture f;
  REQUIRE(f.circuits.size() == 1);
  const Circuit& c = f.circuits[0];

  auto x = slot_values(qv({0, 2, 3}), c, Side::X, f.w);
  REQUIRE(x.size() == 4);
  CHECK(x[0].slot == 0);  // the constant slot of the base edge
  CHECK(x[0].value == 0);
  CHECK(x[1].value == 0);
  CHECK(x[2].value == 2);
  CHECK(x[3].value == 3);

  auto y = slot_values(qv({0, 2, 3}), c, Side::Y, f.w);
  CHECK(y[0].value == 0);
  CHECK(y[1].value == 1);
  CHECK(y[2].value == 0);
  CHECK(y[3].value == 0);

  auto zero = slot_values(qv({0, 0, 0}), c, Side::X, f.w);
  for (const auto& s : zero) CHECK(s.value == 0);
}

TEST_CASE("curve membership on the four-cycle") {
  C4Fixture f;
  CHECK(on_curve(qv({0, 2, 3}), f.circuits, f.w));
  CHECK(!on_curve(qv({1, 2, 3}), f.circuits, f.w));  // X-side min attained once
  CHECK(on_curve(qv({0, 1, 3}), f.circuits, f.w));
  CHECK(!circuit_satisfied(qv({1, 2, 3}), f.circuits[0], Side::X, f.w));
  CHECK(circuit_satisfied(qv({1, 2, 3}), f.circuits[0], Side::Y, f.w));
}

TEST_CASE("face spans at the worked vertex") {
  C4Fixture f;
  QVector p = qv({0, 2, 3});

  FaceSpan x = face_span(p, f.circuits, Side::X, f.w);
  REQUIRE(x.equalities.size() == 1);
  CHECK(x.equalities[0].a == 1);
  CHECK(x.equalities[0].b == 0);
  CHECK(x.equalities[0].c == 0);  // u_1 = 0
  CHECK(x.basis.size() == 2);

  FaceSpan y = face_span(p, f.circuits, Side::Y, f.w);
  REQUIRE(y.equalities.size() == 2);
  // argmin = {const, slot 2, slot 3}: u_2 = 2 and u_3 = 3.
  CHECK(y.equalities[0].a == 2);
  CHECK(y.equalities[0].b == 0);
  CHECK(y.equalities[0].c == 2);
  CHECK(y.equalities[1].a == 3);
  CHECK(y.equalities[1].b == 0);
  CHECK(y.equalities[1].c == 3);
  CHECK(y.basis.size() == 1);

  FaceSpan origin = face_span(qv({0, 0, 0}), f.circuits, Side::X, f.w);
  CHECK(origin.basis.empty());  // all slots tie at zero
  CHECK(origin.equalities.size() == 3);
}

TEST_CASE("face span basis satisfies its homogeneous equalities") {
  C4Fixture f;
  for (const QVector& p : {qv({0, 2, 3}), qv({0, 1, 3})}) {
    for (Side side : {Side::X, Side::Y}) {
      FaceSpan span = face_span(p, f.circuits, side, f.w);
      for (const QVector& b : span.basis) {
        for (const auto& eq : span.equalities) {
          Rational lhs = b[eq.a - 1] - (eq.b == 0 ? Rational(0) : b[eq.b - 1]);
          CHECK(lhs == 0);
        }
      }
    }
  }
}

TEST_CASE("transversality on the four-cycle") {
  C4Fixture f;
  CHECK(transversal_at(qv({0, 2, 3}), f.circuits, f.w));
  CHECK(transversal_at(qv({0, 1, 3}), f.circuits, f.w));

  // Degenerate all-zero weights: both faces coincide, spans cannot fill R^3.
  QVector zero_w = qv({0, 0, 0});
  CHECK(!transversal_at(qv({0, 0, 0}), f.circuits, zero_w));

  CHECK_THROWS_AS(transversal_at(qv({1, 2, 3}), f.circuits, f.w), Error);
}

TEST_CASE("Y at p equals X at w - p") {
  C4Fixture f;
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    QVector p;
    for (int i = 0; i < 3; ++i)
      p.push_back(Rational(static_cast<int64_t>(gen() % 13) - 6,
                           1 + static_cast<int64_t>(gen() % 3)));
    QVector reflected;
    for (int i = 0; i < 3; ++i) reflected.push_back(f.w[i] - p[i]);
    for (const Circuit& c : f.circuits) {
      auto y = slot_values(p, c, Side::Y, f.w);
      auto x = slot_values(reflected, c, Side::X, f.w);
      REQUIRE(y.size() == x.size());
      for (size_t i = 0; i < y.size(); ++i) {
        CHECK(y[i].slot == x[i].slot);
        CHECK(y[i].value == x[i].value);
      }
    }
  }
}

TEST_CASE("base circuits have non-positive minima on the curve") {
  // For any on-curve point, every circuit through the base edge contains the
  // constant slot 0, so its minimum on both sides is at most zero.
  C4Fixture f;
  std::mt19937_64 gen(23);
  int on_curve_count = 0;
  for (int trial = 0; trial < 400; ++trial) {
    QVector p;
    for (int i = 0; i < 3; ++i)
      p.push_back(Rational(static_cast<int64_t>(gen() % 9) - 4));
    if (!on_curve(p, f.circuits, f.w)) continue;
    ++on_curve_count;
    for (const Circuit& c : f.circuits) {
      if (!c.contains_base) continue;
      for (Side side : {Side::X, Side::Y}) {
        auto slots = slot_values(p, c, side, f.w);
        Rational min = slots[0].value;
        for (const auto& s : slots) min = std::min(min, s.value);
        CHECK(min <= 0);
      }
    }
  }
  CHECK(on_curve_count > 0);
}
