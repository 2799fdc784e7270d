#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lensurg/diagram.hpp"
#include "support.hpp"

using namespace lensurg;
using namespace lensurg::test;

namespace {

bool has_code(const std::vector<Violation>& v, const std::string& code) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.code == code; });
}

}  // namespace

TEST_CASE("linking matrix of the fixtures") {
  const auto fig2 = load_diagram(fixture("fig2.json"));
  CHECK(linking_matrix(fig2) == fig2_m());
  CHECK(linking_matrix(load_diagram(fixture("fig2_reduced.json"))) == reduced_m());
  CHECK(linking_matrix(load_diagram(fixture("trefoil_tb-6_rot1.json"))) == int_matrix({{-7}}));
  CHECK(linking_matrix(load_diagram(fixture("empty.json"))).size() == 0);
}

TEST_CASE("linking matrix refuses incomplete linking data") {
  SurgeryDiagram d;
  d.components = {{"a", -1, 0, -1}, {"b", -1, 0, -1}};
  CHECK_THROWS_AS(linking_matrix(d), ValidationError);
  d.linking[{"a", "b"}] = 1;
  d.linking[{"b", "a"}] = 2;
  CHECK_THROWS_AS(linking_matrix(d), ValidationError);
}

TEST_CASE("extended matrix") {
  const auto fig2 = load_diagram(fixture("fig2.json"));
  CHECK(extended_matrix(fig2) == fig2_m0());

  auto unlinked = load_diagram(fixture("unlinked_knot.json"));
  const IntMatrix m0 = extended_matrix(unlinked);
  CHECK(m0.row(0).isZero());
  CHECK(m0.col(0).isZero());
  CHECK(m0.bottomRightCorner(1, 1) == linking_matrix(unlinked));

  CHECK_THROWS_AS(extended_matrix(load_diagram(fixture("empty.json"))), MissingKnotError);
}

TEST_CASE("validate") {
  CHECK(validate(load_diagram(fixture("fig2.json"))).empty());

  SurgeryDiagram tb_zero;
  tb_zero.components = {{"a", 0, 0, 1}};
  const auto w = validate(tb_zero);
  REQUIRE(w.size() == 1);
  CHECK(w[0].code == "d3-precondition");
  CHECK(w[0].severity == Severity::warning);
  CHECK(is_valid(w));

  SurgeryDiagram asym;
  asym.components = {{"a", -1, 0, -1}, {"b", -1, 0, -1}};
  asym.linking[{"a", "b"}] = 1;
  asym.linking[{"b", "a"}] = -1;
  CHECK(has_code(validate(asym), "linking-symmetry"));
  CHECK_FALSE(is_valid(validate(asym)));

  SurgeryDiagram bad;
  bad.components = {{"a", -1, 0, 2}, {"a", -1, 0, -1}, {"c", -2, 1, -1}};
  bad.set_linking("a", "zz", 1);
  bad.knot = DistinguishedKnot{"c", -1, 0, {{"a", 0}}};
  const auto v = validate(bad);
  CHECK(has_code(v, "contact-coeff"));
  CHECK(has_code(v, "duplicate-id"));
  CHECK(has_code(v, "linking-unknown-id"));
  CHECK(has_code(v, "linking-missing"));
  CHECK(has_code(v, "knot-id-collision"));
  CHECK(has_code(v, "knot-lk-missing"));
}

TEST_CASE("diagram files reject malformed input") {
  using nlohmann::json;
  CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"components": [], "extra": 1})")), ParseError);
  CHECK_THROWS_AS(diagram_from_json(json::parse(
                      R"({"components": [{"id": "a", "tb": -1, "rot": 0, "coeff": -1, "color": "red"}]})")),
                  ParseError);
  CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"components": [{"id": "a", "tb": "x", "rot": 0, "coeff": -1}]})")),
                  ParseError);
  const char* dup = R"({"components": [{"id": "a", "tb": -1, "rot": 0, "coeff": -1},
                                        {"id": "b", "tb": -1, "rot": 0, "coeff": -1}],
                        "linking": [{"a": "a", "b": "b", "lk": 1}, {"a": "b", "b": "a", "lk": 1}]})";
  CHECK_THROWS_AS(diagram_from_json(json::parse(dup)), ParseError);
  CHECK_THROWS_AS(load_diagram(fixture("does-not-exist.json")), ParseError);
}

TEST_CASE("json round trip preserves the diagram") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = random_diagram(rng, 1 + trial % 5, trial % 2 == 0);
    const auto back = diagram_from_json(nlohmann::json::parse(diagram_to_json(d).dump()));
    CHECK(linking_matrix(back) == linking_matrix(d));
    CHECK(back.rot_vector() == d.rot_vector());
    CHECK(back.q_plus() == d.q_plus());
    CHECK(back.knot.has_value() == d.knot.has_value());
    if (d.knot) CHECK(extended_matrix(back) == extended_matrix(d));
  }
}

TEST_CASE("promoting the knot puts it first with its own framing") {
  const auto p = promote_knot(load_diagram(fixture("fig2.json")));
  CHECK_FALSE(p.knot.has_value());
  IntMatrix expected = fig2_m0();
  expected(0, 0) = -2;
  CHECK(linking_matrix(p) == expected);
  CHECK(p.rot_vector() == int_vector({0, 0, 0, 1, 1, 0}));
  CHECK_THROWS_AS(promote_knot(load_diagram(fixture("empty.json"))), MissingKnotError);
}

TEST_CASE("reordering components conjugates the linking matrix") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto d = random_diagram(rng, n, true);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto p = permuted(d, order);

    const IntMatrix m = linking_matrix(d);
    const IntMatrix mp = linking_matrix(p);
    CHECK(mp == mp.transpose());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(mp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
              m(static_cast<Eigen::Index>(order[i]), static_cast<Eigen::Index>(order[j])));
    CHECK(det(mp) == det(m));
    CHECK(signature(mp) == signature(m));
    CHECK(Cokernel(mp).orders() == Cokernel(m).orders());
    CHECK(p.q_plus() == d.q_plus());

    const IntMatrix m0 = extended_matrix(d);
    CHECK(m0.bottomRightCorner(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) == m);
    CHECK(m0(0, 0) == 0);
  }
}
