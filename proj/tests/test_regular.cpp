#include "doctest.h"
#include "oracles.hpp"

#include "courant/regular.hpp"

using namespace courant;
using oracle::poly;

namespace {

Section g_section(const RegularData& rd, std::size_t a) { return Section::basis(rd.lie.rank(), rd.dimension(), a); }

void set_r(RegularData& rd, std::size_t i, std::size_t j, const Section& s) {
  rd.curvature[i][j] = s;
  rd.curvature[j][i] = -s;
}

// R^2, abelian rank 1 with K = (1), R(d/dx, d/dy) = g1.
RegularData abelian_r2() {
  auto rd = RegularData::trivial(make_euclidean_chart(2), QuadraticLieBundle::abelian({"g1"}, ScalarMatrix::identity(1)));
  set_r(rd, 0, 1, g_section(rd, 0));
  return rd;
}

// R^4, abelian rank 2 with off-diagonal K, R(d1, d2) = g1, R(d3, d4) = g2,
// H = 2 x1 dx2^dx3^dx4.
RegularData off_diagonal_r4() {
  ScalarMatrix k(2, 2);
  k(0, 1) = k(1, 0) = Scalar(1);
  auto c = make_euclidean_chart(4, false);
  auto rd = RegularData::trivial(c, QuadraticLieBundle::abelian({"g1", "g2"}, k));
  set_r(rd, 0, 1, g_section(rd, 0));
  set_r(rd, 2, 3, g_section(rd, 1));
  rd.h.add_term({1, 2, 3}, poly(c, "2*x1"));
  return rd;
}

// R^3 with so(3): nabla_x = ad g1, nabla_y = ad g2, nabla_z = 0,
// R(d/dx, d/dy) = g3, H = dx^dy^dz.
RegularData regular_so3() {
  auto c = make_euclidean_chart(3);
  auto rd = RegularData::trivial(c, QuadraticLieBundle::so3());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t a = 0; a < 3; ++a) {
      const auto v = rd.lie.bracket(i, a);
      Section s(3, 3);
      for (std::size_t b = 0; b < 3; ++b) s[b] = Polynomial::constant(3, v[b]);
      rd.nabla[i][a] = s;
    }
  set_r(rd, 0, 1, g_section(rd, 2));
  rd.h.add_term({0, 1, 2}, poly(c, "1"));
  return rd;
}

}  // namespace

TEST_CASE("quadratic Lie bundles") {
  auto so3 = QuadraticLieBundle::so3();
  CHECK_NOTHROW(so3.validate());
  CHECK(so3.bracket(0, 1) == std::vector<Scalar>{0, 0, 1});
  CHECK(so3.bracket(2, 1) == std::vector<Scalar>{-1, 0, 0});
  auto bad = QuadraticLieBundle::abelian({"g1", "g2"}, ScalarMatrix(2, 2));
  CHECK_THROWS_AS(bad.validate(), InvalidStructure);

  // broken Jacobi is a report failure, not a construction error
  auto rd = RegularData::trivial(make_chart({}), QuadraticLieBundle::so3());
  rd.lie.c[0][1][2] = Scalar(2);
  rd.lie.c[1][0][2] = Scalar(-2);
  auto report = check_regular_compat(rd);
  CHECK_FALSE(report.find("lie_algebra")->passed);
}

TEST_CASE("build_regular frame brackets") {
  auto rd = abelian_r2();
  auto e = build_regular(rd);
  CHECK(e.labels() == std::vector<std::string>{"dx", "dy", "g1", "d/dx", "d/dy"});
  CHECK(e.pairing(e.basis("g1"), e.basis("g1")) == poly(e.chart(), "2"));
  CHECK(e.dorfman(e.basis("d/dx"), e.basis("d/dy")) == e.basis("g1"));
  // -2 Q(d/dx, g1) = -2 K(g1, R(d/dx, d/dy)) dy
  CHECK(e.dorfman(e.basis("d/dx"), e.basis("g1")) == poly(e.chart(), "-2") * e.basis("dy"));
  CHECK(e.dorfman(e.basis("g1"), e.basis("d/dy")) == poly(e.chart(), "-2") * e.basis("dx"));
  CHECK(e.dorfman(e.basis("dx"), e.basis("d/dy")).is_zero());

  auto so3 = RegularData::trivial(make_chart({}), QuadraticLieBundle::so3());
  auto p = build_regular(so3);
  CHECK(p.dorfman(p.basis("g1"), p.basis("g2")) == p.basis("g3"));
  CHECK(p.dorfman(p.basis("g3"), p.basis("g2")) == -p.basis("g1"));

  // P(g_a, g_b) = 2 K(g_b, nabla g_a): <P(g2, g3), d/dx> = 2 K(g3, [g1, g2]) = 2
  auto s = build_regular(regular_so3());
  CHECK(s.dorfman(s.basis("g2"), s.basis("g3")) == s.basis("g1") + poly(s.chart(), "2") * s.basis("dx"));
}

TEST_CASE("compatibility conditions") {
  CHECK(check_regular_compat(abelian_r2()).passed());
  CHECK(check_regular_compat(off_diagonal_r4()).passed());
  CHECK(check_regular_compat(regular_so3()).passed());
  CHECK(check_regular_compat(abelian_r2()).checks.size() == regular_check_names().size());

  // nabla_{d/dx} g1 = g1 is not metric. On R^2 the Bianchi-type term is a
  // 3-form and vanishes identically.
  auto rd = abelian_r2();
  rd.nabla[0][0] = g_section(rd, 0);
  auto report = check_regular_compat(rd, {}, "broken");
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.find("metric")->passed);
  CHECK(report.find("metric")->witness->source == WitnessSource::Frame);
  CHECK(report.find("metric")->witness->residual == "-2");
  CHECK(report.find("bianchi")->passed);
  CHECK_THROWS_AS(build_regular(rd), IncompatibleData);
  CHECK_NOTHROW(build_regular(rd, true));

  // the sign of ad R matters
  auto flipped = regular_so3();
  set_r(flipped, 0, 1, -g_section(flipped, 2));
  auto fr = check_regular_compat(flipped);
  CHECK_FALSE(fr.find("curvature")->passed);
  CHECK(fr.find("metric")->passed);

  auto r4 = off_diagonal_r4();
  r4.h = DiffForm(r4.chart, 3);
  auto tw = check_regular_compat(r4);
  CHECK_FALSE(tw.find("twist")->passed);
  CHECK(tw.find("twist")->witness->residual == "-2*dx1^dx2^dx3^dx4");
}

TEST_CASE("C form") {
  auto r4 = off_diagonal_r4();
  DiffForm expect(r4.chart, 4);
  expect.add_term({0, 1, 2, 3}, poly(r4.chart, "2"));
  CHECK(pontryagin_form(r4) == expect);
  CHECK(exterior_derivative(r4.h) == expect);
  CHECK_FALSE(check_flat(r4));
  CHECK(check_flat(abelian_r2()));
  CHECK(check_flat(regular_so3()));
}

TEST_CASE("normalization audit") {
  auto rd = abelian_r2();
  auto audit = normalization_audit(rd);
  CHECK(audit.lambda == Scalar(2));
  REQUIRE(audit.candidates.size() == 3);
  CHECK_FALSE(audit.candidates[0].second);
  CHECK_FALSE(audit.candidates[1].second);
  CHECK(audit.candidates[2].second);

  // residual of <d/dx <> g1, d/dy> + <g1, d/dx <> d/dy> is lambda - 2
  for (const Scalar& lambda : {Scalar(mpq_class(1, 2)), Scalar(1), Scalar(2)}) {
    rd.lambda = lambda;
    auto e = build_regular(rd);
    CHECK(polarized_ad_invariance(e, e.basis("d/dx"), e.basis("g1"), e.basis("d/dy")) ==
          Polynomial::constant(2, Scalar(2) - lambda));
  }

  CHECK(normalization_audit(off_diagonal_r4()).lambda == Scalar(2));
  CHECK(normalization_audit(regular_so3()).lambda == Scalar(2));
  CHECK_THROWS_AS(normalization_audit(RegularData::trivial(make_chart({}), QuadraticLieBundle::so3())),
                  AmbiguousNormalization);
  auto broken = abelian_r2();
  broken.nabla[0][0] = g_section(broken, 0);
  CHECK_THROWS_AS(normalization_audit(broken), NoConsistentNormalization);
}

TEST_CASE("flat case as a matched pair") {
  for (const auto& rd : {abelian_r2(), regular_so3()}) {
    auto mp = flat_to_matched_pair(rd);
    CHECK(check_matched_pair(mp).passed());
    auto sum = reorder(matched_sum(mp), regular_labels(rd));
    auto e = build_regular(rd);
    for (std::size_t i = 0; i < e.rank(); ++i)
      for (std::size_t j = 0; j < e.rank(); ++j) CHECK(sum.table_entry(i, j) == e.table_entry(i, j));
    CHECK(sum == e);
  }
  CHECK_THROWS_AS(flat_to_matched_pair(off_diagonal_r4()), NotFlat);
  auto rd = abelian_r2();
  rd.nabla[0][0] = g_section(rd, 0);
  CHECK_THROWS_AS(flat_to_matched_pair(rd), IncompatibleData);
}
