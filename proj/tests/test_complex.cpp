#include "doctest.h"
#include "oracles.hpp"

#include "courant/complex.hpp"

using namespace courant;
using oracle::poly;

namespace {

DiffForm three_form(const ComplexChart& cc, std::uint32_t a, std::uint32_t b, std::uint32_t c, const char* coeff = "1") {
  DiffForm h(cc.chart, 3);
  h.add_term({a, b, c}, poly(cc.chart, coeff));
  return h;
}

VectorField coord(const ComplexChart& cc, std::size_t i) { return VectorField::coordinate(cc.chart, i); }

Section conj_section(const ComplexChart& cc, const Section& s) {
  std::vector<Polynomial> out;
  for (const auto& c : s.coeffs()) out.push_back(cc.conjugate(c));
  return Section(out);
}

}  // namespace

TEST_CASE("complex charts and conjugation") {
  auto c1 = ComplexChart::make(1);
  CHECK(c1.chart->names() == std::vector<std::string>{"z", "zb"});
  CHECK(c1.chart->gaussian());
  auto c2 = ComplexChart::make(2);
  CHECK(c2.chart->names() == std::vector<std::string>{"z1", "z2", "zb1", "zb2"});
  CHECK(ComplexChart::wrap(c2.chart).n == 2);
  CHECK_THROWS_AS(ComplexChart::wrap(make_euclidean_chart(2)), InvalidStructure);

  const auto p = poly(c2.chart, "i*z1^2*zb2 + 3*z2 - 2*i");
  CHECK(c2.conjugate(p) == poly(c2.chart, "-i*zb1^2*z2 + 3*zb2 + 2*i"));
  CHECK(c2.conjugate(c2.conjugate(p)) == p);
  CHECK(c2.conjugate(p * p) == c2.conjugate(p) * c2.conjugate(p));

  auto h = three_form(c2, 0, 1, 2, "i*z1");
  // conj(i z1 dz1^dz2^dzb1) = -i zb1 dzb1^dzb2^dz1 = -i zb1 dz1^dzb1^dzb2
  CHECK(c2.conjugate(h) == three_form(c2, 0, 2, 3, "-i*zb1"));
  CHECK(pure_type(c2, h) == Bidegree{2, 1});
  CHECK_FALSE(pure_type(c2, h + three_form(c2, 0, 2, 3)).has_value());
  CHECK(project(c2, h + three_form(c2, 0, 2, 3), Bidegree{1, 2}) == three_form(c2, 0, 2, 3));
}

TEST_CASE("Dolbeault connections") {
  auto cc = ComplexChart::make(1);
  const auto& c = cc.chart;
  auto dz = coord(cc, 0), dzb = coord(cc, 1);
  CHECK(dolbeault_connection(cc, dz, dzb).is_zero());
  CHECK(dolbeault_connection(cc, poly(c, "zb") * dzb, dz).is_zero());
  // L_{d/dzb}(zb dz) = i_{d/dzb}(dzb^dz) + d(0) = dz
  auto beta = poly(c, "zb") * DiffForm::differential(c, 0);
  CHECK(dolbeault_connection(cc, dzb, beta) == DiffForm::differential(c, 0));
  // pr^{0,1}[d/dz, z d/dzb] = d/dzb
  CHECK(dolbeault_connection(cc, dz, poly(c, "z") * dzb) == dzb);
  // [zb^2 d/dzb, z zb d/dz] = z zb^2 d/dz
  CHECK(dolbeault_connection(cc, poly(c, "zb^2") * dzb, poly(c, "z*zb") * dz) == poly(c, "z*zb^2") * dz);

  CHECK_THROWS_AS(dolbeault_connection(cc, dz + dzb, dzb), MixedBidegree);
  CHECK_THROWS_AS(dolbeault_connection(cc, dz, dz), MixedBidegree);
  CHECK_THROWS_AS(dolbeault_connection(cc, dzb, beta + DiffForm::differential(c, 1)), MixedBidegree);
  CHECK(dolbeault_connection(cc, VectorField(c), dz).is_zero());
}

TEST_CASE("complex matched pair, n = 1") {
  auto cc = ComplexChart::make(1);
  DiffForm h(cc.chart, 3);
  auto mp = build_complex_matched_pair(cc, h);
  CHECK(mp.e1.labels() == std::vector<std::string>{"d/dz", "dz"});
  CHECK(mp.e2.labels() == std::vector<std::string>{"d/dzb", "dzb"});
  CHECK(mp.e1.tags()[0] == Bidegree{1, 0});
  CHECK(mp.e2.tags()[1] == Bidegree{0, 1});
  CHECK(check_matched_pair(mp).passed());
  auto iso = check_sum_isomorphism(mp, h, "complex-c1");
  CHECK(iso.passed());
  CHECK(iso.checks.size() == 3);
  CHECK(matched_sum(mp) == reorder(make_complex_standard(cc, h), {"d/dz", "dz", "d/dzb", "dzb"}));
}

TEST_CASE("complex matched pair, H of type (2,1)") {
  auto cc = ComplexChart::make(2);
  auto h = three_form(cc, 0, 1, 2);  // dz1^dz2^dzb1
  auto mp = build_complex_matched_pair(cc, h);
  const auto& c = cc.chart;
  // left_{d/dzb1} d/dz1 = H(d/dzb1, d/dz1, -) = dz2, left_{d/dzb1} d/dz2 = -dz1
  CHECK(mp.left.entry(0, 0) == mp.e1.basis("dz2"));
  CHECK(mp.left.entry(0, 1) == -mp.e1.basis("dz1"));
  CHECK(mp.left.entry(1, 0).is_zero());
  CHECK(mp.left.apply(poly(c, "z1") * mp.e2.basis("d/dzb1"), mp.e1.basis("d/dz1")) ==
        poly(c, "z1") * mp.e1.basis("dz2"));
  for (const auto& row : mp.right.table())
    for (const auto& s : row) CHECK(s.is_zero());
  // E1 and E2 are untwisted
  for (const auto& row : mp.e1.bracket_table())
    for (const auto& s : row) CHECK(s.is_zero());

  CHECK(check_matched_pair(mp).passed());
  CHECK(check_sum_isomorphism(mp, h).passed());

  auto broken = build_complex_matched_pair(cc, h, {true});
  auto report = check_sum_isomorphism(broken, h, "drop");
  CHECK_FALSE(report.passed());
  CHECK(report.find("pairing")->passed);
  CHECK(report.find("anchor")->passed);
  const auto* br = report.find("bracket");
  CHECK_FALSE(br->passed);
  REQUIRE(br->witness);
  CHECK(br->witness->source == WitnessSource::Frame);
  // Omega(d/dz1, d/dz2) loses its dzb1 component
  CHECK(br->witness->inputs == std::vector<std::pair<std::string, std::string>>{{"phi", "d/dz1"}, {"psi", "d/dz2"}});
  CHECK(br->witness->residual == "{dzb1: -1}");
}

TEST_CASE("complex matched pair, n = 3 holomorphic twist") {
  auto cc = ComplexChart::make(3);
  auto h = three_form(cc, 0, 1, 2);
  auto mp = build_complex_matched_pair(cc, h);
  CHECK(mp.e1.dorfman(mp.e1.basis("d/dz1"), mp.e1.basis("d/dz2")) == mp.e1.basis("dz3"));
  CHECK(mp.right == Connection::trivial(mp.e1, mp.e2));
  CHECK(mp.left == Connection::trivial(mp.e2, mp.e1));
  CHECK(check_sum_isomorphism(mp, h).passed());

  CHECK_THROWS_AS(build_complex_matched_pair(cc, three_form(cc, 0, 1, 2, "zb1")), NonClosedTwist);
}

TEST_CASE("mixed closed twist and conjugation symmetry") {
  auto cc = ComplexChart::make(2);
  // every bidegree but (3,0) and (0,3), with a non-constant (1,2) part
  DiffForm h = three_form(cc, 1, 2, 3, "zb1") + three_form(cc, 0, 1, 2, "i") + three_form(cc, 0, 2, 3, "2");
  REQUIRE(exterior_derivative(h).is_zero());
  auto mp = build_complex_matched_pair(cc, h);
  CHECK(check_matched_pair(mp).passed());
  CHECK(check_sum_isomorphism(mp, h).passed());

  auto mc = build_complex_matched_pair(cc, cc.conjugate(h));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(mc.e1.table_entry(i, j) == conj_section(cc, mp.e2.table_entry(i, j)));
      CHECK(mc.e2.table_entry(i, j) == conj_section(cc, mp.e1.table_entry(i, j)));
      CHECK(mc.right.entry(i, j) == conj_section(cc, mp.left.entry(i, j)));
      CHECK(mc.left.entry(i, j) == conj_section(cc, mp.right.entry(i, j)));
    }
}

TEST_CASE("Dolbeault flatness on random fields") {
  SampleSpec spec;
  spec.count = 32;
  auto report = check_dolbeault_flatness(ComplexChart::make(2), spec, "c2");
  CHECK(report.passed());
  CHECK(report.checks.size() == 4);
  for (const auto& c : report.checks) CHECK(c.instances == 32);
}

TEST_CASE("complex split round trips") {
  auto cc = ComplexChart::make(2);
  auto h = three_form(cc, 0, 1, 2);
  auto mp = build_complex_matched_pair(cc, h);
  auto sum = matched_sum(mp);
  std::vector<Section> u, w;
  for (std::size_t i = 0; i < 4; ++i) u.push_back(sum.basis(i));
  for (std::size_t i = 4; i < 8; ++i) w.push_back(sum.basis(i));
  CHECK(split(sum, u, mp.e1.labels(), w, mp.e2.labels()).pair == mp);

  auto c1 = ComplexChart::make(1);
  auto e = make_complex_standard(c1, DiffForm(c1.chart, 3));
  auto sp = split(e, {e.basis("d/dz"), e.basis("dz")}, {"d/dz", "dz"}, {e.basis("d/dzb"), e.basis("dzb")},
                  {"d/dzb", "dzb"});
  CHECK(matched_sum(sp.pair) == reorder(e, {"d/dz", "dz", "d/dzb", "dzb"}));
}
