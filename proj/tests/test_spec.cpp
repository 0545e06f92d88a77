#include "doctest.h"
#include "oracles.hpp"

#include "courant/gallery.hpp"
#include "courant/regular.hpp"
#include "courant/spec.hpp"

using namespace courant;
using oracle::poly;

namespace {

template <class E>
E error_of(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const E& e) {
    return e;
  }
  FAIL("no error for: " << text);
  throw;
}

}  // namespace

TEST_CASE("minimal standard spec") {
  auto doc = parse_spec("chart rational x y z\nstructure E = standard\n");
  REQUIRE(doc.declarations.size() == 1);
  auto m = instantiate(doc);
  CHECK(m.structures.at("E") == make_standard(make_euclidean_chart(3)));
  CHECK(doc.locations[0].line == 2);
  CHECK(doc.locations[0].column == 11);
}

TEST_CASE("comments, blank lines and CRLF") {
  auto doc = parse_spec("# header\r\n\r\nchart rational x  # coordinates\r\nform f 1 = {dx: x^2}\r\n");
  CHECK(std::get<FormDecl>(doc.declarations[0]).form.str() == "x^2*dx");
}

TEST_CASE("syntax errors carry columns") {
  auto e = error_of<SyntaxError>("chart rational x\nform f 1 = {dx: 2x +}\n");
  CHECK(e.location.line == 2);
  CHECK(e.location.column == 21);
  CHECK(std::string(e.what()).rfind("2:21: syntax error:", 0) == 0);

  auto first = error_of<SyntaxError>("structure E = standard\n");
  CHECK(first.location.column == 1);
  CHECK(error_of<SyntaxError>("chart rational x\nstructure E = standrd\n").location.column == 15);
  CHECK(error_of<SyntaxError>("chart rational x\nform f 1 = {dx: 1\n").location.column == 17);
  CHECK(error_of<SyntaxError>("chart rational x\nstructure E = table\n labels a b\n").location.line == 2);
  CHECK(error_of<SyntaxError>("chart rational i\n").location.column == 16);
  CHECK(error_of<SyntaxError>("chart rational x\nbogus\n").location.line == 2);
}

TEST_CASE("asymmetric pairing is reported at the offending entry") {
  const char* text = R"(chart rational
structure E = table
  labels a b
  row 0, 1
  row 2, 0
end
)";
  auto e = error_of<ShapeMismatch>(text);
  CHECK(e.location.line == 5);
  CHECK(e.location.column == 7);
  CHECK(std::string(e.what()).find("not symmetric") != std::string::npos);

  auto singular = error_of<ShapeMismatch>("chart rational\nstructure E = table\n labels a b\n row 1, 0\n row 0, 0\nend\n");
  CHECK(std::string(singular.what()).find("singular") != std::string::npos);
  auto short_row = error_of<ShapeMismatch>("chart rational\nstructure E = table\n labels a b\n row 1\n row 0, 1\nend\n");
  CHECK(short_row.location.line == 4);
}

TEST_CASE("unknown names") {
  auto e = error_of<UnknownName>("chart rational x y z\nstructure E = twisted H\n");
  CHECK(e.location.line == 2);
  CHECK(e.location.column == 23);
  auto key = error_of<UnknownName>("chart rational x\nform f 1 = {dy: 1}\n");
  CHECK(key.location.column == 13);
  auto label = error_of<UnknownName>(
      "chart rational x\nstructure E = standard\nconnection c = E on E\n  entry d/dx q = 0\nend\n");
  CHECK(label.location.line == 4);
  CHECK(label.location.column == 14);
  auto pair = error_of<UnknownName>("chart rational x\nstructure E = standard\nmatched-pair P = E F 0 0\n");
  CHECK(pair.location.column == 20);
}

TEST_CASE("shape mismatches") {
  CHECK_THROWS_AS(parse_spec("chart rational x y\nform f 2 = {dx: 1}\n"), ShapeMismatch);
  CHECK_THROWS_AS(parse_spec("chart rational x y\nform f 2 = {dx^dx: 1}\n"), ShapeMismatch);
  CHECK_THROWS_AS(parse_spec("chart rational x y\nform f 1 = {dx: 1, dx: 2}\n"), ShapeMismatch);
  CHECK_THROWS_AS(parse_spec("chart rational x\nform f 1 = 0\nform f 1 = 0\n"), ShapeMismatch);
  CHECK_THROWS_AS(parse_spec("chart rational x y\nform f 1 = 0\nstructure E = twisted f\n"), ShapeMismatch);
  CHECK_THROWS_AS(parse_spec("chart rational x y\nform H 3 = 0\nstructure E = complex-standard H\n"), ShapeMismatch);
  CHECK_THROWS_AS(parse_spec("chart rational x y\nstructure T = standard\ndirac D = graph-bivector T\n row 0, 1\n "
                             "row 1, 0\nend\n"),
                  ShapeMismatch);
  CHECK_THROWS_AS(parse_spec("chart rational x y\nstructure T = standard\ndirac D = frame T\n element a = "
                             "{d/dx: 1}\n complement {dx: 1}\nend\n"),
                  ShapeMismatch);
}

TEST_CASE("library rejections become InvalidData at the declaration") {
  auto doc = parse_spec(find_gallery("nonclosed-r4")->text);
  try {
    instantiate(doc);
    FAIL("non-closed twist accepted");
  } catch (const InvalidData& e) {
    CHECK(e.location.line == 5);
    CHECK(std::string(e.what()).find("structure `E`") != std::string::npos);
  }
  CHECK_NOTHROW(instantiate(doc, true));

  auto cert = parse_spec("chart rational x\nstructure T = standard\ndirac D = frame T\n element a = {d/dx: 1}\n "
                         "complement {d/dx: x}\nend\n");
  CHECK_THROWS_AS(instantiate(cert), InvalidData);
}

TEST_CASE("gallery entries parse, print canonically and round trip") {
  std::vector<std::string> names;
  for (const auto& e : gallery_entries()) names.push_back(e.name);
  names.push_back("standard-r0");
  names.push_back("standard-r5");
  for (const auto& name : names) {
    CAPTURE(name);
    auto entry = find_gallery(name);
    REQUIRE(entry);
    CHECK_FALSE(entry->description.empty());
    CHECK_FALSE(entry->origin.empty());
    auto doc = parse_spec(entry->text);
    auto printed = print_spec(doc);
    auto again = parse_spec(printed);
    CHECK(again == doc);
    CHECK(print_spec(again) == printed);
    CHECK_NOTHROW(instantiate(doc, true));
  }
  CHECK_FALSE(find_gallery("standard-r"));
  CHECK_FALSE(find_gallery("standard-r03"));
  CHECK_FALSE(find_gallery("twisted-r4"));
}

TEST_CASE("printing a table structure") {
  auto doc = parse_spec(find_gallery("so3-point")->text);
  CHECK(print_spec(doc) == R"(chart rational

structure E = table
  labels g1 g2 g3
  row 1, 0, 0
  row 0, 1, 0
  row 0, 0, 1
  bracket g1 g2 = {g3: 1}
  bracket g1 g3 = {g2: -1}
  bracket g2 g1 = {g3: -1}
  bracket g2 g3 = {g1: 1}
  bracket g3 g1 = {g2: 1}
  bracket g3 g2 = {g1: -1}
end
)");
}

TEST_CASE("round trip keeps gaussian coefficients and lambda") {
  const char* text = R"(chart gaussian u v
form a 1 = {du: (1+2*i)*u - i*v^2/3}
structure S = table
  labels p q
  row 0, i
  row i, 0
  anchor p = {d/du: v}
  bracket p q = {p: 1/2}
end
connection c = S on S
  entry p q = {q: u}
end
matched-pair P = S S c 0
regular R
  algebra g
  row -1
  nabla d/du g = {g: v}
  lambda 3/2
end
)";
  auto doc = parse_spec(text);
  CHECK(parse_spec(print_spec(doc)) == doc);
  CHECK(std::get<RegularDecl>(doc.declarations.back()).lambda == Scalar(mpq_class(3, 2)));
  CHECK(print_spec(doc).find("form a 1 = {du: -1/3*i*v^2 + (1+2*i)*u}") != std::string::npos);
}

TEST_CASE("gallery objects match the library constructions") {
  auto m = instantiate(parse_spec(find_gallery("merker-r2")->text));
  auto c = m.chart;
  auto e1 = make_standard(c);
  ScalarMatrix g(4, 4);
  g(0, 2) = g(2, 0) = g(1, 3) = g(3, 1) = Scalar(1);
  auto v = make_trivial_structure(c, {"e1", "e2", "f1", "f2"}, g);
  std::vector<std::vector<Section>> t(4, std::vector<Section>(4, v.zero()));
  t[0][1] = poly(c, "y") * v.basis("e1");
  t[0][2] = poly(c, "-y") * v.basis("f2");
  t[1][1] = poly(c, "x") * v.basis("e1");
  t[1][2] = poly(c, "-x") * v.basis("f2");
  CHECK(m.pairs.at("P") == merker_pair(e1, v, t));
  CHECK(m.dirac.at("D1").rank() == 2);

  auto r = instantiate(parse_spec(find_gallery("regular-so3")->text)).regular.at("S");
  auto so3 = RegularData::trivial(r.chart, QuadraticLieBundle::so3());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t a = 0; a < 3; ++a) {
      const auto b = so3.lie.bracket(i, a);
      for (std::size_t k = 0; k < 3; ++k) so3.nabla[i][a][k] = Polynomial::constant(3, b[k]);
    }
  so3.curvature[0][1] = Section::basis(3, 3, 2);
  so3.curvature[1][0] = -Section::basis(3, 3, 2);
  so3.h.add_term({0, 1, 2}, poly(r.chart, "1"));
  CHECK(r.lie == so3.lie);
  CHECK(r.nabla == so3.nabla);
  CHECK(r.curvature == so3.curvature);
  CHECK(r.h == so3.h);

  auto cx = instantiate(parse_spec(find_gallery("complex-c2-h21")->text));
  REQUIRE(cx.complex);
  CHECK(cx.pairs.at("P") == build_complex_matched_pair(*cx.complex, cx.forms.at("H")));
}
