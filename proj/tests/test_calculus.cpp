#include "doctest.h"
#include "oracles.hpp"

#include "courant/calculus.hpp"
#include "courant/sampling.hpp"

using namespace courant;
using oracle::field;
using oracle::poly;

namespace {

Chart r3() { return make_euclidean_chart(3); }

DiffForm form(const Chart& c, std::initializer_list<std::pair<FormIndex, const char*>> terms,
              std::size_t degree) {
  DiffForm out(c, degree);
  for (const auto& [idx, text] : terms) out.add_term(idx, poly(c, text));
  return out;
}

}  // namespace

TEST_CASE("lie_bracket examples") {
  auto c = r3();
  CHECK(lie_bracket(field(c, {"1", "0", "0"}), field(c, {"0", "1", "0"})).is_zero());
  CHECK(lie_bracket(field(c, {"0", "x", "0"}), field(c, {"1", "0", "0"})) == field(c, {"0", "-1", "0"}));
  CHECK(lie_bracket(field(c, {"x", "0", "0"}), field(c, {"0", "x", "0"})) == field(c, {"0", "x", "0"}));
  CHECK_THROWS_AS(lie_bracket(field(c, {"1", "0", "0"}), VectorField(make_euclidean_chart(2))),
                  ChartMismatch);
}

TEST_CASE("exterior_derivative examples") {
  auto c = r3();
  CHECK(exterior_derivative(form(c, {{{1}, "x"}}, 1)) == form(c, {{{0, 1}, "1"}}, 2));
  CHECK(exterior_derivative(DiffForm::differential(c, 0)).is_zero());
  CHECK(exterior_derivative(form(c, {{{2}, "x*y"}}, 1)) ==
        form(c, {{{0, 2}, "y"}, {{1, 2}, "x"}}, 2));
  CHECK(exterior_derivative(form(c, {{{2}, "x*y"}}, 1)).str() == "y*dx^dz + x*dy^dz");
  // top degree: result is the zero form
  CHECK(exterior_derivative(form(c, {{{0, 1, 2}, "x^2"}}, 3)).is_zero());
}

TEST_CASE("interior_product and insert_pair examples") {
  auto c = r3();
  auto dxdy = form(c, {{{0, 1}, "1"}}, 2);
  auto dx = VectorField::coordinate(c, 0);
  auto dy = VectorField::coordinate(c, 1);
  CHECK(interior_product(dx, dxdy) == DiffForm::differential(c, 1));
  CHECK(interior_product(dy, dxdy) == -DiffForm::differential(c, 0));
  CHECK(insert_pair(dx, dy, form(c, {{{0, 1, 2}, "1"}}, 3)) == DiffForm::differential(c, 2));
  // degree too small gives the zero form, not an error
  CHECK(interior_product(dx, DiffForm::function(c, poly(c, "x"))).is_zero());
  CHECK(insert_pair(dx, dy, DiffForm::differential(c, 0)).is_zero());
}

TEST_CASE("lie_derivative examples") {
  auto c = r3();
  CHECK(lie_derivative(VectorField::coordinate(c, 0), form(c, {{{1}, "x"}}, 1)) ==
        DiffForm::differential(c, 1));
  CHECK(lie_derivative(field(c, {"x", "0", "0"}), DiffForm::differential(c, 0)) ==
        DiffForm::differential(c, 0));
  CHECK(lie_derivative(VectorField::coordinate(c, 2), form(c, {{{0, 1}, "1"}}, 2)).is_zero());
  // functions: L_X f = X(f)
  CHECK(lie_derivative(field(c, {"y", "0", "0"}), DiffForm::function(c, poly(c, "x^2"))) ==
        DiffForm::function(c, poly(c, "2*x*y")));
}

TEST_CASE("wedge is graded commutative and d is a graded derivation") {
  auto c = r3();
  Sampler s(3);
  for (int n = 0; n < 40; ++n) {
    std::size_t p = static_cast<std::size_t>(s.uniform(0, 2));
    std::size_t q = static_cast<std::size_t>(s.uniform(0, 1));
    auto a = s.form(c, p, 2);
    auto b = s.form(c, q, 2);
    auto ab = wedge(a, b);
    auto ba = wedge(b, a);
    CHECK(((p * q) % 2 == 0 ? ab == ba : ab == -ba));
    auto lhs = exterior_derivative(ab);
    auto rhs = wedge(exterior_derivative(a), b);
    if (p % 2 == 0) {
      rhs += wedge(a, exterior_derivative(b));
    } else {
      rhs -= wedge(a, exterior_derivative(b));
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("calculus identities on random inputs") {
  auto c = r3();
  Sampler s(2024);
  for (int n = 0; n < 60; ++n) {
    std::size_t p = static_cast<std::size_t>(s.uniform(0, 3));
    auto w = s.form(c, p, 3);
    auto x = s.vector_field(c, 2);
    auto y = s.vector_field(c, 2);
    auto z = s.vector_field(c, 2);
    CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
    CHECK(lie_derivative(x, w) == oracle::lie_derivative_direct(x, w));
    if (p >= 1) {
      CHECK(lie_derivative(x, interior_product(y, w)) - interior_product(y, lie_derivative(x, w)) ==
            interior_product(lie_bracket(x, y), w));
    }
    auto jac = lie_bracket(lie_bracket(x, y), z) + lie_bracket(lie_bracket(y, z), x) +
               lie_bracket(lie_bracket(z, x), y);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("forms are canonical: equal iff coefficient maps equal") {
  auto c = r3();
  DiffForm a(c, 2);
  a.add_term({1, 0}, poly(c, "x"));
  DiffForm b(c, 2);
  b.add_term({0, 1}, poly(c, "-x"));
  CHECK(a == b);
  a.add_term({0, 1}, poly(c, "x"));
  CHECK(a.is_zero());
  DiffForm rep(c, 2);
  rep.add_term({1, 1}, poly(c, "1"));
  CHECK(rep.is_zero());
}
