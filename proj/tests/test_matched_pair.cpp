#include "doctest.h"
#include "oracles.hpp"

#include "courant/matched_pair.hpp"
#include "courant/sampling.hpp"

using namespace courant;
using oracle::poly;

namespace {

ScalarMatrix duality(std::size_t half) {
  ScalarMatrix g(2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) g(i, half + i) = g(half + i, i) = Scalar(1);
  return g;
}

// Standard structure on R^2 and V = E + E* of rank 4 with the flat
// connection theta = d(xy) N, N e2 = e1, acting on E* by minus the transpose.
MatchedPairData merker_r2() {
  auto c = make_euclidean_chart(2);
  auto e1 = make_standard(c);
  auto v = make_trivial_structure(c, {"e1", "e2", "f1", "f2"}, duality(2));
  std::vector<std::vector<Section>> t(4, std::vector<Section>(4, v.zero()));
  t[0][1] = poly(c, "y") * v.basis("e1");
  t[0][2] = poly(c, "-y") * v.basis("f2");
  t[1][1] = poly(c, "x") * v.basis("e1");
  t[1][2] = poly(c, "-x") * v.basis("f2");
  return merker_pair(e1, v, t);
}

// Same base, V of rank 2 with unit pairing and nabla_{d/dx} = y N, nabla_{d/dy} = 0
// where N v2 = v1, N v1 = -v2.
MatchedPairData non_flat() {
  auto c = make_euclidean_chart(2);
  auto e1 = make_standard(c);
  auto v = make_trivial_structure(c, {"v1", "v2"}, ScalarMatrix::identity(2));
  std::vector<std::vector<Section>> t(4, std::vector<Section>(2, v.zero()));
  t[0][1] = poly(c, "y") * v.basis("v1");
  t[0][0] = poly(c, "-y") * v.basis("v2");
  return merker_pair(e1, v, t);
}

}  // namespace

TEST_CASE("connection_apply examples") {
  auto line = make_chart({"t"});
  auto e = make_standard(line);
  auto v = make_trivial_structure(line, {"v1"}, ScalarMatrix::identity(1));
  auto trivial = Connection::trivial(e, v);
  Section tv = poly(line, "t") * v.basis(0);
  CHECK(trivial.apply(e.basis("d/dt"), tv) == v.basis(0));
  CHECK(trivial.apply(e.basis("dt"), tv).is_zero());

  std::vector<std::vector<Section>> table(2, std::vector<Section>(1, v.zero()));
  table[0][0] = v.basis(0);
  Connection one(e, v, table);
  CHECK(one.apply(poly(line, "t") * e.basis("d/dt"), v.basis(0)) == poly(line, "t") * v.basis(0));
  CHECK(connection_apply(one, e.basis("d/dt"), tv) == v.basis(0) + tv);
  CHECK_THROWS_AS(one.apply(v.basis(0), v.basis(0)), RankMismatch);
}

TEST_CASE("curvature examples") {
  auto mp = merker_r2();
  CHECK(curvature(Connection::trivial(mp.e1, mp.e2), mp.e1, mp.e2).is_zero());
  CHECK(curvature(mp.right, mp.e1, mp.e2).is_zero());

  auto nf = non_flat();
  auto r = curvature(nf.right, nf.e1, nf.e2);
  // R(d/dx, d/dy) v2 = -nabla_{d/dy}(y v1) = -v1
  CHECK(r.at(0, 1, 1, 0) == poly(nf.e1.chart(), "-1"));
  CHECK(r.at(1, 0, 1, 0) == poly(nf.e1.chart(), "1"));
  CHECK(r.at(0, 1, 0, 1) == poly(nf.e1.chart(), "1"));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) {
          CHECK(r.at(a, b, c, d) == -r.at(b, a, c, d));
          CHECK(r.at(a, b, c, d) == -r.at(a, b, d, c));
        }

  // over a point with zero brackets: nabla_{e_i} v_j = delta_ij v_1
  auto pt = make_chart({});
  auto d1 = make_trivial_structure(pt, {"e"}, ScalarMatrix::identity(1));
  auto a1 = make_trivial_structure(pt, {"v"}, ScalarMatrix::identity(1));
  Connection c1(d1, a1, {{a1.basis(0)}});
  CHECK(curvature(c1, d1, a1).is_zero());
  // rank 2 the compositions do not cancel: R(e1, e2) v2 = nabla_1 v1 = v1
  auto d2 = make_trivial_structure(pt, {"e1", "e2"}, ScalarMatrix::identity(2));
  auto a2 = make_trivial_structure(pt, {"v1", "v2"}, ScalarMatrix::identity(2));
  Connection c2(d2, a2, {{a2.basis(0), a2.zero()}, {a2.zero(), a2.basis(0)}});
  CHECK(curvature_apply(c2, d2, d2.basis(0), d2.basis(1), a2.basis(1)) == a2.basis(0));
}

TEST_CASE("Omega and Mho") {
  auto mp = merker_r2();
  const auto& c = mp.e1.chart();
  // left connection trivial
  CHECK(omega_map(mp, mp.e1.basis(0), mp.e1.basis(2)).is_zero());
  // <d/dx, Mho(e2, f1)> = 1/2 (y + y), <d/dy, Mho(e2, f1)> = x
  Section m = mho_map(mp, mp.e2.basis("e2"), mp.e2.basis("f1"));
  CHECK(m == poly(c, "y") * mp.e1.basis("dx") + poly(c, "x") * mp.e1.basis("dy"));
  CHECK(mho_map(mp, mp.e2.basis("f1"), mp.e2.basis("e2")) == -m);
  CHECK(mho_map(mp, mp.e2.basis("e1"), mp.e2.basis("f1")).is_zero());

  Sampler s(5);
  for (int n = 0; n < 10; ++n) {
    auto cand = random_matched_pair_candidate(s, 2);
    auto a = s.section(cand.e1.rank(), c, 2);
    auto b = s.section(cand.e1.rank(), c, 2);
    auto al = s.section(cand.e2.rank(), c, 2);
    auto be = s.section(cand.e2.rank(), c, 2);
    CHECK(omega_map(cand, a, b) == -omega_map(cand, b, a));
    CHECK(mho_map(cand, al, be) == -mho_map(cand, be, al));
  }
}

TEST_CASE("matched_sum reproduces the componentwise bracket") {
  auto mp = merker_r2();
  auto e = matched_sum(mp);
  CHECK(e.rank() == 8);
  const auto& c = e.chart();
  // flat-connection bracket: (0 + e2) <> (0 + f1) = d(xy) + 0
  CHECK(e.dorfman(e.basis("e2"), e.basis("f1")) == poly(c, "y") * e.basis("dx") + poly(c, "x") * e.basis("dy"));
  CHECK(e.dorfman(e.basis("d/dx"), e.basis("e2")) == poly(c, "y") * e.basis("e1"));

  Sampler s(17);
  std::vector<MatchedPairData> pairs{mp, non_flat()};
  for (int n = 0; n < 6; ++n) pairs.push_back(random_matched_pair_candidate(s, 2));
  for (const auto& p : pairs) {
    auto sum = matched_sum(p);
    const std::size_t k1 = p.e1.rank();
    for (int t = 0; t < 6; ++t) {
      auto phi = s.section(sum.rank(), c, 2);
      auto psi = s.section(sum.rank(), c, 2);
      CHECK(sum.dorfman(phi, psi) == oracle::full_bracket_direct(p, phi, psi));
    }
    // (a + 0) <> (0 + beta) = -left_beta a + right_a beta on frames
    for (std::size_t i = 0; i < k1; ++i) {
      for (std::size_t j = 0; j < p.e2.rank(); ++j) {
        Section expect = oracle::full_bracket_direct(p, sum.basis(i), sum.basis(k1 + j));
        CHECK(sum.dorfman(sum.basis(i), sum.basis(k1 + j)) == expect);
      }
    }
  }

  // rank-0 second factor gives E1 back
  auto pt0 = make_trivial_structure(mp.e1.chart(), {}, ScalarMatrix(0, 0));
  MatchedPairData trivial{mp.e1, pt0, Connection::trivial(mp.e1, pt0), Connection::trivial(pt0, mp.e1)};
  CHECK(matched_sum(trivial) == mp.e1);
}

TEST_CASE("check_matched_pair") {
  auto ok = check_matched_pair(merker_r2(), {}, "merker");
  CHECK(ok.passed());
  CHECK(ok.checks.size() == matched_pair_check_names().size());

  auto bad = check_matched_pair(non_flat());
  CHECK_FALSE(bad.passed());
  const auto* curv = bad.find("curvature_compat");
  REQUIRE(curv != nullptr);
  CHECK_FALSE(curv->passed);
  CHECK(curv->witness->source == WitnessSource::Frame);
  CHECK(bad.find("metric_right")->passed);
  CHECK(bad.find("d_flat_right")->passed);
}

TEST_CASE("split") {
  auto mp = merker_r2();
  auto e = matched_sum(mp);
  std::vector<Section> u, w;
  for (std::size_t i = 0; i < 4; ++i) u.push_back(e.basis(i));
  for (std::size_t i = 4; i < 8; ++i) w.push_back(e.basis(i));
  auto sp = split(e, u, mp.e1.labels(), w, mp.e2.labels());
  CHECK(sp.pair == mp);
  CHECK(matched_sum(sp.pair) == e);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(sp.mho[i][j] == mho_map(mp, mp.e2.basis(i), mp.e2.basis(j)));
      CHECK(sp.omega[i][j].is_zero());
    }

  // d/dx + e1 pairs with f1
  std::vector<Section> u2 = u;
  u2[0] = e.basis("d/dx") + e.basis("e1");
  CHECK_THROWS_AS(split(e, u2, mp.e1.labels(), w, mp.e2.labels()), NotOrthogonal);
  // the duality pairs the two halves
  auto s3 = make_standard(make_euclidean_chart(1));
  CHECK_THROWS_AS(split(s3, {s3.basis(0)}, {"a"}, {s3.basis(1)}, {"b"}), NotOrthogonal);
  auto r2 = make_trivial_structure(make_euclidean_chart(1), {"p", "q", "r"}, ScalarMatrix::identity(3));
  CHECK_THROWS_AS(split(r2, {r2.basis(0)}, {"a"}, {r2.basis(1)}, {"b"}), DegenerateRestriction);
  ScalarMatrix g = ScalarMatrix::identity(3);
  g(0, 0) = Scalar(0);
  g(0, 2) = g(2, 0) = Scalar(1);
  auto r3 = make_trivial_structure(make_euclidean_chart(1), {"p", "q", "r"}, g);
  CHECK_THROWS_AS(split(r3, {r3.basis(0)}, {"a"}, {r3.basis(1), r3.basis(2)}, {"b", "c"}), NotOrthogonal);
}
