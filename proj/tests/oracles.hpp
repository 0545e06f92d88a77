#pragma once

// Test-only helpers and independent oracles. Nothing here calls into the code
// path it is used to check.

#include <string>

#include "courant/calculus.hpp"
#include "courant/courant.hpp"
#include "courant/expression.hpp"
#include "courant/matched_pair.hpp"

namespace oracle {

using namespace courant;

inline Polynomial poly(const Chart& chart, const std::string& text) {
  return parse_polynomial(text, *chart);
}

inline VectorField field(const Chart& chart, std::initializer_list<const char*> comps) {
  std::vector<Polynomial> out;
  for (const char* c : comps) out.push_back(poly(chart, c));
  return VectorField(chart, std::move(out));
}

/// All strictly increasing index tuples of length p below n.
inline std::vector<FormIndex> increasing_tuples(std::size_t n, std::size_t p) {
  std::vector<FormIndex> out;
  if (p > n) return out;
  FormIndex idx(p);
  for (std::size_t i = 0; i < p; ++i) idx[i] = static_cast<std::uint32_t>(i);
  for (;;) {
    out.push_back(idx);
    if (p == 0) break;
    std::size_t pos = p;
    while (pos > 0 && idx[pos - 1] == n - p + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Lie derivative by the transport formula
///   (L_X w)_I = X(w_I) + sum_k sum_j w_{I with i_k -> j} d_{i_k} X^j,
/// working on full component functions rather than d and i_X.
inline DiffForm lie_derivative_direct(const VectorField& x, const DiffForm& w) {
  const auto& chart = w.chart();
  const std::size_t n = chart->dimension();
  DiffForm out(chart, w.degree());
  for (const auto& idx : increasing_tuples(n, w.degree())) {
    Polynomial c = x.apply(w.coefficient(idx));
    for (std::size_t k = 0; k < idx.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        FormIndex moved = idx;
        moved[k] = static_cast<std::uint32_t>(j);
        Polynomial wc = w.coefficient(moved);
        if (wc.is_zero()) continue;
        c += wc * x[j].derivative(idx[k]);
      }
    }
    out.add_term(idx, c);
  }
  return out;
}

/// The H-twisted Dorfman bracket written out on vector and form parts:
///   (X + a) <> (Y + b) = [X, Y] + (L_X b - i_Y da + H(X, Y, -)).
inline Section twisted_bracket_direct(const CourantStructure& standard, const DiffForm& h,
                                      const Section& phi, const Section& psi) {
  VectorField x = vector_part(standard, phi);
  VectorField y = vector_part(standard, psi);
  DiffForm a = form_part(standard, phi);
  DiffForm b = form_part(standard, psi);
  DiffForm form = lie_derivative(x, b) - interior_product(y, exterior_derivative(a)) +
                  insert_pair(x, y, h);
  return standard_section(standard, lie_bracket(x, y), form);
}

/// The bracket of the direct sum written out component by component:
///   (a + alpha) <> (b + beta) =
///     (a <>1 b + left_alpha b - left_beta a + Mho(alpha, beta) + 1/2 D1 <alpha, beta>2)
///   + (alpha <>2 beta + right_a beta - right_b alpha + Omega(a, b) + 1/2 D2 <a, b>1)
/// Sections are given on the concatenated frame (E1 first).
inline Section full_bracket_direct(const MatchedPairData& mp, const Section& phi, const Section& psi) {
  const auto& e1 = mp.e1;
  const auto& e2 = mp.e2;
  const std::size_t k1 = e1.rank();
  const std::size_t k2 = e2.rank();
  auto part = [&](const Section& s, std::size_t begin, std::size_t count) {
    std::vector<Polynomial> c(s.coeffs().begin() + static_cast<std::ptrdiff_t>(begin),
                              s.coeffs().begin() + static_cast<std::ptrdiff_t>(begin + count));
    return Section(std::move(c));
  };
  Section a = part(phi, 0, k1), alpha = part(phi, k1, k2);
  Section b = part(psi, 0, k1), beta = part(psi, k1, k2);
  const Scalar half = Scalar::fraction(1, 2);
  Section first = e1.dorfman(a, b) + mp.left.apply(alpha, b) - mp.left.apply(beta, a) + mho_map(mp, alpha, beta) +
                  half * e1.d_operator(e2.pairing(alpha, beta));
  Section second = e2.dorfman(alpha, beta) + mp.right.apply(a, beta) - mp.right.apply(b, alpha) + omega_map(mp, a, b) +
                   half * e2.d_operator(e1.pairing(a, b));
  std::vector<Polynomial> out = first.coeffs();
  out.insert(out.end(), second.coeffs().begin(), second.coeffs().end());
  return Section(std::move(out));
}

}  // namespace oracle
