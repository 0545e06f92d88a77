#include "courant/sampling.hpp"

#include <algorithm>

namespace courant {

namespace {

void enumerate(std::size_t var, std::size_t nvars, int remaining, Exponent& cur,
               std::vector<Exponent>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[var] = static_cast<std::uint32_t>(e);
    enumerate(var + 1, nvars, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponent> monomials_up_to(std::size_t nvars, int max_degree) {
  std::vector<Exponent> out;
  if (max_degree < 0) return out;
  Exponent cur(nvars, 0);
  enumerate(0, nvars, max_degree, cur, out);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  std::reverse(out.begin(), out.end());
  return out;
}

long Sampler::uniform(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

Scalar Sampler::scalar(Field field) {
  long re = uniform(-3, 3);
  if (field == Field::Rational) return Scalar(re);
  long im = uniform(-2, 2);
  return Scalar(mpq_class(re), mpq_class(im));
}

Polynomial Sampler::polynomial(std::size_t nvars, int max_degree, Field field) {
  Polynomial p(nvars);
  for (const auto& e : monomials_up_to(nvars, max_degree)) {
    if (!coin()) continue;
    p.add_term(e, scalar(field));
  }
  return p;
}

Polynomial Sampler::nonzero_polynomial(std::size_t nvars, int max_degree, Field field) {
  for (;;) {
    Polynomial p = polynomial(nvars, max_degree, field);
    if (!p.is_zero()) return p;
  }
}

VectorField Sampler::vector_field(const Chart& chart, int max_degree) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < chart->dimension(); ++i) {
    comps.push_back(polynomial(chart->dimension(), max_degree, chart->field()));
  }
  return VectorField(chart, std::move(comps));
}

DiffForm Sampler::form(const Chart& chart, std::size_t degree, int max_degree) {
  const std::size_t n = chart->dimension();
  DiffForm out(chart, degree);
  if (degree > n) return out;
  // enumerate increasing index tuples
  FormIndex idx(degree);
  for (std::size_t i = 0; i < degree; ++i) idx[i] = static_cast<std::uint32_t>(i);
  for (;;) {
    out.add_term(idx, polynomial(n, max_degree, chart->field()));
    if (degree == 0) break;
    std::size_t pos = degree;
    while (pos > 0 && idx[pos - 1] == n - degree + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < degree; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Section Sampler::section(std::size_t rank, const Chart& chart, int max_degree) {
  std::vector<Polynomial> coeffs;
  for (std::size_t i = 0; i < rank; ++i) {
    coeffs.push_back(polynomial(chart->dimension(), max_degree, chart->field()));
  }
  if (coeffs.empty()) return Section(0, chart->dimension());
  return Section(std::move(coeffs));
}

}  // namespace courant
