#include "courant/complex.hpp"

#include "courant/sampling.hpp"

namespace courant {

namespace {

constexpr Bidegree kHol{1, 0};
constexpr Bidegree kAnti{0, 1};

std::vector<std::string> complex_names(std::size_t n) {
  if (n == 1) return {"z", "zb"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("zb" + std::to_string(i));
  return names;
}

std::optional<Bidegree> type_of_indices(const ComplexChart& cc, const FormIndex& idx) {
  int p = 0;
  for (auto i : idx) p += cc.holomorphic_index(i) ? 1 : 0;
  return Bidegree{p, static_cast<int>(idx.size()) - p};
}

// One half of the complexified standard structure: the (1,0) or (0,1)
// fields and forms, twisted by the pure part of H.
CourantStructure half_structure(const ComplexChart& cc, bool holomorphic, const DiffForm& h) {
  const std::size_t n = cc.n;
  const std::size_t nv = 2 * n;
  auto var = [&](std::size_t i) { return holomorphic ? cc.z(i) : cc.zbar(i); };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(vector_label(*cc.chart, var(i)));
  for (std::size_t i = 0; i < n; ++i) labels.push_back(form_label(*cc.chart, var(i)));
  ScalarMatrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) g(i, n + i) = g(n + i, i) = Scalar(1);
  std::vector<VectorField> anchor;
  for (std::size_t i = 0; i < n; ++i) anchor.push_back(VectorField::coordinate(cc.chart, var(i)));
  for (std::size_t i = 0; i < n; ++i) anchor.emplace_back(cc.chart);
  std::vector<std::vector<Section>> table(2 * n, std::vector<Section>(2 * n, Section(2 * n, nv)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        table[i][j][n + k] = h.coefficient({static_cast<std::uint32_t>(var(i)), static_cast<std::uint32_t>(var(j)),
                                            static_cast<std::uint32_t>(var(k))});
  const Bidegree tag = holomorphic ? kHol : kAnti;
  return CourantStructure(cc.chart, std::move(labels), std::move(g), std::move(anchor), std::move(table))
      .with_tags(std::vector<std::optional<Bidegree>>(2 * n, tag));
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexChart

ComplexChart ComplexChart::make(std::size_t n) {
  return ComplexChart{make_chart(complex_names(n), Field::GaussianRational), n};
}

ComplexChart ComplexChart::wrap(const Chart& chart) {
  const std::size_t d = chart->dimension();
  if (!chart->gaussian() || d % 2 != 0 || chart->names() != complex_names(d / 2))
    throw InvalidStructure("chart is not a complex chart (expected z/zb coordinates over Q(i))");
  return ComplexChart{chart, d / 2};
}

std::vector<std::size_t> ComplexChart::swap_permutation() const {
  std::vector<std::size_t> perm(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = n + i;
    perm[n + i] = i;
  }
  return perm;
}

Polynomial ComplexChart::conjugate(const Polynomial& p) const { return p.permute_variables(swap_permutation()).conj(); }

VectorField ComplexChart::conjugate(const VectorField& x) const {
  const auto perm = swap_permutation();
  VectorField out(chart);
  for (std::size_t i = 0; i < 2 * n; ++i) out[perm[i]] = conjugate(x[i]);
  return out;
}

DiffForm ComplexChart::conjugate(const DiffForm& form) const {
  const auto perm = swap_permutation();
  DiffForm out(chart, form.degree());
  for (const auto& [idx, coeff] : form.terms()) {
    FormIndex mapped;
    for (auto i : idx) mapped.push_back(static_cast<std::uint32_t>(perm[i]));
    const int sign = sort_with_sign(mapped);
    out.add_term(mapped, sign > 0 ? conjugate(coeff) : -conjugate(coeff));
  }
  return out;
}

// ---------------------------------------------------------------------------
// types and projections

std::optional<Bidegree> pure_type(const ComplexChart& cc, const VectorField& x) {
  bool hol = false, anti = false;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (x[i].is_zero()) continue;
    (cc.holomorphic_index(i) ? hol : anti) = true;
  }
  if (hol && anti) return std::nullopt;
  if (hol) return kHol;
  if (anti) return kAnti;
  return Bidegree{0, 0};
}

std::optional<Bidegree> pure_type(const ComplexChart& cc, const DiffForm& form) {
  std::optional<Bidegree> seen;
  for (const auto& [idx, coeff] : form.terms()) {
    auto t = type_of_indices(cc, idx);
    if (seen && !(*seen == *t)) return std::nullopt;
    seen = t;
  }
  return seen ? seen : Bidegree{0, 0};
}

VectorField project(const ComplexChart& cc, const VectorField& x, Bidegree type) {
  if (!(type == kHol) && !(type == kAnti)) throw MixedBidegree("vector fields have type (1,0) or (0,1)");
  VectorField out(cc.chart);
  for (std::size_t i = 0; i < x.dimension(); ++i)
    if (cc.holomorphic_index(i) == (type == kHol)) out[i] = x[i];
  return out;
}

DiffForm project(const ComplexChart& cc, const DiffForm& form, Bidegree type) {
  DiffForm out(cc.chart, form.degree());
  for (const auto& [idx, coeff] : form.terms())
    if (*type_of_indices(cc, idx) == type) out.add_term(idx, coeff);
  return out;
}

namespace {

// Types of (psi, v) for a Dolbeault connection; nullopt when either is zero.
std::optional<Bidegree> dolbeault_target(std::optional<Bidegree> tp, std::optional<Bidegree> tv) {
  if (!tp || !tv) throw MixedBidegree("Dolbeault connection needs inputs of pure type");
  const Bidegree zero{0, 0};
  if (*tp == zero || *tv == zero) return std::nullopt;
  if (*tp == *tv) throw MixedBidegree("Dolbeault connection needs inputs of opposite type");
  return tv;
}

}  // namespace

VectorField dolbeault_connection(const ComplexChart& cc, const VectorField& psi, const VectorField& v) {
  auto target = dolbeault_target(pure_type(cc, psi), pure_type(cc, v));
  if (!target) return VectorField(cc.chart);
  return project(cc, lie_bracket(psi, v), *target);
}

DiffForm dolbeault_connection(const ComplexChart& cc, const VectorField& psi, const DiffForm& beta) {
  if (beta.degree() != 1) throw MixedBidegree("Dolbeault connection acts on 1-forms");
  auto target = dolbeault_target(pure_type(cc, psi), pure_type(cc, beta));
  if (!target) return DiffForm(cc.chart, 1);
  return project(cc, lie_derivative(psi, beta), *target);
}

// ---------------------------------------------------------------------------

CourantStructure make_complex_standard(const ComplexChart& cc, const DiffForm& h, bool force) {
  auto e = make_twisted_standard(cc.chart, h, force);
  std::vector<std::optional<Bidegree>> tags;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 2 * cc.n; ++i) tags.emplace_back(cc.holomorphic_index(i) ? kHol : kAnti);
  return e.with_tags(std::move(tags));
}

MatchedPairData build_complex_matched_pair(const ComplexChart& cc, const DiffForm& h,
                                           const ComplexPairOptions& options) {
  require_same_chart(cc.chart, h.chart(), "build_complex_matched_pair");
  if (h.degree() != 3) throw Error("twisting form must have degree 3");
  if (!exterior_derivative(h).is_zero()) throw NonClosedTwist();
  const std::size_t n = cc.n;
  auto e1 = half_structure(cc, true, h);
  auto e2 = half_structure(cc, false, h);
  auto u = [](std::size_t i) { return static_cast<std::uint32_t>(i); };

  // frame part of nabla_X Y and nabla_X beta vanishes; only the H terms remain
  std::vector<std::vector<Section>> right(2 * n, std::vector<Section>(2 * n, e2.zero()));
  std::vector<std::vector<Section>> left(2 * n, std::vector<Section>(2 * n, e1.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // H^{1,2}(d/dz_i, d/dzb_j, d/dzb_k)
        right[i][j][n + k] = h.coefficient({u(cc.z(i)), u(cc.zbar(j)), u(cc.zbar(k))});
        // H^{2,1}(d/dzb_j, d/dz_i, d/dz_k)
        if (!options.omit_h21) left[j][i][n + k] = h.coefficient({u(cc.zbar(j)), u(cc.z(i)), u(cc.z(k))});
      }
  return MatchedPairData{e1, e2, Connection(e1, e2, std::move(right)), Connection(e2, e1, std::move(left))};
}

VerificationReport check_sum_isomorphism(const MatchedPairData& mp, const DiffForm& h, const std::string& subject) {
  const auto cc = ComplexChart::wrap(mp.e1.chart());
  const auto sum = matched_sum(mp);
  const auto standard = reorder(make_complex_standard(cc, h, true), sum.labels());
  const std::size_t k = sum.rank();

  VerificationReport report;
  report.subject = subject;
  auto pair_witness = [&](std::size_t i, std::size_t j, std::string residual) {
    return Witness{WitnessSource::Frame, {{"phi", sum.label(i)}, {"psi", sum.label(j)}}, std::move(residual)};
  };

  auto& pairing = report.add("pairing");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Scalar d = sum.pairing_matrix()(i, j) - standard.pairing_matrix()(i, j);
      pairing.record(d.is_zero(), [&] { return pair_witness(i, j, d.str()); });
    }
  auto& anchor = report.add("anchor");
  for (std::size_t i = 0; i < k; ++i) {
    const VectorField d = sum.anchor_rows()[i] - standard.anchor_rows()[i];
    anchor.record(d.is_zero(), [&] { return Witness{WitnessSource::Frame, {{"phi", sum.label(i)}}, d.str()}; });
  }
  auto& bracket = report.add("bracket");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Section d = sum.table_entry(i, j) - standard.table_entry(i, j);
      bracket.record(d.is_zero(), [&] { return pair_witness(i, j, sum.str(d)); });
    }
  return report;
}

VerificationReport check_dolbeault_flatness(const ComplexChart& cc, const SampleSpec& sample,
                                            const std::string& subject) {
  sample.validate();
  VerificationReport report;
  report.subject = subject;
  report.sample = sample;
  Sampler sampler(sample.seed);
  auto field = [&](Bidegree t) { return project(cc, sampler.vector_field(cc.chart, sample.max_degree), t); };
  auto form = [&](Bidegree t) { return project(cc, sampler.form(cc.chart, 1, sample.max_degree), t); };

  struct Case {
    const char* name;
    Bidegree direction;
    bool on_forms;
  };
  const Case cases[] = {{"field_10_on_01", kHol, false},
                        {"field_01_on_10", kAnti, false},
                        {"form_10_on_01", kHol, true},
                        {"form_01_on_10", kAnti, true}};
  for (const auto& c : cases) {
    auto& check = report.add(c.name);
    const Bidegree acted = c.direction == kHol ? kAnti : kHol;
    for (std::size_t t = 0; t < sample.count; ++t) {
      const auto x1 = field(c.direction);
      const auto x2 = field(c.direction);
      const auto x12 = lie_bracket(x1, x2);
      std::string input, residual;
      bool ok = false;
      if (c.on_forms) {
        const auto beta = form(acted);
        auto nab = [&](const VectorField& x, const DiffForm& b) { return dolbeault_connection(cc, x, b); };
        const DiffForm r = nab(x1, nab(x2, beta)) - nab(x2, nab(x1, beta)) - nab(x12, beta);
        ok = r.is_zero();
        if (!ok) input = beta.str(), residual = r.str();
      } else {
        const auto y = field(acted);
        auto nab = [&](const VectorField& x, const VectorField& v) { return dolbeault_connection(cc, x, v); };
        const VectorField r = nab(x1, nab(x2, y)) - nab(x2, nab(x1, y)) - nab(x12, y);
        ok = r.is_zero();
        if (!ok) input = y.str(), residual = r.str();
      }
      check.record(ok, [&] {
        return Witness{WitnessSource::Random, {{"x1", x1.str()}, {"x2", x2.str()}, {"v", input}}, residual};
      });
    }
  }
  return report;
}

}  // namespace courant
