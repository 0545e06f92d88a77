#include "courant/regular.hpp"

#include <array>

namespace courant {

namespace {

VectorField to_field(const Chart& chart, const Section& s) { return VectorField(chart, s.coeffs()); }

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// QuadraticLieBundle

std::vector<Scalar> QuadraticLieBundle::bracket(std::size_t i, std::size_t j) const {
  return c.at(i).at(j);
}

void QuadraticLieBundle::validate() const {
  const std::size_t m = rank();
  if (c.size() != m) throw InvalidStructure("structure constants: expected " + std::to_string(m) + " rows");
  for (const auto& row : c) {
    if (row.size() != m) throw InvalidStructure("structure constants: row of wrong length");
    for (const auto& v : row)
      if (v.size() != m) throw InvalidStructure("structure constants: entry of wrong length");
  }
  if (k.rows() != m || k.cols() != m) throw InvalidStructure("invariant pairing has wrong shape");
  if (!k.is_symmetric()) throw InvalidStructure("invariant pairing is not symmetric");
  if (m > 0 && !k.inverse()) throw InvalidStructure("invariant pairing is singular");
}

QuadraticLieBundle QuadraticLieBundle::abelian(std::vector<std::string> labels, ScalarMatrix k) {
  const std::size_t m = labels.size();
  QuadraticLieBundle out{std::move(labels), {}, std::move(k)};
  out.c.assign(m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m)));
  return out;
}

QuadraticLieBundle QuadraticLieBundle::so3(std::vector<std::string> labels) {
  if (labels.size() != 3) throw InvalidStructure("so(3) needs three labels");
  auto out = abelian(std::move(labels), ScalarMatrix::identity(3));
  const std::array<std::array<std::size_t, 3>, 3> cyc{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  for (const auto& t : cyc) {
    out.c[t[0]][t[1]][t[2]] = Scalar(1);
    out.c[t[1]][t[0]][t[2]] = Scalar(-1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RegularData

RegularData RegularData::trivial(const Chart& chart, QuadraticLieBundle lie) {
  const std::size_t n = chart->dimension();
  const std::size_t m = lie.rank();
  RegularData rd{chart, std::move(lie), {}, {}, DiffForm(chart, 3)};
  rd.nabla.assign(n, std::vector<Section>(m, Section(m, n)));
  rd.curvature.assign(n, std::vector<Section>(n, Section(m, n)));
  return rd;
}

void RegularData::validate() const {
  lie.validate();
  const std::size_t n = dimension();
  const std::size_t m = lie.rank();
  require_same_chart(chart, h.chart(), "regular data");
  if (h.degree() != 3) throw InvalidStructure("H must be a 3-form");
  if (nabla.size() != n) throw InvalidStructure("connection needs one row per coordinate");
  for (const auto& row : nabla) {
    if (row.size() != m) throw InvalidStructure("connection row has wrong length");
    for (const auto& s : row)
      if (s.rank() != m || s.nvars() != n) throw InvalidStructure("connection entry has wrong shape");
  }
  if (curvature.size() != n) throw InvalidStructure("R needs one row per coordinate");
  for (std::size_t i = 0; i < n; ++i) {
    if (curvature[i].size() != n) throw InvalidStructure("R row has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& s = curvature[i][j];
      if (s.rank() != m || s.nvars() != n) throw InvalidStructure("R entry has wrong shape");
      if (s != -curvature[j][i]) throw InvalidStructure("R is not antisymmetric");
    }
  }
}

Section RegularData::covariant(const VectorField& x, const Section& r) const {
  const std::size_t n = dimension();
  Section out(lie.rank(), n);
  for (std::size_t a = 0; a < r.rank(); ++a) {
    if (r[a].is_zero()) continue;
    out[a] += x.apply(r[a]);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero() || nabla[i][a].is_zero()) continue;
      out += (x[i] * r[a]) * nabla[i][a];
    }
  }
  return out;
}

Section RegularData::curvature_of(const VectorField& x, const VectorField& y) const {
  const std::size_t n = dimension();
  Section out(lie.rank(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || curvature[i][j].is_zero()) continue;
      out += (x[i] * y[j]) * curvature[i][j];
    }
  }
  return out;
}

Section RegularData::lie_bracket(const Section& r, const Section& s) const {
  const std::size_t m = lie.rank();
  Section out(m, dimension());
  for (std::size_t a = 0; a < m; ++a) {
    if (r[a].is_zero()) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (s[b].is_zero()) continue;
      Polynomial f = r[a] * s[b];
      for (std::size_t k = 0; k < m; ++k)
        if (!lie.c[a][b][k].is_zero()) out[k] += f * lie.c[a][b][k];
    }
  }
  return out;
}

Polynomial RegularData::k_pairing(const Section& r, const Section& s) const {
  Polynomial out(dimension());
  for (std::size_t a = 0; a < r.rank(); ++a) {
    if (r[a].is_zero()) continue;
    for (std::size_t b = 0; b < s.rank(); ++b)
      if (!lie.k(a, b).is_zero() && !s[b].is_zero()) out += (r[a] * s[b]) * lie.k(a, b);
  }
  return out;
}

// ---------------------------------------------------------------------------

DiffForm pontryagin_form(const RegularData& rd) {
  const std::size_t n = rd.dimension();
  DiffForm out(rd.chart, 4);
  const auto& r = rd.curvature;
  auto k = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) { return rd.k_pairing(r[a][b], r[c][d]); };
  // each of the three pair partitions occurs 8 times in the alternating sum
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      for (std::uint32_t l = j + 1; l < n; ++l)
        for (std::uint32_t q = l + 1; q < n; ++q) {
          Polynomial v = k(i, j, l, q) - k(i, l, j, q) + k(i, q, j, l);
          if (!v.is_zero()) out.add_term({i, j, l, q}, v * Scalar(2));
        }
  return out;
}

bool check_flat(const RegularData& rd) {
  rd.validate();
  return pontryagin_form(rd).is_zero();
}

const std::vector<std::string>& regular_check_names() {
  static const std::vector<std::string> names{"lie_algebra", "metric", "derivation",
                                              "bianchi",     "curvature", "twist"};
  return names;
}

CourantStructure lie_structure(const RegularData& rd) {
  const std::size_t m = rd.lie.rank();
  const std::size_t n = rd.dimension();
  ScalarMatrix g(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) g(a, b) = rd.lambda * rd.lie.k(a, b);
  std::vector<std::vector<Section>> table(m, std::vector<Section>(m, Section(m, n)));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t k = 0; k < m; ++k)
        table[a][b][k] = Polynomial::constant(n, rd.lie.c[a][b][k]);
  return CourantStructure(rd.chart, rd.lie.labels, std::move(g), std::vector<VectorField>(m, VectorField(rd.chart)),
                          std::move(table));
}

VerificationReport check_regular_compat(const RegularData& rd, const SampleSpec& sample, const std::string& subject) {
  sample.validate();
  rd.validate();
  const auto& chart = rd.chart;
  const std::size_t n = rd.dimension();
  std::vector<std::string> tangent_labels;
  for (std::size_t i = 0; i < n; ++i) tangent_labels.push_back(vector_label(*chart, i));
  const auto tangent = make_trivial_structure(chart, tangent_labels, ScalarMatrix::identity(n));
  const auto lie = lie_structure(rd);

  VerificationReport report;
  report.subject = subject;
  report.sample = sample;
  const auto& names = regular_check_names();
  auto S = [](const std::vector<Argument>& v, std::size_t i) -> const Section& { return section_arg(v[i]); };
  auto X = [&](const std::vector<Argument>& v, std::size_t i) { return to_field(chart, section_arg(v[i])); };
  std::uint64_t salt = 0;
  auto run = [&](const std::string& name, std::vector<Slot> slots, const TupleResidual& res) {
    run_tuple_check(report.add(name), slots, res, sample, salt++);
  };

  run(names[0], {Slot::section("r", lie), Slot::section("s", lie), Slot::section("t", lie)},
      [&](const std::vector<Argument>& v) -> std::optional<std::string> {
        const auto &r = S(v, 0), &s = S(v, 1), &t = S(v, 2);
        if (auto e = nonzero(lie, rd.lie_bracket(r, s) + rd.lie_bracket(s, r))) return "antisymmetry: " + *e;
        Section jac = rd.lie_bracket(r, rd.lie_bracket(s, t)) - rd.lie_bracket(rd.lie_bracket(r, s), t) -
                      rd.lie_bracket(s, rd.lie_bracket(r, t));
        if (auto e = nonzero(lie, jac)) return "jacobi: " + *e;
        if (auto e = nonzero(chart, rd.k_pairing(rd.lie_bracket(r, s), t) + rd.k_pairing(s, rd.lie_bracket(r, t))))
          return "invariance: " + *e;
        return std::nullopt;
      });
  run(names[1], {Slot::section("x", tangent), Slot::section("r", lie), Slot::section("s", lie)},
      [&](const std::vector<Argument>& v) {
        const auto x = X(v, 0);
        const auto &r = S(v, 1), &s = S(v, 2);
        return nonzero(chart, x.apply(rd.k_pairing(r, s)) - rd.k_pairing(rd.covariant(x, r), s) -
                                  rd.k_pairing(r, rd.covariant(x, s)));
      });
  run(names[2], {Slot::section("x", tangent), Slot::section("r", lie), Slot::section("s", lie)},
      [&](const std::vector<Argument>& v) {
        const auto x = X(v, 0);
        const auto &r = S(v, 1), &s = S(v, 2);
        return nonzero(lie, rd.covariant(x, rd.lie_bracket(r, s)) - rd.lie_bracket(rd.covariant(x, r), s) -
                                rd.lie_bracket(r, rd.covariant(x, s)));
      });
  run(names[3], {Slot::section("x", tangent), Slot::section("y", tangent), Slot::section("z", tangent)},
      [&](const std::vector<Argument>& v) {
        const std::array<VectorField, 3> f{X(v, 0), X(v, 1), X(v, 2)};
        Section out(rd.lie.rank(), n);
        for (std::size_t c = 0; c < 3; ++c) {
          const auto &x = f[c], &y = f[(c + 1) % 3], &z = f[(c + 2) % 3];
          out += rd.covariant(x, rd.curvature_of(y, z)) - rd.curvature_of(lie_bracket(x, y), z);
        }
        return nonzero(lie, out);
      });
  run(names[4], {Slot::section("x", tangent), Slot::section("y", tangent), Slot::section("r", lie)},
      [&](const std::vector<Argument>& v) {
        const auto x = X(v, 0), y = X(v, 1);
        const auto& r = S(v, 2);
        return nonzero(lie, rd.covariant(x, rd.covariant(y, r)) - rd.covariant(y, rd.covariant(x, r)) -
                                rd.covariant(lie_bracket(x, y), r) - rd.lie_bracket(rd.curvature_of(x, y), r));
      });

  auto& twist = report.add(names[5]);
  const DiffForm dh = exterior_derivative(rd.h);
  const DiffForm c = pontryagin_form(rd);
  const DiffForm diff = dh - c;
  twist.record(diff.is_zero(), [&] {
    return Witness{WitnessSource::Frame, {{"dH", dh.str()}, {"C", c.str()}}, diff.str()};
  });
  return report;
}

std::vector<std::string> regular_labels(const RegularData& rd) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rd.dimension(); ++i) out.push_back(form_label(*rd.chart, i));
  for (const auto& l : rd.lie.labels) out.push_back(l);
  for (std::size_t i = 0; i < rd.dimension(); ++i) out.push_back(vector_label(*rd.chart, i));
  return out;
}

CourantStructure build_regular(const RegularData& rd, bool force) {
  rd.validate();
  if (!force) {
    auto report = check_regular_compat(rd);
    if (!report.passed()) {
      std::vector<std::string> failed;
      for (const auto& c : report.checks)
        if (!c.passed) failed.push_back(c.name);
      throw IncompatibleData("regular data fails " + join(failed));
    }
  }
  const auto& chart = rd.chart;
  const std::size_t n = rd.dimension();
  const std::size_t m = rd.lie.rank();
  const std::size_t rank = 2 * n + m;
  auto gi = [&](std::size_t a) { return n + a; };
  auto vi = [&](std::size_t i) { return n + m + i; };

  ScalarMatrix g(rank, rank);
  for (std::size_t i = 0; i < n; ++i) g(i, vi(i)) = g(vi(i), i) = Scalar(1);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) g(gi(a), gi(b)) = rd.lambda * rd.lie.k(a, b);

  std::vector<VectorField> anchor(rank, VectorField(chart));
  for (std::size_t i = 0; i < n; ++i) anchor[vi(i)] = VectorField::coordinate(chart, i);

  std::vector<std::vector<Section>> table(rank, std::vector<Section>(rank, Section(rank, n)));
  auto place_g = [&](Section& dst, const Section& r) {
    for (std::size_t a = 0; a < m; ++a) dst[gi(a)] += r[a];
  };
  auto coordinate = [&](std::size_t i) { return VectorField::coordinate(chart, i); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Section& t = table[vi(i)][vi(j)];
      const auto h = insert_pair(coordinate(i), coordinate(j), rd.h).one_form_components();
      for (std::size_t k = 0; k < n; ++k) t[k] += h[k];
      place_g(t, rd.curvature[i][j]);
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Section& t = table[gi(a)][gi(b)];
      // <P(g_a, g_b), d/dx_k> = 2 K(g_b, nabla_k g_a)
      for (std::size_t k = 0; k < n; ++k) t[k] += rd.k_pairing(Section::basis(m, n, b), rd.nabla[k][a]) * Scalar(2);
      for (std::size_t c = 0; c < m; ++c) t[gi(c)] += Polynomial::constant(n, rd.lie.c[a][b][c]);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      Section t(rank, n);
      // -2 Q(d/dx_i, g_a), with <Q(x, r), d/dx_k> = K(r, R(x, d/dx_k))
      for (std::size_t k = 0; k < n; ++k) t[k] -= rd.k_pairing(Section::basis(m, n, a), rd.curvature[i][k]) * Scalar(2);
      place_g(t, rd.nabla[i][a]);
      table[vi(i)][gi(a)] = t;
      table[gi(a)][vi(i)] = -t;
    }
  return CourantStructure(chart, regular_labels(rd), std::move(g), std::move(anchor), std::move(table));
}

NormalizationAudit normalization_audit(const RegularData& rd, const SampleSpec& sample) {
  rd.validate();
  NormalizationAudit out;
  std::vector<Scalar> passing;
  for (const Scalar& lambda : {Scalar(mpq_class(1, 2)), Scalar(1), Scalar(2)}) {
    RegularData trial = rd;
    trial.lambda = lambda;
    const bool ok = check_axioms(build_regular(trial, true), sample).passed();
    out.candidates.emplace_back(lambda, ok);
    if (ok) passing.push_back(lambda);
  }
  if (passing.empty()) throw NoConsistentNormalization();
  if (passing.size() > 1) throw AmbiguousNormalization();
  out.lambda = passing.front();
  return out;
}

MatchedPairData flat_to_matched_pair(const RegularData& rd) {
  if (!check_flat(rd)) throw NotFlat();
  auto report = check_regular_compat(rd);
  if (!report.passed()) throw IncompatibleData("regular data fails its compatibility conditions");
  const auto& chart = rd.chart;
  const std::size_t n = rd.dimension();
  const std::size_t m = rd.lie.rank();
  auto e1 = make_twisted_standard(chart, rd.h);
  auto e2 = lie_structure(rd);

  std::vector<std::vector<Section>> right(2 * n, std::vector<Section>(m, e2.zero()));
  for (std::size_t i = 0; i < n; ++i) right[i] = rd.nabla[i];

  std::vector<std::vector<Section>> left(m, std::vector<Section>(2 * n, e1.zero()));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        left[a][i][n + k] = rd.k_pairing(Section::basis(m, n, a), rd.curvature[i][k]) * Scalar(2);

  return MatchedPairData{e1, e2, Connection(e1, e2, std::move(right)), Connection(e2, e1, std::move(left))};
}

}  // namespace courant
