#include "courant/matched_pair.hpp"

#include <set>

#include "courant/sampling.hpp"

namespace courant {

// ---------------------------------------------------------------------------
// Connection

Connection::Connection(const CourantStructure& domain, const CourantStructure& acted,
                       std::vector<std::vector<Section>> table)
    : Connection(domain.chart(), domain.anchor_rows(), acted.rank(), std::move(table)) {
  require_same_chart(domain.chart(), acted.chart(), "connection");
}

Connection::Connection(Chart chart, std::vector<VectorField> domain_anchor, std::size_t acted_rank,
                       std::vector<std::vector<Section>> table)
    : chart_(std::move(chart)), anchor_(std::move(domain_anchor)), acted_rank_(acted_rank), table_(std::move(table)) {
  for (const auto& a : anchor_) require_same_chart(chart_, a.chart(), "connection anchor");
  if (table_.size() != anchor_.size()) throw RankMismatch("connection table has wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != acted_rank_) throw RankMismatch("connection table row has wrong length");
    for (const auto& s : row) {
      if (s.rank() != acted_rank_) throw RankMismatch("connection table entry has wrong rank");
      if (acted_rank_ > 0 && s.nvars() != chart_->dimension()) throw ChartMismatch("connection table entry");
    }
  }
}

Connection Connection::trivial(const CourantStructure& domain, const CourantStructure& acted) {
  return Connection(domain, acted, std::vector<std::vector<Section>>(domain.rank(), std::vector<Section>(acted.rank(), acted.zero())));
}

Section Connection::apply(const Section& psi, const Section& v) const {
  if (psi.rank() != domain_rank()) throw RankMismatch("connection direction");
  if (v.rank() != acted_rank_) throw RankMismatch("connection argument");
  const std::size_t n = chart_->dimension();
  Section out(acted_rank_, n);
  VectorField x(chart_);
  for (std::size_t i = 0; i < psi.rank(); ++i) {
    if (!psi[i].is_zero()) x += psi[i] * anchor_[i];
  }
  for (std::size_t j = 0; j < acted_rank_; ++j) {
    if (v[j].is_zero()) continue;
    out[j] += x.apply(v[j]);
    for (std::size_t i = 0; i < psi.rank(); ++i) {
      if (psi[i].is_zero() || table_[i][j].is_zero()) continue;
      out += (psi[i] * v[j]) * table_[i][j];
    }
  }
  return out;
}

Section connection_apply(const Connection& nabla, const Section& psi, const Section& v) {
  return nabla.apply(psi, v);
}

// ---------------------------------------------------------------------------
// curvature

CurvatureTensor::CurvatureTensor(std::size_t domain_rank, std::size_t acted_rank, std::size_t nvars)
    : kd_(domain_rank), ka_(acted_rank), values_(kd_ * kd_ * ka_ * ka_, Polynomial(nvars)) {}

const Polynomial& CurvatureTensor::at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
  return values_.at(((a * kd_ + b) * ka_ + c) * ka_ + d);
}

Polynomial& CurvatureTensor::at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return values_.at(((a * kd_ + b) * ka_ + c) * ka_ + d);
}

bool CurvatureTensor::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Section curvature_apply(const Connection& nabla, const CourantStructure& domain, const Section& a,
                        const Section& b, const Section& v) {
  return nabla.apply(a, nabla.apply(b, v)) - nabla.apply(b, nabla.apply(a, v)) - nabla.apply(domain.dorfman(a, b), v);
}

CurvatureTensor curvature(const Connection& nabla, const CourantStructure& domain, const CourantStructure& acted) {
  CurvatureTensor t(domain.rank(), acted.rank(), domain.nvars());
  for (std::size_t a = 0; a < domain.rank(); ++a) {
    for (std::size_t b = 0; b < domain.rank(); ++b) {
      for (std::size_t c = 0; c < acted.rank(); ++c) {
        Section r = curvature_apply(nabla, domain, domain.basis(a), domain.basis(b), acted.basis(c));
        for (std::size_t d = 0; d < acted.rank(); ++d) t.at(a, b, c, d) = acted.pairing(r, acted.basis(d));
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// matched pairs

void MatchedPairData::validate() const {
  require_same_chart(e1.chart(), e2.chart(), "matched pair");
  if (right.domain_rank() != e1.rank() || right.acted_rank() != e2.rank()) {
    throw RankMismatch("right connection does not act E1 on E2");
  }
  if (left.domain_rank() != e2.rank() || left.acted_rank() != e1.rank()) {
    throw RankMismatch("left connection does not act E2 on E1");
  }
}

namespace {

// Solves <e_i, s> = w_i for s.
Section raise(const CourantStructure& e, const std::vector<Polynomial>& w) {
  Section out = e.zero();
  const auto& inv = e.pairing_inverse();
  for (std::size_t i = 0; i < e.rank(); ++i) {
    for (std::size_t j = 0; j < e.rank(); ++j) {
      if (inv(i, j).is_zero() || w[j].is_zero()) continue;
      out[i] += w[j] * inv(i, j);
    }
  }
  return out;
}

Section join(const Section& a, const Section& b) {
  std::vector<Polynomial> c = a.coeffs();
  c.insert(c.end(), b.coeffs().begin(), b.coeffs().end());
  if (c.empty()) return Section(0, a.nvars());
  return Section(std::move(c));
}

Section slice(const Section& s, std::size_t begin, std::size_t count, std::size_t nvars) {
  if (count == 0) return Section(0, nvars);
  return Section(std::vector<Polynomial>(s.coeffs().begin() + static_cast<std::ptrdiff_t>(begin),
                                         s.coeffs().begin() + static_cast<std::ptrdiff_t>(begin + count)));
}

}  // namespace

Section omega_map(const MatchedPairData& mp, const Section& a, const Section& b) {
  std::vector<Polynomial> w;
  const Scalar half = Scalar::fraction(1, 2);
  for (std::size_t g = 0; g < mp.e2.rank(); ++g) {
    Section gamma = mp.e2.basis(g);
    w.push_back((mp.e1.pairing(mp.left.apply(gamma, a), b) - mp.e1.pairing(a, mp.left.apply(gamma, b))) * half);
  }
  return raise(mp.e2, w);
}

Section mho_map(const MatchedPairData& mp, const Section& alpha, const Section& beta) {
  std::vector<Polynomial> w;
  const Scalar half = Scalar::fraction(1, 2);
  for (std::size_t c = 0; c < mp.e1.rank(); ++c) {
    Section gamma = mp.e1.basis(c);
    w.push_back((mp.e2.pairing(mp.right.apply(gamma, alpha), beta) -
                 mp.e2.pairing(alpha, mp.right.apply(gamma, beta))) *
                half);
  }
  return raise(mp.e1, w);
}

CourantStructure matched_sum(const MatchedPairData& mp) {
  mp.validate();
  const auto& e1 = mp.e1;
  const auto& e2 = mp.e2;
  const std::size_t k1 = e1.rank();
  const std::size_t k2 = e2.rank();
  if (k2 == 0) return e1;
  if (k1 == 0) return e2;

  std::vector<std::string> labels = e1.labels();
  labels.insert(labels.end(), e2.labels().begin(), e2.labels().end());
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw InvalidStructure("matched sum labels are not distinct");

  ScalarMatrix g(k1 + k2, k1 + k2);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j) g(i, j) = e1.pairing_matrix()(i, j);
  for (std::size_t i = 0; i < k2; ++i)
    for (std::size_t j = 0; j < k2; ++j) g(k1 + i, k1 + j) = e2.pairing_matrix()(i, j);

  std::vector<VectorField> anchor = e1.anchor_rows();
  anchor.insert(anchor.end(), e2.anchor_rows().begin(), e2.anchor_rows().end());

  std::vector<std::vector<Section>> table(k1 + k2, std::vector<Section>(k1 + k2));
  for (std::size_t i = 0; i < k1; ++i) {
    Section a = e1.basis(i);
    for (std::size_t j = 0; j < k1; ++j) {
      table[i][j] = join(e1.table_entry(i, j), omega_map(mp, a, e1.basis(j)));
    }
    for (std::size_t j = 0; j < k2; ++j) {
      Section beta = e2.basis(j);
      table[i][k1 + j] = join(-mp.left.apply(beta, a), mp.right.apply(a, beta));
      table[k1 + j][i] = join(mp.left.apply(beta, a), -mp.right.apply(a, beta));
    }
  }
  for (std::size_t i = 0; i < k2; ++i) {
    Section alpha = e2.basis(i);
    for (std::size_t j = 0; j < k2; ++j) {
      table[k1 + i][k1 + j] = join(mho_map(mp, alpha, e2.basis(j)), e2.table_entry(i, j));
    }
  }
  CourantStructure out(e1.chart(), std::move(labels), std::move(g), std::move(anchor), std::move(table));
  std::vector<std::optional<Bidegree>> tags = e1.tags();
  tags.insert(tags.end(), e2.tags().begin(), e2.tags().end());
  return out.with_tags(std::move(tags));
}

// ---------------------------------------------------------------------------
// the matched-pair conditions

Section der_bracket_left_residual(const MatchedPairData& mp, const Section& alpha, const Section& a1,
                                  const Section& a2) {
  const auto& e1 = mp.e1;
  const auto& e2 = mp.e2;
  const auto& l = mp.left;
  const auto& r = mp.right;
  const Scalar half = Scalar::fraction(1, 2);
  Section lhs = l.apply(alpha, e1.dorfman(a1, a2)) - e1.dorfman(l.apply(alpha, a1), a2) -
                e1.dorfman(a1, l.apply(alpha, a2)) - l.apply(r.apply(a2, alpha), a1) + l.apply(r.apply(a1, alpha), a2);
  Section x = omega_map(mp, a1, a2) + half * e2.d_operator(e1.pairing(a1, a2));
  Section rhs = -mho_map(mp, alpha, x) - half * e1.d_operator(e2.pairing(alpha, x));
  return lhs - rhs;
}

Section der_bracket_right_residual(const MatchedPairData& mp, const Section& a, const Section& alpha1,
                                   const Section& alpha2) {
  const auto& e1 = mp.e1;
  const auto& e2 = mp.e2;
  const auto& l = mp.left;
  const auto& r = mp.right;
  const Scalar half = Scalar::fraction(1, 2);
  Section lhs = r.apply(a, e2.dorfman(alpha1, alpha2)) - e2.dorfman(r.apply(a, alpha1), alpha2) -
                e2.dorfman(alpha1, r.apply(a, alpha2)) - r.apply(l.apply(alpha2, a), alpha1) +
                r.apply(l.apply(alpha1, a), alpha2);
  Section x = mho_map(mp, alpha1, alpha2) + half * e1.d_operator(e2.pairing(alpha1, alpha2));
  Section rhs = -omega_map(mp, a, x) - half * e2.d_operator(e1.pairing(a, x));
  return lhs - rhs;
}

Polynomial curvature_compat_residual(const MatchedPairData& mp, const Section& a, const Section& b,
                                     const Section& alpha, const Section& beta) {
  return mp.e2.pairing(curvature_apply(mp.right, mp.e1, a, b, alpha), beta) +
         mp.e1.pairing(curvature_apply(mp.left, mp.e2, alpha, beta, a), b);
}

Section cyclic_left_residual(const MatchedPairData& mp, const Section& a1, const Section& a2, const Section& a3) {
  return mp.left.apply(omega_map(mp, a1, a2), a3) + mp.left.apply(omega_map(mp, a2, a3), a1) +
         mp.left.apply(omega_map(mp, a3, a1), a2);
}

Section cyclic_right_residual(const MatchedPairData& mp, const Section& alpha1, const Section& alpha2,
                              const Section& alpha3) {
  return mp.right.apply(mho_map(mp, alpha1, alpha2), alpha3) + mp.right.apply(mho_map(mp, alpha2, alpha3), alpha1) +
         mp.right.apply(mho_map(mp, alpha3, alpha1), alpha2);
}

const std::vector<std::string>& matched_pair_check_names() {
  static const std::vector<std::string> names{"metric_right",     "metric_left",       "d_flat_right",
                                              "d_flat_left",      "der_bracket_left",  "der_bracket_right",
                                              "curvature_compat", "cyclic_left",       "cyclic_right"};
  return names;
}

VerificationReport check_matched_pair(const MatchedPairData& mp, const SampleSpec& sample,
                                      const std::string& subject) {
  sample.validate();
  mp.validate();
  const auto& e1 = mp.e1;
  const auto& e2 = mp.e2;
  const auto& chart = e1.chart();
  VerificationReport report;
  report.subject = subject;
  report.sample = sample;
  const auto& names = matched_pair_check_names();
  auto S = [](const std::vector<Argument>& v, std::size_t i) -> const Section& { return section_arg(v[i]); };
  auto F = [](const std::vector<Argument>& v, std::size_t i) -> const Polynomial& { return function_arg(v[i]); };
  std::uint64_t salt = 0;
  auto run = [&](const std::string& name, std::vector<Slot> slots, const TupleResidual& res) {
    run_tuple_check(report.add(name), slots, res, sample, salt++);
  };

  run(names[0], {Slot::section("a", e1), Slot::section("alpha", e2), Slot::section("beta", e2)},
      [&](const std::vector<Argument>& v) {
        const auto &a = S(v, 0), &al = S(v, 1), &be = S(v, 2);
        return nonzero(chart, e1.anchor_apply(a).apply(e2.pairing(al, be)) - e2.pairing(mp.right.apply(a, al), be) -
                                  e2.pairing(al, mp.right.apply(a, be)));
      });
  run(names[1], {Slot::section("alpha", e2), Slot::section("a", e1), Slot::section("b", e1)},
      [&](const std::vector<Argument>& v) {
        const auto &al = S(v, 0), &a = S(v, 1), &b = S(v, 2);
        return nonzero(chart, e2.anchor_apply(al).apply(e1.pairing(a, b)) - e1.pairing(mp.left.apply(al, a), b) -
                                  e1.pairing(a, mp.left.apply(al, b)));
      });
  run(names[2], {Slot::function("f", chart), Slot::section("beta", e2)}, [&](const std::vector<Argument>& v) {
    return nonzero(e2, mp.right.apply(e1.d_operator(F(v, 0)), S(v, 1)));
  });
  run(names[3], {Slot::function("f", chart), Slot::section("b", e1)}, [&](const std::vector<Argument>& v) {
    return nonzero(e1, mp.left.apply(e2.d_operator(F(v, 0)), S(v, 1)));
  });
  run(names[4], {Slot::section("alpha", e2), Slot::section("a1", e1), Slot::section("a2", e1)},
      [&](const std::vector<Argument>& v) { return nonzero(e1, der_bracket_left_residual(mp, S(v, 0), S(v, 1), S(v, 2))); });
  run(names[5], {Slot::section("a", e1), Slot::section("alpha1", e2), Slot::section("alpha2", e2)},
      [&](const std::vector<Argument>& v) { return nonzero(e2, der_bracket_right_residual(mp, S(v, 0), S(v, 1), S(v, 2))); });
  run(names[6],
      {Slot::section("a", e1), Slot::section("b", e1), Slot::section("alpha", e2), Slot::section("beta", e2)},
      [&](const std::vector<Argument>& v) {
        return nonzero(chart, curvature_compat_residual(mp, S(v, 0), S(v, 1), S(v, 2), S(v, 3)));
      });
  run(names[7], {Slot::section("a1", e1), Slot::section("a2", e1), Slot::section("a3", e1)},
      [&](const std::vector<Argument>& v) { return nonzero(e1, cyclic_left_residual(mp, S(v, 0), S(v, 1), S(v, 2))); });
  run(names[8], {Slot::section("alpha1", e2), Slot::section("alpha2", e2), Slot::section("alpha3", e2)},
      [&](const std::vector<Argument>& v) { return nonzero(e2, cyclic_right_residual(mp, S(v, 0), S(v, 1), S(v, 2))); });
  return report;
}

// ---------------------------------------------------------------------------
// split

namespace {

bool is_constant(const Section& s) {
  for (const auto& c : s.coeffs()) {
    if (!c.is_constant()) return false;
  }
  return true;
}

ScalarMatrix restricted_pairing(const CourantStructure& e, const std::vector<Section>& u,
                                const std::vector<Section>& w) {
  ScalarMatrix m(u.size(), w.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = e.pairing(u[i], w[j]).constant_term();
  return m;
}

}  // namespace

SplitResult split(const CourantStructure& e, const std::vector<Section>& u, std::vector<std::string> u_labels,
                  const std::vector<Section>& w, std::vector<std::string> w_labels) {
  const std::size_t k1 = u.size();
  const std::size_t k2 = w.size();
  if (u_labels.size() != k1 || w_labels.size() != k2) throw InvalidStructure("split: label count mismatch");
  for (const auto* frame : {&u, &w}) {
    for (const auto& s : *frame) {
      if (s.rank() != e.rank()) throw RankMismatch("split frame element");
      if (!is_constant(s)) throw InvalidStructure("split frames must have constant coefficients");
    }
  }
  ScalarMatrix cross = restricted_pairing(e, u, w);
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = 0; j < k2; ++j) {
      if (!cross(i, j).is_zero()) {
        throw NotOrthogonal("frames are not orthogonal: <" + u_labels[i] + ", " + w_labels[j] + "> = " +
                            cross(i, j).str());
      }
    }
  }
  ScalarMatrix g1 = restricted_pairing(e, u, u);
  ScalarMatrix g2 = restricted_pairing(e, w, w);
  if (!g1.inverse()) throw DegenerateRestriction("pairing restricted to the first frame is degenerate");
  if (!g2.inverse()) throw DegenerateRestriction("pairing restricted to the second frame is degenerate");
  if (k1 + k2 != e.rank()) throw DegenerateRestriction("frames do not span the bundle");

  ScalarMatrix p(e.rank(), e.rank());
  for (std::size_t a = 0; a < k1 + k2; ++a) {
    const Section& s = a < k1 ? u[a] : w[a - k1];
    for (std::size_t i = 0; i < e.rank(); ++i) p(i, a) = s[i].constant_term();
  }
  std::vector<std::string> labels = u_labels;
  labels.insert(labels.end(), w_labels.begin(), w_labels.end());
  CourantStructure full = change_frame(e, p, labels);
  const std::size_t n = e.nvars();

  auto part = [&](std::size_t begin, std::size_t count, std::vector<std::string> names, const ScalarMatrix& g) {
    std::vector<VectorField> anchor(full.anchor_rows().begin() + static_cast<std::ptrdiff_t>(begin),
                                    full.anchor_rows().begin() + static_cast<std::ptrdiff_t>(begin + count));
    std::vector<std::vector<Section>> table(count, std::vector<Section>(count));
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) table[i][j] = slice(full.table_entry(begin + i, begin + j), begin, count, n);
    CourantStructure out(e.chart(), std::move(names), g, std::move(anchor), std::move(table));
    std::vector<std::optional<Bidegree>> tags;
    bool any = false;
    for (std::size_t i = 0; i < count; ++i) {
      const Section& s = begin == 0 ? u[i] : w[i];
      // a frame element inherits a tag when all its components share it
      std::optional<Bidegree> tag;
      bool uniform = true;
      for (std::size_t c = 0; c < e.rank(); ++c) {
        if (s[c].is_zero()) continue;
        if (!e.tags()[c] || (tag && !(*tag == *e.tags()[c]))) uniform = false;
        tag = e.tags()[c];
      }
      tags.push_back(uniform ? tag : std::nullopt);
      any = any || (uniform && tag);
    }
    return any ? out.with_tags(std::move(tags)) : out;
  };
  CourantStructure e1 = part(0, k1, u_labels, g1);
  CourantStructure e2 = part(k1, k2, w_labels, g2);

  std::vector<std::vector<Section>> right(k1, std::vector<Section>(k2));
  std::vector<std::vector<Section>> left(k2, std::vector<Section>(k1));
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = 0; j < k2; ++j) {
      right[i][j] = slice(full.table_entry(i, k1 + j), k1, k2, n);
      left[j][i] = slice(full.table_entry(k1 + j, i), 0, k1, n);
    }
  }
  SplitResult out{MatchedPairData{e1, e2, Connection(e1, e2, std::move(right)), Connection(e2, e1, std::move(left))},
                  {},
                  {}};
  const Scalar half = Scalar::fraction(1, 2);
  out.omega.assign(k1, std::vector<Section>(k1));
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j)
      out.omega[i][j] = half * slice(full.table_entry(i, j) - full.table_entry(j, i), k1, k2, n);
  out.mho.assign(k2, std::vector<Section>(k2));
  for (std::size_t i = 0; i < k2; ++i)
    for (std::size_t j = 0; j < k2; ++j)
      out.mho[i][j] = half * slice(full.table_entry(k1 + i, k1 + j) - full.table_entry(k1 + j, k1 + i), 0, k1, n);
  return out;
}

// ---------------------------------------------------------------------------
// constructions

CourantStructure make_trivial_structure(const Chart& chart, std::vector<std::string> labels, ScalarMatrix pairing) {
  const std::size_t k = labels.size();
  std::vector<VectorField> anchor(k, VectorField(chart));
  std::vector<std::vector<Section>> table(k, std::vector<Section>(k, Section(k, chart->dimension())));
  return CourantStructure(chart, std::move(labels), std::move(pairing), std::move(anchor), std::move(table));
}

MatchedPairData merker_pair(const CourantStructure& e1, const CourantStructure& v,
                            std::vector<std::vector<Section>> table) {
  return MatchedPairData{e1, v, Connection(e1, v, std::move(table)), Connection::trivial(v, e1)};
}

MatchedPairData random_matched_pair_candidate(Sampler& sampler, int max_degree) {
  auto chart = make_euclidean_chart(2);
  auto e1 = make_standard(chart);
  const std::size_t r = static_cast<std::size_t>(sampler.uniform(2, 3));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("v" + std::to_string(i + 1));
  auto v = make_trivial_structure(chart, labels, ScalarMatrix::identity(r));

  // so(r) generators N_pq = E_pq - E_qp, acting by N v_q = v_p, N v_p = -v_q
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = p + 1; q < r; ++q) gens.emplace_back(p, q);

  // coefficient of each generator along d/dx and d/dy
  std::vector<std::vector<Polynomial>> coeff(2, std::vector<Polynomial>(gens.size(), Polynomial(2)));
  const bool flat = sampler.coin();
  if (flat) {
    // abelian and closed: (d_x h) N dx + (d_y h) N dy
    Polynomial h = sampler.nonzero_polynomial(2, max_degree + 1, Field::Rational);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Scalar c = sampler.scalar(Field::Rational);
      coeff[0][g] = h.derivative(0) * c;
      coeff[1][g] = h.derivative(1) * c;
    }
  } else {
    for (std::size_t dir = 0; dir < 2; ++dir)
      for (std::size_t g = 0; g < gens.size(); ++g) coeff[dir][g] = sampler.polynomial(2, max_degree, Field::Rational);
  }
  std::vector<std::vector<Section>> right(e1.rank(), std::vector<Section>(r, v.zero()));
  for (std::size_t dir = 0; dir < 2; ++dir) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto [p, q] = gens[g];
      right[dir][q][p] += coeff[dir][g];
      right[dir][p][q] -= coeff[dir][g];
    }
  }
  MatchedPairData mp{e1, v, Connection(e1, v, std::move(right)), Connection::trivial(v, e1)};

  if (sampler.uniform(0, 2) == 0) {
    // metric perturbation of the left connection: left_{v_a} = G1^{-1} S_a with S_a skew
    const auto& g1 = e1.pairing_inverse();
    std::vector<std::vector<Section>> left(r, std::vector<Section>(e1.rank(), e1.zero()));
    for (std::size_t a = 0; a < r; ++a) {
      if (!sampler.coin()) continue;
      for (std::size_t i = 0; i < e1.rank(); ++i) {
        for (std::size_t j = i + 1; j < e1.rank(); ++j) {
          if (sampler.uniform(0, 3) != 0) continue;
          Scalar s = sampler.scalar(Field::Rational);
          // S(i, j) = s, S(j, i) = -s; column j of G1^{-1} S is the image of e_j
          for (std::size_t k = 0; k < e1.rank(); ++k) {
            if (!g1(k, i).is_zero()) left[a][j][k] += Polynomial::constant(2, g1(k, i) * s);
            if (!g1(k, j).is_zero()) left[a][i][k] -= Polynomial::constant(2, g1(k, j) * s);
          }
        }
      }
    }
    mp.left = Connection(v, e1, std::move(left));
  }
  return mp;
}

}  // namespace courant
