#include "courant/dirac.hpp"

namespace courant {

namespace {

Section pad(const Section& s, std::size_t offset, std::size_t total, std::size_t nvars) {
  Section out(total, nvars);
  for (std::size_t i = 0; i < s.rank(); ++i) out[offset + i] = s[i];
  return out;
}

std::vector<std::string> default_labels(std::size_t r) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= r; ++i) out.push_back("u" + std::to_string(i));
  return out;
}

std::size_t require_label(const CourantStructure& e, const std::string& label) {
  const int i = e.index_of(label);
  if (i < 0) throw InvalidStructure("host has no frame element " + label);
  return static_cast<std::size_t>(i);
}

void require_square(const PolyMatrix& m, std::size_t n, std::size_t nvars, const char* what) {
  if (m.size() != n) throw RankMismatch(what);
  for (const auto& row : m) {
    if (row.size() != n) throw RankMismatch(what);
    for (const auto& p : row)
      if (p.nvars() != nvars) throw ChartMismatch(what);
  }
}

void require_antisymmetric(const PolyMatrix& m, const char* what) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != -m[j][i]) throw InvalidStructure(std::string(what) + " is not antisymmetric");
}

// Trivial structure with the algebroid's labels, used to drive tuple checks.
CourantStructure shadow(const LieAlgebroid& a) {
  return make_trivial_structure(a.chart(), a.labels(), ScalarMatrix::identity(a.rank()));
}

}  // namespace

// ---------------------------------------------------------------------------
// DiracFrame

DiracFrame::DiracFrame(CourantStructure host, std::vector<Section> frame, std::vector<Section> complement,
                       std::vector<std::string> labels)
    : host_(std::move(host)), frame_(std::move(frame)), complement_(std::move(complement)), labels_(std::move(labels)) {
  const std::size_t r = frame_.size();
  if (host_.rank() != 2 * r) throw RankMismatch("Dirac frame must span half the host rank");
  if (complement_.size() != r) throw RankMismatch("complement must have as many sections as the frame");
  if (labels_.empty()) labels_ = default_labels(r);
  if (labels_.size() != r) throw RankMismatch("Dirac frame labels");
  const std::size_t nv = host_.nvars();
  PolyMatrix m(2 * r, std::vector<Polynomial>(2 * r, Polynomial(nv)));
  for (std::size_t c = 0; c < 2 * r; ++c) {
    const Section& s = c < r ? frame_[c] : complement_[c - r];
    if (s.rank() != 2 * r) throw RankMismatch("Dirac frame section");
    for (std::size_t row = 0; row < 2 * r; ++row) m[row][c] = s[row];
  }
  auto inv = unimodular_inverse(m, nv);
  if (!inv) throw BadComplementCertificate("frame plus complement does not have a nonzero constant determinant");
  inverse_ = std::move(*inv);
}

std::vector<Polynomial> DiracFrame::coordinates(const Section& s) const {
  const std::size_t k = host_.rank();
  if (s.rank() != k) throw RankMismatch("Dirac frame coordinates");
  std::vector<Polynomial> out(k, Polynomial(host_.nvars()));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!inverse_[i][j].is_zero() && !s[j].is_zero()) out[i] += inverse_[i][j] * s[j];
  return out;
}

Section DiracFrame::in_frame(const Section& s) const {
  auto c = coordinates(s);
  const std::size_t r = rank();
  for (std::size_t i = r; i < 2 * r; ++i)
    if (!c[i].is_zero()) throw NotIntegrable("section " + host_.str(s) + " is not in the Dirac structure");
  c.resize(r);
  if (c.empty()) return Section(0, host_.nvars());
  return Section(std::move(c));
}

Section DiracFrame::combine(const Section& coeffs) const {
  Section out = host_.zero();
  for (std::size_t i = 0; i < rank(); ++i)
    if (!coeffs[i].is_zero()) out += coeffs[i] * frame_[i];
  return out;
}

// ---------------------------------------------------------------------------
// LieAlgebroid

LieAlgebroid::LieAlgebroid(Chart chart, std::vector<std::string> labels, std::vector<VectorField> anchor,
                           std::vector<std::vector<Section>> table)
    : chart_(std::move(chart)), labels_(std::move(labels)), anchor_(std::move(anchor)), table_(std::move(table)) {
  const std::size_t k = labels_.size();
  if (anchor_.size() != k || table_.size() != k) throw RankMismatch("Lie algebroid data");
  for (const auto& a : anchor_) require_same_chart(chart_, a.chart(), "Lie algebroid anchor");
  for (std::size_t i = 0; i < k; ++i) {
    if (table_[i].size() != k) throw RankMismatch("Lie algebroid table row");
    for (std::size_t j = 0; j < k; ++j) {
      if (table_[i][j].rank() != k || table_[i][j].nvars() != chart_->dimension())
        throw RankMismatch("Lie algebroid table entry");
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (table_[i][j] != -table_[j][i]) throw InvalidStructure("Lie algebroid bracket table is not antisymmetric");
}

VectorField LieAlgebroid::anchor_apply(const Section& a) const {
  VectorField out(chart_);
  for (std::size_t i = 0; i < rank(); ++i)
    if (!a[i].is_zero()) out += a[i] * anchor_[i];
  return out;
}

Section LieAlgebroid::bracket(const Section& a, const Section& b) const {
  if (a.rank() != rank() || b.rank() != rank()) throw RankMismatch("Lie algebroid bracket");
  Section out = zero();
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (b[j].is_zero() || table_[i][j].is_zero()) continue;
      out += (a[i] * b[j]) * table_[i][j];
    }
  }
  const VectorField ra = anchor_apply(a);
  const VectorField rb = anchor_apply(b);
  for (std::size_t i = 0; i < rank(); ++i) {
    out[i] += ra.apply(b[i]);
    out[i] -= rb.apply(a[i]);
  }
  return out;
}

std::string LieAlgebroid::str(const Section& s) const {
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (s[i].is_zero()) continue;
    out += out.empty() ? "{" : ", ";
    out += labels_[i] + ": " + s[i].str(*chart_);
  }
  return out.empty() ? "0" : out + "}";
}

LieAlgebroid LieAlgebroid::tangent(const Chart& chart) {
  const std::size_t n = chart->dimension();
  std::vector<std::string> labels;
  std::vector<VectorField> anchor;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(vector_label(*chart, i));
    anchor.push_back(VectorField::coordinate(chart, i));
  }
  return LieAlgebroid(chart, std::move(labels), std::move(anchor),
                      std::vector<std::vector<Section>>(n, std::vector<Section>(n, Section(n, n))));
}

bool operator==(const LieAlgebroid& a, const LieAlgebroid& b) {
  return same_chart(a.chart_, b.chart_) && a.labels_ == b.labels_ && a.anchor_ == b.anchor_ && a.table_ == b.table_;
}

VerificationReport check_lie_algebroid(const LieAlgebroid& a, const SampleSpec& sample, const std::string& subject) {
  sample.validate();
  const auto e = shadow(a);
  VerificationReport report;
  report.subject = subject;
  report.sample = sample;
  auto S = [](const std::vector<Argument>& v, std::size_t i) -> const Section& { return section_arg(v[i]); };
  run_tuple_check(report.add("jacobi"), {Slot::section("a", e), Slot::section("b", e), Slot::section("c", e)},
                  [&](const std::vector<Argument>& v) -> std::optional<std::string> {
                    const auto &x = S(v, 0), &y = S(v, 1), &z = S(v, 2);
                    Section r = a.bracket(x, a.bracket(y, z)) - a.bracket(a.bracket(x, y), z) - a.bracket(y, a.bracket(x, z));
                    if (r.is_zero()) return std::nullopt;
                    return a.str(r);
                  },
                  sample, 0);
  run_tuple_check(report.add("anchor"), {Slot::section("a", e), Slot::section("b", e)},
                  [&](const std::vector<Argument>& v) -> std::optional<std::string> {
                    const auto &x = S(v, 0), &y = S(v, 1);
                    VectorField r = a.anchor_apply(a.bracket(x, y)) - lie_bracket(a.anchor_apply(x), a.anchor_apply(y));
                    if (r.is_zero()) return std::nullopt;
                    return r.str();
                  },
                  sample, 1);
  return report;
}

// ---------------------------------------------------------------------------
// matched pairs of Lie algebroids

LieMatchedPairData LieMatchedPairData::with_trivial_connections(LieAlgebroid a, LieAlgebroid a_prime) {
  const std::size_t n = a.chart()->dimension();
  Connection right(a.chart(), a.anchor_rows(), a_prime.rank(),
                   std::vector<std::vector<Section>>(a.rank(), std::vector<Section>(a_prime.rank(), a_prime.zero())));
  Connection left(a_prime.chart(), a_prime.anchor_rows(), a.rank(),
                  std::vector<std::vector<Section>>(a_prime.rank(), std::vector<Section>(a.rank(), Section(a.rank(), n))));
  return LieMatchedPairData{std::move(a), std::move(a_prime), std::move(right), std::move(left)};
}

const std::vector<std::string>& lie_matched_pair_check_names() {
  static const std::vector<std::string> names{"flat_right", "flat_left", "compat_left", "compat_right",
                                              "sum_jacobi", "sum_anchor"};
  return names;
}

LieAlgebroid lie_matched_sum(const LieMatchedPairData& lmp) {
  const auto& a = lmp.a;
  const auto& ap = lmp.a_prime;
  require_same_chart(a.chart(), ap.chart(), "lie_matched_sum");
  const std::size_t k1 = a.rank(), k2 = ap.rank(), k = k1 + k2;
  const std::size_t nv = a.chart()->dimension();
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), ap.labels().begin(), ap.labels().end());
  std::vector<VectorField> anchor = a.anchor_rows();
  anchor.insert(anchor.end(), ap.anchor_rows().begin(), ap.anchor_rows().end());
  std::vector<std::vector<Section>> table(k, std::vector<Section>(k, Section(k, nv)));
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j) table[i][j] = pad(a.table_entry(i, j), 0, k, nv);
  for (std::size_t i = 0; i < k2; ++i)
    for (std::size_t j = 0; j < k2; ++j) table[k1 + i][k1 + j] = pad(ap.table_entry(i, j), k1, k, nv);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k2; ++j) {
      // [a_i, alpha_j] = -left_{alpha_j} a_i + right_{a_i} alpha_j
      Section t = pad(-lmp.left.entry(j, i), 0, k, nv) + pad(lmp.right.entry(i, j), k1, k, nv);
      table[i][k1 + j] = t;
      table[k1 + j][i] = -t;
    }
  return LieAlgebroid(a.chart(), std::move(labels), std::move(anchor), std::move(table));
}

VerificationReport check_lie_matched_pair(const LieMatchedPairData& lmp, const SampleSpec& sample,
                                          const std::string& subject) {
  sample.validate();
  const auto& a = lmp.a;
  const auto& ap = lmp.a_prime;
  const auto ea = shadow(a);
  const auto eap = shadow(ap);
  const auto& right = lmp.right;
  const auto& left = lmp.left;
  VerificationReport report;
  report.subject = subject;
  report.sample = sample;
  const auto& names = lie_matched_pair_check_names();
  auto S = [](const std::vector<Argument>& v, std::size_t i) -> const Section& { return section_arg(v[i]); };
  auto render = [](const LieAlgebroid& l, const Section& r) -> std::optional<std::string> {
    if (r.is_zero()) return std::nullopt;
    return l.str(r);
  };
  std::uint64_t salt = 0;
  auto run = [&](const std::string& name, std::vector<Slot> slots, const TupleResidual& res) {
    run_tuple_check(report.add(name), slots, res, sample, salt++);
  };

  run(names[0], {Slot::section("a", ea), Slot::section("b", ea), Slot::section("alpha", eap)},
      [&](const std::vector<Argument>& v) {
        const auto &x = S(v, 0), &y = S(v, 1), &al = S(v, 2);
        return render(ap, right.apply(x, right.apply(y, al)) - right.apply(y, right.apply(x, al)) -
                              right.apply(a.bracket(x, y), al));
      });
  run(names[1], {Slot::section("alpha", eap), Slot::section("beta", eap), Slot::section("a", ea)},
      [&](const std::vector<Argument>& v) {
        const auto &al = S(v, 0), &be = S(v, 1), &x = S(v, 2);
        return render(a, left.apply(al, left.apply(be, x)) - left.apply(be, left.apply(al, x)) -
                             left.apply(ap.bracket(al, be), x));
      });
  run(names[2], {Slot::section("alpha", eap), Slot::section("b", ea), Slot::section("c", ea)},
      [&](const std::vector<Argument>& v) {
        const auto &al = S(v, 0), &b = S(v, 1), &c = S(v, 2);
        return render(a, left.apply(al, a.bracket(b, c)) - a.bracket(left.apply(al, b), c) -
                             a.bracket(b, left.apply(al, c)) - left.apply(right.apply(c, al), b) +
                             left.apply(right.apply(b, al), c));
      });
  run(names[3], {Slot::section("a", ea), Slot::section("beta", eap), Slot::section("gamma", eap)},
      [&](const std::vector<Argument>& v) {
        const auto &x = S(v, 0), &be = S(v, 1), &ga = S(v, 2);
        return render(ap, right.apply(x, ap.bracket(be, ga)) - ap.bracket(right.apply(x, be), ga) -
                              ap.bracket(be, right.apply(x, ga)) - right.apply(left.apply(ga, x), be) +
                              right.apply(left.apply(be, x), ga));
      });
  report.append(check_lie_algebroid(lie_matched_sum(lmp), sample), "sum_");
  return report;
}

// ---------------------------------------------------------------------------
// Dirac structures

VerificationReport check_dirac(const DiracFrame& d, const SampleSpec& sample, const std::string& subject) {
  sample.validate();
  const auto& host = d.host();
  if (!host.chart()->gaussian()) {
    const auto in = inertia(host.pairing_matrix());
    if (in.positive != in.negative) throw InvalidStructure("host pairing is not of split signature");
  }
  VerificationReport report;
  report.subject = subject;
  report.sample = sample;
  const auto& f = d.frame();

  auto& iso = report.add("isotropy");
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i; j < f.size(); ++j) {
      const Polynomial p = host.pairing(f[i], f[j]);
      iso.record(p.is_zero(), [&] {
        return Witness{WitnessSource::Frame, {{"phi", d.labels()[i]}, {"psi", d.labels()[j]}}, p.str(*host.chart())};
      });
    }

  run_tuple_check(report.add("integrability"),
                  {Slot::span("phi", host, f, d.labels()), Slot::span("psi", host, f, d.labels()),
                   Slot::span("chi", host, f, d.labels())},
                  [&](const std::vector<Argument>& v) {
                    const auto &phi = section_arg(v[0]), &psi = section_arg(v[1]), &chi = section_arg(v[2]);
                    return nonzero(host.chart(), host.pairing(host.dorfman(phi, psi), chi));
                  },
                  sample, 0);
  return report;
}

DiracFrame dirac_direct_sum(const MatchedPairData& mp, const DiracFrame& d1, const DiracFrame& d2) {
  if (!(d1.host() == mp.e1) || !(d2.host() == mp.e2)) throw InvalidStructure("Dirac frames do not live in the pair");
  auto sum = matched_sum(mp);
  const std::size_t k1 = mp.e1.rank(), k = sum.rank(), nv = sum.nvars();
  std::vector<Section> frame, complement;
  for (const auto& s : d1.frame()) frame.push_back(pad(s, 0, k, nv));
  for (const auto& s : d2.frame()) frame.push_back(pad(s, k1, k, nv));
  for (const auto& s : d1.complement()) complement.push_back(pad(s, 0, k, nv));
  for (const auto& s : d2.complement()) complement.push_back(pad(s, k1, k, nv));
  auto labels = d1.labels();
  labels.insert(labels.end(), d2.labels().begin(), d2.labels().end());
  return DiracFrame(std::move(sum), std::move(frame), std::move(complement), std::move(labels));
}

VerificationReport check_matched_dirac(const MatchedPairData& mp, const DiracFrame& d1, const DiracFrame& d2,
                                       const SampleSpec& sample, const std::string& subject) {
  sample.validate();
  mp.validate();
  VerificationReport report;
  report.subject = subject;
  report.sample = sample;
  report.append(check_dirac(d1, sample), "d1.");
  report.append(check_dirac(d2, sample), "d2.");
  const auto& e1 = mp.e1;
  const auto& e2 = mp.e2;
  auto S = [](const std::vector<Argument>& v, std::size_t i) -> const Section& { return section_arg(v[i]); };
  run_tuple_check(report.add("left_membership"),
                  {Slot::span("alpha", e2, d2.frame(), d2.labels()), Slot::span("a", e1, d1.frame(), d1.labels()),
                   Slot::span("b", e1, d1.frame(), d1.labels())},
                  [&](const std::vector<Argument>& v) {
                    return nonzero(e1.chart(), e1.pairing(mp.left.apply(S(v, 0), S(v, 1)), S(v, 2)));
                  },
                  sample, 10);
  run_tuple_check(report.add("right_membership"),
                  {Slot::span("a", e1, d1.frame(), d1.labels()), Slot::span("alpha", e2, d2.frame(), d2.labels()),
                   Slot::span("beta", e2, d2.frame(), d2.labels())},
                  [&](const std::vector<Argument>& v) {
                    return nonzero(e2.chart(), e2.pairing(mp.right.apply(S(v, 0), S(v, 1)), S(v, 2)));
                  },
                  sample, 11);
  report.append(check_dirac(dirac_direct_sum(mp, d1, d2), sample), "sum.");
  return report;
}

LieAlgebroid dirac_to_lie(const DiracFrame& d) {
  const auto& host = d.host();
  const std::size_t r = d.rank();
  std::vector<VectorField> anchor;
  for (const auto& s : d.frame()) anchor.push_back(host.anchor_apply(s));
  std::vector<std::vector<Section>> table(r, std::vector<Section>(r, Section(r, host.nvars())));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) table[i][j] = d.in_frame(host.dorfman(d.frame()[i], d.frame()[j]));
  return LieAlgebroid(host.chart(), d.labels(), std::move(anchor), std::move(table));
}

LieMatchedPairData restrict_to_dirac(const MatchedPairData& mp, const DiracFrame& d1, const DiracFrame& d2) {
  auto a = dirac_to_lie(d1);
  auto ap = dirac_to_lie(d2);
  const std::size_t r1 = d1.rank(), r2 = d2.rank();
  std::vector<std::vector<Section>> right(r1, std::vector<Section>(r2));
  std::vector<std::vector<Section>> left(r2, std::vector<Section>(r1));
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r2; ++j) {
      right[i][j] = d2.in_frame(mp.right.apply(d1.frame()[i], d2.frame()[j]));
      left[j][i] = d1.in_frame(mp.left.apply(d2.frame()[j], d1.frame()[i]));
    }
  Connection rc(a.chart(), a.anchor_rows(), r2, std::move(right));
  Connection lc(ap.chart(), ap.anchor_rows(), r1, std::move(left));
  return LieMatchedPairData{std::move(a), std::move(ap), std::move(rc), std::move(lc)};
}

// ---------------------------------------------------------------------------
// graphs

DiracFrame graph_of_two_form(const CourantStructure& standard, const DiffForm& omega) {
  const auto& chart = standard.chart();
  require_same_chart(chart, omega.chart(), "graph_of_two_form");
  if (omega.degree() != 2) throw RankMismatch("graph_of_two_form needs a 2-form");
  const std::size_t n = chart->dimension();
  std::vector<Section> frame, complement;
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i) {
    Section s = standard.basis(require_label(standard, vector_label(*chart, i)));
    for (std::uint32_t j = 0; j < n; ++j) {
      const Polynomial w = omega.coefficient({i, j});
      if (!w.is_zero()) s += w * standard.basis(require_label(standard, form_label(*chart, j)));
    }
    frame.push_back(std::move(s));
    complement.push_back(standard.basis(require_label(standard, form_label(*chart, i))));
    labels.push_back(vector_label(*chart, i));
  }
  return DiracFrame(standard, std::move(frame), std::move(complement), std::move(labels));
}

DiracFrame graph_of_bivector(const CourantStructure& standard, const PolyMatrix& pi) {
  const auto& chart = standard.chart();
  const std::size_t n = chart->dimension();
  require_square(pi, n, n, "bivector matrix");
  require_antisymmetric(pi, "bivector");
  std::vector<Section> frame, complement;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    Section s = standard.basis(require_label(standard, form_label(*chart, i)));
    for (std::size_t j = 0; j < n; ++j)
      if (!pi[i][j].is_zero()) s += pi[i][j] * standard.basis(require_label(standard, vector_label(*chart, j)));
    frame.push_back(std::move(s));
    complement.push_back(standard.basis(require_label(standard, vector_label(*chart, i))));
    labels.push_back(form_label(*chart, i));
  }
  return DiracFrame(standard, std::move(frame), std::move(complement), std::move(labels));
}

DiracFrame graph_of_pairing_map(const CourantStructure& v, const PolyMatrix& l) {
  if (v.rank() % 2 != 0) throw RankMismatch("pairing-map graph needs V = E + E*");
  const std::size_t k = v.rank() / 2;
  const auto& g = v.pairing_matrix();
  for (std::size_t i = 0; i < 2 * k; ++i)
    for (std::size_t j = 0; j < 2 * k; ++j) {
      const bool dual = (i < k && j == i + k) || (j < k && i == j + k);
      if (g(i, j) != Scalar(dual ? 1 : 0)) throw InvalidStructure("V must carry the duality pairing of E + E*");
    }
  require_square(l, k, v.nvars(), "pairing-map matrix");
  require_antisymmetric(l, "pairing map");
  std::vector<Section> frame, complement;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < k; ++a) {
    Section s = v.basis(a);
    for (std::size_t b = 0; b < k; ++b)
      if (!l[a][b].is_zero()) s += l[a][b] * v.basis(k + b);
    frame.push_back(std::move(s));
    complement.push_back(v.basis(k + a));
    labels.push_back(v.label(a));
  }
  return DiracFrame(v, std::move(frame), std::move(complement), std::move(labels));
}

DiracFrame port_hamiltonian_graph(const CourantStructure& sum, const DiffForm& omega, const PolyMatrix& a) {
  const auto& chart = sum.chart();
  require_same_chart(chart, omega.chart(), "port_hamiltonian_graph");
  if (omega.degree() != 2) throw RankMismatch("port_hamiltonian_graph needs a 2-form");
  const std::size_t n = chart->dimension();
  if (sum.rank() < 2 * n || (sum.rank() - 2 * n) % 2 != 0) throw RankMismatch("port_hamiltonian_graph host");
  const std::size_t k = (sum.rank() - 2 * n) / 2;
  if (a.size() != k) throw RankMismatch("port map needs one row per e_a");
  for (const auto& row : a)
    if (row.size() != n) throw RankMismatch("port map needs one column per dx_i");
  auto e_idx = [&](std::size_t i) { return 2 * n + i; };
  auto f_idx = [&](std::size_t i) { return 2 * n + k + i; };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (sum.pairing_matrix()(e_idx(i), f_idx(j)) != Scalar(i == j ? 1 : 0))
        throw InvalidStructure("host V part must pair e_a with f_a");
  std::vector<std::size_t> vec(n), form(n);
  for (std::size_t i = 0; i < n; ++i) {
    vec[i] = require_label(sum, vector_label(*chart, i));
    form[i] = require_label(sum, form_label(*chart, i));
  }
  // b[c][i]: e_c component of B(d/dx_i) = A(i_{d/dx_i} omega)
  PolyMatrix b(k, std::vector<Polynomial>(n, Polynomial(n)));
  for (std::size_t c = 0; c < k; ++c)
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) b[c][i] += a[c][j] * omega.coefficient({i, j});

  std::vector<Section> frame, complement;
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i) {
    Section s = sum.basis(vec[i]);
    for (std::uint32_t j = 0; j < n; ++j) s[form[j]] += omega.coefficient({i, j});
    for (std::size_t c = 0; c < k; ++c) s[e_idx(c)] += b[c][i];
    frame.push_back(std::move(s));
    labels.push_back(sum.label(vec[i]));
  }
  for (std::size_t c = 0; c < k; ++c) {
    Section s = sum.basis(f_idx(c));
    for (std::size_t i = 0; i < n; ++i) s[form[i]] -= b[c][i];
    frame.push_back(std::move(s));
    labels.push_back(sum.label(f_idx(c)));
  }
  for (std::size_t i = 0; i < n; ++i) complement.push_back(sum.basis(form[i]));
  for (std::size_t c = 0; c < k; ++c) complement.push_back(sum.basis(e_idx(c)));
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = i; j < frame.size(); ++j)
      if (!sum.pairing(frame[i], frame[j]).is_zero()) throw InvalidStructure("port-Hamiltonian graph is not isotropic");
  return DiracFrame(sum, std::move(frame), std::move(complement), std::move(labels));
}

}  // namespace courant
