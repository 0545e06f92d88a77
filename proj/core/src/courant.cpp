#include "courant/courant.hpp"

#include <set>

namespace courant {

// ---------------------------------------------------------------------------
// Section

Section::Section(std::size_t rank, std::size_t nvars)
    : nvars_(nvars), coeffs_(rank, Polynomial(nvars)) {}

Section::Section(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  nvars_ = coeffs_.empty() ? 0 : coeffs_.front().nvars();
  for (const auto& c : coeffs_) {
    if (c.nvars() != nvars_) throw ChartMismatch("section coefficients");
  }
}

Section Section::basis(std::size_t rank, std::size_t nvars, std::size_t i) {
  Section s(rank, nvars);
  s.coeffs_.at(i) = Polynomial::constant(nvars, Scalar(1));
  return s;
}

bool Section::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

int Section::max_degree() const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.total_degree());
  return d;
}

void Section::check(const Section& o) const {
  if (coeffs_.size() != o.coeffs_.size()) throw RankMismatch("section arithmetic");
  if (nvars_ != o.nvars_ && !coeffs_.empty()) throw ChartMismatch("section arithmetic");
}

Section& Section::operator+=(const Section& o) {
  check(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Section& Section::operator-=(const Section& o) {
  check(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Section& Section::operator*=(const Polynomial& f) {
  for (auto& c : coeffs_) c *= f;
  return *this;
}

Section& Section::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Section Section::operator-() const {
  Section out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

// ---------------------------------------------------------------------------
// CourantStructure

CourantStructure::CourantStructure(Chart chart, std::vector<std::string> labels,
                                   ScalarMatrix pairing, std::vector<VectorField> anchor,
                                   std::vector<std::vector<Section>> table)
    : chart_(std::move(chart)),
      labels_(std::move(labels)),
      pairing_(std::move(pairing)),
      anchor_(std::move(anchor)),
      table_(std::move(table)),
      tags_(labels_.size()) {
  const std::size_t k = labels_.size();
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvalidStructure("empty frame label");
    if (!seen.insert(l).second) throw InvalidStructure("duplicate frame label `" + l + "`");
  }
  if (pairing_.rows() != k || pairing_.cols() != k) throw InvalidStructure("pairing matrix shape");
  if (!pairing_.is_symmetric()) throw InvalidStructure("pairing matrix is not symmetric");
  auto inv = pairing_.inverse();
  if (!inv) throw InvalidStructure("pairing matrix is singular");
  pairing_inverse_ = std::move(*inv);
  if (anchor_.size() != k) throw InvalidStructure("anchor has wrong number of rows");
  for (const auto& row : anchor_) require_same_chart(row.chart(), chart_, "anchor");
  if (table_.size() != k) throw InvalidStructure("bracket table has wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != k) throw InvalidStructure("bracket table row has wrong length");
    for (const auto& s : row) {
      if (s.rank() != k) throw InvalidStructure("bracket table entry has wrong rank");
      if (k > 0 && s.nvars() != nvars()) throw InvalidStructure("bracket table entry over wrong chart");
    }
  }
  if (!chart_->gaussian()) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (!pairing_(i, j).is_real()) throw InvalidStructure("complex pairing on a rational chart");
      }
    }
  }
}

CourantStructure CourantStructure::with_tags(std::vector<std::optional<Bidegree>> tags) const {
  if (tags.size() != rank()) throw InvalidStructure("tag count does not match rank");
  CourantStructure out = *this;
  out.tags_ = std::move(tags);
  return out;
}

int CourantStructure::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

Section CourantStructure::basis(const std::string& label) const {
  int i = index_of(label);
  if (i < 0) throw Error("unknown frame label `" + label + "`");
  return basis(static_cast<std::size_t>(i));
}

void CourantStructure::check(const Section& s, const char* where) const {
  if (s.rank() != rank()) throw RankMismatch(where);
  if (rank() > 0 && s.nvars() != nvars()) throw ChartMismatch(where);
}

Polynomial CourantStructure::pairing(const Section& phi, const Section& psi) const {
  check(phi, "pairing");
  check(psi, "pairing");
  Polynomial out(nvars());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (phi[i].is_zero()) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (pairing_(i, j).is_zero() || psi[j].is_zero()) continue;
      out += (phi[i] * psi[j]) * pairing_(i, j);
    }
  }
  return out;
}

VectorField CourantStructure::anchor_apply(const Section& phi) const {
  check(phi, "anchor_apply");
  VectorField out(chart_);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (phi[i].is_zero() || anchor_[i].is_zero()) continue;
    out += phi[i] * anchor_[i];
  }
  return out;
}

Section CourantStructure::d_operator(const Polynomial& f) const {
  // G (Df) = (rho(e_i) f)_i
  std::vector<Polynomial> rhs;
  rhs.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) rhs.push_back(anchor_[i].apply(f));
  Section out(rank(), nvars());
  for (std::size_t a = 0; a < rank(); ++a) {
    for (std::size_t i = 0; i < rank(); ++i) {
      if (pairing_inverse_(a, i).is_zero() || rhs[i].is_zero()) continue;
      out[a] += rhs[i] * pairing_inverse_(a, i);
    }
  }
  return out;
}

Section CourantStructure::dorfman(const Section& phi, const Section& psi) const {
  check(phi, "dorfman");
  check(psi, "dorfman");
  const std::size_t k = rank();
  Section out(k, nvars());
  // sum_ij f_i g_j (e_i <> e_j)
  for (std::size_t i = 0; i < k; ++i) {
    if (phi[i].is_zero()) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (psi[j].is_zero()) continue;
      const Section& entry = table_[i][j];
      if (entry.is_zero()) continue;
      Polynomial fg = phi[i] * psi[j];
      for (std::size_t a = 0; a < k; ++a) {
        if (!entry[a].is_zero()) out[a] += fg * entry[a];
      }
    }
  }
  // + (rho(phi) g_j) e_j - (rho(psi) f_i) e_i
  VectorField rho_phi = anchor_apply(phi);
  VectorField rho_psi = anchor_apply(psi);
  for (std::size_t a = 0; a < k; ++a) {
    out[a] += rho_phi.apply(psi[a]);
    out[a] -= rho_psi.apply(phi[a]);
  }
  // + sum_i <e_i, psi> D f_i
  for (std::size_t i = 0; i < k; ++i) {
    if (phi[i].is_constant()) continue;
    Polynomial weight(nvars());
    for (std::size_t j = 0; j < k; ++j) {
      if (!pairing_(i, j).is_zero() && !psi[j].is_zero()) weight += psi[j] * pairing_(i, j);
    }
    if (weight.is_zero()) continue;
    out += weight * d_operator(phi[i]);
  }
  return out;
}

std::string CourantStructure::str(const Section& s) const {
  check(s, "str");
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (s[i].is_zero()) continue;
    out += out.empty() ? "{" : ", ";
    out += labels_[i] + ": " + s[i].str(*chart_);
  }
  return out.empty() ? "0" : out + "}";
}

bool operator==(const CourantStructure& a, const CourantStructure& b) {
  return same_chart(a.chart_, b.chart_) && a.labels_ == b.labels_ && a.pairing_ == b.pairing_ &&
         a.anchor_ == b.anchor_ && a.table_ == b.table_;
}

// ---------------------------------------------------------------------------
// Standard structures

std::string vector_label(const ChartContext& chart, std::size_t i) { return "d/d" + chart.name(i); }
std::string form_label(const ChartContext& chart, std::size_t i) { return "d" + chart.name(i); }

CourantStructure make_twisted_standard(const Chart& chart, const DiffForm& h, bool force) {
  require_same_chart(chart, h.chart(), "make_twisted_standard");
  if (h.degree() != 3) throw Error("twisting form must have degree 3");
  if (!force && !exterior_derivative(h).is_zero()) throw NonClosedTwist();
  const std::size_t n = chart->dimension();
  const std::size_t k = 2 * n;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(vector_label(*chart, i));
  for (std::size_t i = 0; i < n; ++i) labels.push_back(form_label(*chart, i));
  ScalarMatrix g(k, k);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = Scalar(1);
    g(n + i, i) = Scalar(1);
  }
  std::vector<VectorField> anchor;
  for (std::size_t i = 0; i < n; ++i) anchor.push_back(VectorField::coordinate(chart, i));
  for (std::size_t i = 0; i < n; ++i) anchor.emplace_back(chart);
  std::vector<std::vector<Section>> table(k, std::vector<Section>(k, Section(k, n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t m = 0; m < n; ++m) {
        table[i][j][n + m] = h.coefficient({static_cast<std::uint32_t>(i),
                                            static_cast<std::uint32_t>(j),
                                            static_cast<std::uint32_t>(m)});
      }
    }
  }
  return CourantStructure(chart, std::move(labels), std::move(g), std::move(anchor), std::move(table));
}

CourantStructure make_standard(const Chart& chart) {
  return make_twisted_standard(chart, DiffForm(chart, 3));
}

namespace {

void require_standard_layout(const CourantStructure& e) {
  if (e.rank() != 2 * e.nvars()) throw RankMismatch("standard structure layout");
}

}  // namespace

VectorField vector_part(const CourantStructure& standard, const Section& s) {
  require_standard_layout(standard);
  const std::size_t n = standard.nvars();
  if (s.rank() != 2 * n) throw RankMismatch("vector_part");
  std::vector<Polynomial> comps(s.coeffs().begin(), s.coeffs().begin() + static_cast<long>(n));
  return VectorField(standard.chart(), std::move(comps));
}

DiffForm form_part(const CourantStructure& standard, const Section& s) {
  require_standard_layout(standard);
  const std::size_t n = standard.nvars();
  if (s.rank() != 2 * n) throw RankMismatch("form_part");
  std::vector<Polynomial> comps(s.coeffs().begin() + static_cast<long>(n), s.coeffs().end());
  return DiffForm::one_form(standard.chart(), comps);
}

Section standard_section(const CourantStructure& standard, const VectorField& x, const DiffForm& alpha) {
  require_standard_layout(standard);
  const std::size_t n = standard.nvars();
  std::vector<Polynomial> coeffs = x.components();
  auto forms = alpha.one_form_components();
  coeffs.insert(coeffs.end(), forms.begin(), forms.end());
  if (coeffs.size() != 2 * n) throw RankMismatch("standard_section");
  return Section(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Frame changes

Section apply_constant(const ScalarMatrix& m, const Section& s) {
  if (m.cols() != s.rank()) throw RankMismatch("apply_constant");
  Section out(m.rows(), s.nvars());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !s[c].is_zero()) out[r] += s[c] * m(r, c);
    }
  }
  return out;
}

CourantStructure change_frame(const CourantStructure& e, const ScalarMatrix& p,
                              std::vector<std::string> labels) {
  const std::size_t k = e.rank();
  if (p.rows() != k || p.cols() != k || labels.size() != k) throw RankMismatch("change_frame");
  auto p_inv = p.inverse();
  if (!p_inv) throw InvalidStructure("frame change matrix is singular");
  ScalarMatrix g = p.transpose() * e.pairing_matrix() * p;
  std::vector<VectorField> anchor;
  for (std::size_t a = 0; a < k; ++a) {
    VectorField v(e.chart());
    for (std::size_t i = 0; i < k; ++i) {
      if (!p(i, a).is_zero()) v += Polynomial::constant(e.nvars(), p(i, a)) * e.anchor_rows()[i];
    }
    anchor.push_back(std::move(v));
  }
  std::vector<std::vector<Section>> table(k, std::vector<Section>(k, e.zero()));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      Section acc = e.zero();
      for (std::size_t i = 0; i < k; ++i) {
        if (p(i, a).is_zero()) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (p(j, b).is_zero()) continue;
          acc += (p(i, a) * p(j, b)) * e.table_entry(i, j);
        }
      }
      table[a][b] = apply_constant(*p_inv, acc);
    }
  }
  return CourantStructure(e.chart(), std::move(labels), std::move(g), std::move(anchor), std::move(table));
}

CourantStructure reorder(const CourantStructure& e, const std::vector<std::string>& labels) {
  const std::size_t k = e.rank();
  if (labels.size() != k) throw RankMismatch("reorder");
  ScalarMatrix p(k, k);
  std::vector<std::optional<Bidegree>> tags;
  for (std::size_t a = 0; a < k; ++a) {
    int old = e.index_of(labels[a]);
    if (old < 0) throw Error("reorder: unknown label `" + labels[a] + "`");
    p(static_cast<std::size_t>(old), a) = Scalar(1);
    tags.push_back(e.tags()[static_cast<std::size_t>(old)]);
  }
  return change_frame(e, p, labels).with_tags(std::move(tags));
}

}  // namespace courant
