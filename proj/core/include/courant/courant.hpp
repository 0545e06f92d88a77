#pragma once

#include <optional>
#include <string>
#include <vector>

#include "courant/calculus.hpp"
#include "courant/linear_algebra.hpp"

namespace courant {

/// Polynomial coefficient vector over a bundle frame.
class Section {
 public:
  Section() = default;
  Section(std::size_t rank, std::size_t nvars);
  explicit Section(std::vector<Polynomial> coeffs);

  /// The i-th frame element.
  static Section basis(std::size_t rank, std::size_t nvars, std::size_t i);

  std::size_t rank() const { return coeffs_.size(); }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  const Polynomial& operator[](std::size_t i) const { return coeffs_.at(i); }
  Polynomial& operator[](std::size_t i) { return coeffs_.at(i); }

  bool is_zero() const;
  /// Highest total degree among the coefficients (-1 for zero).
  int max_degree() const;

  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  Section& operator*=(const Polynomial& f);
  Section& operator*=(const Scalar& c);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  friend Section operator*(const Polynomial& f, Section a) { return a *= f; }
  friend Section operator*(const Scalar& c, Section a) { return a *= c; }
  Section operator-() const;

  friend bool operator==(const Section& a, const Section& b) {
    return a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Section& a, const Section& b) { return !(a == b); }

 private:
  void check(const Section& o) const;

  std::size_t nvars_ = 0;
  std::vector<Polynomial> coeffs_;
};

/// Bidegree tag of a frame element of a complexified structure.
struct Bidegree {
  int p = 0;
  int q = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// A Courant algebroid presented by frame data over one chart: constant
/// pairing matrix G, polynomial anchor rows rho(e_i), and the table of
/// brackets e_i <> e_j. The bracket of arbitrary sections is obtained from
/// the table by the two Leibniz rules
///
///     phi <> (g psi) = (rho(phi) g) psi + g (phi <> psi)
///     (f phi) <> psi = -(rho(psi) f) phi + f (phi <> psi) + <phi, psi> D f
///
/// Axioms are not enforced here; see verify.hpp.
class CourantStructure {
 public:
  CourantStructure(Chart chart, std::vector<std::string> labels, ScalarMatrix pairing,
                   std::vector<VectorField> anchor, std::vector<std::vector<Section>> table);

  const Chart& chart() const { return chart_; }
  std::size_t nvars() const { return chart_->dimension(); }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Frame index of a label, or -1.
  int index_of(const std::string& label) const;

  const ScalarMatrix& pairing_matrix() const { return pairing_; }
  const ScalarMatrix& pairing_inverse() const { return pairing_inverse_; }
  const std::vector<VectorField>& anchor_rows() const { return anchor_; }
  const std::vector<std::vector<Section>>& bracket_table() const { return table_; }
  const Section& table_entry(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

  const std::vector<std::optional<Bidegree>>& tags() const { return tags_; }
  CourantStructure with_tags(std::vector<std::optional<Bidegree>> tags) const;

  Section zero() const { return Section(rank(), nvars()); }
  Section basis(std::size_t i) const { return Section::basis(rank(), nvars(), i); }
  Section basis(const std::string& label) const;

  /// phi^T G psi.
  Polynomial pairing(const Section& phi, const Section& psi) const;
  /// Sum of phi_i rho(e_i).
  VectorField anchor_apply(const Section& phi) const;
  /// The section with <Df, phi> = rho(phi) f for all phi.
  Section d_operator(const Polynomial& f) const;
  /// Dorfman bracket extended from the frame table.
  Section dorfman(const Section& phi, const Section& psi) const;

  /// `{label: coeff, ...}` or `0`.
  std::string str(const Section& s) const;

  /// Exact equality of all frame data (labels included, tags ignored).
  friend bool operator==(const CourantStructure& a, const CourantStructure& b);

 private:
  void check(const Section& s, const char* where) const;

  Chart chart_;
  std::vector<std::string> labels_;
  ScalarMatrix pairing_;
  ScalarMatrix pairing_inverse_;
  std::vector<VectorField> anchor_;
  std::vector<std::vector<Section>> table_;
  std::vector<std::optional<Bidegree>> tags_;
};

/// Frame labels of the standard structure: `d/dx_i` then `dx_i`.
std::string vector_label(const ChartContext& chart, std::size_t i);
std::string form_label(const ChartContext& chart, std::size_t i);

/// The H-twisted structure on TM + T*M over the chart, frame
/// (d/dx_1..d/dx_n, dx_1..dx_n), duality pairing, anchor the projection to
/// TM, and d/dx_i <> d/dx_j = H(d/dx_i, d/dx_j, -). Throws NonClosedTwist
/// when dH != 0 unless `force` is set.
CourantStructure make_twisted_standard(const Chart& chart, const DiffForm& h, bool force = false);
CourantStructure make_standard(const Chart& chart);

/// Splits a section of a standard structure (frame as built by
/// make_twisted_standard) into its vector and 1-form parts, and back.
VectorField vector_part(const CourantStructure& standard, const Section& s);
DiffForm form_part(const CourantStructure& standard, const Section& s);
Section standard_section(const CourantStructure& standard, const VectorField& x, const DiffForm& alpha);

/// The same structure with its frame permuted to the given label order.
CourantStructure reorder(const CourantStructure& e, const std::vector<std::string>& labels);

/// The structure expressed in the frame u_a = sum_i P(i, a) e_i for a constant
/// invertible P.
CourantStructure change_frame(const CourantStructure& e, const ScalarMatrix& p,
                              std::vector<std::string> labels);

/// Coordinates of a section after a constant change of frame (P^{-1} s).
Section apply_constant(const ScalarMatrix& m, const Section& s);

}  // namespace courant
