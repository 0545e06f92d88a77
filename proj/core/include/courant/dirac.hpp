#pragma once

#include <string>
#include <vector>

#include "courant/linear_algebra.hpp"
#include "courant/matched_pair.hpp"
#include "courant/verify.hpp"

namespace courant {

/// A rank r subbundle of a rank 2r host, spanned by `frame`. `complement`
/// holds r more sections such that the 2r combined sections have a
/// coefficient matrix with nonzero constant determinant, so the frame has
/// constant rank and coefficients can be solved for polynomially.
class DiracFrame {
 public:
  /// Throws RankMismatch on shape errors and BadComplementCertificate when
  /// the combined determinant is not a nonzero constant.
  DiracFrame(CourantStructure host, std::vector<Section> frame, std::vector<Section> complement,
             std::vector<std::string> labels = {});

  const CourantStructure& host() const { return host_; }
  std::size_t rank() const { return frame_.size(); }
  const std::vector<Section>& frame() const { return frame_; }
  const std::vector<Section>& complement() const { return complement_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Coordinates of s in the combined frame: first the D part, then the
  /// complement part.
  std::vector<Polynomial> coordinates(const Section& s) const;
  /// D-coordinates of s; throws NotIntegrable when s has a complement part.
  Section in_frame(const Section& s) const;
  /// sum_i c_i d_i.
  Section combine(const Section& coeffs) const;

 private:
  CourantStructure host_;
  std::vector<Section> frame_;
  std::vector<Section> complement_;
  std::vector<std::string> labels_;
  PolyMatrix inverse_;
};

/// Lie algebroid on a trivial bundle: anchor rows and the bracket table on
/// frame pairs, extended by the Leibniz rule.
class LieAlgebroid {
 public:
  /// Throws InvalidStructure unless the table is antisymmetric.
  LieAlgebroid(Chart chart, std::vector<std::string> labels, std::vector<VectorField> anchor,
               std::vector<std::vector<Section>> table);

  const Chart& chart() const { return chart_; }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<VectorField>& anchor_rows() const { return anchor_; }
  const std::vector<std::vector<Section>>& bracket_table() const { return table_; }
  const Section& table_entry(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

  Section zero() const { return Section(rank(), chart_->dimension()); }
  Section basis(std::size_t i) const { return Section::basis(rank(), chart_->dimension(), i); }
  VectorField anchor_apply(const Section& a) const;
  Section bracket(const Section& a, const Section& b) const;
  std::string str(const Section& s) const;

  /// TM with the coordinate frame d/dx_i.
  static LieAlgebroid tangent(const Chart& chart);

  friend bool operator==(const LieAlgebroid& a, const LieAlgebroid& b);

 private:
  Chart chart_;
  std::vector<std::string> labels_;
  std::vector<VectorField> anchor_;
  std::vector<std::vector<Section>> table_;
};

/// Jacobi and the anchor morphism property on frame triples and random sections.
VerificationReport check_lie_algebroid(const LieAlgebroid& a, const SampleSpec& sample = {},
                                       const std::string& subject = {});

/// A and A' with a flat A-connection on A' (right) and a flat A'-connection on A (left).
struct LieMatchedPairData {
  LieAlgebroid a;
  LieAlgebroid a_prime;
  Connection right;
  Connection left;

  static LieMatchedPairData with_trivial_connections(LieAlgebroid a, LieAlgebroid a_prime);
};

/// flat_right, flat_left, compat_left, compat_right, then sum_jacobi and
/// sum_anchor for lie_matched_sum.
const std::vector<std::string>& lie_matched_pair_check_names();
VerificationReport check_lie_matched_pair(const LieMatchedPairData& lmp, const SampleSpec& sample = {},
                                          const std::string& subject = {});

/// A + A' with anchor rho_A + rho_A' and
/// [a + alpha, b + beta] = ([a, b] + left_alpha b - left_beta a) + ([alpha, beta] + right_a beta - right_b alpha).
LieAlgebroid lie_matched_sum(const LieMatchedPairData& lmp);

/// Checks: isotropy on frame pairs, integrability by the pairing test
/// <phi <> psi, chi> = 0 on frame triples and random sections of D. Throws
/// InvalidStructure when a real host pairing is not of split signature.
VerificationReport check_dirac(const DiracFrame& d, const SampleSpec& sample = {}, const std::string& subject = {});

/// D1 + D2 inside matched_sum(mp).
DiracFrame dirac_direct_sum(const MatchedPairData& mp, const DiracFrame& d1, const DiracFrame& d2);

/// Dirac checks of D1 and D2 (prefixed d1., d2.), left_membership
/// (left_alpha a in D1), right_membership (right_a alpha in D2), and the
/// Dirac checks of D1 + D2 in the matched sum (prefixed sum.).
VerificationReport check_matched_dirac(const MatchedPairData& mp, const DiracFrame& d1, const DiracFrame& d2,
                                       const SampleSpec& sample = {}, const std::string& subject = {});

/// Anchor restricted to D and the host bracket written in the D frame.
/// Throws NotIntegrable when a frame bracket leaves D.
LieAlgebroid dirac_to_lie(const DiracFrame& d);

/// The Lie algebroids of D1 and D2 with the restricted connections. Throws
/// NotIntegrable when a connection does not preserve the Dirac structures.
LieMatchedPairData restrict_to_dirac(const MatchedPairData& mp, const DiracFrame& d1, const DiracFrame& d2);

/// Graph of omega^#(X) = i_X omega in a standard structure (frame d/dx_i, dx_i,
/// found by label): d/dx_i + i_{d/dx_i} omega, complement dx_i.
DiracFrame graph_of_two_form(const CourantStructure& standard, const DiffForm& omega);

/// Graph of pi^#(alpha) = pi(alpha, -): dx_i + sum_j pi[i][j] d/dx_j,
/// complement d/dx_i. `pi` is the antisymmetric matrix pi(dx_i, dx_j).
DiracFrame graph_of_bivector(const CourantStructure& standard, const PolyMatrix& pi);

/// Graph of L^#(e_a) = L(e_a, -) in V = E + E* with frame e_1..e_k, f_1..f_k
/// and the duality pairing: e_a + sum_b l[a][b] f_b, complement f_a.
DiracFrame graph_of_pairing_map(const CourantStructure& v, const PolyMatrix& l);

/// In the flat-connection matched sum CM + (E + E*), labels d/dx_i, dx_i,
/// e_a, f_a: the graph of TM + E* -> T*M + E given by the block matrix
/// [[omega^#, -B^*], [B, 0]] with B = A o omega^#. `a[a][i]` is the e_a
/// component of A(dx_i). Frame d/dx_i + omega^# d/dx_i + B d/dx_i and
/// f_a - B^* f_a, complement dx_i and e_a. Throws InvalidStructure if the
/// result is not isotropic.
DiracFrame port_hamiltonian_graph(const CourantStructure& sum, const DiffForm& omega, const PolyMatrix& a);

}  // namespace courant
