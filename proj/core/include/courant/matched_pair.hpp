#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "courant/courant.hpp"
#include "courant/verify.hpp"

namespace courant {

class Sampler;

/// A connection of one structure (the domain) on the bundle of another (the
/// acted bundle), stored as the table of values on frame pairs
/// nabla_{e_i} v_j and extended by
///
///     nabla_{f psi} v = f nabla_psi v
///     nabla_psi (f v) = (rho(psi) f) v + f nabla_psi v
class Connection {
 public:
  Connection(const CourantStructure& domain, const CourantStructure& acted,
             std::vector<std::vector<Section>> table);
  /// Domain given only by its anchor rows (e.g. a Lie algebroid).
  Connection(Chart chart, std::vector<VectorField> domain_anchor, std::size_t acted_rank,
             std::vector<std::vector<Section>> table);
  /// All table entries zero.
  static Connection trivial(const CourantStructure& domain, const CourantStructure& acted);

  const Chart& chart() const { return chart_; }
  std::size_t domain_rank() const { return anchor_.size(); }
  std::size_t acted_rank() const { return acted_rank_; }
  const std::vector<VectorField>& domain_anchor() const { return anchor_; }
  const std::vector<std::vector<Section>>& table() const { return table_; }
  const Section& entry(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

  Section apply(const Section& psi, const Section& v) const;

  friend bool operator==(const Connection& a, const Connection& b) {
    return a.acted_rank_ == b.acted_rank_ && a.anchor_ == b.anchor_ && a.table_ == b.table_;
  }

 private:
  Chart chart_;
  std::vector<VectorField> anchor_;
  std::size_t acted_rank_;
  std::vector<std::vector<Section>> table_;
};

Section connection_apply(const Connection& nabla, const Section& psi, const Section& v);

/// Values <R(e_a, e_b) v_c, v_d> on frame quadruples.
class CurvatureTensor {
 public:
  CurvatureTensor(std::size_t domain_rank, std::size_t acted_rank, std::size_t nvars);

  std::size_t domain_rank() const { return kd_; }
  std::size_t acted_rank() const { return ka_; }
  const Polynomial& at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;
  Polynomial& at(std::size_t a, std::size_t b, std::size_t c, std::size_t d);
  bool is_zero() const;

 private:
  std::size_t kd_;
  std::size_t ka_;
  std::vector<Polynomial> values_;
};

/// R(a, b) v = nabla_a nabla_b v - nabla_b nabla_a v - nabla_{a <> b} v.
Section curvature_apply(const Connection& nabla, const CourantStructure& domain, const Section& a,
                        const Section& b, const Section& v);
CurvatureTensor curvature(const Connection& nabla, const CourantStructure& domain,
                          const CourantStructure& acted);

/// Two structures over one chart with right = E1 acting on E2 and
/// left = E2 acting on E1.
struct MatchedPairData {
  CourantStructure e1;
  CourantStructure e2;
  Connection right;
  Connection left;

  /// Throws ChartMismatch or RankMismatch on inconsistent data.
  void validate() const;
  friend bool operator==(const MatchedPairData&, const MatchedPairData&) = default;
};

/// Omega(a, b) in E2, determined by <g, Omega(a, b)>_2 = 1/2 (<left_g a, b>_1 - <a, left_g b>_1).
Section omega_map(const MatchedPairData& mp, const Section& a, const Section& b);
/// Mho(alpha, beta) in E1, determined by
/// <c, Mho(alpha, beta)>_1 = 1/2 (<right_c alpha, beta>_2 - <alpha, right_c beta>_2).
/// The flat-connection construction writes this map as Omega(v, v'); it is
/// the same map.
Section mho_map(const MatchedPairData& mp, const Section& alpha, const Section& beta);

/// Block pairing, summed anchor and the bracket table of the direct sum.
/// Labels are those of E1 followed by those of E2 and must be distinct.
CourantStructure matched_sum(const MatchedPairData& mp);

/// Names of the checks run by check_matched_pair, in report order.
const std::vector<std::string>& matched_pair_check_names();

/// Metric preservation, D-flatness, the two derivation conditions, curvature
/// compatibility and the two cyclic conditions, on frame tuples and on
/// `sample.count` random tuples.
VerificationReport check_matched_pair(const MatchedPairData& mp, const SampleSpec& sample = {},
                                      const std::string& subject = {});

/// Residuals of the individual conditions. der_bracket_left is the identity
/// whose left side is left_alpha(a1 <>_1 a2) - ... and lives in E1;
/// der_bracket_right is its mirror in E2.
Section der_bracket_left_residual(const MatchedPairData& mp, const Section& alpha, const Section& a1,
                                  const Section& a2);
Section der_bracket_right_residual(const MatchedPairData& mp, const Section& a, const Section& alpha1,
                                   const Section& alpha2);
/// <R_right(a, b) alpha, beta>_2 + <R_left(alpha, beta) a, b>_1.
Polynomial curvature_compat_residual(const MatchedPairData& mp, const Section& a, const Section& b,
                                     const Section& alpha, const Section& beta);
/// left_{Omega(a1, a2)} a3 + cyclic.
Section cyclic_left_residual(const MatchedPairData& mp, const Section& a1, const Section& a2, const Section& a3);
/// right_{Mho(alpha1, alpha2)} alpha3 + cyclic.
Section cyclic_right_residual(const MatchedPairData& mp, const Section& alpha1, const Section& alpha2,
                              const Section& alpha3);

/// Outcome of split: the two factors with their induced connections and the
/// mixed maps on frame pairs.
struct SplitResult {
  MatchedPairData pair;
  /// omega[i][j] = Omega(u_i, u_j), computed from the bracket of E.
  std::vector<std::vector<Section>> omega;
  /// mho[i][j] = Mho(w_i, w_j), computed from the bracket of E.
  std::vector<std::vector<Section>> mho;
};

/// Splits E along two constant frames u (for E1) and w (for E2). The frames
/// must together span E, be mutually orthogonal, and restrict to invertible
/// pairings. Throws NotOrthogonal or DegenerateRestriction.
SplitResult split(const CourantStructure& e, const std::vector<Section>& u, std::vector<std::string> u_labels,
                  const std::vector<Section>& w, std::vector<std::string> w_labels);

/// Structure with the given pairing, zero anchor and zero bracket.
CourantStructure make_trivial_structure(const Chart& chart, std::vector<std::string> labels,
                                        ScalarMatrix pairing);

/// Flat-connection pair: E1 with the trivial structure V and a connection of E1
/// on V; the connection of V on E1 is zero.
MatchedPairData merker_pair(const CourantStructure& e1, const CourantStructure& v,
                            std::vector<std::vector<Section>> table);

/// Random candidate for the matched-pair conditions. E1 is the standard
/// structure on R^2, E2 a trivial structure of rank 2 or 3 with unit
/// pairing; the connection of E1 on E2 acts through so(E2) along d/dx and
/// d/dy only, and the connection of E2 on E1 is either zero or a constant
/// metric perturbation. Flat and non-flat cases are both produced.
MatchedPairData random_matched_pair_candidate(Sampler& sampler, int max_degree);

}  // namespace courant
