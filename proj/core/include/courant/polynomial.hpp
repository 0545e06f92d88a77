#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "courant/chart.hpp"
#include "courant/scalar.hpp"

namespace courant {

using Exponent = std::vector<std::uint32_t>;

/// Descending graded-lexicographic order: higher total degree first, ties
/// broken lexicographically with the first coordinate most significant.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

std::uint32_t total_degree(const Exponent& e);

/// Exact multivariate polynomial over Q(i) in a fixed number of variables.
/// Zero coefficients are never stored, so the term map is the canonical form
/// and equality is map equality.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Scalar, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(Exponent exponent, const Scalar& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Scalar constant_term() const;
  Scalar coefficient(const Exponent& e) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Highest exponent of one variable (0 for constants and zero).
  std::uint32_t degree_in(std::size_t var) const;

  void add_term(const Exponent& e, const Scalar& c);

  Polynomial derivative(std::size_t var) const;
  /// Complex conjugation of every coefficient.
  Polynomial conj() const;
  /// Variable relabelling: variable j becomes variable perm[j].
  Polynomial permute_variables(const std::vector<std::size_t>& perm) const;
  Polynomial pow(unsigned n) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical text over the given coordinate names.
  std::string str(const std::vector<std::string>& names) const;
  std::string str(const ChartContext& chart) const { return str(chart.names()); }

 private:
  void check_vars(const Polynomial& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace courant
