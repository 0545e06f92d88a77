#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "courant/chart.hpp"
#include "courant/polynomial.hpp"

namespace courant {

/// Polynomial vector field: one coefficient per coordinate direction.
class VectorField {
 public:
  explicit VectorField(Chart chart);
  VectorField(Chart chart, std::vector<Polynomial> components);

  /// The coordinate field d/dx_i.
  static VectorField coordinate(const Chart& chart, std::size_t i);

  const Chart& chart() const { return chart_; }
  std::size_t dimension() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_.at(i); }
  Polynomial& operator[](std::size_t i) { return components_.at(i); }

  bool is_zero() const;

  /// Directional derivative X(f).
  Polynomial apply(const Polynomial& f) const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Polynomial& f);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Polynomial& f, VectorField a) { return a *= f; }
  VectorField operator-() const;

  friend bool operator==(const VectorField& a, const VectorField& b) {
    return same_chart(a.chart_, b.chart_) && a.components_ == b.components_;
  }

  /// Text such as `x*d/dy - d/dx`.
  std::string str() const;

 private:
  Chart chart_;
  std::vector<Polynomial> components_;
};

/// Strictly increasing list of coordinate indices naming dx_{i1}^...^dx_{ip}.
using FormIndex = std::vector<std::uint32_t>;

/// Polynomial differential form of fixed degree.
class DiffForm {
 public:
  using TermMap = std::map<FormIndex, Polynomial>;

  DiffForm(Chart chart, std::size_t degree);

  /// Degree-0 form.
  static DiffForm function(const Chart& chart, const Polynomial& f);
  /// dx_i.
  static DiffForm differential(const Chart& chart, std::size_t i);
  /// A 1-form from its coefficients along dx_1..dx_n.
  static DiffForm one_form(const Chart& chart, const std::vector<Polynomial>& coeffs);

  const Chart& chart() const { return chart_; }
  std::size_t degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of dx_I for an arbitrary (unsorted) index list, with the
  /// permutation sign applied; zero for repeated indices.
  Polynomial coefficient(const FormIndex& indices) const;
  /// Coefficients of a 1-form along dx_1..dx_n.
  std::vector<Polynomial> one_form_components() const;
  /// Value of a degree-0 form.
  Polynomial as_function() const;

  /// Adds f * dx_{indices}; indices may be unsorted.
  void add_term(const FormIndex& indices, const Polynomial& f);

  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  DiffForm& operator*=(const Polynomial& f);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  friend DiffForm operator*(const Polynomial& f, DiffForm a) { return a *= f; }
  DiffForm operator-() const;

  friend bool operator==(const DiffForm& a, const DiffForm& b) {
    return same_chart(a.chart_, b.chart_) && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Text such as `y*dx^dz + x*dy^dz`.
  std::string str() const;

 private:
  void check(const DiffForm& o, const char* where) const;

  Chart chart_;
  std::size_t degree_;
  TermMap terms_;
};

/// Sorts `indices` in place and returns the permutation sign, or 0 when an
/// index repeats.
int sort_with_sign(FormIndex& indices);

VectorField lie_bracket(const VectorField& x, const VectorField& y);
DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_derivative(const DiffForm& form);
/// Contraction in the first slot. Degree-0 input gives the zero function.
DiffForm interior_product(const VectorField& x, const DiffForm& form);
/// form(x, y, -): inserts x first, then y.
DiffForm insert_pair(const VectorField& x, const VectorField& y, const DiffForm& form);
/// Cartan formula: i_X d + d i_X.
DiffForm lie_derivative(const VectorField& x, const DiffForm& form);
/// Full evaluation form(v_1, ..., v_p).
Polynomial evaluate(const DiffForm& form, const std::vector<VectorField>& args);

}  // namespace courant
