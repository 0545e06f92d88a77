#include "courant/calculus.hpp"

#include <algorithm>

namespace courant {

namespace {

std::string coefficient_prefix(const Polynomial& c, const ChartContext& chart) {
  if (c == Polynomial::constant(c.nvars(), Scalar(1))) return "";
  if (c == Polynomial::constant(c.nvars(), Scalar(-1))) return "-";
  std::string s = c.str(chart);
  if (c.size() > 1) return "(" + s + ")*";
  return s + "*";
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// VectorField

VectorField::VectorField(Chart chart)
    : chart_(std::move(chart)),
      components_(chart_->dimension(), Polynomial(chart_->dimension())) {}

VectorField::VectorField(Chart chart, std::vector<Polynomial> components)
    : chart_(std::move(chart)), components_(std::move(components)) {
  if (components_.size() != chart_->dimension()) throw RankMismatch("vector field");
  for (const auto& c : components_) {
    if (c.nvars() != chart_->dimension()) throw ChartMismatch("vector field component");
  }
}

VectorField VectorField::coordinate(const Chart& chart, std::size_t i) {
  VectorField v(chart);
  v.components_.at(i) = Polynomial::constant(chart->dimension(), Scalar(1));
  return v;
}

bool VectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial VectorField::apply(const Polynomial& f) const {
  Polynomial out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (components_[i].is_zero()) continue;
    Polynomial d = f.derivative(i);
    if (d.is_zero()) continue;
    out += components_[i] * d;
  }
  return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same_chart(chart_, o.chart_, "vector field sum");
  for (std::size_t i = 0; i < dimension(); ++i) components_[i] += o.components_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  require_same_chart(chart_, o.chart_, "vector field difference");
  for (std::size_t i = 0; i < dimension(); ++i) components_[i] -= o.components_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Polynomial& f) {
  for (auto& c : components_) c *= f;
  return *this;
}

VectorField VectorField::operator-() const {
  VectorField out(chart_);
  for (std::size_t i = 0; i < dimension(); ++i) out.components_[i] = -components_[i];
  return out;
}

std::string VectorField::str() const {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (components_[i].is_zero()) continue;
    terms.push_back(coefficient_prefix(components_[i], *chart_) + "d/d" + chart_->name(i));
  }
  return join_terms(terms);
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_chart(x.chart(), y.chart(), "lie_bracket");
  std::vector<Polynomial> out;
  out.reserve(x.dimension());
  for (std::size_t k = 0; k < x.dimension(); ++k) out.push_back(x.apply(y[k]) - y.apply(x[k]));
  return VectorField(x.chart(), std::move(out));
}

// ---------------------------------------------------------------------------
// DiffForm

int sort_with_sign(FormIndex& indices) {
  int sign = 1;
  // insertion sort; index lists are short
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] == indices[i - 1]) return 0;
  }
  return sign;
}

DiffForm::DiffForm(Chart chart, std::size_t degree) : chart_(std::move(chart)), degree_(degree) {}

DiffForm DiffForm::function(const Chart& chart, const Polynomial& f) {
  DiffForm out(chart, 0);
  out.add_term({}, f);
  return out;
}

DiffForm DiffForm::differential(const Chart& chart, std::size_t i) {
  if (i >= chart->dimension()) throw Error("coordinate index out of range");
  DiffForm out(chart, 1);
  out.add_term({static_cast<std::uint32_t>(i)}, Polynomial::constant(chart->dimension(), Scalar(1)));
  return out;
}

DiffForm DiffForm::one_form(const Chart& chart, const std::vector<Polynomial>& coeffs) {
  if (coeffs.size() != chart->dimension()) throw RankMismatch("one_form");
  DiffForm out(chart, 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out.add_term({static_cast<std::uint32_t>(i)}, coeffs[i]);
  }
  return out;
}

Polynomial DiffForm::coefficient(const FormIndex& indices) const {
  if (indices.size() != degree_) throw Error("index count does not match form degree");
  FormIndex sorted = indices;
  int sign = sort_with_sign(sorted);
  std::size_t n = chart_->dimension();
  if (sign == 0) return Polynomial(n);
  auto it = terms_.find(sorted);
  if (it == terms_.end()) return Polynomial(n);
  return sign > 0 ? it->second : -it->second;
}

std::vector<Polynomial> DiffForm::one_form_components() const {
  if (degree_ != 1) throw Error("not a 1-form");
  std::size_t n = chart_->dimension();
  std::vector<Polynomial> out(n, Polynomial(n));
  for (const auto& [idx, c] : terms_) out[idx[0]] = c;
  return out;
}

Polynomial DiffForm::as_function() const {
  if (degree_ != 0) throw Error("not a function");
  auto it = terms_.find({});
  return it == terms_.end() ? Polynomial(chart_->dimension()) : it->second;
}

void DiffForm::add_term(const FormIndex& indices, const Polynomial& f) {
  if (indices.size() != degree_) throw Error("index count does not match form degree");
  if (f.nvars() != chart_->dimension()) throw ChartMismatch("form coefficient");
  for (auto i : indices) {
    if (i >= chart_->dimension()) throw Error("coordinate index out of range");
  }
  if (f.is_zero()) return;
  FormIndex sorted = indices;
  int sign = sort_with_sign(sorted);
  if (sign == 0) return;
  auto [it, inserted] = terms_.try_emplace(sorted, Polynomial(chart_->dimension()));
  if (sign > 0) {
    it->second += f;
  } else {
    it->second -= f;
  }
  if (it->second.is_zero()) terms_.erase(it);
}

void DiffForm::check(const DiffForm& o, const char* where) const {
  require_same_chart(chart_, o.chart_, where);
  if (degree_ != o.degree_) throw Error(std::string("degree mismatch in ") + where);
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  check(o, "form sum");
  for (const auto& [idx, c] : o.terms_) add_term(idx, c);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
  check(o, "form difference");
  for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
  return *this;
}

DiffForm& DiffForm::operator*=(const Polynomial& f) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= f;
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

DiffForm DiffForm::operator-() const {
  DiffForm out(chart_, degree_);
  for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, -c);
  return out;
}

std::string DiffForm::str() const {
  std::vector<std::string> terms;
  for (const auto& [idx, c] : terms_) {
    if (idx.empty()) {
      terms.push_back(c.str(*chart_));
      continue;
    }
    std::string basis;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) basis += "^";
      basis += "d" + chart_->name(idx[k]);
    }
    terms.push_back(coefficient_prefix(c, *chart_) + basis);
  }
  return join_terms(terms);
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  require_same_chart(a.chart(), b.chart(), "wedge");
  DiffForm out(a.chart(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      FormIndex idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(idx, ca * cb);
    }
  }
  return out;
}

DiffForm exterior_derivative(const DiffForm& form) {
  const auto& chart = form.chart();
  DiffForm out(chart, form.degree() + 1);
  for (const auto& [idx, c] : form.terms()) {
    for (std::size_t j = 0; j < chart->dimension(); ++j) {
      Polynomial d = c.derivative(j);
      if (d.is_zero()) continue;
      FormIndex full;
      full.reserve(idx.size() + 1);
      full.push_back(static_cast<std::uint32_t>(j));
      full.insert(full.end(), idx.begin(), idx.end());
      out.add_term(full, d);
    }
  }
  return out;
}

DiffForm interior_product(const VectorField& x, const DiffForm& form) {
  require_same_chart(x.chart(), form.chart(), "interior_product");
  if (form.degree() == 0) return DiffForm(form.chart(), 0);
  DiffForm out(form.chart(), form.degree() - 1);
  for (const auto& [idx, c] : form.terms()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Polynomial& xk = x[idx[k]];
      if (xk.is_zero()) continue;
      FormIndex rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t m = 0; m < idx.size(); ++m) {
        if (m != k) rest.push_back(idx[m]);
      }
      Polynomial term = xk * c;
      if (k % 2 == 1) term = -term;
      out.add_term(rest, term);
    }
  }
  return out;
}

DiffForm insert_pair(const VectorField& x, const VectorField& y, const DiffForm& form) {
  if (form.degree() < 2) return DiffForm(form.chart(), 0);
  return interior_product(y, interior_product(x, form));
}

DiffForm lie_derivative(const VectorField& x, const DiffForm& form) {
  require_same_chart(x.chart(), form.chart(), "lie_derivative");
  DiffForm out = interior_product(x, exterior_derivative(form));
  if (form.degree() > 0) out += exterior_derivative(interior_product(x, form));
  return out;
}

Polynomial evaluate(const DiffForm& form, const std::vector<VectorField>& args) {
  if (args.size() != form.degree()) throw Error("argument count does not match form degree");
  DiffForm cur = form;
  for (const auto& v : args) cur = interior_product(v, cur);
  return cur.as_function();
}

}  // namespace courant
