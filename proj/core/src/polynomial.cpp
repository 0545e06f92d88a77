#include "courant/polynomial.hpp"

#include <numeric>

#include "courant/error.hpp"

namespace courant {

std::uint32_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  auto da = total_degree(a);
  auto db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  Polynomial p(nvars);
  p.terms_.emplace(std::move(e), Scalar(1));
  return p;
}

Polynomial Polynomial::monomial(Exponent exponent, const Scalar& c) {
  Polynomial p(exponent.size());
  if (!c.is_zero()) p.terms_.emplace(std::move(exponent), c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && courant::total_degree(terms_.begin()->first) == 0);
}

Scalar Polynomial::constant_term() const { return coefficient(Exponent(nvars_, 0)); }

Scalar Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(courant::total_degree(terms_.begin()->first));
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) throw Error("exponent length does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_vars(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw ChartMismatch("polynomial arithmetic");
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.terms_.emplace(std::move(d), c * Scalar(static_cast<long>(e[var])));
  }
  return out;
}

Polynomial Polynomial::conj() const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
  return out;
}

Polynomial Polynomial::permute_variables(const std::vector<std::size_t>& perm) const {
  if (perm.size() != nvars_) throw Error("permutation length does not match variable count");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent m(nvars_, 0);
    for (std::size_t j = 0; j < nvars_; ++j) m[perm[j]] = e[j];
    out.terms_.emplace(std::move(m), c);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(nvars_, Scalar(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_vars(b);
  Polynomial out(a.nvars_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  Exponent m(a.nvars_);
  Scalar c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < m.size(); ++j) m[j] = ea[j] + eb[j];
      c = ca;
      c *= cb;
      auto it = out.terms_.find(m);
      if (it == out.terms_.end()) {
        out.terms_.emplace_hint(it, m, std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw Error("name list does not match variable count");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[j];
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    std::string term;
    if (mono.empty()) {
      term = c.str();
    } else if (c.is_one()) {
      term = mono;
    } else if (c == Scalar(-1)) {
      term = "-" + mono;
    } else {
      term = c.str() + "*" + mono;
    }
    if (first) {
      out = term;
      first = false;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace courant
