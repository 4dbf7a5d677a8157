#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cliffkin/errors.hpp"
#include "cliffkin/linalg.hpp"
#include "cliffkin/polynomial.hpp"

namespace cliffkin {

/// A polynomial that is homogeneous of degree exactly 2 (and not zero).
class QuadricForm {
 public:
  explicit QuadricForm(Polynomial p) : poly_(std::move(p)) {
    if (poly_.is_zero() || !poly_.is_homogeneous(2))
      throw NotHomogeneousQuadric("not a homogeneous quadratic form: " + to_string(poly_));
  }

  [[nodiscard]] const Polynomial& polynomial() const { return poly_; }
  [[nodiscard]] std::vector<std::string> variables() const { return poly_.variables(); }

  /// Monomial basis {v_i v_j : i <= j} over the given variables, in that order.
  static std::vector<Monomial> monomial_basis(const std::vector<std::string>& vars) {
    std::vector<Monomial> basis;
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i; j < vars.size(); ++j)
        basis.push_back(Monomial::variable(vars[i]) * Monomial::variable(vars[j]));
    return basis;
  }

  /// Coordinates over monomial_basis(vars); vars must cover the form's variables.
  [[nodiscard]] std::vector<Rational> coefficient_vector(const std::vector<std::string>& vars) const {
    auto basis = monomial_basis(vars);
    std::vector<Rational> out;
    out.reserve(basis.size());
    std::size_t covered = 0;
    for (const auto& m : basis) {
      out.push_back(poly_.coefficient(m));
      if (!is_zero(out.back())) ++covered;
    }
    if (covered != poly_.size()) throw Error("variable list does not cover quadric " + to_string(poly_));
    return out;
  }

  /// Symmetric B with form = x^T B x.
  [[nodiscard]] Matrix<Rational> symmetric_matrix(const std::vector<std::string>& vars) const {
    Matrix<Rational> b(vars.size(), vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i; j < vars.size(); ++j) {
        Rational c = poly_.coefficient(Monomial::variable(vars[i]) * Monomial::variable(vars[j]));
        if (i == j) {
          b(i, i) = c;
        } else {
          b(i, j) = c / 2;
          b(j, i) = c / 2;
        }
      }
    return b;
  }

  [[nodiscard]] Inertia inertia() const { return cliffkin::inertia(symmetric_matrix(variables())); }

  friend bool operator==(const QuadricForm&, const QuadricForm&) = default;

 private:
  Polynomial poly_;
};

inline std::string to_string(const QuadricForm& q) { return to_string(q.polynomial()); }

/// Union of the variables of several forms, natural order.
inline std::vector<std::string> shared_variables(const std::vector<QuadricForm>& forms) {
  std::set<std::string, VariableOrder> vars;
  for (const auto& f : forms)
    for (auto& v : f.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

/// Row-reduced basis of the linear span of a set of quadrics.
struct QuadricSpan {
  std::vector<std::string> variables;
  std::vector<Monomial> monomials;
  Matrix<Rational> basis;  // rank x monomials.size(), reduced row echelon

  [[nodiscard]] std::size_t rank() const { return basis.rows(); }

  [[nodiscard]] std::vector<QuadricForm> forms() const {
    std::vector<QuadricForm> out;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      Polynomial p;
      for (std::size_t j = 0; j < monomials.size(); ++j)
        p += Polynomial::term(monomials[j], basis(i, j));
      out.emplace_back(std::move(p));
    }
    return out;
  }
};

/// Exact Gaussian elimination over the coefficient matrix; `vars` widens the column universe.
inline QuadricSpan quadric_span_reduce(const std::vector<QuadricForm>& forms,
                                       std::vector<std::string> vars = {}) {
  if (vars.empty()) vars = shared_variables(forms);
  QuadricSpan span;
  span.variables = vars;
  span.monomials = QuadricForm::monomial_basis(vars);
  Matrix<Rational> m(forms.size(), span.monomials.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto row = forms[i].coefficient_vector(vars);
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = row[j];
  }
  RowEchelon e = rref(std::move(m));
  span.basis = Matrix<Rational>(e.rank(), span.monomials.size());
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (std::size_t j = 0; j < span.monomials.size(); ++j) span.basis(i, j) = e.reduced(i, j);
  return span;
}

/// True iff both sets span the same space of quadratic forms.
inline bool same_span(const std::vector<QuadricForm>& a, const std::vector<QuadricForm>& b) {
  std::vector<QuadricForm> all = a;
  all.insert(all.end(), b.begin(), b.end());
  auto vars = shared_variables(all);
  return quadric_span_reduce(a, vars).basis == quadric_span_reduce(b, vars).basis;
}

/// True iff `form` lies in the span of `forms`.
inline bool in_span(const QuadricForm& form, const std::vector<QuadricForm>& forms) {
  std::vector<QuadricForm> all = forms;
  all.push_back(form);
  auto vars = shared_variables(all);
  return quadric_span_reduce(forms, vars).rank() == quadric_span_reduce(all, vars).rank();
}

}  // namespace cliffkin
