#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "z2c/rational.hpp"

namespace z2c {

/// Exponent vector of a monomial, with its total degree cached.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint16_t>& exponents() const noexcept { return exps_; }

  void set(std::size_t i, std::uint16_t e);
  Monomial operator*(const Monomial& rhs) const;

  bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }

  /// Graded lexicographic order: higher total degree first, then lexicographically
  /// larger exponent vectors (variable 1 most significant).
  static bool grlex_greater(const Monomial& a, const Monomial& b);

private:
  std::vector<std::uint16_t> exps_;
  unsigned degree_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients over a fixed
/// number of variables. Terms are kept in descending grlex order with no zero
/// coefficients, so structural equality is polynomial equality.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  /// Linear form sum_i coeffs[i] * x_i.
  static Poly linear(const RatVector& coeffs);
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator-() const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const Rational& s) const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  bool operator==(const Poly& rhs) const;

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t var) const;
  /// x_to * d/dx_from applied to the polynomial.
  Poly derivation(std::size_t from, std::size_t to) const;
  /// Directional derivative sum_i dir[i] * d/dx_i.
  Poly directional_derivative(const RatVector& dir) const;
  Rational evaluate(const RatVector& point) const;
  RatVector gradient_at(const RatVector& point) const;

  /// Sum of the terms of total degree d.
  Poly homogeneous_component(unsigned d) const;

  /// Terms whose degree in the variables flagged by `mask` is maximal.
  Poly top_component(const std::vector<bool>& mask) const;
  /// Maximal degree in the variables flagged by `mask`; -1 for zero.
  int degree_in(const std::vector<bool>& mask) const;

  /// Coefficient vector of a linear form (requires degree <= 1, constant term ignored).
  RatVector linear_coefficients() const;

  /// Text form "c*x^a*y^b+..." using `labels` for variable names.
  std::string to_string(const std::vector<std::string>& labels) const;

private:
  void normalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Default variable names x1..xn.
std::vector<std::string> default_labels(std::size_t nvars);

/// Parses a sum of terms `[coeff][*]var[^e]*...` with exact fraction coefficients
/// over the given variable names. Throws ParseError.
Poly parse_poly(std::string_view text, const std::vector<std::string>& labels);

/// Abort symbolic products whose term-count product exceeds `budget`; 0 means unlimited.
struct TermBudget {
  std::size_t max_term_product = 0;
  void check(const Poly& a, const Poly& b) const;
};

}  // namespace z2c
