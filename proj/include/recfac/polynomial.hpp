#pragma once

#include "recfac/int.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace recfac {

/// Integer polynomial, coefficient i multiplies x^i. Trailing zeros are
/// trimmed on construction, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs);
  Polynomial(std::initializer_list<long long> coeffs);

  /// a x^2 + b x + c.
  static Polynomial quadratic(const Int& a, const Int& b, const Int& c);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  Int coeff(std::size_t i) const;
  const Int& leading() const;

  // Quadratic accessors: a x^2 + b x + c.
  Int a() const { return coeff(2); }
  Int b() const { return coeff(1); }
  Int c() const { return coeff(0); }

  /// Horner evaluation.
  Int operator()(const Int& x) const;

  /// G(n) = F(n - h).
  Polynomial shifted(const Int& h) const;
  Polynomial negated() const;

  /// Human-readable form such as "3x^2 + 5x + 11".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Int> coeffs_;
};

/// j-th Hasse derivative: coefficient k is C(k+j, j) a_{k+j}.
Polynomial hasse_derivative(const Polynomial& f, int j);

/// Binomial coefficient C(n, k) for small non-negative arguments.
Int binomial(int n, int k);

/// Throws DomainError unless deg f == 2.
void require_quadratic(const Polynomial& f, const char* what);

}  // namespace recfac
