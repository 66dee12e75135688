#pragma once

#include "recfac/int.hpp"
#include "recfac/polynomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace recfac {

/// 2x2 integer matrix (alpha beta; gamma delta).
struct GammaMatrix {
  Int alpha{1}, beta{0}, gamma{0}, delta{1};

  static GammaMatrix identity() { return {}; }
  GammaMatrix negated() const { return {-alpha, -beta, -gamma, -delta}; }
  Int determinant() const { return alpha * delta - beta * gamma; }

  friend bool operator==(const GammaMatrix&, const GammaMatrix&) = default;
};

GammaMatrix operator*(const GammaMatrix& lhs, const GammaMatrix& rhs);
std::string to_string(const GammaMatrix& m);

/// The four functionals of a matrix against F = a x^2 + b x + c:
///   Δ  = αδ − aβγ
///   η  = αγ + bβγ + cβδ
///   φ0 = α² + bαβ + acβ²
///   φ1 = aγ² + bγδ + cδ²
struct FormEvaluation {
  Int delta_val;
  Int eta_val;
  Int phi0;
  Int phi1;

  friend bool operator==(const FormEvaluation&, const FormEvaluation&) = default;
};

FormEvaluation evaluate_forms(const Polynomial& f, const GammaMatrix& m);

Int gamma_delta(const Int& a, const GammaMatrix& m);
bool in_gamma(const Int& a, const GammaMatrix& m);

/// φ0 for even m, φ1 for odd m.
const Int& phi_m(const FormEvaluation& forms, std::size_t m);

enum class IdentityBranch { neither, delta_one, second, both };
std::string to_string(IdentityBranch b);

struct IdentityCheck {
  bool holds = false;
  IdentityBranch branch = IdentityBranch::neither;
  /// False when c = 0; the integer branch test c·Δ = −c − bη is still applied.
  bool rational_branch_defined = true;
};

/// Whether F(η) = φ0 φ1, and which side of the characterisation applies:
/// Δ = 1, or c·Δ = −c − b·η (the integer form of Δ = −1 − (b/c)η).
IdentityCheck identity_holds(const Polynomial& f, const GammaMatrix& m);

/// A_0 = I, ..., A_m for the sieving sequence; A_{k+1} = A_k + x_{k+1} B_k with
/// B_k = (aγ_k, δ_k; 0, 0) for odd k and (0, 0; α_k, aβ_k) for even k.
std::vector<GammaMatrix> seq_to_matrix(const Polynomial& f, std::span<const Int> seq);

/// Word U^{x1}, T^{x2}, U^{x3}, ... applied right to left.
struct TransvectionWord {
  std::vector<Int> exponents;

  /// Letters in written order (leftmost first), e.g. "T^4 U^-1 ...".
  std::string to_string() const;
};

struct TransvectionProduct {
  TransvectionWord word;
  GammaMatrix matrix;
};

GammaMatrix transvection_t(const Int& i);
GammaMatrix transvection_u(const Int& i);

TransvectionProduct transvection_word(std::span<const Int> seq);

/// For G(n) = F(n - h): B = A + h (aβ, 0; δ, 0). Requires Δ_F[A] = 1.
GammaMatrix shift_matrix(const Polynomial& f, const Int& h, const GammaMatrix& m);

/// a(αγ + cβδ)² + c(αδ − aβγ)² == (α² + acβ²)(aγ² + cδ²).
bool brahmagupta_check(const Int& a, const Int& c, const GammaMatrix& m);

enum class ExceptionalClass { none, k1, k2, k3 };
std::string to_string(ExceptionalClass k);

/// K1 = {(1,0;s,1), (-1,0;s,-1)}; K2 (a = 1) = {(s,1;-1,0), (s,-1;1,0)};
/// K3 (a = -1) = {(s,1;1,0), (s,-1;-1,0)}.
ExceptionalClass exceptional_class(const Int& a, const GammaMatrix& m);

}  // namespace recfac
