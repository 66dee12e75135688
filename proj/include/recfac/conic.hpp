#pragma once

#include "recfac/gamma.hpp"
#include "recfac/int.hpp"
#include "recfac/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recfac {

/// a X² + b XY + c Y² + X − n Y = 0 with (a, b, c) taken from F.
struct ConicInstance {
  Polynomial poly;
  Int n;

  ConicInstance(Polynomial f, Int n_value);

  /// b² − 4ac.
  Int discriminant() const;
  Int evaluate(const Int& x, const Int& y) const;
  /// "X^2 - XY + 5Y^2 + X - 20Y = 0" style text.
  std::string equation() const;
};

struct LatticePoint {
  Int X;
  Int Y;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator<(const LatticePoint& l, const LatticePoint& r) {
    return l.X != r.X ? l.X < r.X : l.Y < r.Y;
  }
};

/// U² − D V² = 4a F(n).
struct PellPoint {
  Int U;
  Int V;
  Int D;

  friend bool operator==(const PellPoint&, const PellPoint&) = default;
};

bool on_conic(const ConicInstance& inst, const LatticePoint& p);

/// Closed integer range of Y values that can carry a real point of an
/// elliptic conic (D < 0).
std::pair<Int, Int> ellipse_y_range(const ConicInstance& inst);

/// Sorted, duplicate-free integer solutions. For D < 0 the curve is bounded
/// and `box` only trims; for D >= 0 `box` (|X|, |Y| <= B) is mandatory.
std::vector<LatticePoint> enumerate_points(const ConicInstance& inst, std::optional<Int> box = std::nullopt);

/// (α β; γ δ) ↦ (βγ, βδ). Requires Δ_a[A] = 1.
LatticePoint psi(const Int& a, const GammaMatrix& m);

/// (X, Y) ↦ ((G/Y)(1 + aX), G; X/G, Y/G) with G = gcd(X, Y) > 0.
/// Throws for Y = 0 (exceptional points) and when the result is not in Γ_a.
GammaMatrix psi_inv(const Int& a, const LatticePoint& p);

struct PointFactorization {
  Int p;  // φ0
  Int q;  // φ1
  Int n;  // η
  GammaMatrix matrix;
  ExceptionalClass exceptional = ExceptionalClass::none;
};

/// Factor pair carried by a lattice point. Exceptional points (Y = 0) map
/// to the trivial factorization of their class representative with η = n.
PointFactorization point_to_factorization(const ConicInstance& inst, const LatticePoint& p);

/// U = D·Y + (b + 2an), V = 2aX + bY + 1. Requires D ≠ 0 and P on the conic.
PellPoint pell_reduce(const ConicInstance& inst, const LatticePoint& p);

}  // namespace recfac
