#include "recfac/conic.hpp"

#include "recfac/error.hpp"

#include <algorithm>
#include <sstream>

namespace recfac {

ConicInstance::ConicInstance(Polynomial f, Int n_value) : poly(std::move(f)), n(std::move(n_value)) {
  require_quadratic(poly, "conic needs a quadratic polynomial");
}

Int ConicInstance::discriminant() const { return poly.b() * poly.b() - 4 * poly.a() * poly.c(); }

Int ConicInstance::evaluate(const Int& x, const Int& y) const {
  return poly.a() * x * x + poly.b() * x * y + poly.c() * y * y + x - n * y;
}

std::string ConicInstance::equation() const {
  const Polynomial& f = poly;
  const std::pair<Int, const char*> terms[] = {
      {f.a(), "X^2"}, {f.b(), "XY"}, {f.c(), "Y^2"}, {Int(1), "X"}, {-n, "Y"}};
  std::ostringstream os;
  bool first = true;
  for (const auto& [coeff, mono] : terms) {
    if (coeff == 0) continue;
    if (first) {
      os << (coeff < 0 ? "-" : "");
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    if (abs(coeff) != 1) os << abs(coeff);
    os << mono;
    first = false;
  }
  os << " = 0";
  return os.str();
}

bool on_conic(const ConicInstance& inst, const LatticePoint& p) { return inst.evaluate(p.X, p.Y) == 0; }

std::pair<Int, Int> ellipse_y_range(const ConicInstance& inst) {
  const Int d = inst.discriminant();
  if (d >= 0) throw DomainError("unbounded conic requires a search box");
  const Int a = inst.poly.a();
  const Int b = inst.poly.b();
  // Real X exists iff D Y² + (2b + 4an) Y + 1 >= 0; that quadratic in Y has
  // discriminant 16 a F(n) and opens downward.
  const Int lin = 2 * b + 4 * a * inst.n;
  const Int root_disc = 16 * a * inst.poly(inst.n);
  const Int w = isqrt(std::max(root_disc, Int(0))) + 1;
  const Int den = -2 * d;
  return {floor_div(lin - w, den) - 1, ceil_div(lin + w, den) + 1};
}

std::vector<LatticePoint> enumerate_points(const ConicInstance& inst, std::optional<Int> box) {
  const Int a = inst.poly.a();
  const Int b = inst.poly.b();
  const Int c = inst.poly.c();
  const Int d = inst.discriminant();
  if (box && *box < 0) throw DomainError("box bound must be non-negative");

  Int y_lo;
  Int y_hi;
  if (d < 0) {
    std::tie(y_lo, y_hi) = ellipse_y_range(inst);
    if (box) {
      y_lo = std::max(y_lo, Int(-*box));
      y_hi = std::min(y_hi, *box);
    }
  } else {
    if (!box) throw DomainError("unbounded conic requires a search box");
    y_lo = -*box;
    y_hi = *box;
  }

  std::vector<LatticePoint> out;
  const Int two_a = 2 * a;
  for (Int y = y_lo; y <= y_hi; ++y) {
    // a X² + (bY + 1) X + (cY² − nY) = 0
    const Int lin = b * y + 1;
    const Int disc = lin * lin - 4 * a * (c * y * y - inst.n * y);
    if (disc < 0 || !is_square(disc)) continue;
    const Int s = isqrt(disc);
    for (const Int& num : {Int(-lin - s), Int(-lin + s)}) {
      if (num % two_a != 0) continue;
      LatticePoint p{num / two_a, y};
      if (box && abs(p.X) > *box) continue;
      if (!on_conic(inst, p)) throw DefectError("enumerated point is off the conic");
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LatticePoint psi(const Int& a, const GammaMatrix& m) {
  if (!in_gamma(a, m)) throw NotInGammaError();
  return {m.beta * m.gamma, m.beta * m.delta};
}

GammaMatrix psi_inv(const Int& a, const LatticePoint& p) {
  if (p.Y == 0) throw DomainError("exceptional point: preimage is a K-class, not unique");
  const Int g = gcd(p.X, p.Y);
  const Int top = g * (1 + a * p.X);
  if (top % p.Y != 0) throw NotInGammaError();
  GammaMatrix m{top / p.Y, g, p.X / g, p.Y / g};
  if (!in_gamma(a, m)) throw NotInGammaError();
  return m;
}

PointFactorization point_to_factorization(const ConicInstance& inst, const LatticePoint& p) {
  if (!on_conic(inst, p)) throw DomainError("point is not on the conic");
  const Int a = inst.poly.a();
  const Int b = inst.poly.b();
  PointFactorization out;
  if (p.Y != 0) {
    out.matrix = psi_inv(a, p);
  } else if (p.X == 0) {
    out.matrix = {1, 0, inst.n, 1};  // K1, η = s
  } else if (a == 1 && p.X == -1) {
    out.matrix = {-inst.n - b, 1, -1, 0};  // K2, η = −s − b
  } else if (a == -1 && p.X == 1) {
    out.matrix = {inst.n - b, 1, 1, 0};  // K3, η = s + b
  } else {
    throw DefectError("Y = 0 point outside the exceptional set");
  }
  out.exceptional = exceptional_class(a, out.matrix);
  const FormEvaluation e = evaluate_forms(inst.poly, out.matrix);
  out.p = e.phi0;
  out.q = e.phi1;
  out.n = e.eta_val;
  if (e.delta_val != 1 || out.n != inst.n || out.p * out.q != inst.poly(inst.n)) {
    throw DefectError("point factorization does not reproduce F(n)");
  }
  if (p.Y != 0 && psi(a, out.matrix) != p) throw DefectError("psi does not invert psi_inv");
  return out;
}

PellPoint pell_reduce(const ConicInstance& inst, const LatticePoint& p) {
  const Int d = inst.discriminant();
  if (d == 0) throw DomainError("degenerate: Pell reduction undefined");
  if (!on_conic(inst, p)) throw DomainError("point is not on the conic");
  const Int a = inst.poly.a();
  const Int b = inst.poly.b();
  PellPoint out{d * p.Y + (b + 2 * a * inst.n), 2 * a * p.X + b * p.Y + 1, d};
  if (out.U * out.U - d * out.V * out.V != 4 * a * inst.poly(inst.n)) {
    throw DefectError("Pell identity failed");
  }
  return out;
}

}  // namespace recfac
