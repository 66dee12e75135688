#include "recfac/gamma.hpp"

#include "recfac/error.hpp"

#include <sstream>

namespace recfac {

GammaMatrix operator*(const GammaMatrix& l, const GammaMatrix& r) {
  return {l.alpha * r.alpha + l.beta * r.gamma, l.alpha * r.beta + l.beta * r.delta,
          l.gamma * r.alpha + l.delta * r.gamma, l.gamma * r.beta + l.delta * r.delta};
}

std::string to_string(const GammaMatrix& m) {
  std::ostringstream os;
  os << "(" << m.alpha << ", " << m.beta << "; " << m.gamma << ", " << m.delta << ")";
  return os.str();
}

Int gamma_delta(const Int& a, const GammaMatrix& m) { return m.alpha * m.delta - a * m.beta * m.gamma; }

bool in_gamma(const Int& a, const GammaMatrix& m) { return gamma_delta(a, m) == 1; }

FormEvaluation evaluate_forms(const Polynomial& f, const GammaMatrix& m) {
  require_quadratic(f, "binary forms need a quadratic polynomial");
  const Int a = f.a();
  const Int b = f.b();
  const Int c = f.c();
  const auto& [al, be, ga, de] = m;
  return {
      al * de - a * be * ga,
      al * ga + b * be * ga + c * be * de,
      al * al + b * al * be + a * c * be * be,
      a * ga * ga + b * ga * de + c * de * de,
  };
}

const Int& phi_m(const FormEvaluation& forms, std::size_t m) { return m % 2 == 0 ? forms.phi0 : forms.phi1; }

std::string to_string(IdentityBranch b) {
  switch (b) {
    case IdentityBranch::neither: return "neither";
    case IdentityBranch::delta_one: return "delta=1";
    case IdentityBranch::second: return "delta=-1-(b/c)eta";
    case IdentityBranch::both: return "both";
  }
  return "?";
}

IdentityCheck identity_holds(const Polynomial& f, const GammaMatrix& m) {
  const FormEvaluation e = evaluate_forms(f, m);
  const Int b = f.b();
  const Int c = f.c();
  IdentityCheck out;
  out.holds = f(e.eta_val) == e.phi0 * e.phi1;
  out.rational_branch_defined = c != 0;
  const bool first = e.delta_val == 1;
  const bool second = c * e.delta_val == -c - b * e.eta_val;
  if (first && second) {
    out.branch = IdentityBranch::both;
  } else if (first) {
    out.branch = IdentityBranch::delta_one;
  } else if (second) {
    out.branch = IdentityBranch::second;
  }
  // F(η) − φ0φ1 = (1 − Δ)(cΔ + c + bη), so the two answers must agree.
  if (out.holds != (out.branch != IdentityBranch::neither)) {
    throw DefectError("identity/branch disagreement for " + to_string(m));
  }
  return out;
}

std::vector<GammaMatrix> seq_to_matrix(const Polynomial& f, std::span<const Int> seq) {
  require_quadratic(f, "matrix recursion needs a quadratic polynomial");
  const Int a = f.a();
  std::vector<GammaMatrix> chain;
  chain.reserve(seq.size() + 1);
  chain.push_back(GammaMatrix::identity());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const GammaMatrix& cur = chain.back();
    const Int& x = seq[k];
    GammaMatrix next = cur;
    if (k % 2 == 1) {
      next.alpha += x * a * cur.gamma;
      next.beta += x * cur.delta;
    } else {
      next.gamma += x * cur.alpha;
      next.delta += x * a * cur.beta;
    }
    if (!in_gamma(a, next)) throw DefectError("matrix recursion left Γ_a");
    chain.push_back(std::move(next));
  }
  return chain;
}

GammaMatrix transvection_t(const Int& i) { return {1, i, 0, 1}; }
GammaMatrix transvection_u(const Int& i) { return {1, 0, i, 1}; }

std::string TransvectionWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = exponents.size(); k-- > 0;) {
    os << (k % 2 == 0 ? "U^" : "T^") << exponents[k];
    if (k != 0) os << " ";
  }
  return os.str();
}

TransvectionProduct transvection_word(std::span<const Int> seq) {
  TransvectionProduct out;
  out.word.exponents.assign(seq.begin(), seq.end());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    out.matrix = (k % 2 == 0 ? transvection_u(seq[k]) : transvection_t(seq[k])) * out.matrix;
  }
  return out;
}

GammaMatrix shift_matrix(const Polynomial& f, const Int& h, const GammaMatrix& m) {
  require_quadratic(f, "shift correspondence needs a quadratic polynomial");
  const Int a = f.a();
  if (!in_gamma(a, m)) throw NotInGammaError();
  return {m.alpha + h * a * m.beta, m.beta, m.gamma + h * m.delta, m.delta};
}

bool brahmagupta_check(const Int& a, const Int& c, const GammaMatrix& m) {
  const auto& [al, be, ga, de] = m;
  Int u = al * ga + c * be * de;
  Int v = al * de - a * be * ga;
  return a * u * u + c * v * v == (al * al + a * c * be * be) * (a * ga * ga + c * de * de);
}

std::string to_string(ExceptionalClass k) {
  switch (k) {
    case ExceptionalClass::none: return "none";
    case ExceptionalClass::k1: return "K1";
    case ExceptionalClass::k2: return "K2";
    case ExceptionalClass::k3: return "K3";
  }
  return "?";
}

ExceptionalClass exceptional_class(const Int& a, const GammaMatrix& m) {
  if (m.beta == 0 && ((m.alpha == 1 && m.delta == 1) || (m.alpha == -1 && m.delta == -1))) {
    return ExceptionalClass::k1;
  }
  if (m.delta == 0) {
    if (a == 1 && ((m.beta == 1 && m.gamma == -1) || (m.beta == -1 && m.gamma == 1))) {
      return ExceptionalClass::k2;
    }
    if (a == -1 && ((m.beta == 1 && m.gamma == 1) || (m.beta == -1 && m.gamma == -1))) {
      return ExceptionalClass::k3;
    }
  }
  return ExceptionalClass::none;
}

}  // namespace recfac
