#include "recfac/polynomial.hpp"

#include "recfac/error.hpp"

#include <sstream>

namespace recfac {

namespace {

void trim(std::vector<Int>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim(coeffs_);
}

Polynomial Polynomial::quadratic(const Int& a, const Int& b, const Int& c) {
  return Polynomial(std::vector<Int>{c, b, a});
}

Int Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

const Int& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Int Polynomial::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted(const Int& h) const {
  // Taylor expansion about -h: F(n - h) = sum_j (D^j F)(-h) n^j.
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (int j = 0; j <= degree(); ++j) out.push_back(hasse_derivative(*this, j)(Int(-h)));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::negated() const {
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (const Int& c : coeffs_) out.push_back(-c);
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int mag = recfac::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Polynomial hasse_derivative(const Polynomial& f, int j) {
  if (j < 0) throw DomainError("Hasse derivative order must be non-negative");
  if (j > f.degree()) return {};
  std::vector<Int> out;
  for (int k = 0; k + j <= f.degree(); ++k) {
    out.push_back(binomial(k + j, j) * f.coeffs()[static_cast<std::size_t>(k + j)]);
  }
  return Polynomial(std::move(out));
}

void require_quadratic(const Polynomial& f, const char* what) {
  if (f.degree() != 2) throw DomainError(what);
}

}  // namespace recfac
