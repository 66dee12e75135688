#include "recfac/int.hpp"

#include "recfac/error.hpp"

#include <algorithm>
#include <cctype>

namespace recfac {

Int parse_int(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty() || !std::all_of(body.begin(), body.end(),
                                   [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  Int value{std::string(body)};
  return text.front() == '-' ? Int(-value) : value;
}

Int abs(const Int& v) { return v < 0 ? Int(-v) : v; }

int sign(const Int& v) { return v.sign(); }

Int gcd(const Int& x, const Int& y) { return boost::multiprecision::gcd(abs(x), abs(y)); }

Int isqrt(const Int& v) {
  if (v < 0) throw DomainError("isqrt of a negative value");
  return boost::multiprecision::sqrt(v);
}

bool is_square(const Int& v) {
  if (v < 0) return false;
  Int s = isqrt(v);
  return s * s == v;
}

Int floor_div(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("division by zero");
  Int q = num / den;  // truncates toward zero
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Int ceil_div(const Int& num, const Int& den) { return -floor_div(Int(-num), den); }

Int mod_floor(const Int& v, const Int& m) {
  Int mm = abs(m);
  if (mm == 0) throw DomainError("modulus zero");
  Int r = v % mm;
  if (r < 0) r += mm;
  return r;
}

std::vector<Int> trial_divisors(const Int& v) {
  if (v == 0) throw DomainError("zero has no finite divisor list");
  Int m = abs(v);
  std::vector<Int> small;
  std::vector<Int> large;
  for (Int d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      Int co = m / d;
      if (co != d) large.push_back(co);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Int> trial_factor(const Int& v) {
  if (v == 0) throw DomainError("zero has no factorization");
  Int m = abs(v);
  std::vector<Int> primes;
  for (Int d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      primes.push_back(d);
      m /= d;
    }
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

}  // namespace recfac
