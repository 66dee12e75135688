#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace recfac {

/// Exact signed integer used for every runtime scalar in the library.
/// Expression templates are disabled so `auto` always binds a value.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

/// Parses a decimal integer with optional sign. Throws ParseError on junk.
Int parse_int(std::string_view text);

inline std::string to_string(const Int& v) { return v.str(); }

Int abs(const Int& v);
int sign(const Int& v);

/// Non-negative gcd; gcd(0, 0) = 0.
Int gcd(const Int& x, const Int& y);

/// Largest s with s*s <= v. Throws DomainError for v < 0.
Int isqrt(const Int& v);

bool is_square(const Int& v);

/// Floor and ceiling division; divisor must be nonzero.
Int floor_div(const Int& num, const Int& den);
Int ceil_div(const Int& num, const Int& den);

/// Least non-negative residue of v modulo |m|.
Int mod_floor(const Int& v, const Int& m);

/// Every positive divisor of |v| in ascending order, by trial division up to
/// isqrt(|v|). This is the reference oracle; it is deliberately plain.
std::vector<Int> trial_divisors(const Int& v);

/// Prime factors of |v| with multiplicity, ascending.
std::vector<Int> trial_factor(const Int& v);

}  // namespace recfac
