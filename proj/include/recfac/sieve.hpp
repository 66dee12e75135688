#pragma once

#include "recfac/int.hpp"
#include "recfac/polynomial.hpp"

#include <span>
#include <vector>

namespace recfac {

/// Values of the sieving recursion along one integer sequence.
///
/// For a sequence (x_1, ..., x_m):
///   f[0] = 1, f[1] = F(x_1), and F(N[k]) = f[k-1] * f[k] for 1 <= k <= m,
/// where N[k] = sum_{j <= k} x_j f[j-1] and N[0] = 0.
struct SieveTrace {
  std::vector<Int> seq;
  std::vector<Int> f;
  std::vector<Int> N;

  std::size_t length() const noexcept { return seq.size(); }
  const Int& last_f() const { return f.back(); }
  /// f[m-1]; for the empty trace this is f[0].
  const Int& previous_f() const { return f.size() >= 2 ? f[f.size() - 2] : f.back(); }
  const Int& last_N() const { return N.back(); }

  friend bool operator==(const SieveTrace&, const SieveTrace&) = default;
};

/// General-degree evaluation using the Taylor form
///   f_m = f_{m-2} + x_m * sum_{j=1}^{d} (D^j F)(N_{m-1}) (x_m f_{m-1})^{j-1}.
/// No division is performed. Every prefix is checked against F(N_k) = f_{k-1} f_k
/// and a DefectError is thrown on mismatch.
SieveTrace sieve_eval(const Polynomial& f, std::span<const Int> seq);

/// Degree-2 recurrence f_m = f_{m-2} + x_m F'(N_{m-1}) + a x_m^2 f_{m-1}.
SieveTrace sieve_eval_quadratic(const Polynomial& f, std::span<const Int> seq);

/// Rewrites the sequence over {-1, 0, 1} by splitting every x into
/// (sign x, 0, x - sign x) until it is a unit. The final (f_{M-1}, f_M) and N_M
/// agree with the input trace, and M = sum (2|x_j| - 1).
SieveTrace expand_to_binary(const Polynomial& f, const SieveTrace& trace);

/// Just the expanded sequence.
std::vector<Int> binary_expansion(std::span<const Int> seq);

}  // namespace recfac
