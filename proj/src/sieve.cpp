#include "recfac/sieve.hpp"

#include "recfac/error.hpp"

namespace recfac {

namespace {

void check_prefixes(const Polynomial& f, const SieveTrace& t) {
  for (std::size_t k = 1; k < t.f.size(); ++k) {
    if (f(t.N[k]) != t.f[k - 1] * t.f[k]) {
      throw DefectError("sieve identity F(N_k) = f_{k-1} f_k failed at k = " + std::to_string(k));
    }
  }
}

SieveTrace start(std::span<const Int> seq) {
  SieveTrace t;
  t.seq.assign(seq.begin(), seq.end());
  t.f.reserve(seq.size() + 1);
  t.N.reserve(seq.size() + 1);
  t.f.emplace_back(1);
  t.N.emplace_back(0);
  return t;
}

}  // namespace

SieveTrace sieve_eval(const Polynomial& f, std::span<const Int> seq) {
  if (f.degree() < 1) throw DomainError("sieving requires deg F >= 1");
  const int d = f.degree();
  std::vector<Polynomial> hasse;
  hasse.reserve(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) hasse.push_back(hasse_derivative(f, j));

  SieveTrace t = start(seq);
  for (std::size_t m = 1; m <= seq.size(); ++m) {
    const Int& x = seq[m - 1];
    const Int& prev = t.f[m - 1];
    const Int& base = t.N[m - 1];
    Int next;
    if (m == 1) {
      next = f(x);
    } else {
      Int step = x * prev;
      Int sum = 0;
      Int power = 1;  // (x f_{m-1})^{j-1}
      for (int j = 1; j <= d; ++j) {
        sum += hasse[static_cast<std::size_t>(j)](base) * power;
        power *= step;
      }
      next = t.f[m - 2] + x * sum;
    }
    t.N.push_back(base + x * prev);
    t.f.push_back(std::move(next));
  }
  check_prefixes(f, t);
  return t;
}

SieveTrace sieve_eval_quadratic(const Polynomial& f, std::span<const Int> seq) {
  if (f.degree() != 2) throw DomainError("quadratic recurrence requires degree 2");
  const Int a = f.a();
  const Int b = f.b();

  SieveTrace t = start(seq);
  for (std::size_t m = 1; m <= seq.size(); ++m) {
    const Int& x = seq[m - 1];
    const Int& prev = t.f[m - 1];
    const Int& base = t.N[m - 1];
    Int next;
    if (m == 1) {
      next = f(x);
    } else {
      Int slope = 2 * a * base + b;
      next = t.f[m - 2] + x * slope + a * x * x * prev;
    }
    t.N.push_back(base + x * prev);
    t.f.push_back(std::move(next));
  }
  check_prefixes(f, t);
  return t;
}

std::vector<Int> binary_expansion(std::span<const Int> seq) {
  std::vector<Int> out;
  for (const Int& x : seq) {
    if (x == 0) throw DomainError("zero entries must be pre-stripped");
    const int s = sign(x);
    Int rest = x;
    while (abs(rest) > 1) {
      out.emplace_back(s);
      out.emplace_back(0);
      rest -= s;
    }
    out.push_back(rest);
  }
  return out;
}

SieveTrace expand_to_binary(const Polynomial& f, const SieveTrace& trace) {
  if (trace.seq.empty()) throw DomainError("binary expansion needs a nonempty sequence");
  std::vector<Int> expanded = binary_expansion(trace.seq);

  Int expected_len = 0;
  for (const Int& x : trace.seq) expected_len += 2 * abs(x) - 1;
  if (Int(expanded.size()) != expected_len) throw DefectError("binary expansion has the wrong length");

  SieveTrace out = sieve_eval(f, expanded);
  if (out.last_f() != trace.last_f() || out.previous_f() != trace.previous_f() ||
      out.last_N() != trace.last_N()) {
    throw DefectError("binary expansion changed the final factor pair");
  }
  return out;
}

}  // namespace recfac
