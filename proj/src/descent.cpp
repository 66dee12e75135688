#include "recfac/descent.hpp"

#include "recfac/error.hpp"
#include "recfac/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

namespace recfac {

namespace {

struct Window {
  Int lo;
  Int hi;
};

// Integer ranges that contain every local minimiser of |F| on the real line.
std::vector<Window> critical_windows(const Polynomial& f, const Int& target) {
  std::vector<Window> out;
  const int d = f.degree();
  if (d == 1) {
    Int t = floor_div(-f.coeff(0), f.coeff(1));
    out.push_back({t - 1, t + 1});
  } else if (d == 2) {
    const Int a = f.a();
    const Int b = f.b();
    const Int disc = b * b - 4 * a * f.c();
    Int v = floor_div(-b, 2 * a);
    out.push_back({v - 1, v + 1});
    if (disc >= 0) {
      const Int s = isqrt(disc);
      for (int side : {-1, 1}) {
        Int t = floor_div(-b + side * s, 2 * a);
        out.push_back({t - 2, t + 2});
      }
    }
  } else {
    // |F(x)| >= |x|^{d-1} (|lead| |x| - S) for |x| >= 1, so beyond R nothing
    // beats |target|.
    Int spread = 0;
    for (int i = 0; i < d; ++i) spread += abs(f.coeff(static_cast<std::size_t>(i)));
    Int r = (spread + abs(target)) / abs(f.leading()) + 1;
    out.push_back({-r, r});
  }
  return out;
}

using Rank = std::tuple<Int, Int, Int, std::size_t>;

Rank rank_of(const ClassMinimum& c) { return {abs(c.value), abs(c.r), c.r, c.modulus_index}; }

}  // namespace

std::vector<FactorPair> nontrivial_pairs(const Int& v) {
  std::vector<FactorPair> out;
  if (v == 0) return out;
  const Int m = abs(v);
  for (const Int& d : trial_divisors(m)) {
    if (d == 1) continue;
    Int co = m / d;
    if (co < d) break;
    if (co == 1) continue;
    out.push_back({d, co});
  }
  return out;
}

ClassMinimum minimize_over_classes(const Polynomial& f, const Int& n, const std::vector<Int>& moduli) {
  if (f.degree() < 1) throw DomainError("criterion needs deg F >= 1");
  if (moduli.empty()) throw DomainError("no modulus given");
  const std::vector<Window> windows = critical_windows(f, f(n));
  std::optional<ClassMinimum> best;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const Int m = abs(moduli[i]);
    if (m == 0) throw DomainError("modulus zero");
    for (const Window& w : windows) {
      Int from = w.lo - m;
      Int r = from + mod_floor(n - from, m);
      for (; r <= w.hi + m; r += m) {
        ClassMinimum cand{r, f(r), i};
        if (!best || rank_of(cand) < rank_of(*best)) best = std::move(cand);
      }
    }
  }
  return *best;
}

CriterionResult criterion_check(const Polynomial& f, const Int& n) {
  CriterionResult out;
  out.n = n;
  out.value = f(n);
  if (out.value == 0) return out;
  const Int bound = abs(out.value);
  for (FactorPair& pair : nontrivial_pairs(out.value)) {
    ClassMinimum best = minimize_over_classes(f, n, {pair.p, pair.q});
    if (abs(best.value) < bound) {
      out.witnesses.push_back({n, pair.p, pair.q, std::move(best.r), std::move(best.value),
                               best.modulus_index == 0 ? ModulusTag::p : ModulusTag::q});
    } else {
      out.failures.push_back(std::move(pair));
    }
  }
  return out;
}

LemmaBound lemma_bound(const Polynomial& original) {
  const char* const cannot = "not irreducible / criterion cannot close";
  if (original.degree() != 2) throw DomainError("lemma-interval mode needs a quadratic");
  const Polynomial f = original.a() < 0 ? original.negated() : original;
  const Int a = f.a();
  const Int b = f.b();
  const Int c = f.c();
  const Int disc = b * b - 4 * a * c;
  if (is_square(disc)) throw DomainError(cannot);
  if (b % a != 0 || a > 4) throw DomainError(cannot);

  const Int s = b / a;
  auto reduces = [&](const Int& n) {
    const Int u = 2 * n + s;
    const Int value = abs(f(n));
    // Every nontrivial pair has a factor below u, so some r ≡ n lies in (−n−s, n).
    const bool small_factor = u * u > value || (a == 4 && u > c - s * s);
    // Every m in (−n−s, n) has |F(m)| < |F(n)|.
    const bool inner_smaller = disc < 0 || 4 * a * f(n) > disc;
    return small_factor && inner_smaller;
  };

  // Both conditions are monotone for n >= −s/2, so the first hit is n̂.
  Int n = ceil_div(-s, 2);
  const Int limit = n + 100000000;
  while (!reduces(n)) {
    if (++n > limit) throw DomainError(cannot);
  }

  LemmaBound out;
  out.n_hat = n;
  out.shift = s;
  out.core_lo = -n - s + 1;
  out.core_hi = n - 1;
  out.base_lo = -abs(original.c());
  out.base_hi = abs(original.c());
  return out;
}

std::size_t DescentCertificate::witness_count() const {
  std::size_t total = 0;
  for (const CriterionResult& r : points) total += r.witnesses.size();
  return total;
}

VerifyOutcome verify_rf(const Polynomial& f, const VerifyOptions& options) {
  if (f.degree() != 2) throw DomainError("verification needs a quadratic polynomial");
  VerifyOutcome out;
  DescentCertificate& cert = out.certificate;
  cert.poly = f;
  cert.mode = options.mode;
  if (options.mode == VerifyMode::lemma_interval) {
    cert.bound = lemma_bound(f);
    cert.lo = cert.bound->base_lo;
    cert.hi = cert.bound->base_hi;
    if (!cert.bound->core_empty()) {
      cert.lo = std::min(cert.lo, cert.bound->core_lo);
      cert.hi = std::max(cert.hi, cert.bound->core_hi);
    }
  } else {
    if (options.lo > options.hi) throw DomainError("empty range");
    cert.lo = options.lo;
    cert.hi = options.hi;
  }

  const std::size_t count = static_cast<std::size_t>(cert.hi - cert.lo + 1);
  cert.points.resize(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      cert.points[i] = criterion_check(f, cert.lo + Int(i));
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(count)));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();

  out.passed = true;
  for (const CriterionResult& r : cert.points) {
    if (r.satisfied()) continue;
    out.passed = false;
    const auto key = [](const Int& n) { return std::pair{abs(n), n}; };
    if (!out.counterexample || key(r.n) < key(out.counterexample->n)) out.counterexample = r;
  }
  return out;
}

DescentTrace factor_to_sequence(const Polynomial& f, const Int& n, const Int& p) {
  require_quadratic(f, "descent needs a quadratic polynomial");
  const Int value = f(n);
  if (value == 0) throw DomainError("F(n) = 0 has no factor presentation");
  if (p <= 0 || abs(value) % p != 0) {
    throw DomainError(p.str() + " does not divide F(" + n.str() + ") = " + value.str());
  }

  DescentTrace out;
  out.n = n;
  out.p = p;
  if (p == abs(value)) {
    out.seq = {n};
  } else if (p == 1) {
    // (n) presents F(n) = 1·F(n) with f_1 = F(n); a zero step swaps the pair.
    out.seq = {n, 0};
  } else {
    // F(n) = p1·p0 with p0 = p.
    const Int p0 = p;
    const Int p1 = value / p;
    ClassMinimum first = minimize_over_classes(f, n, {p0, p1});
    if (abs(first.value) >= abs(value)) throw DescentStall(n);

    Int modulus = first.modulus_index == 0 ? p0 : p1;
    Int prev_r = n;
    Int r = std::move(first.r);
    Int fr = std::move(first.value);
    out.factors.push_back(modulus);
    while (true) {
      out.quotients.push_back((prev_r - r) / modulus);
      out.remainders.push_back(r);
      Int partner = fr / modulus;  // F(r_k) = p_k p_{k+1}
      out.factors.push_back(partner);
      if (abs(partner) == 1) break;
      ClassMinimum step = minimize_over_classes(f, r, {partner});
      if (abs(step.value) >= abs(fr)) throw DescentStall(r);
      prev_r = std::move(r);
      modulus = std::move(partner);
      r = std::move(step.r);
      fr = std::move(step.value);
    }

    // Rebuild bottom-up: start at r_{m-1} and climb r_{m-2}, ..., r_1, n with
    // the sieve, dividing by the current f to obtain each step.
    std::vector<Int> targets(out.remainders.rbegin(), out.remainders.rend());
    targets.push_back(n);
    Int position = targets.front();
    Int f_prev = 1;
    Int f_cur = f(position);
    out.seq.push_back(position);
    for (std::size_t i = 1; i < targets.size(); ++i) {
      Int x = (targets[i] - position) / f_cur;
      out.seq.push_back(x);
      position += x * f_cur;
      Int f_next = f(position) / f_cur;
      f_prev = std::move(f_cur);
      f_cur = std::move(f_next);
    }
    if (abs(f_cur) != p && abs(f_prev) == p) out.seq.emplace_back(0);
  }

  SieveTrace check = sieve_eval_quadratic(f, out.seq);
  if (check.last_N() != n || abs(check.last_f()) != p) {
    throw DefectError("descent sequence does not reproduce F(" + n.str() + ") with factor " + p.str());
  }
  return out;
}

}  // namespace recfac
