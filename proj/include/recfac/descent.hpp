#pragma once

#include "recfac/int.hpp"
#include "recfac/polynomial.hpp"

#include <optional>
#include <vector>

namespace recfac {

enum class ModulusTag { p, q };

/// A residue r ≡ n (mod p or q) with |F(r)| < |F(n)| for the pair F(n) = ±p·q.
/// Pairs are stored with 1 < p <= q, both positive.
struct CriterionWitness {
  Int n;
  Int p;
  Int q;
  Int r;
  Int value_at_r;
  ModulusTag modulus = ModulusTag::p;

  const Int& modulus_value() const { return modulus == ModulusTag::p ? p : q; }
  friend bool operator==(const CriterionWitness&, const CriterionWitness&) = default;
};

struct FactorPair {
  Int p;
  Int q;
  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

/// Outcome of the criterion at one n. Failure is data, not an exception.
struct CriterionResult {
  Int n;
  Int value;  // F(n)
  std::vector<CriterionWitness> witnesses;
  std::vector<FactorPair> failures;

  /// F(n) = 0 admits no witness at all.
  bool zero_value() const { return value == 0; }
  bool satisfied() const { return !zero_value() && failures.empty(); }
};

/// Nontrivial pairs |v| = p·q with 1 < p <= q, from the trial-division oracle.
std::vector<FactorPair> nontrivial_pairs(const Int& v);

/// Best r (smallest |F(r)|, then |r|, then r, then earliest modulus) over
/// the union of classes r ≡ n mod m_i. Returns the index of the winning
/// modulus alongside r. The search is exact: only residues that can hold
/// a minimum of |F| on the progression are visited.
struct ClassMinimum {
  Int r;
  Int value;
  std::size_t modulus_index = 0;
};
ClassMinimum minimize_over_classes(const Polynomial& f, const Int& n, const std::vector<Int>& moduli);

CriterionResult criterion_check(const Polynomial& f, const Int& n);

/// Growth data behind the interval reduction for a quadratic.
struct LemmaBound {
  Int n_hat;
  Int shift;     // b/a
  Int core_lo;   // I_{n̂} = (−n̂ − b/a, n̂) as a closed integer interval
  Int core_hi;
  Int base_lo;   // [−|c|, |c|]
  Int base_hi;
  bool core_empty() const { return core_lo > core_hi; }
};

/// Throws DomainError("not irreducible / criterion cannot close") when the
/// reduction argument does not apply to F.
LemmaBound lemma_bound(const Polynomial& f);

enum class VerifyMode { lemma_interval, exhaustive_range };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::lemma_interval;
  Int lo = 0;
  Int hi = 0;
  unsigned jobs = 1;
};

struct DescentCertificate {
  Polynomial poly;
  VerifyMode mode = VerifyMode::lemma_interval;
  std::optional<LemmaBound> bound;
  Int lo;
  Int hi;
  /// One entry per n in [lo, hi], ascending.
  std::vector<CriterionResult> points;

  std::size_t witness_count() const;
};

struct VerifyOutcome {
  bool passed = false;
  DescentCertificate certificate;
  /// Failing n closest to zero (smaller |n|, then smaller n) when !passed.
  std::optional<CriterionResult> counterexample;
};

VerifyOutcome verify_rf(const Polynomial& f, const VerifyOptions& options);

/// Constructive descent turning a divisor p of F(n) into a sieving sequence.
/// remainders r_1..r_{m-1}, quotients q_1..q_{m-1} with r_{k-1} = q_k p_k + r_k
/// (r_0 = n), factors p_*, p_2, ..., p_m with F(r_k) = p_k p_{k+1}.
struct DescentTrace {
  Int n;
  Int p;
  std::vector<Int> remainders;
  std::vector<Int> quotients;
  std::vector<Int> factors;
  std::vector<Int> seq;
};

/// Throws DomainError when p does not divide F(n), and DescentStall when the
/// criterion fails along the way. The returned sequence is re-evaluated with
/// the quadratic recurrence; N_m = n and |f_m| = p are asserted.
DescentTrace factor_to_sequence(const Polynomial& f, const Int& n, const Int& p);

}  // namespace recfac
