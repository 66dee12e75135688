#include "oracle.hpp"
#include "recfac/certificate.hpp"
#include "recfac/descent.hpp"
#include "recfac/error.hpp"
#include "recfac/sieve.hpp"

#include <gtest/gtest.h>

#include <sstream>

using recfac::CriterionResult;
using recfac::DescentTrace;
using recfac::Int;
using recfac::ModulusTag;
using recfac::Polynomial;
using recfac::VerifyMode;
using recfac::VerifyOptions;

namespace {

// Smallest |F(r)| below |F(n)| over both classes, scanning a wide symmetric range.
std::optional<Int> brute_min(const Polynomial& f, const Int& n, const Int& p, const Int& q) {
  const Int width = recfac::abs(n) + 2 * q + 2 * (recfac::abs(f.b()) + recfac::abs(f.c())) + 20;
  std::optional<Int> best;
  const Int bound = recfac::abs(f(n));
  for (Int r = -width; r <= width; ++r) {
    if (recfac::mod_floor(r - n, p) != 0 && recfac::mod_floor(r - n, q) != 0) continue;
    const Int v = recfac::abs(f(r));
    if (v < bound && (!best || v < *best)) best = v;
  }
  return best;
}

void expect_valid_trace(const Polynomial& f, const Int& n, const Int& p, const DescentTrace& t) {
  const auto check = recfac::sieve_eval_quadratic(f, t.seq);
  ASSERT_EQ(check.last_N(), n);
  ASSERT_EQ(recfac::abs(check.last_f()), p);
  ASSERT_EQ(t.quotients.size(), t.remainders.size());
  if (t.remainders.empty()) return;
  ASSERT_EQ(t.factors.size(), t.remainders.size() + 1);
  Int prev = n;
  Int prev_value = recfac::abs(f(n));
  for (std::size_t k = 0; k < t.remainders.size(); ++k) {
    const Int& r = t.remainders[k];
    ASSERT_EQ(prev, t.quotients[k] * t.factors[k] + r);
    ASSERT_EQ(f(r), t.factors[k] * t.factors[k + 1]);
    ASSERT_LT(recfac::abs(f(r)), prev_value);
    prev_value = recfac::abs(f(r));
    prev = r;
  }
  ASSERT_EQ(recfac::abs(t.factors.back()), 1);
}

const std::vector<Polynomial>& lemma_family() {
  static const std::vector<Polynomial> family = [] {
    std::vector<Polynomial> out;
    auto add = [&](long a, long b, std::initializer_list<long> cs) {
      for (long c : cs) out.push_back(Polynomial::quadratic(Int(a), Int(b), Int(c)));
    };
    add(1, 0, {1, 2});
    add(1, 1, {1, 2, 3, 5, 11, 17, 41});
    add(2, 0, {1, 3, 5, 11, 29});
    add(2, 2, {1, 2, 3, 7, 19});
    add(3, 0, {2});
    add(3, 3, {1, 2, 5, 11, 23});
    add(4, 0, {1, 3, 7});
    add(4, 4, {2, 3, 5});
    return out;
  }();
  return family;
}

}  // namespace

TEST(NontrivialPairs, OrderedWithSmallFactorFirst) {
  const auto pairs = recfac::nontrivial_pairs(Int(-36));
  ASSERT_EQ(pairs.size(), 4u);
  EXPECT_EQ(pairs[0].p, 2);
  EXPECT_EQ(pairs[0].q, 18);
  EXPECT_EQ(pairs[3].p, 6);
  EXPECT_EQ(pairs[3].q, 6);
  EXPECT_TRUE(recfac::nontrivial_pairs(Int(41)).empty());
  EXPECT_TRUE(recfac::nontrivial_pairs(Int(1)).empty());
  EXPECT_TRUE(recfac::nontrivial_pairs(Int(0)).empty());
}

TEST(CriterionCheck, SquareWithoutWitness) {
  const CriterionResult r = recfac::criterion_check(Polynomial{7, 1, 1}, Int(1));
  EXPECT_EQ(r.value, 9);
  EXPECT_FALSE(r.satisfied());
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].p, 3);
  EXPECT_EQ(r.failures[0].q, 3);
  EXPECT_TRUE(r.witnesses.empty());
}

TEST(CriterionCheck, PrimeValueIsVacuous) {
  const CriterionResult r = recfac::criterion_check(Polynomial{41, 1, 1}, Int(0));
  EXPECT_TRUE(r.satisfied());
  EXPECT_TRUE(r.witnesses.empty());
  EXPECT_TRUE(r.failures.empty());
}

TEST(CriterionCheck, WitnessForPrimeSquare) {
  const CriterionResult r = recfac::criterion_check(Polynomial{41, 1, 1}, Int(40));
  ASSERT_TRUE(r.satisfied());
  ASSERT_EQ(r.witnesses.size(), 1u);
  const auto& w = r.witnesses[0];
  EXPECT_EQ(w.p, 41);
  EXPECT_EQ(w.q, 41);
  EXPECT_EQ(w.r, -1);
  EXPECT_EQ(w.value_at_r, 41);
  EXPECT_EQ(w.modulus, ModulusTag::p);
  EXPECT_EQ(recfac::mod_floor(Int(40) - w.r, w.modulus_value()), 0);
}

TEST(CriterionCheck, ZeroValueFails) {
  const CriterionResult r = recfac::criterion_check(Polynomial{-4, 0, 1}, Int(2));
  EXPECT_TRUE(r.zero_value());
  EXPECT_FALSE(r.satisfied());
}

TEST(CriterionCheck, AgreesWithWideScan) {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial f = Polynomial::quadratic(Int(rng.nonzero(-4, 4)), Int(rng.uniform(-9, 9)),
                                               Int(rng.uniform(-60, 60)));
    const Int n = rng.uniform(-40, 40);
    const CriterionResult r = recfac::criterion_check(f, n);
    if (r.zero_value()) continue;
    std::size_t w = 0;
    for (const auto& pair : recfac::nontrivial_pairs(f(n))) {
      const auto best = brute_min(f, n, pair.p, pair.q);
      if (!best) {
        ASSERT_TRUE(std::find(r.failures.begin(), r.failures.end(), pair) != r.failures.end())
            << f.to_string() << " n=" << n;
        continue;
      }
      ASSERT_LT(w, r.witnesses.size());
      const auto& wit = r.witnesses[w++];
      ASSERT_EQ(wit.p, pair.p);
      ASSERT_EQ(wit.q, pair.q);
      ASSERT_EQ(recfac::abs(wit.value_at_r), *best) << f.to_string() << " n=" << n;
      ASSERT_EQ(f(wit.r), wit.value_at_r);
      ASSERT_EQ(recfac::mod_floor(n - wit.r, wit.modulus_value()), 0);
    }
    ASSERT_EQ(w, r.witnesses.size());
  }
}

TEST(CriterionCheck, HigherDegreeUsesBoundedScan) {
  const Polynomial cubic{3, 0, 0, 1};
  for (long n = -15; n <= 15; ++n) {
    const CriterionResult r = recfac::criterion_check(cubic, Int(n));
    for (const auto& pair : recfac::nontrivial_pairs(r.value)) {
      const auto best = brute_min(cubic, Int(n), pair.p, pair.q);
      const bool witnessed = std::any_of(r.witnesses.begin(), r.witnesses.end(),
                                         [&](const auto& w) { return w.p == pair.p && w.q == pair.q; });
      ASSERT_EQ(witnessed, best.has_value()) << n;
    }
  }
}

TEST(LemmaBound, Intervals) {
  const auto one = recfac::lemma_bound(Polynomial{1, 0, 1});
  EXPECT_EQ(one.core_lo, 0);
  EXPECT_EQ(one.core_hi, 0);
  const auto euler = recfac::lemma_bound(Polynomial{41, 1, 1});
  EXPECT_EQ(euler.core_lo, -4);
  EXPECT_EQ(euler.core_hi, 3);
  EXPECT_EQ(euler.base_lo, -41);
  EXPECT_EQ(euler.base_hi, 41);
  const auto two = recfac::lemma_bound(Polynomial{29, 0, 2});
  EXPECT_EQ(two.core_lo, -3);
  EXPECT_EQ(two.core_hi, 3);
}

TEST(LemmaBound, RejectsWhenArgumentCannotClose) {
  for (const Polynomial& f : {Polynomial{-1, 0, 1}, Polynomial{1, 1, 2}, Polynomial{1, 0, 5}, Polynomial{0, 1, 1}}) {
    try {
      recfac::lemma_bound(f);
      FAIL() << f.to_string();
    } catch (const recfac::DomainError& e) {
      EXPECT_STREQ(e.what(), "not irreducible / criterion cannot close") << f.to_string();
    }
  }
}

TEST(LemmaBound, NegatedPolynomialHasSameCore) {
  const auto pos = recfac::lemma_bound(Polynomial{41, 1, 1});
  const auto neg = recfac::lemma_bound(Polynomial{-41, -1, -1});
  EXPECT_EQ(pos.core_lo, neg.core_lo);
  EXPECT_EQ(pos.core_hi, neg.core_hi);
}

TEST(VerifyRf, LemmaModeCertificate) {
  const auto out = recfac::verify_rf(Polynomial{41, 1, 1}, {});
  ASSERT_TRUE(out.passed);
  ASSERT_TRUE(out.certificate.bound);
  EXPECT_EQ(out.certificate.lo, -41);
  EXPECT_EQ(out.certificate.hi, 41);
  EXPECT_EQ(out.certificate.points.size(), 83u);
  EXPECT_EQ(recfac::audit_certificate(out.certificate), "");
}

TEST(VerifyRf, RangeModeCounterexample) {
  VerifyOptions options;
  options.mode = VerifyMode::exhaustive_range;
  options.lo = -5;
  options.hi = 5;
  const auto out = recfac::verify_rf(Polynomial{7, 1, 1}, options);
  ASSERT_FALSE(out.passed);
  ASSERT_TRUE(out.counterexample);
  EXPECT_EQ(out.counterexample->n, 1);
  const auto& pts = out.certificate.points;
  EXPECT_FALSE(pts[static_cast<std::size_t>(-2 + 5)].satisfied());
}

TEST(VerifyRf, ParallelRunMatchesSerial) {
  VerifyOptions options;
  options.mode = VerifyMode::exhaustive_range;
  options.lo = -120;
  options.hi = 120;
  const Polynomial f{-398, 0, 1};
  const auto serial = recfac::verify_rf(f, options);
  options.jobs = 4;
  const auto parallel = recfac::verify_rf(f, options);
  EXPECT_EQ(serial.passed, parallel.passed);
  EXPECT_EQ(recfac::certificate_text(serial.certificate), recfac::certificate_text(parallel.certificate));
}

TEST(VerifyRf, ShiftClosure) {
  const std::vector<Polynomial> bases = {Polynomial{41, 1, 1}, Polynomial{7, 1, 1}, Polynomial{-11, 1, 1},
                                         Polynomial{3, 0, 2}};
  for (const Polynomial& f : bases) {
    VerifyOptions options;
    options.mode = VerifyMode::exhaustive_range;
    options.lo = -30;
    options.hi = 30;
    const auto base = recfac::verify_rf(f, options);
    for (long h = -5; h <= 5; ++h) {
      VerifyOptions shifted = options;
      shifted.lo += h;
      shifted.hi += h;
      const auto moved = recfac::verify_rf(f.shifted(Int(h)), shifted);
      ASSERT_EQ(moved.passed, base.passed) << f.to_string() << " h=" << h;
      for (std::size_t i = 0; i < base.certificate.points.size(); ++i) {
        ASSERT_EQ(moved.certificate.points[i].satisfied(), base.certificate.points[i].satisfied());
        ASSERT_EQ(moved.certificate.points[i].value, base.certificate.points[i].value);
      }
    }
  }
}

TEST(VerifyRf, MirrorSymmetryOfValuesAndOutcomes) {
  for (const Polynomial& f : lemma_family()) {
    if (f.b() % f.a() != 0) continue;
    const Int s = f.b() / f.a();
    for (long n = -25; n <= 25; ++n) {
      const CriterionResult here = recfac::criterion_check(f, Int(n));
      const CriterionResult mirror = recfac::criterion_check(f, -Int(n) - s);
      ASSERT_EQ(here.value, mirror.value);
      ASSERT_EQ(here.satisfied(), mirror.satisfied());
      ASSERT_EQ(here.witnesses.size(), mirror.witnesses.size());
      for (std::size_t i = 0; i < here.witnesses.size(); ++i) {
        ASSERT_EQ(recfac::abs(here.witnesses[i].value_at_r), recfac::abs(mirror.witnesses[i].value_at_r));
      }
    }
  }
}

TEST(Certificate, RoundTripAndAudit) {
  VerifyOptions options;
  options.mode = VerifyMode::exhaustive_range;
  options.lo = -8;
  options.hi = 8;
  for (const Polynomial& f : {Polynomial{41, 1, 1}, Polynomial{7, 1, 1}}) {
    const auto out = recfac::verify_rf(f, options);
    const std::string text = recfac::certificate_text(out.certificate);
    std::istringstream in(text);
    const auto back = recfac::read_certificate(in);
    EXPECT_EQ(recfac::certificate_text(back), text);
    EXPECT_EQ(back.points.size(), out.certificate.points.size());
    EXPECT_EQ(back.poly, f);
  }
  const auto lemma = recfac::verify_rf(Polynomial{29, 0, 2}, {});
  std::istringstream in(recfac::certificate_text(lemma.certificate));
  const auto back = recfac::read_certificate(in);
  ASSERT_TRUE(back.bound);
  EXPECT_EQ(back.bound->n_hat, lemma.certificate.bound->n_hat);
  EXPECT_EQ(recfac::audit_certificate(back), "");
}

TEST(Certificate, HeaderAndOrdering) {
  VerifyOptions options;
  options.mode = VerifyMode::exhaustive_range;
  options.lo = 39;
  options.hi = 40;
  const std::string text = recfac::certificate_text(recfac::verify_rf(Polynomial{41, 1, 1}, options).certificate);
  EXPECT_EQ(text.rfind("recfac-certificate 1\nlibrary ", 0), 0u);
  EXPECT_NE(text.find("polynomial 41 1 1\nmode range\ninterval 39 40\n"), std::string::npos);
  EXPECT_NE(text.find("n 40 value 1681 pairs 1\nwitness 41 41 -1 41 p\n"), std::string::npos);
  EXPECT_LT(text.find("n 39 "), text.find("n 40 "));
  EXPECT_NE(text.find("end 1\n"), std::string::npos);
}

TEST(Certificate, AuditCatchesTampering) {
  VerifyOptions options;
  options.mode = VerifyMode::exhaustive_range;
  options.lo = 35;
  options.hi = 45;
  auto cert = recfac::verify_rf(Polynomial{41, 1, 1}, options).certificate;
  ASSERT_EQ(recfac::audit_certificate(cert), "");

  auto wrong_r = cert;
  for (auto& pt : wrong_r.points) {
    if (!pt.witnesses.empty()) {
      pt.witnesses[0].r += 1;
      break;
    }
  }
  EXPECT_NE(recfac::audit_certificate(wrong_r), "");

  auto missing = cert;
  missing.points.pop_back();
  EXPECT_NE(recfac::audit_certificate(missing), "");

  auto dropped = cert;
  for (auto& pt : dropped.points) {
    if (!pt.witnesses.empty()) {
      pt.witnesses.clear();
      break;
    }
  }
  EXPECT_NE(recfac::audit_certificate(dropped), "");
}

TEST(Certificate, MalformedTextIsParseError) {
  std::istringstream bad("recfac-certificate 1\nlibrary x\npolynomial 1 2\n");
  EXPECT_THROW(recfac::read_certificate(bad), recfac::ParseError);
  std::istringstream junk("hello\n");
  EXPECT_THROW(recfac::read_certificate(junk), recfac::ParseError);
}

TEST(FactorToSequence, PrimeSquare) {
  const Polynomial f{41, 1, 1};
  const DescentTrace t = recfac::factor_to_sequence(f, Int(40), Int(41));
  EXPECT_EQ(t.seq, (std::vector<Int>{Int(-1), Int(1)}));
  const auto trace = recfac::sieve_eval_quadratic(f, t.seq);
  EXPECT_EQ(trace.f[1], 41);
  EXPECT_EQ(trace.f[2], 41);
  EXPECT_EQ(trace.last_N(), 40);
}

TEST(FactorToSequence, LadderValueBothFactors) {
  const Polynomial f{11, 5, 3};
  expect_valid_trace(f, Int(301), Int(83), recfac::factor_to_sequence(f, Int(301), Int(83)));
  expect_valid_trace(f, Int(301), Int(3293), recfac::factor_to_sequence(f, Int(301), Int(3293)));
  // F(−1) = 9 = 3·3 has no witness, so other divisors may stall on the way down.
  for (const Int& p : recfac::trial_divisors(f(Int(301)))) {
    try {
      expect_valid_trace(f, Int(301), p, recfac::factor_to_sequence(f, Int(301), p));
    } catch (const recfac::DescentStall& e) {
      EXPECT_FALSE(recfac::criterion_check(f, e.at()).satisfied()) << "p=" << p;
    }
  }
}

TEST(FactorToSequence, TrivialDivisors) {
  const Polynomial f{41, 1, 1};
  const DescentTrace whole = recfac::factor_to_sequence(f, Int(0), Int(41));
  EXPECT_EQ(whole.seq, (std::vector<Int>{Int(0)}));
  const DescentTrace unit = recfac::factor_to_sequence(f, Int(0), Int(1));
  expect_valid_trace(f, Int(0), Int(1), unit);
}

TEST(FactorToSequence, StallReportsLocation) {
  try {
    recfac::factor_to_sequence(Polynomial{7, 1, 1}, Int(1), Int(3));
    FAIL() << "expected DescentStall";
  } catch (const recfac::DescentStall& e) {
    EXPECT_EQ(e.at(), 1);
    EXPECT_STREQ(e.what(), "recursively-factorable criterion violated at n = 1");
  }
}

TEST(FactorToSequence, RejectsNonDivisorsAndZeroValues) {
  EXPECT_THROW(recfac::factor_to_sequence(Polynomial{41, 1, 1}, Int(40), Int(7)), recfac::DomainError);
  EXPECT_THROW(recfac::factor_to_sequence(Polynomial{41, 1, 1}, Int(40), Int(0)), recfac::DomainError);
  EXPECT_THROW(recfac::factor_to_sequence(Polynomial{41, 1, 1}, Int(40), Int(-41)), recfac::DomainError);
  EXPECT_THROW(recfac::factor_to_sequence(Polynomial{-4, 0, 1}, Int(2), Int(1)), recfac::DomainError);
  EXPECT_THROW(recfac::factor_to_sequence(Polynomial{1, 0, 0, 1}, Int(2), Int(1)), recfac::DomainError);
}

TEST(FactorToSequence, NegativeValues) {
  const Polynomial f{-398, 0, 1};
  for (long n = -60; n <= 60; ++n) {
    const Int v = f(Int(n));
    if (v == 0) continue;
    for (const Int& p : recfac::trial_divisors(v)) expect_valid_trace(f, Int(n), p, recfac::factor_to_sequence(f, Int(n), p));
  }
}

TEST(FactorToSequence, CompleteOnLemmaFamilySmallRange) {
  for (const Polynomial& f : lemma_family()) {
    for (long n = -40; n <= 40; ++n) {
      const Int v = f(Int(n));
      for (const Int& p : recfac::trial_divisors(v)) {
        const DescentTrace t = recfac::factor_to_sequence(f, Int(n), p);
        expect_valid_trace(f, Int(n), p, t);
      }
    }
  }
}
