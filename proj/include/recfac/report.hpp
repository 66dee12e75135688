#pragma once

// Machine-readable reports emitted by the command-line tool. Every payload
// is {"polynomial": [...], "command": "...", "results": [...]} with integers
// written as decimal strings.

#include "recfac/conic.hpp"
#include "recfac/descent.hpp"
#include "recfac/gamma.hpp"
#include "recfac/int.hpp"
#include "recfac/polynomial.hpp"
#include "recfac/sieve.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace recfac {

using Json = nlohmann::json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json ints_to_json(const std::vector<Int>& v);
std::vector<Int> ints_from_json(const Json& j);

struct SieveReport {
  Polynomial poly;
  SieveTrace trace;
  std::optional<SieveTrace> binary;

  friend bool operator==(const SieveReport&, const SieveReport&) = default;
};

struct FactorReport {
  Polynomial poly;
  Int n;
  Int p;
  std::vector<Int> remainders;
  std::vector<Int> quotients;
  std::vector<Int> factors;
  SieveTrace trace;
  std::vector<GammaMatrix> matrices;  // empty unless requested
  std::optional<std::string> word;

  friend bool operator==(const FactorReport&, const FactorReport&) = default;
};

struct VerifyReport {
  Polynomial poly;
  std::string mode;  // "lemma" or "range"
  bool passed = false;
  Int lo;
  Int hi;
  std::optional<Int> n_hat;
  std::optional<std::pair<Int, Int>> core;
  Int checked;
  Int witnesses;
  std::optional<Int> fail_n;
  std::optional<Int> fail_value;
  std::vector<FactorPair> fail_pairs;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct ConicRow {
  LatticePoint point;
  Int p;
  Int q;
  GammaMatrix matrix;
  std::string exceptional;  // "none", "K1", "K2", "K3"
  std::optional<PellPoint> pell;

  friend bool operator==(const ConicRow&, const ConicRow&) = default;
};

struct ConicReport {
  Polynomial poly;
  Int n;
  std::optional<Int> box;
  std::vector<ConicRow> rows;

  friend bool operator==(const ConicReport&, const ConicReport&) = default;
};

Json to_json(const SieveReport& r);
Json to_json(const FactorReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const ConicReport& r);

/// Inverses of to_json. Throw ParseError on schema mismatches.
SieveReport sieve_report_from_json(const Json& j);
FactorReport factor_report_from_json(const Json& j);
VerifyReport verify_report_from_json(const Json& j);
ConicReport conic_report_from_json(const Json& j);

}  // namespace recfac
