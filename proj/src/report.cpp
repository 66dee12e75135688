#include "recfac/report.hpp"

#include "recfac/error.hpp"

namespace recfac {

namespace {

Json envelope(const Polynomial& poly, const char* command, Json results) {
  return Json{{"polynomial", ints_to_json(poly.coeffs())}, {"command", command}, {"results", std::move(results)}};
}

const Json& results_of(const Json& j, const char* command) {
  if (!j.is_object() || !j.contains("command") || j.at("command") != command || !j.contains("results") ||
      !j.at("results").is_array() || j.at("results").empty()) {
    throw ParseError(std::string("not a '") + command + "' report");
  }
  return j.at("results");
}

Polynomial poly_of(const Json& j) { return Polynomial(ints_from_json(j.at("polynomial"))); }

Json trace_to_json(const SieveTrace& t) {
  return {{"seq", ints_to_json(t.seq)}, {"f", ints_to_json(t.f)}, {"N", ints_to_json(t.N)}};
}

SieveTrace trace_from_json(const Json& j) {
  return {ints_from_json(j.at("seq")), ints_from_json(j.at("f")), ints_from_json(j.at("N"))};
}

Json matrix_to_json(const GammaMatrix& m) { return ints_to_json({m.alpha, m.beta, m.gamma, m.delta}); }

GammaMatrix matrix_from_json(const Json& j) {
  std::vector<Int> v = ints_from_json(j);
  if (v.size() != 4) throw ParseError("matrix needs four entries");
  return {v[0], v[1], v[2], v[3]};
}

template <class F>
auto guarded(F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace

Json int_to_json(const Int& v) { return v.str(); }

Int int_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("integers are encoded as decimal strings");
  return parse_int(j.get<std::string>());
}

Json ints_to_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

std::vector<Int> ints_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  std::vector<Int> out;
  for (const Json& x : j) out.push_back(int_from_json(x));
  return out;
}

Json to_json(const SieveReport& r) {
  Json row = trace_to_json(r.trace);
  row["value"] = int_to_json(r.poly(r.trace.last_N()));
  if (r.binary) row["binary"] = trace_to_json(*r.binary);
  return envelope(r.poly, "sieve", Json::array({row}));
}

SieveReport sieve_report_from_json(const Json& j) {
  return guarded([&] {
    const Json& row = results_of(j, "sieve").at(0);
    SieveReport r{poly_of(j), trace_from_json(row), std::nullopt};
    if (row.contains("binary")) r.binary = trace_from_json(row.at("binary"));
    return r;
  });
}

Json to_json(const FactorReport& r) {
  Json row{{"n", int_to_json(r.n)},
           {"p", int_to_json(r.p)},
           {"remainders", ints_to_json(r.remainders)},
           {"quotients", ints_to_json(r.quotients)},
           {"factors", ints_to_json(r.factors)},
           {"trace", trace_to_json(r.trace)}};
  if (!r.matrices.empty()) {
    Json ms = Json::array();
    for (const GammaMatrix& m : r.matrices) ms.push_back(matrix_to_json(m));
    row["matrices"] = std::move(ms);
  }
  if (r.word) row["word"] = *r.word;
  return envelope(r.poly, "factor", Json::array({row}));
}

FactorReport factor_report_from_json(const Json& j) {
  return guarded([&] {
    const Json& row = results_of(j, "factor").at(0);
    FactorReport r;
    r.poly = poly_of(j);
    r.n = int_from_json(row.at("n"));
    r.p = int_from_json(row.at("p"));
    r.remainders = ints_from_json(row.at("remainders"));
    r.quotients = ints_from_json(row.at("quotients"));
    r.factors = ints_from_json(row.at("factors"));
    r.trace = trace_from_json(row.at("trace"));
    if (row.contains("matrices")) {
      for (const Json& m : row.at("matrices")) r.matrices.push_back(matrix_from_json(m));
    }
    if (row.contains("word")) r.word = row.at("word").get<std::string>();
    return r;
  });
}

Json to_json(const VerifyReport& r) {
  Json row{{"mode", r.mode},
           {"passed", r.passed},
           {"interval", ints_to_json({r.lo, r.hi})},
           {"checked", int_to_json(r.checked)},
           {"witnesses", int_to_json(r.witnesses)}};
  if (r.n_hat) row["n_hat"] = int_to_json(*r.n_hat);
  if (r.core) row["core"] = ints_to_json({r.core->first, r.core->second});
  if (r.fail_n) {
    Json pairs = Json::array();
    for (const FactorPair& p : r.fail_pairs) pairs.push_back(ints_to_json({p.p, p.q}));
    row["counterexample"] = {{"n", int_to_json(*r.fail_n)},
                             {"value", int_to_json(r.fail_value.value_or(0))},
                             {"pairs", std::move(pairs)}};
  }
  return envelope(r.poly, "verify-rf", Json::array({row}));
}

VerifyReport verify_report_from_json(const Json& j) {
  return guarded([&] {
    const Json& row = results_of(j, "verify-rf").at(0);
    VerifyReport r;
    r.poly = poly_of(j);
    r.mode = row.at("mode").get<std::string>();
    r.passed = row.at("passed").get<bool>();
    std::vector<Int> iv = ints_from_json(row.at("interval"));
    if (iv.size() != 2) throw ParseError("interval needs two bounds");
    r.lo = iv[0];
    r.hi = iv[1];
    r.checked = int_from_json(row.at("checked"));
    r.witnesses = int_from_json(row.at("witnesses"));
    if (row.contains("n_hat")) r.n_hat = int_from_json(row.at("n_hat"));
    if (row.contains("core")) {
      std::vector<Int> core = ints_from_json(row.at("core"));
      if (core.size() != 2) throw ParseError("core needs two bounds");
      r.core = std::pair{core[0], core[1]};
    }
    if (row.contains("counterexample")) {
      const Json& ce = row.at("counterexample");
      r.fail_n = int_from_json(ce.at("n"));
      r.fail_value = int_from_json(ce.at("value"));
      for (const Json& p : ce.at("pairs")) {
        std::vector<Int> pq = ints_from_json(p);
        if (pq.size() != 2) throw ParseError("pair needs two entries");
        r.fail_pairs.push_back({pq[0], pq[1]});
      }
    }
    return r;
  });
}

Json to_json(const ConicReport& r) {
  Json rows = Json::array();
  for (const ConicRow& row : r.rows) {
    Json x{{"X", int_to_json(row.point.X)},
           {"Y", int_to_json(row.point.Y)},
           {"p", int_to_json(row.p)},
           {"q", int_to_json(row.q)},
           {"n", int_to_json(r.n)},
           {"matrix", matrix_to_json(row.matrix)},
           {"class", row.exceptional}};
    if (row.pell) {
      x["pell"] = {{"U", int_to_json(row.pell->U)}, {"V", int_to_json(row.pell->V)}, {"D", int_to_json(row.pell->D)}};
    }
    rows.push_back(std::move(x));
  }
  Json out = envelope(r.poly, "conic", std::move(rows));
  out["n"] = int_to_json(r.n);
  if (r.box) out["box"] = int_to_json(*r.box);
  return out;
}

ConicReport conic_report_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object() || j.value("command", "") != "conic") throw ParseError("not a 'conic' report");
    ConicReport r;
    r.poly = poly_of(j);
    r.n = int_from_json(j.at("n"));
    if (j.contains("box")) r.box = int_from_json(j.at("box"));
    for (const Json& x : j.at("results")) {
      ConicRow row;
      row.point = {int_from_json(x.at("X")), int_from_json(x.at("Y"))};
      row.p = int_from_json(x.at("p"));
      row.q = int_from_json(x.at("q"));
      row.matrix = matrix_from_json(x.at("matrix"));
      row.exceptional = x.at("class").get<std::string>();
      if (x.contains("pell")) {
        const Json& pl = x.at("pell");
        row.pell = PellPoint{int_from_json(pl.at("U")), int_from_json(pl.at("V")), int_from_json(pl.at("D"))};
      }
      r.rows.push_back(std::move(row));
    }
    return r;
  });
}

}  // namespace recfac
