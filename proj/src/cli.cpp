#include "recfac/cli.hpp"

#include "recfac/certificate.hpp"
#include "recfac/conic.hpp"
#include "recfac/descent.hpp"
#include "recfac/error.hpp"
#include "recfac/gamma.hpp"
#include "recfac/report.hpp"
#include "recfac/sieve.hpp"
#include "recfac/svg.hpp"
#include "recfac/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace recfac::cli {

namespace {

std::string join(const std::vector<Int>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

/// Prints "F(N) = value = left × right" after re-checking it.
std::string product_line(const Polynomial& f, const Int& n, const Int& left, const Int& right) {
  const Int value = f(n);
  if (value != left * right) throw DefectError("refusing to print an unverified factorization");
  std::ostringstream os;
  os << "F(" << n << ") = " << value << " = " << left << " × " << right;
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
  if (!file) throw Error("failed writing '" + path + "'");
}

struct PolyOptions {
  std::string text;
  int degree = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--poly", text, "coefficients a,b,c (or c0,...,cd with --degree)")->required();
    cmd->add_option("--degree", degree, "read --poly lowest-first with this degree");
  }
  Polynomial get() const { return parse_poly(text, degree); }
};

// ---- sieve ---------------------------------------------------------------

struct SieveArgs {
  PolyOptions poly;
  std::string seq;
  bool binary = false;
  bool json = false;
};

void print_trace(std::ostream& out, const SieveTrace& t) {
  out << std::setw(4) << "k" << std::setw(10) << "x_k" << std::setw(16) << "f_k" << std::setw(16) << "N_k" << "\n";
  for (std::size_t k = 0; k < t.f.size(); ++k) {
    out << std::setw(4) << k << std::setw(10) << (k == 0 ? std::string("-") : t.seq[k - 1].str()) << std::setw(16)
        << t.f[k] << std::setw(16) << t.N[k] << "\n";
  }
}

int cmd_sieve(const SieveArgs& args, std::ostream& out) {
  const Polynomial f = args.poly.get();
  const std::vector<Int> seq = parse_int_list(args.seq);
  SieveReport report{f, f.degree() == 2 ? sieve_eval_quadratic(f, seq) : sieve_eval(f, seq), std::nullopt};
  if (f.degree() == 2 && report.trace != sieve_eval(f, seq)) throw DefectError("sieve recurrences disagree");
  if (args.binary) report.binary = expand_to_binary(f, report.trace);

  if (args.json) {
    out << to_json(report).dump(2) << "\n";
    return kSuccess;
  }
  const SieveTrace& t = report.trace;
  out << "F(x) = " << f.to_string() << "\n";
  print_trace(out, t);
  if (t.length() == 0) {
    out << "f = [1]\n";
  } else {
    out << product_line(f, t.last_N(), t.previous_f(), t.last_f()) << "\n";
  }
  if (report.binary) {
    const SieveTrace& b = *report.binary;
    out << "binary expansion (M = " << b.length() << "): " << join(b.seq) << "\n";
    out << "f_" << b.length() << "(" << join(b.seq) << ") = " << b.last_f() << "\n";
    out << product_line(f, b.last_N(), b.previous_f(), b.last_f()) << "\n";
  }
  return kSuccess;
}

// ---- factor --------------------------------------------------------------

struct FactorArgs {
  PolyOptions poly;
  std::string n;
  std::string p;
  bool matrix = false;
  bool word = false;
  bool json = false;
};

int cmd_factor(const FactorArgs& args, std::ostream& out) {
  const Polynomial f = args.poly.get();
  require_quadratic(f, "factor needs a quadratic polynomial");
  const Int n = parse_int(args.n);
  const Int p = parse_int(args.p);
  if (args.word && f.a() != 1) throw DomainError("transvection words need a monic polynomial");

  DescentTrace descent = factor_to_sequence(f, n, p);
  FactorReport report;
  report.poly = f;
  report.n = n;
  report.p = p;
  report.remainders = descent.remainders;
  report.quotients = descent.quotients;
  report.factors = descent.factors;
  report.trace = sieve_eval_quadratic(f, descent.seq);
  const std::size_t m = report.trace.length();
  if (args.matrix || args.word) {
    std::vector<GammaMatrix> chain = seq_to_matrix(f, descent.seq);
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (phi_m(evaluate_forms(f, chain[k]), k) != report.trace.f[k]) throw DefectError("φ_k[A_k] ≠ f_k");
    }
    if (args.matrix) report.matrices = chain;
    if (args.word) {
      TransvectionProduct w = transvection_word(descent.seq);
      if (w.matrix != chain.back()) throw DefectError("transvection word disagrees with the matrix recursion");
      report.word = w.word.to_string();
    }
  }

  if (args.json) {
    out << to_json(report).dump(2) << "\n";
    return kSuccess;
  }
  out << "F(x) = " << f.to_string() << ", n = " << n << ", p = " << p << "\n";
  if (!descent.remainders.empty()) {
    out << "remainders: " << join(descent.remainders, ", ") << "\n";
    out << "quotients:  " << join(descent.quotients, ", ") << "\n";
    out << "factors:    " << join(descent.factors, ", ") << "\n";
  } else {
    out << "trivial presentation\n";
  }
  out << "sequence: (" << join(descent.seq, ", ") << ")\n";
  out << "check: N_" << m << " = " << report.trace.last_N() << ", f_" << m << " = " << report.trace.last_f() << "\n";
  out << product_line(f, report.trace.last_N(), report.trace.previous_f(), report.trace.last_f()) << "\n";
  for (std::size_t k = 0; k < report.matrices.size(); ++k) {
    const FormEvaluation e = evaluate_forms(f, report.matrices[k]);
    out << "A_" << k << " = " << to_string(report.matrices[k]) << "  Δ = " << e.delta_val << "  η = " << e.eta_val
        << "  φ_" << k << " = " << phi_m(e, k) << "\n";
  }
  if (report.word) {
    out << "word: " << (report.word->empty() ? std::string("I") : *report.word) << " = "
        << to_string(seq_to_matrix(f, descent.seq).back()) << "\n";
  }
  return kSuccess;
}

// ---- verify-rf -----------------------------------------------------------

struct VerifyArgs {
  PolyOptions poly;
  std::string mode = "lemma";
  std::string lo;
  std::string hi;
  std::string cert_path;
  unsigned jobs = 1;
  bool json = false;
};

std::string interval_text(const Int& lo, const Int& hi) {
  return lo == hi ? "[" + lo.str() + "]" : "[" + lo.str() + ", " + hi.str() + "]";
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const Polynomial f = args.poly.get();
  VerifyOptions options;
  options.jobs = args.jobs;
  if (args.mode == "lemma") {
    options.mode = VerifyMode::lemma_interval;
  } else if (args.mode == "range") {
    if (args.lo.empty() || args.hi.empty()) throw ParseError("--mode range needs --lo and --hi");
    options.mode = VerifyMode::exhaustive_range;
    options.lo = parse_int(args.lo);
    options.hi = parse_int(args.hi);
  } else {
    throw ParseError("--mode must be lemma or range");
  }

  VerifyOutcome outcome = verify_rf(f, options);
  const DescentCertificate& cert = outcome.certificate;
  if (outcome.passed && !audit_certificate(cert).empty()) throw DefectError("certificate failed its own audit");
  if (!args.cert_path.empty()) write_file(args.cert_path, certificate_text(cert));

  VerifyReport report;
  report.poly = f;
  report.mode = args.mode;
  report.passed = outcome.passed;
  report.lo = cert.lo;
  report.hi = cert.hi;
  report.checked = Int(cert.points.size());
  report.witnesses = Int(cert.witness_count());
  if (cert.bound) {
    report.n_hat = cert.bound->n_hat;
    report.core = std::pair{cert.bound->core_lo, cert.bound->core_hi};
  }
  if (outcome.counterexample) {
    report.fail_n = outcome.counterexample->n;
    report.fail_value = outcome.counterexample->value;
    report.fail_pairs = outcome.counterexample->failures;
  }

  if (args.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << (report.passed ? "PASS" : "FAIL") << "  F(x) = " << f.to_string() << "\n";
    if (cert.bound) {
      out << "n_hat = " << cert.bound->n_hat << ", I = "
          << (cert.bound->core_empty() ? std::string("[]") : interval_text(cert.bound->core_lo, cert.bound->core_hi))
          << " ∪ " << interval_text(cert.bound->base_lo, cert.bound->base_hi) << "\n";
    }
    out << "checked " << report.checked << " values in " << interval_text(cert.lo, cert.hi) << ", "
        << report.witnesses << " witnesses\n";
    if (outcome.counterexample) {
      const CriterionResult& ce = *outcome.counterexample;
      out << "counterexample: n = " << ce.n << ", F(n) = " << ce.value;
      if (ce.zero_value()) {
        out << " (zero value)";
      } else {
        for (const FactorPair& pair : ce.failures) out << ", pair " << pair.p << "·" << pair.q << " has no witness";
      }
      out << "\n";
    }
    if (!args.cert_path.empty()) out << "certificate written to " << args.cert_path << "\n";
  }
  return report.passed ? kSuccess : kFail;
}

// ---- conic ---------------------------------------------------------------

struct ConicArgs {
  PolyOptions poly;
  std::string n;
  std::string box;
  std::string svg_path;
  std::string csv_path;
  std::string overlay;
  bool pell = false;
  bool json = false;
};

std::pair<Int, Int> parse_overlay(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("--overlay expects LO:HI");
  Int lo = parse_int(text.substr(0, colon));
  Int hi = parse_int(text.substr(colon + 1));
  if (lo > hi) throw ParseError("--overlay range is empty");
  return {lo, hi};
}

int cmd_conic(const ConicArgs& args, std::ostream& out) {
  const Polynomial f = args.poly.get();
  require_quadratic(f, "conic needs a quadratic polynomial");
  const ConicInstance inst(f, parse_int(args.n));
  std::optional<Int> box;
  if (!args.box.empty()) box = parse_int(args.box);

  const std::vector<LatticePoint> points = enumerate_points(inst, box);
  ConicReport report{f, inst.n, box, {}};
  for (const LatticePoint& pt : points) {
    PointFactorization pf = point_to_factorization(inst, pt);
    ConicRow row{pt, pf.p, pf.q, pf.matrix, to_string(pf.exceptional), std::nullopt};
    if (args.pell) row.pell = pell_reduce(inst, pt);
    report.rows.push_back(std::move(row));
  }

  if (!args.csv_path.empty()) {
    std::ostringstream csv;
    csv << "X,Y,p,q,n\n";
    for (const ConicRow& row : report.rows) {
      csv << row.point.X << "," << row.point.Y << "," << row.p << "," << row.q << "," << inst.n << "\n";
    }
    write_file(args.csv_path, csv.str());
  }
  if (!args.svg_path.empty()) {
    SvgOptions svg;
    svg.box = box;
    if (!args.overlay.empty()) svg.overlay = parse_overlay(args.overlay);
    write_file(args.svg_path, render_conic_svg(inst, points, svg));
  }

  if (args.json) {
    out << to_json(report).dump(2) << "\n";
    return kSuccess;
  }
  out << "conic: " << inst.equation() << "\n";
  out << "F(x) = " << f.to_string() << ", F(" << inst.n << ") = " << f(inst.n) << "\n";
  out << std::setw(8) << "X" << std::setw(8) << "Y" << "  " << std::left << std::setw(28) << "matrix" << std::right
      << (args.pell ? "factorization           " : "factorization");
  if (args.pell) out << std::setw(12) << "U" << std::setw(12) << "V";
  out << "\n";
  for (const ConicRow& row : report.rows) {
    std::ostringstream fac;
    fac << row.p << " · " << row.q;
    if (row.exceptional != "none") fac << "  [" << row.exceptional << "]";
    out << std::setw(8) << row.point.X << std::setw(8) << row.point.Y << "  " << std::left << std::setw(28)
        << to_string(row.matrix);
    if (row.pell) {
      out << std::setw(24) << fac.str() << std::right << std::setw(12) << row.pell->U << std::setw(12) << row.pell->V;
    } else {
      out << std::right << fac.str();
    }
    out << "\n";
  }
  out << report.rows.size() << " lattice points\n";
  if (args.pell && !report.rows.empty()) {
    out << "Pell form: U^2 - (" << inst.discriminant() << ") V^2 = " << 4 * f.a() * f(inst.n) << "\n";
  }
  return kSuccess;
}

}  // namespace

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(parse_int(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Polynomial parse_poly(const std::string& text, int degree) {
  std::vector<Int> values = parse_int_list(text);
  if (degree < 0) {
    if (values.size() != 3) throw ParseError("--poly expects a,b,c; use --degree for other degrees");
    if (values[0] == 0) throw ParseError("leading coefficient must be nonzero");
    return Polynomial::quadratic(values[0], values[1], values[2]);
  }
  if (values.size() != static_cast<std::size_t>(degree) + 1) {
    throw ParseError("--degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) + " coefficients");
  }
  if (values.back() == 0) throw ParseError("leading coefficient must be nonzero");
  return Polynomial(std::move(values));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recursive factorization of polynomial values", "recfac"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  SieveArgs sieve;
  auto* sieve_cmd = app.add_subcommand("sieve", "evaluate the sieving recursion along a sequence");
  sieve.poly.attach(sieve_cmd);
  sieve_cmd->add_option("--seq", sieve.seq, "comma-separated sequence x_1,...,x_m")->required();
  sieve_cmd->add_flag("--binary-expand", sieve.binary, "also expand the sequence over {-1,0,1}");
  sieve_cmd->add_flag("--json", sieve.json, "machine-readable output");

  FactorArgs factor;
  auto* factor_cmd = app.add_subcommand("factor", "turn a divisor p of F(n) into a sieving sequence");
  factor.poly.attach(factor_cmd);
  factor_cmd->add_option("--n", factor.n, "argument n")->required();
  factor_cmd->add_option("--p", factor.p, "positive divisor of F(n)")->required();
  factor_cmd->add_flag("--matrix", factor.matrix, "print the matrix chain A_0..A_m");
  factor_cmd->add_flag("--word", factor.word, "print the transvection word (monic F)");
  factor_cmd->add_flag("--json", factor.json, "machine-readable output");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-rf", "check the recursively-factorable criterion");
  verify.poly.attach(verify_cmd);
  verify_cmd->add_option("--mode", verify.mode, "lemma (interval reduction) or range (exhaustive)")
      ->check(CLI::IsMember({"lemma", "range"}));
  verify_cmd->add_option("--lo", verify.lo, "range start");
  verify_cmd->add_option("--hi", verify.hi, "range end");
  verify_cmd->add_option("--emit-cert", verify.cert_path, "write the canonical certificate here");
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify.json, "machine-readable output");

  ConicArgs conic;
  auto* conic_cmd = app.add_subcommand("conic", "lattice points of aX^2 + bXY + cY^2 + X - nY = 0");
  conic.poly.attach(conic_cmd);
  conic_cmd->add_option("--n", conic.n, "conic parameter n")->required();
  conic_cmd->add_option("--box", conic.box, "search box |X|,|Y| <= B (required when b^2 - 4ac >= 0)");
  conic_cmd->add_option("--svg", conic.svg_path, "write a static plot");
  conic_cmd->add_option("--overlay", conic.overlay, "with --svg, also draw the family for n in LO:HI");
  conic_cmd->add_option("--csv", conic.csv_path, "write X,Y,p,q,n rows");
  conic_cmd->add_flag("--pell", conic.pell, "include the Pell reduction");
  conic_cmd->add_flag("--json", conic.json, "machine-readable output");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    if (*sieve_cmd) return cmd_sieve(sieve, out);
    if (*factor_cmd) return cmd_factor(factor, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*conic_cmd) return cmd_conic(conic, out);
  } catch (const DescentStall& e) {
    err << "error: " << e.what() << "\n";
    return kStall;
  } catch (const DefectError& e) {
    err << "internal defect: " << e.what() << "\n";
    return kDefect;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace recfac::cli
