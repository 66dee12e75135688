#include "recfac/certificate.hpp"

#include "recfac/error.hpp"
#include "recfac/version.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace recfac {

void write_certificate(std::ostream& os, const DescentCertificate& cert) {
  os << "recfac-certificate 1\n";
  os << "library " << kVersion << "\n";
  os << "polynomial";
  for (int i = 0; i <= 2; ++i) os << " " << cert.poly.coeff(static_cast<std::size_t>(i));
  os << "\n";
  os << "mode " << (cert.mode == VerifyMode::lemma_interval ? "lemma" : "range") << "\n";
  if (cert.bound) {
    os << "n_hat " << cert.bound->n_hat << "\n";
    os << "core " << cert.bound->core_lo << " " << cert.bound->core_hi << "\n";
  }
  os << "interval " << cert.lo << " " << cert.hi << "\n";
  for (const CriterionResult& point : cert.points) {
    os << "n " << point.n << " value " << point.value << " pairs "
       << point.witnesses.size() + point.failures.size() << "\n";
    // Witnesses and failures interleaved in pair order.
    std::size_t w = 0;
    std::size_t f = 0;
    while (w < point.witnesses.size() || f < point.failures.size()) {
      const bool take_witness =
          f == point.failures.size() ||
          (w < point.witnesses.size() && point.witnesses[w].p < point.failures[f].p);
      if (take_witness) {
        const CriterionWitness& x = point.witnesses[w++];
        os << "witness " << x.p << " " << x.q << " " << x.r << " " << x.value_at_r << " "
           << (x.modulus == ModulusTag::p ? "p" : "q") << "\n";
      } else {
        const FactorPair& x = point.failures[f++];
        os << "failure " << x.p << " " << x.q << "\n";
      }
    }
  }
  os << "end " << cert.witness_count() << "\n";
}

std::string certificate_text(const DescentCertificate& cert) {
  std::ostringstream os;
  write_certificate(os, cert);
  return os.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty()) lines_.push_back(line);
    }
  }

  std::istringstream next(const std::string& keyword) {
    if (pos_ >= lines_.size()) throw ParseError("certificate truncated before '" + keyword + "'");
    std::istringstream fields(lines_[pos_++]);
    std::string head;
    fields >> head;
    if (head != keyword) {
      throw ParseError("certificate line " + std::to_string(pos_) + ": expected '" + keyword +
                       "', got '" + head + "'");
    }
    return fields;
  }

  std::string peek_keyword() const {
    if (pos_ >= lines_.size()) return {};
    std::istringstream fields(lines_[pos_]);
    std::string head;
    fields >> head;
    return head;
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

Int read_int(std::istringstream& fields) {
  std::string token;
  if (!(fields >> token)) throw ParseError("certificate field missing");
  return parse_int(token);
}

}  // namespace

DescentCertificate read_certificate(std::istream& is) {
  LineReader in(is);
  DescentCertificate cert;
  {
    auto header = in.next("recfac-certificate");
    if (read_int(header) != 1) throw ParseError("unsupported certificate version");
  }
  in.next("library");
  {
    auto fields = in.next("polynomial");
    std::vector<Int> coeffs;
    for (int i = 0; i < 3; ++i) coeffs.push_back(read_int(fields));
    cert.poly = Polynomial(std::move(coeffs));
  }
  {
    auto fields = in.next("mode");
    std::string mode;
    fields >> mode;
    if (mode == "lemma") {
      cert.mode = VerifyMode::lemma_interval;
    } else if (mode == "range") {
      cert.mode = VerifyMode::exhaustive_range;
    } else {
      throw ParseError("unknown certificate mode '" + mode + "'");
    }
  }
  if (cert.mode == VerifyMode::lemma_interval) {
    LemmaBound bound;
    auto nh = in.next("n_hat");
    bound.n_hat = read_int(nh);
    auto core = in.next("core");
    bound.core_lo = read_int(core);
    bound.core_hi = read_int(core);
    bound.shift = cert.poly.b() / cert.poly.a();
    bound.base_lo = -abs(cert.poly.c());
    bound.base_hi = abs(cert.poly.c());
    cert.bound = bound;
  }
  {
    auto fields = in.next("interval");
    cert.lo = read_int(fields);
    cert.hi = read_int(fields);
  }
  while (in.peek_keyword() == "n") {
    auto fields = in.next("n");
    CriterionResult point;
    point.n = read_int(fields);
    std::string tag;
    fields >> tag;
    point.value = read_int(fields);
    fields >> tag;
    Int pairs = read_int(fields);
    for (Int k = 0; k < pairs; ++k) {
      if (in.peek_keyword() == "witness") {
        auto w = in.next("witness");
        CriterionWitness x;
        x.n = point.n;
        x.p = read_int(w);
        x.q = read_int(w);
        x.r = read_int(w);
        x.value_at_r = read_int(w);
        std::string which;
        w >> which;
        if (which != "p" && which != "q") throw ParseError("bad modulus tag '" + which + "'");
        x.modulus = which == "p" ? ModulusTag::p : ModulusTag::q;
        point.witnesses.push_back(std::move(x));
      } else {
        auto fl = in.next("failure");
        FactorPair pair;
        pair.p = read_int(fl);
        pair.q = read_int(fl);
        point.failures.push_back(std::move(pair));
      }
    }
    cert.points.push_back(std::move(point));
  }
  auto end = in.next("end");
  if (read_int(end) != Int(cert.witness_count())) throw ParseError("certificate witness count mismatch");
  return cert;
}

std::string audit_certificate(const DescentCertificate& cert) {
  const Polynomial& f = cert.poly;
  if (cert.lo > cert.hi) return "empty interval";
  if (Int(cert.points.size()) != cert.hi - cert.lo + 1) return "interval and point count disagree";
  if (cert.bound && !cert.bound->core_empty() &&
      (cert.bound->core_lo < cert.lo || cert.bound->core_hi > cert.hi)) {
    return "core interval not covered";
  }
  for (std::size_t i = 0; i < cert.points.size(); ++i) {
    const CriterionResult& point = cert.points[i];
    const Int n = cert.lo + Int(i);
    if (point.n != n) return "missing n = " + n.str();
    const Int value = f(n);
    if (point.value != value) return "wrong value at n = " + n.str();
    if (value == 0) return "F vanishes at n = " + n.str();
    if (!point.failures.empty()) return "unwitnessed pair at n = " + n.str();

    std::vector<std::pair<Int, Int>> expected;
    for (const Int& d : trial_divisors(value)) {
      Int co = abs(value) / d;
      if (d > 1 && co > 1 && d <= co) expected.emplace_back(d, co);
    }
    if (expected.size() != point.witnesses.size()) return "pair count mismatch at n = " + n.str();
    for (std::size_t k = 0; k < expected.size(); ++k) {
      const CriterionWitness& w = point.witnesses[k];
      if (w.p != expected[k].first || w.q != expected[k].second) return "pair mismatch at n = " + n.str();
      const Int& m = w.modulus == ModulusTag::p ? w.p : w.q;
      if ((w.r - n) % m != 0) return "witness not congruent at n = " + n.str();
      if (f(w.r) != w.value_at_r || abs(w.value_at_r) >= abs(value)) {
        return "witness not smaller at n = " + n.str();
      }
    }
  }
  return {};
}

}  // namespace recfac
