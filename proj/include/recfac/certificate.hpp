#pragma once

#include "recfac/descent.hpp"

#include <iosfwd>
#include <string>

namespace recfac {

/// Canonical line-oriented certificate text. Lines are ordered by n and then
/// by factor pair, so equal certificates serialise byte-identically.
///
///   recfac-certificate 1
///   library <version>
///   polynomial <c0> <c1> <c2>
///   mode lemma|range
///   n_hat <n̂>            (lemma mode)
///   core <lo> <hi>        (lemma mode, I_{n̂})
///   interval <lo> <hi>
///   n <n> value <F(n)> pairs <k>
///   witness <p> <q> <r> <F(r)> p|q      (k lines under their n)
///   failure <p> <q>                     (unwitnessed pairs)
///   end <witness count>
void write_certificate(std::ostream& os, const DescentCertificate& cert);
std::string certificate_text(const DescentCertificate& cert);

/// Parses the text written above. Throws ParseError on malformed input.
DescentCertificate read_certificate(std::istream& is);

/// Re-checks a certificate from scratch: every n in the interval is present,
/// every nontrivial pair of |F(n)| (trial division) carries a witness with
/// r ≡ n modulo the tagged factor and |F(r)| < |F(n)|. Returns an empty
/// string when valid, otherwise the first problem found.
std::string audit_certificate(const DescentCertificate& cert);

}  // namespace recfac
