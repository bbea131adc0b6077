#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qtheta/verify.hpp"

namespace qtheta {

enum class Format { text, json };

// Fixed-field report serialization. JSON fields, in order: identity, n,
// order ("a/b" reduced), matched, first_mismatch ({q_exp, zeta_exp, lhs,
// rhs} or null), compared_terms, elapsed_ms. Big integers are decimal
// strings. Output is canonical: re-serializing parsed output is
// byte-identical.
std::string emit_report(const VerificationReport& report, Format format);

// Coefficient tables, sorted by (q_exp, zeta_exp). Text: one line per
// term, "q^(a/b) zeta^x  coefficient". JSON: array of
// {q_exp, zeta_exp, coeff}.
std::string emit_coeffs(const ZetaSeries& series, Format format);
std::string emit_coeffs(const QSeries& series, Format format);

std::string emit_tau(const TauResult& result, Format format);

// Command-line front end (args exclude the program name).
// Exit codes: 0 all requested verifications matched, 1 any mismatch
// (reports still emitted), 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace qtheta
