#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtheta/wronskian.hpp"

namespace qtheta {

// Which route computes the Wronskian inside a verification.
enum class WronskianRoute { lattice, determinant };

struct Mismatch {
    QExp q_exp;
    std::int64_t zeta_exp = 0;
    Int lhs;
    Int rhs;
};

// Structured outcome of one identity check. matched is true exactly when
// first_mismatch is absent; compared_terms counts the union of both
// sides' supports below the compared order.
struct VerificationReport {
    std::string identity;
    int n = 0;
    QExp order;
    bool matched = false;
    std::optional<Mismatch> first_mismatch;
    std::int64_t compared_terms = 0;
    std::chrono::nanoseconds elapsed{0};
};

// Exact comparison of two series below the minimum of their orders.
// A mismatch reports the lexicographically least differing coordinate
// (q_exp first, zeta_exp second).
struct Comparison {
    bool matched = true;
    std::optional<Mismatch> first_mismatch;
    std::int64_t compared_terms = 0;
    QExp order;
};

Comparison compare_below(const ZetaSeries& a, const ZetaSeries& b);
Comparison compare_below(const QSeries& a, const QSeries& b);

// Theorem 1: C * theta(tau,z) * eta(tau)^(n^2-1) equals the lattice sum
// evaluated at z/n, with C = 1!2!...(n-1)! kept on the left so both sides
// stay integral.
VerificationReport verify_theorem1(int n, const QExp& order,
                                   VdmConvention convention = VdmConvention::column_order,
                                   WronskianRoute route = WronskianRoute::lattice);

// Macdonald identity for sl_n: C * eta^(n^2-1) equals the sum-zero
// lattice sum (h_0). n = 5 is Dyson's identity.
VerificationReport verify_sln(int n, const QExp& order);

// The zeta^0 row of the two-variable identity is the one-variable one.
VerificationReport verify_equivalence_reduction(int n, const QExp& order);

// theta_sum == theta_triple_product, exact.
VerificationReport verify_triple_product(const QExp& order);

// h_r == 0 for n not dividing r (|r| <= n^2); h_r == h_{r+n} for
// r in {0, +-n, +-2n}; h_r == h_{r+n^2} for r in {0, n}.
VerificationReport verify_hr_properties(int n, const QExp& order);

// wronskian_lattice == (h_0 at zeta^0) * theta(tau, n z).
VerificationReport verify_factorization(int n, const QExp& order);

// Leading exponent of h_0 is exactly (n^2-1)/24 with |coefficient|
// = 1!2!...(n-1)!.
VerificationReport verify_vanishing_order(int n);

// Ramanujan tau two ways: coefficients of eta^24, and the n = 5 lattice
// sum divided (exactly) by 288. Throws integrity_error on inexact division.
struct TauResult {
    std::vector<std::pair<std::int64_t, Int>> values; // (m, tau(m))
    VerificationReport report;
};

TauResult ramanujan_tau(int count);

} // namespace qtheta
