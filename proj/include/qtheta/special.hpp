#pragma once

#include "qtheta/zeta_series.hpp"

namespace qtheta {

// The named series of the engine. Every constructor takes the truncation
// order as a QExp whose denominator is the exponent grid of the result;
// a context_error is thrown when a needed exponent does not lie on it.

// k-th power of Dedekind eta: q^(k/24) * prod_{m>=1} (1 - q^m)^k,
// exact below `order`. k = 0 yields the constant series 1.
QSeries eta_power(int k, const QExp& order);

// Jacobi theta in sum form: sum_r q^(r^2/2) zeta^r.
ZetaSeries theta_sum(const QExp& order);

// Jacobi theta via the triple product:
// prod_{m>=1} (1-q^m)(1+q^((2m-1)/2) zeta)(1+q^((2m-1)/2) zeta^{-1}).
// Independent of theta_sum; the two must agree coefficient by coefficient.
ZetaSeries theta_triple_product(const QExp& order);

// Component theta_{n,i}: sum over x == i (mod n) of q^(x^2/2n) zeta^x.
// n odd, 1 <= i <= n (i = n is the 0 residue class).
ZetaSeries theta_component(int n, int i, const QExp& order);

// theta(tau, n z) = sum_r q^(r^2/2) zeta^(r n).
ZetaSeries theta_z_times_n(int n, const QExp& order);

} // namespace qtheta
