#pragma once

#include "qtheta/lattice.hpp"
#include "qtheta/special.hpp"
#include "qtheta/zeta_series.hpp"

namespace qtheta {

// The vector (theta_{n,1}, ..., theta_{n,n}), all at one order.
struct ThetaVector {
    int n = 1;
    QExp order;
    std::vector<ZetaSeries> components;
};

ThetaVector theta_vector(int n, const QExp& order);

// det(Theta, D Theta, ..., D^{n-1} Theta) with the normalized derivative
// D = (2*pi*i)^{-1} d/dz: entry (i,k) = D^k theta_{n,i}.
ZetaSeries wronskian_determinant(const ThetaVector& v);

// The same function computed independently as a lattice sum:
// sum over tuples of vandermonde(x) q^(sum x^2 / 2n) zeta^(sum x).
ZetaSeries wronskian_lattice(int n, const QExp& order,
                             VdmConvention convention = VdmConvention::column_order);

// One-variable row series h_r: sum over tuples with coordinate sum r of
// vandermonde(x) q^(sum x^2 / 2n - r^2 / 2n^2). Exact below `order`
// (post-shift exponents). Identically zero when n does not divide r.
QSeries h_r(int n, std::int64_t r, const QExp& order,
            VdmConvention convention = VdmConvention::column_order);

// Reassembly sum_r h_r(tau) q^(r^2/2n^2) zeta^r over multiples of n;
// must equal wronskian_lattice(n, order) coefficient for coefficient.
ZetaSeries assemble_from_h(int n, const QExp& order);

} // namespace qtheta
