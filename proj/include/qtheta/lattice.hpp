#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qtheta/bigint.hpp"
#include "qtheta/exponent.hpp"

namespace qtheta {

// Sign convention of the pairwise-difference weight.
//   column_order: prod_{i<j} (x_j - x_i), the literal value of the
//                 Vandermonde determinant det(1, x, ..., x^{n-1}) in the
//                 Wronskian's column order. This is the engine default;
//                 it is forced by the identities, not chosen (see the
//                 sign-sentinel test).
//   flipped:      prod_{i<j} (x_i - x_j); differs by (-1)^(n(n-1)/2),
//                 which is -1 for n == 3 (mod 4).
enum class VdmConvention { column_order, flipped };

// Enumeration request: integer n-tuples with x_i == i (mod n), quadratic
// bound sum(x_i^2)/(2n) < max_q_exponent (strict), and optionally a fixed
// coordinate sum.
struct TupleQuery {
    int n = 1; // odd, >= 1
    QExp max_q_exponent;
    std::optional<std::int64_t> sum_constraint;
};

struct LatticePoint {
    std::vector<int> tuple;
    Int weight;            // vandermonde(tuple)
    QExp q_exp;            // sum(x_i^2) / (2n)
    std::int64_t zeta_exp; // sum(x_i)
};

// prod_{i<j} (x_j - x_i) under the given convention; the determinant of
// the matrix with entry (i,k) = x_i^(k-1) when convention is column_order.
Int vandermonde(std::span<const int> x,
                VdmConvention convention = VdmConvention::column_order);

// B = floor(sqrt(2n * max_q_exponent)): every admissible coordinate
// satisfies |x_i| <= B.
int coordinate_bound(int n, const QExp& max_q_exponent);

// Yields each admissible tuple exactly once. Emission order is
// unspecified; consumers must not rely on it.
void enumerate(const TupleQuery& query,
               const std::function<void(const LatticePoint&)>& emit,
               VdmConvention convention = VdmConvention::column_order);

// Convenience collector.
std::vector<LatticePoint>
enumerate(const TupleQuery& query,
          VdmConvention convention = VdmConvention::column_order);

} // namespace qtheta
