#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qtheta/qseries.hpp"

namespace qtheta {

// Truncated bivariate series in q (rational exponents) and zeta (integer
// Laurent exponents): a finite map from zeta-exponent to a QSeries row.
// Every row shares the container's grid denominator and validity order,
// and no row is identically zero (canonical form). A zeta-exponent with
// no stored row is exactly zero below the order.
class ZetaSeries {
public:
    ZetaSeries(std::int64_t den, std::int64_t order_num);

    static ZetaSeries zero(std::int64_t den, std::int64_t order_num);
    static ZetaSeries one(std::int64_t den, std::int64_t order_num);
    static ZetaSeries from_qseries(const QSeries& s, std::int64_t zeta_exp = 0);

    std::int64_t den() const { return den_; }
    std::int64_t order_num() const { return order_num_; }
    QExp order() const { return QExp(order_num_, den_); }

    bool is_zero() const { return rows_.empty(); }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t term_count() const;
    const std::map<std::int64_t, QSeries>& rows() const { return rows_; }

    // Minimal q-exponent numerator over all rows; order_num() when empty.
    std::int64_t lead_num() const;

    void add_term(std::int64_t zeta_exp, std::int64_t qexp_num, const Int& c);

    Int coefficient_num(std::int64_t qexp_num, std::int64_t zeta_exp) const;
    Int coefficient(const QExp& e, std::int64_t zeta_exp) const;

    // Row at zeta-exponent 0, or an empty row of the same order.
    QSeries constant_zeta_row() const;

    ZetaSeries negated() const;
    ZetaSeries scaled(const Int& c) const;
    ZetaSeries truncated(std::int64_t new_order_num) const;

    bool operator==(const ZetaSeries& other) const = default;

private:
    std::int64_t den_;
    std::int64_t order_num_;
    std::map<std::int64_t, QSeries> rows_;
};

ZetaSeries add(const ZetaSeries& a, const ZetaSeries& b);
ZetaSeries sub(const ZetaSeries& a, const ZetaSeries& b);

// Cauchy product; zeta-exponents add, order per the min-based rule.
ZetaSeries mul(const ZetaSeries& a, const ZetaSeries& b);

// Normalized z-derivative D = (2*pi*i)^{-1} d/dz, acting as
// zeta^x -> x * zeta^x. Keeps every identity integral; the row at
// zeta-exponent 0 is dropped. Order unchanged.
ZetaSeries derive_z(const ZetaSeries& a);

// Leibniz determinant of a square matrix of series (matrix[i][k] is the
// entry in row i, column k). Order handled per mul/add contracts.
ZetaSeries det(const std::vector<std::vector<ZetaSeries>>& matrix);

// Realizes z -> z/n: the row at zeta-exponent x moves to x/n. Throws
// divisibility_error when some stored row exponent is not divisible by n.
ZetaSeries substitute_z_scale(const ZetaSeries& a, int n);

} // namespace qtheta
