#pragma once

#include <cstdint>
#include <map>

#include "qtheta/bigint.hpp"
#include "qtheta/exponent.hpp"

namespace qtheta {

// Truncated one-variable q-series with exact integer coefficients and
// rational exponents on a fixed grid: sum of c_e * q^(e/den) over stored
// terms, exact for every exponent strictly below order().
//
// Canonical form: no stored coefficient is zero, every stored exponent is
// strictly below the order. add_term() maintains both (terms at or beyond
// the order are dropped: they are outside the validity window).
class QSeries {
public:
    QSeries(std::int64_t den, std::int64_t order_num);

    static QSeries zero(std::int64_t den, std::int64_t order_num);
    // 1 + O(q^order); empty when the order does not exceed 0.
    static QSeries one(std::int64_t den, std::int64_t order_num);

    std::int64_t den() const { return den_; }
    std::int64_t order_num() const { return order_num_; }
    QExp order() const { return QExp(order_num_, den_); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::int64_t, Int>& terms() const { return terms_; }

    // Minimal stored exponent numerator; order_num() when the series is
    // empty (the best provable lower bound on the true leading exponent).
    std::int64_t lead_num() const;

    // Accumulate c * q^(exp_num/den); keeps canonical form.
    void add_term(std::int64_t exp_num, const Int& c);

    // Coefficient at exp_num/den. Throws order_error at or beyond the
    // validity order: there the value is unknown, not zero.
    Int coefficient_num(std::int64_t exp_num) const;
    // Same for an arbitrary rational exponent (off-grid values below the
    // order are exactly zero).
    Int coefficient(const QExp& e) const;

    QSeries negated() const;
    QSeries scaled(const Int& c) const;
    // Same series with the validity bound lowered to new_order_num.
    QSeries truncated(std::int64_t new_order_num) const;

    // Structural equality: same grid, same order, same terms.
    bool operator==(const QSeries& other) const = default;

private:
    std::int64_t den_;
    std::int64_t order_num_;
    std::map<std::int64_t, Int> terms_;
};

// Coefficientwise sum; result order = min(a.order, b.order).
QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);

// Cauchy product. Result order = min(a.order + lead(b), b.order + lead(a)),
// the largest bound to which the product's coefficients are exact.
QSeries mul(const QSeries& a, const QSeries& b);

} // namespace qtheta
