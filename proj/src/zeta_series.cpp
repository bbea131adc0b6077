#include "qtheta/zeta_series.hpp"

#include <algorithm>
#include <numeric>

#include "qtheta/errors.hpp"

namespace qtheta {

namespace {

void require_same_context(const ZetaSeries& a, const ZetaSeries& b, const char* op) {
    if (a.den() != b.den())
        throw context_error(std::string(op) + ": operands come from different "
                            "contexts (exponent denominators " +
                            std::to_string(a.den()) + " vs " +
                            std::to_string(b.den()) + ")");
}

} // namespace

ZetaSeries::ZetaSeries(std::int64_t den, std::int64_t order_num)
    : den_(den), order_num_(order_num) {
    if (den <= 0) throw usage_error("ZetaSeries: denominator must be positive");
}

ZetaSeries ZetaSeries::zero(std::int64_t den, std::int64_t order_num) {
    return ZetaSeries(den, order_num);
}

ZetaSeries ZetaSeries::one(std::int64_t den, std::int64_t order_num) {
    ZetaSeries s(den, order_num);
    s.add_term(0, 0, 1);
    return s;
}

ZetaSeries ZetaSeries::from_qseries(const QSeries& s, std::int64_t zeta_exp) {
    ZetaSeries r(s.den(), s.order_num());
    if (!s.is_zero()) r.rows_.emplace(zeta_exp, s);
    return r;
}

std::size_t ZetaSeries::term_count() const {
    std::size_t total = 0;
    for (const auto& [z, row] : rows_) total += row.term_count();
    return total;
}

std::int64_t ZetaSeries::lead_num() const {
    std::int64_t lead = order_num_;
    for (const auto& [z, row] : rows_) lead = std::min(lead, row.lead_num());
    return lead;
}

void ZetaSeries::add_term(std::int64_t zeta_exp, std::int64_t qexp_num, const Int& c) {
    if (qexp_num >= order_num_ || c == 0) return;
    auto it = rows_.find(zeta_exp);
    if (it == rows_.end())
        it = rows_.emplace(zeta_exp, QSeries(den_, order_num_)).first;
    it->second.add_term(qexp_num, c);
    if (it->second.is_zero()) rows_.erase(it);
}

Int ZetaSeries::coefficient_num(std::int64_t qexp_num, std::int64_t zeta_exp) const {
    if (qexp_num >= order_num_)
        throw order_error("coefficient at q^(" + QExp(qexp_num, den_).str() +
                          ") is beyond the validity order " + order().str());
    const auto it = rows_.find(zeta_exp);
    return it == rows_.end() ? Int(0) : it->second.coefficient_num(qexp_num);
}

Int ZetaSeries::coefficient(const QExp& e, std::int64_t zeta_exp) const {
    if (e >= order())
        throw order_error("coefficient at q^(" + e.str() +
                          ") is beyond the validity order " + order().str());
    const auto it = rows_.find(zeta_exp);
    return it == rows_.end() ? Int(0) : it->second.coefficient(e);
}

QSeries ZetaSeries::constant_zeta_row() const {
    const auto it = rows_.find(0);
    return it == rows_.end() ? QSeries(den_, order_num_) : it->second;
}

ZetaSeries ZetaSeries::negated() const {
    ZetaSeries r(den_, order_num_);
    for (const auto& [z, row] : rows_) r.rows_.emplace(z, row.negated());
    return r;
}

ZetaSeries ZetaSeries::scaled(const Int& c) const {
    ZetaSeries r(den_, order_num_);
    if (c == 0) return r;
    for (const auto& [z, row] : rows_) r.rows_.emplace(z, row.scaled(c));
    return r;
}

ZetaSeries ZetaSeries::truncated(std::int64_t new_order_num) const {
    ZetaSeries r(den_, std::min(order_num_, new_order_num));
    for (const auto& [z, row] : rows_) {
        QSeries t = row.truncated(r.order_num_);
        if (!t.is_zero()) r.rows_.emplace(z, std::move(t));
    }
    return r;
}

ZetaSeries add(const ZetaSeries& a, const ZetaSeries& b) {
    require_same_context(a, b, "add");
    ZetaSeries r = a.truncated(std::min(a.order_num(), b.order_num()));
    for (const auto& [z, row] : b.rows())
        for (const auto& [e, c] : row.terms()) r.add_term(z, e, c);
    return r;
}

ZetaSeries sub(const ZetaSeries& a, const ZetaSeries& b) {
    return add(a, b.negated());
}

ZetaSeries mul(const ZetaSeries& a, const ZetaSeries& b) {
    require_same_context(a, b, "mul");
    const std::int64_t order = std::min(a.order_num() + b.lead_num(),
                                        b.order_num() + a.lead_num());
    ZetaSeries r(a.den(), order);
    for (const auto& [za, rowa] : a.rows()) {
        for (const auto& [zb, rowb] : b.rows()) {
            for (const auto& [ea, ca] : rowa.terms()) {
                if (ea + rowb.lead_num() >= order) break;
                for (const auto& [eb, cb] : rowb.terms()) {
                    if (ea + eb >= order) break;
                    r.add_term(za + zb, ea + eb, ca * cb);
                }
            }
        }
    }
    return r;
}

ZetaSeries derive_z(const ZetaSeries& a) {
    ZetaSeries r(a.den(), a.order_num());
    for (const auto& [z, row] : a.rows()) {
        if (z == 0) continue;
        for (const auto& [e, c] : row.terms()) r.add_term(z, e, c * Int(z));
    }
    return r;
}

ZetaSeries det(const std::vector<std::vector<ZetaSeries>>& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) throw usage_error("det: empty matrix");
    for (const auto& row : matrix)
        if (row.size() != n) throw usage_error("det: matrix is not square");

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::optional<ZetaSeries> acc;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;

        ZetaSeries prod = matrix[0][perm[0]];
        for (std::size_t i = 1; i < n; ++i) prod = mul(prod, matrix[i][perm[i]]);
        if (inversions % 2 != 0) prod = prod.negated();

        acc = acc ? add(*acc, prod) : std::move(prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *acc;
}

ZetaSeries substitute_z_scale(const ZetaSeries& a, int n) {
    if (n < 1) throw usage_error("substitute_z_scale: n must be positive");
    ZetaSeries r(a.den(), a.order_num());
    for (const auto& [z, row] : a.rows()) {
        if (z % n != 0)
            throw divisibility_error("substitute_z_scale: row at zeta^" +
                                     std::to_string(z) +
                                     " is not divisible by " + std::to_string(n));
        for (const auto& [e, c] : row.terms()) r.add_term(z / n, e, c);
    }
    return r;
}

} // namespace qtheta
