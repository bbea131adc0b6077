#include "qtheta/qseries.hpp"

#include <algorithm>

#include "qtheta/errors.hpp"

namespace qtheta {

namespace {

void require_same_context(const QSeries& a, const QSeries& b, const char* op) {
    if (a.den() != b.den())
        throw context_error(std::string(op) + ": operands come from different "
                            "contexts (exponent denominators " +
                            std::to_string(a.den()) + " vs " +
                            std::to_string(b.den()) + ")");
}

} // namespace

QSeries::QSeries(std::int64_t den, std::int64_t order_num)
    : den_(den), order_num_(order_num) {
    if (den <= 0) throw usage_error("QSeries: denominator must be positive");
}

QSeries QSeries::zero(std::int64_t den, std::int64_t order_num) {
    return QSeries(den, order_num);
}

QSeries QSeries::one(std::int64_t den, std::int64_t order_num) {
    QSeries s(den, order_num);
    s.add_term(0, 1);
    return s;
}

std::int64_t QSeries::lead_num() const {
    return terms_.empty() ? order_num_ : terms_.begin()->first;
}

void QSeries::add_term(std::int64_t exp_num, const Int& c) {
    if (exp_num >= order_num_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp_num, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int QSeries::coefficient_num(std::int64_t exp_num) const {
    if (exp_num >= order_num_)
        throw order_error("coefficient at q^(" + QExp(exp_num, den_).str() +
                          ") is beyond the validity order " + order().str());
    const auto it = terms_.find(exp_num);
    return it == terms_.end() ? Int(0) : it->second;
}

Int QSeries::coefficient(const QExp& e) const {
    if (e >= order())
        throw order_error("coefficient at q^(" + e.str() +
                          ") is beyond the validity order " + order().str());
    const auto k = e.on_grid(den_);
    if (!k) return 0; // off the grid but inside the window: exactly zero
    const auto it = terms_.find(*k);
    return it == terms_.end() ? Int(0) : it->second;
}

QSeries QSeries::negated() const {
    QSeries r(den_, order_num_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QSeries QSeries::scaled(const Int& c) const {
    QSeries r(den_, order_num_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

QSeries QSeries::truncated(std::int64_t new_order_num) const {
    QSeries r(den_, std::min(order_num_, new_order_num));
    for (const auto& [e, c] : terms_) {
        if (e >= r.order_num_) break;
        r.terms_.emplace(e, c);
    }
    return r;
}

QSeries add(const QSeries& a, const QSeries& b) {
    require_same_context(a, b, "add");
    QSeries r = a.truncated(std::min(a.order_num(), b.order_num()));
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, b.negated()); }

QSeries mul(const QSeries& a, const QSeries& b) {
    require_same_context(a, b, "mul");
    const std::int64_t order = std::min(a.order_num() + b.lead_num(),
                                        b.order_num() + a.lead_num());
    QSeries r(a.den(), order);
    for (const auto& [ea, ca] : a.terms()) {
        if (ea + b.lead_num() >= order) break;
        for (const auto& [eb, cb] : b.terms()) {
            if (ea + eb >= order) break;
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

} // namespace qtheta
