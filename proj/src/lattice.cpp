#include "qtheta/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "qtheta/errors.hpp"

namespace qtheta {

namespace {

std::int64_t isqrt(std::int64_t v) {
    if (v <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

void validate_query_n(int n, const char* who) {
    if (n < 1 || n % 2 == 0)
        throw usage_error(std::string(who) + ": n must be odd and positive");
}

struct Search {
    int n;
    std::int64_t bound_num; // strict: sum_sq * bound_den < bound_num * 2n
    std::int64_t bound_den;
    std::optional<std::int64_t> sum_constraint;
    int box;
    VdmConvention convention;
    const std::function<void(const LatticePoint&)>* emit;

    std::vector<std::vector<int>> candidates; // per coordinate, sorted by |v|
    std::vector<std::int64_t> suffix_min_sq;  // minimal remaining sum of squares
    std::vector<int> tuple;

    bool square_ok(std::int64_t sum_sq) const {
        return static_cast<__int128>(sum_sq) * bound_den <
               static_cast<__int128>(bound_num) * 2 * n;
    }

    void run() {
        tuple.assign(n, 0);
        descend(0, 0, 0);
    }

    void descend(int depth, std::int64_t sum_sq, std::int64_t sum) {
        if (depth == n) {
            LatticePoint p{tuple,
                           vandermonde(tuple, convention),
                           QExp(sum_sq, 2 * static_cast<std::int64_t>(n)),
                           sum};
            (*emit)(p);
            return;
        }
        // Last coordinate is the 0 residue class; with a sum constraint it
        // is determined outright.
        if (sum_constraint && depth == n - 1) {
            const std::int64_t v = *sum_constraint - sum;
            if (v % n != 0 || v < -box || v > box) return;
            const std::int64_t total_sq = sum_sq + v * v;
            if (!square_ok(total_sq)) return;
            tuple[depth] = static_cast<int>(v);
            descend(depth + 1, total_sq, sum + v);
            return;
        }
        const std::int64_t remaining = n - depth - 1;
        for (int v : candidates[depth]) {
            const std::int64_t sq = sum_sq + static_cast<std::int64_t>(v) * v;
            // candidates are sorted by |v|, so the square prune is a break
            if (!square_ok(sq + suffix_min_sq[depth + 1])) break;
            if (sum_constraint &&
                std::llabs(*sum_constraint - (sum + v)) > remaining * static_cast<std::int64_t>(box))
                continue;
            tuple[depth] = v;
            descend(depth + 1, sq, sum + v);
        }
    }
};

} // namespace

Int vandermonde(std::span<const int> x, VdmConvention convention) {
    const std::size_t n = x.size();
    Int acc = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            acc *= Int(x[j] - x[i]);
    if (convention == VdmConvention::flipped && (n * (n - 1) / 2) % 2 != 0)
        acc = -acc;
    return acc;
}

int coordinate_bound(int n, const QExp& max_q_exponent) {
    validate_query_n(n, "coordinate_bound");
    if (max_q_exponent.num <= 0) return 0;
    // floor(2n * max) = floor of a nonnegative rational
    const std::int64_t t = 2 * static_cast<std::int64_t>(n) * max_q_exponent.num /
                           max_q_exponent.den;
    return static_cast<int>(isqrt(t));
}

void enumerate(const TupleQuery& query,
               const std::function<void(const LatticePoint&)>& emit,
               VdmConvention convention) {
    validate_query_n(query.n, "enumerate");
    if (query.max_q_exponent.num <= 0) return;

    const int n = query.n;
    const int box = coordinate_bound(n, query.max_q_exponent);

    Search s;
    s.n = n;
    s.bound_num = query.max_q_exponent.num;
    s.bound_den = query.max_q_exponent.den;
    s.sum_constraint = query.sum_constraint;
    s.box = box;
    s.convention = convention;
    s.emit = &emit;

    s.candidates.resize(n);
    for (int i = 1; i <= n; ++i) {
        auto& c = s.candidates[i - 1];
        std::int64_t x = i - ((i + box) / n) * static_cast<std::int64_t>(n);
        for (; x <= box; x += n) c.push_back(static_cast<int>(x));
        if (c.empty()) return; // some residue class misses the box entirely
        std::sort(c.begin(), c.end(),
                  [](int a, int b) { return std::abs(a) < std::abs(b); });
    }
    s.suffix_min_sq.assign(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        const std::int64_t v = s.candidates[i].front();
        s.suffix_min_sq[i] = s.suffix_min_sq[i + 1] + v * v;
    }
    s.run();
}

std::vector<LatticePoint> enumerate(const TupleQuery& query,
                                    VdmConvention convention) {
    std::vector<LatticePoint> out;
    enumerate(query, [&](const LatticePoint& p) { out.push_back(p); }, convention);
    return out;
}

} // namespace qtheta
