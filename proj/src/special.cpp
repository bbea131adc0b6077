#include "qtheta/special.hpp"

#include <cmath>
#include <vector>

#include "qtheta/errors.hpp"

namespace qtheta {

namespace {

void require_even_den(std::int64_t den, const char* who) {
    if (den % 2 != 0)
        throw context_error(std::string(who) +
                            ": exponent denominator must be even (got " +
                            std::to_string(den) + ")");
}

// floor(sqrt(v)) for v >= 0.
std::int64_t isqrt(std::int64_t v) {
    if (v < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Largest |x| with x^2 * den / (2n) < order_num, i.e. x^2 < order_num*2n/den.
std::int64_t component_bound(std::int64_t order_num, std::int64_t den, int two_n) {
    if (order_num <= 0) return -1;
    // x^2 <= ceil(order_num * 2n / den) - 1  (strict rational bound)
    const std::int64_t limit = (order_num * two_n - 1) / den; // floor((T*2n-1)/den)
    return isqrt(limit);
}

} // namespace

QSeries eta_power(int k, const QExp& order) {
    if (k < 0) throw usage_error("eta_power: k must be nonnegative");
    const std::int64_t den = order.den;
    QSeries r(den, order.num);
    if (k == 0) {
        r.add_term(0, 1);
        return r;
    }
    if ((static_cast<std::int64_t>(k) * den) % 24 != 0)
        throw context_error("eta_power: k/24 does not lie on the 1/" +
                            std::to_string(den) + " grid");
    const std::int64_t lead = static_cast<std::int64_t>(k) * den / 24;
    if (order.num <= lead) return r; // empty below the order

    // The product part has integer q-exponents 0..len-1; factor (1-q^m)
    // only affects exponents >= m, so m ranges over 1..len-1.
    const std::int64_t len = (order.num - lead + den - 1) / den;
    std::vector<Int> c(static_cast<std::size_t>(len), Int(0));
    c[0] = 1;
    for (std::int64_t m = 1; m < len; ++m)
        for (int rep = 0; rep < k; ++rep)
            for (std::int64_t j = len - 1; j >= m; --j) c[j] -= c[j - m];

    for (std::int64_t e = 0; e < len; ++e) r.add_term(lead + e * den, c[e]);
    return r;
}

ZetaSeries theta_sum(const QExp& order) {
    require_even_den(order.den, "theta_sum");
    ZetaSeries s(order.den, order.num);
    const std::int64_t half = order.den / 2;
    for (std::int64_t r = 0;; ++r) {
        const std::int64_t e = r * r * half; // r^2/2 on the grid
        if (e >= order.num) break;
        s.add_term(r, e, 1);
        if (r != 0) s.add_term(-r, e, 1);
    }
    return s;
}

ZetaSeries theta_triple_product(const QExp& order) {
    require_even_den(order.den, "theta_triple_product");
    const std::int64_t den = order.den;
    const std::int64_t ord = order.num;

    // Keep factors m = 1..M; the first omitted one only touches exponents
    // >= (2M+1)/2, so M is the least integer with (2M+1)/2 >= order.
    std::int64_t factors = 0;
    while ((2 * factors + 1) * (den / 2) < ord) ++factors;

    ZetaSeries acc = ZetaSeries::one(den, ord);
    for (std::int64_t m = 1; m <= factors; ++m) {
        const std::int64_t half_odd = (2 * m - 1) * (den / 2); // (2m-1)/2

        ZetaSeries f(den, ord); // 1 - q^m
        f.add_term(0, 0, 1);
        f.add_term(0, m * den, -1);

        ZetaSeries g(den, ord); // 1 + q^((2m-1)/2) zeta
        g.add_term(0, 0, 1);
        g.add_term(1, half_odd, 1);

        ZetaSeries h(den, ord); // 1 + q^((2m-1)/2) zeta^{-1}
        h.add_term(0, 0, 1);
        h.add_term(-1, half_odd, 1);

        acc = mul(mul(mul(acc, f), g), h);
    }
    return acc;
}

ZetaSeries theta_component(int n, int i, const QExp& order) {
    if (n < 1 || n % 2 == 0)
        throw usage_error("theta_component: n must be odd and positive");
    if (i < 1 || i > n)
        throw usage_error("theta_component: index must satisfy 1 <= i <= n");
    if (order.den % (2 * static_cast<std::int64_t>(n)) != 0)
        throw context_error("theta_component: denominator must be divisible by 2n");

    const std::int64_t den = order.den;
    const std::int64_t scale = den / (2 * static_cast<std::int64_t>(n)); // 1/(2n)
    ZetaSeries s(den, order.num);

    const std::int64_t bound = component_bound(order.num, den, 2 * n);
    if (bound < 0) return s;
    // first x >= -bound with x == i (mod n)
    std::int64_t x = i - ((i + bound) / n) * n;
    while (x < -bound) x += n;
    for (; x <= bound; x += n) s.add_term(x, x * x * scale, 1);
    return s;
}

ZetaSeries theta_z_times_n(int n, const QExp& order) {
    if (n < 1) throw usage_error("theta_z_times_n: n must be positive");
    require_even_den(order.den, "theta_z_times_n");
    ZetaSeries s(order.den, order.num);
    const std::int64_t half = order.den / 2;
    for (std::int64_t r = 0;; ++r) {
        const std::int64_t e = r * r * half;
        if (e >= order.num) break;
        s.add_term(r * n, e, 1);
        if (r != 0) s.add_term(-r * n, e, 1);
    }
    return s;
}

} // namespace qtheta
