// Independent brute-force oracles for the test suites. Nothing here may
// call into the library paths it is used to check: polynomials are plain
// exponent->coefficient maps with schoolbook arithmetic, enumeration is a
// full box scan, determinants are direct Leibniz sums over int matrices.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Int = mpz_class;

// Dense-enough polynomial in q with integer exponents.
using Poly = std::map<std::int64_t, Int>;

inline Poly poly_one() { return Poly{{0, Int(1)}}; }

// Schoolbook product, truncated to exponents < bound.
inline Poly poly_mul(const Poly& a, const Poly& b, std::int64_t bound) {
    Poly r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            if (ea + eb >= bound) break;
            r[ea + eb] += ca * cb;
        }
    }
    for (auto it = r.begin(); it != r.end();) {
        if (it->second == 0) it = r.erase(it);
        else ++it;
    }
    return r;
}

// prod_{m=1}^{M} (1 - q^m)^k below `bound`, by repeated schoolbook
// multiplication.
inline Poly euler_product_power(int k, std::int64_t bound) {
    Poly acc = poly_one();
    for (std::int64_t m = 1; m < bound; ++m) {
        Poly factor{{0, Int(1)}, {m, Int(-1)}};
        for (int j = 0; j < k; ++j) acc = poly_mul(acc, factor, bound);
    }
    return acc;
}

// Euler's pentagonal expansion of prod (1 - q^m): +-1 at the generalized
// pentagonal numbers k(3k-1)/2, sign (-1)^k.
inline Poly pentagonal_expansion(std::int64_t bound) {
    Poly r;
    for (std::int64_t k = -bound; k <= bound; ++k) {
        std::int64_t e = k * (3 * k - 1) / 2;
        if (e < bound) r[e] += (k % 2 == 0) ? Int(1) : Int(-1);
    }
    for (auto it = r.begin(); it != r.end();) {
        if (it->second == 0) it = r.erase(it);
        else ++it;
    }
    return r;
}

// Leibniz determinant of a small integer matrix.
inline Int int_det(const std::vector<std::vector<Int>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Int total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Int prod = 1;
        for (int i = 0; i < n; ++i) prod *= m[i][perm[i]];
        total += (inversions % 2 == 0) ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Vandermonde via the literal determinant det(1, x, ..., x^{n-1}).
inline Int vandermonde_det(const std::vector<int>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i) {
        Int p = 1;
        for (int k = 0; k < n; ++k) {
            m[i][k] = p;
            p *= x[i];
        }
    }
    return int_det(m);
}

struct BoxPoint {
    std::vector<int> tuple;
    Int weight;
    std::int64_t sum_sq = 0;
    std::int64_t sum = 0;
};

// Full odometer scan of [-box, box]^n filtered by the congruence,
// quadratic-bound (sum_sq/(2n) < max_num/max_den, strict) and optional
// sum constraints. Independent of the library's pruned search.
inline std::vector<BoxPoint>
box_scan(int n, int box, std::int64_t max_num, std::int64_t max_den,
         std::optional<std::int64_t> sum_constraint) {
    std::vector<BoxPoint> out;
    std::vector<int> x(n, -box);
    while (true) {
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            int residue = ((x[i] - (i + 1)) % n + n) % n;
            if (residue != 0) { ok = false; break; }
        }
        if (ok) {
            std::int64_t sum_sq = 0, sum = 0;
            for (int v : x) { sum_sq += std::int64_t(v) * v; sum += v; }
            if (static_cast<__int128>(sum_sq) * max_den <
                static_cast<__int128>(max_num) * 2 * n) {
                if (!sum_constraint || *sum_constraint == sum)
                    out.push_back({x, vandermonde_det(x), sum_sq, sum});
            }
        }
        int i = 0;
        for (; i < n; ++i) {
            if (x[i] < box) { ++x[i]; break; }
            x[i] = -box;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(),
              [](const BoxPoint& a, const BoxPoint& b) { return a.tuple < b.tuple; });
    return out;
}

} // namespace oracle
