#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace qtheta {

// Exact rational exponent of q. Values are kept unreduced: inside one
// computation every exponent shares the same positive denominator (the
// context denominator), so series can key terms by the numerator alone.
// Equality and ordering are by cross-multiplication and therefore work
// across denominators.
struct QExp {
    std::int64_t num = 0;
    std::int64_t den = 1; // > 0

    QExp() = default;
    QExp(std::int64_t n, std::int64_t d);

    static QExp integer(std::int64_t k) { return QExp(k, 1); }

    friend bool operator==(const QExp& a, const QExp& b);
    friend std::strong_ordering operator<=>(const QExp& a, const QExp& b);

    QExp operator+(const QExp& other) const;
    QExp operator-(const QExp& other) const;
    QExp operator-() const { return QExp(-num, den); }

    // Same value with gcd(num, den) divided out.
    QExp reduced() const;

    // Reduced "num/den" form, e.g. "1/3", "3/1", "-25/24".
    std::string str() const;

    // Numerator of this exponent over `grid_den`, when the value lies on
    // that grid (i.e. equals k/grid_den for an integer k).
    std::optional<std::int64_t> on_grid(std::int64_t grid_den) const;
};

// on_grid that throws context_error instead of returning empty.
std::int64_t to_grid(const QExp& e, std::int64_t grid_den);

// Exponent denominator for computations at a given n: lcm(24, 2n^2).
// Every exponent in scope (k/24, r^2/2, x^2/2n, r^2/2n^2) is an integer
// multiple of 1/den.
std::int64_t context_denominator(int n);

} // namespace qtheta
