#include "qtheta/exponent.hpp"

#include <numeric>

#include "qtheta/errors.hpp"

namespace qtheta {

namespace {

using Wide = __int128;

std::int64_t checked_narrow(Wide v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw usage_error(std::string(what) + ": exponent arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

} // namespace

QExp::QExp(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d <= 0) throw usage_error("QExp: denominator must be positive");
}

bool operator==(const QExp& a, const QExp& b) {
    return static_cast<Wide>(a.num) * b.den == static_cast<Wide>(b.num) * a.den;
}

std::strong_ordering operator<=>(const QExp& a, const QExp& b) {
    const Wide lhs = static_cast<Wide>(a.num) * b.den;
    const Wide rhs = static_cast<Wide>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QExp QExp::operator+(const QExp& other) const {
    const std::int64_t d = std::lcm(den, other.den);
    const Wide n = static_cast<Wide>(num) * (d / den) +
                   static_cast<Wide>(other.num) * (d / other.den);
    return QExp(checked_narrow(n, "QExp::operator+"), d);
}

QExp QExp::operator-(const QExp& other) const {
    return *this + QExp(-other.num, other.den);
}

QExp QExp::reduced() const {
    const std::int64_t g = std::gcd(num, den);
    return g == 0 ? QExp(0, 1) : QExp(num / g, den / g);
}

std::string QExp::str() const {
    const QExp r = reduced();
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::optional<std::int64_t> QExp::on_grid(std::int64_t grid_den) const {
    if (grid_den <= 0) throw usage_error("on_grid: denominator must be positive");
    const Wide scaled = static_cast<Wide>(num) * grid_den;
    if (scaled % den != 0) return std::nullopt;
    const Wide k = scaled / den;
    if (k > INT64_MAX || k < INT64_MIN) return std::nullopt;
    return static_cast<std::int64_t>(k);
}

std::int64_t to_grid(const QExp& e, std::int64_t grid_den) {
    const auto k = e.on_grid(grid_den);
    if (!k)
        throw context_error("exponent " + e.str() + " does not lie on the 1/" +
                            std::to_string(grid_den) + " grid");
    return *k;
}

std::int64_t context_denominator(int n) {
    if (n < 1) throw usage_error("context_denominator: n must be positive");
    return std::lcm<std::int64_t>(24, 2 * static_cast<std::int64_t>(n) * n);
}

} // namespace qtheta
