#include "qtheta/bigint.hpp"

#include "qtheta/errors.hpp"

namespace qtheta {

Int superfactorial(int n) {
    if (n < 1) throw usage_error("superfactorial: n must be positive");
    Int c = 1;
    mpz_class f;
    for (int k = 1; k < n; ++k) {
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
        c *= f;
    }
    return c;
}

} // namespace qtheta
