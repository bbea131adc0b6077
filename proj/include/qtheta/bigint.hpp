#pragma once

#include <gmpxx.h>

namespace qtheta {

// All series coefficients are exact arbitrary-precision integers.
using Int = mpz_class;

// 1!·2!·...·(n-1)!, the constant of the Macdonald-type identities.
Int superfactorial(int n);

} // namespace qtheta
