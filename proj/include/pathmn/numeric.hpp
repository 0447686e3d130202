#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace pathmn {

using Int = mpz_class;
using Rat = mpq_class;

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an input exceeds a combinatorial guard (brute-force size limits).
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Returns the guard limit, replaced by PATHMN_MAX_N when that variable is set.
int guard_limit(int default_limit);

Int factorial(long n);
Int binomial(long n, long k);
// (sum of parts)! / prod(parts!)
Int multinomial(const std::vector<long>& parts);

std::string to_string(const Int& x);
// "num/den", or "num" when the denominator is 1
std::string to_string(const Rat& x);
Rat parse_rational(const std::string& s);

}  // namespace pathmn
