#pragma once
// Exact rational scalars backed by GMP, plus the two error types used
// across the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qchow {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when a caller violates an operation's precondition
// (mismatched contexts, non-integral Chern data where an honest bundle is
// required, malformed configuration).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an operation is asked about a case it has no statement for
// (even-dimensional middle relations, sections of negative twists, ...).
class NotApplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw ContractError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "p", "-p", "p/q"; rejects anything else including zero denominators.
Rational parse_rational(std::string_view text);

// Integer power with a non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace qchow
