#ifndef FOCAL_RAT_HPP
#define FOCAL_RAT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "focal/errors.hpp"

namespace focal {

// Exact rational scalar. GMP keeps results canonical (gcd(num,den)=1, den>0)
// as long as inputs are canonical, so every constructor here canonicalizes.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p" or "p/q" with optional sign. Throws ParseError on anything else.
Rat parse_rat(std::string_view text, int line = 0);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_int(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

inline Int ceil_int(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
}

// Nearest integer, ties away from zero resolved toward +infinity (floor(q + 1/2)).
inline Int round_int(const Rat& q) {
    Rat shifted = q + rat(1, 2);
    return floor_int(shifted);
}

// All integers x with (x - a)^2 <= r2, or nullopt when that set is empty.
// Exact: uses integer square roots plus a bounded adjustment, never floats.
std::optional<std::pair<Int, Int>> integer_interval(const Rat& a, const Rat& r2);

}  // namespace focal

#endif
