#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qrr {

/// Exact rational scalar; used for coefficients, exponents and precisions.
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PrecisionError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct NotInvertibleError : Error {
    using Error::Error;
};
struct ParameterError : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(std::size_t offset, const std::string& what)
        : Error(what), offset(offset) {}
    std::size_t offset;
};

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// floor(x) as an arbitrary-size integer.
inline mpz_class rat_floor(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline mpz_class rat_ceil(const Rat& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw Error("integer out of range: " + z.get_str());
    return z.get_si();
}

inline long floor_long(const Rat& x) { return to_long(rat_floor(x)); }
inline long ceil_long(const Rat& x) { return to_long(rat_ceil(x)); }

/// isqrt(floor(x)) for x >= 0.
inline long isqrt_floor(const Rat& x) {
    if (x < 0) throw DomainError("isqrt of negative value");
    mpz_class f = rat_floor(x), r;
    mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
    return to_long(r);
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

/// Parses "n" or "n/d" (d > 0). Throws ParseError on malformed input.
inline Rat parse_rat(const std::string& s) {
    Rat x;
    if (x.set_str(s, 10) != 0) throw ParseError(0, "malformed rational: " + s);
    if (x.get_den() <= 0) throw ParseError(0, "nonpositive denominator: " + s);
    x.canonicalize();
    return x;
}

}  // namespace qrr
