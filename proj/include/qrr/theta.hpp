#pragma once

#include "qrr/series.hpp"

namespace qrr {

/// A signed monomial sign * q^exp; the admissible argument shape for the
/// general theta function f(a,b).
struct ThetaArg {
    int sign = 1;  // +1 or -1
    Rat exp;
};

inline ThetaArg qpow(const Rat& e) { return ThetaArg{1, e}; }
inline ThetaArg neg_qpow(const Rat& e) { return ThetaArg{-1, e}; }
inline ThetaArg flipped(const ThetaArg& a) { return ThetaArg{-a.sign, a.exp}; }

namespace detail {

inline long tri_up(long n) { return n * (n + 1) / 2; }    // n(n+1)/2
inline long tri_down(long n) { return n * (n - 1) / 2; }  // n(n-1)/2

inline int sign_pow(int s, long e) { return (s < 0 && (e & 1)) ? -1 : 1; }

}  // namespace detail

/// Finite q-Pochhammer product: prod_{k<n} (1 - sign * q^{exp + k*step}).
inline Series pochhammer_finite(const ThetaArg& a, const Rat& step,
                                unsigned long n, const Rat& prec) {
    Series f = Series::one(prec);
    for (unsigned long k = 0; k < n; ++k) {
        Rat t = a.exp + Rat(static_cast<long>(k)) * step;
        f = add(f, shifted(f, -a.sign, t));
    }
    return f;
}

/// (a;q^step)_infinity for exp(a) > 0: only factors with exponent below prec
/// can affect the result.
inline Series pochhammer_infinite(const ThetaArg& a, const Rat& step,
                                  const Rat& prec) {
    if (a.exp <= 0)
        throw DomainError("pochhammer_infinite: argument exponent must be > 0");
    if (step <= 0) throw DomainError("pochhammer_infinite: step must be > 0");
    Series f = Series::one(prec);
    for (Rat t = a.exp; t < prec; t += step)
        f = add(f, shifted(f, -a.sign, t));
    return f;
}

/// Ramanujan's general theta function
///   f(a,b) = sum_n a^{n(n+1)/2} b^{n(n-1)/2},
/// summed bilaterally over every n whose exponent falls below prec.
/// Requires exp(a) + exp(b) > 0.
inline Series theta_f(const ThetaArg& a, const ThetaArg& b, const Rat& prec) {
    const Rat &x = a.exp, &y = b.exp;
    const Rat s = x + y;
    if (s <= 0) throw DomainError("theta_f: divergent (exp(a) + exp(b) <= 0)");
    // the exponent sequence is non-monotonic only within this guard window
    const long guard = ceil_long(2 * (1 + Rat(rat_ceil(abs(x) + abs(y))) / s));
    std::vector<std::pair<Rat, Rat>> terms;
    auto emit = [&](long n) -> bool {
        Rat e = x * detail::tri_up(n) + y * detail::tri_down(n);
        bool below = e < prec;
        if (below) {
            int sg = detail::sign_pow(a.sign, detail::tri_up(n)) *
                     detail::sign_pow(b.sign, detail::tri_down(n));
            terms.emplace_back(e, sg);
        }
        return below;
    };
    for (long n = 0; emit(n) || n <= guard; ++n) {
    }
    for (long n = -1; emit(n) || -n <= guard; --n) {
    }
    return Series::from_terms(terms, prec);
}

/// f_k(a,b): f(a,b) for even k, f(-a,-b) for odd k.
inline Series theta_f_parity(long k, const ThetaArg& a, const ThetaArg& b,
                             const Rat& prec) {
    if (k % 2 == 0) return theta_f(a, b, prec);
    return theta_f(flipped(a), flipped(b), prec);
}

/// The n-term addition formula for f(a,b): evaluates
///   sum_{r=0}^{n-1} U_r f(U_{n+r}/U_r, V_{n-r}/U_r)
/// term by term.  Contract: equal to theta_f(a,b).
inline Series theta_addition_dissect(const ThetaArg& a, const ThetaArg& b,
                                     long n, const Rat& prec) {
    if (n < 1) throw DomainError("theta_addition_dissect: n must be >= 1");
    const Rat &x = a.exp, &y = b.exp;
    if (x + y <= 0) throw DomainError("theta_addition_dissect: divergent");
    auto bigu = [&](long m) {  // U_m as (sign, exponent)
        return std::pair<int, Rat>(
            detail::sign_pow(a.sign, detail::tri_up(m)) *
                detail::sign_pow(b.sign, detail::tri_down(m)),
            x * detail::tri_up(m) + y * detail::tri_down(m));
    };
    auto bigv = [&](long m) {
        return std::pair<int, Rat>(
            detail::sign_pow(a.sign, detail::tri_down(m)) *
                detail::sign_pow(b.sign, detail::tri_up(m)),
            x * detail::tri_down(m) + y * detail::tri_up(m));
    };
    Series acc = Series::zero(prec);
    for (long r = 0; r < n; ++r) {
        auto [su, eu] = bigu(r);
        auto [s1, e1] = bigu(n + r);
        auto [s2, e2] = bigv(n - r);
        ThetaArg arg1{s1 * su, e1 - eu};
        ThetaArg arg2{s2 * su, e2 - eu};
        acc = add(acc, shifted(theta_f(arg1, arg2, prec - eu), su, eu));
    }
    return acc;
}

inline Series phi(const Rat& prec) { return theta_f(qpow(1), qpow(1), prec); }

inline Series psi(const Rat& prec) { return theta_f(qpow(1), qpow(3), prec); }

/// E(q) = (q;q)_infinity = f(-q, -q^2); pentagonal-number expansion.
inline Series euler_E(const Rat& prec) {
    return theta_f(neg_qpow(1), neg_qpow(2), prec);
}

/// kappa(q) = (-q;q^2)_infinity.
inline Series kappa(const Rat& prec) {
    return pochhammer_infinite(neg_qpow(1), 2, prec);
}

/// q^{1/24} E(q), exact on the denominator-24 lattice.
inline Series eta(const Rat& prec) {
    return shifted(euler_E(prec - Rat(1, 24)), 1, Rat(1, 24));
}

/// Composes a constructor with the base change q -> (+|-) q^k.  The sign flip
/// acts on the inner variable, so it is applied before rescaling.
template <class Ctor>
Series at_base(Ctor&& ctor, const Rat& k, bool negated, const Rat& prec) {
    Series s = ctor(prec / k);
    if (negated) s = negate_variable(s);
    return rescale_variable(s, k);
}

}  // namespace qrr
