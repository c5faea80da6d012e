#pragma once

#include "qrr/theta.hpp"

namespace qrr {

/// G(q) = 1 / ((q;q^5)_inf (q^4;q^5)_inf).
inline Series rr_G(const Rat& prec) {
    return invert(mul(pochhammer_infinite(qpow(1), 5, prec),
                      pochhammer_infinite(qpow(4), 5, prec)));
}

/// H(q) = 1 / ((q^2;q^5)_inf (q^3;q^5)_inf).
inline Series rr_H(const Rat& prec) {
    return invert(mul(pochhammer_infinite(qpow(2), 5, prec),
                      pochhammer_infinite(qpow(3), 5, prec)));
}

namespace detail {

inline Series rr_G_at(long k, const Rat& prec) {
    return at_base([](const Rat& p) { return rr_G(p); }, k, false, prec);
}
inline Series rr_H_at(long k, const Rat& prec) {
    return at_base([](const Rat& p) { return rr_H(p); }, k, false, prec);
}

}  // namespace detail

/// Ramanujan's U(r,s):
///   G(q^r)G(q^s) + q^{(s+r)/5} H(q^r)H(q^s)   when r+s = 0 (mod 5),
///   H(q^r)G(q^s) - q^{(s-r)/5} G(q^r)H(q^s)   when s-r = 0 (mod 5).
/// When both congruences hold the sum branch is used.
inline Series rr_U(long r, long s, const Rat& prec) {
    if (r <= 0 || s <= 0) throw DomainError("rr_U: r, s must be positive");
    if ((r + s) % 5 == 0) {
        const long t = (r + s) / 5;
        Series first = mul(detail::rr_G_at(r, prec), detail::rr_G_at(s, prec));
        if (prec - t <= 0) return first;
        Series second = mul(detail::rr_H_at(r, prec - t),
                            detail::rr_H_at(s, prec - t));
        return add(first, shifted(second, 1, t));
    }
    if ((s - r) % 5 == 0) {
        const long t = (s - r) / 5;  // negative when r > s (Laurent shift)
        Series first = mul(detail::rr_H_at(r, prec), detail::rr_G_at(s, prec));
        if (prec - t <= 0) return truncated(first, prec);
        Series second = mul(detail::rr_G_at(r, prec - t),
                            detail::rr_H_at(s, prec - t));
        return truncated(add(first, shifted(second, -1, t)), prec);
    }
    throw DomainError("rr_U: neither r+s nor s-r is divisible by 5");
}

/// U(r,s) with the base change q -> (+|-) q^k.
inline Series rr_U_base(long r, long s, const Rat& k, bool negated,
                        const Rat& prec) {
    Series u = rr_U(r, s, prec / k);
    if (negated) u = negate_variable(u);
    return rescale_variable(u, k);
}

}  // namespace qrr
