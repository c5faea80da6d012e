#pragma once

#include <vector>

#include "qrr/theta.hpp"

namespace qrr {

struct BasisDegenerateError : Error {
    using Error::Error;
};
struct NotInSpanError : Error {
    NotInSpanError(const Rat& e, const std::string& what)
        : Error(what), exponent(e) {}
    Rat exponent;
};

/// Positive definite binary quadratic form a n^2 + b n m + c m^2.
struct QuadForm {
    long a = 1, b = 0, c = 1;

    long disc() const { return b * b - 4 * a * c; }
    long content() const { return std::gcd(std::gcd(std::abs(a), std::abs(b)), c); }
    bool primitive() const { return content() == 1; }

    void validate() const {
        if (a <= 0 || c <= 0 || disc() >= 0)
            throw DomainError("QuadForm: form is not positive definite");
    }

    friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

/// Theta series of a form: sum over all integer pairs (n,m) with value < prec.
inline Series theta_of_form(const QuadForm& F, const Rat& prec) {
    F.validate();
    const long absD = -F.disc();
    const long nb = isqrt_floor(Rat(4 * F.c) * prec / absD) + 1;
    const long mb = isqrt_floor(Rat(4 * F.a) * prec / absD) + 1;
    std::vector<std::pair<Rat, Rat>> terms;
    for (long n = -nb; n <= nb; ++n)
        for (long m = -mb; m <= mb; ++m) {
            Rat v = F.a * n * n + F.b * n * m + F.c * m * m;
            if (v < prec) terms.emplace_back(v, 1);
        }
    return Series::from_terms(terms, prec);
}

struct ReducedForm {
    QuadForm form;
    bool primitive = true;
};

/// All reduced forms (|b| <= a <= c, b >= 0 when |b| = a or a = c) of a
/// negative discriminant, imprimitive ones included and tagged.
inline std::vector<ReducedForm> reduced_forms(long D) {
    if (D >= 0) throw DomainError("reduced_forms: discriminant must be negative");
    long r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1)
        throw DomainError("reduced_forms: discriminant must be 0 or 1 mod 4");
    std::vector<ReducedForm> out;
    for (long a = 1; 3 * a * a <= -D; ++a)
        for (long b = -a; b <= a; ++b) {
            if (((b * b - D) % (4 * a)) != 0) continue;
            long c = (b * b - D) / (4 * a);
            if (c < a) continue;
            if (b < 0 && (b == -a || a == c)) continue;
            QuadForm F{a, b, c};
            out.push_back({F, F.primitive()});
        }
    return out;
}

/// Reduced forms with the (a,b,c)/(a,-b,c) pairs, whose theta series
/// coincide, collapsed to the b >= 0 member.
inline std::vector<ReducedForm> form_representatives(long D) {
    std::vector<ReducedForm> out;
    for (const auto& rf : reduced_forms(D))
        if (rf.form.b >= 0) out.push_back(rf);
    return out;
}

/// Parameter tuple for the R-function.
struct RParams {
    long eps = 0, delta = 0;
    Rat l, t;
    long alpha = 1, beta = 1, m = 0, p = 1, lambda = 1;

    void validate() const {
        if (alpha <= 0 || beta <= 0 || p <= 0 || lambda <= 0)
            throw ParameterError("RParams: alpha, beta, p, lambda must be positive");
        if (alpha * m * m + beta != p * lambda)
            throw ParameterError("RParams: alpha m^2 + beta != p lambda");
    }
};

namespace detail {

/// Smallest value of (s/2) j^2 + c j over integer j (s > 0).
inline Rat quad_min(const Rat& s, const Rat& c) {
    long j = floor_long(-c / s);
    Rat lo = s * j * j / 2 + c * j;
    Rat hi = s * (j + 1) * (j + 1) / 2 + c * (j + 1);
    return std::min(lo, hi);
}

/// A bound J with (s/2) j^2 + c j > budget for every |j| > J (s > 0).
inline long quad_bound(const Rat& s, const Rat& c, const Rat& budget) {
    Rat radicand = c * c + 2 * s * budget;
    if (radicand < 0) return -1;
    Rat root = isqrt_floor(radicand) + 1;
    return ceil_long((abs(c) + root) / s) + 1;
}

/// One summand of the R-function: the product of two theta series with
/// monomial arguments q^{x1}, q^{y1} and q^{x2}, q^{y2} (signs s1, s2),
/// shifted by sign0 * q^{e0}, summed term by term so the declared precision
/// is met even when the theta factors have very negative valuations.
inline void r_term_double_sum(std::vector<std::pair<Rat, Rat>>& terms, int sign0,
                              const Rat& e0, int s1, const Rat& x1, const Rat& y1,
                              int s2, const Rat& x2, const Rat& y2,
                              const Rat& prec) {
    const Rat sum1 = x1 + y1, c1 = (x1 - y1) / 2;
    const Rat sum2 = x2 + y2, c2 = (x2 - y2) / 2;
    const Rat min2 = quad_min(sum2, c2);
    const long jb1 = quad_bound(sum1, c1, prec - e0 - min2);
    for (long j1 = -jb1; j1 <= jb1; ++j1) {
        Rat e1 = sum1 * j1 * j1 / 2 + c1 * j1;
        const long jb2 = quad_bound(sum2, c2, prec - e0 - e1);
        for (long j2 = -jb2; j2 <= jb2; ++j2) {
            Rat e = e0 + e1 + sum2 * j2 * j2 / 2 + c2 * j2;
            if (e >= prec) continue;
            int sg = sign0;
            if (s1 < 0 && (j1 & 1)) sg = -sg;
            if (s2 < 0 && (j2 & 1)) sg = -sg;
            terms.emplace_back(e, sg);
        }
    }
}

}  // namespace detail

/// The R-function: sum over k = 0..p-1 with n = 2k+t of
///   (-1)^{eps k} q^{(lambda n^2 + p alpha l^2 + 2 alpha n m l)/8}
///   * f_delta(q^{(1+l)p alpha/2 + alpha n m/2}, q^{(1-l)p alpha/2 - alpha n m/2})
///   * a second theta factor on q^{p beta/2 + beta n/2}, q^{p beta/2 - beta n/2}
///     whose index-j term carries the sign (-1)^{(eps p + m delta) j}, as the
///     double-sum representation forces.
inline Series r_function(const RParams& P, const Rat& prec) {
    P.validate();
    const int s1 = (P.delta % 2 != 0) ? -1 : 1;
    const int s2 = ((P.eps * P.p + P.m * P.delta) % 2 != 0) ? -1 : 1;
    std::vector<std::pair<Rat, Rat>> terms;
    for (long k = 0; k < P.p; ++k) {
        Rat n = 2 * k + P.t;
        Rat e0 = (P.lambda * n * n + P.p * P.alpha * P.l * P.l +
                  2 * P.alpha * n * P.m * P.l) / 8;
        int sign0 = ((P.eps * k) % 2 != 0) ? -1 : 1;
        Rat x1 = (1 + P.l) * P.p * P.alpha / 2 + P.alpha * n * P.m / 2;
        Rat y1 = (1 - P.l) * P.p * P.alpha / 2 - P.alpha * n * P.m / 2;
        Rat x2 = Rat(P.p * P.beta) / 2 + P.beta * n / 2;
        Rat y2 = Rat(P.p * P.beta) / 2 - P.beta * n / 2;
        detail::r_term_double_sum(terms, sign0, e0, s1, x1, y1, s2, x2, y2, prec);
    }
    return Series::from_terms(terms, prec);
}

/// Bilateral double-sum form of R: sum over integer (u,v), with U = 2u+t and
/// V = 2v+l, of (-1)^{delta v + eps u} q^{(lambda U^2 + 2 alpha m UV + p alpha V^2)/8}.
inline Series r_double_sum(const RParams& P, const Rat& prec) {
    P.validate();
    // positive definite: discriminant of the exponent quadratic is -4 alpha beta
    const Rat M = 8 * prec;
    const long ub = isqrt_floor(std::max(Rat(0), Rat(M * P.p / P.beta))) + 1;
    const long vb =
        isqrt_floor(std::max(Rat(0), Rat(M * P.lambda / (P.alpha * P.beta)))) + 1;
    const long ulo = floor_long((-ub - P.t) / 2) - 1, uhi = ceil_long((ub - P.t) / 2) + 1;
    const long vlo = floor_long((-vb - P.l) / 2) - 1, vhi = ceil_long((vb - P.l) / 2) + 1;
    std::vector<std::pair<Rat, Rat>> terms;
    for (long u = ulo; u <= uhi; ++u) {
        Rat U = 2 * u + P.t;
        for (long v = vlo; v <= vhi; ++v) {
            Rat V = 2 * v + P.l;
            Rat e = (P.lambda * U * U + 2 * P.alpha * P.m * U * V +
                     P.p * P.alpha * V * V) / 8;
            if (e >= prec) continue;
            int sg = ((P.delta * v + P.eps * u) % 2 != 0) ? -1 : 1;
            terms.emplace_back(e, sg);
        }
    }
    return Series::from_terms(terms, prec);
}

/// The R-parameters whose value is the theta series of (a,b,c):
/// (a,b,c) = R(0,0,0,0,1,-D,b,2c,2a).
inline RParams qrr_params(const QuadForm& F) {
    F.validate();
    return RParams{0, 0, 0, 0, 1, -F.disc(), F.b, 2 * F.c, 2 * F.a};
}

/// R(eps,delta,l,t,alpha,beta,m,p,lambda) = R(delta,eps,t,l,1,alpha beta,
/// alpha m, lambda, p alpha).
inline RParams prtt1_transform(const RParams& P) {
    P.validate();
    RParams Q{P.delta, P.eps, P.t, P.l,
              1, P.alpha * P.beta, P.alpha * P.m, P.lambda, P.p * P.alpha};
    Q.validate();
    return Q;
}

/// With a := (alpha m - alpha1 m1)/lambda integral and alpha beta = alpha1 beta1:
/// R(eps,delta,l,t,alpha,beta,m,p,lambda)
///   = R(eps, delta + a eps, l, t + a l, alpha1, beta1, m1, p1, lambda).
inline RParams prt1_transform(const RParams& P, long alpha1, long beta1, long m1,
                              long p1) {
    P.validate();
    if (P.alpha * P.beta != alpha1 * beta1)
        throw ParameterError("prt1_transform: alpha beta != alpha1 beta1");
    long num = P.alpha * P.m - alpha1 * m1;
    if (num % P.lambda != 0)
        throw ParameterError("prt1_transform: (alpha m - alpha1 m1)/lambda not integral");
    long a = num / P.lambda;
    RParams Q{P.eps, P.delta + a * P.eps, P.l, P.t + a * P.l,
              alpha1, beta1, m1, p1, P.lambda};
    Q.validate();
    return Q;
}

/// Writes f as an exact rational combination of the theta series of the
/// representative forms of discriminant D, verified coefficientwise up to
/// `order`.
inline std::vector<std::pair<QuadForm, Rat>> decompose_in_class_basis(
    const Series& f, long D, const Rat& order) {
    auto reps = form_representatives(D);
    const std::size_t k = reps.size();
    if (f.prec() < order)
        throw PrecisionError("decompose_in_class_basis: series precision < order");
    if (order < Rat(2 * static_cast<long>(k) + 20))
        throw ParameterError("decompose_in_class_basis: order too small for basis");
    if (!f.integer_support())
        throw DomainError("decompose_in_class_basis: fractional support");
    std::vector<Series> thetas;
    thetas.reserve(k);
    for (const auto& rf : reps) thetas.push_back(theta_of_form(rf.form, order));

    // greedy row reduction over increasing exponents until the pivot set is
    // a full-rank square system, then back-substitution
    std::vector<std::vector<Rat>> pivots;   // rows in echelon form
    std::vector<std::size_t> pivot_col;
    for (long e = 0; e < order && pivots.size() < k; ++e) {
        std::vector<Rat> row(k + 1);
        for (std::size_t i = 0; i < k; ++i) row[i] = thetas[i].coefficient_at(e);
        row[k] = f.coefficient_at(e);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const Rat& x = row[pivot_col[r]];
            if (x == 0) continue;
            Rat factor = x / pivots[r][pivot_col[r]];
            for (std::size_t j = 0; j <= k; ++j) row[j] -= factor * pivots[r][j];
        }
        std::size_t col = k;
        for (std::size_t j = 0; j < k; ++j)
            if (row[j] != 0) {
                col = j;
                break;
            }
        if (col == k) {
            if (row[k] != 0)
                throw NotInSpanError(e, "decompose_in_class_basis: not in span at q^" +
                                            std::to_string(e));
            continue;
        }
        pivots.push_back(std::move(row));
        pivot_col.push_back(col);
    }
    if (pivots.size() < k)
        throw BasisDegenerateError("decompose_in_class_basis: basis is degenerate");

    std::vector<Rat> x(k, Rat(0));
    for (std::size_t r = pivots.size(); r-- > 0;) {
        Rat acc = pivots[r][k];
        for (std::size_t j = pivot_col[r] + 1; j < k; ++j)
            acc -= pivots[r][j] * x[j];
        x[pivot_col[r]] = acc / pivots[r][pivot_col[r]];
    }

    Series rhs = Series::zero(order);
    for (std::size_t i = 0; i < k; ++i)
        rhs = add(rhs, shifted(thetas[i], x[i], 0));
    Mismatch mis;
    if (!equals_to_order(f, rhs, order, &mis))
        throw NotInSpanError(mis.exponent,
                             "decompose_in_class_basis: not in span at q^" +
                                 to_string(mis.exponent));

    std::vector<std::pair<QuadForm, Rat>> out;
    for (std::size_t i = 0; i < k; ++i) out.emplace_back(reps[i].form, x[i]);
    return out;
}

}  // namespace qrr
