#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "qrr/rational.hpp"

namespace qrr {

/// Truncated Laurent series with exact rational coefficients on the exponent
/// lattice (1/denom)*Z.  Coefficients are correct for every exponent e with
/// e < prec and unknown at e >= prec.  Values are immutable; every operation
/// returns a new series.
class Series {
public:
    Series() = default;

    static Series zero(const Rat& prec) {
        Series s;
        s.prec_ = prec;
        return s;
    }

    /// c * q^e.  Requires prec > e.
    static Series monomial(const Rat& c, const Rat& e, const Rat& prec) {
        if (prec <= e) throw PrecisionError("monomial: prec <= exponent");
        if (c == 0) return zero(prec);
        Series s;
        s.denom_ = to_long(mpz_class(e.get_den()));
        s.offset_ = to_long(mpz_class(e.get_num()));
        s.coeffs_ = {c};
        s.prec_ = prec;
        return s;
    }

    static Series one(const Rat& prec) { return monomial(1, 0, prec); }

    /// Builds a series from (exponent, coefficient) terms; duplicate
    /// exponents accumulate.  Terms at exponents >= prec are dropped.
    static Series from_terms(const std::vector<std::pair<Rat, Rat>>& terms,
                             const Rat& prec) {
        long d = 1;
        for (const auto& [e, c] : terms)
            d = lcm_long(d, to_long(mpz_class(e.get_den())));
        const long hi = max_index_below(prec, d);
        long lo = hi + 1;
        std::vector<std::pair<long, Rat>> idx;
        idx.reserve(terms.size());
        for (const auto& [e, c] : terms) {
            Rat t = e * d;
            long a = to_long(mpz_class(t.get_num()));
            if (a > hi) continue;
            idx.emplace_back(a, c);
            lo = std::min(lo, a);
        }
        Series s;
        s.prec_ = prec;
        if (idx.empty()) return s;
        s.denom_ = d;
        s.offset_ = lo;
        long top = lo;
        for (const auto& [a, c] : idx) top = std::max(top, a);
        s.coeffs_.assign(static_cast<std::size_t>(top - lo + 1), Rat(0));
        for (const auto& [a, c] : idx) s.coeffs_[a - lo] += c;
        s.normalize();
        return s;
    }

    long denom() const { return denom_; }
    const Rat& prec() const { return prec_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Least exponent with a nonzero coefficient; prec for the zero series.
    Rat valuation() const {
        if (coeffs_.empty()) return prec_;
        return Rat(offset_, denom_);
    }

    /// Coefficient of q^e.  Requires e < prec.
    Rat coefficient_at(const Rat& e) const {
        if (e >= prec_) throw PrecisionError("coefficient_at: e >= prec");
        Rat t = e * denom_;
        if (!is_integer(t)) return 0;
        long a = to_long(mpz_class(t.get_num()));
        if (a < offset_ || a >= offset_ + static_cast<long>(coeffs_.size()))
            return 0;
        return coeffs_[a - offset_];
    }

    /// Nonzero terms as (exponent, coefficient), ascending.
    std::vector<std::pair<Rat, Rat>> terms() const {
        std::vector<std::pair<Rat, Rat>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                out.emplace_back(Rat(offset_ + static_cast<long>(i), denom_),
                                 coeffs_[i]);
        return out;
    }

    bool integer_support() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0 && (offset_ + static_cast<long>(i)) % denom_ != 0)
                return false;
        return true;
    }

    bool integer_coefficients() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const Rat& c) { return is_integer(c); });
    }

    friend Series add(const Series& f, const Series& g);
    friend Series mul(const Series& f, const Series& g);
    friend Series negate(const Series& f);
    friend Series invert(const Series& f);
    friend Series shifted(const Series& f, const Rat& c, const Rat& e);
    friend Series rescale_variable(const Series& f, const Rat& k);
    friend Series negate_variable(const Series& f);
    friend Series extract_progression(const Series& f, long m, long r);
    friend Series truncated(const Series& f, const Rat& new_prec);

private:
    static long lcm_long(long a, long b) { return std::lcm(a, b); }

    /// Largest absolute lattice index (numerator over `denom`) strictly
    /// below the exponent bound.
    static long max_index_below(const Rat& bound, long denom) {
        return ceil_long(bound * denom) - 1;
    }

    /// Trims zero ends and reduces the lattice to the gcd of the support.
    void normalize() {
        std::size_t b = 0, e = coeffs_.size();
        while (b < e && coeffs_[b] == 0) ++b;
        while (e > b && coeffs_[e - 1] == 0) --e;
        if (b == e) {
            coeffs_.clear();
            denom_ = 1;
            offset_ = 0;
            return;
        }
        offset_ += static_cast<long>(b);
        coeffs_.erase(coeffs_.begin() + e, coeffs_.end());
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + b);
        long g = denom_;
        for (std::size_t i = 0; i < coeffs_.size() && g > 1; ++i)
            if (coeffs_[i] != 0)
                g = std::gcd(g, std::abs(offset_ + static_cast<long>(i)));
        if (g > 1) {
            // offset_ is a nonzero position, hence divisible by g.
            std::vector<Rat> packed;
            packed.reserve(coeffs_.size() / g + 1);
            for (std::size_t i = 0; i < coeffs_.size(); i += g)
                packed.push_back(std::move(coeffs_[i]));
            coeffs_ = std::move(packed);
            offset_ /= g;
            denom_ /= g;
        }
    }

    long denom_ = 1;
    long offset_ = 0;
    std::vector<Rat> coeffs_;
    Rat prec_ = 0;
};

/// Coefficientwise sum on the common lattice; prec = min of the inputs'.
inline Series add(const Series& f, const Series& g) {
    const Rat prec = std::min(f.prec_, g.prec_);
    const long L = Series::lcm_long(f.denom_, g.denom_);
    const long sf = L / f.denom_, sg = L / g.denom_;
    const long hi = Series::max_index_below(prec, L);

    std::vector<std::pair<long, Rat>> entries;
    entries.reserve(f.coeffs_.size() + g.coeffs_.size());
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        long a = (f.offset_ + static_cast<long>(i)) * sf;
        if (a <= hi && f.coeffs_[i] != 0) entries.emplace_back(a, f.coeffs_[i]);
    }
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) {
        long a = (g.offset_ + static_cast<long>(i)) * sg;
        if (a <= hi && g.coeffs_[i] != 0) entries.emplace_back(a, g.coeffs_[i]);
    }
    Series s;
    s.prec_ = prec;
    if (entries.empty()) return s;
    auto [lo_it, hi_it] = std::minmax_element(
        entries.begin(), entries.end(),
        [](const auto& x, const auto& y) { return x.first < y.first; });
    const long lo = lo_it->first, top = hi_it->first;
    s.denom_ = L;
    s.offset_ = lo;
    s.coeffs_.assign(static_cast<std::size_t>(top - lo + 1), Rat(0));
    for (auto& [a, c] : entries) s.coeffs_[a - lo] += c;
    s.normalize();
    return s;
}

inline Series negate(const Series& f) { return shifted(f, -1, 0); }

inline Series sub(const Series& f, const Series& g) { return add(f, negate(g)); }

/// Exact multiplication by the monomial c*q^e: prec shifts by e.
inline Series shifted(const Series& f, const Rat& c, const Rat& e) {
    if (c == 0) return Series::zero(f.prec_ + e);
    Series s = f;
    s.prec_ += e;
    if (e != 0) {
        long ed = to_long(mpz_class(e.get_den()));
        long L = Series::lcm_long(s.denom_, ed);
        long sf = L / s.denom_;
        Rat t = e * L;
        long ea = to_long(mpz_class(t.get_num()));
        if (sf != 1) {
            std::vector<Rat> spread;
            if (!s.coeffs_.empty()) {
                spread.assign((s.coeffs_.size() - 1) * sf + 1, Rat(0));
                for (std::size_t i = 0; i < s.coeffs_.size(); ++i)
                    spread[i * sf] = std::move(s.coeffs_[i]);
            }
            s.coeffs_ = std::move(spread);
            s.offset_ *= sf;
            s.denom_ = L;
        }
        s.offset_ += ea;
    }
    if (c != 1)
        for (auto& x : s.coeffs_) x *= c;
    s.normalize();
    return s;
}

/// Cauchy product; prec = min(prec_f + val(g), prec_g + val(f)).
inline Series mul(const Series& f, const Series& g) {
    const Rat prec = std::min(f.prec_ + g.valuation(), g.prec_ + f.valuation());
    if (f.coeffs_.empty() || g.coeffs_.empty()) return Series::zero(prec);
    const long L = Series::lcm_long(f.denom_, g.denom_);
    const long sf = L / f.denom_, sg = L / g.denom_;
    const long hi = Series::max_index_below(prec, L);
    const long lo = f.offset_ * sf + g.offset_ * sg;

    Series s;
    s.prec_ = prec;
    if (lo > hi) return s;
    s.denom_ = L;
    s.offset_ = lo;
    s.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Rat(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        const long base = (f.offset_ + static_cast<long>(i)) * sf;
        if (base + g.offset_ * sg > hi) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            if (g.coeffs_[j] == 0) continue;
            const long a = base + (g.offset_ + static_cast<long>(j)) * sg;
            if (a > hi) break;
            s.coeffs_[a - lo] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    s.normalize();
    return s;
}

inline Series pow_int(const Series& f, unsigned long k) {
    if (k == 0) return Series::one(f.prec());
    Series r = f;
    for (unsigned long i = 1; i < k; ++i) r = mul(r, f);
    return r;
}

/// Multiplicative inverse: g with mul(f, g) = 1 to prec_f - 2*val(f).
inline Series invert(const Series& f) {
    if (f.coeffs_.empty())
        throw NotInvertibleError("invert: series is zero to available precision");
    const long d = f.denom_;
    const long v = f.offset_;  // valuation index
    const Rat prec = f.prec_ - Rat(2 * v, d);
    Series s;
    s.prec_ = prec;
    const long n_top = Series::max_index_below(prec, d) + v;  // last rel index
    if (n_top < 0) return s;
    const Rat inv_a0 = 1 / f.coeffs_[0];
    std::vector<Rat> b(static_cast<std::size_t>(n_top + 1), Rat(0));
    b[0] = inv_a0;
    const long na = static_cast<long>(f.coeffs_.size());
    for (long n = 1; n <= n_top; ++n) {
        Rat acc(0);
        for (long k = 1; k <= n && k < na; ++k)
            if (f.coeffs_[k] != 0 && b[n - k] != 0) acc += f.coeffs_[k] * b[n - k];
        if (acc != 0) b[n] = -inv_a0 * acc;
    }
    s.denom_ = d;
    s.offset_ = -v;
    s.coeffs_ = std::move(b);
    s.normalize();
    return s;
}

/// q -> q^k for k > 0; exponents and precision scale by k.
inline Series rescale_variable(const Series& f, const Rat& k) {
    if (k <= 0) throw DomainError("rescale_variable: k <= 0");
    long kn = to_long(mpz_class(k.get_num()));
    long kd = to_long(mpz_class(k.get_den()));
    Series s;
    s.prec_ = f.prec_ * k;
    if (f.coeffs_.empty()) return s;
    s.denom_ = f.denom_ * kd;
    s.offset_ = f.offset_ * kn;
    s.coeffs_.assign((f.coeffs_.size() - 1) * kn + 1, Rat(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        s.coeffs_[i * kn] = f.coeffs_[i];
    s.normalize();
    return s;
}

/// q -> -q; requires integer-exponent support.
inline Series negate_variable(const Series& f) {
    Series s = f;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
        if (s.coeffs_[i] == 0) continue;
        long a = s.offset_ + static_cast<long>(i);
        if (a % s.denom_ != 0)
            throw DomainError("negate_variable: non-integer exponent in support");
        if ((a / s.denom_) % 2 != 0) s.coeffs_[i] = -s.coeffs_[i];
    }
    return s;
}

/// Picks the arithmetic progression m*j + r out of an integer-exponent
/// series: result coefficient at q^j is the input coefficient at q^{m j + r}.
inline Series extract_progression(const Series& f, long m, long r) {
    if (m <= 0 || r < 0 || r >= m)
        throw DomainError("extract_progression: need 0 <= r < m");
    if (!f.integer_support())
        throw DomainError("extract_progression: fractional support");
    const Rat prec = Rat(rat_ceil((f.prec_ - r) / m));
    std::vector<std::pair<Rat, Rat>> terms;
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        long a = f.offset_ + static_cast<long>(i);
        long e = a / f.denom_;
        long em = e - r;
        if (em % m != 0) continue;
        terms.emplace_back(Rat(em / m), f.coeffs_[i]);
    }
    Series s = Series::from_terms(terms, prec);
    return s;
}

/// Lowers precision to new_prec (<= prec) and drops coefficients beyond it.
inline Series truncated(const Series& f, const Rat& new_prec) {
    if (new_prec > f.prec_)
        throw PrecisionError("truncated: cannot raise precision");
    Series s = f;
    s.prec_ = new_prec;
    const long hi = Series::max_index_below(new_prec, s.denom_);
    const long top = s.offset_ + static_cast<long>(s.coeffs_.size()) - 1;
    if (top > hi) {
        long keep = hi - s.offset_ + 1;
        if (keep < 0) keep = 0;
        s.coeffs_.resize(static_cast<std::size_t>(keep));
        s.normalize();
    }
    return s;
}

/// U_5: keeps coefficients a(5n).
inline Series u5(const Series& f) { return extract_progression(f, 5, 0); }

/// Hecke-type T_5: coefficient at q^n is a(5n) + a(n/5).
inline Series t5(const Series& f) {
    if (!f.integer_support()) throw DomainError("t5: fractional support");
    if (f.prec() < 5) throw PrecisionError("t5: prec < 5");
    Rat prec = Rat(rat_floor(f.prec() / 5));
    return truncated(add(u5(f), rescale_variable(f, 5)), prec);
}

struct Mismatch {
    Rat exponent, lhs, rhs;
};

/// True when f and g agree coefficientwise for all exponents < order.
/// On failure fills *out (when given) with the smallest mismatch.
inline bool equals_to_order(const Series& f, const Series& g, const Rat& order,
                            Mismatch* out = nullptr) {
    if (f.prec() < order || g.prec() < order)
        throw PrecisionError("equals_to_order: insufficient precision");
    Series d = sub(f, g);
    for (const auto& [e, c] : d.terms()) {
        if (e >= order) break;
        if (c != 0) {
            if (out) *out = Mismatch{e, f.coefficient_at(e), g.coefficient_at(e)};
            return false;
        }
    }
    return true;
}

}  // namespace qrr
