#pragma once

#include <cstdint>
#include <vector>

#include "charzeta/fqpoly.hpp"
#include "charzeta/padic.hpp"

namespace charzeta {

/// Valuation knowledge for a truncated element: exact, only a lower bound
/// (window exhausted), or +infinity (exactly zero).
struct LaurentVal {
    enum class Kind { Exact, AtLeast, Infinite } kind;
    long long v = 0;

    bool certified() const { return kind != Kind::AtLeast; }
};

/// Element of F_q((1/T)) known on a window of (1/T)-exponents.
/// coeff(k) is the coefficient of (1/T)^k for off <= k < prec; `exact`
/// means the element is exactly the stored finite sum (zero beyond).
/// nu_infty(1/T) = 1.
class TruncLaurent {
public:
    TruncLaurent() = default;
    TruncLaurent(FqPtr F, long long off, std::vector<uint8_t> coeffs, long long prec, bool exact)
        : F_(std::move(F)), off_(off), c_(std::move(coeffs)), prec_(prec), exact_(exact) {
        normalize();
    }

    static TruncLaurent zero(FqPtr F, long long prec, bool exact) {
        return TruncLaurent(std::move(F), 0, {}, prec, exact);
    }
    static TruncLaurent one(FqPtr F, long long prec, bool exact) {
        return TruncLaurent(std::move(F), 0, {1}, prec, exact);
    }
    /// Embeds a polynomial n(T) = sum a_k T^k as sum a_k (1/T)^{-k}; exact.
    static TruncLaurent from_poly(const FqPoly& n);
    /// One-unit part <n> = n * (1/T)^{deg n} of a monic n; exact.
    static TruncLaurent one_unit_part(const FqPoly& n);

    const FqPtr& field() const { return F_; }
    long long prec() const { return prec_; }
    bool exact() const { return exact_; }
    bool known_zero() const { return c_.empty(); } // zero to current knowledge
    uint8_t coeff(long long k) const {
        if (k < off_ || k >= off_ + (long long)c_.size()) return 0;
        return c_[(size_t)(k - off_)];
    }

    /// Certified valuation of the element: Exact when a nonzero stored
    /// coefficient exists, Infinite when exact and all zero, otherwise
    /// AtLeast(prec).
    LaurentVal valuation() const;
    /// Pessimistic lower bound usable in precision bookkeeping.
    long long val_floor() const {
        auto v = valuation();
        return v.kind == LaurentVal::Kind::Infinite ? prec_ : v.v;
    }

    TruncLaurent operator+(const TruncLaurent& o) const;
    TruncLaurent operator-(const TruncLaurent& o) const;
    TruncLaurent operator*(const TruncLaurent& o) const;
    TruncLaurent truncated(long long new_prec) const;
    /// Inverse of a unit with known leading coefficient, to the element's precision.
    TruncLaurent inverse() const;

    friend bool operator==(const TruncLaurent& a, const TruncLaurent& b) {
        return a.off_ == b.off_ && a.c_ == b.c_ && a.prec_ == b.prec_ && a.exact_ == b.exact_;
    }

    /// Equality of the underlying elements modulo (1/T)^N.
    static bool congruent(const TruncLaurent& a, const TruncLaurent& b, long long N);

private:
    void normalize();
    FqPtr F_;
    long long off_ = 0;
    std::vector<uint8_t> c_;
    long long prec_ = 0;
    bool exact_ = false;
};

/// (unit)^y for a 1-unit `unit` = 1 + u, nu(u) >= 1, computed digitwise via
/// Frobenius ((1+u)^(p^i) = 1 + u^(p^i)) to precision N. Needs p^(known
/// digits of y) >= N; InsufficientDigits otherwise.
TruncLaurent one_unit_pow(const TruncLaurent& unit, const PAdicApprox& y, long long N);

} // namespace charzeta
