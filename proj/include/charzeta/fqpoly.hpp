#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "charzeta/fq.hpp"

namespace charzeta {

/// Extended valuation value: +infinity is the valuation of 0.
struct ExtVal {
    bool infinite = false;
    long long v = 0;

    static ExtVal inf() { return {true, 0}; }
    static ExtVal of(long long x) { return {false, x}; }
    friend bool operator==(const ExtVal& a, const ExtVal& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
};

/// Dense polynomial over F_q, ascending coefficients, no trailing zeros.
/// The zero polynomial is the empty vector; its degree is a sentinel
/// (is_zero()), never an integer fed into arithmetic.
class FqPoly {
public:
    FqPoly() = default;
    FqPoly(FqPtr F, std::vector<uint8_t> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
        normalize();
    }
    static FqPoly zero(FqPtr F) { return FqPoly(std::move(F), {}); }
    static FqPoly constant(FqPtr F, uint8_t v) { return FqPoly(std::move(F), {v}); }
    static FqPoly x(FqPtr F) { return FqPoly(std::move(F), {0, 1}); }

    const FqPtr& field() const { return F_; }
    const std::vector<uint8_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    /// Degree of a nonzero polynomial; throws on zero (degree of 0 is a sentinel).
    long long degree() const {
        if (c_.empty()) fail(Errc::SchemaError, "degree of the zero polynomial requested");
        return (long long)c_.size() - 1;
    }
    uint8_t coeff(long long i) const {
        return (i >= 0 && i < (long long)c_.size()) ? c_[(size_t)i] : 0;
    }
    uint8_t lead() const { return c_.empty() ? 0 : c_.back(); }

    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FqPoly& a, const FqPoly& b) { return !(a == b); }

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator-() const;
    FqPoly operator*(const FqPoly& o) const;
    FqPoly scaled(uint8_t s) const;
    FqPoly shifted(long long k) const; // * T^k, k >= 0

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<FqPoly, FqPoly> divrem(const FqPoly& divisor) const;
    FqPoly mod(const FqPoly& divisor) const { return divrem(divisor).second; }
    bool divisible_by(const FqPoly& d) const { return mod(d).is_zero(); }

    /// Monic gcd.
    static FqPoly gcd(FqPoly a, FqPoly b);

    FqPoly monic() const;
    /// this^(p^i): coefficientwise Frobenius plus index dilation (exact, cheap).
    FqPoly frobenius_power(long long i) const;
    /// this^e by digitwise Frobenius splitting; guards the dense budget.
    FqPoly pow(long long e, size_t max_coeffs) const;

    uint8_t eval(uint8_t x) const;

    /// Rabin irreducibility test over F_q.
    bool is_irreducible() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    FqPtr F_;
    std::vector<uint8_t> c_;
};

/// nu_f(g, f): largest k with f^k | g; +infinity for g = 0. f must be monic
/// irreducible (NotIrreducible otherwise).
ExtVal nu_f(const FqPoly& g, const FqPoly& f);

/// nu_infty on F_q[T] subset F_q((1/T)): nu(g) = -deg g, +infinity at 0.
ExtVal nu_infty_poly(const FqPoly& g);

/// Visits the q^e monic polynomials of degree e in lexicographic order on
/// the ascending coefficient vector. Deterministic.
void for_each_monic(const FqPtr& F, long long e,
                    const std::function<void(const FqPoly&)>& fn);

/// i-th monic of degree e under the same order (i in [0, q^e)).
FqPoly monic_at(const FqPtr& F, long long e, unsigned long long i);

unsigned long long monic_count(const FqPtr& F, long long e); // q^e, guarded

} // namespace charzeta
