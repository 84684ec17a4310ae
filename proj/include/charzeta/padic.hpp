#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charzeta/errors.hpp"

namespace charzeta {

/// Truncated p-adic integer: stored base-p digits c_0..c_{M-1} plus a tail
/// descriptor. Exact non-negative integers use tail Zero, exact negative
/// integers use tail AllPMinus1 (the complement expansion), everything else
/// is Unknown beyond the stored digits.
class PAdicApprox {
public:
    enum class Tail { Zero, AllPMinus1, Unknown };

    PAdicApprox() = default;
    PAdicApprox(long long p, std::vector<uint32_t> digits, Tail tail)
        : p_(p), d_(std::move(digits)), tail_(tail) {
        for (uint32_t c : d_)
            if ((long long)c >= p_) fail(Errc::SchemaError, "digit out of range");
        canonicalize();
    }

    static PAdicApprox from_int(long long p, long long v);
    /// Parses the CLI digit-string syntax "d0.d1.d2[*]" (little-endian,
    /// trailing '*' = all-(p-1) tail) or a plain decimal integer.
    static PAdicApprox parse(long long p, const std::string& s);

    long long p() const { return p_; }
    Tail tail() const { return tail_; }
    size_t stored() const { return d_.size(); }
    const std::vector<uint32_t>& stored_digits() const { return d_; }

    /// Digit i, consulting the tail; InsufficientDigits when the tail is
    /// Unknown and i is beyond the stored prefix.
    uint32_t digit(size_t i) const {
        if (i < d_.size()) return d_[i];
        switch (tail_) {
            case Tail::Zero: return 0;
            case Tail::AllPMinus1: return (uint32_t)(p_ - 1);
            case Tail::Unknown:
                fail(Errc::InsufficientDigits,
                     "digit " + std::to_string(i) + " beyond stored precision");
        }
        return 0;
    }
    bool digit_known(size_t i) const { return i < d_.size() || tail_ != Tail::Unknown; }
    /// Number of digits known (SIZE_MAX when the tail is determined).
    size_t known_digits() const { return tail_ == Tail::Unknown ? d_.size() : SIZE_MAX; }

    bool is_exact_integer() const { return tail_ != Tail::Unknown; }
    bool is_zero() const { return tail_ == Tail::Zero && d_.empty(); }
    /// Exact value when representable in long long.
    std::optional<long long> to_int() const;

    /// Digits of -y. Exact on exact integers; Unknown stays Unknown.
    PAdicApprox neg() const;
    PAdicApprox add(const PAdicApprox& o) const;
    PAdicApprox mul(const PAdicApprox& o) const;
    PAdicApprox add_int(long long v) const { return add(from_int(p_, v)); }

    /// Truncation mod p^M (non-negative representative).
    long long mod_pow(size_t M) const;

    /// Same element of Z_p as far as both precisions can tell; requires at
    /// least min_digits agreeing known digits to say "true".
    bool same_as(const PAdicApprox& o) const;

    std::string str() const;

private:
    void canonicalize() {
        // fold a stored suffix that matches the tail back into the tail
        uint32_t tv = tail_ == Tail::Zero ? 0u : (uint32_t)(p_ - 1);
        if (tail_ != Tail::Unknown)
            while (!d_.empty() && d_.back() == tv) d_.pop_back();
    }
    long long p_ = 2;
    std::vector<uint32_t> d_;
    Tail tail_ = Tail::Zero;
};

/// l_r(j): sum of base-r digits of a non-negative integer.
long long digit_sum(long long j, long long r);

/// l_p(y) extended to Z_p: finite only for exact non-negative integers,
/// +infinity (nullopt) otherwise, per the l(y)=infinity convention.
std::optional<long long> digit_sum_padic(const PAdicApprox& y);

/// Digits of -y (alias of PAdicApprox::neg with the spec's name).
inline PAdicApprox neg_digits(const PAdicApprox& y) { return y.neg(); }

/// y_n: the smallest non-negative integer that is digitwise <= the digits
/// of -y and has digit sum exactly n(p-1). Takes digits from the bottom,
/// splitting the last digit used when the sum would overshoot.
/// ClassNotOpen when l(-y) < n(p-1); InsufficientDigits when the stored
/// precision of y cannot decide.
long long y_trunc(const PAdicApprox& y, long long n);

/// Smallest positive j with -j == y mod p^M, optionally also
/// j == h mod cyc_mod (CRT with the Teichmueller component).
long long integer_approximant(const PAdicApprox& y, size_t M,
                              std::optional<std::pair<long long, long long>> h = std::nullopt);

/// Exponent element of S_v = Z/(q^d-1) x Z_p (acting as n -> w(n)^teich * <n>_v^padic).
struct SvExponent {
    long long cyc_mod = 1; // q^d - 1
    long long teich = 0;   // exponent of the Teichmueller character, mod cyc_mod
    PAdicApprox padic;     // exponent on the 1-unit part

    static SvExponent from_int(long long j, long long cyc_mod_, long long p) {
        SvExponent s;
        s.cyc_mod = cyc_mod_;
        s.teich = ((j % cyc_mod_) + cyc_mod_) % cyc_mod_;
        s.padic = PAdicApprox::from_int(p, j);
        return s;
    }
};

} // namespace charzeta
