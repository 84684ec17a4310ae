#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "charzeta/errors.hpp"

namespace charzeta {

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

/// The field F_q, q = p^m. Elements are indices 0..q-1 encoding the
/// coordinate vector over F_p in the polynomial basis of the supplied
/// modulus (index = sum c_i * p^i). All arithmetic is table driven; q is
/// capped at 256 so every table stays tiny and the index fits a byte.
class Fq {
public:
    /// fq_make: validates p prime, modulus monic irreducible of degree m
    /// (required iff m > 1).
    static FqPtr make(long long p, int m, const std::vector<uint8_t>& modulus = {});

    long long p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    bool prime_field() const { return m_ == 1; }
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
    uint8_t inv(uint8_t a) const {
        if (a == 0) fail(Errc::SchemaError, "inverse of zero field element");
        return inv_[a];
    }
    uint8_t pow(uint8_t a, long long e) const;
    /// a^(p^i), the i-fold absolute Frobenius.
    uint8_t frob(uint8_t a, long long i) const;

    bool same(const Fq& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    Fq() = default;
    size_t idx(uint8_t a, uint8_t b) const { return (size_t)a * q_ + b; }

    long long p_ = 0;
    int m_ = 0;
    int q_ = 0;
    std::vector<uint8_t> modulus_; // ascending coeffs over F_p, size m+1 (empty when m == 1)
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

inline void check_same_field(const Fq& a, const Fq& b) {
    if (!a.same(b)) fail(Errc::FieldMismatch, "operands live over different fields");
}

} // namespace charzeta
