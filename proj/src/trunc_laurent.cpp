#include "charzeta/trunc_laurent.hpp"

#include <algorithm>

namespace charzeta {

void TruncLaurent::normalize() {
    if (!exact_) {
        // drop stored coefficients at or beyond the precision horizon
        if (off_ >= prec_) {
            c_.clear();
            off_ = 0;
            return;
        }
        if (off_ + (long long)c_.size() > prec_) c_.resize((size_t)(prec_ - off_));
    }
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + (long long)lead);
        off_ += (long long)lead;
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) off_ = 0;
}

TruncLaurent TruncLaurent::from_poly(const FqPoly& n) {
    if (n.is_zero()) return zero(n.field(), 0, true);
    long long d = n.degree();
    std::vector<uint8_t> c((size_t)d + 1);
    for (long long k = 0; k <= d; ++k) c[(size_t)k] = n.coeff(d - k);
    return TruncLaurent(n.field(), -d, std::move(c), 0, true);
}

TruncLaurent TruncLaurent::one_unit_part(const FqPoly& n) {
    if (!n.is_monic()) fail(Errc::SchemaError, "one-unit part needs a monic polynomial");
    long long d = n.degree();
    std::vector<uint8_t> c((size_t)d + 1);
    for (long long k = 0; k <= d; ++k) c[(size_t)k] = n.coeff(d - k);
    return TruncLaurent(n.field(), 0, std::move(c), 0, true);
}

LaurentVal TruncLaurent::valuation() const {
    if (!c_.empty()) return {LaurentVal::Kind::Exact, off_};
    if (exact_) return {LaurentVal::Kind::Infinite, 0};
    return {LaurentVal::Kind::AtLeast, prec_};
}

TruncLaurent TruncLaurent::operator+(const TruncLaurent& o) const {
    check_same_field(*F_, *o.F_);
    bool ex = exact_ && o.exact_;
    long long prec = std::min(exact_ ? INT64_MAX : prec_, o.exact_ ? INT64_MAX : o.prec_);
    long long lo = std::min(c_.empty() ? 0 : off_, o.c_.empty() ? 0 : o.off_);
    long long hi = std::max(off_ + (long long)c_.size(), o.off_ + (long long)o.c_.size());
    if (ex) prec = hi; // irrelevant marker for exact values
    hi = std::min(hi, ex ? hi : prec);
    if (hi < lo) hi = lo;
    std::vector<uint8_t> c((size_t)(hi - lo), 0);
    for (long long k = lo; k < hi; ++k) c[(size_t)(k - lo)] = F_->add(coeff(k), o.coeff(k));
    return TruncLaurent(F_, lo, std::move(c), prec, ex);
}

TruncLaurent TruncLaurent::operator-(const TruncLaurent& o) const {
    TruncLaurent n = o;
    for (auto& v : n.c_) v = F_->neg(v);
    return *this + n;
}

TruncLaurent TruncLaurent::operator*(const TruncLaurent& o) const {
    check_same_field(*F_, *o.F_);
    if (c_.empty() || o.c_.empty()) {
        bool ex = (exact_ && known_zero()) || (o.exact_ && o.known_zero());
        long long prec = INT64_MAX;
        if (!ex) {
            prec = std::min(exact_ ? INT64_MAX : prec_ + o.val_floor(),
                            o.exact_ ? INT64_MAX : o.prec_ + val_floor());
        }
        return zero(F_, ex ? 0 : prec, ex);
    }
    bool ex = exact_ && o.exact_;
    // standard non-archimedean precision: prec = min(prec_a + val_b, prec_b + val_a)
    long long prec = INT64_MAX;
    if (!exact_) prec = std::min(prec, prec_ + o.off_);
    if (!o.exact_) prec = std::min(prec, o.prec_ + off_);
    long long lo = off_ + o.off_;
    long long hi = lo + (long long)c_.size() + (long long)o.c_.size() - 1;
    if (!ex) hi = std::min(hi, prec);
    std::vector<uint8_t> c((size_t)std::max<long long>(0, hi - lo), 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        long long base = off_ + (long long)i + o.off_ - lo;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            long long k = base + (long long)j;
            if (k >= (long long)c.size()) break;
            c[(size_t)k] = F_->add(c[(size_t)k], F_->mul(c_[i], o.c_[j]));
        }
    }
    return TruncLaurent(F_, lo, std::move(c), prec, ex);
}

TruncLaurent TruncLaurent::truncated(long long new_prec) const {
    if (exact_) {
        std::vector<uint8_t> c(c_);
        long long keep = new_prec - off_;
        if (keep < 0) keep = 0;
        if ((long long)c.size() > keep) c.resize((size_t)keep);
        return TruncLaurent(F_, off_, std::move(c), new_prec, false);
    }
    if (new_prec > prec_) fail(Errc::InsufficientDigits, "cannot raise Laurent precision");
    return TruncLaurent(F_, off_, c_, new_prec, false);
}

TruncLaurent TruncLaurent::inverse() const {
    if (c_.empty()) fail(Errc::SchemaError, "inverse of (possibly) zero Laurent element");
    long long N = exact_ ? (long long)c_.size() : prec_ - off_; // window length
    if (N <= 0) fail(Errc::InsufficientDigits, "no window to invert in");
    std::vector<uint8_t> r((size_t)N, 0);
    uint8_t lead_inv = F_->inv(c_[0]);
    r[0] = lead_inv;
    for (long long k = 1; k < N; ++k) {
        // coefficient of (1/T)^k in (this shifted to val 0) * r must vanish
        uint8_t s = 0;
        for (long long i = 1; i <= k && i < (long long)c_.size(); ++i)
            s = F_->add(s, F_->mul(c_[(size_t)i], r[(size_t)(k - i)]));
        r[(size_t)k] = F_->neg(F_->mul(lead_inv, s));
    }
    long long prec = exact_ ? -off_ + N : prec_ - 2 * off_;
    return TruncLaurent(F_, -off_, std::move(r), prec, false);
}

bool TruncLaurent::congruent(const TruncLaurent& a, const TruncLaurent& b, long long N) {
    if (!a.exact_ && a.prec_ < N) fail(Errc::InsufficientDigits, "congruence beyond precision");
    if (!b.exact_ && b.prec_ < N) fail(Errc::InsufficientDigits, "congruence beyond precision");
    long long lo = std::min(a.c_.empty() ? N : a.off_, b.c_.empty() ? N : b.off_);
    for (long long k = lo; k < N; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

TruncLaurent one_unit_pow(const TruncLaurent& unit, const PAdicApprox& y, long long N) {
    const FqPtr& F = unit.field();
    if (unit.coeff(0) != 1) fail(Errc::SchemaError, "one_unit_pow needs a 1-unit");
    // digits needed: p^k >= N
    const long long p = F->p();
    size_t need = 0;
    long long pw = 1;
    while (pw < N) {
        pw *= p;
        ++need;
    }
    if (y.known_digits() != SIZE_MAX && y.known_digits() < need)
        fail(Errc::InsufficientDigits,
             "exponent has " + std::to_string(y.known_digits()) + " digits, needs " +
                 std::to_string(need));
    TruncLaurent u = (unit - TruncLaurent::one(F, N, true)).truncated(N); // nu >= 1
    if (!u.known_zero() && u.valuation().v < 1)
        fail(Errc::SchemaError, "one_unit_pow argument is not a 1-unit");
    TruncLaurent acc = TruncLaurent::one(F, N, false);
    // (1+u)^(p^i) = 1 + u^(p^i); only digits with p^i < N contribute
    long long pi = 1;
    for (size_t i = 0; pi < N; ++i, pi *= p) {
        uint32_t ci = y.digit(i);
        if (ci) {
            // u^(p^i) by Frobenius on the window
            TruncLaurent upi = TruncLaurent::zero(F, N, false);
            {
                std::vector<uint8_t> c;
                long long off = 0;
                // build directly: coefficient of (1/T)^(k*p^i) = (coeff k)^(p^i)
                std::vector<uint8_t> src;
                long long soff = 0;
                if (!u.known_zero()) {
                    soff = u.valuation().v;
                    for (long long k = soff; k < N; ++k) src.push_back(u.coeff(k));
                }
                if (!src.empty()) {
                    off = soff * pi;
                    c.assign((size_t)std::max<long long>(0, std::min<long long>(
                                                                N - off, ((long long)src.size() - 1) * pi + 1)),
                             0);
                    for (size_t k = 0; k < src.size(); ++k) {
                        long long pos = (long long)k * pi;
                        if (off + pos >= N) break;
                        if (src[k]) c[(size_t)pos] = F->frob(src[k], (long long)i);
                    }
                }
                upi = TruncLaurent(F, off, std::move(c), N, false);
            }
            TruncLaurent base = TruncLaurent::one(F, N, false) + upi;
            for (uint32_t t = 0; t < ci; ++t) acc = (acc * base).truncated(N);
        }
    }
    return acc.truncated(N);
}

} // namespace charzeta
