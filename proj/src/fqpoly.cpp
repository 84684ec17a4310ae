#include "charzeta/fqpoly.hpp"

#include <algorithm>

namespace charzeta {

FqPoly FqPoly::operator+(const FqPoly& o) const {
    check_same_field(*F_, *o.F_);
    std::vector<uint8_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F_->add(coeff(i), o.coeff(i));
    return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    check_same_field(*F_, *o.F_);
    std::vector<uint8_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F_->sub(coeff(i), o.coeff(i));
    return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::operator-() const {
    std::vector<uint8_t> r(c_);
    for (auto& v : r) v = F_->neg(v);
    return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    check_same_field(*F_, *o.F_);
    if (is_zero() || o.is_zero()) return zero(F_);
    std::vector<uint8_t> r(c_.size() + o.c_.size() - 1, 0);
    if (F_->prime_field()) {
        // lazily reduced accumulation; values stay < 2^16 per chunk
        const int p = (int)F_->p();
        std::vector<uint16_t> acc(r.size(), 0);
        size_t pending = 0;
        const size_t flush_at = 65535 / ((p - 1) * (p - 1) + 1);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += (uint16_t)(c_[i] * o.c_[j]);
            if (++pending == flush_at) {
                for (auto& v : acc) v %= p;
                pending = 0;
            }
        }
        for (size_t i = 0; i < r.size(); ++i) r[i] = (uint8_t)(acc[i] % p);
    } else {
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = F_->add(r[i + j], F_->mul(c_[i], o.c_[j]));
        }
    }
    return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::scaled(uint8_t s) const {
    std::vector<uint8_t> r(c_);
    for (auto& v : r) v = F_->mul(v, s);
    return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::shifted(long long k) const {
    if (is_zero()) return *this;
    std::vector<uint8_t> r((size_t)k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return FqPoly(F_, std::move(r));
}

std::pair<FqPoly, FqPoly> FqPoly::divrem(const FqPoly& divisor) const {
    check_same_field(*F_, *divisor.F_);
    if (divisor.is_zero()) fail(Errc::SchemaError, "polynomial division by zero");
    if (is_zero() || c_.size() < divisor.c_.size()) return {zero(F_), *this};
    std::vector<uint8_t> rem(c_);
    std::vector<uint8_t> quo(c_.size() - divisor.c_.size() + 1, 0);
    uint8_t lead_inv = F_->inv(divisor.lead());
    for (long long i = (long long)rem.size() - 1; i >= (long long)divisor.c_.size() - 1; --i) {
        uint8_t q = F_->mul(rem[(size_t)i], lead_inv);
        if (q == 0) continue;
        size_t shift = (size_t)i - (divisor.c_.size() - 1);
        quo[shift] = q;
        for (size_t j = 0; j < divisor.c_.size(); ++j)
            rem[shift + j] = F_->sub(rem[shift + j], F_->mul(q, divisor.c_[j]));
    }
    return {FqPoly(F_, std::move(quo)), FqPoly(F_, std::move(rem))};
}

FqPoly FqPoly::gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

FqPoly FqPoly::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    return scaled(F_->inv(c_.back()));
}

FqPoly FqPoly::frobenius_power(long long i) const {
    if (is_zero() || i == 0) return *this;
    long long scale = 1;
    for (long long k = 0; k < i; ++k) {
        scale *= F_->p();
        if (scale > (1LL << 40)) fail(Errc::BudgetExceeded, "frobenius index dilation too large");
    }
    std::vector<uint8_t> r((c_.size() - 1) * (size_t)scale + 1, 0);
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k]) r[k * (size_t)scale] = F_->frob(c_[k], i);
    return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::pow(long long e, size_t max_coeffs) const {
    if (e < 0) fail(Errc::SchemaError, "negative polynomial power");
    if (e == 0) return constant(F_, 1);
    if (is_zero()) return *this;
    if ((unsigned long long)(degree() * e) + 1 > max_coeffs)
        fail(Errc::BudgetExceeded, "polynomial power exceeds coefficient budget");
    // digit-split through Frobenius: n^e = prod (n^(p^i))^(c_i)
    const long long p = F_->p();
    FqPoly acc = constant(F_, 1);
    long long rest = e;
    long long i = 0;
    while (rest) {
        long long ci = rest % p;
        rest /= p;
        if (ci) {
            // base on the left: operator* skips its zero coefficients, and the
            // dilated Frobenius power is sparse
            FqPoly base = frobenius_power(i);
            for (long long t = 0; t < ci; ++t) acc = base * acc;
        }
        ++i;
    }
    return acc;
}

uint8_t FqPoly::eval(uint8_t x) const {
    uint8_t r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
    return r;
}

bool FqPoly::is_irreducible() const {
    if (is_zero() || degree() < 1) return false;
    long long d = degree();
    if (d == 1) return true;
    const FqPoly f = monic();
    const long long q = F_->q();
    auto xq_pow = [&](long long k) {
        // x^(q^k) mod f
        FqPoly cur = FqPoly::x(F_).mod(f);
        for (long long r = 0; r < k; ++r) {
            FqPoly acc = constant(F_, 1);
            FqPoly base = cur;
            long long e = q;
            while (e) {
                if (e & 1) acc = (acc * base).mod(f);
                base = (base * base).mod(f);
                e >>= 1;
            }
            cur = std::move(acc);
        }
        return cur;
    };
    FqPoly x = FqPoly::x(F_).mod(f);
    if (xq_pow(d) != x) return false;
    for (long long l = 2; l <= d; ++l) {
        if (d % l) continue;
        bool prime = true;
        for (long long t = 2; t * t <= l; ++t)
            if (l % t == 0) prime = false;
        if (!prime) continue;
        FqPoly g = gcd(xq_pow(d / l) - x, f);
        if (!g.is_one()) return false;
    }
    return true;
}

ExtVal nu_f(const FqPoly& g, const FqPoly& f) {
    if (!f.is_monic() || !f.is_irreducible())
        fail(Errc::NotIrreducible, "nu_f requires a monic irreducible f");
    if (g.is_zero()) return ExtVal::inf();
    long long k = 0;
    FqPoly cur = g;
    while (true) {
        auto [q, r] = cur.divrem(f);
        if (!r.is_zero()) return ExtVal::of(k);
        ++k;
        cur = std::move(q);
        if (cur.is_zero()) return ExtVal::of(k); // cannot happen for g != 0
    }
}

ExtVal nu_infty_poly(const FqPoly& g) {
    if (g.is_zero()) return ExtVal::inf();
    return ExtVal::of(-g.degree());
}

unsigned long long monic_count(const FqPtr& F, long long e) {
    if (e < 0) fail(Errc::SchemaError, "negative degree");
    unsigned long long n = 1;
    for (long long i = 0; i < e; ++i) {
        if (n > (1ULL << 62) / (unsigned long long)F->q())
            fail(Errc::BudgetExceeded, "q^e enumeration too large");
        n *= (unsigned long long)F->q();
    }
    return n;
}

FqPoly monic_at(const FqPtr& F, long long e, unsigned long long i) {
    // lexicographic on the ascending coefficient vector: c_0 is the most
    // significant digit of i
    std::vector<uint8_t> c((size_t)e + 1, 0);
    c[(size_t)e] = 1;
    unsigned long long rest = i;
    for (long long k = e - 1; k >= 0; --k) {
        c[(size_t)k] = (uint8_t)(rest % (unsigned long long)F->q());
        rest /= (unsigned long long)F->q();
    }
    return FqPoly(F, std::move(c));
}

void for_each_monic(const FqPtr& F, long long e,
                    const std::function<void(const FqPoly&)>& fn) {
    unsigned long long n = monic_count(F, e);
    std::vector<uint8_t> c((size_t)e + 1, 0);
    c[(size_t)e] = 1;
    for (unsigned long long i = 0; i < n; ++i) {
        fn(FqPoly(F, c));
        // odometer increment, c_0 most significant
        for (long long k = e - 1; k >= 0; --k) {
            if (++c[(size_t)k] < F->q()) break;
            c[(size_t)k] = 0;
        }
    }
}

} // namespace charzeta
