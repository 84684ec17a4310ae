#include "charzeta/fq.hpp"

#include <algorithm>

namespace charzeta {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Plain F_p[x] helpers on coefficient vectors, used only to build the Fq
// tables and to test the modulus for irreducibility.
using PVec = std::vector<uint8_t>;

void trim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, long long p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (uint8_t)((r[i + j] + (int)a[i] * b[j]) % p);
    trim(r);
    return r;
}

// remainder of a mod monic b
PVec pmod(PVec a, const PVec& b, long long p) {
    trim(a);
    while (a.size() >= b.size()) {
        int lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            int v = (int)a[shift + i] - lead * (int)b[i] % (int)p;
            v %= (int)p;
            if (v < 0) v += (int)p;
            a[shift + i] = (uint8_t)v;
        }
        trim(a);
    }
    return a;
}

PVec pgcd(PVec a, PVec b, long long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic before using it as divisor
        PVec bm = b;
        int lead = bm.back();
        if (lead != 1) {
            // lead^{-1} mod p by Fermat
            long long inv = 1, base = lead, e = p - 2;
            while (e) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
                e >>= 1;
            }
            for (auto& c : bm) c = (uint8_t)(c * inv % p);
        }
        PVec r = pmod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PVec ppowmod_x(long long e_p, long long k, const PVec& f, long long p) {
    // x^(p^k) mod f via k rounds of x -> x^p mod f. (e_p = p)
    PVec x = {0, 1};
    x = pmod(x, f, p);
    PVec cur = x;
    for (long long r = 0; r < k; ++r) {
        // cur^p mod f by square-and-multiply on exponent p
        PVec acc = {1};
        PVec base = cur;
        long long e = e_p;
        while (e) {
            if (e & 1) acc = pmod(pmul(acc, base, p), f, p);
            base = pmod(pmul(base, base, p), f, p);
            e >>= 1;
        }
        cur = std::move(acc);
    }
    return cur;
}

bool modulus_irreducible(const PVec& f, long long p) {
    // Rabin: f (monic, deg m) irreducible over F_p iff x^(p^m) = x mod f and
    // gcd(x^(p^(m/l)) - x, f) = 1 for every prime l | m.
    int m = (int)f.size() - 1;
    if (m <= 0) return false;
    if (m == 1) return true;
    PVec xq = ppowmod_x(p, m, f, p);
    PVec x = pmod({0, 1}, f, p);
    PVec diff = xq;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) {
        int v = ((int)diff[i] - (int)x[i]) % (int)p;
        if (v < 0) v += (int)p;
        diff[i] = (uint8_t)v;
    }
    trim(diff);
    if (!diff.empty()) return false;
    for (int l = 2; l <= m; ++l) {
        if (m % l != 0) continue;
        bool l_prime = is_prime(l);
        if (!l_prime) continue;
        PVec xk = ppowmod_x(p, m / l, f, p);
        PVec d = xk;
        d.resize(std::max(d.size(), x.size()), 0);
        for (size_t i = 0; i < x.size(); ++i) {
            int v = ((int)d[i] - (int)x[i]) % (int)p;
            if (v < 0) v += (int)p;
            d[i] = (uint8_t)v;
        }
        PVec g = pgcd(d, f, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

PVec decode(int idx, long long p, int m) {
    PVec c(m, 0);
    for (int i = 0; i < m; ++i) {
        c[i] = (uint8_t)(idx % p);
        idx = (int)(idx / p);
    }
    return c;
}

int encode(const PVec& c, long long p, int m) {
    int v = 0;
    for (int i = m - 1; i >= 0; --i) v = (int)(v * p + (i < (int)c.size() ? c[i] : 0));
    return v;
}

} // namespace

FqPtr Fq::make(long long p, int m, const std::vector<uint8_t>& modulus) {
    if (!is_prime(p)) fail(Errc::CompositeP, "p = " + std::to_string(p) + " is not prime");
    if (m < 1) fail(Errc::DegreeMismatch, "extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > 256) fail(Errc::BudgetExceeded, "q = p^m exceeds the supported table size 256");
    }
    auto F = std::shared_ptr<Fq>(new Fq());
    F->p_ = p;
    F->m_ = m;
    F->q_ = (int)q;
    if (m == 1) {
        if (!modulus.empty()) fail(Errc::DegreeMismatch, "modulus must be absent for a prime field");
    } else {
        if ((int)modulus.size() != m + 1)
            fail(Errc::DegreeMismatch, "modulus must have degree exactly m");
        if (modulus.back() != 1) fail(Errc::DegreeMismatch, "modulus must be monic");
        for (uint8_t c : modulus)
            if (c >= p) fail(Errc::DegreeMismatch, "modulus coefficient out of range for F_p");
        if (!modulus_irreducible(modulus, p))
            fail(Errc::ReducibleModulus, "modulus is reducible over F_p");
        F->modulus_ = modulus;
    }

    int Q = F->q_;
    F->add_.resize((size_t)Q * Q);
    F->mul_.resize((size_t)Q * Q);
    F->neg_.resize(Q);
    F->inv_.resize(Q, 0);
    for (int a = 0; a < Q; ++a) {
        PVec ca = decode(a, p, m);
        PVec cn(m);
        for (int i = 0; i < m; ++i) cn[i] = (uint8_t)((p - ca[i]) % p);
        F->neg_[a] = (uint8_t)encode(cn, p, m);
        for (int b = 0; b < Q; ++b) {
            PVec cb = decode(b, p, m);
            PVec cs(m);
            for (int i = 0; i < m; ++i) cs[i] = (uint8_t)((ca[i] + cb[i]) % p);
            F->add_[(size_t)a * Q + b] = (uint8_t)encode(cs, p, m);
            PVec prod = pmul(ca, cb, p);
            if (m > 1) prod = pmod(prod, F->modulus_, p);
            F->mul_[(size_t)a * Q + b] = (uint8_t)encode(prod, p, m);
        }
    }
    for (int a = 1; a < Q; ++a)
        for (int b = 1; b < Q; ++b)
            if (F->mul_[(size_t)a * Q + b] == 1) F->inv_[a] = (uint8_t)b;
    return F;
}

uint8_t Fq::pow(uint8_t a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    uint8_t acc = 1, base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

uint8_t Fq::frob(uint8_t a, long long i) const {
    if (m_ == 1 || a <= 1) return a; // c^p = c on the prime field
    uint8_t r = a;
    i %= m_; // Frobenius has order m on F_q
    for (long long k = 0; k < i; ++k) r = pow(r, p_);
    return r;
}

} // namespace charzeta
