#include "charzeta/powersums.hpp"

#include <algorithm>
#include <cstring>
#include <thread>

namespace charzeta {

namespace {

// ---------------------------------------------------------------------------
// exact power-sum kernel
//
// n^j is accumulated factorwise through the base-p expansion of j:
// n^j = prod_i (n^(p^i))^(c_i), where n^(p^i) is an (e+1)-sparse polynomial
// (coefficientwise Frobenius, indices dilated by p^i). The running dense
// product is multiplied by each sparse factor into a uint16 scratch that is
// reduced mod p afterwards; per-monic results are added into a uint16 sum
// that is flushed rarely. The prime-field inner loops auto-vectorize.
// ---------------------------------------------------------------------------

using Sparse = std::vector<std::pair<long long, uint8_t>>; // ascending exponents

Sparse sparse_mul(const Fq& F, const Sparse& a, const Sparse& b) {
    Sparse r;
    r.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            uint8_t c = F.mul(ca, cb);
            if (c) r.emplace_back(ea + eb, c);
        }
    std::sort(r.begin(), r.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Sparse out;
    for (const auto& [e, c] : r) {
        if (!out.empty() && out.back().first == e) {
            uint8_t s = F.add(out.back().second, c);
            if (s) out.back().second = s;
            else out.pop_back();
        } else {
            out.emplace_back(e, c);
        }
    }
    return out;
}

struct Digits {
    std::vector<uint32_t> d; // base-p digits of j, ascending
};

Digits base_p_digits(long long j, long long p) {
    Digits r;
    while (j) {
        r.d.push_back((uint32_t)(j % p));
        j /= p;
    }
    return r;
}

struct Kernel {
    const Fq& F;
    long long e; // monic degree
    long long j;
    Digits dig;
    size_t maxlen; // e*j + 1
    bool prime;
    std::vector<uint8_t> cur; // running product (reduced field values/indices)
    size_t curlen = 0;
    std::vector<uint16_t> scratch; // prime-field lazy accumulation
    std::vector<uint16_t> sum;     // prime-field lazy sum
    std::vector<uint8_t> gsum;     // generic-field sum (field indices)
    size_t pending = 0;
    size_t flush_at;
    std::vector<uint8_t> modlut;

    Kernel(const Fq& F_, long long e_, long long j_, size_t maxlen_)
        : F(F_), e(e_), j(j_), dig(base_p_digits(j_, F_.p())), maxlen(maxlen_),
          prime(F_.prime_field()) {
        cur.resize(maxlen);
        long long p = F.p();
        flush_at = (size_t)(65000 / p);
        if (prime) {
            scratch.resize(maxlen);
            sum.assign(maxlen, 0);
            // scratch entries stay below chunk*(p-1)^2 + (p-1) < 4096
            modlut.resize(4096);
            for (size_t v = 0; v < modlut.size(); ++v)
                modlut[v] = (uint8_t)(v % (unsigned long long)p);
        } else {
            scratch.resize(maxlen);
            gsum.assign(maxlen, 0);
        }
    }

    // n given by ascending coefficients (size e+1, monic)
    void add_monic_power(const uint8_t* nc) {
        cur[0] = 1;
        curlen = 1;
        long long pi = 1;
        const long long p = F.p();
        for (size_t i = 0; i < dig.d.size(); ++i, pi *= p) {
            uint32_t ci = dig.d[i];
            if (ci) {
                Sparse base;
                base.reserve((size_t)e + 1);
                for (long long k = 0; k <= e; ++k)
                    if (nc[k]) base.emplace_back(k * pi, F.frob(nc[k], (long long)i));
                Sparse factor = base;
                for (uint32_t t = 1; t < ci; ++t) factor = sparse_mul(F, factor, base);
                if (prime) mul_sparse_prime(factor);
                else mul_sparse_generic(factor);
            }
        }
        if (prime) {
            for (size_t k = 0; k < curlen; ++k) sum[k] = (uint16_t)(sum[k] + cur[k]);
            if (++pending >= flush_at) flush();
        } else {
            for (size_t k = 0; k < curlen; ++k)
                if (cur[k]) gsum[k] = F.add(gsum[k], cur[k]);
        }
    }

    void mul_sparse_prime(const Sparse& s) {
        size_t newlen = curlen + (size_t)s.back().first;
        const size_t chunk =
            std::max<size_t>(1, 2048 / ((size_t)(F.p() - 1) * (size_t)(F.p() - 1) + 1));
        std::memset(scratch.data(), 0, newlen * sizeof(uint16_t));
        size_t done = 0;
        while (done < s.size()) {
            size_t stop = std::min(done + chunk, s.size());
            for (size_t t = done; t < stop; ++t) {
                const long long off = s[t].first;
                const uint16_t c = s[t].second;
                uint16_t* out = scratch.data() + off;
                const uint8_t* in = cur.data();
                for (size_t k = 0; k < curlen; ++k) out[k] = (uint16_t)(out[k] + c * in[k]);
            }
            done = stop;
            if (done < s.size())
                for (size_t k = 0; k < newlen; ++k) scratch[k] = modlut[scratch[k]];
        }
        for (size_t k = 0; k < newlen; ++k) cur[k] = modlut[scratch[k]];
        curlen = newlen;
    }

    void mul_sparse_generic(const Sparse& s) {
        size_t newlen = curlen + (size_t)s.back().first;
        // reuse scratch's low bytes as an index buffer
        std::vector<uint8_t> out(newlen, 0);
        for (const auto& [se, sc] : s)
            for (size_t k = 0; k < curlen; ++k)
                if (cur[k]) out[(size_t)se + k] = F.add(out[(size_t)se + k], F.mul(sc, cur[k]));
        std::memcpy(cur.data(), out.data(), newlen);
        curlen = newlen;
    }

    void flush() {
        const unsigned long long p = (unsigned long long)F.p();
        for (auto& v : sum) v = (uint16_t)(v % p);
        pending = 0;
    }

    FqPoly result(const FqPtr& Fp) {
        if (!prime) return FqPoly(Fp, gsum);
        flush();
        std::vector<uint8_t> c(sum.begin(), sum.end());
        return FqPoly(Fp, std::move(c));
    }
};

// odometer over monic coefficient vectors, c_0 most significant
struct MonicIter {
    std::vector<uint8_t> c;
    int q;
    explicit MonicIter(const Fq& F, long long e, unsigned long long start) : q(F.q()) {
        c.assign((size_t)e + 1, 0);
        c[(size_t)e] = 1;
        unsigned long long rest = start;
        for (long long k = e - 1; k >= 0; --k) {
            c[(size_t)k] = (uint8_t)(rest % (unsigned long long)q);
            rest /= (unsigned long long)q;
        }
    }
    void next(long long e) {
        for (long long k = e - 1; k >= 0; --k) {
            if (++c[(size_t)k] < q) return;
            c[(size_t)k] = 0;
        }
    }
};

FqPoly power_sum_range(const FqPtr& F, long long k, long long j, size_t maxlen,
                       unsigned long long lo, unsigned long long hi) {
    Kernel ker(*F, k, j, maxlen);
    MonicIter it(*F, k, lo);
    for (unsigned long long i = lo; i < hi; ++i) {
        ker.add_monic_power(it.c.data());
        it.next(k);
    }
    return ker.result(F);
}

template <class Fn>
void run_blocks(unsigned long long count, int threads, Fn&& block) {
    // block(t, lo, hi); results must be merged by the caller in t order
    int T = std::max(1, threads);
    if ((unsigned long long)T > count) T = count ? (int)count : 1;
    if (T == 1) {
        block(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < T; ++t) {
        unsigned long long lo = count * t / T, hi = count * (t + 1) / T;
        pool.emplace_back([&block, t, lo, hi] { block(t, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace

long long XInvSeries::xdeg() const {
    if (dom != CoeffDomain::ExactPoly || !complete)
        fail(Errc::UndeterminedRange, "x-degree needs a complete exact series");
    for (size_t e = pc.size(); e-- > 0;)
        if (!pc[e].is_zero()) return (long long)e;
    fail(Errc::SchemaError, "series is identically zero");
}

long long lee_bound(long long j, long long r) {
    if (j < 0) fail(Errc::SchemaError, "lee_bound needs j >= 0");
    return digit_sum(j, r) / (r - 1) + 1;
}

FqPoly power_sum(const FqPtr& F, long long k, long long j, const Budget& budget) {
    if (k < 0 || j < 0) fail(Errc::SchemaError, "power_sum needs k, j >= 0");
    unsigned long long maxlen = (unsigned long long)k * (unsigned long long)j + 1;
    if (maxlen > budget.max_coeffs)
        fail(Errc::BudgetExceeded, "k*j coefficient budget exceeded (" + std::to_string(maxlen) +
                                       " > " + std::to_string(budget.max_coeffs) + ")");
    unsigned long long count = monic_count(F, k);
    int T = std::max(1, budget.threads);
    // each worker owns ~5*maxlen bytes of buffers; keep the total bounded
    while (T > 1 && (unsigned long long)T * 5 * maxlen > ((unsigned long long)1 << 28)) --T;
    if (T == 1 || count < 1024) return power_sum_range(F, k, j, (size_t)maxlen, 0, count);
    std::vector<FqPoly> parts((size_t)T);
    run_blocks(count, T, [&](int t, unsigned long long lo, unsigned long long hi) {
        parts[(size_t)t] = power_sum_range(F, k, j, (size_t)maxlen, lo, hi);
    });
    FqPoly acc = FqPoly::zero(F);
    for (auto& p : parts) acc = acc + p;
    return acc;
}

XInvSeries special_poly(const FqPtr& F, long long j, const Budget& budget) {
    if (j < 0) fail(Errc::SchemaError, "special_poly needs j >= 0");
    XInvSeries s;
    s.dom = CoeffDomain::ExactPoly;
    s.place = Place::at_infty();
    s.exp_j = j;
    long long E = lee_bound(j, F->q());
    for (long long e = 0; e < E; ++e) s.pc.push_back(power_sum(F, e, j, budget));
    s.complete = true;
    return s;
}

TruncLaurent coeff_infty(const FqPtr& F, long long e, const PAdicApprox& y_eval, long long N,
                         const Budget& budget) {
    if (e < 0 || N < 1) fail(Errc::SchemaError, "coeff_infty needs e >= 0, N >= 1");
    PAdicApprox expo = y_eval.neg(); // exponent = -y
    unsigned long long count = monic_count(F, e);
    if ((unsigned long long)N * count > (unsigned long long)budget.max_coeffs * 64)
        fail(Errc::BudgetExceeded, "coeff_infty enumeration too large");
    int T = std::max(1, budget.threads);
    auto work = [&](unsigned long long lo, unsigned long long hi) {
        TruncLaurent acc = TruncLaurent::zero(F, N, false);
        for (unsigned long long i = lo; i < hi; ++i) {
            FqPoly n = monic_at(F, e, i);
            acc = acc + one_unit_pow(TruncLaurent::one_unit_part(n), expo, N);
        }
        return acc;
    };
    if (T == 1 || count < 256) return work(0, count);
    std::vector<TruncLaurent> parts((size_t)T, TruncLaurent::zero(F, N, false));
    run_blocks(count, T, [&](int t, unsigned long long lo, unsigned long long hi) {
        parts[(size_t)t] = work(lo, hi);
    });
    TruncLaurent acc = TruncLaurent::zero(F, N, false);
    for (auto& p : parts) acc = acc + p;
    return acc;
}

ResidueElt coeff_vadic(const FqPtr& F, long long e, const SvExponent& yexp,
                       const ResidueRingPtr& R, const Budget& budget) {
    if (e < 0) fail(Errc::SchemaError, "coeff_vadic needs e >= 0");
    check_same_field(*F, *R->field());
    if (yexp.cyc_mod != R->cyc_order())
        fail(Errc::SchemaError, "SvExponent cyclic modulus does not match the place");
    unsigned long long count = monic_count(F, e);
    if (count > (unsigned long long)budget.max_coeffs)
        fail(Errc::BudgetExceeded, "coeff_vadic enumeration too large");
    long long h = ((yexp.teich % yexp.cyc_mod) + yexp.cyc_mod) % yexp.cyc_mod;
    int T = std::max(1, budget.threads);
    auto work = [&](unsigned long long lo, unsigned long long hi) {
        ResidueElt acc = ResidueElt::zero(R);
        for (unsigned long long i = lo; i < hi; ++i) {
            FqPoly n = monic_at(F, e, i);
            if (n.mod(R->f()).is_zero()) continue; // (n, v) != 1
            ResidueElt w = teichmuller(n, R);
            ResidueElt unit = ResidueElt(R, n) * w.pow(R->cyc_order() - 1);
            acc = acc + w.pow(h) * one_unit_pow_v(unit, yexp.padic);
        }
        return acc;
    };
    if (T == 1 || count < 256) return work(0, count);
    std::vector<ResidueElt> parts((size_t)T, ResidueElt::zero(R));
    run_blocks(count, T, [&](int t, unsigned long long lo, unsigned long long hi) {
        parts[(size_t)t] = work(lo, hi);
    });
    ResidueElt acc = ResidueElt::zero(R);
    for (auto& p : parts) acc = acc + p;
    return acc;
}

XInvSeries vadic_series_exact(const FqPtr& F, const FqPoly& f, long long j,
                              const Budget& budget) {
    if (j < 0) fail(Errc::SchemaError, "vadic series needs j >= 0");
    Place v = Place::at_v(f);
    long long E = lee_bound(j, F->q());
    FqPoly fj = f.pow(j, budget.max_coeffs);
    XInvSeries s;
    s.dom = CoeffDomain::ExactPoly;
    s.place = v;
    s.exp_j = j;
    std::vector<FqPoly> S((size_t)E);
    for (long long e = 0; e < E; ++e) S[(size_t)e] = power_sum(F, e, j, budget);
    for (long long e = 0; e < E + v.d; ++e) {
        FqPoly a = e < E ? S[(size_t)e] : FqPoly::zero(F);
        if (e >= v.d && e - v.d < E) a = a - fj * S[(size_t)(e - v.d)];
        s.pc.push_back(std::move(a));
    }
    s.complete = true;
    return s;
}

ExtVal vadic_coeff_val(const FqPtr& F, const FqPoly& f, long long j, long long e,
                       const Budget& budget) {
    Place v = Place::at_v(f);
    long long E = lee_bound(j, F->q());
    FqPoly A = e < E ? power_sum(F, e, j, budget) : FqPoly::zero(F);
    FqPoly C = (e >= v.d && e - v.d < E) ? power_sum(F, e - v.d, j, budget) : FqPoly::zero(F);
    ExtVal va = nu_f(A, f);
    ExtVal vc = nu_f(C, f);
    ExtVal vb = vc.infinite ? ExtVal::inf() : ExtVal::of(j + vc.v); // nu of f^j * C
    if (va.infinite && vb.infinite) return ExtVal::inf();
    if (va.infinite) return vb;
    if (vb.infinite) return va;
    if (va.v != vb.v) return ExtVal::of(std::min(va.v, vb.v));
    // equal valuations: strip f^k from both sides and subtract exactly
    long long k = va.v;
    FqPoly A1 = A;
    for (long long i = 0; i < k; ++i) A1 = A1.divrem(f).first;
    FqPoly C1 = C;
    for (long long i = 0; i < vc.v; ++i) C1 = C1.divrem(f).first;
    // A - f^j C = f^k (A1 - C1) since k = j + nu(C)
    FqPoly D = A1 - C1;
    ExtVal vd = nu_f(D, f);
    if (vd.infinite) return ExtVal::inf();
    return ExtVal::of(k + vd.v);
}

} // namespace charzeta
