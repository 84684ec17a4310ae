#include "charzeta/residue.hpp"

namespace charzeta {

ResidueRingPtr ResidueRing::make(const FqPoly& f, int N) {
    if (N < 1) fail(Errc::SchemaError, "residue precision must be >= 1");
    if (!f.is_monic() || f.is_zero() || f.degree() < 1 || !f.is_irreducible())
        fail(Errc::NotIrreducible, "residue ring needs a monic irreducible f");
    auto R = std::shared_ptr<ResidueRing>(new ResidueRing());
    R->F_ = f.field();
    R->f_ = f;
    R->d_ = (int)f.degree();
    R->N_ = N;
    FqPoly fn = FqPoly::constant(f.field(), 1);
    for (int i = 0; i < N; ++i) fn = fn * f;
    R->fN_ = std::move(fn);
    long long cyc = 1;
    for (int i = 0; i < R->d_; ++i) {
        cyc *= R->F_->q();
        if (cyc > (1LL << 40)) fail(Errc::BudgetExceeded, "q^d too large");
    }
    R->cyc_ = cyc - 1;
    return R;
}

ResidueElt ResidueElt::pow(long long e) const {
    if (e < 0) {
        // only needed for units; invert via order of (A/f^N)^*
        // |group| = q^(d(N-1)) * (q^d - 1)
        long long ord = R_->cyc_order() + 1; // q^d
        // compute q^(d(N-1)) carefully
        __int128 units = R_->cyc_order();
        for (int i = 0; i < R_->N() - 1; ++i) {
            units *= ord;
            if (units > (__int128)1 << 100) fail(Errc::BudgetExceeded, "unit group too large");
        }
        long long m = (long long)(units);
        long long ee = ((-e) % m);
        ee = (m - ee) % m;
        return pow(ee);
    }
    ResidueElt acc = one(R_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

ResidueElt::Val ResidueElt::valuation() const {
    if (rep_.is_zero()) return {Val::Kind::AtLeast, R_->N()};
    long long k = 0;
    FqPoly cur = rep_;
    while (true) {
        auto [q, r] = cur.divrem(R_->f());
        if (!r.is_zero()) return {Val::Kind::Exact, k};
        ++k;
        cur = std::move(q);
        if (cur.is_zero()) return {Val::Kind::Exact, k};
    }
}

ResidueElt teichmuller(const FqPoly& n, const ResidueRingPtr& R) {
    FqPoly r = n.mod(R->f());
    if (r.is_zero()) fail(Errc::NotCoprime, "teichmuller of a multiple of f");
    ResidueElt x(R, n);
    long long qd = R->cyc_order() + 1;
    for (int iters = 0; iters < 64; ++iters) {
        ResidueElt next = x.pow(qd);
        if (next == x) return x;
        x = next;
    }
    fail(Errc::SchemaError, "teichmuller iteration failed to stabilize");
}

ResidueElt one_unit_part_v(const FqPoly& n, const ResidueRingPtr& R) {
    ResidueElt w = teichmuller(n, R);
    ResidueElt winv = w.pow(R->cyc_order() - 1); // w^(q^d-1) = 1
    return ResidueElt(R, n) * winv;
}

ResidueElt one_unit_pow_v(const ResidueElt& u, const PAdicApprox& y) {
    const ResidueRingPtr& R = u.ring();
    const FqPtr& F = R->field();
    const long long p = F->p();
    ResidueElt diff = u - ResidueElt::one(R);
    if (!diff.is_zero() && diff.valuation().v < 1)
        fail(Errc::SchemaError, "one_unit_pow_v argument is not congruent to 1 mod f");
    size_t need = 0;
    long long pw = 1;
    while (pw < R->N()) {
        pw *= p;
        ++need;
    }
    if (y.known_digits() != SIZE_MAX && y.known_digits() < need)
        fail(Errc::InsufficientDigits, "exponent digits insufficient for f-adic precision");
    ResidueElt acc = ResidueElt::one(R);
    long long pi = 1;
    for (size_t i = 0; pi < R->N(); ++i, pi *= p) {
        uint32_t ci = y.digit(i);
        if (ci) {
            // u^(p^i) = 1 + diff^(p^i) via polynomial Frobenius then reduction
            ResidueElt upi = ResidueElt::one(R) + ResidueElt(R, diff.rep().frobenius_power((long long)i));
            for (uint32_t t = 0; t < ci; ++t) acc = acc * upi;
        }
    }
    return acc;
}

} // namespace charzeta
