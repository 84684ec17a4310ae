#pragma once

#include <memory>

#include "charzeta/fqpoly.hpp"
#include "charzeta/padic.hpp"

namespace charzeta {

class ResidueRing;
using ResidueRingPtr = std::shared_ptr<const ResidueRing>;

/// F_q[T]/(f^N) for a monic irreducible f of degree d: the finite-precision
/// stand-in for the v-adic completion.
class ResidueRing : public std::enable_shared_from_this<ResidueRing> {
public:
    static ResidueRingPtr make(const FqPoly& f, int N);

    const FqPtr& field() const { return F_; }
    const FqPoly& f() const { return f_; }
    int d() const { return d_; }
    int N() const { return N_; }
    const FqPoly& fN() const { return fN_; }
    long long cyc_order() const { return cyc_; } // q^d - 1

private:
    ResidueRing() = default;
    FqPtr F_;
    FqPoly f_;
    int d_ = 0;
    int N_ = 0;
    FqPoly fN_;
    long long cyc_ = 0;
};

/// Element of F_q[T]/(f^N); representative degree < dN.
class ResidueElt {
public:
    ResidueElt() = default;
    ResidueElt(ResidueRingPtr R, const FqPoly& rep) : R_(std::move(R)), rep_(reduce(*R_, rep)) {}

    static ResidueElt zero(const ResidueRingPtr& R) {
        return ResidueElt(R, FqPoly::zero(R->field()));
    }
    static ResidueElt one(const ResidueRingPtr& R) {
        return ResidueElt(R, FqPoly::constant(R->field(), 1));
    }

    const ResidueRingPtr& ring() const { return R_; }
    const FqPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    ResidueElt operator+(const ResidueElt& o) const { return ResidueElt(R_, rep_ + o.rep_); }
    ResidueElt operator-(const ResidueElt& o) const { return ResidueElt(R_, rep_ - o.rep_); }
    ResidueElt operator-() const { return ResidueElt(R_, -rep_); }
    ResidueElt operator*(const ResidueElt& o) const { return ResidueElt(R_, rep_ * o.rep_); }
    ResidueElt pow(long long e) const;

    friend bool operator==(const ResidueElt& a, const ResidueElt& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const ResidueElt& a, const ResidueElt& b) { return !(a == b); }

    /// nu_f, certified when < N; AtLeast(N) on the zero class.
    struct Val {
        enum class Kind { Exact, AtLeast } kind;
        long long v;
    };
    Val valuation() const;

private:
    static FqPoly reduce(const ResidueRing& R, const FqPoly& x) {
        if (x.is_zero()) return x;
        return x.mod(R.fN());
    }
    ResidueRingPtr R_;
    FqPoly rep_;
};

/// Teichmueller representative of n mod f^N: the unique w with w = n mod f
/// and w^(q^d - 1) = 1, as the stationary limit of n^((q^d)^k).
/// NotCoprime when f | n.
ResidueElt teichmuller(const FqPoly& n, const ResidueRingPtr& R);

/// One-unit part <n>_v = n * w(n)^{-1} of n coprime to f.
ResidueElt one_unit_part_v(const FqPoly& n, const ResidueRingPtr& R);

/// u^y for u = 1 mod f, via (1+x)^(p^i) = 1 + x^(p^i); needs p^(known digits) >= N.
ResidueElt one_unit_pow_v(const ResidueElt& u, const PAdicApprox& y);

} // namespace charzeta
