#pragma once

#include <optional>
#include <vector>

#include "charzeta/fqpoly.hpp"
#include "charzeta/padic.hpp"
#include "charzeta/residue.hpp"
#include "charzeta/trunc_laurent.hpp"

namespace charzeta {

/// Execution limits shared by the heavy operations. max_coeffs caps every
/// dense coefficient buffer (BudgetExceeded beyond it).
struct Budget {
    size_t max_coeffs = (size_t)1 << 26;
    int threads = 1;
};

/// A place of F_q(T): infinity or the finite place of a monic irreducible f.
struct Place {
    bool infty = true;
    FqPoly f; // set when !infty
    int d = 1;

    static Place at_infty() { return Place{}; }
    static Place at_v(const FqPoly& f) {
        if (!f.is_monic() || f.degree() < 1 || !f.is_irreducible())
            fail(Errc::NotIrreducible, "finite place needs a monic irreducible f");
        Place p;
        p.infty = false;
        p.f = f;
        p.d = (int)f.degree();
        return p;
    }
};

enum class CoeffDomain { ExactPoly, LaurentTrunc, ResidueTrunc };

/// Power series / polynomial in x^{-1}; coefficient e sits at index e.
/// Exactly one coefficient vector (matching `dom`) is populated.
/// `complete` marks series whose coefficients beyond the stored range are
/// exactly zero (polynomials with a proven vanishing bound).
struct XInvSeries {
    CoeffDomain dom = CoeffDomain::ExactPoly;
    Place place;
    std::optional<long long> exp_j;   // exact integer exponent (evaluation at -j)
    std::optional<PAdicApprox> eval_y; // evaluation point at infinity
    std::optional<SvExponent> exp_sv; // v-adic exponent
    std::vector<FqPoly> pc;
    std::vector<TruncLaurent> lc;
    std::vector<ResidueElt> rc;
    bool complete = false;

    size_t size() const {
        switch (dom) {
            case CoeffDomain::ExactPoly: return pc.size();
            case CoeffDomain::LaurentTrunc: return lc.size();
            case CoeffDomain::ResidueTrunc: return rc.size();
        }
        return 0;
    }
    /// Degree in x^{-1} of a complete exact polynomial series.
    long long xdeg() const;
};

/// Lee's vanishing bound: the smallest E with S_e'(j) = 0 guaranteed for all
/// e >= E, namely floor(l_r(j)/(r-1)) + 1.
long long lee_bound(long long j, long long r);

/// S_k'(j) = sum of n^j over the q^k monic n of degree k; exact brute force.
FqPoly power_sum(const FqPtr& F, long long k, long long j, const Budget& budget = {});

/// z(x,-j): exact special polynomial, coefficients S_e'(j) for e below the
/// Lee bound; complete.
XInvSeries special_poly(const FqPtr& F, long long j, const Budget& budget = {});

/// a_e(y) = sum over monic n of degree e of <n>^{-y} mod (1/T)^N.
/// y is the evaluation point (the exponent applied is -y).
TruncLaurent coeff_infty(const FqPtr& F, long long e, const PAdicApprox& y_eval, long long N,
                         const Budget& budget = {});

/// v-adic coefficient: sum over monic n of degree e coprime to f of
/// w(n)^teich * <n>_v^padic mod f^N. Takes the exponent directly.
ResidueElt coeff_vadic(const FqPtr& F, long long e, const SvExponent& yexp,
                       const ResidueRingPtr& R, const Budget& budget = {});

/// Exact v-adic series at the integer evaluation point -j (exponent +j):
/// coefficient e is S_e'(j) - f^j * S_{e-d}'(j); complete beyond lee+d.
XInvSeries vadic_series_exact(const FqPtr& F, const FqPoly& f, long long j,
                              const Budget& budget = {});

/// nu_f of the e-th coefficient of the exact v-adic series at -j, computed
/// without materializing f^j.
ExtVal vadic_coeff_val(const FqPtr& F, const FqPoly& f, long long j, long long e,
                       const Budget& budget = {});

} // namespace charzeta
