#pragma once

#include <optional>
#include <vector>

#include "charzeta/powersums.hpp"
#include "charzeta/rational.hpp"

namespace charzeta {

/// One supplied point (e, nu(a_e)): an exact valuation, a lower bound
/// (precision horizon), or an exactly-zero coefficient (+infinity, not a
/// hull point at all).
struct PolyPoint {
    long long idx = 0;
    enum class Kind { Exact, AtLeast, Zero } kind = Kind::Exact;
    Rat val;
};

/// What is known about coefficients beyond the supplied window.
///  - Complete: all further coefficients are exactly zero (polynomial).
///  - Floors:  nu(a_e) >= max(static_floor, p^(scale*(e-offset))) for
///             e > window_end (the exponential part applies from exp_from).
///  - Opaque:  nothing known; no segment touching the window end can be
///             certified.
struct TailSpec {
    enum class Mode { Complete, Floors, Opaque } mode = Mode::Complete;
    long long window_end = 0;
    long long static_floor = 0; // valid for all e > window_end (Floors mode)
    long long p = 2;
    long long scale = 1;    // exponential floor p^(scale*(e-offset))
    long long offset = 0;
    long long exp_from = 0; // exponential floor valid for e >= exp_from
};

struct Segment {
    Rat slope;
    long long length = 0;
};

/// Lower convex hull data of a coefficient-valuation stream. Only segments
/// that are provable from the supplied knowledge appear; everything else is
/// folded into undetermined_tail.
struct NewtonPolygon {
    std::vector<std::pair<long long, Rat>> vertices; // certified prefix, starts at (0, 0)
    std::vector<Segment> segments;                   // certified prefix, slopes strictly increasing
    bool undetermined_tail = false;
    bool complete = false; // every segment of the true polygon is listed
};

NewtonPolygon polygon(const std::vector<PolyPoint>& points, const TailSpec& tail);

/// Slope shift z -> zeta coordinates: every slope increases by j.
NewtonPolygon zeta_normalize(const NewtonPolygon& pg, long long j);

/// Total length of segments with slope <= j; UndeterminedRange when the
/// certified prefix cannot account for all of them.
long long count_zeroes(const NewtonPolygon& zeta_pg, const Rat& j);

/// Evaluation point of a zeta function: the Z_p coordinate plus, v-adically,
/// the residue of the point modulo q^d - 1 (derivable for exact integers).
struct ZetaPoint {
    PAdicApprox y;
    std::optional<long long> teich;

    static ZetaPoint integer(long long p, long long v) {
        return ZetaPoint{PAdicApprox::from_int(p, v), std::nullopt};
    }
};

/// Certified zeta-normalized Newton polygon of zeta_{A}(x, y) (at infinity)
/// or zeta_{A,v}(x, y) at the given evaluation point. Integer points go
/// through exact arithmetic; general points through integer approximants
/// with adaptive precision up to precision_cap digits, aiming for
/// want_segments certified segments.
NewtonPolygon zeta_polygon(const FqPtr& F, const Place& place, const ZetaPoint& y,
                           int want_segments, int precision_cap, const Budget& budget = {});

/// ~_n: do the zeta polygons at y1 and y2 share their first n segments?
/// Points without n segments are equivalent only to themselves.
bool equiv_n(const FqPtr& F, const Place& place, const ZetaPoint& y1, const ZetaPoint& y2,
             long long n, int precision_cap, const Budget& budget = {});

/// Least m <= search_cap such that every sampled y in y0 + p^m Z_p
/// (exhaustive over the next `window` digits) satisfies ~_n with y0.
/// Empirical witness, not a proof.
long long neighborhood_radius(const FqPtr& F, const Place& place, const ZetaPoint& y0,
                              long long n, long long search_cap, long long window,
                              int precision_cap, const Budget& budget = {});

/// Exact residue of an exact p-adic integer modulo m.
long long padic_mod_int(const PAdicApprox& y, long long m);

/// q^d - 1, the order of the cyclic component of S_v.
long long place_cyc(const FqPtr& F, const Place& place);

/// Polygon of a series from its own coefficient valuations (exact for
/// ExactPoly, windowed for truncated domains). ExactPoly at infinity is in
/// z-normalization (nu = -deg); apply zeta_normalize(j) for zeta slopes.
NewtonPolygon polygon_of_series(const XInvSeries& s);

} // namespace charzeta
