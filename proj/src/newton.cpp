#include "charzeta/newton.hpp"

#include <algorithm>

namespace charzeta {

namespace {

struct HPoint {
    long long x;
    Rat y;
};

// slope(a,b) < slope(b,c) test via cross product, exact
bool turns_up(const HPoint& a, const HPoint& b, const HPoint& c) {
    // (b.y - a.y)/(b.x - a.x) < (c.y - b.y)/(c.x - b.x)
    Rat lhs = (b.y - a.y) * Rat(c.x - b.x);
    Rat rhs = (c.y - b.y) * Rat(b.x - a.x);
    return lhs < rhs;
}

std::vector<HPoint> lower_hull(std::vector<HPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const HPoint& a, const HPoint& b) { return a.x < b.x; });
    std::vector<HPoint> h;
    for (const auto& p : pts) {
        // non-strict pop merges collinear points into maximal segments
        while (h.size() >= 2 && !turns_up(h[h.size() - 2], h.back(), p)) h.pop_back();
        h.push_back(p);
    }
    return h;
}

std::vector<Segment> hull_segments(const std::vector<HPoint>& h) {
    std::vector<Segment> s;
    for (size_t i = 1; i < h.size(); ++i)
        s.push_back({(h[i].y - h[i - 1].y) / Rat(h[i].x - h[i - 1].x), h[i].x - h[i - 1].x});
    return s;
}

// saturating p^(scale*(e-offset))
long long exp_floor_at(const TailSpec& t, long long e) {
    long long ex = t.scale * (e - t.offset);
    if (ex <= 0) return 0;
    long long v = 1;
    for (long long i = 0; i < ex; ++i) {
        if (v > (long long)2e17 / t.p) return (long long)4e17;
        v *= t.p;
    }
    return v;
}

// is floor(e) > line(e) for all e > window_end? line(e) = y0 + slope*(e-x0)
bool tail_clears_line(const TailSpec& t, const HPoint& right_vertex, const Rat& slope) {
    if (t.mode == TailSpec::Mode::Complete) return true;
    if (t.mode == TailSpec::Mode::Opaque) return false;
    for (long long e = t.window_end + 1; e <= t.window_end + 8192; ++e) {
        long long ef = exp_floor_at(t, e);
        long long fl = std::max(t.static_floor, e >= t.exp_from ? ef : 0);
        Rat line = right_vertex.y + slope * Rat(e - right_vertex.x);
        if (Rat(fl) <= line) return false;
        // once the exponential part alone clears the line and its per-step
        // increment beats the slope, induction finishes the check
        if (e >= t.exp_from && Rat(ef) > line) {
            long long step = exp_floor_at(t, e + 1) - ef;
            if (Rat(step) >= slope) return true;
        }
    }
    return false; // could not establish within the scan cap
}

} // namespace

NewtonPolygon polygon(const std::vector<PolyPoint>& points, const TailSpec& tail) {
    bool unit_ok = false;
    for (const auto& p : points)
        if (p.idx == 0) unit_ok = (p.kind == PolyPoint::Kind::Exact && p.val == Rat(0));
    if (!unit_ok) fail(Errc::NonUnitLeading, "polygon needs index 0 with exact valuation 0");

    std::vector<HPoint> exact, withb;
    for (const auto& p : points) {
        if (p.kind == PolyPoint::Kind::Zero) continue; // +infinity: not a hull point
        if (p.kind == PolyPoint::Kind::Exact) exact.push_back({p.idx, p.val});
        withb.push_back({p.idx, p.val});
    }
    auto hk = lower_hull(exact);
    auto hl = lower_hull(withb);
    auto sk = hull_segments(hk);
    auto sl = hull_segments(hl);

    // common (slope, length) prefix; vertices then agree cumulatively
    size_t common = 0;
    while (common < sk.size() && common < sl.size() && sk[common].slope == sl[common].slope &&
           sk[common].length == sl[common].length)
        ++common;

    NewtonPolygon pg;
    pg.vertices.push_back({hk[0].x, hk[0].y});
    size_t cert = 0;
    for (size_t i = 0; i < common; ++i) {
        const HPoint& rv = hk[i + 1];
        if (!tail_clears_line(tail, rv, sk[i].slope)) break;
        pg.segments.push_back(sk[i]);
        pg.vertices.push_back({rv.x, rv.y});
        cert = i + 1;
    }
    bool all_of_low = (cert == sl.size()) && (cert == sk.size());
    pg.complete = tail.mode == TailSpec::Mode::Complete && all_of_low;
    pg.undetermined_tail = !pg.complete;
    return pg;
}

NewtonPolygon zeta_normalize(const NewtonPolygon& pg, long long j) {
    NewtonPolygon r = pg;
    for (auto& v : r.vertices) v.second = v.second + Rat(j) * Rat(v.first);
    for (auto& s : r.segments) s.slope = s.slope + Rat(j);
    return r;
}

long long count_zeroes(const NewtonPolygon& pg, const Rat& j) {
    long long total = 0;
    bool saw_above = false;
    for (const auto& s : pg.segments) {
        if (s.slope <= j) total += s.length;
        else saw_above = true;
    }
    if (!pg.complete && !saw_above)
        fail(Errc::UndeterminedRange,
             "certified segments do not reach past slope " + j.str());
    return total;
}

long long padic_mod_int(const PAdicApprox& y, long long m) {
    if (!y.is_exact_integer()) fail(Errc::InsufficientDigits, "residue of a truncated p-adic");
    long long acc = 0, pw = 1 % m;
    for (size_t i = 0; i < y.stored(); ++i) {
        acc = (acc + (long long)(y.stored_digits()[i] % m) * pw) % m;
        pw = (pw * (y.p() % m)) % m;
    }
    if (y.tail() == PAdicApprox::Tail::AllPMinus1) {
        // value = stored_prefix - p^(stored)
        acc = ((acc - pw) % m + m) % m;
    }
    return acc;
}

namespace {

// exact complete polygon of zeta at the integer evaluation point -j
NewtonPolygon infty_polygon_exact(const FqPtr& F, long long j, const Budget& budget) {
    long long E = lee_bound(j, F->q());
    std::vector<PolyPoint> pts;
    for (long long e = 0; e < E; ++e) {
        FqPoly S = power_sum(F, e, j, budget);
        if (S.is_zero()) pts.push_back({e, PolyPoint::Kind::Zero, Rat(0)});
        else pts.push_back({e, PolyPoint::Kind::Exact, Rat(e * j - S.degree())});
    }
    TailSpec t;
    t.mode = TailSpec::Mode::Complete;
    return polygon(pts, t);
}

NewtonPolygon vadic_polygon_exact(const FqPtr& F, const Place& place, long long j,
                                  const Budget& budget) {
    long long E = lee_bound(j, F->q()) + place.d;
    std::vector<PolyPoint> pts;
    for (long long e = 0; e < E; ++e) {
        ExtVal v = vadic_coeff_val(F, place.f, j, e, budget);
        if (v.infinite) pts.push_back({e, PolyPoint::Kind::Zero, Rat(0)});
        else pts.push_back({e, PolyPoint::Kind::Exact, Rat(v.v)});
    }
    TailSpec t;
    t.mode = TailSpec::Mode::Complete;
    return polygon(pts, t);
}

long long pow_ll(long long b, long long e) {
    long long v = 1;
    for (long long i = 0; i < e; ++i) {
        if (v > (long long)2e17 / b) fail(Errc::BudgetExceeded, "p^M overflow");
        v *= b;
    }
    return v;
}

} // namespace

long long place_cyc(const FqPtr& F, const Place& place) {
    if (place.infty) fail(Errc::SchemaError, "cyclic component only exists at finite places");
    long long cyc = 1;
    for (int i = 0; i < place.d; ++i) {
        cyc *= F->q();
        if (cyc > (1LL << 40)) fail(Errc::BudgetExceeded, "q^d too large");
    }
    return cyc - 1;
}

NewtonPolygon polygon_of_series(const XInvSeries& s) {
    std::vector<PolyPoint> pts;
    TailSpec t;
    t.mode = s.complete ? TailSpec::Mode::Complete : TailSpec::Mode::Opaque;
    t.window_end = (long long)s.size() - 1;
    switch (s.dom) {
        case CoeffDomain::ExactPoly:
            for (size_t e = 0; e < s.pc.size(); ++e) {
                if (s.place.infty) {
                    if (s.pc[e].is_zero()) pts.push_back({(long long)e, PolyPoint::Kind::Zero, Rat(0)});
                    else pts.push_back({(long long)e, PolyPoint::Kind::Exact, Rat(-s.pc[e].degree())});
                } else {
                    ExtVal v = nu_f(s.pc[e], s.place.f);
                    if (v.infinite) pts.push_back({(long long)e, PolyPoint::Kind::Zero, Rat(0)});
                    else pts.push_back({(long long)e, PolyPoint::Kind::Exact, Rat(v.v)});
                }
            }
            break;
        case CoeffDomain::ResidueTrunc:
            for (size_t e = 0; e < s.rc.size(); ++e) {
                auto v = s.rc[e].valuation();
                // a zero residue only certifies nu >= N, never exact zero
                if (v.kind == ResidueElt::Val::Kind::Exact)
                    pts.push_back({(long long)e, PolyPoint::Kind::Exact, Rat(v.v)});
                else
                    pts.push_back({(long long)e, PolyPoint::Kind::AtLeast, Rat(v.v)});
            }
            break;
        case CoeffDomain::LaurentTrunc:
            for (size_t e = 0; e < s.lc.size(); ++e) {
                auto v = s.lc[e].valuation();
                if (v.kind == LaurentVal::Kind::Exact)
                    pts.push_back({(long long)e, PolyPoint::Kind::Exact, Rat(v.v)});
                else if (v.kind == LaurentVal::Kind::Infinite)
                    pts.push_back({(long long)e, PolyPoint::Kind::Zero, Rat(0)});
                else
                    pts.push_back({(long long)e, PolyPoint::Kind::AtLeast, Rat(v.v)});
            }
            break;
    }
    return polygon(pts, t);
}

NewtonPolygon zeta_polygon(const FqPtr& F, const Place& place, const ZetaPoint& y,
                           int want_segments, int precision_cap, const Budget& budget) {
    const long long p = F->p();
    if (y.y.p() != p) fail(Errc::SchemaError, "evaluation point has the wrong p");

    // exact integer evaluation point -j with j >= 0: complete polygon
    if (y.y.is_exact_integer()) {
        auto neg = y.y.neg();
        if (neg.tail() == PAdicApprox::Tail::Zero) {
            auto jv = neg.to_int();
            if (jv) {
                if (!place.infty && y.teich &&
                    ((*y.teich % place_cyc(F, place)) + place_cyc(F, place)) % place_cyc(F, place) !=
                        padic_mod_int(y.y, place_cyc(F, place)))
                    fail(Errc::SchemaError, "teich residue inconsistent with the integer point");
                return place.infty ? infty_polygon_exact(F, *jv, budget)
                                   : vadic_polygon_exact(F, place, *jv, budget);
            }
        }
    }

    // approximant route
    long long cyc = place.infty ? 0 : place_cyc(F, place);
    std::optional<long long> teich;
    if (!place.infty) {
        if (y.teich) teich = ((*y.teich % cyc) + cyc) % cyc;
        else if (y.y.is_exact_integer()) teich = padic_mod_int(y.y, cyc);
        else fail(Errc::InsufficientDigits, "v-adic evaluation needs the teich residue");
    }

    NewtonPolygon best;
    for (int M = 2; M <= precision_cap; ++M) {
        if (y.y.known_digits() != SIZE_MAX && (size_t)M > y.y.known_digits()) break;
        long long pM = pow_ll(p, M);
        long long j = place.infty
                          ? integer_approximant(y.y, (size_t)M)
                          : integer_approximant(y.y, (size_t)M, std::pair{-*teich, cyc});
        std::vector<PolyPoint> pts;
        long long E;
        TailSpec t;
        t.mode = TailSpec::Mode::Floors;
        t.p = p;
        t.static_floor = pM;
        if (place.infty) {
            E = lee_bound(j, F->q());
            for (long long e = 0; e < E; ++e) {
                FqPoly S = power_sum(F, e, j, budget);
                long long v = S.is_zero() ? pM : e * j - S.degree();
                if (!S.is_zero() && v < pM) pts.push_back({e, PolyPoint::Kind::Exact, Rat(v)});
                else pts.push_back({e, PolyPoint::Kind::AtLeast, Rat(pM)});
            }
            t.scale = F->m();
            t.offset = 2;
            t.exp_from = 3;
        } else {
            E = lee_bound(j, F->q()) + place.d;
            for (long long e = 0; e < E; ++e) {
                ExtVal v = vadic_coeff_val(F, place.f, j, e, budget);
                if (!v.infinite && v.v < pM) pts.push_back({e, PolyPoint::Kind::Exact, Rat(v.v)});
                else pts.push_back({e, PolyPoint::Kind::AtLeast, Rat(pM)});
            }
            t.scale = F->m();
            t.offset = 2 * place.d + 2;
            t.exp_from = 2 * place.d + 3;
        }
        t.window_end = E - 1;
        NewtonPolygon pg = polygon(pts, t);
        if ((long long)pg.segments.size() > (long long)best.segments.size()) best = pg;
        if ((long long)best.segments.size() >= want_segments) return best;
    }
    return best;
}

bool equiv_n(const FqPtr& F, const Place& place, const ZetaPoint& y1, const ZetaPoint& y2,
             long long n, int precision_cap, const Budget& budget) {
    if (n < 0) fail(Errc::SchemaError, "equiv_n needs n >= 0");
    if (n == 0) return true;
    auto p1 = zeta_polygon(F, place, y1, (int)n, precision_cap, budget);
    auto p2 = zeta_polygon(F, place, y2, (int)n, precision_cap, budget);
    auto enough = [&](const NewtonPolygon& pg) { return (long long)pg.segments.size() >= n; };
    auto points_equal = [&]() {
        bool same_p = y1.y.same_as(y2.y);
        if (place.infty) return same_p;
        long long cyc = place_cyc(F, place);
        long long t1 = y1.teich ? ((*y1.teich % cyc) + cyc) % cyc : padic_mod_int(y1.y, cyc);
        long long t2 = y2.teich ? ((*y2.teich % cyc) + cyc) % cyc : padic_mod_int(y2.y, cyc);
        return same_p && t1 == t2;
    };
    if (!enough(p1) || !enough(p2)) {
        // a point with fewer than n finite slopes is equivalent only to itself
        if ((p1.complete && !enough(p1)) || (p2.complete && !enough(p2))) return points_equal();
        fail(Errc::UndeterminedRange, "could not certify " + std::to_string(n) +
                                          " segments at the given precision");
    }
    for (long long i = 0; i < n; ++i)
        if (!(p1.segments[(size_t)i].slope == p2.segments[(size_t)i].slope &&
              p1.segments[(size_t)i].length == p2.segments[(size_t)i].length))
            return false;
    return true;
}

long long neighborhood_radius(const FqPtr& F, const Place& place, const ZetaPoint& y0,
                              long long n, long long search_cap, long long window,
                              int precision_cap, const Budget& budget) {
    if (n == 0) return 0;
    const long long p = F->p();
    for (long long m = 0; m <= search_cap; ++m) {
        long long pm = pow_ll(p, m);
        long long span = pow_ll(p, window);
        bool all_ok = true;
        for (long long t = 0; t < span && all_ok; ++t) {
            ZetaPoint y{y0.y.add_int(pm * t), y0.teich};
            if (!place.infty) {
                long long cyc = place_cyc(F, place);
                long long t0 = y0.teich ? *y0.teich : padic_mod_int(y0.y, cyc);
                long long shift = (long long)(((__int128)(pm % cyc) * (t % cyc)) % cyc);
                y.teich = ((t0 + shift) % cyc + cyc) % cyc;
            }
            all_ok = equiv_n(F, place, y0, y, n, precision_cap, budget);
        }
        if (all_ok) return m;
    }
    fail(Errc::CapExceeded, "no invariant neighborhood found within the search cap");
}

} // namespace charzeta
