#include "charzeta/degrees.hpp"

namespace charzeta {

namespace {

void check_prime(long long p) {
    if (p < 2) fail(Errc::NotPrimeField, "r must be a prime");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            fail(Errc::NotPrimeField,
                 "r = " + std::to_string(p) + " is not prime; use the brute-force route");
}

std::vector<long long> digits_of(long long j, long long p) {
    std::vector<long long> d;
    while (j) {
        d.push_back(j % p);
        j /= p;
    }
    return d;
}

// take digit mass `mass` from the highest positions of `avail` (digits may
// split); returns the value taken and decrements avail
long long take_from_top(std::vector<long long>& avail, long long mass, long long p) {
    long long val = 0;
    for (long long i = (long long)avail.size() - 1; i >= 0 && mass > 0; --i) {
        long long t = std::min(avail[(size_t)i], mass);
        if (t) {
            long long pw = 1;
            for (long long s = 0; s < i; ++s) pw *= p;
            val += t * pw;
            avail[(size_t)i] -= t;
            mass -= t;
        }
    }
    return val;
}

} // namespace

std::optional<GreedyElement> greedy_element(long long j, long long k, long long p) {
    check_prime(p);
    if (j < 0 || k < 0) fail(Errc::SchemaError, "greedy_element needs j, k >= 0");
    long long l = digit_sum(j, p);
    if (l < k * (p - 1)) return std::nullopt;
    std::vector<long long> avail = digits_of(j, p);
    GreedyElement g;
    g.k = k;
    g.j = j;
    g.parts.assign((size_t)k + 1, 0);
    // x_{k+1} takes everything above the k(p-1) reserved for x_1..x_k, from
    // the top; then x_k, ..., x_1 take p-1 each, still from the top.
    g.parts[(size_t)k] = take_from_top(avail, l - k * (p - 1), p);
    for (long long i = k - 1; i >= 0; --i) g.parts[(size_t)i] = take_from_top(avail, p - 1, p);
    return g;
}

std::optional<long long> deg_power_sum(long long j, long long k, long long p) {
    auto g = greedy_element(j, k, p);
    if (!g) return std::nullopt;
    long long deg = 0;
    for (long long i = 1; i <= k; ++i) deg += i * g->parts[(size_t)i];
    return deg;
}

long long deg_special(long long j, long long p) {
    check_prime(p);
    if (j < 0) fail(Errc::SchemaError, "deg_special needs j >= 0");
    return digit_sum(j, p) / (p - 1);
}

std::vector<CalibrationRow> calibrate_degrees(long long p, long long kmax, long long jmax,
                                              const Budget& budget) {
    check_prime(p);
    auto F = Fq::make(p, 1);
    std::vector<CalibrationRow> rows;
    for (long long k = 0; k <= kmax; ++k) {
        for (long long j = 0; j <= jmax; ++j) {
            CalibrationRow row;
            row.p = p;
            row.k = k;
            row.j = j;
            row.formula_deg = deg_power_sum(j, k, p);
            FqPoly s = power_sum(F, k, j, budget);
            row.brute_deg = s.is_zero() ? std::nullopt : std::optional<long long>(s.degree());
            row.match = row.formula_deg == row.brute_deg;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace charzeta
