#pragma once

#include <optional>
#include <vector>

#include "charzeta/powersums.hpp"

namespace charzeta {

/// The distinguished no-carry composition (x_1, ..., x_{k+1}) of j with
/// x_1..x_k positive and divisible by p-1, maximizing (x_{k+1}, ..., x_2)
/// lexicographically. Only defined over prime fields r = p.
struct GreedyElement {
    long long k = 0;
    long long j = 0;
    std::vector<long long> parts; // x_1 .. x_{k+1}
};

/// nullopt = Absence, which happens exactly when l(j) < k(p-1).
std::optional<GreedyElement> greedy_element(long long j, long long k, long long p);

/// deg_T S_k'(j) as the calibrated linear functional sum_{i=1}^{k} i*x_{i+1}
/// of the greedy element; nullopt = -infinity (the sum vanishes).
std::optional<long long> deg_power_sum(long long j, long long k, long long p);

/// Degree in x^{-1} of z(x,-j) for r = p: floor(l(j)/(p-1)).
long long deg_special(long long j, long long p);

struct CalibrationRow {
    long long p, k, j;
    std::optional<long long> formula_deg;
    std::optional<long long> brute_deg;
    bool match;
};

/// Formula-vs-brute-force sweep; every row must match before the formula is
/// trusted.
std::vector<CalibrationRow> calibrate_degrees(long long p, long long kmax, long long jmax,
                                              const Budget& budget = {});

} // namespace charzeta
