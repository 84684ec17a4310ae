#include "charzeta/padic.hpp"

#include <algorithm>

namespace charzeta {

PAdicApprox PAdicApprox::from_int(long long p, long long v) {
    if (p < 2) fail(Errc::SchemaError, "p must be >= 2");
    if (v >= 0) {
        std::vector<uint32_t> d;
        while (v) {
            d.push_back((uint32_t)(v % p));
            v /= p;
        }
        return PAdicApprox(p, std::move(d), Tail::Zero);
    }
    // -x = complement expansion with all-(p-1) tail
    long long x = -v;
    std::vector<uint32_t> d;
    while (x) {
        d.push_back((uint32_t)(x % p));
        x /= p;
    }
    // negate: first nonzero digit k: p - d_k; afterwards p-1-d_i
    size_t k = 0;
    while (k < d.size() && d[k] == 0) ++k;
    if (k < d.size()) {
        d[k] = (uint32_t)(p - d[k]);
        for (size_t i = k + 1; i < d.size(); ++i) d[i] = (uint32_t)(p - 1 - d[i]);
    }
    return PAdicApprox(p, std::move(d), Tail::AllPMinus1);
}

PAdicApprox PAdicApprox::parse(long long p, const std::string& s) {
    if (s.empty()) fail(Errc::UsageError, "empty p-adic literal");
    if (s.find('.') == std::string::npos && s.back() != '*') {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) fail(Errc::UsageError, "bad integer literal '" + s + "'");
        return from_int(p, v);
    }
    std::string body = s;
    Tail tail = Tail::Zero;
    if (!body.empty() && body.back() == '*') {
        tail = Tail::AllPMinus1;
        body.pop_back();
        if (!body.empty() && body.back() == '.') body.pop_back();
    }
    std::vector<uint32_t> d;
    size_t start = 0;
    while (start <= body.size() && !body.empty()) {
        size_t dot = body.find('.', start);
        std::string tok = body.substr(start, dot == std::string::npos ? dot : dot - start);
        if (tok.empty()) fail(Errc::UsageError, "bad digit string '" + s + "'");
        long long v = std::stoll(tok);
        if (v < 0 || v >= p) fail(Errc::UsageError, "digit out of range in '" + s + "'");
        d.push_back((uint32_t)v);
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return PAdicApprox(p, std::move(d), tail);
}

std::optional<long long> PAdicApprox::to_int() const {
    if (tail_ == Tail::Unknown) return std::nullopt;
    if (d_.size() > 40) return std::nullopt;
    if (tail_ == Tail::Zero) {
        long long v = 0, pw = 1;
        for (size_t i = 0; i < d_.size(); ++i) {
            if (pw > (long long)4e17) return std::nullopt;
            v += (long long)d_[i] * pw;
            pw *= p_;
        }
        return v;
    }
    // value = stored - p^M + (-p^M tail): equals -( neg value )
    auto n = neg().to_int();
    if (!n) return std::nullopt;
    return -*n;
}

PAdicApprox PAdicApprox::neg() const {
    if (is_zero()) return *this;
    std::vector<uint32_t> d(d_);
    // ensure at least one stored digit to anchor the complement
    if (d.empty()) d.push_back(digit(0));
    size_t k = 0;
    while (k < d.size() && d[k] == 0) ++k;
    if (k == d.size()) {
        // stored prefix all zero
        if (tail_ == Tail::Zero) return PAdicApprox(p_, {}, Tail::Zero);
        if (tail_ == Tail::Unknown)
            return PAdicApprox(p_, std::move(d), Tail::Unknown); // -y == 0 mod p^M
        // tail AllPMinus1 with zero prefix: value = -p^M; negation = +p^M
        std::vector<uint32_t> r(d.size(), 0);
        r.push_back(1);
        // r has more digits than known... tail AllPMinus1 is exact, so fine
        return PAdicApprox(p_, std::move(r), Tail::Zero);
    }
    d[k] = (uint32_t)(p_ - d[k]);
    for (size_t i = k + 1; i < d.size(); ++i) d[i] = (uint32_t)(p_ - 1 - d[i]);
    Tail t = tail_;
    if (tail_ == Tail::Zero) t = Tail::AllPMinus1;
    else if (tail_ == Tail::AllPMinus1) t = Tail::Zero;
    return PAdicApprox(p_, std::move(d), t);
}

PAdicApprox PAdicApprox::add(const PAdicApprox& o) const {
    if (p_ != o.p_) fail(Errc::SchemaError, "p mismatch in p-adic addition");
    auto a_int = to_int();
    auto b_int = o.to_int();
    if (a_int && b_int && std::abs(*a_int) < (long long)2e17 && std::abs(*b_int) < (long long)2e17)
        return from_int(p_, *a_int + *b_int);
    size_t n = std::min(known_digits(), o.known_digits());
    bool exact = is_exact_integer() && o.is_exact_integer();
    size_t len = exact ? std::max(d_.size(), o.d_.size()) + 2 : n;
    std::vector<uint32_t> r;
    long long carry = 0;
    for (size_t i = 0; i < len; ++i) {
        long long s = (long long)digit(i) + o.digit(i) + carry;
        r.push_back((uint32_t)(s % p_));
        carry = s / p_;
    }
    if (exact) {
        // tails: Zero+Zero -> Zero (carry 0); All+All -> All (carry settles 1);
        // Zero+All -> depends on carry
        bool aAll = tail_ == Tail::AllPMinus1, bAll = o.tail_ == Tail::AllPMinus1;
        Tail t;
        if (!aAll && !bAll) t = Tail::Zero;
        else if (aAll && bAll) t = Tail::AllPMinus1;
        else t = (carry == 1) ? Tail::Zero : Tail::AllPMinus1;
        return PAdicApprox(p_, std::move(r), t);
    }
    return PAdicApprox(p_, std::move(r), Tail::Unknown);
}

PAdicApprox PAdicApprox::mul(const PAdicApprox& o) const {
    if (p_ != o.p_) fail(Errc::SchemaError, "p mismatch in p-adic multiplication");
    auto a_int = to_int();
    auto b_int = o.to_int();
    if (a_int && b_int && std::abs(*a_int) < (1LL << 31) && std::abs(*b_int) < (1LL << 31))
        return from_int(p_, *a_int * *b_int);
    size_t n = std::min(known_digits(), o.known_digits());
    if (n == SIZE_MAX) n = d_.size() + o.d_.size() + 64; // exact but huge: truncate generously
    std::vector<uint32_t> r(n, 0);
    std::vector<unsigned long long> acc(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (!digit_known(i)) break;
        uint32_t di = digit(i);
        if (!di) continue;
        for (size_t j = 0; i + j < n; ++j) acc[i + j] += (unsigned long long)di * o.digit(j);
    }
    unsigned long long carry = 0;
    for (size_t i = 0; i < n; ++i) {
        unsigned long long s = acc[i] + carry;
        r[i] = (uint32_t)(s % (unsigned long long)p_);
        carry = s / (unsigned long long)p_;
    }
    return PAdicApprox(p_, std::move(r), Tail::Unknown);
}

long long PAdicApprox::mod_pow(size_t M) const {
    long long v = 0, pw = 1;
    for (size_t i = 0; i < M; ++i) {
        v += (long long)digit(i) * pw;
        if (i + 1 < M) {
            if (pw > (long long)4e17 / p_) fail(Errc::BudgetExceeded, "p^M too large");
            pw *= p_;
        }
    }
    return v;
}

bool PAdicApprox::same_as(const PAdicApprox& o) const {
    if (p_ != o.p_) return false;
    size_t n = std::min(known_digits(), o.known_digits());
    if (n == SIZE_MAX) {
        // both exact
        if (tail_ != o.tail_) return false;
        size_t len = std::max(d_.size(), o.d_.size());
        for (size_t i = 0; i < len; ++i)
            if (digit(i) != o.digit(i)) return false;
        return true;
    }
    for (size_t i = 0; i < n; ++i)
        if (digit(i) != o.digit(i)) return false;
    return true;
}

std::string PAdicApprox::str() const {
    std::string s;
    for (size_t i = 0; i < d_.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(d_[i]);
    }
    if (tail_ == Tail::AllPMinus1) s += s.empty() ? "*" : ".*";
    else if (tail_ == Tail::Unknown) s += s.empty() ? "?" : ".?";
    else if (s.empty()) s = "0";
    return s;
}

long long digit_sum(long long j, long long r) {
    if (j < 0) fail(Errc::SchemaError, "digit_sum of a negative integer");
    if (r < 2) fail(Errc::SchemaError, "base must be >= 2");
    long long s = 0;
    while (j) {
        s += j % r;
        j /= r;
    }
    return s;
}

std::optional<long long> digit_sum_padic(const PAdicApprox& y) {
    if (y.tail() != PAdicApprox::Tail::Zero) return std::nullopt; // l(y) = infinity
    long long s = 0;
    for (uint32_t c : y.stored_digits()) s += c;
    return s;
}

long long y_trunc(const PAdicApprox& y, long long n) {
    if (n < 0) fail(Errc::SchemaError, "negative truncation index");
    if (n == 0) return 0;
    const long long p = y.p();
    const long long target = n * (p - 1);
    PAdicApprox m = y.neg(); // digits of -y
    long long have = 0, val = 0, pw = 1;
    for (size_t i = 0;; ++i) {
        if (!m.digit_known(i)) {
            // tail Unknown: could go either way
            fail(Errc::InsufficientDigits, "y too short to determine y_" + std::to_string(n));
        }
        if (m.tail() == PAdicApprox::Tail::Zero && i >= m.stored()) {
            // digits exhausted: digit-sum deficit
            fail(Errc::ClassNotOpen,
                 "l(-y) = " + std::to_string(have) + " < n(p-1) = " + std::to_string(target));
        }
        long long take = std::min<long long>(m.digit(i), target - have);
        if (pw > (long long)4e17 / p && take > 0)
            fail(Errc::BudgetExceeded, "y_n exceeds int64");
        val += take * pw;
        have += take;
        if (have == target) return val;
        if (pw > (long long)4e17 / p)
            fail(Errc::BudgetExceeded, "y_n exceeds int64");
        pw *= p;
    }
}

long long integer_approximant(const PAdicApprox& y, size_t M,
                              std::optional<std::pair<long long, long long>> h) {
    // smallest positive j with -j == y mod p^M (j == (-y) mod p^M)
    if (y.known_digits() != SIZE_MAX && y.known_digits() < M)
        fail(Errc::InsufficientDigits, "approximant needs M known digits");
    PAdicApprox m = y.neg();
    long long pM = 1;
    for (size_t i = 0; i < M; ++i) {
        if (pM > (long long)4e17 / y.p()) fail(Errc::BudgetExceeded, "p^M too large");
        pM *= y.p();
    }
    long long j0 = m.mod_pow(M); // in [0, p^M)
    if (!h) {
        long long j = j0 == 0 ? pM : j0;
        return j;
    }
    auto [res, mod] = *h;
    res = ((res % mod) + mod) % mod;
    // search j = j0 + k*pM, smallest positive with j == res mod mod
    for (long long k = (j0 == 0 ? 1 : 0); k <= mod + 1; ++k) {
        long long j = j0 + k * pM;
        if (j > 0 && j % mod == res) return j;
    }
    fail(Errc::InsufficientDigits, "no approximant found (moduli not coprime?)");
}

} // namespace charzeta
