#pragma once

// Exact arithmetic for numbers of the form (a + b*sqrt(d)) / c, enough
// to evaluate floor(n*alpha + rho) without floating point. Rationals are
// the b = 0 case.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "wordlab/word.hpp"

namespace wordlab {

class QuadIrrational {
public:
    QuadIrrational() = default;

    static QuadIrrational rational(long long p, long long q) {
        return QuadIrrational(p, 0, q, 0);
    }

    static QuadIrrational surd(long long a, long long b, long long c, long long d) {
        if (d < 0) throw std::domain_error("radicand must be nonnegative");
        long long rt = static_cast<long long>(std::sqrt(static_cast<double>(d)));
        while (rt * rt > d) --rt;
        while ((rt + 1) * (rt + 1) <= d) ++rt;
        if (rt * rt == d) return QuadIrrational(a + b * rt, 0, c, 0);  // d is a square
        return QuadIrrational(a, b, c, d);
    }

    QuadIrrational(long long a, long long b, long long c, long long d)
        : a_(a), b_(b), c_(c), d_(d) {
        if (c_ == 0) throw std::domain_error("zero denominator");
        if (c_ < 0) { a_ = -a_; b_ = -b_; c_ = -c_; }
        if (b_ == 0) d_ = 0;
        long long g = std::gcd(std::gcd(std::abs(a_), std::abs(b_)), c_);
        if (g > 1) { a_ /= g; b_ /= g; c_ /= g; }
    }

    long long a() const { return a_; }
    long long b() const { return b_; }
    long long c() const { return c_; }
    long long d() const { return d_; }

    bool is_rational() const { return b_ == 0; }

    friend QuadIrrational operator+(const QuadIrrational& x, const QuadIrrational& y) {
        long long d = unify_radicand(x, y);
        check_range(x.a_, y.c_);
        check_range(y.a_, x.c_);
        check_range(x.b_, y.c_);
        check_range(y.b_, x.c_);
        return QuadIrrational(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_,
                              x.c_ * y.c_, d);
    }

    friend QuadIrrational operator*(long long n, const QuadIrrational& x) {
        check_range(x.a_, n);
        check_range(x.b_, n);
        return QuadIrrational(n * x.a_, n * x.b_, x.c_, x.d_);
    }

    QuadIrrational operator-() const { return QuadIrrational(-a_, -b_, c_, d_); }

    // sign of a + b*sqrt(d)
    int sign() const {
        if (b_ == 0) return a_ > 0 ? 1 : a_ < 0 ? -1 : 0;
        if (a_ >= 0 && b_ > 0) return 1;
        if (a_ <= 0 && b_ < 0) return -1;
        __int128 lhs = static_cast<__int128>(a_) * a_;
        __int128 rhs = static_cast<__int128>(b_) * b_ * d_;
        if (a_ > 0) return lhs > rhs ? 1 : lhs < rhs ? -1 : 0;  // b < 0
        return rhs > lhs ? 1 : rhs < lhs ? -1 : 0;              // a < 0, b > 0
    }

    // x >= m, integer m
    bool at_least(long long m) const {
        check_range(m, c_);
        return QuadIrrational(a_ - m * c_, b_, c_, d_).sign() >= 0;
    }

    long long floor() const {
        double est = (static_cast<double>(a_) + static_cast<double>(b_) *
                      std::sqrt(static_cast<double>(d_))) / static_cast<double>(c_);
        long long f = static_cast<long long>(std::floor(est));
        while (!at_least(f)) --f;
        while (at_least(f + 1)) ++f;
        return f;
    }

    long long ceil() const { return -(-*this).floor(); }

private:
    static long long unify_radicand(const QuadIrrational& x, const QuadIrrational& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_) throw std::domain_error("mismatched radicands");
        return x.d_;
    }

    // coefficients stay well below the range where the sign test's
    // 128-bit squares could overflow
    static void check_range(long long v, long long w) {
        if (std::abs(v) > (1ll << 31) || std::abs(w) > (1ll << 31))
            throw capacity_error("quadratic-surd coefficient out of exact range");
    }

    long long a_ = 0;
    long long b_ = 0;
    long long c_ = 1;
    long long d_ = 0;
};

}  // namespace wordlab
