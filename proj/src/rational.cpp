#include "scx/rational.hpp"

#include <numeric>
#include <stdexcept>

#include "scx/errors.hpp"

namespace scx {
namespace {

long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return out;
}

long long checked_add(long long a, long long b) {
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return out;
}

} // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) {
        throw validation_error("rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = checked_mul(num_, -1);
        den_ = checked_mul(den_, -1);
    }
    long long g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(checked_mul(o.num_, -1), o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    // Cross-reduce before multiplying to keep intermediates small.
    long long g1 = std::gcd(num_, o.den_);
    long long g2 = std::gcd(o.num_, den_);
    return Rational(checked_mul(num_ / g1, o.num_ / g2),
                    checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) {
        throw validation_error("rational division by zero");
    }
    return *this * Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

long long Rational::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) {
        --q;
    }
    return q;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational abs(const Rational& r) {
    return r.num() < 0 ? Rational(-r.num(), r.den()) : r;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        // result holds C(n-k+i-1, i-1), so result*(n-k+i) is divisible by i.
        result = checked_mul(result, n - k + i) / i;
    }
    return result;
}

} // namespace scx
