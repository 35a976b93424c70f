#pragma once

#include <compare>
#include <string>

namespace scx {

/// Exact rational with 64-bit numerator and positive denominator, always
/// reduced. Arithmetic throws std::overflow_error instead of wrapping.
class Rational {
  public:
    Rational() = default;
    Rational(long long num, long long den = 1);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    bool is_integer() const { return den_ == 1; }
    long long floor() const;
    double to_double() const;

    /// "25/2" for proper fractions, "12" for integers.
    std::string to_string() const;

  private:
    long long num_ = 0;
    long long den_ = 1;
};

Rational abs(const Rational& r);

/// C(n, k), overflow-checked.
long long binomial(int n, int k);

} // namespace scx
