#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace ncalg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {}
    Scalar(long numerator, long denominator);
    Scalar(const mpz_class& numerator, const mpz_class& denominator);
    explicit Scalar(mpq_class value);

    /// Parses "p" or "p/q" with an optional leading sign.
    static Scalar parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }

    /// `p/q`, with `/q` omitted when q is 1.
    std::string to_string() const;

    Scalar operator-() const { return Scalar(mpq_class(-value_)); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Integer power; negative exponents invert.
    Scalar pow(long exponent) const;

private:
    mpq_class value_{0};
};

}  // namespace ncalg
