#include "ncalg/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace ncalg {

Scalar::Scalar(long numerator, long denominator) : Scalar(mpz_class(numerator), mpz_class(denominator)) {}

Scalar::Scalar(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) {
        throw std::domain_error("scalar with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        }
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    return Scalar(mpz_class(strip_plus(num)), mpz_class(std::string(den)));
}

std::string Scalar::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    value_ += o.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    value_ -= o.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    value_ *= o.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    value_ /= o.value_;
    return *this;
}

Scalar Scalar::pow(long exponent) const {
    if (exponent < 0) return Scalar(1) / pow(-exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Scalar(num, den);
}

}  // namespace ncalg
