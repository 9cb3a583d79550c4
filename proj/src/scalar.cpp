#include "leavitt/scalar.hpp"

#include <cstdlib>

namespace leavitt {

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

mpz_class parse_integer(std::string_view text)
{
    std::string digits(text);
    if (digits.empty())
        throw std::invalid_argument("empty number");
    std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (start == digits.size())
        throw std::invalid_argument("malformed number '" + digits + "'");
    for (std::size_t k = start; k < digits.size(); ++k)
        if (digits[k] < '0' || digits[k] > '9')
            throw std::invalid_argument("malformed number '" + digits + "'");
    if (digits[0] == '+')
        digits.erase(0, 1);
    return mpz_class(digits, 10);
}

}  // namespace

Field Field::prime(std::uint64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    return Field{p};
}

std::string Field::name() const
{
    return is_rational() ? "Q" : "Fp:" + std::to_string(characteristic);
}

Field parse_field(std::string_view text)
{
    if (text.empty() || text == "Q")
        return Field::rationals();
    if (text.substr(0, 3) == "Fp:") {
        std::string digits(text.substr(3));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed field '" + std::string(text) + "'");
        return Field::prime(std::stoull(digits));
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

Field field_from_env()
{
    const char* value = std::getenv("LEAVITT_FIELD");
    return parse_field(value ? value : "");
}

Scalar::Scalar(long value, Field field) : field_(field), value_(value)
{
    normalize();
}

Scalar Scalar::from_rational(const mpq_class& value, Field field)
{
    Scalar s;
    s.field_ = field;
    if (field.is_rational()) {
        s.value_ = value;
        s.value_.canonicalize();
        return s;
    }
    mpz_class p(static_cast<unsigned long>(field.characteristic));
    mpz_class den = value.get_den();
    if (den % p == 0)
        throw std::domain_error("denominator divisible by the field characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class num = value.get_num();
    mpz_class residue = (num * inv) % p;
    if (residue < 0)
        residue += p;
    s.value_ = mpq_class(residue);
    return s;
}

Scalar Scalar::parse(std::string_view text, Field field)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return from_rational(mpq_class(parse_integer(text)), field);
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    return from_rational(mpq_class(num, den), field);
}

void Scalar::check(const Scalar& other) const
{
    if (!(field_ == other.field_))
        throw FieldMismatch("scalar field mismatch: " + field_.name() + " vs " + other.field_.name());
}

void Scalar::normalize()
{
    if (field_.is_rational()) {
        value_.canonicalize();
        return;
    }
    mpz_class p(static_cast<unsigned long>(field_.characteristic));
    mpz_class residue = value_.get_num() % p;
    if (residue < 0)
        residue += p;
    value_ = mpq_class(residue);
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.value_ = -r.value_;
    r.normalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    check(other);
    value_ += other.value_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    check(other);
    value_ -= other.value_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    check(other);
    value_ *= other.value_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other)
{
    check(other);
    if (other.is_zero())
        throw std::domain_error("division by zero");
    if (field_.is_rational()) {
        value_ /= other.value_;
        return *this;
    }
    mpz_class p(static_cast<unsigned long>(field_.characteristic));
    mpz_class inv;
    mpz_class den = other.value_.get_num();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    value_ = mpq_class(value_.get_num() * inv);
    normalize();
    return *this;
}

Scalar Scalar::abs() const
{
    Scalar r = *this;
    if (r.is_negative())
        r.value_ = -r.value_;
    return r;
}

std::string Scalar::to_string() const
{
    return value_.get_str();
}

}  // namespace leavitt
