#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace leavitt {

/// Ground field: the rationals (characteristic 0) or a prime field F_p.
struct Field {
    std::uint64_t characteristic = 0;

    static Field rationals() { return {}; }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return characteristic == 0; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;
};

/// Parses `Q` or `Fp:<p>`; an empty string selects the rationals.
Field parse_field(std::string_view text);

/// Reads LEAVITT_FIELD from the environment.
Field field_from_env();

class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact field element. Prime-field residues are kept in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(long value, Field field = {});

    /// Parses an integer or `num/den`.
    static Scalar parse(std::string_view text, Field field);
    static Scalar from_rational(const mpq_class& value, Field field);

    const Field& field() const { return field_; }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    /// Sign used when printing: prime-field residues are always non-negative.
    bool is_negative() const { return sgn(value_) < 0; }
    Scalar abs() const;

    std::string to_string() const;

private:
    void check(const Scalar& other) const;
    void normalize();

    Field field_{};
    mpq_class value_{0};
};

/// (-1)^e for any integer exponent.
inline int sign_power(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace leavitt
