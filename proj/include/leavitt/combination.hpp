#pragma once

#include <functional>
#include <map>
#include <utility>

#include "leavitt/scalar.hpp"

namespace leavitt {

// Finite linear combination over an exact field. Zero coefficients are never stored.
template <class Key>
class Combination {
public:
    using Terms = std::map<Key, Scalar>;

    Combination() = default;
    explicit Combination(Field field) : field_(field) {}
    Combination(const Key& key, Scalar coeff) : field_(coeff.field())
    {
        if (!coeff.is_zero())
            terms_.emplace(key, std::move(coeff));
    }

    static Combination basis(const Key& key, Field field) { return Combination(key, Scalar(1, field)); }

    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Scalar(0, field_) : it->second;
    }

    // An empty combination takes on the field of whatever is added to it.
    void add(const Key& key, const Scalar& coeff)
    {
        if (terms_.empty())
            field_ = coeff.field();
        if (!(coeff.field() == field_))
            throw FieldMismatch("combination field mismatch: " + field_.name() + " vs " + coeff.field().name());
        if (coeff.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add_scaled(const Combination& other, const Scalar& factor)
    {
        if (terms_.empty() && !other.terms_.empty())
            field_ = other.field_;
        if (other.terms_.empty())
            return;
        if (!(other.field_ == field_))
            throw FieldMismatch("combination field mismatch: " + field_.name() + " vs " + other.field_.name());
        if (factor.is_zero())
            return;
        if (&other == this) {
            Combination copy = other;
            add_scaled(copy, factor);
            return;
        }
        for (const auto& [key, coeff] : other.terms_)
            add(key, coeff * factor);
    }

    Combination& operator+=(const Combination& other)
    {
        add_scaled(other, Scalar(1, field_));
        return *this;
    }
    Combination& operator-=(const Combination& other)
    {
        add_scaled(other, Scalar(-1, field_));
        return *this;
    }
    Combination& operator*=(const Scalar& factor)
    {
        if (factor.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, coeff] : terms_)
            coeff *= factor;
        return *this;
    }

    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator*(Combination a, const Scalar& s) { return a *= s; }
    friend Combination operator*(const Scalar& s, Combination a) { return a *= s; }
    Combination operator-() const { return *this * Scalar(-1, field_); }

    // Equality ignores the field of a zero combination.
    friend bool operator==(const Combination& a, const Combination& b)
    {
        if (a.terms_.empty() || b.terms_.empty())
            return a.terms_.empty() && b.terms_.empty();
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    // Linear extension of a key-wise map.
    template <class OtherKey>
    Combination<OtherKey> map_linear(const std::function<Combination<OtherKey>(const Key&)>& f) const
    {
        Combination<OtherKey> out(field_);
        for (const auto& [key, coeff] : terms_)
            out.add_scaled(f(key), coeff);
        return out;
    }

private:
    Field field_{};
    Terms terms_;
};

}  // namespace leavitt
