#pragma once

#include <map>

#include "leavitt/combination.hpp"

namespace leavitt {

// Incremental row echelon form over an exact field. Rows are keyed by their
// least basis key (the pivot).
template <class Key>
class EchelonBasis {
public:
    explicit EchelonBasis(Field field) : field_(field) {}

    // Reduces v against the stored rows; the result is zero iff v is in the span.
    Combination<Key> reduce(Combination<Key> v) const
    {
        while (!v.is_zero()) {
            auto row = rows_.find(v.terms().begin()->first);
            if (row == rows_.end())
                return v;
            Scalar coeff = v.terms().begin()->second;
            v.add_scaled(row->second, -coeff);
        }
        return v;
    }

    bool contains(const Combination<Key>& v) const { return reduce(v).is_zero(); }

    // Adds v to the span; returns false if it was already dependent.
    bool insert(const Combination<Key>& v)
    {
        auto r = reduce(v);
        if (r.is_zero())
            return false;
        Scalar lead = r.terms().begin()->second;
        r *= Scalar(1, field_) / lead;
        Key pivot = r.terms().begin()->first;
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    Field field_;
    std::map<Key, Combination<Key>> rows_;
};

}  // namespace leavitt
