#pragma once

#include <map>
#include <optional>
#include <vector>

#include "leavitt/combination.hpp"
#include "leavitt/quiver.hpp"

namespace leavitt {

// (p, q) indexes the monomial p*q of the Leavitt path algebra, and the
// coproduct summand zeta_(p,q) of the complex.
struct AdmissiblePair {
    Path p;
    Path q;

    int degree() const { return q.length() - p.length(); }

    friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
    friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
};

bool is_admissible(const Quiver& quiver, const Path& p, const Path& q);

// Pairs with l(q) = n, l(p) = n - l, s(q) = i; ordered by (p, q).
std::vector<AdmissiblePair> enumerate_B(const Quiver& quiver, VertexId i, int l, int n);

// One element of B^l_i built constructively: a walk for l >= 0, otherwise a
// power of a reachable loop or a wound-up cycle.
AdmissiblePair witness_admissible(const Quiver& quiver, VertexId i, int l);

using LpaElement = Combination<AdmissiblePair>;

LpaElement unit(const Quiver& quiver, Field field);
LpaElement vertex_element(const Quiver& quiver, VertexId v, Field field);
LpaElement arrow_element(const Quiver& quiver, ArrowId a, Field field);
LpaElement ghost_element(const Quiver& quiver, ArrowId a, Field field);
LpaElement monomial(const AdmissiblePair& pair, Field field);

// Normal form of c * p*q for arbitrary paths with t(p) = t(q): while both end
// in the same special arrow alpha, rewrite via alpha*alpha = e - sum_{beta in S(alpha)} beta*beta.
void reduce_into(const Quiver& quiver, LpaElement& out, Path p, Path q, const Scalar& coeff);

// Product of two basis monomials, already in normal form.
LpaElement multiply_monomials(const Quiver& quiver, const AdmissiblePair& left, const AdmissiblePair& right, Field field);

LpaElement mul(const Quiver& quiver, const LpaElement& a, const LpaElement& b);

std::map<int, LpaElement> grade(const LpaElement& a);
// Degree of a nonzero homogeneous element; nullopt for zero or mixed degrees.
std::optional<int> homogeneous_degree(const LpaElement& a);

// The involution on monomials: (p*q)* = q*p.
AdmissiblePair star(const AdmissiblePair& pair);

bool is_normal_form(const Quiver& quiver, const LpaElement& a);

}  // namespace leavitt
