#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "leavitt/combination.hpp"
#include "leavitt/lpa.hpp"
#include "leavitt/quiver.hpp"

namespace leavitt {

// Basis element of I_i: E(i) stands for e_i^#, G(alpha) for alpha^# with t(alpha) = i.
struct Socle {
    enum class Kind { vertex, arrow };
    Kind kind = Kind::vertex;
    int id = 0;

    static Socle E(VertexId v) { return {Kind::vertex, v}; }
    static Socle G(ArrowId a) { return {Kind::arrow, a}; }
    bool is_vertex() const { return kind == Kind::vertex; }

    friend bool operator==(const Socle&, const Socle&) = default;
    friend auto operator<=>(const Socle&, const Socle&) = default;
};

VertexId socle_vertex(const Quiver& quiver, const Socle& s);

// x zeta_(p,q), with x a socle symbol at s(q).
struct BasisVector {
    Socle socle;
    AdmissiblePair pair;

    int degree() const { return pair.degree(); }

    friend bool operator==(const BasisVector&, const BasisVector&) = default;
    friend std::strong_ordering operator<=>(const BasisVector& a, const BasisVector& b)
    {
        if (auto c = a.pair.q.source <=> b.pair.q.source; c != 0)
            return c;
        if (auto c = a.socle <=> b.socle; c != 0)
            return c;
        return a.pair <=> b.pair;
    }
};

bool is_valid_basis_vector(const Quiver& quiver, const BasisVector& b);

using ComplexVector = Combination<BasisVector>;

// Degree of a nonzero homogeneous vector; nullopt for zero or mixed degrees.
std::optional<int> homogeneous_degree(const ComplexVector& v);

class InhomogeneousVector : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Deliberate mutations of the differential's special case, for testing that
// the verification suites notice.
enum class DifferentialFault { none, flip_hat_sign, flip_sum_sign, drop_sum };

const char* fault_name(DifferentialFault f);
std::optional<DifferentialFault> parse_fault(std::string_view name);

ComplexVector differential(const Quiver& quiver, const BasisVector& b, Field field,
                           DifferentialFault fault = DifferentialFault::none);
ComplexVector differential(const Quiver& quiver, const ComplexVector& v,
                           DifferentialFault fault = DifferentialFault::none);

// Elements of A = kQ / J^2, spanned by vertices and arrows.
struct AGenerator {
    enum class Kind { vertex, arrow };
    Kind kind = Kind::vertex;
    int id = 0;

    static AGenerator vertex(VertexId v) { return {Kind::vertex, v}; }
    static AGenerator arrow(ArrowId a) { return {Kind::arrow, a}; }

    friend bool operator==(const AGenerator&, const AGenerator&) = default;
    friend auto operator<=>(const AGenerator&, const AGenerator&) = default;
};

using AElement = Combination<AGenerator>;

ComplexVector a_action(const Quiver& quiver, const AGenerator& g, const BasisVector& b, Field field);
ComplexVector a_action(const Quiver& quiver, const AElement& a, const ComplexVector& v);

enum class BasisClass { gamma0, gamma1, gamma2 };
const char* class_name(BasisClass c);
BasisClass classify_basis(const Quiver& quiver, const BasisVector& b);

// Every basis vector of degree l at vertex i with l(q) = n.
std::vector<BasisVector> basis_vectors_exact(const Quiver& quiver, VertexId i, int l, int n);
// Every basis vector of degree l with l(q) <= nmax, over all vertices, in basis order.
std::vector<BasisVector> basis_vectors(const Quiver& quiver, int l, int nmax);

std::vector<BasisVector> kernel_basis(const Quiver& quiver, int l, int nmax);

// w with differential(w) = b, for b with an E socle.
ComplexVector preimage_witness(const Quiver& quiver, const BasisVector& b, Field field);

struct FiltrationInfo {
    bool in_M = false;
    std::optional<int> c_index;        // least n with b in C_n, when l(p) >= 1
    std::optional<VertexId> e_vertex;  // j with b in E_j, when l(p) = 1
    std::optional<Path> e_gamma;       // gamma with b in E(gamma), when l(p) >= 1
};

FiltrationInfo filtration_membership(const Quiver& quiver, const BasisVector& b);

// Differential of the quotient by M: terms with l(p) = 0 are dropped.
ComplexVector cokernel_differential(const Quiver& quiver, const ComplexVector& v,
                                    DifferentialFault fault = DifferentialFault::none);
// Differential of the layer C_n / C_(n+1): keeps the terms with l(p) = n.
ComplexVector layer_differential(const Quiver& quiver, const ComplexVector& v, int n,
                                 DifferentialFault fault = DifferentialFault::none);

// x zeta_(beta gamma, q) -> (-1)^(l (n-1)) x zeta_(beta, q), n = l(gamma) + 1.
ComplexVector iso_f_gamma(const Quiver& quiver, const Path& gamma, const ComplexVector& v);

ComplexVector resolution_f0(const Quiver& quiver, VertexId i, Field field);
ComplexVector resolution_eps(const Quiver& quiver, VertexId j, Field field);

}  // namespace leavitt
