#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leavitt/complex.hpp"
#include "leavitt/lpa.hpp"

namespace leavitt {

// Generators e_j, alpha, alpha* of the Leavitt path algebra.
struct LGenerator {
    enum class Kind { vertex, arrow, ghost };
    Kind kind = Kind::vertex;
    int id = 0;

    static LGenerator vertex(VertexId v) { return {Kind::vertex, v}; }
    static LGenerator arrow(ArrowId a) { return {Kind::arrow, a}; }
    static LGenerator ghost(ArrowId a) { return {Kind::ghost, a}; }
};

LpaElement generator_element(const Quiver& quiver, const LGenerator& g, Field field);
std::vector<LGenerator> all_generators(const Quiver& quiver);

// The right action of a single generator on a basis vector.
ComplexVector act_generator(const Quiver& quiver, const BasisVector& b, const LGenerator& g, Field field);

// v . b for an arbitrary element b. A monomial p*q acts letter by letter,
// rightmost letter first: e_s(q), the arrows of q, then the ghosts of p.
ComplexVector b_action(const Quiver& quiver, const ComplexVector& v, const LpaElement& b);

ComplexVector psi(const Quiver& quiver, const LpaElement& b);
ComplexVector psi_beta(const Quiver& quiver, ArrowId beta, const LpaElement& b);

// (-1)^(|b||v|) v . b, for homogeneous b and v.
ComplexVector rho(const Quiver& quiver, const LpaElement& b, const ComplexVector& v);

// A left A-linear map of the complex with the shape
//   e^# zeta_x     -> psi(N_x)
//   alpha^# zeta_x -> psi(M^alpha_x) + psi_alpha(N_x)
// Missing table entries are zero.
struct ALinearMap {
    int degree = 0;
    Field field{};
    std::map<AdmissiblePair, LpaElement> N;
    std::map<std::pair<ArrowId, AdmissiblePair>, LpaElement> M;

    ComplexVector apply(const Quiver& quiver, const BasisVector& b) const;
    ComplexVector apply(const Quiver& quiver, const ComplexVector& v) const;
};

// The commutator d(h) = del o h - (-1)^|h| h o del, evaluated at b.
ComplexVector coboundary(const Quiver& quiver, const ALinearMap& h, const BasisVector& b,
                         DifferentialFault fault = DifferentialFault::none);

// Every admissible pair with l(p) <= bound and l(q) <= bound.
std::vector<AdmissiblePair> bounded_pairs(const Quiver& quiver, int bound);
// Every basis vector over bounded_pairs.
std::vector<BasisVector> bounded_basis(const Quiver& quiver, int bound);

// Values of a degree-n map on a finite set of basis vectors.
struct MapTable {
    int degree = 0;
    Field field{};
    std::map<BasisVector, ComplexVector> values;
};

// stage is one of: extraction, consistency, recovery, homotopy.
class CocycleError : public std::runtime_error {
public:
    CocycleError(std::string stage, const std::string& message)
        : std::runtime_error(message), stage_(std::move(stage))
    {
    }
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

struct CocycleData {
    int degree = 0;
    Field field{};
    std::map<AdmissiblePair, LpaElement> nu;
    std::map<std::pair<ArrowId, AdmissiblePair>, LpaElement> mu;
    long consistency_checks = 0;
};

// Splits y-values into E-socle and G-socle parts to read off nu and mu, and
// checks the consistency relation for nu alpha wherever every term is tabulated.
CocycleData extract_cocycle_data(const Quiver& quiver, const MapTable& y);

// x = sum_j nu_(e_j, e_j); checks nu_(p,q) = (-1)^(n l) x p*q on the support.
LpaElement recover_x(const Quiver& quiver, const CocycleData& data);

struct HomotopyTable {
    int degree = 0;  // n - 1
    Field field{};
    std::map<AdmissiblePair, LpaElement> omega;
    long identity_checks = 0;  // omega alpha - mu^alpha relation, checked on the support

    ALinearMap as_map() const;
};

HomotopyTable build_homotopy(const Quiver& quiver, const CocycleData& data);

struct RoundTripResult {
    LpaElement recovered;
    long interior_points = 0;
    long consistency_checks = 0;
    long omega_checks = 0;
    // (stage, message); stages are those of CocycleError plus identity and bound.
    std::vector<std::pair<std::string, std::string>> violations;
};

// y = rho(x0) + d(h0), then extraction, recovery and homotopy; asserts
// y - rho(x) = d(h) on the interior of the bound.
RoundTripResult verify_quasibalance_roundtrip(const Quiver& quiver, const LpaElement& x0, int n,
                                              const ALinearMap& h0, int bound);

}  // namespace leavitt
