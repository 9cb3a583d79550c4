#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "leavitt/bimodule.hpp"
#include "leavitt/complex.hpp"
#include "leavitt/report.hpp"

namespace leavitt {

struct VerifyOptions {
    int nmax = 5;          // bound on l(q) for degree slices
    int lmin = -4;
    int lmax = 4;
    Field field{};
    std::uint64_t seed = 1;
    DifferentialFault fault = DifferentialFault::none;
    int assoc_bound = 3;   // exhaustive associativity over monomials with l(p), l(q) <= this
    int random_triples = 1000;
    int roundtrip_bound = 3;
    int roundtrip_trials = 10;
    int roundtrip_nmin = -2;
    int roundtrip_nmax = 2;
};

// Differential suite: square zero, A-linearity, kernel/image classification
// with exact ranks, preimage witnesses, the layer decomposition sign and the
// resolution maps.
std::vector<CheckRecord> verify_complex(const Quiver& quiver, const VerifyOptions& opt);
// Only the square-zero and classification checks (fast subset used by tests).
std::vector<CheckRecord> verify_square_zero(const Quiver& quiver, const VerifyOptions& opt);
std::vector<CheckRecord> verify_classification(const Quiver& quiver, const VerifyOptions& opt);
std::vector<CheckRecord> verify_decomposition(const Quiver& quiver, const VerifyOptions& opt);
std::vector<CheckRecord> verify_resolutions(const Quiver& quiver, const VerifyOptions& opt);

std::vector<CheckRecord> verify_algebra(const Quiver& quiver, const VerifyOptions& opt);

std::vector<CheckRecord> verify_bimodule(const Quiver& quiver, const VerifyOptions& opt);
std::vector<CheckRecord> verify_dg_compat(const Quiver& quiver, const VerifyOptions& opt);

std::vector<CheckRecord> verify_roundtrip(const Quiver& quiver, const VerifyOptions& opt);

// Random elements for property checks.
LpaElement random_homogeneous(const Quiver& quiver, int degree, int max_len, int terms, std::mt19937_64& rng,
                              Field field, std::optional<VertexId> right_vertex = std::nullopt);
LpaElement random_element(const Quiver& quiver, int max_len, int terms, std::mt19937_64& rng, Field field);
ALinearMap random_a_linear(const Quiver& quiver, int degree, int support_bound, int entries, int max_len,
                           std::mt19937_64& rng, Field field);

}  // namespace leavitt
