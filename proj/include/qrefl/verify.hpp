#pragma once
// Relation checkers: graded Yang-Baxter, Hecke A/B relations, Baxterization,
// reflection equation, R-matrix unitarity, K-matrix consistency, the
// double-row transfer matrix, and its boundary charges.
//
// Every check runs in one of two modes. Exact mode cancels Laurent
// polynomials over Gaussian rationals and reports the number of surviving
// terms; Numeric mode evaluates the same ingredients at seeded random points
// and reports the largest scaled residual entry.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrefl/algebra.hpp"
#include "qrefl/graded_matrix.hpp"

namespace qrefl {

enum class CheckMode { Exact, Numeric };

std::string mode_name(CheckMode m);

// Outcome of one relation check. Exact mode: passed <=> residual_terms == 0
// and max_abs is unset (-1). Numeric mode: passed <=> max_abs < tolerance
// and residual_terms is unset (-1).
struct CheckResult {
    std::string name;
    CheckMode mode = CheckMode::Exact;
    bool passed = false;
    long residual_terms = -1;
    double max_abs = -1.0;
    long elapsed_ms = 0;
    std::string detail; // scalar functions, factors, degrees, notes
};

// Sampling plan for numeric verdicts: `points` assignments drawn from a
// seeded generator, magnitudes in [1/2, 2]; q is kept away from +-1.
// Residuals are scaled by the largest entry magnitude of either side.
struct NumericParams {
    std::uint64_t seed = 1;
    int points = 20;
    double tolerance = 1e-9;
};

// A boundary-transfer setup: N quantum sites, a one-site boundary matrix K in
// the spectral variable x, and the identity left boundary. `spec` is present
// when K came from a BoundarySpec; the U_0 centrality check requires it.
struct TransferContext {
    Grading grading;
    int sites = 1;
    GM k;
    std::optional<BoundarySpec> spec;
};

// K = I (no boundary spec).
TransferContext make_context(const Grading& g, int sites);
// K = k_matrix_explicit(spec).
TransferContext make_context(const BoundarySpec& spec, int sites);

// --- Pointwise relation checks -------------------------------------------

// R_12(l1-l2) R_13(l1) R_23(l2) = R_23(l2) R_13(l1) R_12(l1-l2) on 3 sites.
CheckResult check_gybe(const Grading& g, CheckMode mode = CheckMode::Exact,
                       const NumericParams& np = {});

// Braid, quadratic, and distant-commutation relations of the embedded U_i.
// Needs sites >= 3; the distant pairs are covered when sites >= 4.
CheckResult check_hecke_a(const Grading& g, int sites,
                          CheckMode mode = CheckMode::Exact,
                          const NumericParams& np = {});

// P R(l) = sinh(l) U + sinh(l + i mu) I.
CheckResult check_baxterization(const Grading& g, CheckMode mode = CheckMode::Exact,
                                const NumericParams& np = {});

// Boundary relations for e = boundary_e(spec): quadratic (h1), the quartic
// exchange (h2) with kappa = q Q^-1 + q^-1 Q, and distant commutation (h3).
CheckResult check_hecke_b(const BoundarySpec& spec, const Grading& g,
                          CheckMode mode = CheckMode::Exact,
                          const NumericParams& np = {});

// Negative control: a mixed-parity activation on the distinguished diagram
// (one bosonic and one fermionic activation). Must fail (h1)/(h2).
GM mixed_boundary_e(const Grading& g);
CheckResult check_hecke_b_mixed(const Grading& g, CheckMode mode = CheckMode::Exact,
                                const NumericParams& np = {});

// Reflection equation for a one-site K(x):
// R_12(l1-l2) K_1(l1) R_21(l1+l2) K_2(l2) =
// K_2(l2) R_12(l1+l2) K_1(l1) R_21(l1-l2).
CheckResult check_reflection(const GM& k, const Grading& g,
                             CheckMode mode = CheckMode::Exact,
                             const NumericParams& np = {});

// R_12(l) R_21(-l) = rho(l) I; the scalar is recorded in the result detail.
CheckResult check_unitarity(const Grading& g, CheckMode mode = CheckMode::Exact,
                            const NumericParams& np = {});
// The scalar rho; throws NotProportionalToIdentity if the product is not
// scalar.
Laurent unitarity_rho(const Grading& g);

// k_matrix_theorem(boundary_e(spec)) under Q -> i r against
// k_matrix_explicit(spec): proportionality by cross products, with the
// factor recovered by exact division and recorded in the detail.
CheckResult check_k_consistency(const BoundarySpec& spec, const Grading& g,
                                CheckMode mode = CheckMode::Exact,
                                const NumericParams& np = {});
// The proportionality factor; throws NotProportional when the two matrices
// are not global Laurent multiples of each other.
Laurent k_consistency_factor(const GM& theorem_k, const GM& explicit_k);

// --- Transfer matrix and boundary charges --------------------------------

// Double-row monodromy on aux + N sites:
// T K_0 That with T = R_{0N}...R_{01} and That = R_{10}...R_{N0}.
GM double_row_monodromy(const TransferContext& ctx, VarId xvar = VarId::x);

// t(x) = str_0 { M_0 monodromy }; the left boundary is the identity. Refuses
// to build (UnitarityUnverified) unless R-matrix unitarity holds for the
// grading, which justifies the polynomial form of That.
GM build_transfer(const TransferContext& ctx, VarId xvar = VarId::x);

// [t(x1), t(x2)] = 0.
CheckResult check_transfer(const TransferContext& ctx,
                           CheckMode mode = CheckMode::Exact,
                           const NumericParams& np = {});

// Coefficient of the globally extremal x-degree of the monodromy, with its
// N^2 signed blocks T_ab acting on the quantum space (row-major in (a,b)).
struct BoundaryCharges {
    int sign = 1;   // +1: top degree, -1: bottom degree
    int degree = 0; // the extremal x-degree across all entries
    GM extremal;    // aux + N sites
    std::vector<GM> blocks;
};
BoundaryCharges extract_boundary_charges(const TransferContext& ctx, int sign);

// Structural checks on the extraction: the signed blocks recompose the
// extremal coefficient, and the top/bottom degrees differ by an even integer.
CheckResult check_charges(const TransferContext& ctx,
                          CheckMode mode = CheckMode::Exact,
                          const NumericParams& np = {});

// R^s_12 T^s_1 R^s_21 T^s_2 = T^s_2 R^s_12 T^s_1 R^s_21 for sign s, with
// R^+ / R^- the leading/trailing x-coefficients of the R-matrix.
CheckResult check_exchange_relation(const TransferContext& ctx, int sign,
                                    CheckMode mode = CheckMode::Exact,
                                    const NumericParams& np = {});

// [U_i, T^pm_ab] = 0 for i = 1..N-1, and [U_0, T^pm_ab] = 0 with U_0 built
// from the same BoundarySpec as K. With K = I only the U_i family applies.
CheckResult check_centrality(const TransferContext& ctx,
                             CheckMode mode = CheckMode::Exact,
                             const NumericParams& np = {});

// x d/dx of t(x) at x = 1 (unnormalized).
GM hamiltonian(const TransferContext& ctx);

// The Hamiltonian commutes with t(x2).
CheckResult check_hamiltonian(const TransferContext& ctx,
                              CheckMode mode = CheckMode::Exact,
                              const NumericParams& np = {});

} // namespace qrefl
