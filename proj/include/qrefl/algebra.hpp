#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qrefl/graded_matrix.hpp"
#include "qrefl/grading.hpp"
#include "qrefl/laurent.hpp"

namespace qrefl {

// Hyperbolic building blocks as Laurent polynomials, with x = e^lambda and
// q = e^{i mu}: sinh(lambda + k*i*mu) = (x q^k - x^-1 q^-k)/2 and friends.
Laurent sinh_shift(VarId xvar, int k);
Laurent cosh2_shift(VarId xvar, int k); // cosh(2 lambda + k*i*mu)
Laurent sinh_imu(int k = 1);            // sinh(k*i*mu) = (q^k - q^-k)/2

// Hecke eigenvalues and the quartic constant:
// delta = -(q + q^-1), delta0 = -(Q + Q^-1), kappa = q Q^-1 + q^-1 Q.
struct HeckeParams {
    Laurent delta, delta0, kappa;
};
HeckeParams hecke_params();

// R-matrix in the spectral unit `xvar`:
//   R = sum_i a_i e_ii(x)e_ii + b sum_{i!=j} e_ii(x)e_jj + sum_{i!=j} c_ij e_ij(x)e_ji,
// a_j = sinh(lambda + i mu - 2 i mu [j]), b = sinh(lambda),
// c_ij = sinh(i mu) e^{sign(j-i) lambda} (-1)^{[j]}, assembled through gtensor.
GM r_matrix(const Grading& g, VarId xvar = VarId::x);

// A-type Hecke generator U = sum f_ab e_ab(x)e_ba + sum t_ab e_aa(x)e_bb with
// f_ab = (-1)^{[b]} (a != b), t_aa = (-1)^{[a]} q^{1-2[a]} - q,
// t_ab = -q^{-sign(a-b)} (a != b).
GM hecke_u(const Grading& g);

// Diagonal matrix M entering the transfer matrix:
// M_kk = q^{N - 2k + 1} q^{-2[k] + 4 sum_{i<=k} [i]}.
GM m_matrix(const Grading& g);

enum class Family { Bosonic, Fermionic, Mixed, Identity };

std::string family_name(Family f);

// Boundary solution selector. L is the largest active index; the couplings c_a
// stay symbolic unless pinned through c_values (exact Gaussian rationals).
struct BoundarySpec {
    DiagramKind diagram = DiagramKind::Symmetric;
    int m = 0, n = 0;
    Family family = Family::Mixed;
    int L = 1;
    std::map<int, GaussRational> c_values;
};

struct SpecInfo {
    std::vector<std::pair<int, int>> pairs; // active (a, abar)
    int middle_index = 0;                   // forced-inert middle index, 0 if none
    bool middle_zeroed = false;
};

// Single source of truth for spec admissibility; throws SpecOutOfRange,
// MixedOnDistinguished or SpecMismatch.
SpecInfo validate_spec(const BoundarySpec& spec, const Grading& g);

// Boundary element e = sum_active(h_a e_aa + h_abar e_abarabar + c_a e_aabar +
// c_a^-1 e_abara) with h_a = -Q^-1 and h_abar = -Q.
GM boundary_e(const BoundarySpec& spec, const Grading& g);

// Baxterized boundary matrix, denominators cleared:
//   2 i sinh(i mu) * (x(lambda) I + y(lambda) e)
// with x(lambda) = -delta0 cosh(2 lambda + i mu)/(2 i sinh i mu)
//                  - kappa cosh(2 lambda)/(2 i sinh i mu) - xi
// and y(lambda) = i sinh(2 lambda).
GM k_matrix_theorem(const GM& e, VarId xvar = VarId::x);

// Closed-form K at Q = i r: active diagonal x^{\pm2}(r + r^-1)/2 - xi, active
// off-diagonal i c_a^{\pm1} (x^2 - x^-2)/2, inert diagonal
// (x^2 r + x^-2 r^-1)/2 - xi.
GM k_matrix_explicit(const BoundarySpec& spec, const Grading& g, VarId xvar = VarId::x);

// All admissible boundary specs with m + n <= max_total, both diagrams.
std::vector<BoundarySpec> enumerate_valid_specs(int max_total);

} // namespace qrefl
