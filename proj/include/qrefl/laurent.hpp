#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrefl/errors.hpp"
#include "qrefl/rational.hpp"

namespace qrefl {

// Fixed variable alphabet. All variables are formal units (exponents range over
// the integers) except xi, which only ever appears with exponent >= 0.
//   x, x1, x2 : spectral units e^lambda at up to two independent points
//   q         : e^{i mu}
//   bigQ      : the boundary parameter Q
//   r         : e^{i mu m_b} (enters when Q is pinned to i*r)
//   xi        : the free boundary constant cosh(2 i mu zeta)
//   c1..c12   : one free coupling per conjugate index pair
enum class VarId : int {
    x = 0,
    x1,
    x2,
    q,
    bigQ,
    r,
    xi,
    c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12,
    count
};

constexpr int kNumVars = static_cast<int>(VarId::count);
constexpr int kMaxCPairs = 12;

// 1-based conjugate-pair index -> its coupling variable.
VarId c_var(int a);
const char* var_name(VarId v);
bool is_unit_var(VarId v); // every variable except xi

using ExpVec = std::array<std::int16_t, kNumVars>;

inline ExpVec zero_exp() {
    ExpVec e{};
    return e;
}

struct Term {
    ExpVec exp;
    GaussRational coeff;
};

// Numeric evaluation point: a value for every variable that occurs.
using Assignment = std::map<VarId, std::complex<double>>;

// Multivariate Laurent polynomial over GaussRational. Terms are kept sorted by
// exponent vector with no zero coefficients, so equality is structural and
// iteration order is deterministic.
class Laurent {
public:
    Laurent() = default;

    static Laurent zero() { return Laurent(); }
    static Laurent constant(GaussRational c);
    static Laurent one() { return constant(GaussRational(1)); }
    static Laurent variable(VarId v, int power = 1);
    static Laurent monomial(GaussRational c, const ExpVec& e);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator*(const GaussRational& c, const Laurent& p);
    friend Laurent operator*(const Laurent& p, const GaussRational& c) { return c * p; }

    friend bool operator==(const Laurent& a, const Laurent& b);
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Multiplicative inverse. Only single-term polynomials with xi-exponent 0
    // are units; anything else throws NotAUnit.
    Laurent invert_unit() const;

    // Coefficient of v^degree, with v's exponent removed from the result.
    Laurent coeff_at_degree(VarId v, int degree) const;

    // (min, max) exponent of v over all terms; nullopt for the zero polynomial.
    std::optional<std::pair<int, int>> degree_range(VarId v) const;

    // Replace v by a single-term polynomial (unit substitution, e.g. x -> x1*x2^-1,
    // bigQ -> i*r, x -> 1). Throws NotAUnit if the replacement is not one term or
    // the substitution would drive xi to a negative exponent.
    Laurent substitute_monomial(VarId v, const Laurent& replacement) const;

    // v * d/dv, the logarithmic derivative used for the open-chain Hamiltonian.
    Laurent log_derivative(VarId v) const;

    // Exact evaluation. Throws MissingAssignment for an unassigned variable that
    // occurs, ZeroAssignedToUnit if a unit variable is assigned 0.
    std::complex<double> evaluate(const Assignment& at) const;

    std::string to_string() const;

private:
    explicit Laurent(std::vector<Term> terms) : terms_(std::move(terms)) {}
    static Laurent from_map(std::map<ExpVec, GaussRational>&& acc);

    std::vector<Term> terms_;
};

inline bool is_zero(const Laurent& p) { return p.is_zero(); }
inline bool is_zero(const std::complex<double>& z) { return z == 0.0; }

} // namespace qrefl
