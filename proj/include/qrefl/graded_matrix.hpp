#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "qrefl/errors.hpp"
#include "qrefl/grading.hpp"
#include "qrefl/laurent.hpp"

namespace qrefl {

template <typename S>
S scalar_from_int(long v);

template <>
inline Laurent scalar_from_int<Laurent>(long v) {
    return Laurent::constant(GaussRational(v));
}
template <>
inline std::complex<double> scalar_from_int<std::complex<double>>(long v) {
    return {static_cast<double>(v), 0.0};
}

// Dense square matrix on `sites` tensor copies of the graded space. Grading
// signs are baked in at construction time (see gtensor), so composition is
// ordinary matrix multiplication throughout. Indices are 0-based and decompose
// base-N with the first tensor factor as the most significant digit.
template <typename S>
class MatrixT {
public:
    MatrixT(Grading g, int sites) : g_(std::move(g)), sites_(sites) {
        if (sites < 0) throw Error("TooFewSites", "negative site count");
        dim_ = 1;
        for (int s = 0; s < sites; ++s) dim_ *= g_.size();
        a_.assign(static_cast<std::size_t>(dim_) * dim_, S{});
    }

    static MatrixT identity(const Grading& g, int sites) {
        MatrixT out(g, sites);
        for (long i = 0; i < out.dim_; ++i) out.entry(i, i) = scalar_from_int<S>(1);
        return out;
    }

    // Matrix unit e_{ij} on one site, 1-based indices.
    static MatrixT unit(const Grading& g, int i, int j) {
        MatrixT out(g, 1);
        if (i < 1 || i > g.size() || j < 1 || j > g.size())
            throw Error("PositionOutOfRange", "matrix unit index out of range");
        out.entry(i - 1, j - 1) = scalar_from_int<S>(1);
        return out;
    }

    const Grading& grading() const { return g_; }
    int sites() const { return sites_; }
    long dim() const { return dim_; }

    const S& at(long i, long j) const { return a_[idx(i, j)]; }
    void set(long i, long j, S v) { a_[idx(i, j)] = std::move(v); }

    friend MatrixT operator+(const MatrixT& a, const MatrixT& b) {
        a.require_same_shape(b);
        MatrixT out = a;
        for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += b.a_[k];
        return out;
    }
    friend MatrixT operator-(const MatrixT& a, const MatrixT& b) {
        a.require_same_shape(b);
        MatrixT out = a;
        for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] -= b.a_[k];
        return out;
    }
    MatrixT operator-() const {
        MatrixT out = *this;
        for (auto& v : out.a_) v = -v;
        return out;
    }

    friend MatrixT operator*(const MatrixT& a, const MatrixT& b) {
        a.require_same_shape(b);
        MatrixT out(a.g_, a.sites_);
        for (long i = 0; i < a.dim_; ++i) {
            for (long k = 0; k < a.dim_; ++k) {
                const S& aik = a.at(i, k);
                if (is_zero(aik)) continue;
                for (long j = 0; j < b.dim_; ++j) {
                    const S& bkj = b.at(k, j);
                    if (is_zero(bkj)) continue;
                    out.entry(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    friend MatrixT operator*(const S& c, const MatrixT& m) {
        MatrixT out = m;
        for (auto& v : out.a_) v = c * v;
        return out;
    }

    friend bool operator==(const MatrixT& a, const MatrixT& b) {
        return a.g_ == b.g_ && a.sites_ == b.sites_ && a.a_ == b.a_;
    }
    friend bool operator!=(const MatrixT& a, const MatrixT& b) { return !(a == b); }

    bool is_zero_matrix() const {
        for (const auto& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    void require_same_shape(const MatrixT& o) const {
        if (g_ != o.g_) throw Error("GradingMismatch", "operands carry different gradings");
        if (sites_ != o.sites_)
            throw Error("ShapeMismatch", "operands act on different site counts");
    }

private:
    S& entry(long i, long j) { return a_[idx(i, j)]; }
    std::size_t idx(long i, long j) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
            throw Error("PositionOutOfRange", "matrix index out of range");
        return static_cast<std::size_t>(i) * dim_ + j;
    }

    Grading g_;
    int sites_;
    long dim_;
    std::vector<S> a_;
};

using GM = MatrixT<Laurent>;
using NM = MatrixT<std::complex<double>>;

// Sign-embedded graded Kronecker product: entry ((i,k),(j,l)) carries
// (-1)^{[k]([i]+[j])} A_ij B_kl, where [.] is the summed parity of the
// multi-index. With this embedding the graded composition law
// (A (x) B)(C (x) D) = (-1)^{|B||C|} AC (x) BD holds under plain matmul.
template <typename S>
MatrixT<S> gtensor(const MatrixT<S>& a, const MatrixT<S>& b) {
    if (a.grading() != b.grading())
        throw Error("GradingMismatch", "gtensor operands carry different gradings");
    const Grading& g = a.grading();
    MatrixT<S> out(g, a.sites() + b.sites());
    const long db = b.dim();
    for (long i = 0; i < a.dim(); ++i) {
        for (long j = 0; j < a.dim(); ++j) {
            const S& aij = a.at(i, j);
            if (is_zero(aij)) continue;
            const int pa = g.multi_parity(i, a.sites()) ^ g.multi_parity(j, a.sites());
            for (long k = 0; k < db; ++k) {
                const int sign = (pa && g.multi_parity(k, b.sites())) ? -1 : 1;
                for (long l = 0; l < db; ++l) {
                    const S& bkl = b.at(k, l);
                    if (is_zero(bkl)) continue;
                    S v = aij * bkl;
                    if (sign < 0) v = -v;
                    out.set(i * db + k, j * db + l, std::move(v));
                }
            }
        }
    }
    return out;
}

// Graded permutation operator P = sum_ij (-1)^{[j]} e_ij (x) e_ji on two sites.
template <typename S>
MatrixT<S> permutation_op(const Grading& g) {
    const int N = g.size();
    MatrixT<S> out(g, 2);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            // (-1)^{[j]} from the definition times the embedding sign
            // (-1)^{[j]([i]+[j])} of e_ij (x) e_ji.
            const int e = g.parity(j) * (1 + g.parity(i) + g.parity(j));
            const long row = static_cast<long>(i - 1) * N + (j - 1);
            const long col = static_cast<long>(j - 1) * N + (i - 1);
            out.set(row, col, scalar_from_int<S>(e % 2 ? -1 : 1));
        }
    }
    return out;
}

// A placed at 1-based position pos within `total` sites, identity elsewhere.
template <typename S>
MatrixT<S> embed(const MatrixT<S>& a, int pos, int total) {
    if (pos < 1 || pos + a.sites() - 1 > total)
        throw Error("PositionOutOfRange",
                    "cannot embed " + std::to_string(a.sites()) + " sites at position " +
                        std::to_string(pos) + " of " + std::to_string(total));
    MatrixT<S> out = a;
    if (pos > 1) out = gtensor(MatrixT<S>::identity(a.grading(), pos - 1), out);
    const int rest = total - (pos - 1) - a.sites();
    if (rest > 0) out = gtensor(out, MatrixT<S>::identity(a.grading(), rest));
    return out;
}

// Graded partial trace over the first factor: (str_0 A)_{IJ} = sum_k (-1)^{[k]}
// A_{(k,I),(k,J)}.
template <typename S>
MatrixT<S> supertrace_aux(const MatrixT<S>& a) {
    if (a.sites() < 1) throw Error("TooFewSites", "supertrace needs at least one site");
    const Grading& g = a.grading();
    MatrixT<S> out(g, a.sites() - 1);
    const long d = out.dim();
    for (int k = 0; k < g.size(); ++k) {
        const bool neg = g.parity(k + 1) != 0;
        for (long i = 0; i < d; ++i) {
            for (long j = 0; j < d; ++j) {
                const S& v = a.at(k * d + i, k * d + j);
                if (is_zero(v)) continue;
                S cur = out.at(i, j);
                cur += neg ? -v : v;
                out.set(i, j, std::move(cur));
            }
        }
    }
    return out;
}

// Ungraded variant, kept for the convention self-check in the test suite.
template <typename S>
MatrixT<S> trace_aux_plain(const MatrixT<S>& a) {
    if (a.sites() < 1) throw Error("TooFewSites", "trace needs at least one site");
    MatrixT<S> out(a.grading(), a.sites() - 1);
    const long d = out.dim();
    for (int k = 0; k < a.grading().size(); ++k)
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) {
                const S& v = a.at(k * d + i, k * d + j);
                if (is_zero(v)) continue;
                S cur = out.at(i, j);
                cur += v;
                out.set(i, j, std::move(cur));
            }
    return out;
}

template <typename S>
MatrixT<S> commutator(const MatrixT<S>& a, const MatrixT<S>& b) {
    return a * b - b * a;
}

inline NM evaluate_matrix(const GM& m, const Assignment& at) {
    NM out(m.grading(), m.sites());
    for (long i = 0; i < m.dim(); ++i)
        for (long j = 0; j < m.dim(); ++j)
            if (!m.at(i, j).is_zero()) out.set(i, j, m.at(i, j).evaluate(at));
    return out;
}

inline double max_abs_entry(const NM& m) {
    double mx = 0.0;
    for (long i = 0; i < m.dim(); ++i)
        for (long j = 0; j < m.dim(); ++j) mx = std::max(mx, std::abs(m.at(i, j)));
    return mx;
}

inline long residual_term_count(const GM& m) {
    long n = 0;
    for (long i = 0; i < m.dim(); ++i)
        for (long j = 0; j < m.dim(); ++j) n += static_cast<long>(m.at(i, j).term_count());
    return n;
}

} // namespace qrefl
