#include "qrefl/algebra.hpp"

#include <algorithm>

namespace qrefl {

namespace {

const GaussRational kHalf = GaussRational::ratio(1, 2);
const GaussRational kI = GaussRational::i();

Laurent qpow(int k) { return Laurent::variable(VarId::q, k); }

} // namespace

Laurent sinh_shift(VarId xvar, int k) {
    ExpVec ep = zero_exp(), em = zero_exp();
    ep[static_cast<int>(xvar)] = 1;
    ep[static_cast<int>(VarId::q)] = static_cast<std::int16_t>(k);
    em[static_cast<int>(xvar)] = -1;
    em[static_cast<int>(VarId::q)] = static_cast<std::int16_t>(-k);
    return Laurent::monomial(kHalf, ep) - Laurent::monomial(kHalf, em);
}

Laurent cosh2_shift(VarId xvar, int k) {
    ExpVec ep = zero_exp(), em = zero_exp();
    ep[static_cast<int>(xvar)] = 2;
    ep[static_cast<int>(VarId::q)] = static_cast<std::int16_t>(k);
    em[static_cast<int>(xvar)] = -2;
    em[static_cast<int>(VarId::q)] = static_cast<std::int16_t>(-k);
    return Laurent::monomial(kHalf, ep) + Laurent::monomial(kHalf, em);
}

Laurent sinh_imu(int k) { return kHalf * (qpow(k) - qpow(-k)); }

HeckeParams hecke_params() {
    HeckeParams p;
    p.delta = -(qpow(1) + qpow(-1));
    p.delta0 = -(Laurent::variable(VarId::bigQ) + Laurent::variable(VarId::bigQ, -1));
    p.kappa = qpow(1) * Laurent::variable(VarId::bigQ, -1) +
              qpow(-1) * Laurent::variable(VarId::bigQ);
    return p;
}

GM r_matrix(const Grading& g, VarId xvar) {
    const int N = g.size();
    GM out(g, 2);
    const Laurent b = sinh_shift(xvar, 0);
    const Laurent smu = sinh_imu(1);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            if (i == j) {
                const Laurent a = sinh_shift(xvar, 1 - 2 * g.parity(j));
                out = out + a * gtensor(GM::unit(g, i, i), GM::unit(g, i, i));
            } else {
                out = out + b * gtensor(GM::unit(g, i, i), GM::unit(g, j, j));
                Laurent c = smu * Laurent::variable(xvar, j > i ? 1 : -1);
                if (g.parity(j)) c = -c;
                out = out + c * gtensor(GM::unit(g, i, j), GM::unit(g, j, i));
            }
        }
    }
    return out;
}

GM hecke_u(const Grading& g) {
    const int N = g.size();
    GM out(g, 2);
    for (int a = 1; a <= N; ++a) {
        for (int b = 1; b <= N; ++b) {
            Laurent t;
            if (a == b) {
                t = (g.parity(a) ? -Laurent::one() : Laurent::one()) *
                        qpow(1 - 2 * g.parity(a)) -
                    qpow(1);
            } else {
                t = -qpow(a > b ? -1 : 1);
                Laurent f = g.parity(b) ? -Laurent::one() : Laurent::one();
                out = out + f * gtensor(GM::unit(g, a, b), GM::unit(g, b, a));
            }
            if (!t.is_zero())
                out = out + t * gtensor(GM::unit(g, a, a), GM::unit(g, b, b));
        }
    }
    return out;
}

GM m_matrix(const Grading& g) {
    const int N = g.size();
    GM out(g, 1);
    int parity_sum = 0;
    for (int k = 1; k <= N; ++k) {
        parity_sum += g.parity(k);
        const int e = N - 2 * k + 1 - 2 * g.parity(k) + 4 * parity_sum;
        out.set(k - 1, k - 1, qpow(e));
    }
    return out;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Bosonic: return "bosonic";
        case Family::Fermionic: return "fermionic";
        case Family::Mixed: return "mixed";
        case Family::Identity: return "identity";
    }
    return "?";
}

SpecInfo validate_spec(const BoundarySpec& spec, const Grading& g) {
    if (g != Grading(spec.diagram, spec.m, spec.n))
        throw Error("SpecMismatch", "boundary spec does not match the grading");
    if (spec.family == Family::Identity)
        throw Error("SpecOutOfRange", "identity family carries no boundary element");

    const int N = spec.m + spec.n;
    SpecInfo info;

    if (spec.diagram == DiagramKind::Symmetric) {
        if (spec.family == Family::Fermionic)
            throw Error("SpecOutOfRange",
                        "fermionic family requires the distinguished diagram");
        const int k = spec.n / 2;
        const int max_l = N / 2;
        if (spec.L < 1 || spec.L > max_l)
            throw Error("SpecOutOfRange",
                        "L must lie in 1.." + std::to_string(max_l) +
                            " for this symmetric grading");
        if (spec.family == Family::Bosonic && spec.L > k)
            throw Error("SpecOutOfRange",
                        "bosonic family on the symmetric diagram needs L <= " +
                            std::to_string(k));
        for (int a = 1; a <= spec.L; ++a) info.pairs.emplace_back(a, g.conjugate(a));
        if (N % 2 == 1) {
            info.middle_index = (N + 1) / 2;
            info.middle_zeroed = true;
        }
    } else {
        if (spec.family == Family::Mixed)
            throw Error("MixedOnDistinguished",
                        "the distinguished diagram admits no mixed solution");
        if (spec.family == Family::Bosonic) {
            const int max_l = spec.m / 2;
            if (max_l < 1)
                throw Error("SpecOutOfRange", "bosonic family needs m >= 2");
            if (spec.L < 1 || spec.L > max_l)
                throw Error("SpecOutOfRange",
                            "L must lie in 1.." + std::to_string(max_l) +
                                " for the bosonic family");
            for (int a = 1; a <= spec.L; ++a) info.pairs.emplace_back(a, g.conjugate(a));
            if (spec.m % 2 == 1) {
                info.middle_index = (spec.m + 1) / 2;
                info.middle_zeroed = true;
            }
        } else {
            const int max_l = spec.m + spec.n / 2;
            if (spec.n < 2)
                throw Error("SpecOutOfRange", "fermionic family needs n >= 2");
            if (spec.L < spec.m + 1 || spec.L > max_l)
                throw Error("SpecOutOfRange",
                            "L must lie in " + std::to_string(spec.m + 1) + ".." +
                                std::to_string(max_l) + " for the fermionic family");
            for (int a = spec.m + 1; a <= spec.L; ++a)
                info.pairs.emplace_back(a, g.conjugate(a));
            if (spec.n % 2 == 1) {
                info.middle_index = spec.m + (spec.n + 1) / 2;
                info.middle_zeroed = true;
            }
        }
    }

    for (const auto& [a, abar] : info.pairs) {
        if (a == abar)
            throw Error("SpecOutOfRange",
                        "index " + std::to_string(a) + " is self-conjugate");
        c_var(a); // range check on the coupling alphabet
    }
    for (const auto& [idx, val] : spec.c_values) {
        const bool active = std::any_of(info.pairs.begin(), info.pairs.end(),
                                        [&](const auto& p) { return p.first == idx; });
        if (!active)
            throw Error("SpecOutOfRange",
                        "c value pinned for inactive index " + std::to_string(idx));
        if (val.is_zero())
            throw Error("SpecOutOfRange", "pinned c value must be nonzero");
    }
    return info;
}

namespace {

Laurent c_coupling(const BoundarySpec& spec, int a) {
    auto it = spec.c_values.find(a);
    if (it != spec.c_values.end()) return Laurent::constant(it->second);
    return Laurent::variable(c_var(a));
}

} // namespace

GM boundary_e(const BoundarySpec& spec, const Grading& g) {
    const SpecInfo info = validate_spec(spec, g);
    GM out(g, 1);
    const Laurent h_a = -Laurent::variable(VarId::bigQ, -1);
    const Laurent h_abar = -Laurent::variable(VarId::bigQ, 1);
    for (const auto& [a, abar] : info.pairs) {
        const Laurent c = c_coupling(spec, a);
        out.set(a - 1, a - 1, h_a);
        out.set(abar - 1, abar - 1, h_abar);
        out.set(a - 1, abar - 1, c);
        out.set(abar - 1, a - 1, c.invert_unit());
    }
    return out;
}

GM k_matrix_theorem(const GM& e, VarId xvar) {
    if (e.sites() != 1) throw Error("ShapeMismatch", "boundary element must act on one site");
    const HeckeParams hp = hecke_params();
    // 2 i sinh(i mu) x(lambda) and 2 i sinh(i mu) y(lambda); the common
    // denominator 2 i sinh(i mu) is cleared against both.
    const Laurent two_i_smu = (kI + kI) * sinh_imu(1);
    const Laurent X = -hp.delta0 * cosh2_shift(xvar, 1) - hp.kappa * cosh2_shift(xvar, 0) -
                      two_i_smu * Laurent::variable(VarId::xi);
    const Laurent Y = two_i_smu * kI * sinh_shift(xvar, 0).substitute_monomial(
                                            xvar, Laurent::variable(xvar, 2));
    // These scalar functions solve the reflection equation when combined with
    // the opposite diagonal branch of the boundary element (Q -> -Q); pairing
    // them with e itself leaves a nonzero residual. The flip also makes the
    // result land on the explicit K-matrix normalization under Q -> i r.
    GM eflip(e.grading(), 1);
    const Laurent minus_q = -Laurent::variable(VarId::bigQ);
    for (long i = 0; i < e.dim(); ++i)
        for (long j = 0; j < e.dim(); ++j)
            eflip.set(i, j, e.at(i, j).substitute_monomial(VarId::bigQ, minus_q));
    return X * GM::identity(e.grading(), 1) + Y * eflip;
}

GM k_matrix_explicit(const BoundarySpec& spec, const Grading& g, VarId xvar) {
    const SpecInfo info = validate_spec(spec, g);
    const int N = g.size();
    const Laurent x2 = Laurent::variable(xvar, 2);
    const Laurent xm2 = Laurent::variable(xvar, -2);
    const Laurent rp = Laurent::variable(VarId::r, 1);
    const Laurent rm = Laurent::variable(VarId::r, -1);
    const Laurent xi = Laurent::variable(VarId::xi);
    const Laurent cosh_mu_m = kHalf * (rp + rm);
    const Laurent sinh_2l = kHalf * (x2 - xm2);

    GM out(g, 1);
    for (int a = 1; a <= N; ++a)
        out.set(a - 1, a - 1, kHalf * (x2 * rp + xm2 * rm) - xi);
    for (const auto& [a, abar] : info.pairs) {
        const Laurent c = c_coupling(spec, a);
        out.set(a - 1, a - 1, x2 * cosh_mu_m - xi);
        out.set(abar - 1, abar - 1, xm2 * cosh_mu_m - xi);
        out.set(a - 1, abar - 1, kI * c * sinh_2l);
        out.set(abar - 1, a - 1, kI * c.invert_unit() * sinh_2l);
    }
    return out;
}

std::vector<BoundarySpec> enumerate_valid_specs(int max_total) {
    std::vector<BoundarySpec> out;
    for (int m = 0; m <= max_total; ++m) {
        for (int n = 0; m + n <= max_total; ++n) {
            if (m + n < 1) continue;
            for (DiagramKind d : {DiagramKind::Distinguished, DiagramKind::Symmetric}) {
                if (d == DiagramKind::Symmetric && n % 2 != 0) continue;
                const Grading g(d, m, n);
                for (Family f : {Family::Bosonic, Family::Fermionic, Family::Mixed}) {
                    for (int L = 1; L <= m + n; ++L) {
                        BoundarySpec s{d, m, n, f, L, {}};
                        try {
                            validate_spec(s, g);
                        } catch (const Error&) {
                            continue;
                        }
                        out.push_back(std::move(s));
                    }
                }
            }
        }
    }
    return out;
}

} // namespace qrefl
