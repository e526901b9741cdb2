#include "qrefl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace qrefl {

namespace {

const GaussRational kI = GaussRational::i();

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

GM subst(const GM& a, VarId v, const Laurent& mono) {
    GM out(a.grading(), a.sites());
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < a.dim(); ++j)
            out.set(i, j, a.at(i, j).substitute_monomial(v, mono));
    return out;
}

// One relation instance, both sides kept separate so numeric mode can scale
// residual entries by the larger side.
struct SidePair {
    GM lhs, rhs;
};

// All variables drawn on an annulus of magnitudes [1/2, 2]; q resampled away
// from +-1 where the R-matrix degenerates.
Assignment sample_assignment(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    Assignment a;
    for (int v = 0; v < kNumVars; ++v) {
        const VarId id = static_cast<VarId>(v);
        std::complex<double> z;
        do {
            z = std::polar(mag(rng), phase(rng));
        } while (id == VarId::q &&
                 (std::abs(z - 1.0) < 0.2 || std::abs(z + 1.0) < 0.2));
        a[id] = z;
    }
    return a;
}

double scaled_residual(const NM& lhs, const NM& rhs) {
    const double scale = std::max(max_abs_entry(lhs), max_abs_entry(rhs));
    if (scale == 0.0) return 0.0;
    return max_abs_entry(lhs - rhs) / scale;
}

CheckResult finish(std::string name, CheckMode mode, const NumericParams& np,
                   const std::vector<SidePair>& sides, Clock::time_point t0,
                   std::string detail = "") {
    CheckResult r;
    r.name = std::move(name);
    r.mode = mode;
    r.detail = std::move(detail);
    if (mode == CheckMode::Exact) {
        long total = 0;
        for (const SidePair& s : sides) total += residual_term_count(s.lhs - s.rhs);
        r.residual_terms = total;
        r.passed = total == 0;
    } else {
        std::mt19937_64 rng(np.seed);
        double worst = 0.0;
        for (int p = 0; p < np.points; ++p) {
            const Assignment a = sample_assignment(rng);
            for (const SidePair& s : sides)
                worst = std::max(worst, scaled_residual(evaluate_matrix(s.lhs, a),
                                                        evaluate_matrix(s.rhs, a)));
        }
        r.max_abs = worst;
        r.passed = worst < np.tolerance;
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

// R with the spectral argument replaced: x -> x1 * x2^pow2 (pow2 in {-1,0,1}),
// or x -> the plain variable `v` when pow2 == 0 and v != x1.
GM r_at(const Grading& g, const Laurent& arg) {
    return subst(r_matrix(g), VarId::x, arg);
}

// Greedy exact division by the leading term; returns the quotient only when
// num == quot * den exactly.
std::optional<Laurent> try_divide(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return Laurent::zero();
    const Term& dl = den.terms().front();
    Laurent quot, rem = num;
    const std::size_t cap = num.term_count() + den.term_count() + 64;
    int guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 4096 || rem.term_count() > cap) return std::nullopt;
        const Term& rl = rem.terms().front();
        ExpVec e{};
        for (int v = 0; v < kNumVars; ++v)
            e[v] = static_cast<std::int16_t>(rl.exp[v] - dl.exp[v]);
        if (e[static_cast<int>(VarId::xi)] < 0) return std::nullopt;
        const Laurent mono = Laurent::monomial(rl.coeff * dl.coeff.inverse(), e);
        quot += mono;
        rem -= mono * den;
    }
    return quot;
}

// Shared boundary-relation list for a one-site element e:
// (h1) e^2 = delta_0 e, (h2) the quartic exchange with kappa, (h3) [U_0, U_2].
std::vector<SidePair> hecke_b_sides(const GM& e, const Grading& g) {
    const HeckeParams hp = hecke_params();
    std::vector<SidePair> sides;
    sides.push_back({e * e, hp.delta0 * e});
    const GM u = hecke_u(g);
    const GM u0 = embed(e, 1, 2);
    const GM u1 = u;
    sides.push_back({u1 * u0 * u1 * u0 - hp.kappa * (u1 * u0),
                     u0 * u1 * u0 * u1 - hp.kappa * (u0 * u1)});
    sides.push_back({embed(e, 1, 3) * embed(u, 2, 3), embed(u, 2, 3) * embed(e, 1, 3)});
    return sides;
}

std::vector<SidePair> reflection_sides(const GM& k, const Grading& g) {
    const Laurent x1 = Laurent::variable(VarId::x1);
    const Laurent x2 = Laurent::variable(VarId::x2);
    const GM p = permutation_op<Laurent>(g);
    const GM d12 = r_at(g, x1 * Laurent::variable(VarId::x2, -1));
    const GM d21 = p * d12 * p;
    const GM s12 = r_at(g, x1 * x2);
    const GM s21 = p * s12 * p;
    const GM k1 = embed(subst(k, VarId::x, x1), 1, 2);
    const GM k2 = embed(subst(k, VarId::x, x2), 2, 2);
    return {{d12 * k1 * s21 * k2, k2 * s12 * k1 * d21}};
}

// Double-row monodromy and transfer matrix, shared by the exact and numeric
// pipelines. r2 is the two-site R in the relevant scalars, k1 the one-site
// boundary, m1 the one-site twist.
template <typename S>
MatrixT<S> dmono_from(const Grading& g, int n_sites, const MatrixT<S>& r2,
                      const MatrixT<S>& k1) {
    const int total = n_sites + 1;
    const MatrixT<S> p = permutation_op<S>(g);
    std::vector<MatrixT<S>> r0i, ri0; // index i-1 = quantum site i
    r0i.push_back(embed(r2, 1, total));
    ri0.push_back(embed(p * r2 * p, 1, total));
    for (int i = 2; i <= n_sites; ++i) {
        const MatrixT<S> w = embed(p, i, total);
        r0i.push_back(w * r0i.back() * w);
        ri0.push_back(w * ri0.back() * w);
    }
    MatrixT<S> t = r0i.back();
    for (int i = n_sites - 1; i >= 1; --i) t = t * r0i[i - 1];
    MatrixT<S> that = ri0.front();
    for (int i = 2; i <= n_sites; ++i) that = that * ri0[i - 1];
    return t * embed(k1, 1, total) * that;
}

template <typename S>
MatrixT<S> transfer_from(const Grading& g, int n_sites, const MatrixT<S>& r2,
                         const MatrixT<S>& k1, const MatrixT<S>& m1) {
    return supertrace_aux(embed(m1, 1, n_sites + 1) * dmono_from(g, n_sites, r2, k1));
}

void require_sites(const TransferContext& ctx) {
    if (ctx.sites < 1)
        throw Error("TooFewSites", "the transfer matrix needs at least one site");
    if (ctx.k.sites() != 1 || ctx.k.grading() != ctx.grading)
        throw Error("ShapeMismatch", "boundary K must be one site in the context grading");
}

// The polynomial form of the return chain That relies on R(l) R(-l) being
// scalar, so transfer construction refuses to proceed without it.
void require_unitary(const Grading& g) {
    try {
        unitarity_rho(g);
    } catch (const Error&) {
        throw Error("UnitarityUnverified",
                    "R-matrix unitarity failed; the polynomial inverse monodromy "
                    "is not available");
    }
}

// Signed block extraction: B_ab[I, J] = (-1)^{[I]([a]+[b])} M[(a,I),(b,J)],
// undoing the sign the graded Kronecker embedding attaches to e_ab (x) B.
std::vector<GM> signed_blocks(const GM& big, const Grading& g, int n_sites) {
    const int nn = g.size();
    const long d = big.dim() / nn;
    std::vector<GM> out;
    out.reserve(static_cast<std::size_t>(nn) * nn);
    for (int a = 1; a <= nn; ++a)
        for (int b = 1; b <= nn; ++b) {
            GM blk(g, n_sites);
            const int pab = g.parity(a) ^ g.parity(b);
            for (long i = 0; i < d; ++i)
                for (long j = 0; j < d; ++j) {
                    Laurent v = big.at((a - 1) * d + i, (b - 1) * d + j);
                    if (pab && g.multi_parity(i, n_sites)) v = -v;
                    blk.set(i, j, std::move(v));
                }
            out.push_back(std::move(blk));
        }
    return out;
}

// Leading (+1) / trailing (-1) x-coefficient of R; R(x) = x R+ - x^-1 R-.
GM r_extremal(const Grading& g, int sign) {
    const GM r = r_matrix(g);
    GM out(g, 2);
    for (long i = 0; i < r.dim(); ++i)
        for (long j = 0; j < r.dim(); ++j) {
            Laurent c = r.at(i, j).coeff_at_degree(VarId::x, sign >= 0 ? 1 : -1);
            if (sign < 0) c = -c;
            out.set(i, j, std::move(c));
        }
    return out;
}

std::string degree_note(int lo, int hi) {
    std::ostringstream os;
    os << "monodromy x-degrees [" << lo << ", " << hi << "]";
    return os.str();
}

} // namespace

std::string mode_name(CheckMode m) {
    return m == CheckMode::Exact ? "exact" : "numeric";
}

TransferContext make_context(const Grading& g, int sites) {
    return TransferContext{g, sites, GM::identity(g, 1), std::nullopt};
}

TransferContext make_context(const BoundarySpec& spec, int sites) {
    Grading g(spec.diagram, spec.m, spec.n);
    return TransferContext{g, sites, k_matrix_explicit(spec, g), spec};
}

CheckResult check_gybe(const Grading& g, CheckMode mode, const NumericParams& np) {
    const auto t0 = Clock::now();
    const Laurent x1 = Laurent::variable(VarId::x1);
    const Laurent x2 = Laurent::variable(VarId::x2);
    const GM w23 = embed(permutation_op<Laurent>(g), 2, 3);
    const GM r12 = embed(r_at(g, x1 * Laurent::variable(VarId::x2, -1)), 1, 3);
    const GM r13 = w23 * embed(r_at(g, x1), 1, 3) * w23;
    const GM r23 = embed(r_at(g, x2), 2, 3);
    return finish("gybe", mode, np, {{r12 * r13 * r23, r23 * r13 * r12}}, t0);
}

CheckResult check_hecke_a(const Grading& g, int sites, CheckMode mode,
                          const NumericParams& np) {
    if (sites < 3)
        throw Error("TooFewSites", "the braid relation needs at least three sites");
    const auto t0 = Clock::now();
    const HeckeParams hp = hecke_params();
    const GM u = hecke_u(g);
    std::vector<GM> ui;
    for (int i = 1; i < sites; ++i) ui.push_back(embed(u, i, sites));
    std::vector<SidePair> sides;
    for (const GM& a : ui) sides.push_back({a * a, hp.delta * a});
    for (std::size_t i = 0; i + 1 < ui.size(); ++i)
        sides.push_back({ui[i] * ui[i + 1] * ui[i] - ui[i],
                         ui[i + 1] * ui[i] * ui[i + 1] - ui[i + 1]});
    for (std::size_t i = 0; i < ui.size(); ++i)
        for (std::size_t j = i + 2; j < ui.size(); ++j)
            sides.push_back({ui[i] * ui[j], ui[j] * ui[i]});
    return finish("hecke_a", mode, np, sides, t0);
}

CheckResult check_baxterization(const Grading& g, CheckMode mode,
                                const NumericParams& np) {
    const auto t0 = Clock::now();
    const GM p = permutation_op<Laurent>(g);
    const GM rcheck = p * r_matrix(g);
    const GM rhs = sinh_shift(VarId::x, 0) * hecke_u(g) +
                   sinh_shift(VarId::x, 1) * GM::identity(g, 2);
    return finish("baxterization", mode, np, {{rcheck, rhs}}, t0);
}

CheckResult check_hecke_b(const BoundarySpec& spec, const Grading& g, CheckMode mode,
                          const NumericParams& np) {
    const auto t0 = Clock::now();
    const SpecInfo info = validate_spec(spec, g);
    std::string detail;
    if (info.middle_zeroed)
        detail = "self-conjugate middle index " + std::to_string(info.middle_index) +
                 " held at zero";
    return finish("hecke_b", mode, np, hecke_b_sides(boundary_e(spec, g), g), t0,
                  detail);
}

GM mixed_boundary_e(const Grading& g) {
    if (g.kind() != DiagramKind::Distinguished || g.m() < 1 || g.n() < 2)
        throw Error("SpecOutOfRange",
                    "the mixed control needs the distinguished diagram with m >= 1 "
                    "and n >= 2");
    GM out(g, 1);
    const Laurent h_lo = -Laurent::variable(VarId::bigQ, -1);
    const Laurent h_hi = -Laurent::variable(VarId::bigQ);
    if (g.m() >= 2) {
        const int abar = g.conjugate(1);
        const Laurent c = Laurent::variable(c_var(1));
        out.set(0, 0, h_lo);
        out.set(abar - 1, abar - 1, h_hi);
        out.set(0, abar - 1, c);
        out.set(abar - 1, 0, c.invert_unit());
    } else {
        // Self-conjugate bosonic index: only the diagonal weight survives.
        out.set(0, 0, h_lo);
    }
    const int a = g.m() + 1;
    const int abar = g.conjugate(a);
    const Laurent c = Laurent::variable(c_var(a));
    out.set(a - 1, a - 1, h_lo);
    out.set(abar - 1, abar - 1, h_hi);
    out.set(a - 1, abar - 1, c);
    out.set(abar - 1, a - 1, c.invert_unit());
    return out;
}

CheckResult check_hecke_b_mixed(const Grading& g, CheckMode mode,
                                const NumericParams& np) {
    const auto t0 = Clock::now();
    return finish("hecke_b", mode, np, hecke_b_sides(mixed_boundary_e(g), g), t0,
                  "mixed-parity control element on the distinguished diagram");
}

CheckResult check_reflection(const GM& k, const Grading& g, CheckMode mode,
                             const NumericParams& np) {
    const auto t0 = Clock::now();
    if (k.sites() != 1 || k.grading() != g)
        throw Error("ShapeMismatch", "K must be a one-site matrix in the given grading");
    return finish("reflection", mode, np, reflection_sides(k, g), t0);
}

Laurent unitarity_rho(const Grading& g) {
    const GM p = permutation_op<Laurent>(g);
    const GM prod =
        r_matrix(g) * (p * r_at(g, Laurent::variable(VarId::x, -1)) * p);
    const Laurent rho = prod.at(0, 0);
    if (residual_term_count(prod - rho * GM::identity(g, 2)) != 0)
        throw Error("NotProportionalToIdentity",
                    "R_12(l) R_21(-l) is not a scalar multiple of the identity");
    return rho;
}

CheckResult check_unitarity(const Grading& g, CheckMode mode, const NumericParams& np) {
    const auto t0 = Clock::now();
    const GM p = permutation_op<Laurent>(g);
    const GM prod =
        r_matrix(g) * (p * r_at(g, Laurent::variable(VarId::x, -1)) * p);
    const Laurent rho = prod.at(0, 0);
    return finish("unitarity", mode, np, {{prod, rho * GM::identity(g, 2)}}, t0,
                  "rho = " + rho.to_string());
}

Laurent k_consistency_factor(const GM& theorem_k, const GM& explicit_k) {
    if (theorem_k.dim() != explicit_k.dim() || theorem_k.sites() != explicit_k.sites())
        throw Error("NotProportional", "shape mismatch between the two K forms");
    std::optional<Laurent> factor;
    for (long i = 0; i < theorem_k.dim() && !factor; ++i)
        for (long j = 0; j < theorem_k.dim() && !factor; ++j)
            if (!explicit_k.at(i, j).is_zero() && !theorem_k.at(i, j).is_zero())
                factor = try_divide(theorem_k.at(i, j), explicit_k.at(i, j));
    if (!factor || factor->is_zero())
        throw Error("NotProportional", "no exact entry-wise quotient exists");
    if (residual_term_count(theorem_k - *factor * explicit_k) != 0)
        throw Error("NotProportional",
                    "entry quotients of the two K forms do not agree");
    return *factor;
}

CheckResult check_k_consistency(const BoundarySpec& spec, const Grading& g,
                                CheckMode mode, const NumericParams& np) {
    const auto t0 = Clock::now();
    const GM theorem_r = subst(k_matrix_theorem(boundary_e(spec, g)), VarId::bigQ,
                               Laurent::constant(kI) * Laurent::variable(VarId::r));
    const GM expl = k_matrix_explicit(spec, g);
    const Laurent factor = k_consistency_factor(theorem_r, expl);
    return finish("k_consistency", mode, np, {{theorem_r, factor * expl}}, t0,
                  "factor = " + factor.to_string());
}

GM double_row_monodromy(const TransferContext& ctx, VarId xvar) {
    require_sites(ctx);
    const Laurent arg = Laurent::variable(xvar);
    return dmono_from(ctx.grading, ctx.sites, r_at(ctx.grading, arg),
                      subst(ctx.k, VarId::x, arg));
}

GM build_transfer(const TransferContext& ctx, VarId xvar) {
    require_sites(ctx);
    require_unitary(ctx.grading);
    const Laurent arg = Laurent::variable(xvar);
    return transfer_from(ctx.grading, ctx.sites, r_at(ctx.grading, arg),
                         subst(ctx.k, VarId::x, arg), m_matrix(ctx.grading));
}

CheckResult check_transfer(const TransferContext& ctx, CheckMode mode,
                           const NumericParams& np) {
    const auto t0 = Clock::now();
    if (mode == CheckMode::Exact) {
        const GM t1 = build_transfer(ctx, VarId::x1);
        const GM t2 = build_transfer(ctx, VarId::x2);
        return finish("transfer", mode, np, {{t1 * t2, t2 * t1}}, t0);
    }
    // Numeric pipeline: evaluate the one- and two-site ingredients at each
    // sample point, then run the same product formula on complex matrices.
    require_sites(ctx);
    require_unitary(ctx.grading);
    const GM r = r_matrix(ctx.grading);
    const GM m = m_matrix(ctx.grading);
    std::mt19937_64 rng(np.seed);
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0;
    for (int pt = 0; pt < np.points; ++pt) {
        Assignment a1 = sample_assignment(rng);
        Assignment a2 = a1;
        a2[VarId::x] = std::polar(mag(rng), phase(rng));
        const NM m1 = evaluate_matrix(m, a1);
        const NM ta = transfer_from(ctx.grading, ctx.sites, evaluate_matrix(r, a1),
                                    evaluate_matrix(ctx.k, a1), m1);
        const NM tb = transfer_from(ctx.grading, ctx.sites, evaluate_matrix(r, a2),
                                    evaluate_matrix(ctx.k, a2), m1);
        worst = std::max(worst, scaled_residual(ta * tb, tb * ta));
    }
    CheckResult res;
    res.name = "transfer";
    res.mode = mode;
    res.max_abs = worst;
    res.passed = worst < np.tolerance;
    res.elapsed_ms = ms_since(t0);
    return res;
}

BoundaryCharges extract_boundary_charges(const TransferContext& ctx, int sign) {
    require_sites(ctx);
    const GM mono = double_row_monodromy(ctx);
    int lo = 0, hi = 0;
    bool seen = false;
    for (long i = 0; i < mono.dim(); ++i)
        for (long j = 0; j < mono.dim(); ++j)
            if (const auto rng = mono.at(i, j).degree_range(VarId::x)) {
                lo = seen ? std::min(lo, rng->first) : rng->first;
                hi = seen ? std::max(hi, rng->second) : rng->second;
                seen = true;
            }
    if (!seen)
        throw Error("ShapeMismatch", "the double-row monodromy vanished identically");
    BoundaryCharges out{sign >= 0 ? 1 : -1, 0, GM(ctx.grading, 1 + ctx.sites), {}};
    out.degree = out.sign > 0 ? hi : lo;
    GM ext(ctx.grading, 1 + ctx.sites);
    for (long i = 0; i < mono.dim(); ++i)
        for (long j = 0; j < mono.dim(); ++j)
            ext.set(i, j, mono.at(i, j).coeff_at_degree(VarId::x, out.degree));
    out.blocks = signed_blocks(ext, ctx.grading, ctx.sites);
    out.extremal = std::move(ext);
    return out;
}

CheckResult check_charges(const TransferContext& ctx, CheckMode mode,
                          const NumericParams& np) {
    const auto t0 = Clock::now();
    const BoundaryCharges plus = extract_boundary_charges(ctx, +1);
    const BoundaryCharges minus = extract_boundary_charges(ctx, -1);
    const int nn = ctx.grading.size();
    std::vector<SidePair> sides;
    for (const BoundaryCharges* ch : {&plus, &minus}) {
        GM recomposed(ctx.grading, 1 + ctx.sites);
        int idx = 0;
        for (int a = 1; a <= nn; ++a)
            for (int b = 1; b <= nn; ++b)
                recomposed =
                    recomposed + gtensor(GM::unit(ctx.grading, a, b), ch->blocks[idx++]);
        sides.push_back({recomposed, ch->extremal});
    }
    CheckResult res = finish("charges", mode, np, sides, t0,
                             degree_note(minus.degree, plus.degree));
    if ((plus.degree - minus.degree) % 2 != 0) {
        res.passed = false;
        res.detail += "; degree spread is odd";
    }
    return res;
}

CheckResult check_exchange_relation(const TransferContext& ctx, int sign,
                                    CheckMode mode, const NumericParams& np) {
    const auto t0 = Clock::now();
    const BoundaryCharges ch = extract_boundary_charges(ctx, sign);
    const Grading& g = ctx.grading;
    const int nn = g.size();
    const int total = 2 + ctx.sites;
    const GM p = permutation_op<Laurent>(g);
    const GM rr = r_extremal(g, ch.sign);
    const GM r12 = embed(rr, 1, total);
    const GM r21 = embed(p * rr * p, 1, total);
    GM t1(g, total), tpm(g, 1 + ctx.sites);
    int idx = 0;
    for (int a = 1; a <= nn; ++a)
        for (int b = 1; b <= nn; ++b) {
            t1 = t1 + gtensor(GM::unit(g, a, b),
                              gtensor(GM::identity(g, 1), ch.blocks[idx]));
            tpm = tpm + gtensor(GM::unit(g, a, b), ch.blocks[idx]);
            ++idx;
        }
    const GM t2 = gtensor(GM::identity(g, 1), tpm);
    const std::string name = ch.sign > 0 ? "exchange_plus" : "exchange_minus";
    return finish(name, mode, np, {{r12 * t1 * r21 * t2, t2 * (r12 * t1 * r21)}}, t0,
                  "extremal x-degree " + std::to_string(ch.degree));
}

CheckResult check_centrality(const TransferContext& ctx, CheckMode mode,
                             const NumericParams& np) {
    const auto t0 = Clock::now();
    if (!ctx.spec && ctx.sites < 2)
        throw Error("TooFewSites",
                    "with K = I centrality only involves U_i, which needs N >= 2");
    const Grading& g = ctx.grading;
    std::vector<GM> generators;
    std::string detail;
    const GM u = hecke_u(g);
    for (int i = 1; i < ctx.sites; ++i) generators.push_back(embed(u, i, ctx.sites));
    if (ctx.spec) {
        // The boundary generator pairs with the diagonal branch that actually
        // occurs in K: boundary_e under Q -> -i r.
        const GM e = subst(boundary_e(*ctx.spec, g), VarId::bigQ,
                           Laurent::constant(-kI) * Laurent::variable(VarId::r));
        generators.push_back(embed(e, 1, ctx.sites));
        detail = "U_1..U_" + std::to_string(ctx.sites - 1) + " and U_0";
    } else {
        detail = "K = I: boundary generator excluded";
    }
    std::vector<SidePair> sides;
    for (int sign : {+1, -1}) {
        const BoundaryCharges ch = extract_boundary_charges(ctx, sign);
        for (const GM& gen : generators)
            for (const GM& blk : ch.blocks) sides.push_back({gen * blk, blk * gen});
    }
    return finish("centrality", mode, np, sides, t0, detail);
}

GM hamiltonian(const TransferContext& ctx) {
    const GM t = build_transfer(ctx);
    GM out(ctx.grading, ctx.sites);
    for (long i = 0; i < t.dim(); ++i)
        for (long j = 0; j < t.dim(); ++j)
            out.set(i, j, t.at(i, j)
                              .log_derivative(VarId::x)
                              .substitute_monomial(VarId::x, Laurent::one()));
    return out;
}

CheckResult check_hamiltonian(const TransferContext& ctx, CheckMode mode,
                              const NumericParams& np) {
    const auto t0 = Clock::now();
    const GM h = hamiltonian(ctx);
    const GM t2 = build_transfer(ctx, VarId::x2);
    return finish("hamiltonian", mode, np, {{h * t2, t2 * h}}, t0);
}

} // namespace qrefl
