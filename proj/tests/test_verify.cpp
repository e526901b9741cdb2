#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "qrefl/algebra.hpp"
#include "qrefl/verify.hpp"

using namespace qrefl;

namespace {

Grading dist(int m, int n) { return Grading(DiagramKind::Distinguished, m, n); }
Grading sym(int m, int n) { return Grading(DiagramKind::Symmetric, m, n); }

BoundarySpec spec_of(DiagramKind d, int m, int n, Family f, int L) {
    BoundarySpec s;
    s.diagram = d;
    s.m = m;
    s.n = n;
    s.family = f;
    s.L = L;
    return s;
}

GM subst_q(const GM& a, const Laurent& repl) {
    GM out(a.grading(), a.sites());
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < a.dim(); ++j)
            out.set(i, j, a.at(i, j).substitute_monomial(VarId::bigQ, repl));
    return out;
}

const Laurent kIR =
    Laurent::constant(GaussRational::i()) * Laurent::variable(VarId::r);

} // namespace

TEST_CASE("check result bookkeeping") {
    const CheckResult ex = check_gybe(dist(1, 1));
    CHECK(ex.mode == CheckMode::Exact);
    CHECK(ex.residual_terms == 0);
    CHECK(ex.max_abs == -1.0);
    CHECK(mode_name(ex.mode) == "exact");

    NumericParams np;
    np.seed = 7;
    np.points = 5;
    const CheckResult nu = check_gybe(dist(1, 1), CheckMode::Numeric, np);
    CHECK(nu.mode == CheckMode::Numeric);
    CHECK(nu.residual_terms == -1);
    CHECK(nu.max_abs >= 0.0);
    CHECK(nu.max_abs < 1e-9);
    CHECK(nu.passed);
    CHECK(mode_name(nu.mode) == "numeric");
}

TEST_CASE("graded yang-baxter equation holds exactly") {
    for (const Grading& g : {dist(1, 1), dist(2, 1), dist(2, 0), sym(1, 2)}) {
        const CheckResult r = check_gybe(g);
        CHECK(r.passed);
        CHECK(r.residual_terms == 0);
    }
}

TEST_CASE("a-type hecke relations") {
    const CheckResult r3 = check_hecke_a(dist(1, 1), 3);
    CHECK(r3.passed);
    const CheckResult r4 = check_hecke_a(dist(2, 1), 4); // covers distant pairs
    CHECK(r4.passed);
    CHECK(error_code([] { check_hecke_a(dist(1, 1), 2); }) == "TooFewSites");
}

TEST_CASE("baxterization of the hecke generator") {
    for (const Grading& g : {dist(1, 1), sym(1, 2), dist(2, 1)})
        CHECK(check_baxterization(g).passed);
}

TEST_CASE("b-type relations pass on the symmetric diagram and single-parity specs") {
    const BoundarySpec cases[] = {
        spec_of(DiagramKind::Symmetric, 1, 2, Family::Mixed, 1),
        spec_of(DiagramKind::Symmetric, 0, 2, Family::Bosonic, 1),
        spec_of(DiagramKind::Symmetric, 2, 2, Family::Mixed, 2),
        spec_of(DiagramKind::Distinguished, 2, 0, Family::Bosonic, 1),
        spec_of(DiagramKind::Distinguished, 0, 2, Family::Fermionic, 1),
    };
    for (const BoundarySpec& s : cases) {
        const Grading g(s.diagram, s.m, s.n);
        const CheckResult r = check_hecke_b(s, g);
        CHECK(r.passed);
        CHECK(r.residual_terms == 0);
    }
}

TEST_CASE("b-type relations fail on distinguished mixed-parity diagrams") {
    // With both parities present the distinguished conjugation never straddles
    // the inert indices, so the quartic exchange relation cannot close. The
    // checker reports this honestly.
    const BoundarySpec cases[] = {
        spec_of(DiagramKind::Distinguished, 2, 1, Family::Bosonic, 1),
        spec_of(DiagramKind::Distinguished, 1, 2, Family::Fermionic, 2),
        spec_of(DiagramKind::Distinguished, 2, 2, Family::Bosonic, 1),
    };
    for (const BoundarySpec& s : cases) {
        const Grading g(s.diagram, s.m, s.n);
        const CheckResult r = check_hecke_b(s, g);
        CHECK_FALSE(r.passed);
        CHECK(r.residual_terms > 0);
    }
    // The numeric verdict agrees with the exact one.
    NumericParams np;
    np.points = 4;
    const CheckResult nu = check_hecke_b(cases[0], dist(2, 1), CheckMode::Numeric, np);
    CHECK_FALSE(nu.passed);
    CHECK(nu.max_abs > 1e-3);
}

TEST_CASE("mixed-parity control element fails as designed") {
    for (const Grading& g : {dist(1, 2), dist(2, 2)}) {
        const CheckResult r = check_hecke_b_mixed(g);
        CHECK_FALSE(r.passed);
        CHECK(r.residual_terms > 0);
    }
    CHECK(error_code([] { mixed_boundary_e(sym(1, 2)); }) == "SpecOutOfRange");
    CHECK(error_code([] { mixed_boundary_e(dist(2, 0)); }) == "SpecOutOfRange");
}

TEST_CASE("reflection equation with the identity boundary") {
    for (const Grading& g : {dist(1, 1), sym(1, 2)}) {
        const CheckResult r = check_reflection(GM::identity(g, 1), g);
        CHECK(r.passed);
    }
}

TEST_CASE("reflection equation with explicit boundaries") {
    const BoundarySpec pass_cases[] = {
        spec_of(DiagramKind::Symmetric, 1, 2, Family::Mixed, 1),
        spec_of(DiagramKind::Distinguished, 0, 2, Family::Fermionic, 1),
    };
    for (const BoundarySpec& s : pass_cases) {
        const Grading g(s.diagram, s.m, s.n);
        CHECK(check_reflection(k_matrix_explicit(s, g), g).passed);
    }

    // The distinguished mixed-parity class fails here too.
    const BoundarySpec bad = spec_of(DiagramKind::Distinguished, 2, 1, Family::Bosonic, 1);
    const Grading gb(bad.diagram, bad.m, bad.n);
    const CheckResult rb = check_reflection(k_matrix_explicit(bad, gb), gb);
    CHECK_FALSE(rb.passed);
    CHECK(rb.residual_terms > 0);

    // A perturbed boundary must fail.
    const Grading g = sym(1, 2);
    GM k = k_matrix_explicit(pass_cases[0], g);
    k.set(0, 0, k.at(0, 0) + Laurent::variable(VarId::x));
    CHECK_FALSE(check_reflection(k, g).passed);

    CHECK(error_code([&] {
              check_reflection(GM::identity(dist(1, 1), 1), sym(1, 2));
          }) == "ShapeMismatch");
}

TEST_CASE("r-matrix unitarity") {
    for (const Grading& g : {dist(1, 1), dist(2, 1), sym(1, 2)}) {
        const CheckResult r = check_unitarity(g);
        CHECK(r.passed);
        CHECK(r.detail.find("rho") != std::string::npos);
        CHECK_FALSE(unitarity_rho(g).is_zero());
    }
}

TEST_CASE("theorem and explicit k-matrices are proportional for every valid spec") {
    const Laurent expected_factor =
        Laurent::constant(GaussRational::i()) *
        (Laurent::variable(VarId::q) - Laurent::variable(VarId::q, -1));
    for (const BoundarySpec& s : enumerate_valid_specs(3)) {
        const Grading g(s.diagram, s.m, s.n);
        const CheckResult r = check_k_consistency(s, g);
        CHECK(r.passed);
        const GM th = subst_q(k_matrix_theorem(boundary_e(s, g)), kIR);
        CHECK(k_consistency_factor(th, k_matrix_explicit(s, g)) == expected_factor);
    }
}

TEST_CASE("k-matrix proportionality failures are detected") {
    const BoundarySpec s1 = spec_of(DiagramKind::Symmetric, 2, 2, Family::Mixed, 1);
    const BoundarySpec s2 = spec_of(DiagramKind::Symmetric, 2, 2, Family::Mixed, 2);
    const Grading g = sym(2, 2);
    const GM th = subst_q(k_matrix_theorem(boundary_e(s1, g)), kIR);
    CHECK(error_code([&] { k_consistency_factor(th, k_matrix_explicit(s2, g)); }) ==
          "NotProportional");
    const GM other = subst_q(
        k_matrix_theorem(boundary_e(
            spec_of(DiagramKind::Symmetric, 1, 2, Family::Mixed, 1), sym(1, 2))),
        kIR);
    CHECK(error_code([&] { k_consistency_factor(other, k_matrix_explicit(s2, g)); }) ==
          "NotProportional");
}

TEST_CASE("transfer matrices commute exactly") {
    CHECK(check_transfer(make_context(dist(1, 1), 1)).passed);
    CHECK(check_transfer(make_context(dist(1, 1), 2)).passed);
    const BoundarySpec s = spec_of(DiagramKind::Symmetric, 1, 2, Family::Mixed, 1);
    CHECK(check_transfer(make_context(s, 1)).passed);
}

TEST_CASE("transfer matrices commute numerically") {
    NumericParams np;
    np.seed = 11;
    np.points = 6;
    const CheckResult a = check_transfer(make_context(dist(1, 1), 2),
                                         CheckMode::Numeric, np);
    CHECK(a.passed);
    CHECK(a.max_abs < 1e-9);
    const BoundarySpec s = spec_of(DiagramKind::Symmetric, 1, 2, Family::Mixed, 1);
    const CheckResult b = check_transfer(make_context(s, 1), CheckMode::Numeric, np);
    CHECK(b.passed);

    // Same seed, same verdict and residual; the sampling is deterministic.
    const CheckResult b2 = check_transfer(make_context(s, 1), CheckMode::Numeric, np);
    CHECK(b.max_abs == b2.max_abs);
}

TEST_CASE("transfer construction guards") {
    CHECK(error_code([] { build_transfer(make_context(dist(1, 1), 0)); }) ==
          "TooFewSites");
    CHECK(error_code([] { check_transfer(make_context(dist(1, 1), 0)); }) ==
          "TooFewSites");
}

TEST_CASE("the graded trace is what makes the transfer commute") {
    // With the plain (ungraded) auxiliary trace the same double-row monodromy
    // gives non-commuting operators; the graded trace fixes it.
    const BoundarySpec s = spec_of(DiagramKind::Symmetric, 1, 2, Family::Mixed, 1);
    const TransferContext ctx = make_context(s, 1);
    const GM m1 = embed(m_matrix(ctx.grading), 1, 2);
    const GM t1 = trace_aux_plain(m1 * double_row_monodromy(ctx, VarId::x1));
    const GM t2 = trace_aux_plain(m1 * double_row_monodromy(ctx, VarId::x2));
    CHECK(residual_term_count(t1 * t2 - t2 * t1) > 0);
    CHECK(check_transfer(ctx).passed);
}

TEST_CASE("boundary charge extraction degrees") {
    const TransferContext c1 = make_context(dist(1, 1), 1);
    CHECK(extract_boundary_charges(c1, +1).degree == 2);
    CHECK(extract_boundary_charges(c1, -1).degree == -2);
    const TransferContext c2 = make_context(dist(1, 1), 2);
    CHECK(extract_boundary_charges(c2, +1).degree == 4);
    CHECK(extract_boundary_charges(c2, -1).degree == -4);

    const BoundarySpec s = spec_of(DiagramKind::Symmetric, 1, 2, Family::Mixed, 1);
    const TransferContext c3 = make_context(s, 2);
    const BoundaryCharges plus = extract_boundary_charges(c3, +1);
    CHECK(plus.degree == 6);
    CHECK(extract_boundary_charges(c3, -1).degree == -6);
    CHECK(plus.blocks.size() == 9);
}

TEST_CASE("signed blocks recompose the extremal coefficient") {
    CHECK(check_charges(make_context(dist(1, 1), 2)).passed);
    const BoundarySpec s = spec_of(DiagramKind::Symmetric, 1, 2, Family::Mixed, 1);
    const CheckResult r = check_charges(make_context(s, 1));
    CHECK(r.passed);
    CHECK(r.detail.find("x-degrees") != std::string::npos);
}

TEST_CASE("boundary charges satisfy the exchange relation") {
    const TransferContext ident = make_context(dist(1, 1), 1);
    const CheckResult rp = check_exchange_relation(ident, +1);
    CHECK(rp.passed);
    CHECK(rp.name == "exchange_plus");
    const CheckResult rm = check_exchange_relation(ident, -1);
    CHECK(rm.passed);
    CHECK(rm.name == "exchange_minus");

    const BoundarySpec s = spec_of(DiagramKind::Symmetric, 1, 2, Family::Mixed, 1);
    const TransferContext expl = make_context(s, 1);
    CHECK(check_exchange_relation(expl, +1).passed);
    CHECK(check_exchange_relation(expl, -1).passed);
}

TEST_CASE("boundary charges commute with the residual generators") {
    CHECK(check_centrality(make_context(dist(1, 1), 2)).passed);
    CHECK(error_code([] { check_centrality(make_context(dist(1, 1), 1)); }) ==
          "TooFewSites");

    const BoundarySpec s = spec_of(DiagramKind::Symmetric, 1, 2, Family::Mixed, 1);
    CHECK(check_centrality(make_context(s, 1)).passed);

    // On the distinguished mixed-parity class the boundary generator does not
    // centralize the charges; the verdict stays honest.
    const BoundarySpec bad = spec_of(DiagramKind::Distinguished, 2, 1, Family::Bosonic, 1);
    const CheckResult rb = check_centrality(make_context(bad, 1));
    CHECK_FALSE(rb.passed);
    CHECK(rb.residual_terms > 0);
}

TEST_CASE("hamiltonian commutes with the transfer matrix") {
    CHECK(check_hamiltonian(make_context(dist(1, 1), 2)).passed);
    const BoundarySpec s = spec_of(DiagramKind::Symmetric, 1, 2, Family::Mixed, 1);
    CHECK(check_hamiltonian(make_context(s, 1)).passed);
}
