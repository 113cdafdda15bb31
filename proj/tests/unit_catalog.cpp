#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orelax/catalog.hpp"

using namespace orelax;

namespace {

/// Check one Hamiltonian-symmetry clause: lhs(Hx) == rhs_frame(c*Hx(sa) + C).
bool check_prop(const SystemData& S, const PropRow& row) {
    REQUIRE(row.C); // derived-constant rows are handled by the verifier
    OpNF lhs = apply_steps(row.lhs, *S.Hx0);
    OpNF framed = apply_steps(row.rhs_frame, S.Hx(row.sa).mul_coeff_left(row.c));
    OpNF rhs = [&] {
        try {
            return normalize(row.C, NF::A, S.ctx) +
                   (framed.nf() == NF::A ? framed : convert_back(framed));
        } catch (const Error& e) {
            if (e.kind() != ErrKind::NonNormalizableInverse) throw;
            // constants like k t a0 / (y + t) only normalize momentum-side
            return normalize(row.C, NF::B, S.ctx) +
                   (framed.nf() == NF::B ? framed : convert(framed));
        }
    }();
    if (lhs.nf() != rhs.nf()) rhs = (lhs.nf() == NF::B) ? convert(rhs) : convert_back(rhs);
    return lhs == rhs;
}

} // namespace

TEST_CASE("sixth system: table morphisms satisfy the exchange relations") {
    const SystemData& S = system_data(SysTag::VI);
    for (auto [name, m] : S.tables) {
        CAPTURE(name);
        CHECK(validate(m) == MStatus::Verified);
    }
}

TEST_CASE("sixth system: parameter words compose as involutions") {
    const SystemData& S = system_data(SysTag::VI);
    for (const char* n : {"s0", "s1", "s2", "s3", "s4", "sigma1", "sigma2", "sigma3"}) {
        CAPTURE(n);
        auto v = S.pword({n, n});
        for (size_t i = 0; i < S.nalpha; ++i) CHECK(v[i] == S.alpha[i]);
    }
}

TEST_CASE("sixth system: Hamiltonian symmetry clauses with printed constants") {
    const SystemData& S = system_data(SysTag::VI);
    for (const auto& row : S.props) {
        if (!row.C) continue;
        CAPTURE(row.name);
        if (row.name == "s3") continue; // printed constant is off; next test
        CHECK(check_prop(S, row));
    }
}

TEST_CASE("sixth system: the printed s3 constant is off by exactly k*a3*x") {
    // The printed additive constant a3((a4-e1)t - k x) disagrees with the
    // identity: the -k x part cancels under the parameter constraint (it
    // would survive only if the alphas summed to zero).  The true constant
    // is a3 (a4 - e1) t.
    const SystemData& S = system_data(SysTag::VI);
    for (const auto& row : S.props) {
        if (row.name != "s3") continue;
        OpNF lhs = apply_steps(row.lhs, *S.Hx0);
        OpNF diff = lhs - S.Hx(row.sa).mul_coeff_left(row.c);
        REQUIRE(diff.is_coefficient());
        CHECK(diff.coefficient() == S.a(3) * (S.a(4) - S.e1) * S.rs("t"));
        OpNF printedC = normalize(row.C, NF::A, S.ctx);
        OpNF fix(NF::A, S.ctx);
        fix.add_term({0, 0, 0}, S.kap * S.a(3) * S.rs("x"));
        CHECK(diff == printedC + fix);
    }
}

TEST_CASE("laplace-net constructor agrees with its three-step composition") {
    const SystemData& S = system_data(SysTag::VI);
    const auto b = RatFunc::sym(S.tab, "a4"); // any parameter works here
    const RatFunc x = RatFunc::sym(S.tab, "x"), t = RatFunc::sym(S.tab, "t");

    // net of  L_x^{-1} o Ad((x-t)^{-b/e1}) o L_x  is  x -> x - b*inv(y - t),
    // d -> d + (b/e1)*inv(y - t): beta = b, g = -t in the one-step builder.
    Chain threestep = {
        {make_laplace(S.ctx, true, false), NF::B},
        {make_gauge(S.ctx, true, x - t, -b, true), NF::A},
        {make_laplace(S.ctx, true, true), NF::B},
    };
    Chain net = {{make_net_laplace(S.ctx, true, b, -t, true), NF::B}};

    // Use an operand that contains d so the time-derivative shift is
    // exercised, not just the position image.
    OpNF lhs = apply_steps(threestep, *S.B0);
    OpNF rhs = apply_steps(net, *S.B0);
    CHECK(lhs == rhs);
}

TEST_CASE("sixth system: Lax operators have the expected leading structure") {
    const SystemData& S = system_data(SysTag::VI);
    const OpNF& L = *S.L0;
    const OpNF& B = *S.B0;
    CHECK(L.terms().count({2, 0, 0}) == 1);
    CHECK(L.terms().count({0, 2, 0}) == 1);
    CHECK(L.terms().count({0, 0, 1}) == 0);
    CHECK(B.terms().count({0, 0, 1}) == 1);
    // B - e2 Hx + e1 Hq(shifted) is the pure d term
    auto sh = std::vector<RatFunc>{S.a(0), S.a(1), S.a(2) + S.kap, S.a(3), S.a(4)};
    OpNF rest = B - S.Hx0->mul_coeff_left(S.e2) + S.Hq(sh).mul_coeff_left(S.e1);
    CHECK(rest.terms().size() == 1);
    CHECK(rest.terms().begin()->first == Key3{0, 0, 1});
}

TEST_CASE("fifth system: table morphisms satisfy the exchange relations") {
    const SystemData& S = system_data(SysTag::V);
    for (auto [name, m] : S.tables) {
        CAPTURE(name);
        CHECK(validate(m) == MStatus::Verified);
    }
}

TEST_CASE("fifth system: parameter words compose correctly") {
    const SystemData& S = system_data(SysTag::V);
    for (const char* n : {"s0", "s1", "s2", "s3", "sigma"}) {
        CAPTURE(n);
        auto v = S.pword({n, n});
        for (size_t i = 0; i < S.nalpha; ++i) CHECK(v[i] == S.alpha[i]);
    }
    // pi has order four
    auto v = S.pword({"pi", "pi", "pi", "pi"});
    for (size_t i = 0; i < S.nalpha; ++i) CHECK(v[i] == S.alpha[i]);
}

TEST_CASE("fifth system: Hamiltonian symmetry clauses with printed constants") {
    const SystemData& S = system_data(SysTag::V);
    for (const auto& row : S.props) {
        if (!row.C) continue;
        CAPTURE(row.name);
        if (row.name == "pi") continue;  // printed constant is off; below
        if (row.name == "s2") continue;  // printed constant is off; below
        CHECK(check_prop(S, row));
    }
}

TEST_CASE("fifth system: the printed s2 constant has the wrong sign on t") {
    // True additive constant:  -a2 (a0 + 2 e1 - e2 - t).
    const SystemData& S = system_data(SysTag::V);
    for (const auto& row : S.props) {
        if (row.name != "s2") continue;
        OpNF lhs = apply_steps(row.lhs, *S.Hx0);
        OpNF diff = lhs - convert(S.Hx(row.sa));
        REQUIRE(diff.is_coefficient());
        const RatFunc t = S.rs("t");
        CHECK(diff.coefficient() ==
              -S.a(2) * (S.a(0) + S.e1 + S.e1 - S.e2 - t));
    }
}

TEST_CASE("fifth system: the printed pi constant has e1 where the identity needs y") {
    // True additive constant:  a3 e1 + a1 (e1 - t) - k (x-1) y.
    const SystemData& S = system_data(SysTag::V);
    for (const auto& row : S.props) {
        if (row.name != "pi") continue;
        OpNF lhs = apply_steps(row.lhs, *S.Hx0);
        OpNF diff = lhs - S.Hx(row.sa);
        OpNF truth(NF::A, S.ctx);
        const RatFunc x = S.rs("x"), t = S.rs("t");
        truth.add_term({0, 0, 0}, S.a(3) * S.e1 + S.a(1) * (S.e1 - t));
        truth.add_term({1, 0, 0}, -S.kap * (x - RatFunc::constant(S.tab, 1)));
        CHECK(diff == truth);
        OpNF printedC = normalize(row.C, NF::A, S.ctx);
        OpNF fix(NF::A, S.ctx); // truth - printed
        fix.add_term({1, 0, 0}, -S.kap * (x - RatFunc::constant(S.tab, 1)));
        fix.add_term({0, 0, 0}, S.kap * S.e1 * (x - RatFunc::constant(S.tab, 1)));
        CHECK(diff == printedC + fix);
    }
}

TEST_CASE("fifth system: Lax operators have the expected leading structure") {
    const SystemData& S = system_data(SysTag::V);
    CHECK(S.L0->terms().count({0, 0, 1}) == 0);
    auto sh = std::vector<RatFunc>{S.a(0) + S.kap, S.a(1), S.a(2) + S.kap, S.a(3)};
    OpNF rest = *S.B0 - S.Hx0->mul_coeff_left(S.e2) + S.Hq(sh).mul_coeff_left(S.e1);
    CHECK(rest.terms().size() == 1);
    CHECK(rest.terms().begin()->first == Key3{0, 0, 1});
}

TEST_CASE("fourth system: table morphisms satisfy the exchange relations") {
    const SystemData& S = system_data(SysTag::IV);

    // s0's inverse argument p - q - t mixes position and momentum, so the
    // commutator checks are run in the frame conjugated by the canonical
    // transformation p -> p + q + t, where the argument becomes plain p.
    Morphism phi, phi_inv;
    phi.ctx = phi_inv.ctx = S.ctx;
    const ExprPtr Q = e_sym(Gen::Q), P = e_sym(Gen::P), T = e_sym(Gen::T);
    phi.set_image(Gen::P, e_add({P, Q, T}));
    phi_inv.set_image(Gen::P, e_sub(P, e_add({Q, T})));
    const ExprPtr qe = e_mul({e_const(RatFunc::constant(S.tab, 1) / S.e2), Q});
    phi.set_image(Gen::D, e_add({e_sym(Gen::D), qe}));
    phi_inv.set_image(Gen::D, e_sub(e_sym(Gen::D), qe));
    REQUIRE(validate(phi) == MStatus::Verified);
    REQUIRE(validate(phi_inv) == MStatus::Verified);

    for (auto [name, m] : S.tables) {
        CAPTURE(name);
        if (name == "s0") {
            Morphism conj = compose(phi, compose(m, phi_inv));
            CHECK(validate(conj) == MStatus::Verified);
            continue;
        }
        CHECK(validate(m) == MStatus::Verified);
    }
}

TEST_CASE("fourth system: parameter words compose correctly") {
    const SystemData& S = system_data(SysTag::IV);
    for (const char* n : {"s0", "s1", "s2", "sigma"}) {
        CAPTURE(n);
        auto v = S.pword({n, n});
        for (size_t i = 0; i < S.nalpha; ++i) CHECK(v[i] == S.alpha[i]);
    }
    auto v = S.pword({"pi", "pi", "pi"});
    for (size_t i = 0; i < S.nalpha; ++i) CHECK(v[i] == S.alpha[i]);
}

TEST_CASE("fourth system: Hamiltonian symmetry clauses with printed constants") {
    const SystemData& S = system_data(SysTag::IV);
    for (const auto& row : S.props) {
        if (!row.C) continue;
        CAPTURE(row.name);
        CHECK(check_prop(S, row));
    }
}

TEST_CASE("fourth system: Lax operators have the expected leading structure") {
    const SystemData& S = system_data(SysTag::IV);
    CHECK(S.L0->terms().count({0, 0, 1}) == 0);
    auto sh = std::vector<RatFunc>{S.a(0) + S.kap, S.a(1), S.a(2) + S.kap};
    OpNF rest = *S.B0 - S.Hx0->mul_coeff_left(S.e2) + S.Hq(sh).mul_coeff_left(S.e1);
    CHECK(rest.terms().size() == 1);
    CHECK(rest.terms().begin()->first == Key3{0, 0, 1});
}

TEST_CASE("third system: table morphisms satisfy the exchange relations") {
    const SystemData& S = system_data(SysTag::III);
    for (auto [name, m] : S.tables) {
        CAPTURE(name);
        CHECK(validate(m) == MStatus::Verified);
    }
}

TEST_CASE("third system: Hamiltonian symmetry clauses with printed constants") {
    const SystemData& S = system_data(SysTag::III);
    for (const auto& row : S.props) {
        if (!row.C) continue;
        CAPTURE(row.name);
        if (row.name == "s0" || row.name == "sigma") continue; // off; below
        CHECK(check_prop(S, row));
    }
}

TEST_CASE("third system: the printed s0 and sigma constants are off") {
    // True constants: s0 gives -a0 (a2 + e1) (the sigma-conjugate of the
    // verified s2 constant, with no +e1 on the first factor), and sigma
    // gives -t (whose B-combination e2(-t) - e1(-t) = k t reproduces the
    // verified Lax-row constant).
    const SystemData& S = system_data(SysTag::III);
    for (const auto& row : S.props) {
        OpNF lhs = apply_steps(row.lhs, *S.Hx0);
        OpNF rhs = S.Hx(row.sa);
        if (lhs.nf() != rhs.nf()) rhs = (lhs.nf() == NF::B) ? convert(rhs) : convert_back(rhs);
        OpNF diff = lhs - rhs;
        if (row.name == "s0") {
            REQUIRE(diff.is_coefficient());
            CHECK(diff.coefficient() == -S.a(0) * (S.a(2) + S.e1));
        } else if (row.name == "sigma") {
            REQUIRE(diff.is_coefficient());
            CHECK(diff.coefficient() == -S.rs("t"));
        }
    }
}

TEST_CASE("degenerate third system: table morphisms satisfy the exchange relations") {
    const SystemData& S = system_data(SysTag::III_D7);
    for (auto [name, m] : S.tables) {
        CAPTURE(name);
        CHECK(validate(m) == MStatus::Verified);
    }
}

TEST_CASE("degenerate third system: Hamiltonian symmetry clauses") {
    const SystemData& S = system_data(SysTag::III_D7);
    for (const auto& row : S.props) {
        if (!row.C) continue;
        CAPTURE(row.name);
        CHECK(check_prop(S, row));
    }
}

TEST_CASE("second system: table morphisms validate, s0 mixed inverse excepted") {
    const SystemData& S = system_data(SysTag::II);
    for (auto [name, m] : S.tables) {
        CAPTURE(name);
        if (name == "s0") {
            // inv(p - 2q^2 - t) lies in no normal form and the argument is
            // not affine, so the commutator checks cannot be normalized
            CHECK(validate(m) == MStatus::Unverifiable);
            continue;
        }
        CHECK(validate(m) == MStatus::Verified);
    }
}

TEST_CASE("second system: Hamiltonian symmetry clauses with printed constants") {
    const SystemData& S = system_data(SysTag::II);
    for (const auto& row : S.props) {
        if (!row.C) continue;
        CAPTURE(row.name);
        CHECK(check_prop(S, row));
    }
}

TEST_CASE("remaining systems: Lax pair leading structure") {
    for (SysTag j : {SysTag::III, SysTag::III_D7, SysTag::II}) {
        const SystemData& S = system_data(j);
        CAPTURE(S.name);
        CHECK(S.L0->terms().count({0, 0, 1}) == 0);
        CHECK(S.B0->terms().count({0, 0, 1}) == 1);
    }
}
