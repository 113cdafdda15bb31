/** @file unit_flatlimit.cpp
 *  Checks of the second-derivation Lax presentation and of the flat-limit
 *  catalog: structural invariants, the sixth system's consistency relations
 *  tying the two presentations together, Lax-pair compatibility of every
 *  flat-limit system, flow-equivariance of every flat-limit symmetry map,
 *  and the first-order intertwiner identities.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "orelax/catalog.hpp"

using namespace orelax;

namespace {

const std::vector<SysTag> all_tags = {SysTag::I,      SysTag::II, SysTag::III,
                                      SysTag::III_D7, SysTag::III_D8,
                                      SysTag::IV,     SysTag::V,  SysTag::VI};

/// Substitute a map's images (and the time reflection, when present) into a
/// coefficient, simultaneously.
RatFunc cimage(const ClassicalData& cd, const CMap& m, const RatFunc& f) {
    std::vector<std::pair<size_t, RatFunc>> bind = m.sub;
    if (m.tsign < 0)
        bind.emplace_back(cd.ctx.it, -RatFunc::sym(cd.tab, "t"));
    return f.subst(bind);
}

/// A flat-limit map is a symmetry of the flow when the transformed
/// trajectory (with time tsign * t) again satisfies the Hamilton equations
/// of the same family at the mapped parameter point.
void check_equivariance(const ClassicalData& cd, const CMap& m) {
    const ClassicalContext& ctx = cd.ctx;
    RatFunc sq = cimage(cd, m, RatFunc::sym(cd.tab, "q"));
    RatFunc sp = cimage(cd, m, RatFunc::sym(cd.tab, "p"));
    RatFunc Hp = cd.H.derivative(ctx.ip);
    RatFunc Hq = cd.H.derivative(ctx.iq);
    RatFunc sg = RatFunc::constant(cd.tab, Rat(m.tsign));
    CHECK(sg * flow_deriv(ctx, cd.H, sq) == cimage(cd, m, Hp));
    CHECK(sg * flow_deriv(ctx, cd.H, sp) == -cimage(cd, m, Hq));
}

} // namespace

TEST_CASE("second-form pairs: structure") {
    for (SysTag j : all_tags) {
        CAPTURE(sys_name(j));
        const DerivedLax& d = cft_lax(j);
        REQUIRE(d.L.has_value());
        REQUIRE(d.B.has_value());
        // L is free of the time derivation and of second order both ways.
        for (const auto& [k, c] : d.L->terms()) CHECK(k[2] == 0);
        CHECK(!d.L->terms().count(Key3{1, 1, 0}));
        CHECK(d.L->terms().count(Key3{2, 0, 0}));
        CHECK(d.L->terms().count(Key3{0, 2, 0}));
        // B is first order in the time derivation, free of the x-direction
        // second derivative.
        CHECK(d.B->terms().count(Key3{0, 0, 1}));
        CHECK(!d.B->terms().count(Key3{2, 0, 0}));
    }
}

TEST_CASE("second-form pairs: pinned coefficients") {
    const DerivedLax& d1 = cft_lax(SysTag::I);
    RatFunc one = RatFunc::one(d1.tab);
    CHECK(d1.L->terms().at(Key3{2, 0, 0}) == one);
    CHECK(d1.L->terms().at(Key3{0, 2, 0}) == -one);

    const DerivedLax& d8 = cft_lax(SysTag::III_D8);
    RatFunc e1 = RatFunc::sym(d8.tab, "e1"), e2 = RatFunc::sym(d8.tab, "e2");
    RatFunc q = RatFunc::sym(d8.tab, "q"), t = RatFunc::sym(d8.tab, "t");
    RatFunc four = RatFunc::constant(d8.tab, Rat(4));
    CHECK(d8.B->terms().at(Key3{0, 0, 0}) ==
          (e1 + e2) * (e1 + e2) / four - q - t / q);
}

TEST_CASE("second-form pair of the first system is swap-antisymmetric") {
    const DerivedLax& d = cft_lax(SysTag::I);
    std::vector<std::pair<size_t, RatFunc>> swap = {
        {d.tab->index("x"), RatFunc::sym(d.tab, "q")},
        {d.tab->index("q"), RatFunc::sym(d.tab, "x")},
        {d.tab->index("e1"), RatFunc::sym(d.tab, "e2")},
        {d.tab->index("e2"), RatFunc::sym(d.tab, "e1")}};
    OpNF flipped(NF::A, d.ctx);
    for (const auto& [k, c] : d.L->terms())
        flipped.add_term(Key3{k[1], k[0], k[2]}, c.subst(swap));
    CHECK(flipped == -*d.L);
}

TEST_CASE("sixth system: the two Lax presentations agree") {
    const SystemData& S = system_data(SysTag::VI);
    CftQuantumSlice sl = cft_vi_quantum_frame();
    REQUIRE(S.L0.has_value());
    REQUIRE(S.B0.has_value());

    CHECK(*S.L0 == -sl.L);

    RatFunc q = RatFunc::sym(S.tab, "q"), t = RatFunc::sym(S.tab, "t");
    OpNF bconst(NF::A, S.ctx);
    bconst.add_term(Key3{0, 0, 0}, sl.b);
    OpNF rhs = sl.L.mul_coeff_left(-S.e2) +
               sl.B.mul_coeff_left(S.kap * (q - t)) + bconst;
    CHECK(*S.B0 == rhs);

    // At e1 == e2 the relations collapse consistently: the B-relation
    // constant is proportional to e1 - e2.
    std::vector<std::pair<size_t, RatFunc>> degen = {
        {S.tab->index("e1"), RatFunc::sym(S.tab, "e2")}};
    CHECK(sl.b.subst(degen).is_zero());
}

TEST_CASE("flat limit: Lax compatibility for every system") {
    for (SysTag j : all_tags) {
        CAPTURE(sys_name(j));
        const ClassicalData& cd = classical_data(j);
        REQUIRE(cd.L.has_value());
        REQUIRE(cd.B.has_value());
        ClassicalOp comm = hamflow_mul(*cd.B, *cd.L, cd.H) -
                           hamflow_mul(*cd.L, *cd.B, cd.H);
        auto [quot, rem] = right_divide(comm, *cd.L);
        CHECK(rem.is_zero());
    }
}

TEST_CASE("flat limit: planted defect breaks compatibility") {
    const ClassicalData& cd = classical_data(SysTag::II);
    RatFunc H = cd.H + RatFunc::sym(cd.tab, "q"); // wrong Hamiltonian
    ClassicalOp comm =
        hamflow_mul(*cd.B, *cd.L, H) - hamflow_mul(*cd.L, *cd.B, H);
    auto [quot, rem] = right_divide(comm, *cd.L);
    CHECK(!rem.is_zero());
}

TEST_CASE("flat limit: every symmetry map is flow-equivariant") {
    for (SysTag j : all_tags) {
        const ClassicalData& cd = classical_data(j);
        for (const CMap& m : cd.maps) {
            CAPTURE(sys_name(j));
            CAPTURE(m.name);
            check_equivariance(cd, m);
        }
    }
}

TEST_CASE("flat limit: symmetry words compose as maps") {
    const ClassicalData& cd = classical_data(SysTag::II);
    // s1 and pi are involutions up to the parameter lattice: s1^2 = id.
    CMap w = cmap_word(cd, {"s1", "s1"});
    RatFunc q = RatFunc::sym(cd.tab, "q"), p = RatFunc::sym(cd.tab, "p");
    CHECK(w(q) == q);
    CHECK(w(p) == p);
    CHECK(w.tsign == 1);
}

TEST_CASE("flat limit: first-order intertwiners") {
    for (const IntertwinerCase& ic : intertwiner_cases()) {
        CAPTURE(sys_name(ic.j));
        const ClassicalData& cd = classical_data(ic.j);
        // Apply the word letter-by-letter (rightmost images first), which
        // keeps every intermediate coefficient canonical and small instead
        // of composing the whole word into one huge substitution.
        ClassicalOp Lw = *cd.L;
        int tsign = 1;
        for (auto it = ic.word.rbegin(); it != ic.word.rend(); ++it) {
            const CMap* m = nullptr;
            for (const auto& cm : cd.maps)
                if (cm.name == *it) m = &cm;
            REQUIRE(m != nullptr);
            CMap full = *m;
            if (m->tsign < 0)
                full.sub.emplace_back(cd.ctx.it, -RatFunc::sym(cd.tab, "t"));
            Lw = clear_left_coefficient(cmap_apply(full, Lw));
            tsign *= m->tsign;
        }
        CHECK(tsign == 1);
        ClassicalOp N = clear_left_coefficient(hamflow_mul(Lw, ic.T, std::nullopt));
        auto [quot, rem] = right_divide(N, *cd.L);
        CHECK(rem.is_zero());
        CHECK(quot.degree_y() <= 1);
    }
}

TEST_CASE("flat limit: gauge matching fixed points") {
    const ClassicalData& cd = classical_data(SysTag::II);
    MatchReport rep = gauge_match_deg2(*cd.L, *cd.L);
    CHECK(rep.match);
    CHECK(rep.r.is_zero());
}
