// Normal forms: commutation laws, normalization uniqueness, associativity,
// conversion round trips, and the classical (commutative-momentum) limit.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orelax/classical.hpp"
#include "orelax/opnf.hpp"

using namespace orelax;

namespace {

TablePtr table() {
    static TablePtr t = std::make_shared<SymbolTable>(
        std::vector<std::string>{"e1", "e2", "a1", "a2", "x", "q", "t", "y", "p"});
    return t;
}

AlgebraContext ctx() { return AlgebraContext::make(table()); }

RatFunc rf(const char* n) { return RatFunc(MPoly::sym(table(), n)); }

OpNF gen_op(NF nf, Gen g) { return normalize(e_sym(g), nf, ctx()); }

ExprPtr rnd_tree(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 4), pick(0, 5), cf(-3, 3);
    switch (kind(rng)) {
    case 0: {
        static const char* syms[] = {"x", "q", "t", "e1", "a1"};
        int c = cf(rng);
        RatFunc v = RatFunc::constant(table(), c);
        if (c % 2 == 0) v = v + rf(syms[static_cast<size_t>(pick(rng)) % 5]);
        return e_const(v);
    }
    case 1:
        return e_sym(static_cast<Gen>(pick(rng)));
    case 2:
        return e_add({rnd_tree(rng, depth - 1), rnd_tree(rng, depth - 1)});
    case 3:
        return e_mul({rnd_tree(rng, depth - 1), rnd_tree(rng, depth - 1)});
    default:
        return e_neg(rnd_tree(rng, depth - 1));
    }
}

} // namespace

TEST_CASE("generator commutators match the pairing table in both forms") {
    for (NF nf : {NF::A, NF::B}) {
        auto comm = [&](Gen a, Gen b) {
            OpNF A = gen_op(nf, a), B = gen_op(nf, b);
            return A * B - B * A;
        };
        OpNF yx = comm(Gen::Y, Gen::X);
        CHECK(yx.is_coefficient());
        CHECK(yx.coefficient() == rf("e1"));
        OpNF pq = comm(Gen::P, Gen::Q);
        CHECK(pq.coefficient() == rf("e2"));
        OpNF dt = comm(Gen::D, Gen::T);
        CHECK(dt.coefficient() == RatFunc::one(table()));
        // every cross pair vanishes
        static const Gen gens[] = {Gen::X, Gen::Q, Gen::T, Gen::Y, Gen::P, Gen::D};
        int zero_pairs = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) {
                Gen ga = gens[a], gb = gens[b];
                bool paired = (ga == Gen::X && gb == Gen::Y) ||
                              (ga == Gen::Q && gb == Gen::P) ||
                              (ga == Gen::T && gb == Gen::D);
                if (paired) continue;
                CHECK(comm(ga, gb).is_zero());
                ++zero_pairs;
            }
        CHECK(zero_pairs == 12);
    }
}

TEST_CASE("reordering examples") {
    AlgebraContext c = ctx();
    // y*x = x*y + e1
    OpNF yx = normalize(e_mul({e_sym(Gen::Y), e_sym(Gen::X)}), NF::A, c);
    CHECK(yx.str() == "x*y + e1");
    // x*y*x = x^2*y + e1*x
    OpNF xyx = normalize(e_mul({e_sym(Gen::X), e_sym(Gen::Y), e_sym(Gen::X)}), NF::A, c);
    CHECK(xyx.str() == "x^2*y + e1*x");
    // d * 1/(x-t) = 1/(x-t) d + 1/(x-t)^2
    RatFunc pole = (rf("x") - rf("t")).inv();
    OpNF dp = normalize(e_mul({e_sym(Gen::D), e_const(pole)}), NF::A, c);
    CHECK(dp.terms().size() == 2);
    CHECK(dp.terms().at({0, 0, 1}) == pole);
    CHECK(dp.terms().at({0, 0, 0}) == pole * pole);
    // NF-B: x * y^{-1} = y^{-1} x + e1 y^{-2}  (from [f(y), x] = e1 f'(y))
    OpNF xyinv = normalize(e_mul({e_sym(Gen::X), e_inv(e_sym(Gen::Y))}), NF::B, c);
    RatFunc yv = rf("y");
    CHECK(xyinv.terms().at({1, 0, 0}) == yv.inv());
    CHECK(xyinv.terms().at({0, 0, 0}) == rf("e1") * yv.pow(-2));
    // q*p^{-1} vs p^{-1}*q differ by -e2 p^{-2} ... i.e. [p^{-1}, q] = -e2 p^{-2}
    OpNF d2 = normalize(e_sub(e_mul({e_inv(e_sym(Gen::P)), e_sym(Gen::Q)}),
                              e_mul({e_sym(Gen::Q), e_inv(e_sym(Gen::P))})),
                        NF::B, c);
    CHECK(d2.is_coefficient());
    CHECK(d2.coefficient() == -(rf("e2") * rf("p").pow(-2)));
}

TEST_CASE("inverse handling: mixed elements are rejected, coefficients pass") {
    AlgebraContext c = ctx();
    // 1/(y+t) is a legal NF-B coefficient
    OpNF ok = normalize(e_inv(e_add({e_sym(Gen::Y), e_sym(Gen::T)})), NF::B, c);
    CHECK(ok.is_coefficient());
    // but not a legal NF-A element
    CHECK_THROWS_AS(normalize(e_inv(e_add({e_sym(Gen::Y), e_sym(Gen::T)})), NF::A, c), Error);
    // Inv(p - 2q^2 - t) mixes the (q,p) pair: rejected in both forms
    ExprPtr mixed = e_inv(e_add({e_sym(Gen::P),
                                 e_neg(e_mul({e_const(RatFunc::constant(table(), 2)),
                                              e_sym(Gen::Q), e_sym(Gen::Q)})),
                                 e_neg(e_sym(Gen::T))}));
    CHECK_THROWS_AS(normalize(mixed, NF::A, c), Error);
    CHECK_THROWS_AS(normalize(mixed, NF::B, c), Error);
    // Inv of zero
    CHECK_THROWS_AS(normalize(e_inv(e_sub(e_sym(Gen::X), e_sym(Gen::X))), NF::A, c), Error);
}

TEST_CASE("associativity on random normal-form elements") {
    std::mt19937 rng(4242);
    AlgebraContext c = ctx();
    for (NF nf : {NF::A, NF::B}) {
        for (int it = 0; it < 260; ++it) {
            OpNF A = normalize(rnd_tree(rng, 2), nf, c);
            OpNF B = normalize(rnd_tree(rng, 2), nf, c);
            OpNF C = normalize(rnd_tree(rng, 2), nf, c);
            CHECK((A * B) * C == A * (B * C));
        }
    }
}

TEST_CASE("normal form is independent of tree shape") {
    std::mt19937 rng(555);
    AlgebraContext c = ctx();
    for (int it = 0; it < 120; ++it) {
        ExprPtr a = rnd_tree(rng, 2), b = rnd_tree(rng, 2), d = rnd_tree(rng, 2);
        // (a+b)+d against (d+a)+b, and (a*b)*d against a*(b*d)
        OpNF s1 = normalize(e_add({e_add({a, b}), d}), NF::A, c);
        OpNF s2 = normalize(e_add({e_add({d, a}), b}), NF::A, c);
        CHECK(s1 == s2);
        OpNF m1 = normalize(e_mul({e_mul({a, b}), d}), NF::A, c);
        OpNF m2 = normalize(e_mul({a, e_mul({b, d})}), NF::A, c);
        CHECK(m1 == m2);
    }
}

TEST_CASE("conversion between the two forms round-trips") {
    std::mt19937 rng(1001);
    AlgebraContext c = ctx();
    int done = 0;
    for (int it = 0; it < 200; ++it) {
        OpNF A = normalize(rnd_tree(rng, 2), NF::A, c);
        bool poly = true;
        for (const auto& [k, v] : A.terms())
            if (!v.is_polynomial()) poly = false;
        if (!poly) continue;
        OpNF B = convert(A);
        CHECK(convert_back(B) == A);
        // conversion preserves products
        OpNF A2 = normalize(rnd_tree(rng, 1), NF::A, c);
        bool poly2 = true;
        for (const auto& [k, v] : A2.terms())
            if (!v.is_polynomial()) poly2 = false;
        if (poly2) CHECK(convert(A * A2) == B * convert(A2));
        ++done;
    }
    CHECK(done > 60);
    // pole blocks conversion
    OpNF bad(NF::A, c);
    bad.add_term({1, 0, 0}, (rf("x") - rf("q")).inv());
    CHECK_THROWS_AS(convert(bad), Error);
}

TEST_CASE("x^2*y converts with the expected first-order correction") {
    AlgebraContext c = ctx();
    OpNF A = normalize(e_mul({e_sym(Gen::X), e_sym(Gen::X), e_sym(Gen::Y)}), NF::A, c);
    OpNF B = convert(A);
    // y x^2 = x^2 y + 2 e1 x  =>  x^2 y = y x^2 - 2 e1 x
    CHECK(B.terms().at({2, 0, 0}) == rf("y"));
    CHECK(B.terms().at({1, 0, 0}) == -(rf("e1").mul_by(2)));
}

TEST_CASE("rational interaction element normalizes to three keys") {
    AlgebraContext c = ctx();
    RatFunc a2 = rf("a2"), e1 = rf("e1");
    RatFunc xq = rf("x") - rf("q");
    ExprPtr D = e_add({e_mul({e_sym(Gen::Y), e_sym(Gen::P)}),
                       e_mul({e_const((a2 + e1) / xq), e_sym(Gen::Y)}),
                       e_mul({e_const((a2 + e1) / (-xq)), e_sym(Gen::P)})});
    OpNF nd = normalize(D, NF::A, c);
    CHECK(nd.terms().size() == 3);
    CHECK(nd.terms().at({1, 1, 0}) == RatFunc::one(table()));
    CHECK(nd.terms().at({1, 0, 0}) == (a2 + e1) / xq);
    CHECK(nd.terms().at({0, 1, 0}) == -((a2 + e1) / xq));
}

TEST_CASE("flat limit: hamflow products, division, gauge matching") {
    auto cl = std::make_shared<SymbolTable>(std::vector<std::string>{"x", "q", "p", "t"});
    ClassicalContext cc = ClassicalContext::make(cl);
    RatFunc q = RatFunc(MPoly::sym(cl, "q")), p = RatFunc(MPoly::sym(cl, "p"));
    RatFunc t = RatFunc(MPoly::sym(cl, "t")), x = RatFunc(MPoly::sym(cl, "x"));
    // H = p^2/2 - 2 q^3 - t q  =>  dq/dt = p, dp/dt = 6 q^2 + t
    RatFunc H = p * p / RatFunc::constant(cl, 2) - q.pow(3).mul_by(2) - t * q;
    ClassicalOp dd(cc), fq(cc), fp(cc);
    dd.add_term({0, 1}, RatFunc::one(cl));
    fq.add_term({0, 0}, q);
    fp.add_term({0, 0}, p);
    ClassicalOp dq = hamflow_mul(dd, fq, H);
    CHECK(dq.coefficient({0, 1}) == q);
    CHECK(dq.coefficient({0, 0}) == p);
    ClassicalOp dp = hamflow_mul(dd, fp, H);
    CHECK(dp.coefficient({0, 0}) == q * q * RatFunc::constant(cl, 6) + t);
    ClassicalOp dt = hamflow_mul(dd, [&] {
        ClassicalOp ft(cc);
        ft.add_term({0, 0}, t);
        return ft;
    }(), H);
    CHECK(dt.coefficient({0, 0}) == RatFunc::one(cl));

    // right division: random N by a monic degree-2 L, reconstruction checked inside
    ClassicalOp L(cc);
    L.add_term({2, 0}, RatFunc::one(cl));
    L.add_term({1, 0}, -((x - q).inv()));
    L.add_term({0, 0}, p / (x - q).mul_by(2));
    auto [q1, r1] = right_divide(L, L);
    CHECK(q1.coefficient({0, 0}) == RatFunc::one(cl));
    CHECK(r1.is_zero());
    ClassicalOp N(cc);
    N.add_term({3, 1}, x * q);
    N.add_term({2, 0}, t);
    N.add_term({0, 1}, p);
    N.set_flow(H);
    auto [q2, r2] = right_divide(N, L);
    CHECK(r2.degree_y() < 2);
    CHECK(hamflow_mul(q2, L, H) + r2 == N);

    // gauge match: conjugate L by (x-t)^3, i.e. r = 3/(x-t)
    RatFunc r = RatFunc::constant(cl, 3) / (x - t);
    ClassicalOp L2(cc);
    L2.add_term({2, 0}, RatFunc::one(cl));
    RatFunc a1 = L.coefficient({1, 0}), a0 = L.coefficient({0, 0});
    L2.add_term({1, 0}, a1 + r.mul_by(2));
    L2.add_term({0, 0}, a0 + a1 * r + r * r + r.derivative(cc.ix));
    MatchReport rep = gauge_match_deg2(L, L2);
    CHECK(rep.match);
    CHECK(rep.r == r);
    MatchReport self = gauge_match_deg2(L, L);
    CHECK(self.match);
    CHECK(self.r.is_zero());
    ClassicalOp L3 = L2;
    L3.add_term({0, 0}, x);
    CHECK(!gauge_match_deg2(L, L3).match);
}

TEST_CASE("flat projection is multiplicative and kills the second parameter") {
    AlgebraContext c = ctx();
    auto cl = std::make_shared<SymbolTable>(std::vector<std::string>{"x", "q", "p", "t", "b1"});
    ClassicalContext cc = ClassicalContext::make(cl);
    auto s = [&](const char* n) { return RatFunc(MPoly::sym(cl, n)); };
    ClassicalDict dict;
    TablePtr qt = table();
    dict.emplace_back(qt->index("x"), s("x"));
    dict.emplace_back(qt->index("q"), s("q"));
    dict.emplace_back(qt->index("t"), s("t"));
    dict.emplace_back(qt->index("e1"), RatFunc::one(cl));
    dict.emplace_back(qt->index("e2"), RatFunc::zero(cl));
    dict.emplace_back(qt->index("a1"), s("b1"));
    dict.emplace_back(qt->index("a2"), s("b1") + RatFunc::one(cl));

    // e2 * y  -> 0
    OpNF ey(NF::A, c);
    ey.add_term({1, 0, 0}, rf("e2"));
    CHECK(classical_project(ey, cc, dict).is_zero());
    // kappa/(x-q) * (y - p) -> (1/(x-q)) y - p/(x-q)
    OpNF mix(NF::A, c);
    RatFunc kxq = (rf("e1") - rf("e2")) / (rf("x") - rf("q"));
    mix.add_term({1, 0, 0}, kxq);
    mix.add_term({0, 1, 0}, -kxq);
    ClassicalOp pr = classical_project(mix, cc, dict);
    CHECK(pr.coefficient({1, 0}) == (s("x") - s("q")).inv());
    CHECK(pr.coefficient({0, 0}) == -(s("p") / (s("x") - s("q"))));
    // homomorphism on a nontrivial pair (no q-dependence in B, so the
    // replaced momentum never has to act)
    OpNF A(NF::A, c), B(NF::A, c);
    A.add_term({1, 1, 0}, rf("x") * rf("a1"));
    A.add_term({0, 0, 1}, rf("t"));
    B.add_term({1, 0, 0}, rf("x"));
    B.add_term({0, 1, 0}, rf("t") * rf("a2"));
    ClassicalOp lhs = classical_project(A * B, cc, dict);
    ClassicalOp rhs = hamflow_mul(classical_project(A, cc, dict),
                                  classical_project(B, cc, dict), std::nullopt);
    CHECK(lhs == rhs);
    // pole at the flat limit
    OpNF bad(NF::A, c);
    bad.add_term({0, 0, 0}, rf("x") / rf("e2"));
    CHECK_THROWS_AS(classical_project(bad, cc, dict), Error);
}
