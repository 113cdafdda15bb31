/** @file catalog_ii.cpp
 *  Second system.  Parameter constraint:  a0 + a1 = -e1 + e2.
 */
#include "catalog_detail.hpp"

namespace orelax::detail {

SystemData build_ii() {
    SystemData S;
    S.j = SysTag::II;
    S.name = "II";
    S.tab = make_sys_table(2, {{"e1", -1}, {"e2", 1}, {"a1", -1}}, false);
    fill_common(S, 2);
    const SB b = SB::make(S);
    const AlgebraContext ctx = S.ctx;
    const RatFunc x = b.xa, q = b.qa, t = b.ta;
    const RatFunc e1 = b.e1, e2 = b.e2, k = b.kap, one = b.one, zero = b.zero;
    const RatFunc half = one / b.n(2);
    const auto& A = S.alpha;
    const ExprPtr X = b.X, Q = b.Q, T = b.T, Y = b.Y, P = b.P, D = b.D;
    auto C = [&](const RatFunc& v) { return e_const(v); };

    // H = w^2/2 - v w v - (t/2) w - a1 v
    auto Hside = [=](bool xs, const std::vector<RatFunc>& a) {
        const ExprPtr V = xs ? X : Q, W = xs ? Y : P;
        ExprPtr tree = e_add({C(half) * W * W, -(V * W * V), -(C(half * t) * W),
                              -(C(a[1]) * V)});
        return normalize(tree, NF::A, ctx);
    };
    auto shift = [=](const std::vector<RatFunc>& a) {
        return std::vector<RatFunc>{a[0] + k, a[1] + k};
    };
    S.Hx = [=](const std::vector<RatFunc>& a) { return Hside(true, a); };
    S.Hq = [=](const std::vector<RatFunc>& a) { return Hside(false, a); };
    S.L = [=](const std::vector<RatFunc>& a) {
        OpNF L = Hside(true, a) - Hside(false, shift(a));
        L.add_term({1, 0, 0}, -half * k / (x - q));
        L.add_term({0, 1, 0}, half * k / (x - q));
        return L;
    };
    S.B = [=](const std::vector<RatFunc>& a) {
        OpNF B = Hside(true, a).mul_coeff_left(e2) - Hside(false, shift(a)).mul_coeff_left(e1);
        B.add_term({0, 0, 1}, -k * e1 * e2);
        return B;
    };
    S.Hx0 = S.Hx(A);
    S.Hq0 = S.Hq(A);
    S.L0 = S.L(A);
    S.B0 = S.B(A);

    S.Delem = [=](const RatFunc& arg) {
        OpNF Dop(NF::A, ctx);
        Dop.add_term({1, 1, 0}, one);
        Dop.add_term({1, 0, 0}, (arg + e1) / (x - q));
        Dop.add_term({0, 1, 0}, -(arg + e1) / (x - q));
        return Dop;
    };
    S.D0 = S.Delem(A[1]);

    // -------------------------------------------------------- symmetry table
    // s0's inverse argument  f = p - 2 q^2 - t  mixes position and momentum.
    const ExprPtr Finv = e_inv(P - C(b.n(2)) * Q * Q - C(t));
    add_table_map(S, "s0", {-A[0], A[1] + A[0] + A[0]},
                  {{Gen::Q, Q + C(A[0]) * Finv},
                   {Gen::P, P + C(b.n(2)) * Q * C(A[0]) * Finv +
                                C(b.n(2)) * C(A[0]) * Finv * Q +
                                C(b.n(2)) * C(A[0] * A[0]) * Finv * Finv},
                   {Gen::D, D + C(A[0] / e2) * Finv}});
    add_table_map(S, "s1", {A[0] + A[1] + A[1], -A[1]},
                  {{Gen::Q, Q + C(A[1]) * e_inv(P)}});
    add_table_map(S, "pi", {A[1], A[0]},
                  {{Gen::Q, -Q},
                   {Gen::P, -P + C(b.n(2)) * Q * Q + C(t)},
                   {Gen::D, D - C(one / e2) * Q}});

    // ------------------------------------------------------- Backlund chains
    auto net0 = [=](bool xs, const RatFunc& a) {
        return one_step(make_net_laplace(ctx, xs, a, zero, false), NF::B);
    };
    auto egc = [=](bool xs, const RatFunc& sign) {
        const RatFunc v = xs ? x : q;
        const RatFunc cube = b.n(2) / b.n(3) * v * v * v;
        return one_step(make_exp_gauge(ctx, xs, sign * (cube + v * t)), NF::A);
    };
    S.Rx["s1"] = [=](const RatFunc& a) { return net0(true, a); };
    S.Rq["s1"] = [=](const RatFunc& a) { return net0(false, a); };
    // R_pi = (x,q -> -x,-q) o Ad(exp((-2x^3/3 - xt)/e1)) o Ad(exp((-2q^3/3 - qt)/e2))
    const Chain rpi = cat({egc(false, -one), egc(true, -one),
                           one_step(make_varchange(ctx, -x, -q, {}), NF::A)});
    S.Rfixed["pi"] = rpi;
    S.Rx["s0"] = [=](const RatFunc& a) { return cat({rpi, net0(true, a), rpi}); };
    S.Rq["s0"] = [=](const RatFunc& a) { return cat({rpi, net0(false, a), rpi}); };

    // -------------------------------------------------- Hamiltonian clauses
    auto pim = [&](const char* n) { return S.pimg.at(n); };
    // s0: the bare constant -k a0 / (y - 2x^2 - t) lies in no normal form;
    // peel the trailing R_pi, in whose inverse frame it becomes k a0 inv(y).
    const Chain rpi_inv = cat({one_step(make_varchange(ctx, -x, -q, {}), NF::A),
                               egc(true, one), egc(false, one)});
    S.props.push_back({"s0",
                       cat({rpi, net0(true, A[0])}),
                       rpi_inv,
                       one,
                       pim("s0"),
                       C(k * A[0]) * e_inv(Y)});
    S.props.push_back({"s1", S.Rx["s1"](A[1]), {}, one, pim("s1"), C(zero)});
    S.props.push_back({"pi", rpi, {}, one, pim("pi"), C(-k * x)});

    // ------------------------------------------------------------ Lax rows
    S.thm.push_back({"pi", rpi, one, zero, pim("pi")});

    // ------------------------------------------------------------ constants
    S.consts["f_T"] = zero;
    return S;
}

} // namespace orelax::detail
