/** @file catalog_iv.cpp
 *  Fourth system.  Parameter constraint:  a0 + a1 + a2 = -e1 + e2.
 *  The coefficient field carries an adjoined imaginary unit i.
 */
#include "catalog_detail.hpp"

namespace orelax::detail {

SystemData build_iv() {
    SystemData S;
    S.j = SysTag::IV;
    S.name = "IV";
    S.tab = make_sys_table(3, {{"e1", -1}, {"e2", 1}, {"a1", -1}, {"a2", -1}}, true);
    fill_common(S, 3);
    const SB b = SB::make(S);
    const AlgebraContext ctx = S.ctx;
    const RatFunc x = b.xa, q = b.qa, t = b.ta;
    const RatFunc e1 = b.e1, e2 = b.e2, k = b.kap, one = b.one, zero = b.zero;
    const RatFunc im = b.s("i");
    const auto& A = S.alpha;
    const ExprPtr X = b.X, Q = b.Q, T = b.T, Y = b.Y, P = b.P, D = b.D;
    auto C = [&](const RatFunc& v) { return e_const(v); };

    // H = w v w - v w v - t v w - a2 v - a1 w
    auto Hside = [=](bool xs, const std::vector<RatFunc>& a) {
        const ExprPtr V = xs ? X : Q, W = xs ? Y : P;
        ExprPtr tree = e_add({W * V * W, -(V * W * V), -(C(t) * V * W), -(C(a[2]) * V),
                              -(C(a[1]) * W)});
        return normalize(tree, NF::A, ctx);
    };
    auto shift = [=](const std::vector<RatFunc>& a) {
        return std::vector<RatFunc>{a[0] + k, a[1], a[2] + k};
    };
    S.Hx = [=](const std::vector<RatFunc>& a) { return Hside(true, a); };
    S.Hq = [=](const std::vector<RatFunc>& a) { return Hside(false, a); };
    S.L = [=](const std::vector<RatFunc>& a) {
        OpNF L = Hside(true, a) - Hside(false, shift(a));
        L.add_term({1, 0, 0}, -k * x / (x - q));
        L.add_term({0, 1, 0}, k * q / (x - q));
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
    S.D0 = S.Delem(A[2]);

    // -------------------------------------------------------- symmetry table
    const ExprPtr s0inv = e_inv(P - Q - C(t));
    add_table_map(S, "s0", {-A[0], A[1] + A[0], A[2] + A[0]},
                  {{Gen::Q, Q + C(A[0]) * s0inv},
                   {Gen::P, P + C(A[0]) * s0inv},
                   {Gen::D, D + C(A[0] / e2) * s0inv}});
    add_table_map(S, "s1", {A[0] + A[1], -A[1], A[2] + A[1]},
                  {{Gen::P, P - C(A[1] / q)}});
    add_table_map(S, "s2", {A[0] + A[2], A[1] + A[2], -A[2]},
                  {{Gen::Q, Q + C(A[2]) * e_inv(P)}});
    add_table_map(S, "pi", {A[1], A[2], A[0]},
                  {{Gen::Q, -P},
                   {Gen::P, -P + Q + C(t)},
                   {Gen::D, D - C(one / e2) * P}});
    add_table_map(S, "sigma", {A[2], A[1], A[0]},
                  {{Gen::Q, C(im) * Q},
                   {Gen::P, -(C(im) * (P - Q - C(t)))},
                   {Gen::T, C(im) * T},
                   {Gen::D, C(im) * (-D + C(q / e2))}});

    // ------------------------------------------------------- Backlund chains
    auto gauge_x = [=](const RatFunc& pole, const RatFunc& arg) {
        return one_step(make_gauge(ctx, true, pole, -arg, true), NF::A);
    };
    auto gauge_q = [=](const RatFunc& pole, const RatFunc& arg) {
        return one_step(make_gauge(ctx, false, pole, -arg, true), NF::A);
    };
    // Ad(exp(-(v^2/2 + v t)/eps)) and its inverse, both sides.
    const RatFunc half = one / b.n(2);
    auto egm = [=](bool xs) {
        const RatFunc v = xs ? x : q;
        return one_step(make_exp_gauge(ctx, xs, -(half * v * v) - v * t), NF::A);
    };
    auto egp = [=](bool xs) {
        const RatFunc v = xs ? x : q;
        return one_step(make_exp_gauge(ctx, xs, half * v * v + v * t), NF::A);
    };
    auto net0 = [=](bool xs, const RatFunc& a) {
        return one_step(make_net_laplace(ctx, xs, a, zero, false), NF::B);
    };

    S.Rx["s0"] = [=](const RatFunc& a) { return cat({egm(true), net0(true, a), egp(true)}); };
    S.Rq["s0"] = [=](const RatFunc& a) { return cat({egm(false), net0(false, a), egp(false)}); };
    S.Rx["s1"] = [=](const RatFunc& a) { return gauge_x(x, a); };
    S.Rq["s1"] = [=](const RatFunc& a) { return gauge_q(q, a); };
    S.Rx["s2"] = [=](const RatFunc& a) { return net0(true, a); };
    S.Rq["s2"] = [=](const RatFunc& a) { return net0(false, a); };

    // R^x_pi = L_x o Ad(exp(-(x^2/2 + x t)/e1)); q-side analogue.
    const Chain pix = cat({egm(true), one_step(make_laplace(ctx, true, false), NF::B)});
    const Chain piq = cat({egm(false), one_step(make_laplace(ctx, false, false), NF::B)});
    S.Rx["pi"] = [=](const RatFunc&) { return pix; };
    S.Rq["pi"] = [=](const RatFunc&) { return piq; };
    S.Rfixed["pi"] = cat({piq, pix});

    // R_sigma = (x,q,t -> i x, i q, i t) o Ad(exp(-(x^2/2+xt)/e1)) o Ad(exp(-(q^2/2+qt)/e2))
    S.Rfixed["sigma"] =
        cat({egm(false), egm(true),
             one_step(make_varchange(ctx, im * x, im * q, im * t), NF::A)});

    // -------------------------------------------------- Hamiltonian clauses
    auto pim = [&](const char* n) { return S.pimg.at(n); };
    // The bare constant -k a0 / (y - x - t) lies in no normal form; state the
    // clause in the frame conjugated by the trailing quadratic gauge, where
    // it becomes -k a0 inv(y).
    S.props.push_back({"s0",
                       cat({egm(true), net0(true, A[0])}),
                       egm(true),
                       one,
                       pim("s0"),
                       C(-k * A[0]) * e_inv(Y)});
    S.props.push_back({"s1", S.Rx["s1"](A[1]), {}, one, pim("s1"), C(-A[1] * t)});
    S.props.push_back({"s2", S.Rx["s2"](A[2]), {}, one, pim("s2"), C(A[2] * t)});
    S.props.push_back({"pi",
                       pix,
                       {},
                       one,
                       std::vector<RatFunc>{A[2], A[0], A[1]},
                       C(-A[1] * t) - C(k) * Y});
    S.props.push_back({"sigma",
                       S.Rfixed["sigma"],
                       {},
                       -im,
                       pim("sigma"),
                       C(-im * ((A[1] - e1) * t - k * x))});

    // ------------------------------------------------------------ Lax rows
    S.thm.push_back({"s1", cat({S.Rq.at("s1")(A[1]), S.Rx.at("s1")(A[1])}), one,
                     k * A[1] * t, pim("s1")});
    S.thm.push_back({"sigma", S.Rfixed["sigma"], -im, -k * A[1] * t, pim("sigma")});

    // ------------------------------------------------------------ constants
    S.consts["f_T_sigma"] = -k * (A[2] + k) * t;
    S.consts["f_T_pi"] = zero;
    S.consts["f_S"] = k * (A[2] + e1) * t;
    return S;
}

} // namespace orelax::detail
