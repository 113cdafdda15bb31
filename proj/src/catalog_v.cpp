/** @file catalog_v.cpp
 *  Fifth system.  Parameter constraint:  a0 + a1 + a2 + a3 = -e1 + e2.
 */
#include "catalog_detail.hpp"

namespace orelax::detail {

SystemData build_v() {
    SystemData S;
    S.j = SysTag::V;
    S.name = "V";
    S.tab = make_sys_table(4, {{"e1", -1}, {"e2", 1}, {"a1", -1}, {"a2", -1}, {"a3", -1}},
                           false);
    fill_common(S, 4);
    const SB b = SB::make(S);
    const AlgebraContext ctx = S.ctx;
    const RatFunc x = b.xa, q = b.qa, t = b.ta;
    const RatFunc e1 = b.e1, e2 = b.e2, k = b.kap, one = b.one, zero = b.zero;
    const auto& A = S.alpha;
    const ExprPtr X = b.X, Q = b.Q, T = b.T, Y = b.Y, P = b.P, D = b.D;
    auto C = [&](const RatFunc& v) { return e_const(v); };

    // H = (v-1)(w+t) v w - (a1+a3-eps) v w + a1 w + (a2+eps) t v
    auto Hside = [=](bool xs, const std::vector<RatFunc>& a) {
        const ExprPtr V = xs ? X : Q, W = xs ? Y : P;
        const RatFunc eps = xs ? e1 : e2;
        ExprPtr tree = e_add({(V - C(one)) * (W + C(t)) * V * W,
                              -(C(a[1] + a[3] - eps) * V * W), C(a[1]) * W,
                              C((a[2] + eps) * t) * V});
        return normalize(tree, NF::A, ctx);
    };
    auto shift = [=](const std::vector<RatFunc>& a) {
        return std::vector<RatFunc>{a[0] + k, a[1], a[2] + k, a[3]};
    };
    S.Hx = [=](const std::vector<RatFunc>& a) { return Hside(true, a); };
    S.Hq = [=](const std::vector<RatFunc>& a) { return Hside(false, a); };
    S.L = [=](const std::vector<RatFunc>& a) {
        OpNF L = Hside(true, a) - Hside(false, shift(a));
        L.add_term({1, 0, 0}, -k / (x - q) * x * (x - one));
        L.add_term({0, 1, 0}, k / (x - q) * q * (q - one));
        return L;
    };
    S.B = [=](const std::vector<RatFunc>& a) {
        OpNF B = Hside(true, a).mul_coeff_left(e2) - Hside(false, shift(a)).mul_coeff_left(e1);
        B.add_term({0, 0, 1}, -k * e1 * e2 * t);
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
    add_table_map(S, "s0", {-A[0], A[1] + A[0], A[2], A[3] + A[0]},
                  {{Gen::Q, Q + C(A[0]) * e_inv(P + C(t))},
                   {Gen::D, D - C(A[0] / e2) * e_inv(P + C(t))}});
    add_table_map(S, "s1", {A[0] + A[1], -A[1], A[2] + A[1], A[3]},
                  {{Gen::P, P - C(A[1] / q)}});
    add_table_map(S, "s2", {A[0], A[1] + A[2], -A[2], A[3] + A[2]},
                  {{Gen::Q, Q + C(A[2]) * e_inv(P)}});
    add_table_map(S, "s3", {A[0] + A[3], A[1], A[2] + A[3], -A[3]},
                  {{Gen::P, P - C(A[3] / (q - one))}});
    add_table_map(S, "pi", {A[1], A[2], A[3], A[0]},
                  {{Gen::Q, -(C(t.inv()) * P)},
                   {Gen::P, C(t) * (Q - C(one))},
                   {Gen::D, D + C((one / (e2 * t))) * (C(one) - Q) * P}});
    add_table_map(S, "sigma", {A[2], A[1], A[0], A[3]},
                  {{Gen::P, P + C(t)}, {Gen::T, -T}, {Gen::D, -D - C(q / e2)}});

    // ------------------------------------------------------- Backlund chains
    auto gauge_x = [=](const RatFunc& pole, const RatFunc& arg) {
        return one_step(make_gauge(ctx, true, pole, -arg, true), NF::A);
    };
    auto gauge_q = [=](const RatFunc& pole, const RatFunc& arg) {
        return one_step(make_gauge(ctx, false, pole, -arg, true), NF::A);
    };

    S.Rx["s0"] = [=](const RatFunc& a) {
        return one_step(make_net_laplace(ctx, true, a, t, true), NF::B);
    };
    S.Rq["s0"] = [=](const RatFunc& a) {
        return one_step(make_net_laplace(ctx, false, a, t, true), NF::B);
    };
    S.Rx["s1"] = [=](const RatFunc& a) { return gauge_x(x, a); };
    S.Rq["s1"] = [=](const RatFunc& a) { return gauge_q(q, a); };
    S.Rx["s2"] = [=](const RatFunc& a) {
        return one_step(make_net_laplace(ctx, true, a, zero, false), NF::B);
    };
    S.Rq["s2"] = [=](const RatFunc& a) {
        return one_step(make_net_laplace(ctx, false, a, zero, false), NF::B);
    };
    S.Rx["s3"] = [=](const RatFunc& a) { return gauge_x(x - one, a); };
    S.Rq["s3"] = [=](const RatFunc& a) { return gauge_q(q - one, a); };

    // R^x_pi = (x -> t(x-1)) o L_x;  q-side analogue.
    const Chain pix = cat({one_step(make_laplace(ctx, true, false), NF::B),
                           one_step(make_varchange(ctx, t * (x - one), {}, {}), NF::A)});
    const Chain piq = cat({one_step(make_laplace(ctx, false, false), NF::B),
                           one_step(make_varchange(ctx, {}, t * (q - one), {}), NF::A)});
    S.Rx["pi"] = [=](const RatFunc&) { return pix; };
    S.Rq["pi"] = [=](const RatFunc&) { return piq; };
    S.Rfixed["pi"] = cat({piq, pix});

    // R_sigma = (t -> -t) o Ad(exp(xt/e1)) o Ad(exp(qt/e2))
    S.Rfixed["sigma"] = cat({one_step(make_exp_gauge(ctx, false, q * t), NF::A),
                             one_step(make_exp_gauge(ctx, true, x * t), NF::A),
                             one_step(make_varchange(ctx, {}, {}, -t), NF::A)});

    // -------------------------------------------------- Hamiltonian clauses
    auto pim = [&](const char* n) { return S.pimg.at(n); };
    S.props.push_back({"s0",
                       S.Rx["s0"](A[0]),
                       {},
                       one,
                       pim("s0"),
                       C(-A[0] * (A[2] + e1 + e1 - e2)) +
                           C(k * t * A[0]) * e_inv(Y + C(t))});
    S.props.push_back(
        {"s1", S.Rx["s1"](A[1]), {}, one, pim("s1"), C(-A[1] * (A[3] + t - e1))});
    S.props.push_back(
        {"s2", S.Rx["s2"](A[2]), {}, one, pim("s2"), C(-A[2] * (A[0] + e1 + e1 - e2 + t))});
    S.props.push_back({"s3", S.Rx["s3"](A[3]), {}, one, pim("s3"), C(-A[3] * (A[1] - e1))});
    // pi clause compares against the INVERSE parameter rotation.
    S.props.push_back({"pi",
                       pix,
                       {},
                       one,
                       std::vector<RatFunc>{A[3], A[0], A[1], A[2]},
                       C(A[3] * e1 + A[1] * (e1 - t) - k * e1 * (x - one))});
    S.props.push_back({"sigma",
                       S.Rfixed["sigma"],
                       {},
                       one,
                       pim("sigma"),
                       C((A[1] - e1 + k * x) * t)});

    // ------------------------------------------------------------ Lax rows
    auto whole = [&](const char* n, const RatFunc& a) {
        return cat({S.Rq.at(n)(a), S.Rx.at(n)(a)});
    };
    S.thm.push_back({"s1", whole("s1", A[1]), one, k * A[1] * (A[3] + t), pim("s1")});
    S.thm.push_back({"s3", whole("s3", A[3]), one, k * A[1] * A[3], pim("s3")});
    S.thm.push_back({"sigma", S.Rfixed["sigma"], one, -k * A[1] * t, pim("sigma")});

    // ------------------------------------------------------------ constants
    S.consts["f_R2pi"] = -k * (A[2] + A[3] + k) * t;
    S.consts["f_T_sigma"] = k * (A[2] - k) * (A[0] - t);
    S.consts["f_T_pi"] = zero;
    S.consts["f_S"] = k * (A[2] + e1) * (A[1] + A[2] + A[3] + e1 + t);
    return S;
}

} // namespace orelax::detail
