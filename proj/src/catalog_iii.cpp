/** @file catalog_iii.cpp
 *  Third system (generic surface) and its degenerate variant.
 *  Constraints:  a0 + 2 a1 + a2 = -e1 + e2   /   a0 + a1 = -e1 + e2.
 */
#include "catalog_detail.hpp"

namespace orelax::detail {

SystemData build_iii() {
    SystemData S;
    S.j = SysTag::III;
    S.name = "III";
    S.tab = make_sys_table(3, {{"e1", -1}, {"e2", 1}, {"a1", -2}, {"a2", -1}}, false);
    fill_common(S, 3);
    const SB b = SB::make(S);
    const AlgebraContext ctx = S.ctx;
    const RatFunc x = b.xa, q = b.qa, t = b.ta;
    const RatFunc e1 = b.e1, e2 = b.e2, k = b.kap, one = b.one, zero = b.zero;
    const auto& A = S.alpha;
    const ExprPtr X = b.X, Q = b.Q, T = b.T, Y = b.Y, P = b.P, D = b.D;
    auto C = [&](const RatFunc& v) { return e_const(v); };

    // H = v w v w - v w v + (a0 + a2 + eps) v w - a2 v + t w
    auto Hside = [=](bool xs, const std::vector<RatFunc>& a) {
        const ExprPtr V = xs ? X : Q, W = xs ? Y : P;
        const RatFunc eps = xs ? e1 : e2;
        ExprPtr tree = e_add({V * W * V * W, -(V * W * V), C(a[0] + a[2] + eps) * V * W,
                              -(C(a[2]) * V), C(t) * W});
        return normalize(tree, NF::A, ctx);
    };
    auto shift = [=](const std::vector<RatFunc>& a) {
        return std::vector<RatFunc>{a[0] + k, a[1], a[2] + k};
    };
    S.Hx = [=](const std::vector<RatFunc>& a) { return Hside(true, a); };
    S.Hq = [=](const std::vector<RatFunc>& a) { return Hside(false, a); };
    S.L = [=](const std::vector<RatFunc>& a) {
        OpNF L = Hside(true, a) - Hside(false, shift(a));
        L.add_term({1, 0, 0}, -k * x * q / (x - q));
        L.add_term({0, 1, 0}, k * x * q / (x - q));
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
    add_table_map(S, "s0", {-A[0], A[1] + A[0], A[2]},
                  {{Gen::Q, Q + C(A[0]) * e_inv(P - C(one))}});
    add_table_map(S, "s1", {A[0] + A[1] + A[1], -A[1], A[2] + A[1] + A[1]},
                  {{Gen::P, P - C((A[1] + A[1]) / q) + C(t / (q * q))},
                   {Gen::T, -T},
                   {Gen::D, -D + C(one / (e2 * q))}});
    add_table_map(S, "s2", {A[0], A[1] + A[2], -A[2]},
                  {{Gen::Q, Q + C(A[2]) * e_inv(P)}});
    add_table_map(S, "sigma", {A[2], A[1], A[0]},
                  {{Gen::Q, -Q}, {Gen::P, C(one) - P}, {Gen::T, -T}, {Gen::D, -D}});

    // ------------------------------------------------------- Backlund chains
    auto gauge = [=](bool xs, const RatFunc& pole, const RatFunc& arg) {
        return one_step(make_gauge(ctx, xs, pole, -arg, true), NF::A);
    };
    auto s1body = [=](bool xs, const RatFunc& a) {
        const RatFunc v = xs ? x : q;
        return cat({gauge(xs, v, a + a),
                    one_step(make_exp_gauge(ctx, xs, -t / v), NF::A),
                    one_step(make_varchange(ctx, {}, {}, -t), NF::A)});
    };
    S.Rx["s0"] = [=](const RatFunc& a) {
        return one_step(make_net_laplace(ctx, true, a, -one, false), NF::B);
    };
    S.Rq["s0"] = [=](const RatFunc& a) {
        return one_step(make_net_laplace(ctx, false, a, -one, false), NF::B);
    };
    S.Rx["s1"] = [=](const RatFunc& a) { return s1body(true, a); };
    S.Rq["s1"] = [=](const RatFunc& a) { return s1body(false, a); };
    S.Rx["s2"] = [=](const RatFunc& a) {
        return one_step(make_net_laplace(ctx, true, a, zero, false), NF::B);
    };
    S.Rq["s2"] = [=](const RatFunc& a) {
        return one_step(make_net_laplace(ctx, false, a, zero, false), NF::B);
    };
    // R_sigma = (x,q,t -> -x,-q,-t) o Ad(exp(-x/e1)) o Ad(exp(-q/e2))
    S.Rfixed["sigma"] = cat({one_step(make_exp_gauge(ctx, false, -q), NF::A),
                             one_step(make_exp_gauge(ctx, true, -x), NF::A),
                             one_step(make_varchange(ctx, -x, -q, -t), NF::A)});

    // -------------------------------------------------- Hamiltonian clauses
    auto pim = [&](const char* n) { return S.pimg.at(n); };
    S.props.push_back(
        {"s0", S.Rx["s0"](A[0]), {}, one, pim("s0"), C(-(A[0] + e1) * (A[2] + e1))});
    S.props.push_back({"s1", S.Rx["s1"](A[1]), {}, one, pim("s1"),
                       C((A[1] + A[1]) * e2 - t - k * t / x)});
    S.props.push_back(
        {"s2", S.Rx["s2"](A[2]), {}, one, pim("s2"), C(-A[2] * (A[0] + e1))});
    S.props.push_back({"sigma", S.Rfixed["sigma"], {}, one, pim("sigma"), C(k * t)});

    // ------------------------------------------------------------ Lax rows
    S.thm.push_back({"s1", cat({S.Rq.at("s1")(A[1]), S.Rx.at("s1")(A[1])}), one,
                     k * (t - (A[1] + A[1]) * (e1 + e2)), pim("s1")});
    S.thm.push_back({"sigma", S.Rfixed["sigma"], one, k * t, pim("sigma")});

    // ------------------------------------------------------------ constants
    S.consts["f_T_sigma"] = k * A[0] * (A[2] + e1 + e1);
    S.consts["f_S"] = -k * (A[0] + e1) * (A[2] + e1);
    return S;
}

SystemData build_iii_d7() {
    SystemData S;
    S.j = SysTag::III_D7;
    S.name = "III-D7";
    S.tab = make_sys_table(2, {{"e1", -1}, {"e2", 1}, {"a1", -1}}, false);
    fill_common(S, 2);
    const SB b = SB::make(S);
    const AlgebraContext ctx = S.ctx;
    const RatFunc x = b.xa, q = b.qa, t = b.ta;
    const RatFunc e1 = b.e1, e2 = b.e2, k = b.kap, one = b.one, zero = b.zero;
    const auto& A = S.alpha;
    const ExprPtr X = b.X, Q = b.Q, T = b.T, Y = b.Y, P = b.P, D = b.D;
    auto C = [&](const RatFunc& v) { return e_const(v); };

    // H = v w v w + (-a0 + eps') v w + t w + v,  eps' the opposite deformation
    auto Hside = [=](bool xs, const std::vector<RatFunc>& a) {
        const ExprPtr V = xs ? X : Q, W = xs ? Y : P;
        const RatFunc epso = xs ? e2 : e1;
        ExprPtr tree = e_add({V * W * V * W, C(epso - a[0]) * V * W, C(t) * W, V});
        return normalize(tree, NF::A, ctx);
    };
    auto shift = [=](const std::vector<RatFunc>& a) {
        return std::vector<RatFunc>{a[0], a[1] + k + k};
    };
    S.Hx = [=](const std::vector<RatFunc>& a) { return Hside(true, a); };
    S.Hq = [=](const std::vector<RatFunc>& a) { return Hside(false, a); };
    S.L = [=](const std::vector<RatFunc>& a) {
        OpNF L = Hside(true, a) - Hside(false, shift(a));
        L.add_term({1, 0, 0}, -k * x * q / (x - q));
        L.add_term({0, 1, 0}, k * x * q / (x - q));
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

    // The intertwining element here is x/(x-q) y - q/(x-q) p, argument-free.
    S.Delem = [=](const RatFunc&) {
        OpNF Dop(NF::A, ctx);
        Dop.add_term({1, 0, 0}, x / (x - q));
        Dop.add_term({0, 1, 0}, -q / (x - q));
        return Dop;
    };
    S.D0 = S.Delem(zero);

    // -------------------------------------------------------- symmetry table
    add_table_map(S, "s0", {-A[0], A[1] + A[0] + A[0]},
                  {{Gen::P, P - C(A[0] / q) + C(t / (q * q))},
                   {Gen::T, -T},
                   {Gen::D, -D + C(one / (e2 * q))}});
    add_table_map(S, "s1", {A[0] + A[1] + A[1], -A[1]},
                  {{Gen::Q, -Q - C(A[1]) * e_inv(P) - e_inv(P * P)},
                   {Gen::P, -P},
                   {Gen::T, -T},
                   {Gen::D, -D}});
    add_table_map(S, "pi", {A[1], A[0]},
                  {{Gen::Q, C(t) * P},
                   {Gen::P, -(C(one / t) * Q)},
                   {Gen::T, -T},
                   {Gen::D, -D - C(one / (e2 * t)) * Q * P}});

    // ------------------------------------------------------- Backlund chains
    auto s0body = [=](bool xs, const RatFunc& a) {
        const RatFunc v = xs ? x : q;
        return cat({one_step(make_gauge(ctx, xs, v, -a, true), NF::A),
                    one_step(make_exp_gauge(ctx, xs, -t / v), NF::A),
                    one_step(make_varchange(ctx, {}, {}, -t), NF::A)});
    };
    auto pibody = [=](bool xs) {
        const RatFunc v = xs ? x : q;
        std::optional<RatFunc> fx, gq;
        (xs ? fx : gq) = -v / t;
        return cat({one_step(make_laplace(ctx, xs, false), NF::B),
                    one_step(make_varchange(ctx, fx, gq, -t), NF::A)});
    };
    S.Rx["s0"] = [=](const RatFunc& a) { return s0body(true, a); };
    S.Rq["s0"] = [=](const RatFunc& a) { return s0body(false, a); };
    const Chain pix = pibody(true), piq = pibody(false);
    S.Rx["pi"] = [=](const RatFunc&) { return pix; };
    S.Rq["pi"] = [=](const RatFunc&) { return piq; };
    S.Rfixed["pi"] = cat({piq, pix});
    S.Rx["s1"] = [=](const RatFunc& a) { return cat({pix, s0body(true, a), pix}); };
    S.Rq["s1"] = [=](const RatFunc& a) { return cat({piq, s0body(false, a), piq}); };

    // -------------------------------------------------- Hamiltonian clauses
    auto pim = [&](const char* n) { return S.pimg.at(n); };
    S.props.push_back(
        {"s0", S.Rx["s0"](A[0]), {}, one, pim("s0"), C(e2 * A[0] - k * t / x)});
    // The Hamiltonian clause holds for the x-side map alone (single t-flip).
    S.props.push_back({"pi", pix, {}, one, pim("pi"), C(-e1 * A[1]) + C(k * x) * Y});

    // ------------------------------------------------------------ Lax rows
    S.thm.push_back({"s0", cat({S.Rq.at("s0")(A[0]), S.Rx.at("s0")(A[0])}), one,
                     -k * A[0] * (e1 + e2), pim("s0")});

    // ------------------------------------------------------------ constants
    S.consts["f_T"] = (A[0] - e1) * k * k;
    return S;
}

} // namespace orelax::detail
