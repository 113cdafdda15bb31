/** @file catalog_cft.cpp
 *  Second-derivation presentation of the Lax pairs: for each system the
 *  operators are recorded verbatim as L = sum c(x,q,t) * dx^i dq^j dt^e with
 *  the dictionary  y = e1*dx,  p = e2*dq,  d = dt  folded in, i.e. as NF-A
 *  elements over a table whose parameters carry the residue-data names.
 */
#include "catalog_detail.hpp"

namespace orelax::detail {
namespace {

/// Scratch handles over a free-parameter table (no constraint, no i).
struct CH {
    TablePtr tab;
    AlgebraContext ctx;
    RatFunc x, q, t, e1, e2, one;
    std::vector<RatFunc> a;

    RatFunc n(long v) const { return RatFunc::constant(tab, Rat(v)); }
};

CH make_ch(const std::vector<std::string>& anames) {
    std::vector<std::string> names = {"e1", "e2"};
    for (const auto& nm : anames) names.push_back(nm);
    for (const char* v : {"x", "q", "t", "y", "p"}) names.push_back(v);
    CH h;
    h.tab = std::make_shared<SymbolTable>(names);
    h.ctx = AlgebraContext::make(h.tab);
    h.x = RatFunc::sym(h.tab, "x");
    h.q = RatFunc::sym(h.tab, "q");
    h.t = RatFunc::sym(h.tab, "t");
    h.e1 = RatFunc::sym(h.tab, "e1");
    h.e2 = RatFunc::sym(h.tab, "e2");
    h.one = RatFunc::one(h.tab);
    for (const auto& nm : anames) h.a.push_back(RatFunc::sym(h.tab, nm));
    return h;
}

OpNF mk(const AlgebraContext& ctx, std::vector<std::pair<Key3, RatFunc>> ts) {
    OpNF o(NF::A, ctx);
    for (const auto& [k, c] : ts) o.add_term(k, c);
    return o;
}

/// The sixth-system pair as a function of its residue data; reused to
/// instantiate the pair over the quantum parameter table.
struct VIPieces {
    OpNF L, B;
    RatFunc b;
};

VIPieces vi_pieces(const AlgebraContext& ctx, const RatFunc& x, const RatFunc& q,
                   const RatFunc& t, const RatFunc& e1, const RatFunc& e2,
                   const RatFunc& a0, const RatFunc& a1, const RatFunc& at,
                   const RatFunc& ai) {
    auto tab = ctx.tab;
    RatFunc one = RatFunc::one(tab);
    auto n = [&](long v) { return RatFunc::constant(tab, Rat(v)); };
    RatFunc Cc = (-at - ai - a0 - a1 + n(3) * (e1 + e2)) *
                 (-at + ai - a0 - a1 + e1 + e2) / n(4);
    RatFunc px = (x - one) * x * (x - t);
    RatFunc pq = (q - one) * q * (q - t);
    VIPieces out{
        mk(ctx,
           {{Key3{2, 0, 0}, -px},
            {Key3{1, 0, 0}, -px * ((at - e2) / (x - t) + (a0 - e2) / x +
                                   (a1 - e2) / (x - one) + (e2 - e1) / (x - q))},
            {Key3{0, 2, 0}, pq},
            {Key3{0, 1, 0}, pq * ((at - e1) / (q - t) + (a0 - e1) / q +
                                  (a1 - e1) / (q - one) + (e1 - e2) / (q - x))},
            {Key3{0, 0, 0}, Cc * (q - x)}}),
        mk(ctx,
           {{Key3{0, 1, 0}, (q - one) * q *
                                (-at / (q - t) + (e1 - a0) / q +
                                 (e1 - a1) / (q - one) + e2 / (q - x))},
            {Key3{0, 0, 1}, -(t - one) * t / (q - t) * e1 * e2},
            {Key3{1, 0, 0}, -(x - one) * x / (q - x) * e2},
            {Key3{0, 2, 0}, -(q - one) * q},
            {Key3{0, 0, 0},
             -((a0 * t + a1 * t - a0) * at / (n(2) * (q - t)) + Cc)}}),
        (e1 - e2) * ((a0 * t + a1 * t - a0) * at / n(2) - Cc * t)};
    return out;
}

DerivedLax lax_vi() {
    CH h = make_ch({"a0", "a1", "at", "ai"});
    VIPieces p = vi_pieces(h.ctx, h.x, h.q, h.t, h.e1, h.e2, h.a[0], h.a[1],
                           h.a[2], h.a[3]);
    return DerivedLax{SysTag::VI, h.tab, h.ctx, {"a0", "a1", "at", "ai"},
                      std::move(p.L), std::move(p.B)};
}

DerivedLax lax_v() {
    CH h = make_ch({"a0", "a1", "a2"});
    const RatFunc &x = h.x, &q = h.q, &t = h.t;
    const RatFunc &e1 = h.e1, &e2 = h.e2, &one = h.one;
    const RatFunc &a0 = h.a[0], &a1 = h.a[1], &a2 = h.a[2];
    auto n = [&](long v) { return h.n(v); };
    OpNF L = mk(
        h.ctx,
        {{Key3{2, 0, 0}, (x - one) * x},
         {Key3{1, 0, 0}, (x - one) * x *
                             ((a0 - e2) / x + (a1 - e2) / (x - one) +
                              (e2 - e1) / (x - q) + t)},
         {Key3{0, 2, 0}, -(q - one) * q},
         {Key3{0, 1, 0}, -(q - one) * q *
                             ((a0 - e1) / q + (a1 - e1) / (q - one) +
                              (e1 - e2) / (q - x) + t)},
         {Key3{0, 0, 0}, -t * a2 * (q - x)}});
    OpNF B = mk(
        h.ctx,
        {{Key3{0, 1, 0}, (q - one) * q *
                             ((e1 - a0) / q + (e1 - a1) / (q - one) +
                              e2 / (q - x) - t)},
         {Key3{0, 0, 1}, -t * e1 * e2},
         {Key3{1, 0, 0}, -(x - one) * x / (q - x) * e2},
         {Key3{0, 2, 0}, -(q - one) * q},
         {Key3{0, 0, 0},
          t * (-a1 - n(2) * a2 * q + n(2) * a2) / n(2) -
              (-a0 - a1 + e1 + e2) * (-a0 - a1 + n(3) * (e1 + e2)) / n(4)}});
    return DerivedLax{SysTag::V, h.tab, h.ctx, {"a0", "a1", "a2"},
                      std::move(L), std::move(B)};
}

DerivedLax lax_iv() {
    CH h = make_ch({"a0", "a1"});
    const RatFunc &x = h.x, &q = h.q, &t = h.t, &e1 = h.e1, &e2 = h.e2;
    const RatFunc &a0 = h.a[0], &a1 = h.a[1];
    RatFunc half = h.one / h.n(2);
    OpNF L = mk(h.ctx,
                {{Key3{1, 0, 0},
                  x * ((a0 - e2) / x + (e2 - e1) / (x - q) - t - half * x)},
                 {Key3{0, 1, 0},
                  -q * ((a0 - e1) / q + (e1 - e2) / (q - x) - half * q - t)},
                 {Key3{2, 0, 0}, x},
                 {Key3{0, 2, 0}, -q},
                 {Key3{0, 0, 0}, half * a1 * (q - x)}});
    OpNF B = mk(h.ctx,
                {{Key3{0, 1, 0},
                  q * ((e1 - a0) / q + e2 / (q - x) + half * q + t)},
                 {Key3{0, 0, 0}, half * (t * (a0 - e1 - e2) + a1 * q)},
                 {Key3{0, 0, 1}, -half * e1 * e2},
                 {Key3{1, 0, 0}, -x / (q - x) * e2},
                 {Key3{0, 2, 0}, -q}});
    return DerivedLax{SysTag::IV, h.tab, h.ctx, {"a0", "a1"},
                      std::move(L), std::move(B)};
}

DerivedLax lax_iii() {
    CH h = make_ch({"a0", "a1"});
    const RatFunc &x = h.x, &q = h.q, &t = h.t, &e1 = h.e1, &e2 = h.e2,
                  &one = h.one;
    const RatFunc &a0 = h.a[0], &a1 = h.a[1];
    auto n = [&](long v) { return h.n(v); };
    OpNF L = mk(
        h.ctx,
        {{Key3{0, 1, 0}, -q * q *
                             ((a0 - n(2) * e1) / q + t / (q * q) +
                              (e1 - e2) / (q - x) - one)},
         {Key3{1, 0, 0}, x * x *
                             ((a0 - n(2) * e2) / x + (e2 - e1) / (x - q) +
                              t / (x * x) - one)},
         {Key3{0, 2, 0}, -q * q},
         {Key3{2, 0, 0}, x * x},
         {Key3{0, 0, 0}, a1 * (q - x)}});
    OpNF B = mk(
        h.ctx,
        {{Key3{0, 1, 0}, -q * q *
                             ((a0 - e1) / q + t / (q * q) - e2 / (q - x) - one)},
         {Key3{0, 0, 0},
          a0 * (-a0 + n(2) * (e1 + e2)) / n(4) + a1 * q + t / n(2)},
         {Key3{0, 2, 0}, -q * q},
         {Key3{1, 0, 0}, -q * x / (q - x) * e2},
         {Key3{0, 0, 1}, -t * e1 * e2}});
    return DerivedLax{SysTag::III, h.tab, h.ctx, {"a0", "a1"},
                      std::move(L), std::move(B)};
}

DerivedLax lax_ii() {
    CH h = make_ch({"a"});
    const RatFunc &x = h.x, &q = h.q, &t = h.t, &e1 = h.e1, &e2 = h.e2;
    const RatFunc& a = h.a[0];
    auto n = [&](long v) { return h.n(v); };
    OpNF L = mk(h.ctx,
                {{Key3{0, 0, 0}, n(2) * (a + e1) * (q - x)},
                 {Key3{0, 1, 0}, n(2) * q * q + t + (e2 - e1) / (q - x)},
                 {Key3{1, 0, 0}, -(n(2) * x * x + t + (e1 - e2) / (x - q))},
                 {Key3{2, 0, 0}, h.one},
                 {Key3{0, 2, 0}, -h.one}});
    OpNF B = mk(h.ctx,
                {{Key3{0, 0, 0}, n(2) * (a + e1) * q},
                 {Key3{0, 1, 0}, n(2) * q * q + t + e2 / (q - x)},
                 {Key3{0, 0, 1}, -n(2) * e1 * e2},
                 {Key3{1, 0, 0}, -e2 / (q - x)},
                 {Key3{0, 2, 0}, -h.one}});
    return DerivedLax{SysTag::II, h.tab, h.ctx, {"a"}, std::move(L),
                      std::move(B)};
}

DerivedLax lax_i() {
    CH h = make_ch({});
    const RatFunc &x = h.x, &q = h.q, &t = h.t, &e1 = h.e1, &e2 = h.e2;
    auto n = [&](long v) { return h.n(v); };
    OpNF L = mk(h.ctx,
                {{Key3{0, 0, 0},
                  n(4) * q * q * q + n(2) * q * t - n(4) * x * x * x -
                      n(2) * x * t},
                 {Key3{1, 0, 0}, -(e1 - e2) / (q - x)},
                 {Key3{0, 1, 0}, (e2 - e1) / (x - q)},
                 {Key3{2, 0, 0}, h.one},
                 {Key3{0, 2, 0}, -h.one}});
    OpNF B = mk(h.ctx,
                {{Key3{0, 0, 0}, n(4) * q * q * q + n(2) * q * t},
                 {Key3{0, 1, 0}, e2 / (q - x)},
                 {Key3{1, 0, 0}, -e2 / (q - x)},
                 {Key3{0, 2, 0}, -h.one},
                 {Key3{0, 0, 1}, -n(2) * e1 * e2}});
    return DerivedLax{SysTag::I, h.tab, h.ctx, {}, std::move(L), std::move(B)};
}

DerivedLax lax_iii_d7() {
    CH h = make_ch({"a0"});
    const RatFunc &x = h.x, &q = h.q, &t = h.t, &e1 = h.e1, &e2 = h.e2;
    const RatFunc& a0 = h.a[0];
    auto n = [&](long v) { return h.n(v); };
    OpNF L = mk(
        h.ctx,
        {{Key3{0, 1, 0},
          q * (n(2) * e1 - a0) - q * q * (e1 - e2) / (q - x) - t},
         {Key3{1, 0, 0},
          x * (a0 - n(2) * e2) + x * x * (e1 - e2) / (q - x) + t},
         {Key3{0, 2, 0}, -q * q},
         {Key3{0, 0, 0},
          -(q - x) * (n(2) * q * x + t * e2) / (n(2) * q * x)},
         {Key3{2, 0, 0}, x * x}});
    OpNF B = mk(
        h.ctx,
        {{Key3{0, 1, 0}, -a0 * q + q * q * e2 / (q - x) + q * e1 - t},
         {Key3{0, 0, 0},
          a0 * (-a0 + n(2) * (e1 + e2)) / n(4) + t * e2 / (n(2) * q) - q},
         {Key3{0, 2, 0}, -q * q},
         {Key3{0, 0, 1}, -t * e1 * e2},
         {Key3{1, 0, 0}, -q * x / (q - x) * e2}});
    return DerivedLax{SysTag::III_D7, h.tab, h.ctx, {"a0"}, std::move(L),
                      std::move(B)};
}

DerivedLax lax_iii_d8() {
    CH h = make_ch({});
    const RatFunc &x = h.x, &q = h.q, &t = h.t, &e1 = h.e1, &e2 = h.e2;
    auto n = [&](long v) { return h.n(v); };
    OpNF L = mk(h.ctx,
                {{Key3{0, 1, 0}, -q * x * (e1 - e2) / (q - x)},
                 {Key3{0, 2, 0}, -q * q},
                 {Key3{0, 0, 0}, (q - x) * (t - q * x) / (q * x)},
                 {Key3{2, 0, 0}, x * x},
                 {Key3{1, 0, 0}, q * x * (e1 - e2) / (q - x)}});
    OpNF B = mk(h.ctx,
                {{Key3{0, 2, 0}, -q * q},
                 {Key3{0, 0, 0},
                  (e1 + e2) * (e1 + e2) / n(4) - q - t / q},
                 {Key3{0, 0, 1}, -t * e1 * e2},
                 {Key3{1, 0, 0}, -q * x / (q - x) * e2},
                 {Key3{0, 1, 0}, q * x / (q - x) * e2}});
    return DerivedLax{SysTag::III_D8, h.tab, h.ctx, {}, std::move(L),
                      std::move(B)};
}

} // namespace

DerivedLax build_cft(SysTag j) {
    switch (j) {
        case SysTag::I: return lax_i();
        case SysTag::II: return lax_ii();
        case SysTag::III: return lax_iii();
        case SysTag::III_D7: return lax_iii_d7();
        case SysTag::III_D8: return lax_iii_d8();
        case SysTag::IV: return lax_iv();
        case SysTag::V: return lax_v();
        case SysTag::VI: return lax_vi();
    }
    fail(ErrKind::Internal, "bad tag");
}

} // namespace orelax::detail

namespace orelax {

CftQuantumSlice cft_vi_quantum_frame() {
    const SystemData& S = system_data(SysTag::VI);
    RatFunc x = RatFunc::sym(S.tab, "x");
    RatFunc q = RatFunc::sym(S.tab, "q");
    RatFunc t = RatFunc::sym(S.tab, "t");
    RatFunc ee = S.e1 + S.e2;
    // Residue data expressed through the root variables.
    RatFunc at = -S.a(0) + ee, ai = -S.a(1) + ee;
    RatFunc a1 = -S.a(3) + ee, a0 = -S.a(4) + ee;
    detail::VIPieces p =
        detail::vi_pieces(S.ctx, x, q, t, S.e1, S.e2, a0, a1, at, ai);
    return CftQuantumSlice{std::move(p.L), std::move(p.B), std::move(p.b)};
}

} // namespace orelax
