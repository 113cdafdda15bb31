#include "orelax/morphism.hpp"

#include <algorithm>

namespace orelax {

namespace {

/// Commutative avatar of a generator, or SIZE_MAX when there is none (d).
size_t avatar_of(const AlgebraContext& ctx, Gen g) {
    switch (g) {
    case Gen::X: return ctx.ix;
    case Gen::Q: return ctx.iq;
    case Gen::T: return ctx.it;
    case Gen::Y: return ctx.iy;
    case Gen::P: return ctx.ip;
    case Gen::D: return SIZE_MAX;
    }
    return SIZE_MAX;
}

/// Evaluate a tree into a commutative rational function, mapping each
/// generator to its avatar symbol.  Fails (nullopt) on d, which has no
/// avatar.  This is only a *candidate* scalar reading; the caller decides
/// whether scalar substitution is actually sound.
std::optional<RatFunc> tree_as_avatar_coeff(const AlgebraContext& ctx, const ExprPtr& e) {
    switch (e->kind) {
    case Expr::Kind::Const:
        return e->value;
    case Expr::Kind::Sym: {
        size_t v = avatar_of(ctx, e->gen);
        if (v == SIZE_MAX) return std::nullopt;
        return RatFunc(MPoly::monomial(ctx.tab, [&] {
            Expv ev(ctx.tab->arity(), 0);
            ev[v] = 1;
            return ev;
        }(), 1));
    }
    case Expr::Kind::Add: {
        RatFunc s = RatFunc::zero(ctx.tab);
        for (const auto& c : e->children) {
            auto r = tree_as_avatar_coeff(ctx, c);
            if (!r) return std::nullopt;
            s = s + *r;
        }
        return s;
    }
    case Expr::Kind::Mul: {
        RatFunc s = RatFunc::one(ctx.tab);
        for (const auto& c : e->children) {
            auto r = tree_as_avatar_coeff(ctx, c);
            if (!r) return std::nullopt;
            s = s * *r;
        }
        return s;
    }
    case Expr::Kind::Neg: {
        auto r = tree_as_avatar_coeff(ctx, e->children[0]);
        if (!r) return std::nullopt;
        return -*r;
    }
    case Expr::Kind::Inv: {
        auto r = tree_as_avatar_coeff(ctx, e->children[0]);
        if (!r || r->is_zero()) return std::nullopt;
        return r->inv();
    }
    case Expr::Kind::IntPow: {
        auto r = tree_as_avatar_coeff(ctx, e->children[0]);
        if (!r) return std::nullopt;
        return r->pow(e->power);
    }
    }
    return std::nullopt;
}

/// Symbols a coefficient mentions, restricted to the five avatars.
void collect_avatar_support(const AlgebraContext& ctx, const RatFunc& c,
                            std::vector<size_t>& out) {
    for (size_t v : {ctx.ix, ctx.iq, ctx.it, ctx.iy, ctx.ip})
        if (!c.free_of(v) && std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
}

/// Generators from the commuting five, in the fixed expansion order used by
/// the operator-path monomial rebuild.
constexpr Gen kCoeffGens[] = {Gen::X, Gen::Q, Gen::T, Gen::Y, Gen::P};

/// Build a tree for a polynomial with every avatar replaced by the given
/// image trees (scalar symbols other than avatars stay as coefficients).
ExprPtr mpoly_to_tree(const AlgebraContext& ctx, const MPoly& poly,
                      const std::array<ExprPtr, 6>& images) {
    std::array<std::pair<size_t, Gen>, 5> slots = {
        {{ctx.ix, Gen::X}, {ctx.iq, Gen::Q}, {ctx.it, Gen::T}, {ctx.iy, Gen::Y},
         {ctx.ip, Gen::P}}};
    std::vector<ExprPtr> sum;
    for (const auto& [ev, coef] : poly.terms()) {
        Expv scalar = ev;
        std::vector<ExprPtr> factors;
        for (const auto& [idx, g] : slots) {
            int e = ev[idx];
            if (e == 0) continue;
            scalar[idx] = 0;
            const auto& im = images[static_cast<size_t>(g)];
            factors.push_back(e_pow(im ? im : e_sym(g), e));
        }
        // The coefficient (parameters, e1, e2, i, ...) goes on the left.
        std::vector<ExprPtr> term;
        term.push_back(e_const(RatFunc(MPoly::monomial(poly.table(), scalar, coef))));
        for (auto& f : factors) term.push_back(std::move(f));
        sum.push_back(term.size() == 1 ? term[0] : e_mul(std::move(term)));
    }
    if (sum.empty()) return e_const(RatFunc::zero(poly.table()));
    return sum.size() == 1 ? sum[0] : e_add(std::move(sum));
}

/// Substitute the morphism through one commutative coefficient, yielding a
/// tree.  Fast path: when every relevant image is itself expressible over
/// the avatars and no noncommuting pair (x with y, or q with p) would be
/// mixed, the substitution is an honest scalar one.  Otherwise the
/// numerator is expanded monomial by monomial over the image trees.
ExprPtr const_to_tree(const Morphism& m, const RatFunc& c0) {
    const AlgebraContext& ctx = m.ctx;
    RatFunc c = m.apply_params(c0);

    // Which avatars does the coefficient actually use?
    bool any = false;
    std::array<bool, 6> used{};
    for (Gen g : kCoeffGens) {
        size_t v = avatar_of(ctx, g);
        if (!c.free_of(v)) { used[static_cast<size_t>(g)] = true; any = true; }
    }
    if (!any) return e_const(c);

    // Candidate scalar images and their joint avatar support.
    std::array<std::optional<RatFunc>, 6> scalar;
    bool all_scalar = true;
    std::vector<size_t> support;
    for (Gen g : kCoeffGens) {
        if (!used[static_cast<size_t>(g)]) continue;
        const auto& im = m.img[static_cast<size_t>(g)];
        if (!im) {
            scalar[static_cast<size_t>(g)] =
                RatFunc(MPoly::sym(ctx.tab, ctx.tab->name(avatar_of(ctx, g))));
            support.push_back(avatar_of(ctx, g));
            continue;
        }
        auto r = tree_as_avatar_coeff(ctx, im);
        scalar[static_cast<size_t>(g)] = r;
        if (r)
            collect_avatar_support(ctx, *r, support);
        else
            all_scalar = false;
    }
    auto in_support = [&](size_t v) {
        return std::find(support.begin(), support.end(), v) != support.end();
    };
    bool mask_ok = !(in_support(ctx.ix) && in_support(ctx.iy)) &&
                   !(in_support(ctx.iq) && in_support(ctx.ip));

    if (all_scalar && mask_ok) {
        std::vector<std::pair<size_t, RatFunc>> bind;
        for (Gen g : kCoeffGens)
            if (used[static_cast<size_t>(g)])
                bind.emplace_back(avatar_of(ctx, g), *scalar[static_cast<size_t>(g)]);
        return e_const(c.subst(bind));
    }

    // Operator path: expand numerator over the image trees; the denominator
    // goes through an Inv node and must normalize to a coefficient later.
    ExprPtr num_tree = mpoly_to_tree(ctx, c.num(), m.img);
    if (c.is_polynomial()) return num_tree;
    ExprPtr den_tree = mpoly_to_tree(ctx, c.den(), m.img);
    return e_mul({e_inv(std::move(den_tree)), std::move(num_tree)});
}

} // namespace

RatFunc Morphism::apply_params(const RatFunc& c) const {
    if (params.empty()) return c;
    return c.subst(params);
}

ExprPtr apply_tree(const Morphism& m, const ExprPtr& tree) {
    switch (tree->kind) {
    case Expr::Kind::Const:
        return const_to_tree(m, tree->value);
    case Expr::Kind::Sym:
        return m.image(tree->gen);
    default: {
        std::vector<ExprPtr> ch;
        ch.reserve(tree->children.size());
        for (const auto& c : tree->children) ch.push_back(apply_tree(m, c));
        switch (tree->kind) {
        case Expr::Kind::Add: return e_add(std::move(ch));
        case Expr::Kind::Mul: return e_mul(std::move(ch));
        case Expr::Kind::Neg: return e_neg(std::move(ch[0]));
        case Expr::Kind::Inv: return e_inv(std::move(ch[0]));
        case Expr::Kind::IntPow: return e_pow(std::move(ch[0]), tree->power);
        default: break;
        }
    }
    }
    fail(ErrKind::Internal, "apply_tree: unreachable");
}

OpNF apply(const Morphism& m, const ExprPtr& tree, NF target, const AlgebraContext& ctx) {
    return normalize(apply_tree(m, tree), target, ctx);
}

OpNF apply(const Morphism& m, const OpNF& op, NF target) {
    return apply(m, op.to_tree(), target, op.ctx());
}

OpNF apply_chain(const std::vector<Morphism>& steps, const OpNF& op, NF target) {
    OpNF cur = op.nf() == target ? op : normalize(op.to_tree(), target, op.ctx());
    for (const auto& m : steps) cur = apply(m, cur, target);
    return cur;
}

Morphism compose(const Morphism& m1, const Morphism& m2) {
    Morphism out;
    out.name = m1.name + "*" + m2.name;
    out.ctx = m1.ctx;

    // Parameter part: run m2's parameter images through m1's substitution.
    std::vector<size_t> keys;
    for (const auto& [k, v] : m2.params) keys.push_back(k);
    for (const auto& [k, v] : m1.params)
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (size_t k : keys) {
        RatFunc im = RatFunc(MPoly::sym(out.ctx.tab, out.ctx.tab->name(k)));
        for (const auto& [k2, v2] : m2.params)
            if (k2 == k) { im = v2; break; }
        out.params.emplace_back(k, m1.apply_params(im));
    }

    for (size_t g = 0; g < 6; ++g)
        if (m2.img[g] || m1.img[g])
            out.img[g] = apply_tree(m1, m2.image(static_cast<Gen>(g)));
    return out;
}

MStatus validate(Morphism& m) {
    const AlgebraContext& ctx = m.ctx;
    static const Gen gens[] = {Gen::X, Gen::Q, Gen::T, Gen::Y, Gen::P, Gen::D};
    bool any_unverifiable = false;
    for (int a = 0; a < 6; ++a) {
        for (int b = a + 1; b < 6; ++b) {
            Gen ga = gens[a], gb = gens[b];
            RatFunc expect = RatFunc::zero(ctx.tab);
            if (ga == Gen::X && gb == Gen::Y) expect = -ctx.e1; // [x,y] = -e1
            if (ga == Gen::Q && gb == Gen::P) expect = -ctx.e2;
            if (ga == Gen::T && gb == Gen::D) expect = -RatFunc::one(ctx.tab);
            ExprPtr ia = m.image(ga), ib = m.image(gb);
            ExprPtr comm = e_sub(e_mul({ia, ib}), e_mul({ib, ia}));
            ExprPtr delta = e_sub(comm, e_const(expect));
            bool done = false;
            for (NF nf : {NF::A, NF::B}) {
                try {
                    OpNF r = normalize(delta, nf, ctx);
                    if (!r.is_zero()) {
                        m.status = MStatus::Failed;
                        m.note = std::string("commutator [") + gen_name(ga) + "," +
                                 gen_name(gb) + "] image mismatch";
                        return m.status;
                    }
                    done = true;
                    break;
                } catch (const Error&) {
                    // try the other normal form
                }
            }
            if (!done) any_unverifiable = true;
        }
    }
    m.status = any_unverifiable ? MStatus::Unverifiable : MStatus::Verified;
    return m.status;
}

// --------------------------------------------------------------- builders

Morphism make_shift(const AlgebraContext& ctx, bool x_side, const RatFunc& s_der,
                    const RatFunc& s_d) {
    Morphism m;
    m.ctx = ctx;
    Gen der = x_side ? Gen::Y : Gen::P;
    if (!s_der.is_zero())
        m.set_image(der, e_add({e_sym(der), e_const(s_der)}));
    if (!s_d.is_zero())
        m.set_image(Gen::D, e_add({e_sym(Gen::D), e_const(s_d)}));
    return m;
}

Morphism make_gauge(const AlgebraContext& ctx, bool x_side, const RatFunc& pole,
                    const RatFunc& beta, bool with_d_shift) {
    if (pole.is_zero()) fail(ErrKind::DivisionByZero, "gauge pole is zero");
    size_t v = x_side ? ctx.ix : ctx.iq;
    const RatFunc& eps = x_side ? ctx.e1 : ctx.e2;
    RatFunc s_der = -(beta * pole.derivative(v) / pole);
    RatFunc s_d = with_d_shift ? -(beta / eps * pole.derivative(ctx.it) / pole)
                               : RatFunc::zero(ctx.tab);
    Morphism m = make_shift(ctx, x_side, s_der, s_d);
    m.name = "gauge";
    return m;
}

Morphism make_exp_gauge(const AlgebraContext& ctx, bool x_side, const RatFunc& G) {
    size_t v = x_side ? ctx.ix : ctx.iq;
    const RatFunc& eps = x_side ? ctx.e1 : ctx.e2;
    Morphism m = make_shift(ctx, x_side, -G.derivative(v), -(G.derivative(ctx.it) / eps));
    m.name = "exp_gauge";
    return m;
}

Morphism make_varchange(const AlgebraContext& ctx, std::optional<RatFunc> fx,
                        std::optional<RatFunc> gq, std::optional<RatFunc> ht) {
    Morphism m;
    m.ctx = ctx;
    m.name = "varchange";
    RatFunc zero = RatFunc::zero(ctx.tab);
    RatFunc u = zero, v = zero;

    if (fx) {
        RatFunc fp = fx->derivative(ctx.ix);
        if (fp.is_zero()) fail(ErrKind::NonInvertibleChange, "x image has zero x-derivative");
        RatFunc inv_fp = fp.inv();
        m.set_image(Gen::X, e_const(*fx));
        // y' = (1/f') y + (e1/2) (1/f')'  -- the symmetrized first-order part
        m.set_image(Gen::Y, e_add({e_mul({e_const(inv_fp), e_sym(Gen::Y)}),
                                   e_const(ctx.e1.mul_by(Rat(1, 2)) *
                                           inv_fp.derivative(ctx.ix))}));
        RatFunc ft = fx->derivative(ctx.it);
        if (!ft.is_zero()) u = -(ft / (ctx.e1 * fp));
    }
    if (gq) {
        RatFunc gp = gq->derivative(ctx.iq);
        if (gp.is_zero()) fail(ErrKind::NonInvertibleChange, "q image has zero q-derivative");
        RatFunc inv_gp = gp.inv();
        m.set_image(Gen::Q, e_const(*gq));
        m.set_image(Gen::P, e_add({e_mul({e_const(inv_gp), e_sym(Gen::P)}),
                                   e_const(ctx.e2.mul_by(Rat(1, 2)) *
                                           inv_gp.derivative(ctx.iq))}));
        RatFunc gt = gq->derivative(ctx.it);
        if (!gt.is_zero()) v = -(gt / (ctx.e2 * gp));
    }

    RatFunc hp = RatFunc::one(ctx.tab);
    if (ht) {
        hp = ht->derivative(ctx.it);
        if (hp.is_zero()) fail(ErrKind::NonInvertibleChange, "t image has zero t-derivative");
        m.set_image(Gen::T, e_const(*ht));
    }
    if (ht || !u.is_zero() || !v.is_zero()) {
        std::vector<ExprPtr> parts{e_sym(Gen::D)};
        if (!u.is_zero()) parts.push_back(e_mul({e_const(u), e_sym(Gen::Y)}));
        if (!v.is_zero()) parts.push_back(e_mul({e_const(v), e_sym(Gen::P)}));
        ExprPtr body = parts.size() == 1 ? parts[0] : e_add(std::move(parts));
        m.set_image(Gen::D, hp.is_one() ? body : e_mul({e_const(hp.inv()), body}));
    }
    return m;
}

Morphism make_laplace(const AlgebraContext& ctx, bool x_side, bool inverse) {
    Morphism m;
    m.ctx = ctx;
    m.name = inverse ? "laplace_inv" : "laplace";
    Gen pos = x_side ? Gen::X : Gen::Q;
    Gen der = x_side ? Gen::Y : Gen::P;
    if (!inverse) {
        m.set_image(pos, e_neg(e_sym(der)));
        m.set_image(der, e_sym(pos));
    } else {
        m.set_image(pos, e_sym(der));
        m.set_image(der, e_neg(e_sym(pos)));
    }
    return m;
}

Morphism make_net_laplace(const AlgebraContext& ctx, bool x_side, const RatFunc& beta,
                          const RatFunc& g_t, bool with_d_shift) {
    Morphism m;
    m.ctx = ctx;
    m.name = "net_laplace";
    Gen pos = x_side ? Gen::X : Gen::Q;
    Gen der = x_side ? Gen::Y : Gen::P;
    const RatFunc& eps = x_side ? ctx.e1 : ctx.e2;
    ExprPtr pole_inv = e_inv(e_add({e_sym(der), e_const(g_t)}));
    m.set_image(pos, e_sub(e_sym(pos), e_mul({e_const(beta), pole_inv})));
    // Conjugating the middle gauge through the Laplace pair flips the sign
    // of the time-derivative shift: the net is d -> d + (beta g'/eps) inv.
    RatFunc gt = g_t.derivative(ctx.it);
    if (with_d_shift && !gt.is_zero())
        m.set_image(Gen::D,
                    e_add({e_sym(Gen::D), e_mul({e_const(beta * gt / eps), pole_inv})}));
    return m;
}

Morphism make_params(const AlgebraContext& ctx,
                     std::vector<std::pair<std::string, RatFunc>> images) {
    Morphism m;
    m.ctx = ctx;
    m.name = "params";
    for (auto& [name, im] : images) m.params.emplace_back(ctx.tab->index(name), std::move(im));
    std::sort(m.params.begin(), m.params.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return m;
}

} // namespace orelax
