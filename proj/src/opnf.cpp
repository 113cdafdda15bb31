/** @file opnf.cpp
 *  Normal-ordered arithmetic in the two PBW bases, tree normalization, and
 *  the NF-A <-> NF-B conversions.
 */
#include "orelax/opnf.hpp"

#include <algorithm>
#include <sstream>

namespace orelax {

AlgebraContext AlgebraContext::make(TablePtr tab) {
    AlgebraContext c;
    c.ix = tab->index("x");
    c.iq = tab->index("q");
    c.it = tab->index("t");
    c.iy = tab->index("y");
    c.ip = tab->index("p");
    c.e1 = RatFunc::sym(tab, "e1");
    c.e2 = RatFunc::sym(tab, "e2");
    c.tab = std::move(tab);
    return c;
}

namespace {

/// Slot data for one NF: which commutative variable each monomial slot
/// differentiates when moved past a coefficient, and with what multiplier.
struct SlotRule {
    size_t var;
    int e_sign; // multiplier is e_sign * e_k (slot 2: plain 1)
};

// NF-A monomial slots (y,p,d): y.c = c.y + e1 dx(c), etc.
// NF-B monomial slots (x,q,d): x.R = R.x - e1 dy(R), etc.
void slot_rules(NF nf, const AlgebraContext& ctx, SlotRule out[3]) {
    if (nf == NF::A) {
        out[0] = {ctx.ix, +1};
        out[1] = {ctx.iq, +1};
    } else {
        out[0] = {ctx.iy, -1};
        out[1] = {ctx.ip, -1};
    }
    out[2] = {ctx.it, 0}; // multiplier 1
}

Rat binom(int n, int k) {
    Rat r(1);
    for (int j = 0; j < k; ++j) r *= Rat(n - j) / Rat(j + 1);
    return r;
}

/// Coefficient symbols that must NOT appear in this NF's coefficients.
void forbidden_vars(NF nf, const AlgebraContext& ctx, size_t out[2]) {
    if (nf == NF::A) {
        out[0] = ctx.iy;
        out[1] = ctx.ip;
    } else {
        out[0] = ctx.ix;
        out[1] = ctx.iq;
    }
}

} // namespace

bool OpNF::is_coefficient() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key3{0, 0, 0});
}

RatFunc OpNF::coefficient() const {
    if (terms_.empty()) return RatFunc::zero(ctx_.tab);
    if (!is_coefficient()) fail(ErrKind::Internal, "coefficient() on non-coefficient operator");
    return terms_.begin()->second;
}

void OpNF::add_term(const Key3& k, const RatFunc& c) {
    if (c.is_zero()) return;
    size_t forb[2];
    forbidden_vars(nf_, ctx_, forb);
    if (!c.free_of(forb[0]) || !c.free_of(forb[1]))
        fail(ErrKind::Internal, "coefficient uses a monomial-side symbol");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OpNF OpNF::operator+(const OpNF& o) const {
    if (nf_ != o.nf_) fail(ErrKind::Internal, "NF mismatch in +");
    OpNF r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

OpNF OpNF::operator-(const OpNF& o) const {
    if (nf_ != o.nf_) fail(ErrKind::Internal, "NF mismatch in -");
    OpNF r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

OpNF OpNF::operator-() const {
    OpNF r(nf_, ctx_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

OpNF OpNF::mul_coeff_left(const RatFunc& c) const {
    OpNF r(nf_, ctx_);
    for (const auto& [k, v] : terms_) r.add_term(k, c * v);
    return r;
}

OpNF OpNF::operator*(const OpNF& o) const {
    if (nf_ != o.nf_) fail(ErrKind::Internal, "NF mismatch in *");
    SlotRule rules[3];
    slot_rules(nf_, ctx_, rules);
    RatFunc lambda[3] = {rules[0].e_sign > 0 ? ctx_.e1 : -ctx_.e1,
                         rules[1].e_sign > 0 ? ctx_.e2 : -ctx_.e2, RatFunc::one(ctx_.tab)};
    OpNF r(nf_, ctx_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            Deadline::check();
            // Move the monomial ka past cb:
            //   mono^ka . c = sum_m  C(ka,m) lambda^m (d^m c) mono^(ka-m)
            // Iterated derivatives computed slot by slot.
            std::vector<std::pair<Key3, RatFunc>> moved{{Key3{0, 0, 0}, cb}};
            for (int s = 0; s < 3; ++s) {
                if (ka[static_cast<size_t>(s)] == 0) continue;
                std::vector<std::pair<Key3, RatFunc>> next;
                for (auto& [m, c] : moved) {
                    RatFunc dc = c;
                    for (int k = 0; k <= ka[static_cast<size_t>(s)]; ++k) {
                        if (!dc.is_zero()) {
                            Key3 nm = m;
                            nm[static_cast<size_t>(s)] = k;
                            RatFunc w = dc.mul_by(binom(ka[static_cast<size_t>(s)], k));
                            for (int j = 0; j < k; ++j) w = w * lambda[s];
                            next.emplace_back(nm, std::move(w));
                        }
                        if (k < ka[static_cast<size_t>(s)]) {
                            dc = dc.derivative(rules[s].var);
                            if (dc.is_zero()) break;
                        }
                    }
                }
                moved = std::move(next);
            }
            for (const auto& [m, c] : moved) {
                Key3 nk;
                for (int s = 0; s < 3; ++s)
                    nk[static_cast<size_t>(s)] = ka[static_cast<size_t>(s)] -
                                                 m[static_cast<size_t>(s)] +
                                                 kb[static_cast<size_t>(s)];
                r.add_term(nk, ca * c);
            }
        }
    }
    return r;
}

ExprPtr OpNF::to_tree() const {
    Gen order[3] = {nf_ == NF::A ? Gen::Y : Gen::X, nf_ == NF::A ? Gen::P : Gen::Q, Gen::D};
    std::vector<ExprPtr> sum;
    for (const auto& [k, c] : terms_) {
        std::vector<ExprPtr> factors{e_const(c)};
        for (int s = 0; s < 3; ++s)
            for (int j = 0; j < k[static_cast<size_t>(s)]; ++j) factors.push_back(e_sym(order[s]));
        sum.push_back(factors.size() == 1 ? factors[0] : e_mul(std::move(factors)));
    }
    if (sum.empty()) return e_const(RatFunc::zero(ctx_.tab));
    return sum.size() == 1 ? sum[0] : e_add(std::move(sum));
}

// ---------------------------------------------------------- normalization --

namespace {

/// Expand a coefficient that may mention the monomial-side avatars into
/// operator terms: c = sum c_ab * v0^a * v1^b with c_ab in the NF's field.
OpNF coefficient_to_op(const RatFunc& c, NF nf, const AlgebraContext& ctx) {
    size_t forb[2];
    forbidden_vars(nf, ctx, forb);
    OpNF r(nf, ctx);
    if (!c.den().is_zero() && (c.den().depends_on(forb[0]) || c.den().depends_on(forb[1])))
        fail(ErrKind::NotPolynomialIn,
             std::string("denominator depends on ") + ctx.tab->name(forb[0]) + " or " +
                 ctx.tab->name(forb[1]));
    auto by0 = c.num().collect(forb[0]);
    for (size_t a = 0; a < by0.size(); ++a) {
        auto by1 = by0[a].collect(forb[1]);
        for (size_t b = 0; b < by1.size(); ++b) {
            if (by1[b].is_zero()) continue;
            r.add_term(Key3{static_cast<int>(a), static_cast<int>(b), 0},
                       RatFunc(by1[b], c.den()));
        }
    }
    return r;
}

OpNF normalize_rec(const ExprPtr& tree, NF nf, const AlgebraContext& ctx) {
    Deadline::check();
    OpNF r(nf, ctx);
    switch (tree->kind) {
    case Expr::Kind::Const:
        return coefficient_to_op(tree->value, nf, ctx);
    case Expr::Kind::Sym: {
        switch (tree->gen) {
        case Gen::X:
            if (nf == NF::A)
                r.add_term({0, 0, 0}, RatFunc::sym(ctx.tab, "x"));
            else
                r.add_term({1, 0, 0}, RatFunc::one(ctx.tab));
            break;
        case Gen::Q:
            if (nf == NF::A)
                r.add_term({0, 0, 0}, RatFunc::sym(ctx.tab, "q"));
            else
                r.add_term({0, 1, 0}, RatFunc::one(ctx.tab));
            break;
        case Gen::T:
            r.add_term({0, 0, 0}, RatFunc::sym(ctx.tab, "t"));
            break;
        case Gen::Y:
            if (nf == NF::A)
                r.add_term({1, 0, 0}, RatFunc::one(ctx.tab));
            else
                r.add_term({0, 0, 0}, RatFunc::sym(ctx.tab, "y"));
            break;
        case Gen::P:
            if (nf == NF::A)
                r.add_term({0, 1, 0}, RatFunc::one(ctx.tab));
            else
                r.add_term({0, 0, 0}, RatFunc::sym(ctx.tab, "p"));
            break;
        case Gen::D:
            r.add_term({0, 0, 1}, RatFunc::one(ctx.tab));
            break;
        }
        return r;
    }
    case Expr::Kind::Add: {
        for (const auto& ch : tree->children) r = r + normalize_rec(ch, nf, ctx);
        return r;
    }
    case Expr::Kind::Mul: {
        bool first = true;
        for (const auto& ch : tree->children) {
            OpNF f = normalize_rec(ch, nf, ctx);
            r = first ? f : r * f;
            first = false;
        }
        if (first) r.add_term({0, 0, 0}, RatFunc::one(ctx.tab)); // empty product
        return r;
    }
    case Expr::Kind::Neg:
        return -normalize_rec(tree->children[0], nf, ctx);
    case Expr::Kind::Inv: {
        OpNF sub = normalize_rec(tree->children[0], nf, ctx);
        if (!sub.is_coefficient())
            fail(ErrKind::NonNormalizableInverse,
                 "inverse of a non-coefficient element: " + tree->children[0]->str());
        RatFunc c = sub.coefficient();
        if (c.is_zero()) fail(ErrKind::DivisionByZero, "inverse of zero");
        return coefficient_to_op(c.inv(), nf, ctx);
    }
    case Expr::Kind::IntPow: {
        OpNF base = normalize_rec(tree->children[0], nf, ctx);
        OpNF acc(nf, ctx);
        acc.add_term({0, 0, 0}, RatFunc::one(ctx.tab));
        for (int k = 0; k < tree->power; ++k) acc = acc * base;
        return acc;
    }
    }
    fail(ErrKind::Internal, "unreachable");
}

} // namespace

OpNF normalize(const ExprPtr& tree, NF target, const AlgebraContext& ctx) {
    return normalize_rec(tree, target, ctx);
}

// ------------------------------------------------------------ conversion --

namespace {

/// Shared engine: re-express every term of A in the opposite NF by
/// multiplying primitive factors in their original left-to-right order.
OpNF convert_impl(const OpNF& A, NF target) {
    const AlgebraContext& ctx = A.ctx();
    // coefficient-side avatars of the SOURCE form become monomials in the
    // target form; they must appear polynomially.
    size_t v0, v1;
    if (target == NF::B) { // source NF-A, expanding x,q
        v0 = ctx.ix;
        v1 = ctx.iq;
    } else {
        v0 = ctx.iy;
        v1 = ctx.ip;
    }
    OpNF out(target, ctx);
    for (const auto& [k, c] : A.terms()) {
        if (c.den().depends_on(v0))
            fail(ErrKind::NotPolynomialIn, "coefficient not polynomial in " + ctx.tab->name(v0));
        if (c.den().depends_on(v1))
            fail(ErrKind::NotPolynomialIn, "coefficient not polynomial in " + ctx.tab->name(v1));
        auto by0 = c.num().collect(v0);
        for (size_t a = 0; a < by0.size(); ++a) {
            auto by1 = by0[a].collect(v1);
            for (size_t b = 0; b < by1.size(); ++b) {
                if (by1[b].is_zero()) continue;
                Deadline::check();
                // original factor order: r * v0^a * v1^b * mono(k)
                OpNF piece(target, ctx);
                piece.add_term({0, 0, 0}, RatFunc(by1[b], c.den()));
                auto mono = [&](Gen g, int n) {
                    if (n == 0) return;
                    OpNF f = normalize(e_pow(e_sym(g), n), target, ctx);
                    piece = piece * f;
                };
                Gen src0 = (target == NF::B) ? Gen::X : Gen::Y;
                Gen src1 = (target == NF::B) ? Gen::Q : Gen::P;
                Gen m0 = (target == NF::B) ? Gen::Y : Gen::X;
                Gen m1 = (target == NF::B) ? Gen::P : Gen::Q;
                mono(src0, static_cast<int>(a));
                mono(src1, static_cast<int>(b));
                mono(m0, k[0]);
                mono(m1, k[1]);
                mono(Gen::D, k[2]);
                out = out + piece;
            }
        }
    }
    return out;
}

} // namespace

OpNF convert(const OpNF& A) {
    if (A.nf() != NF::A) fail(ErrKind::Internal, "convert expects NF-A");
    return convert_impl(A, NF::B);
}

OpNF convert_back(const OpNF& B) {
    if (B.nf() != NF::B) fail(ErrKind::Internal, "convert_back expects NF-B");
    return convert_impl(B, NF::A);
}

// -------------------------------------------------------------- printing --

std::string OpNF::str() const {
    if (terms_.empty()) return "0";
    // fixed print order: d-degree, then slot 1, then slot 0, all descending
    std::vector<const std::pair<const Key3, RatFunc>*> ord;
    for (const auto& kv : terms_) ord.push_back(&kv);
    std::sort(ord.begin(), ord.end(), [](auto* a, auto* b) {
        const Key3& ka = a->first;
        const Key3& kb = b->first;
        if (ka[2] != kb[2]) return ka[2] > kb[2];
        if (ka[1] != kb[1]) return ka[1] > kb[1];
        return ka[0] > kb[0];
    });
    const char* n0 = nf_ == NF::A ? "y" : "x";
    const char* n1 = nf_ == NF::A ? "p" : "q";
    std::ostringstream os;
    bool first = true;
    for (auto* kv : ord) {
        const auto& [k, c] = *kv;
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && c.num().terms().size() == 1;
        if (neg) cs = cs.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool is_one = (cs == "1");
        bool has_mono = k[0] || k[1] || k[2];
        bool wrap = (c.num().terms().size() > 1) && has_mono;
        if (!is_one || !has_mono) os << (wrap ? "(" + cs + ")" : cs);
        auto put = [&](const char* n, int e, bool& sep) {
            if (!e) return;
            if (sep) os << "*";
            os << n;
            if (e > 1) os << "^" << e;
            sep = true;
        };
        bool sep = !is_one || !has_mono;
        put(n0, k[0], sep);
        put(n1, k[1], sep);
        put("d", k[2], sep);
    }
    return os.str();
}

} // namespace orelax
