#include "orelax/classical.hpp"

#include <sstream>

namespace orelax {

ClassicalContext ClassicalContext::make(TablePtr tab) {
    ClassicalContext c;
    c.ix = tab->index("x");
    c.iq = tab->index("q");
    c.ip = tab->index("p");
    c.it = tab->index("t");
    c.tab = std::move(tab);
    return c;
}

void ClassicalOp::add_term(const Key2& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

RatFunc ClassicalOp::coefficient(const Key2& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatFunc::zero(ctx_.tab) : it->second;
}

int ClassicalOp::degree_y() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k[0]);
    return d;
}

int ClassicalOp::degree_d() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k[1]);
    return d;
}

ClassicalOp ClassicalOp::operator+(const ClassicalOp& o) const {
    ClassicalOp r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

ClassicalOp ClassicalOp::operator-(const ClassicalOp& o) const {
    ClassicalOp r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

ClassicalOp ClassicalOp::operator-() const {
    ClassicalOp r(ctx_);
    r.flow_ = flow_;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

ClassicalOp ClassicalOp::scale_left(const RatFunc& c) const {
    ClassicalOp r(ctx_);
    r.flow_ = flow_;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, c * v);
    return r;
}

std::string ClassicalOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        if (it->first[0] > 0) {
            os << "*y";
            if (it->first[0] > 1) os << "^" << it->first[0];
        }
        if (it->first[1] > 0) {
            os << "*d";
            if (it->first[1] > 1) os << "^" << it->first[1];
        }
    }
    return os.str();
}

RatFunc flow_deriv(const ClassicalContext& ctx, const std::optional<RatFunc>& H,
                   const RatFunc& f) {
    RatFunc r = f.derivative(ctx.it);
    if (H) {
        r = r + H->derivative(ctx.ip) * f.derivative(ctx.iq) -
            H->derivative(ctx.iq) * f.derivative(ctx.ip);
    }
    return r;
}

namespace {

/// c * y^i d^e  times  v * y^j d^f, pushing y then d rightward past v.
void mono_mul(const ClassicalContext& ctx, const std::optional<RatFunc>& H,
              const RatFunc& c, Key2 k, const RatFunc& v, const Key2& k2, ClassicalOp& out) {
    Deadline::check();
    // Move the e copies of d across v first (they sit rightmost in c*y^i*d^e),
    // then the i copies of y across what remains.
    struct Piece {
        RatFunc coef;
        int y, d;
    };
    std::vector<Piece> pieces{{v, 0, 0}};
    for (int s = 0; s < k[1]; ++s) {
        std::vector<Piece> next;
        for (const auto& pc : pieces) {
            next.push_back({pc.coef, pc.y, pc.d + 1});
            RatFunc der = flow_deriv(ctx, H, pc.coef);
            if (!der.is_zero()) next.push_back({der, pc.y, pc.d});
        }
        pieces = std::move(next);
    }
    for (int s = 0; s < k[0]; ++s) {
        std::vector<Piece> next;
        for (const auto& pc : pieces) {
            next.push_back({pc.coef, pc.y + 1, pc.d});
            RatFunc der = pc.coef.derivative(ctx.ix);
            if (!der.is_zero()) next.push_back({der, pc.y, pc.d});
        }
        pieces = std::move(next);
    }
    for (const auto& pc : pieces)
        out.add_term({pc.y + k2[0], pc.d + k2[1]}, c * pc.coef);
}

} // namespace

ClassicalOp hamflow_mul(const ClassicalOp& A, const ClassicalOp& B,
                        const std::optional<RatFunc>& H) {
    ClassicalOp out(A.ctx());
    out.set_flow(H);
    for (const auto& [ka, ca] : A.terms())
        for (const auto& [kb, cb] : B.terms())
            mono_mul(A.ctx(), H, ca, ka, cb, kb, out);
    return out;
}

ClassicalOp hamflow_mul(const ClassicalOp& A, const ClassicalOp& B) {
    if (A.flow() != B.flow() && A.flow() && B.flow())
        fail(ErrKind::Internal, "hamflow_mul: operands carry different flows");
    return hamflow_mul(A, B, A.flow() ? A.flow() : B.flow());
}

std::pair<ClassicalOp, ClassicalOp> right_divide(const ClassicalOp& N, const ClassicalOp& L) {
    if (L.degree_d() > 0)
        fail(ErrKind::NonInvertibleLeader, "divisor must be free of d");
    if (L.degree_y() != 2)
        fail(ErrKind::NonInvertibleLeader, "divisor must have y-degree 2");
    RatFunc lead = L.coefficient({2, 0});
    if (lead.is_zero()) fail(ErrKind::NonInvertibleLeader, "zero leading coefficient");

    const auto& H = N.flow();
    ClassicalOp quotient(N.ctx()), rem = N;
    quotient.set_flow(H);
    rem.set_flow(H);
    for (;;) {
        Deadline::check();
        // Highest term with y-degree >= 2, ordered by (d power, y power).
        const std::map<Key2, RatFunc>& ts = rem.terms();
        Key2 best{-1, -1};
        for (const auto& [k, c] : ts) {
            if (k[0] < 2) continue;
            if (k[1] > best[1] || (k[1] == best[1] && k[0] > best[0])) best = {k[0], k[1]};
        }
        if (best[0] < 0) break;
        RatFunc qc = rem.coefficient(best) / lead;
        ClassicalOp qt(N.ctx());
        qt.set_flow(H);
        qt.add_term({best[0] - 2, best[1]}, qc);
        quotient = quotient + qt;
        rem = rem - hamflow_mul(qt, L, H);
    }
    ClassicalOp check = hamflow_mul(quotient, L, H) + rem;
    if (check != N) fail(ErrKind::Internal, "right_divide: reconstruction mismatch");
    return {quotient, rem};
}

ClassicalOp clear_left_coefficient(const ClassicalOp& A) {
    if (A.is_zero()) return A;
    auto it = A.terms().begin();
    MPoly l = it->second.den();
    MPoly g = it->second.num();
    for (++it; it != A.terms().end(); ++it) {
        const MPoly& d = it->second.den();
        MPoly c = MPoly::gcd(l, d);
        l = *(l * d).divided_by(c); // lcm
        g = MPoly::gcd(g, it->second.num());
    }
    return A.scale_left(RatFunc(l, g));
}

MatchReport gauge_match_deg2(const ClassicalOp& L1, const ClassicalOp& L2) {
    if (L1.degree_d() > 0 || L2.degree_d() > 0 || L1.degree_y() != 2 || L2.degree_y() != 2)
        fail(ErrKind::NonInvertibleLeader, "gauge match needs d-free y-degree-2 operators");
    ClassicalOp A = L1.scale_left(L1.coefficient({2, 0}).inv());
    ClassicalOp B = L2.scale_left(L2.coefficient({2, 0}).inv());
    const auto& ctx = L1.ctx();
    RatFunc a1 = A.coefficient({1, 0}), a0 = A.coefficient({0, 0});
    RatFunc b1 = B.coefficient({1, 0}), b0 = B.coefficient({0, 0});
    MatchReport rep;
    // Conjugating y -> y + r turns (y^2 + a1 y + a0) into
    // y^2 + (a1 + 2r) y + (a0 + a1 r + r^2 + r').
    rep.r = (b1 - a1) / RatFunc::constant(ctx.tab, 2);
    rep.residual = b0 - (a0 + a1 * rep.r + rep.r * rep.r + rep.r.derivative(ctx.ix));
    rep.match = rep.residual.is_zero();
    return rep;
}

RatFunc translate_coeff(const RatFunc& c, const ClassicalContext& cctx,
                        const ClassicalDict& dict) {
    auto poly = [&](const MPoly& p) {
        RatFunc acc = RatFunc::zero(cctx.tab);
        for (const auto& [ev, coef] : p.terms()) {
            RatFunc term = RatFunc::constant(cctx.tab, coef);
            for (size_t v = 0; v < ev.size(); ++v) {
                if (ev[v] == 0) continue;
                const RatFunc* im = nullptr;
                for (const auto& [idx, val] : dict)
                    if (idx == v) { im = &val; break; }
                if (!im)
                    fail(ErrKind::UnknownSymbol,
                         "no flat-limit translation for symbol " + p.table()->name(v));
                term = term * im->pow(ev[v]);
            }
            acc = acc + term;
        }
        return acc;
    };
    RatFunc den = poly(c.den());
    if (den.is_zero()) fail(ErrKind::PoleAtEpsilon2, "denominator vanishes in the flat limit");
    return poly(c.num()) / den;
}

ClassicalOp classical_project(const OpNF& A, const ClassicalContext& cctx,
                              const ClassicalDict& dict) {
    if (A.nf() != NF::A)
        fail(ErrKind::Internal, "classical_project expects the (x,q,t)-coefficient form");
    ClassicalOp out(cctx);
    RatFunc p = RatFunc(MPoly::sym(cctx.tab, "p"));
    for (const auto& [k, c] : A.terms()) {
        RatFunc v = translate_coeff(c, cctx, dict) * p.pow(k[1]);
        out.add_term({k[0], k[2]}, v);
    }
    return out;
}

} // namespace orelax
