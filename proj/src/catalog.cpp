/** @file catalog.cpp
 *  System-independent catalog plumbing: name lookup, table construction,
 *  chain application, parameter-word composition, caching.
 */
#include "catalog_detail.hpp"

#include <mutex>

namespace orelax {

std::string sys_name(SysTag j) {
    switch (j) {
        case SysTag::I: return "I";
        case SysTag::II: return "II";
        case SysTag::III: return "III";
        case SysTag::III_D7: return "III-D7";
        case SysTag::III_D8: return "III-D8";
        case SysTag::IV: return "IV";
        case SysTag::V: return "V";
        case SysTag::VI: return "VI";
    }
    fail(ErrKind::Internal, "bad tag");
}

SysTag sys_from_name(const std::string& n) {
    for (SysTag j : {SysTag::I, SysTag::II, SysTag::III, SysTag::III_D7, SysTag::III_D8,
                     SysTag::IV, SysTag::V, SysTag::VI})
        if (sys_name(j) == n) return j;
    fail(ErrKind::UnknownName, "unknown system: " + n);
}

bool has_quantum_data(SysTag j) { return j != SysTag::I && j != SysTag::III_D8; }

std::vector<RatFunc> SystemData::papply(const std::string& nm,
                                        const std::vector<RatFunc>& in) const {
    const auto& img = pimg.at(nm);
    std::vector<std::pair<size_t, RatFunc>> bind;
    for (size_t i = 0; i < nalpha; ++i)
        bind.emplace_back(tab->index("a" + std::to_string(i)), in.at(i));
    std::vector<RatFunc> out;
    out.reserve(nalpha);
    for (const auto& f : img) out.push_back(f.subst(bind));
    return out;
}

std::vector<RatFunc> SystemData::pword(const std::vector<std::string>& names) const {
    std::vector<RatFunc> v = alpha;
    for (auto it = names.rbegin(); it != names.rend(); ++it) v = papply(*it, v);
    return v;
}

OpNF apply_steps(const Chain& steps, OpNF op) {
    // Morphism application rebuilds the operand as a tree, so no explicit
    // conversion between normal forms is needed; each step just renormalizes
    // into the form its images admit.
    for (const auto& st : steps) op = apply(st.m, op, st.nf);
    return op;
}

Chain chain_concat(const std::vector<Chain>& in_application_order) {
    Chain out;
    for (const auto& c : in_application_order) out.insert(out.end(), c.begin(), c.end());
    return out;
}

const SystemData& system_data(SysTag j) {
    static std::mutex mu;
    static std::map<SysTag, SystemData> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(j);
    if (it != cache.end()) return it->second;
    SystemData s;
    switch (j) {
        case SysTag::VI: s = detail::build_vi(); break;
        case SysTag::V: s = detail::build_v(); break;
        case SysTag::IV: s = detail::build_iv(); break;
        case SysTag::III: s = detail::build_iii(); break;
        case SysTag::III_D7: s = detail::build_iii_d7(); break;
        case SysTag::II: s = detail::build_ii(); break;
        default: fail(ErrKind::UnknownName, "no operator-symmetry data for " + sys_name(j));
    }
    return cache.emplace(j, std::move(s)).first->second;
}

const DerivedLax& cft_lax(SysTag j) {
    static std::mutex mu;
    static std::map<SysTag, DerivedLax> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(j);
    if (it != cache.end()) return it->second;
    return cache.emplace(j, detail::build_cft(j)).first->second;
}

const ClassicalData& classical_data(SysTag j) {
    static std::mutex mu;
    static std::map<SysTag, ClassicalData> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(j);
    if (it != cache.end()) return it->second;
    return cache.emplace(j, detail::build_classical(j)).first->second;
}

ClassicalOp cmap_apply(const CMap& m, const ClassicalOp& op) {
    ClassicalOp out(op.ctx());
    out.set_flow(op.flow());
    for (const auto& [k, c] : op.terms()) out.add_term(k, m(c));
    return out;
}

CMap cmap_word(const ClassicalData& cd, const std::vector<std::string>& names) {
    // Start from the identity on (q, p, a_i); fold maps rightmost-first.
    std::vector<RatFunc> state; // images of q, p, a_0..a_{n-1}
    std::vector<size_t> idx;
    idx.push_back(cd.ctx.iq);
    idx.push_back(cd.ctx.ip);
    for (const auto& an : cd.anames) idx.push_back(cd.tab->index(an));
    for (size_t i : idx) state.push_back(RatFunc::sym(cd.tab, cd.tab->name(i)));
    int tsign = +1;

    for (auto it = names.rbegin(); it != names.rend(); ++it) {
        const CMap* m = nullptr;
        for (const auto& cm : cd.maps)
            if (cm.name == *it) m = &cm;
        if (!m) fail(ErrKind::UnknownName, "unknown classical map: " + *it);
        // Prepending m to the accumulated word W gives (m o W)(z) = m(W(z)):
        // substitute m's variable images into the accumulated images.
        std::vector<std::pair<size_t, RatFunc>> bind;
        for (size_t i = 0; i < idx.size(); ++i) {
            RatFunc im = RatFunc::sym(cd.tab, cd.tab->name(idx[i]));
            for (const auto& [s, v] : m->sub)
                if (s == idx[i]) im = v;
            bind.emplace_back(idx[i], std::move(im));
        }
        if (m->tsign < 0)
            bind.emplace_back(cd.ctx.it, -RatFunc::sym(cd.tab, cd.tab->name(cd.ctx.it)));
        for (auto& f : state) f = f.subst(bind);
        tsign *= m->tsign;
    }
    CMap out;
    for (const auto& n : names) out.name += (out.name.empty() ? "" : "*") + n;
    out.tsign = tsign;
    for (size_t i = 0; i < idx.size(); ++i) out.sub.emplace_back(idx[i], state[i]);
    return out;
}

} // namespace orelax

namespace orelax::detail {

TablePtr make_sys_table(size_t nalpha, std::vector<std::pair<std::string, Rat>> elim,
                        bool with_i) {
    std::vector<std::string> names = {"e1", "e2"};
    for (size_t i = 0; i < nalpha; ++i) names.push_back("a" + std::to_string(i));
    if (with_i) names.push_back("i");
    for (const char* v : {"x", "q", "t", "y", "p"}) names.push_back(v);
    auto tab = std::make_shared<SymbolTable>(names);
    if (with_i) tab->set_imaginary("i");
    if (!elim.empty()) {
        std::vector<std::pair<Expv, Rat>> rhs;
        for (const auto& [nm, c] : elim) {
            Expv e(tab->arity(), 0);
            e[tab->index(nm)] = 1;
            rhs.emplace_back(std::move(e), c);
        }
        tab->set_elimination("a0", std::move(rhs));
    }
    return tab;
}

SB SB::make(const SystemData& S) {
    SB b;
    b.tab = S.tab;
    b.ctx = S.ctx;
    b.xa = RatFunc::sym(S.tab, S.tab->name(S.ctx.ix));
    b.qa = RatFunc::sym(S.tab, S.tab->name(S.ctx.iq));
    b.ta = RatFunc::sym(S.tab, S.tab->name(S.ctx.it));
    b.e1 = S.ctx.e1;
    b.e2 = S.ctx.e2;
    b.kap = S.ctx.e1 - S.ctx.e2;
    b.one = RatFunc::one(S.tab);
    b.zero = RatFunc::zero(S.tab);
    b.al = S.alpha;
    b.X = e_sym(Gen::X);
    b.Q = e_sym(Gen::Q);
    b.T = e_sym(Gen::T);
    b.Y = e_sym(Gen::Y);
    b.P = e_sym(Gen::P);
    b.D = e_sym(Gen::D);
    return b;
}

void fill_common(SystemData& S, size_t nalpha) {
    S.ctx = AlgebraContext::make(S.tab);
    S.nalpha = nalpha;
    S.alpha.clear();
    for (size_t i = 0; i < nalpha; ++i) S.alpha.push_back(S.rs("a" + std::to_string(i)));
    S.e1 = S.ctx.e1;
    S.e2 = S.ctx.e2;
    S.kap = S.e1 - S.e2;
}

Morphism& add_table_map(SystemData& S, const std::string& name, std::vector<RatFunc> aimg,
                        std::vector<std::pair<Gen, ExprPtr>> gens) {
    Morphism m;
    m.name = name;
    m.ctx = S.ctx;
    for (size_t i = 1; i < S.nalpha; ++i)
        m.params.emplace_back(S.tab->index("a" + std::to_string(i)), aimg.at(i));
    for (auto& [g, e] : gens) m.set_image(g, std::move(e));
    S.pimg[name] = std::move(aimg);
    S.tables.emplace_back(name, std::move(m));
    return S.tables.back().second;
}

Chain cat(std::initializer_list<Chain> parts) {
    Chain out;
    for (const auto& c : parts) out.insert(out.end(), c.begin(), c.end());
    return out;
}

} // namespace orelax::detail
