/** @file catalog_detail.hpp
 *  Internal builder helpers shared by the per-system catalog sources.
 */
#pragma once

#include "orelax/catalog.hpp"

namespace orelax::detail {

// -------- expression-tree combinators (catalog construction only) --------

inline ExprPtr operator*(const ExprPtr& a, const ExprPtr& b) { return e_mul({a, b}); }
inline ExprPtr operator+(const ExprPtr& a, const ExprPtr& b) { return e_add({a, b}); }
inline ExprPtr operator-(const ExprPtr& a, const ExprPtr& b) { return e_sub(a, b); }
inline ExprPtr operator-(const ExprPtr& a) { return e_neg(a); }

/// Build the commutative table of a system: deformation parameters first,
/// then the alpha-parameters (optionally an imaginary unit), then the
/// avatars of the five non-derivation generators.  `elim` gives the linear
/// constraint as (symbol name, coefficient) pairs defining the image of the
/// first alpha.
TablePtr make_sys_table(size_t nalpha, std::vector<std::pair<std::string, Rat>> elim,
                        bool with_i);

/// Per-system scratch handles used while transcribing formulas.
struct SB {
    TablePtr tab;
    AlgebraContext ctx;
    RatFunc xa, qa, ta, e1, e2, kap, one, zero;
    std::vector<RatFunc> al;
    ExprPtr X, Q, T, Y, P, D;

    static SB make(const SystemData& S);

    RatFunc n(long v) const { return RatFunc::constant(tab, Rat(v)); }
    RatFunc s(const std::string& nm) const { return RatFunc::sym(tab, nm); }
    ExprPtr C(const RatFunc& v) const { return e_const(v); }
    ExprPtr C(long v) const { return e_const(n(v)); }
};

/// Fill tab-derived fields of a SystemData whose `tab` and `j` are set.
void fill_common(SystemData& S, size_t nalpha);

/// Register a table morphism: parameter images (full vector, the reduced
/// alpha included for bookkeeping) plus optional generator images.
Morphism& add_table_map(SystemData& S, const std::string& name,
                        std::vector<RatFunc> aimg,
                        std::vector<std::pair<Gen, ExprPtr>> gens);

inline Chain one_step(Morphism m, NF nf) { return {MStep{std::move(m), nf}}; }
Chain cat(std::initializer_list<Chain> parts); // concatenation in listed order

SystemData build_vi();
SystemData build_v();
SystemData build_iv();
SystemData build_iii();
SystemData build_iii_d7();
SystemData build_ii();

DerivedLax build_cft(SysTag j);
ClassicalData build_classical(SysTag j);

} // namespace orelax::detail
