/** @file catalog.hpp
 *  Authoritative encoded data for the eight Painleve-type systems:
 *  parameter systems with their linear constraints, Hamiltonians, Lax
 *  pairs (operator and second-derivation forms), symmetry tables,
 *  Backlund-map chains, constants and prefactors, plus the flat-limit
 *  (classical) data used by the compatibility and intertwiner checks.
 */
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orelax/classical.hpp"
#include "orelax/morphism.hpp"

namespace orelax {

enum class SysTag { I, II, III, III_D7, III_D8, IV, V, VI };

std::string sys_name(SysTag j);
SysTag sys_from_name(const std::string& n); // UnknownName

/// One substitution step of a composite Backlund map together with the
/// normal form in which it must be applied (gauges and variable changes
/// act on position-rational coefficients: NF-A; Laplace-type steps act on
/// derivation-rational coefficients: NF-B).
struct MStep {
    Morphism m;
    NF nf;
};
using Chain = std::vector<MStep>; // applied earliest-first

/// Builder of an argument-dependent map family R^x_s(beta) / R^q_s(beta);
/// fixed (argument-free) maps ignore the argument.
using ChainBuilder = std::function<Chain(const RatFunc&)>;

/// One Hamiltonian-symmetry clause:
///   lhs( Hx(alpha) ) = rhs_frame( c * Hx(sa) ) + C.
/// `rhs_frame` is normally empty; it carries the conjugating steps when the
/// literal additive constant only normalizes in a transformed frame.  A null
/// C means "derive the constant, assert it is a pure coefficient, record it".
struct PropRow {
    std::string name;
    Chain lhs;
    Chain rhs_frame;
    RatFunc c;
    std::vector<RatFunc> sa;
    ExprPtr C;
};

/// One whole-map Lax clause:  R_s(L, B) = c * (L(sa), B(sa) + f).
struct TheoremRow {
    std::string name;
    Chain R; // x-side and q-side steps combined, application order
    RatFunc c, f;
    std::vector<RatFunc> sa;
};

struct SystemData {
    SysTag j;
    std::string name;
    TablePtr tab;
    AlgebraContext ctx;

    size_t nalpha = 0;            // number of alpha-parameters
    std::vector<RatFunc> alpha;   // the symbols themselves (alpha_0 reduced
                                  // by the linear constraint)
    RatFunc e1, e2, kap;          // kap = e1 - e2

    /// Hamiltonian / Lax builders at arbitrary parameter values.
    std::function<OpNF(const std::vector<RatFunc>&)> Hx, Hq, L, B;
    std::optional<OpNF> Hx0, Hq0, L0, B0; // at the symbolic parameter point

    /// The intertwining element used by the S-map: D(arg) for the systems
    /// that use the generic second-order element, or the fixed first-order
    /// element for the first third-kind degeneration.
    std::function<OpNF(const RatFunc&)> Delem; // may be empty
    std::optional<OpNF> D0;                    // Delem at its canonical argument

    /// Quantum symmetry table: name -> morphism acting on parameters and
    /// on q, p, t, d (x, y untouched).
    std::vector<std::pair<std::string, Morphism>> tables;

    /// Full parameter-image vectors of each table map (index i -> image of
    /// alpha_i), used to build transformed Lax operators.
    std::map<std::string, std::vector<RatFunc>> pimg;

    /// Backlund-map chains, x-side and q-side, keyed by the table-map name.
    std::map<std::string, ChainBuilder> Rx, Rq;
    /// Fixed whole-system maps (pure variable changes or exp-gauge nets).
    std::map<std::string, Chain> Rfixed;

    std::vector<PropRow> props;
    std::vector<TheoremRow> thm;
    /// Named scalar constants of the remaining clauses (prefactors f_T, f_S,
    /// the auxiliary polynomials of the two-sided derivations, ...).
    std::map<std::string, RatFunc> consts;

    // ---- convenience ----
    RatFunc rc(long n) const { return RatFunc::constant(tab, Rat(n)); }
    RatFunc rs(const std::string& s) const { return RatFunc::sym(tab, s); }
    RatFunc a(size_t i) const { return alpha.at(i); }

    /// Apply a table map's parameter substitution to a parameter vector.
    std::vector<RatFunc> papply(const std::string& name,
                                const std::vector<RatFunc>& in) const;
    /// Compose parameter maps by name, rightmost applied first; returns the
    /// image of the symbolic parameter vector.
    std::vector<RatFunc> pword(const std::vector<std::string>& names) const;
};

/// Cached immutable per-system data (quantum side).  Valid tags: all but
/// I and III_D8 (which carry no quantum symmetry data).
const SystemData& system_data(SysTag j);
bool has_quantum_data(SysTag j);

/// Apply a chain of substitution steps to an operator, converting between
/// normal forms between steps as required.
OpNF apply_steps(const Chain& steps, OpNF op);
/// Concatenate chains: later entries of `names` act first (operator-style
/// juxtaposition).
Chain chain_concat(const std::vector<Chain>& in_application_order);

// ------------------------------------------------------------- second form

/// Lax operators in the second-derivation presentation, one pair per
/// system, over a table with parameters named per the source display.
struct DerivedLax {
    SysTag j;
    TablePtr tab;
    AlgebraContext ctx;
    std::vector<std::string> anames; // parameter names (may be empty)
    std::optional<OpNF> L, B;
};

const DerivedLax& cft_lax(SysTag j);

/// The sixth system's second-form pair instantiated over the quantum
/// parameter table through the residue-to-root dictionary, together with
/// the additive constant of the B-relation.  The consistency statements
///   L = -Lhat   and   B = -e2*Lhat + (e1-e2)(q-t)*Bhat + b
/// tie these to the operator-form Lax pair of the same system.
struct CftQuantumSlice {
    OpNF L, B;
    RatFunc b;
};
CftQuantumSlice cft_vi_quantum_frame();

// ------------------------------------------------------------- flat limit

/// A commutative symmetry map of a classical system: simultaneous
/// substitution on {q, p, a_i}, with an optional time reflection.
struct CMap {
    std::string name;
    int tsign = +1; // image of t is tsign * t
    std::vector<std::pair<size_t, RatFunc>> sub;

    RatFunc operator()(const RatFunc& f) const { return f.subst(sub); }
};

struct ClassicalData {
    SysTag j;
    TablePtr tab;
    ClassicalContext ctx;
    std::vector<std::string> anames;
    RatFunc H;       // Hamiltonian H(q, p, t)
    std::optional<ClassicalOp> L, B; // L monic of y-degree 2, d-free; B = d + ...
    std::vector<CMap> maps;

    RatFunc rc(long n) const { return RatFunc::constant(tab, Rat(n)); }
    RatFunc rs(const std::string& s) const { return RatFunc::sym(tab, s); }
};

const ClassicalData& classical_data(SysTag j);

/// Apply a commutative map to every coefficient of a flat-limit operator.
ClassicalOp cmap_apply(const CMap& m, const ClassicalOp& op);
/// Compose commutative maps, rightmost applied first.
CMap cmap_word(const ClassicalData& cd, const std::vector<std::string>& names);

/// Intertwiner data: first-order operator T and word w with
/// w(L) * T = Q * L for some first-order Q.
struct IntertwinerCase {
    SysTag j;
    std::vector<std::string> word;
    ClassicalOp T;
};
std::vector<IntertwinerCase> intertwiner_cases();

} // namespace orelax
