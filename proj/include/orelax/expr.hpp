/** @file expr.hpp
 *  Expression trees over the six noncommutative generators.  Trees are the
 *  lingua franca between the parser, the morphism machinery, and the two
 *  normal forms; they are formal until normalized.
 */
#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "orelax/ratfunc.hpp"

namespace orelax {

/// Noncommutative generators.  Pairing: [Y,X]=e1, [P,Q]=e2, [D,T]=1,
/// all cross-pair commutators zero.
enum class Gen : int { X = 0, Q = 1, T = 2, Y = 3, P = 4, D = 5 };

inline const char* gen_name(Gen g) {
    static const char* names[] = {"x", "q", "t", "y", "p", "d"};
    return names[static_cast<int>(g)];
}

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Const, Sym, Add, Mul, Neg, Inv, IntPow };

    Kind kind;
    RatFunc value;                 // Const
    Gen gen = Gen::X;              // Sym
    std::vector<ExprPtr> children; // Add, Mul (ordered), Neg, Inv, IntPow
    int power = 0;                 // IntPow

    std::string str() const;
};

ExprPtr e_const(RatFunc v);
ExprPtr e_sym(Gen g);
ExprPtr e_add(std::vector<ExprPtr> ch);
ExprPtr e_mul(std::vector<ExprPtr> ch);
ExprPtr e_neg(ExprPtr ch);
ExprPtr e_inv(ExprPtr ch);
ExprPtr e_pow(ExprPtr base, int n);

inline ExprPtr e_sub(ExprPtr a, ExprPtr b) { return e_add({std::move(a), e_neg(std::move(b))}); }

} // namespace orelax
