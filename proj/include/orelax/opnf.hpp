/** @file opnf.hpp
 *  Operators in the two supported normal forms (PBW bases of the iterated
 *  Ore extension):
 *    NF-A:  sum of  c(x,q,t;params) * y^i p^j d^e   (coefficients LEFT)
 *    NF-B:  sum of  R(y,p,t;params) * x^a q^b d^e   (coefficients LEFT)
 *  Equality inside one NF class is coefficient-wise equality.
 */
#pragma once

#include <array>
#include <map>
#include <string>

#include "orelax/expr.hpp"

namespace orelax {

enum class NF { A, B };

using Key3 = std::array<int, 3>; // NF-A: (y,p,d) powers; NF-B: (x,q,d) powers

/// Per-system handles into the commutative symbol table.
struct AlgebraContext {
    TablePtr tab;
    size_t ix, iq, it, iy, ip; // commutative avatars of x,q,t,y,p
    RatFunc e1, e2;            // the two deformation parameters as coefficients

    static AlgebraContext make(TablePtr tab);
};

class OpNF {
  public:
    OpNF(NF nf, AlgebraContext ctx) : nf_(nf), ctx_(std::move(ctx)) {}

    NF nf() const { return nf_; }
    const AlgebraContext& ctx() const { return ctx_; }
    const std::map<Key3, RatFunc>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// True when the operator is a pure coefficient (only the (0,0,0) key).
    bool is_coefficient() const;
    RatFunc coefficient() const; // requires is_coefficient()

    void add_term(const Key3& k, const RatFunc& c);

    OpNF operator+(const OpNF& o) const;
    OpNF operator-(const OpNF& o) const;
    OpNF operator-() const;
    OpNF operator*(const OpNF& o) const; // normal-ordered exact product
    OpNF mul_coeff_left(const RatFunc& c) const;

    bool operator==(const OpNF& o) const { return nf_ == o.nf_ && terms_ == o.terms_; }
    bool operator!=(const OpNF& o) const { return !(*this == o); }

    /// Rebuild an equivalent expression tree (used by conversion and
    /// morphism application).
    ExprPtr to_tree() const;

    std::string str() const;

  private:
    NF nf_;
    AlgebraContext ctx_;
    std::map<Key3, RatFunc> terms_;
};

/// Normalize an expression tree into the requested normal form.
/// Throws NonNormalizableInverse when an Inv subtree does not normalize to
/// a pure coefficient of the target form.
OpNF normalize(const ExprPtr& tree, NF target, const AlgebraContext& ctx);

/// NF-A -> NF-B; requires all coefficients polynomial in x and q.
OpNF convert(const OpNF& A);
/// NF-B -> NF-A; requires all coefficients polynomial in y and p.
OpNF convert_back(const OpNF& B);

inline OpNF nfa_mul(const OpNF& A, const OpNF& B) { return A * B; }
inline OpNF nfb_mul(const OpNF& A, const OpNF& B) { return A * B; }

} // namespace orelax
