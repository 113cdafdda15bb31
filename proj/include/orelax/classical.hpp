/** @file classical.hpp
 *  Commutative-momentum limit of the operator algebra: operators
 *  sum c(x,q,p,t;params) * y^i d^e with y acting as d/dx and d either as
 *  d/dt or as the total derivative along a Hamiltonian flow in (q,p).
 */
#pragma once

#include <array>
#include <map>
#include <optional>

#include "orelax/opnf.hpp"

namespace orelax {

/// Handles into the commutative table of a flat-limit system
/// (symbols x, q, p, t plus parameters).
struct ClassicalContext {
    TablePtr tab;
    size_t ix, iq, ip, it;

    static ClassicalContext make(TablePtr tab);
};

using Key2 = std::array<int, 2>; // (y power, d power)

class ClassicalOp {
  public:
    explicit ClassicalOp(ClassicalContext ctx) : ctx_(std::move(ctx)) {}

    const ClassicalContext& ctx() const { return ctx_; }
    const std::map<Key2, RatFunc>& terms() const { return terms_; }
    /// Hamiltonian driving the d-action; unset means d = plain d/dt.
    const std::optional<RatFunc>& flow() const { return flow_; }
    void set_flow(std::optional<RatFunc> H) { flow_ = std::move(H); }

    bool is_zero() const { return terms_.empty(); }
    void add_term(const Key2& k, const RatFunc& c);
    RatFunc coefficient(const Key2& k) const; // zero when absent
    int degree_y() const;                     // -1 when zero
    int degree_d() const;

    ClassicalOp operator+(const ClassicalOp& o) const;
    ClassicalOp operator-(const ClassicalOp& o) const;
    ClassicalOp operator-() const;
    ClassicalOp scale_left(const RatFunc& c) const;

    bool operator==(const ClassicalOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const ClassicalOp& o) const { return !(*this == o); }

    std::string str() const;

  private:
    ClassicalContext ctx_;
    std::optional<RatFunc> flow_;
    std::map<Key2, RatFunc> terms_;
};

/// Total derivative of a coefficient along the flow of H:
///   D_t f = d_t f + (dH/dp) d_q f - (dH/dq) d_p f
/// (plain d_t f when H is absent).
RatFunc flow_deriv(const ClassicalContext& ctx, const std::optional<RatFunc>& H,
                   const RatFunc& f);

/// Normal-ordered product; d acts via flow_deriv with H, y as d/dx.
ClassicalOp hamflow_mul(const ClassicalOp& A, const ClassicalOp& B,
                        const std::optional<RatFunc>& H);
/// Product using the operands' stored flow (which must agree).
ClassicalOp hamflow_mul(const ClassicalOp& A, const ClassicalOp& B);

/// Euclidean right division by an operator of y-degree 2 with no d part:
/// N = quotient * L + remainder, y-degree(remainder) < 2.  The product is
/// re-multiplied and compared against N before returning.
std::pair<ClassicalOp, ClassicalOp> right_divide(const ClassicalOp& N, const ClassicalOp& L);

struct MatchReport {
    bool match = false;
    RatFunc r;        // logarithmic-derivative gauge determined from y^1 terms
    RatFunc residual; // leftover in the y^0 coefficient (zero iff match)
};

/// Compare two y-degree-2, d-free operators up to conjugation by a scalar
/// gauge factor exp(int r dx); r is forced by the first-order coefficients.
MatchReport gauge_match_deg2(const ClassicalOp& L1, const ClassicalOp& L2);

/// Left-scale an operator by the least common multiple of its coefficient
/// denominators and strip the common numerator factor.  The result equals
/// the input up to an invertible left coefficient, which keeps coefficients
/// small across map applications and divisibility checks.
ClassicalOp clear_left_coefficient(const ClassicalOp& A);

/// Translation of one quantum-table symbol into the flat-limit field.
using ClassicalDict = std::vector<std::pair<size_t, RatFunc>>;

/// Flat limit of a two-parameter operator: every y^i p^j d^e monomial
/// becomes p^j (now a commutative symbol) times y^i d^e; symbols translate
/// via `dict` (which must send the second deformation parameter to 0).
/// A coefficient whose denominator vanishes under the translation raises
/// PoleAtEpsilon2.
ClassicalOp classical_project(const OpNF& A, const ClassicalContext& cctx,
                              const ClassicalDict& dict);

/// Translate a bare coefficient through the same dictionary.
RatFunc translate_coeff(const RatFunc& c, const ClassicalContext& cctx,
                        const ClassicalDict& dict);

} // namespace orelax
