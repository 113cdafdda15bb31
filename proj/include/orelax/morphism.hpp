/** @file morphism.hpp
 *  Algebra endomorphisms as (parameter map, generator-image map) pairs.
 *  Application is substitution: every generator occurrence in the operand is
 *  replaced by its image tree, then the result is normalized.  Composite
 *  symmetry maps are applied as sequences of these substitutions (earliest
 *  step first); the order convention is pinned by the theorem regression
 *  tests.
 */
#pragma once

#include <optional>

#include "orelax/opnf.hpp"

namespace orelax {

enum class MStatus { Unchecked, Verified, Unverifiable, Failed };

struct Morphism {
    std::string name;
    AlgebraContext ctx;
    /// parameter-symbol index -> image (a rational function of parameters)
    std::vector<std::pair<size_t, RatFunc>> params;
    /// generator images; null entry = identity
    std::array<ExprPtr, 6> img{};

    MStatus status = MStatus::Unchecked;
    std::string note;

    ExprPtr image(Gen g) const {
        const auto& e = img[static_cast<size_t>(g)];
        return e ? e : e_sym(g);
    }
    void set_image(Gen g, ExprPtr e) { img[static_cast<size_t>(g)] = std::move(e); }

    /// Apply the parameter part alone to a coefficient.
    RatFunc apply_params(const RatFunc& c) const;
};

/// Substitute the morphism through a tree (generators and coefficients).
ExprPtr apply_tree(const Morphism& m, const ExprPtr& tree);

/// Apply to an operator and renormalize in `target`.
OpNF apply(const Morphism& m, const OpNF& op, NF target);
OpNF apply(const Morphism& m, const ExprPtr& tree, NF target, const AlgebraContext& ctx);

/// Apply a sequence of substitutions, earliest first, renormalizing each
/// step in `target`.
OpNF apply_chain(const std::vector<Morphism>& steps, const OpNF& op, NF target);

/// compose(m1, m2): m1's substitution applied to m2's images, i.e. the map
/// "first m2's substitution, then m1's" (the paper's juxtaposition m1∘m2).
Morphism compose(const Morphism& m1, const Morphism& m2);

/// Check the 15 generator-pair commutators of the images.
MStatus validate(Morphism& m);

// ------------------------------------------------------------ constructors

/// Shift map (common core of all gauge transforms):
///   x-side: y -> y + sy(x,t),  d -> d + sd(x,t)
///   q-side: p -> p + sp(q,t),  d -> d + sd(q,t)
Morphism make_shift(const AlgebraContext& ctx, bool x_side, const RatFunc& s_der,
                    const RatFunc& s_d);

/// Ad(pole^(beta/eps)):  y -> y - beta * (d_v pole)/pole, and when
/// with_d_shift, d -> d - (beta/eps) * (d_t pole)/pole.
Morphism make_gauge(const AlgebraContext& ctx, bool x_side, const RatFunc& pole,
                    const RatFunc& beta, bool with_d_shift);

/// Ad(exp(G/eps)):  y -> y - d_v G,  d -> d - (1/eps) d_t G.
Morphism make_exp_gauge(const AlgebraContext& ctx, bool x_side, const RatFunc& G);

/// Variable change x -> fx(x,t), q -> gq(q,t), t -> ht(t); derivational
/// images forced by the chain rule (symmetric ordering correction on the
/// first-order coefficient).
Morphism make_varchange(const AlgebraContext& ctx, std::optional<RatFunc> fx,
                        std::optional<RatFunc> gq, std::optional<RatFunc> ht);

/// Algebraic Laplace transform on one pair: x -> -y, y -> x (inverse:
/// x -> y, y -> -x); q-side analogues.
Morphism make_laplace(const AlgebraContext& ctx, bool x_side, bool inverse);

/// Cached net of Laplace-conjugated gauges: x -> x - beta*inv(y + g(t)),
/// optionally d -> d + (beta*g'(t)/eps)*inv(y + g(t)).
Morphism make_net_laplace(const AlgebraContext& ctx, bool x_side, const RatFunc& beta,
                          const RatFunc& g_t, bool with_d_shift);

Morphism make_params(const AlgebraContext& ctx,
                     std::vector<std::pair<std::string, RatFunc>> images);

} // namespace orelax
