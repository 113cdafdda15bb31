/** @file mpoly.hpp
 *  Sparse multivariate polynomials over exact rationals, graded-lex term
 *  order.  Canonicalization applies the table's i^2 = -1 rule and its linear
 *  parameter-constraint elimination, so equal elements have equal term maps.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orelax/symtab.hpp"

namespace orelax {

/// Graded lexicographic order on exponent vectors.
struct GrlexLess {
    bool operator()(const Expv& a, const Expv& b) const {
        long da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return a < b; // lexicographic tie-break
    }
};

class MPoly {
  public:
    using TermMap = std::map<Expv, Rat, GrlexLess>;

    MPoly() = default;
    static MPoly zero(TablePtr tab);
    static MPoly constant(TablePtr tab, const Rat& c);
    static MPoly sym(TablePtr tab, const std::string& name);
    static MPoly monomial(TablePtr tab, Expv e, const Rat& c);
    static MPoly from_terms(TablePtr tab, std::vector<std::pair<Expv, Rat>> terms);

    const TablePtr& table() const { return tab_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value when constant (zero polynomial gives 0).
    Rat as_constant() const;
    bool is_one() const { return is_constant() && as_constant() == 1; }

    int degree(size_t var) const;     // -1 for the zero polynomial
    long total_degree() const;        // -1 for the zero polynomial
    bool depends_on(size_t var) const { return degree(var) > 0; }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly mul_scalar(const Rat& c) const;
    MPoly pow(unsigned n) const;

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(size_t var) const;
    Rat eval(const std::vector<Rat>& point) const;

    /// Leading term under graded-lex (requires nonzero).
    const std::pair<const Expv, Rat>& leading() const;

    /// Exact division: returns quotient iff divisor divides exactly.
    std::optional<MPoly> divided_by(const MPoly& divisor) const;

    /// Polynomial GCD, normalized to leading coefficient 1.  Inputs must be
    /// free of the imaginary unit (callers split i off first).
    static MPoly gcd(const MPoly& a, const MPoly& b);

    /// Collect coefficients by the power of `var` (index 0 = constant term);
    /// the returned polynomials do not depend on `var`.
    std::vector<MPoly> collect(size_t var) const;
    static MPoly assemble(TablePtr tab, size_t var, const std::vector<MPoly>& coeffs);

    std::string str() const;

  private:
    void insert_term(const Expv& e, const Rat& c); // accumulate, drop zeros
    void reduce();                                 // i^2 and elimination rules

    TablePtr tab_;
    TermMap terms_;
};

} // namespace orelax
