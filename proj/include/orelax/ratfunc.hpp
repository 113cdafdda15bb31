/** @file ratfunc.hpp
 *  GCD-reduced rational functions: the commutative coefficient field.
 *  Canonical form: gcd(num, den) = 1, den has leading coefficient 1 and is
 *  free of the imaginary unit (cleared by conjugation).
 */
#pragma once

#include <string>
#include <vector>

#include "orelax/mpoly.hpp"

namespace orelax {

class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(MPoly num);
    RatFunc(MPoly num, MPoly den);

    static RatFunc zero(TablePtr tab) { return RatFunc(MPoly::zero(std::move(tab))); }
    static RatFunc one(TablePtr tab) { return RatFunc(MPoly::constant(std::move(tab), 1)); }
    static RatFunc constant(TablePtr tab, const Rat& c) {
        return RatFunc(MPoly::constant(std::move(tab), c));
    }
    static RatFunc sym(TablePtr tab, const std::string& name) {
        return RatFunc(MPoly::sym(std::move(tab), name));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const TablePtr& table() const { return num_.table(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_one(); }
    /// True when the function does not depend on symbol `var`.
    bool free_of(size_t var) const { return !num_.depends_on(var) && !den_.depends_on(var); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inv() const;
    RatFunc pow(int n) const;
    RatFunc mul_by(const Rat& c) const; // scalar multiple, stays canonical

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative(size_t var) const;

    /// Simultaneous substitution symbol -> RatFunc (unlisted symbols fixed).
    RatFunc subst(const std::vector<std::pair<size_t, RatFunc>>& bindings) const;

    Rat eval(const std::vector<Rat>& point) const; // PoleAtPoint on zero den

    std::string str() const;

  private:
    void reduce();

    MPoly num_, den_;
};

} // namespace orelax
