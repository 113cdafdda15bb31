/** @file ratfunc.cpp */
#include "orelax/ratfunc.hpp"

namespace orelax {

namespace {

/// Split f = even + i*odd (exponent of i is 0 or 1 after canonicalization).
void split_i(const MPoly& f, size_t i_idx, MPoly& even, MPoly& odd) {
    even = MPoly::zero(f.table());
    odd = MPoly::zero(f.table());
    std::vector<std::pair<Expv, Rat>> ev, od;
    for (const auto& [e, c] : f.terms()) {
        if (e[i_idx] == 0) {
            ev.emplace_back(e, c);
        } else {
            Expv ne = e;
            ne[i_idx] = 0;
            od.emplace_back(ne, c);
        }
    }
    even = MPoly::from_terms(f.table(), std::move(ev));
    odd = MPoly::from_terms(f.table(), std::move(od));
}

/// GCD that tolerates the imaginary unit by splitting it off.
MPoly gcd_i_safe(const MPoly& a, const MPoly& b) {
    const long im = a.table() ? a.table()->imaginary_index() : -1;
    if (im < 0 || (!a.depends_on(static_cast<size_t>(im)) && !b.depends_on(static_cast<size_t>(im))))
        return MPoly::gcd(a, b);
    MPoly a0, a1, b0, b1;
    split_i(a, static_cast<size_t>(im), a0, a1);
    split_i(b, static_cast<size_t>(im), b0, b1);
    MPoly g = MPoly::gcd(a0, a1);
    g = MPoly::gcd(g, b0);
    g = MPoly::gcd(g, b1);
    return g;
}

} // namespace

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.table(), 1)) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

void RatFunc::reduce() {
    if (den_.is_zero()) fail(ErrKind::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.table(), 1);
        return;
    }
    const long im = num_.table()->imaginary_index();
    if (im >= 0 && den_.depends_on(static_cast<size_t>(im))) {
        // Clear i from the denominator by conjugation.
        MPoly d0, d1;
        split_i(den_, static_cast<size_t>(im), d0, d1);
        MPoly i = MPoly::sym(num_.table(), num_.table()->name(static_cast<size_t>(im)));
        MPoly conj = d0 - i * d1;
        num_ = num_ * conj;
        den_ = d0 * d0 + d1 * d1; // (d0 + i d1)(d0 - i d1)
        if (num_.is_zero()) {
            den_ = MPoly::constant(num_.table(), 1);
            return;
        }
    }
    MPoly g = gcd_i_safe(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divided_by(g).value();
        den_ = den_.divided_by(g).value();
    }
    Rat lc = den_.leading().second;
    if (lc != 1) {
        num_ = num_.mul_scalar(1 / lc);
        den_ = den_.mul_scalar(1 / lc);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) fail(ErrKind::DivisionByZero, "division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) fail(ErrKind::DivisionByZero, "inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
    if (n < 0) return inv().pow(-n);
    RatFunc r = one(table());
    for (int k = 0; k < n; ++k) r = r * *this;
    return r;
}

RatFunc RatFunc::mul_by(const Rat& c) const {
    if (c == 0) return zero(table());
    RatFunc r = *this;
    r.num_ = r.num_.mul_scalar(c);
    return r; // nonzero scalar preserves gcd(num,den)=1 and the monic den
}

RatFunc RatFunc::derivative(size_t var) const {
    // (n/d)' = (n'd - nd')/d^2
    return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::subst(const std::vector<std::pair<size_t, RatFunc>>& bindings) const {
    auto apply = [&](const MPoly& f) {
        RatFunc acc = zero(f.table());
        for (const auto& [e, c] : f.terms()) {
            Deadline::check();
            Expv rest = e;
            RatFunc t = one(f.table());
            for (const auto& [var, img] : bindings) {
                if (rest[var] != 0) {
                    t = t * img.pow(rest[var]);
                    rest[var] = 0;
                }
            }
            t = t * RatFunc(MPoly::monomial(f.table(), rest, c));
            acc = acc + t;
        }
        return acc;
    };
    return apply(num_) / apply(den_);
}

Rat RatFunc::eval(const std::vector<Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) fail(ErrKind::PoleAtPoint, "evaluation at a pole");
    Rat n = num_.eval(point);
    Rat r = n / d;
    r.canonicalize();
    return r;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace orelax
