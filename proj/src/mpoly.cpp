/** @file mpoly.cpp
 *  Sparse polynomial arithmetic and the subresultant-PRS multivariate GCD.
 */
#include "orelax/mpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace orelax {

// ---------------------------------------------------------------- basics --

MPoly MPoly::zero(TablePtr tab) {
    MPoly r;
    r.tab_ = std::move(tab);
    return r;
}

MPoly MPoly::constant(TablePtr tab, const Rat& c) {
    MPoly r;
    r.tab_ = std::move(tab);
    if (c != 0) {
        Rat cc = c;
        cc.canonicalize();
        r.terms_.emplace(Expv(r.tab_->arity(), 0), cc);
    }
    return r;
}

MPoly MPoly::sym(TablePtr tab, const std::string& name) {
    size_t idx = tab->index(name);
    Expv e(tab->arity(), 0);
    e[idx] = 1;
    return monomial(std::move(tab), std::move(e), 1);
}

MPoly MPoly::monomial(TablePtr tab, Expv e, const Rat& c) {
    MPoly r;
    r.tab_ = std::move(tab);
    if (e.size() != r.tab_->arity()) fail(ErrKind::Internal, "monomial arity mismatch");
    if (c != 0) {
        Rat cc = c;
        cc.canonicalize();
        r.terms_.emplace(std::move(e), cc);
    }
    r.reduce();
    return r;
}

MPoly MPoly::from_terms(TablePtr tab, std::vector<std::pair<Expv, Rat>> terms) {
    MPoly r;
    r.tab_ = std::move(tab);
    for (auto& [e, c] : terms) {
        if (e.size() != r.tab_->arity()) fail(ErrKind::Internal, "term arity mismatch");
        r.insert_term(e, c);
    }
    r.reduce();
    return r;
}

void MPoly::insert_term(const Expv& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        Rat cc = c;
        cc.canonicalize();
        terms_.emplace(e, cc);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MPoly::reduce() {
    const long im = tab_->imaginary_index();
    if (im >= 0) {
        // i^(2k+r) -> (-1)^k i^r
        bool pending = true;
        while (pending) {
            pending = false;
            for (auto it = terms_.begin(); it != terms_.end(); ++it) {
                int e = it->first[static_cast<size_t>(im)];
                if (e >= 2) {
                    Expv ne = it->first;
                    int k = e / 2;
                    ne[static_cast<size_t>(im)] = e % 2;
                    Rat c = it->second * ((k % 2) ? -1 : 1);
                    terms_.erase(it);
                    insert_term(ne, c);
                    pending = true;
                    break;
                }
            }
        }
    }
    const long el = tab_->elimination_index();
    if (el >= 0) {
        // Substitute the constrained symbol away, one power at a time.
        bool pending = true;
        while (pending) {
            pending = false;
            for (auto it = terms_.begin(); it != terms_.end(); ++it) {
                int e = it->first[static_cast<size_t>(el)];
                if (e > 0) {
                    Expv base = it->first;
                    base[static_cast<size_t>(el)] = 0;
                    Rat c = it->second;
                    terms_.erase(it);
                    // multiply rhs^e onto the stripped monomial
                    MPoly acc = monomial(tab_, base, c);
                    MPoly rhs = zero(tab_);
                    for (const auto& [re, rc] : tab_->elimination_rhs())
                        rhs.insert_term(re, rc);
                    for (int k = 0; k < e; ++k) acc = acc * rhs;
                    for (const auto& [ae, ac] : acc.terms_) insert_term(ae, ac);
                    pending = true;
                    break;
                }
            }
        }
    }
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expv& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat MPoly::as_constant() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) fail(ErrKind::Internal, "as_constant on non-constant");
    return terms_.begin()->second;
}

int MPoly::degree(size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

long MPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    Deadline::check();
    MPoly r = zero(tab_ ? tab_ : o.tab_);
    const size_t n = r.tab_->arity();
    Expv e(n, 0);
    for (const auto& [ea, ca] : terms_) {
        Deadline::check();
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t idx = 0; idx < n; ++idx) e[idx] = ea[idx] + eb[idx];
            r.insert_term(e, ca * cb);
        }
    }
    r.reduce();
    return r;
}

MPoly MPoly::mul_scalar(const Rat& c) const {
    if (c == 0) return zero(tab_);
    MPoly r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

MPoly MPoly::pow(unsigned n) const {
    MPoly r = constant(tab_, 1);
    MPoly b = *this;
    unsigned k = n;
    while (k) {
        if (k & 1u) r = r * b;
        b = (k >>= 1) ? b * b : b;
    }
    return r;
}

MPoly MPoly::derivative(size_t var) const {
    MPoly r = zero(tab_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expv ne = e;
        ne[var] -= 1;
        r.insert_term(ne, c * e[var]);
    }
    return r; // differentiation cannot reintroduce i^2 or the eliminated symbol
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != tab_->arity()) fail(ErrKind::Internal, "eval arity mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t idx = 0; idx < e.size(); ++idx)
            for (int k = 0; k < e[idx]; ++k) t *= point[idx];
        acc += t;
    }
    acc.canonicalize();
    return acc;
}

const std::pair<const Expv, Rat>& MPoly::leading() const {
    if (terms_.empty()) fail(ErrKind::Internal, "leading() of zero");
    return *terms_.rbegin();
}

// -------------------------------------------------------- exact division --

std::optional<MPoly> MPoly::divided_by(const MPoly& divisor) const {
    if (divisor.is_zero()) fail(ErrKind::DivisionByZero, "polynomial division by zero");
    MPoly q = zero(tab_);
    MPoly r = *this;
    const auto& [eb, cb] = divisor.leading();
    const size_t n = tab_->arity();
    while (!r.is_zero()) {
        Deadline::check();
        const auto& [er, cr] = r.leading();
        Expv qe(n, 0);
        for (size_t idx = 0; idx < n; ++idx) {
            if (er[idx] < eb[idx]) return std::nullopt;
            qe[idx] = er[idx] - eb[idx];
        }
        MPoly t = monomial(tab_, qe, cr / cb);
        q = q + t;
        r = r - t * divisor;
    }
    return q;
}

// ------------------------------------------------------------------- GCD --

std::vector<MPoly> MPoly::collect(size_t var) const {
    int d = degree(var);
    std::vector<MPoly> out(static_cast<size_t>(std::max(d + 1, 1)), zero(tab_));
    for (const auto& [e, c] : terms_) {
        Expv ne = e;
        int k = ne[var];
        ne[var] = 0;
        out[static_cast<size_t>(k)].insert_term(ne, c);
    }
    return out;
}

MPoly MPoly::assemble(TablePtr tab, size_t var, const std::vector<MPoly>& coeffs) {
    MPoly r = zero(tab);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        Expv e(tab->arity(), 0);
        e[var] = static_cast<int>(k);
        r = r + coeffs[k] * monomial(tab, e, 1);
    }
    return r;
}

namespace {

int uni_deg(const std::vector<MPoly>& f) {
    for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k)
        if (!f[static_cast<size_t>(k)].is_zero()) return k;
    return -1;
}

void uni_trim(std::vector<MPoly>& f) { f.resize(static_cast<size_t>(uni_deg(f) + 1)); }

/// Pseudo-remainder: returns lc(b)^(deg a - deg b + 1) * a  mod  b.
std::vector<MPoly> uni_prem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    int db = uni_deg(b);
    const MPoly& lb = b[static_cast<size_t>(db)];
    int da = uni_deg(a);
    int steps = da - db + 1;
    while (true) {
        Deadline::check();
        da = uni_deg(a);
        if (da < db || da < 0) break;
        const MPoly lr = a[static_cast<size_t>(da)];
        for (auto& c : a) c = c * lb;
        for (int k = 0; k <= db; ++k)
            a[static_cast<size_t>(da - db + k)] =
                a[static_cast<size_t>(da - db + k)] - lr * b[static_cast<size_t>(k)];
        --steps;
        uni_trim(a);
    }
    // pad the multiplier so the result matches the standard pseudo-remainder
    for (int s = 0; s < steps; ++s)
        for (auto& c : a) c = c * lb;
    return a;
}

// ---- heuristic gcd: evaluate at one large integer point per variable,
// take the integer gcd, reconstruct coefficients as balanced base-xi
// digits, and certify the candidate by exact division both ways.

/// Exact rational num/den with canonicalization (the raw two-argument
/// constructor requires coprime parts and a positive denominator).
Rat ratio(const mpz_class& num, const mpz_class& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Greatest common divisor of the coefficient numerators (inputs must have
/// integer coefficients).
mpz_class int_content(const MPoly& p) {
    mpz_class g = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// Scale to integer coefficients with content 1 and positive leading term.
MPoly int_primitive(const MPoly& p) {
    mpz_class l = 1;
    for (const auto& [e, c] : p.terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    MPoly q = p.mul_scalar(Rat(l));
    mpz_class g = int_content(q);
    if (q.leading().second < 0) g = -g;
    return q.mul_scalar(ratio(1, g));
}

mpz_class max_abs_num(const MPoly& p) {
    mpz_class m = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_class a = abs(c.get_num());
        if (a > m) m = a;
    }
    return m;
}

MPoly eval_var_int(const MPoly& p, size_t v, const mpz_class& xi) {
    std::vector<std::pair<Expv, Rat>> out;
    for (const auto& [e, c] : p.terms()) {
        Expv e2 = e;
        int k = e2[v];
        e2[v] = 0;
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(k));
        out.emplace_back(std::move(e2), c * Rat(scale));
    }
    return MPoly::from_terms(p.table(), std::move(out));
}

/// Per-coefficient balanced residue mod xi (result coefficients in
/// (-xi/2, xi/2]).
MPoly balanced_mod(const MPoly& p, const mpz_class& xi) {
    std::vector<std::pair<Expv, Rat>> out;
    mpz_class half = xi / 2;
    for (const auto& [e, c] : p.terms()) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), c.get_num().get_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        if (r != 0) out.emplace_back(e, Rat(r));
    }
    return MPoly::from_terms(p.table(), std::move(out));
}

/// Inputs: integer coefficients.  Returns the gcd up to sign, or nullopt
/// when the heuristic gives up (caller falls back to the PRS).
std::optional<MPoly> gcd_heu(const MPoly& a0, const MPoly& b0, int depth) {
    Deadline::check();
    if (depth > 16) return std::nullopt;
    if (a0.is_zero() || b0.is_zero()) return std::nullopt; // unlucky evaluation
    TablePtr tab = a0.table();
    mpz_class ca = int_content(a0), cb = int_content(b0);
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    MPoly a = a0.mul_scalar(ratio(1, ca));
    MPoly b = b0.mul_scalar(ratio(1, cb));
    if (a.is_constant() || b.is_constant()) return MPoly::constant(tab, Rat(cg));

    // Variable to eliminate: shared one of smallest joint degree; with no
    // shared variable the primitive parts are coprime.
    size_t v = 0;
    int vscore = -1;
    for (size_t k = 0; k < tab->arity(); ++k) {
        int da = a.degree(k), db = b.degree(k);
        if (da <= 0 || db <= 0) continue;
        int score = std::max(da, db);
        if (vscore < 0 || score < vscore) {
            vscore = score;
            v = k;
        }
    }
    if (vscore < 0) return MPoly::constant(tab, Rat(cg));

    mpz_class na = max_abs_num(a), nb = max_abs_num(b);
    mpz_class xi = 2 * std::min(na, nb) + 29;
    int degcap = std::min(a.degree(v), b.degree(v));
    for (int attempt = 0; attempt < 6; ++attempt) {
        Deadline::check();
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) *
                static_cast<size_t>(std::max(a.degree(v), b.degree(v)) + 1) >
            1u << 20)
            return std::nullopt; // digits would explode; let the PRS try
        auto gamma = gcd_heu(eval_var_int(a, v, xi), eval_var_int(b, v, xi), depth + 1);
        if (gamma) {
            MPoly G = MPoly::zero(tab), rest = *gamma;
            bool ok = true;
            for (int i = 0; !rest.is_zero(); ++i) {
                if (i > degcap) {
                    ok = false;
                    break;
                }
                MPoly digit = balanced_mod(rest, xi);
                if (!digit.is_zero()) {
                    Expv e(tab->arity(), 0);
                    e[v] = i;
                    G = G + digit * MPoly::monomial(tab, e, 1);
                }
                rest = (rest - digit).mul_scalar(ratio(1, xi));
            }
            if (ok && !G.is_zero()) {
                mpz_class gc = int_content(G);
                if (G.leading().second < 0) gc = -gc;
                G = G.mul_scalar(ratio(1, gc));
                if (a.divided_by(G) && b.divided_by(G)) return G.mul_scalar(Rat(cg));
            }
        }
        xi = xi * 73794 / 27011 + 7; // grow past any unlucky point
    }
    return std::nullopt;
}

} // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    Deadline::check();
    TablePtr tab = a.tab_ ? a.tab_ : b.tab_;
    if (a.is_zero() && b.is_zero()) return zero(tab);
    if (a.is_zero()) return b.divided_by(constant(tab, b.leading().second)).value();
    if (b.is_zero()) return a.divided_by(constant(tab, a.leading().second)).value();
    if (a.is_constant() || b.is_constant()) return constant(tab, 1);

    // Monomial fast path: gcd(monomial, f) = common monomial part.
    auto mono_gcd = [&tab](const MPoly& m, const MPoly& f) {
        Expv e = m.terms().begin()->first;
        for (const auto& [fe, fc] : f.terms())
            for (size_t idx = 0; idx < e.size(); ++idx) e[idx] = std::min(e[idx], fe[idx]);
        return monomial(tab, e, 1);
    };
    if (a.terms_.size() == 1) return mono_gcd(a, b);
    if (b.terms_.size() == 1) return mono_gcd(b, a);

    if (a == b) return a.divided_by(constant(tab, a.leading().second)).value();

    // Divisibility shortcut: fractions are very often reduced by exactly
    // one of the two operands.
    if (a.divided_by(b)) return b.divided_by(constant(tab, b.leading().second)).value();
    if (b.divided_by(a)) return a.divided_by(constant(tab, a.leading().second)).value();

    // Heuristic single-point gcd; certified by exact division, so a success
    // is authoritative.  Falls through to the PRS when it gives up.
    if (auto g = gcd_heu(int_primitive(a), int_primitive(b), 0)) {
        MPoly r = std::move(*g);
        return r.divided_by(constant(tab, r.leading().second)).value();
    }

    // Main variable: present in both, minimizing the larger degree.
    size_t best = 0;
    int bestscore = -1;
    for (size_t v = 0; v < tab->arity(); ++v) {
        int da = a.degree(v), db = b.degree(v);
        if (da <= 0 || db <= 0) continue;
        int score = std::max(da, db);
        if (bestscore < 0 || score < bestscore) {
            bestscore = score;
            best = v;
        }
    }
    if (bestscore < 0) {
        // No shared variable: gcd is the gcd of contents, i.e. 1 over a field.
        return constant(tab, 1);
    }

    auto ca = a.collect(best);
    auto cb = b.collect(best);
    MPoly conta = ca[0], contb = cb[0];
    for (size_t k = 1; k < ca.size(); ++k) {
        if (conta.is_one()) break;
        conta = gcd(conta, ca[k]);
    }
    for (size_t k = 1; k < cb.size(); ++k) {
        if (contb.is_one()) break;
        contb = gcd(contb, cb[k]);
    }
    for (auto& c : ca) c = c.divided_by(conta).value();
    for (auto& c : cb) c = c.divided_by(contb).value();
    MPoly cont = gcd(conta, contb);

    // Subresultant PRS on the primitive parts.
    std::vector<MPoly> f1 = ca, f2 = cb;
    if (uni_deg(f1) < uni_deg(f2)) std::swap(f1, f2);

    // Coprimality fast path: evaluate every other variable at a random
    // point keeping both leading coefficients alive; the degree of the
    // evaluated univariate gcd bounds the true degree from above, so a
    // degree-0 result proves the primitive parts coprime.
    {
        static std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> pick(2, 97);
        for (int attempt = 0; attempt < 5; ++attempt) {
            std::vector<Rat> point(tab->arity());
            for (auto& v : point) v = pick(rng);
            auto eval_coeffs = [&](const std::vector<MPoly>& f) {
                std::vector<Rat> u(f.size());
                for (size_t k = 0; k < f.size(); ++k) u[k] = f[k].eval(point);
                while (!u.empty() && u.back() == 0) u.pop_back();
                return u;
            };
            std::vector<Rat> u1 = eval_coeffs(f1), u2 = eval_coeffs(f2);
            if (u1.size() != f1.size() || u2.size() != f2.size()) continue; // lc vanished
            while (!u2.empty()) {
                size_t d1 = u1.size() - 1, d2 = u2.size() - 1;
                if (d1 < d2) { std::swap(u1, u2); continue; }
                Rat m = u1.back() / u2.back();
                for (size_t k = 0; k <= d2; ++k) u1[d1 - d2 + k] -= m * u2[k];
                while (!u1.empty() && u1.back() == 0) u1.pop_back();
                if (u1.size() < u2.size()) std::swap(u1, u2);
            }
            if (u1.size() == 1) return cont; // coprime primitive parts
            break;
        }
    }
    // Primitive PRS: every pseudo-remainder is stripped down to its
    // primitive part, so coefficients never swell past the subresultants.
    while (true) {
        Deadline::check();
        auto r = uni_prem(f1, f2);
        if (uni_deg(r) < 0) break;
        if (uni_deg(r) == 0) {
            f2.assign(1, constant(tab, 1));
            break;
        }
        uni_trim(r);
        MPoly cr = r[0];
        for (size_t k = 1; k < r.size() && !cr.is_one(); ++k) cr = gcd(cr, r[k]);
        if (!cr.is_one())
            for (auto& c : r) c = c.divided_by(cr).value();
        f1 = std::move(f2);
        f2 = std::move(r);
    }
    // primitive part of the last nonzero remainder
    MPoly c2 = f2[0];
    for (size_t k = 1; k < f2.size(); ++k) {
        if (c2.is_one()) break;
        c2 = gcd(c2, f2[static_cast<size_t>(k)]);
    }
    for (auto& c : f2) c = c.divided_by(c2).value();
    MPoly result = assemble(tab, best, f2) * cont;
    return result.divided_by(constant(tab, result.leading().second)).value();
}

// ------------------------------------------------------------- printing --

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending graded-lex for readability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool allzero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        bool printed = false;
        if (ac != 1 || allzero) {
            os << ac.get_str();
            printed = true;
        }
        for (size_t idx = 0; idx < e.size(); ++idx) {
            if (e[idx] == 0) continue;
            if (printed) os << "*";
            os << tab_->name(idx);
            if (e[idx] > 1) os << "^" << e[idx];
            printed = true;
        }
    }
    return os.str();
}

} // namespace orelax
