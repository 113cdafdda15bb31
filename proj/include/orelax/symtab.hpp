/** @file symtab.hpp
 *  Ordered table of commutative indeterminates underlying all coefficient
 *  arithmetic.  A table may carry two canonicalization rules:
 *    - an adjoined imaginary unit i with i^2 = -1, and
 *    - one linear parameter constraint, imposed by eliminating a chosen
 *      symbol (always the first-listed alpha) at canonicalization time.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "orelax/defs.hpp"

namespace orelax {

using Rat = mpq_class;
using Expv = std::vector<int32_t>; // exponent vector, arity == table size

class SymbolTable {
  public:
    explicit SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t a = 0; a < names_.size(); ++a)
            for (size_t b = a + 1; b < names_.size(); ++b)
                if (names_[a] == names_[b]) fail(ErrKind::Internal, "duplicate symbol " + names_[a]);
    }

    size_t arity() const { return names_.size(); }
    const std::string& name(size_t idx) const { return names_.at(idx); }
    const std::vector<std::string>& names() const { return names_; }

    bool has(const std::string& n) const {
        for (const auto& s : names_)
            if (s == n) return true;
        return false;
    }
    size_t index(const std::string& n) const {
        for (size_t idx = 0; idx < names_.size(); ++idx)
            if (names_[idx] == n) return idx;
        fail(ErrKind::UnknownSymbol, "unknown symbol: " + n);
    }

    /// Mark symbol n as the imaginary unit (reduction i^2 -> -1).
    void set_imaginary(const std::string& n) { imag_ = static_cast<long>(index(n)); }
    long imaginary_index() const { return imag_; } // -1 if absent

    /// Impose a linear constraint by eliminating symbol n:
    /// n := sum of raw terms (exponent-vector, coefficient) over the OTHER symbols.
    void set_elimination(const std::string& n, std::vector<std::pair<Expv, Rat>> rhs) {
        elim_ = static_cast<long>(index(n));
        for (auto& [e, c] : rhs)
            if (e.size() != arity() || e[static_cast<size_t>(elim_)] != 0)
                fail(ErrKind::Internal, "bad elimination rhs");
        elim_rhs_ = std::move(rhs);
    }
    long elimination_index() const { return elim_; } // -1 if absent
    const std::vector<std::pair<Expv, Rat>>& elimination_rhs() const { return elim_rhs_; }

  private:
    std::vector<std::string> names_;
    long imag_ = -1;
    long elim_ = -1;
    std::vector<std::pair<Expv, Rat>> elim_rhs_;
};

using TablePtr = std::shared_ptr<const SymbolTable>;

} // namespace orelax
