/** @file expr.cpp */
#include "orelax/expr.hpp"

#include <sstream>

namespace orelax {

namespace {
ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
} // namespace

ExprPtr e_const(RatFunc v) {
    Expr e;
    e.kind = Expr::Kind::Const;
    e.value = std::move(v);
    return node(std::move(e));
}

ExprPtr e_sym(Gen g) {
    Expr e;
    e.kind = Expr::Kind::Sym;
    e.gen = g;
    return node(std::move(e));
}

ExprPtr e_add(std::vector<ExprPtr> ch) {
    Expr e;
    e.kind = Expr::Kind::Add;
    e.children = std::move(ch);
    return node(std::move(e));
}

ExprPtr e_mul(std::vector<ExprPtr> ch) {
    Expr e;
    e.kind = Expr::Kind::Mul;
    e.children = std::move(ch);
    return node(std::move(e));
}

ExprPtr e_neg(ExprPtr ch) {
    Expr e;
    e.kind = Expr::Kind::Neg;
    e.children = {std::move(ch)};
    return node(std::move(e));
}

ExprPtr e_inv(ExprPtr ch) {
    Expr e;
    e.kind = Expr::Kind::Inv;
    e.children = {std::move(ch)};
    return node(std::move(e));
}

ExprPtr e_pow(ExprPtr base, int n) {
    if (n < 0) fail(ErrKind::Internal, "IntPow requires n >= 0");
    Expr e;
    e.kind = Expr::Kind::IntPow;
    e.children = {std::move(base)};
    e.power = n;
    return node(std::move(e));
}

std::string Expr::str() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Const:
        os << value.str();
        break;
    case Kind::Sym:
        os << gen_name(gen);
        break;
    case Kind::Add: {
        os << "(";
        for (size_t k = 0; k < children.size(); ++k) {
            if (k) os << " + ";
            os << children[k]->str();
        }
        os << ")";
        break;
    }
    case Kind::Mul: {
        for (size_t k = 0; k < children.size(); ++k) {
            if (k) os << "*";
            os << children[k]->str();
        }
        break;
    }
    case Kind::Neg:
        os << "-(" << children[0]->str() << ")";
        break;
    case Kind::Inv:
        os << "inv(" << children[0]->str() << ")";
        break;
    case Kind::IntPow:
        os << "(" << children[0]->str() << ")^" << power;
        break;
    }
    return os.str();
}

} // namespace orelax
