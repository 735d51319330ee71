#include "zmc/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace zmc {

using detail::ExprNode;
using detail::NodePtr;

namespace {

NodePtr make(ExprKind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

bool is_const(const NodePtr& n) { return n->kind == ExprKind::Const; }
bool is_const_value(const NodePtr& n, double v) {
    return is_const(n) && n->value == ParaComplexd(v);
}

std::string fmt(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void serialize(const ExprNode& n, std::string& out) {
    switch (n.kind) {
        case ExprKind::Var:
            out += "z";
            return;
        case ExprKind::Const:
            if (n.value.im() == 0.0) {
                out += fmt(n.value.re());
            } else {
                out += "pc(";
                out += fmt(n.value.re());
                out += ",";
                out += fmt(n.value.im());
                out += ")";
            }
            return;
        case ExprKind::Pow:
            out += "pow(";
            serialize(*n.a, out);
            out += ",";
            out += std::to_string(n.ipow);
            out += ")";
            return;
        default:
            break;
    }
    const char* name = nullptr;
    switch (n.kind) {
        case ExprKind::Add: name = "add"; break;
        case ExprKind::Sub: name = "sub"; break;
        case ExprKind::Mul: name = "mul"; break;
        case ExprKind::Div: name = "div"; break;
        case ExprKind::Neg: name = "neg"; break;
        case ExprKind::Exp: name = "exp"; break;
        case ExprKind::Log: name = "log"; break;
        case ExprKind::Arctan: name = "arctan"; break;
        case ExprKind::Sinh: name = "sinh"; break;
        case ExprKind::Cosh: name = "cosh"; break;
        case ExprKind::Sin: name = "sin"; break;
        case ExprKind::Cos: name = "cos"; break;
        case ExprKind::Compose: name = "compose"; break;
        default: name = "?"; break;
    }
    out += name;
    out += "(";
    serialize(*n.a, out);
    if (n.b) {
        out += ", ";
        serialize(*n.b, out);
    }
    out += ")";
}

std::string node_string(const ExprNode& n) {
    std::string s;
    serialize(n, s);
    return s;
}

// Evaluation runs on the two idempotent components (u+v, u-v) end to end.
// Every operation of the calculus acts componentwise there, and keeping the
// pair through the whole tree avoids the cancellation that rebuilding
// (re, im) at each node would cause near the cone: for a near-null value of
// magnitude R the rectangular form only resolves the small component to
// eps*R, which is exactly the error a later division or logarithm amplifies.
struct NullVal {
    double p{}, m{};
};

// Same relative cone test as is_null on the rectangular form:
// norm2 = p*m and u^2 + v^2 = (p^2 + m^2) / 2.
bool nv_null(const NullVal& w) {
    return std::abs(w.p * w.m) <= kInvertTol * 0.5 * (w.p * w.p + w.m * w.m);
}

double powi(double x, long long e) {
    if (e < 0) {
        x = 1 / x;
        e = -e;
    }
    double acc = 1;
    while (e > 0) {
        if (e & 1)
            acc *= x;
        x *= x;
        e >>= 1;
    }
    return acc;
}

NullVal eval_node(const ExprNode& n, const NullVal& z) {
    switch (n.kind) {
        case ExprKind::Var:
            return z;
        case ExprKind::Const: {
            const auto c = to_null(n.value);
            return {c.plus, c.minus};
        }
        case ExprKind::Add: {
            const auto a = eval_node(*n.a, z);
            const auto b = eval_node(*n.b, z);
            return {a.p + b.p, a.m + b.m};
        }
        case ExprKind::Sub: {
            const auto a = eval_node(*n.a, z);
            const auto b = eval_node(*n.b, z);
            return {a.p - b.p, a.m - b.m};
        }
        case ExprKind::Mul: {
            const auto a = eval_node(*n.a, z);
            const auto b = eval_node(*n.b, z);
            return {a.p * b.p, a.m * b.m};
        }
        case ExprKind::Div: {
            const auto num = eval_node(*n.a, z);
            const auto den = eval_node(*n.b, z);
            if (nv_null(den))
                throw NonInvertible("denominator is a zero divisor in " + node_string(n));
            return {num.p / den.p, num.m / den.m};
        }
        case ExprKind::Neg: {
            const auto a = eval_node(*n.a, z);
            return {-a.p, -a.m};
        }
        case ExprKind::Pow: {
            const auto w = eval_node(*n.a, z);
            if (n.ipow < 0 && nv_null(w))
                throw NonInvertible("negative power of a zero divisor in " + node_string(n));
            return {powi(w.p, n.ipow), powi(w.m, n.ipow)};
        }
        case ExprKind::Exp: {
            const auto w = eval_node(*n.a, z);
            return {std::exp(w.p), std::exp(w.m)};
        }
        case ExprKind::Log: {
            const auto w = eval_node(*n.a, z);
            if (nv_null(w))
                throw NullConeArgument("log of a null-cone value in " + node_string(n));
            return {std::log(std::abs(w.p)), std::log(std::abs(w.m))};
        }
        case ExprKind::Arctan: {
            const auto w = eval_node(*n.a, z);
            return {std::atan(w.p), std::atan(w.m)};
        }
        case ExprKind::Sinh: {
            const auto w = eval_node(*n.a, z);
            return {std::sinh(w.p), std::sinh(w.m)};
        }
        case ExprKind::Cosh: {
            const auto w = eval_node(*n.a, z);
            return {std::cosh(w.p), std::cosh(w.m)};
        }
        case ExprKind::Sin: {
            const auto w = eval_node(*n.a, z);
            return {std::sin(w.p), std::sin(w.m)};
        }
        case ExprKind::Cos: {
            const auto w = eval_node(*n.a, z);
            return {std::cos(w.p), std::cos(w.m)};
        }
        case ExprKind::Compose:
            return eval_node(*n.a, eval_node(*n.b, z));
    }
    throw Error("unreachable expression kind");
}

} // namespace

ParaExpr::ParaExpr() : node_(make(ExprKind::Var)) {}

ParaExpr var() { return ParaExpr(make(ExprKind::Var)); }

ParaExpr constant(ParaComplexd c) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Const;
    n->value = c;
    return ParaExpr(n);
}

ParaExpr operator+(const ParaExpr& a, const ParaExpr& b) {
    if (is_const(a.ptr()) && is_const(b.ptr()))
        return constant(a.node().value + b.node().value);
    if (is_const_value(a.ptr(), 0.0))
        return b;
    if (is_const_value(b.ptr(), 0.0))
        return a;
    return ParaExpr(make(ExprKind::Add, a.ptr(), b.ptr()));
}

ParaExpr operator-(const ParaExpr& a, const ParaExpr& b) {
    if (is_const(a.ptr()) && is_const(b.ptr()))
        return constant(a.node().value - b.node().value);
    if (is_const_value(b.ptr(), 0.0))
        return a;
    return ParaExpr(make(ExprKind::Sub, a.ptr(), b.ptr()));
}

ParaExpr operator*(const ParaExpr& a, const ParaExpr& b) {
    if (is_const(a.ptr()) && is_const(b.ptr()))
        return constant(a.node().value * b.node().value);
    // Folding 0*x to 0 would hide domain errors of x, so only 1 folds.
    if (is_const_value(a.ptr(), 1.0))
        return b;
    if (is_const_value(b.ptr(), 1.0))
        return a;
    return ParaExpr(make(ExprKind::Mul, a.ptr(), b.ptr()));
}

ParaExpr operator/(const ParaExpr& a, const ParaExpr& b) {
    if (is_const_value(b.ptr(), 1.0))
        return a;
    return ParaExpr(make(ExprKind::Div, a.ptr(), b.ptr()));
}

ParaExpr operator-(const ParaExpr& a) {
    if (is_const(a.ptr()))
        return constant(-a.node().value);
    return ParaExpr(make(ExprKind::Neg, a.ptr()));
}

ParaExpr pow(const ParaExpr& a, long long n) {
    if (n == 1)
        return a;
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprKind::Pow;
    node->ipow = n;
    node->a = a.ptr();
    return ParaExpr(node);
}

#define ZMC_UNARY_FACTORY(fname, kind)                                                            \
    ParaExpr fname(const ParaExpr& a) { return ParaExpr(make(ExprKind::kind, a.ptr())); }

ZMC_UNARY_FACTORY(exp, Exp)
ZMC_UNARY_FACTORY(log, Log)
ZMC_UNARY_FACTORY(arctan, Arctan)
ZMC_UNARY_FACTORY(sinh, Sinh)
ZMC_UNARY_FACTORY(cosh, Cosh)
ZMC_UNARY_FACTORY(sin, Sin)
ZMC_UNARY_FACTORY(cos, Cos)
#undef ZMC_UNARY_FACTORY

ParaExpr compose(const ParaExpr& outer, const ParaExpr& inner) {
    return ParaExpr(make(ExprKind::Compose, outer.ptr(), inner.ptr()));
}

ParaComplexd eval(const ParaExpr& e, const ParaComplexd& z) {
    const auto n = to_null(z);
    const NullVal r = eval_node(e.node(), NullVal{n.plus, n.minus});
    return from_null(r.p, r.m);
}

ParaExpr deriv(const ParaExpr& e) {
    const ExprNode& n = e.node();
    const auto A = [&] { return ParaExpr(n.a); };
    const auto B = [&] { return ParaExpr(n.b); };
    switch (n.kind) {
        case ExprKind::Var:
            return constant(1.0);
        case ExprKind::Const:
            return constant(0.0);
        case ExprKind::Add:
            return deriv(A()) + deriv(B());
        case ExprKind::Sub:
            return deriv(A()) - deriv(B());
        case ExprKind::Mul:
            return deriv(A()) * B() + A() * deriv(B());
        case ExprKind::Div:
            return (deriv(A()) * B() - A() * deriv(B())) / (B() * B());
        case ExprKind::Neg:
            return -deriv(A());
        case ExprKind::Pow:
            return constant(double(n.ipow)) * pow(A(), n.ipow - 1) * deriv(A());
        case ExprKind::Exp:
            return exp(A()) * deriv(A());
        case ExprKind::Log:
            return deriv(A()) / A();
        case ExprKind::Arctan:
            return deriv(A()) / (constant(1.0) + A() * A());
        case ExprKind::Sinh:
            return cosh(A()) * deriv(A());
        case ExprKind::Cosh:
            return sinh(A()) * deriv(A());
        case ExprKind::Sin:
            return cos(A()) * deriv(A());
        case ExprKind::Cos:
            return -(sin(A()) * deriv(A()));
        case ExprKind::Compose:
            return compose(deriv(A()), B()) * deriv(B());
    }
    throw Error("unreachable expression kind");
}

double cr_residual(const std::function<ParaComplexd(const ParaComplexd&)>& f,
                   const ParaComplexd& z, double h) {
    const auto fe = [&](double du, double dv) { return f(ParaComplexd(z.re() + du, z.im() + dv)); };
    const auto du = (fe(h, 0) - fe(-h, 0)) / (2 * h);
    const auto dv = (fe(0, h) - fe(0, -h)) / (2 * h);
    const double xu = du.re(), yu = du.im();
    const double xv = dv.re(), yv = dv.im();
    return std::max(std::abs(xu - yv), std::abs(xv - yu));
}

double cr_residual(const ParaExpr& e, const ParaComplexd& z, double h) {
    return cr_residual([&](const ParaComplexd& w) { return eval(e, w); }, z, h);
}

CrCheck cr_check(const ParaExpr& e, const ParaComplexd& z, double h) {
    const auto fe = [&](double du, double dv) {
        return eval(e, ParaComplexd(z.re() + du, z.im() + dv));
    };
    const auto du = (fe(h, 0) - fe(-h, 0)) / (2 * h);
    const auto dv = (fe(0, h) - fe(0, -h)) / (2 * h);
    CrCheck out;
    out.cr = std::max(std::abs(du.re() - dv.im()), std::abs(du.im() - dv.re()));
    const auto d = eval(deriv(e), z) - du;
    out.deriv = std::hypot(d.re(), d.im());
    return out;
}

NullSplit null_split(const ParaExpr& e, const Rect& rect) {
    const ParaComplexd c = rect.center();
    const double p0 = c.re() + c.im();
    const double m0 = c.re() - c.im();
    auto node = e.ptr();
    NullSplit out;
    out.plus = [node, m0](double p) {
        return to_null(eval(ParaExpr(node), from_null(p, m0))).plus;
    };
    out.minus = [node, p0](double m) {
        return to_null(eval(ParaExpr(node), from_null(p0, m))).minus;
    };
    return out;
}

std::string to_string(const ParaExpr& e) { return node_string(e.node()); }

// --- parser ------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t i{0};

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw Error("parse error at offset " + std::to_string(i) + ": " + why);
    }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }

    double number() {
        skip();
        const char* begin = s.c_str() + i;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin)
            fail("expected a number");
        i += size_t(end - begin);
        return v;
    }

    long long integer() {
        skip();
        const char* begin = s.c_str() + i;
        char* end = nullptr;
        const long long v = std::strtoll(begin, &end, 10);
        if (end == begin)
            fail("expected an integer");
        i += size_t(end - begin);
        return v;
    }

    std::string ident() {
        skip();
        size_t start = i;
        while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        if (start == i)
            fail("expected an identifier");
        return s.substr(start, i - start);
    }

    ParaExpr expr() {
        skip();
        if (i >= s.size())
            fail("unexpected end of input");
        const char c = s[i];
        if (c == '-' || c == '+' || c == '.' || std::isdigit(static_cast<unsigned char>(c)))
            return constant(number());
        const std::string name = ident();
        if (name == "z")
            return var();
        if (name == "j")
            return constant(ParaComplexd(0, 1));
        expect('(');
        ParaExpr out = [&]() -> ParaExpr {
            if (name == "pc") {
                const double a = number();
                expect(',');
                const double b = number();
                return constant(ParaComplexd(a, b));
            }
            if (name == "pow") {
                ParaExpr a = expr();
                expect(',');
                return pow(a, integer());
            }
            if (name == "neg")
                return -expr();
            if (name == "exp")
                return exp(expr());
            if (name == "log")
                return log(expr());
            if (name == "arctan")
                return arctan(expr());
            if (name == "sinh")
                return sinh(expr());
            if (name == "cosh")
                return cosh(expr());
            if (name == "sin")
                return sin(expr());
            if (name == "cos")
                return cos(expr());
            ParaExpr a = expr();
            expect(',');
            ParaExpr b = expr();
            if (name == "add")
                return a + b;
            if (name == "sub")
                return a - b;
            if (name == "mul")
                return a * b;
            if (name == "div")
                return a / b;
            if (name == "compose")
                return compose(a, b);
            fail("unknown function '" + name + "'");
        }();
        expect(')');
        return out;
    }
};

} // namespace

ParaExpr parse_expr(const std::string& text) {
    Parser p(text);
    ParaExpr e = p.expr();
    p.skip();
    if (p.i != text.size())
        p.fail("trailing input");
    return e;
}

} // namespace zmc
