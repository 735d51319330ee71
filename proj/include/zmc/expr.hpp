#pragma once

// Expression trees for para-holomorphic functions of one variable z.
//
// The grammar is deliberately small: constants, z, ring operations, integer
// powers, exp, log, arctan, sinh, cosh, sin, cos, and composition.  Every
// function in the grammar is para-holomorphic on its natural domain, so each
// tree comes with an exact derivative (deriv) and can be line-integrated.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "zmc/paracomplex.hpp"
#include "zmc/rect.hpp"

namespace zmc {

enum class ExprKind {
    Var,
    Const,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,   // integer exponent
    Exp,
    Log,
    Arctan,
    Sinh,
    Cosh,
    Sin,
    Cos,
    Compose,  // a after b: a(b(z))
};

namespace detail {
struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;
struct ExprNode {
    ExprKind kind{ExprKind::Var};
    ParaComplexd value{};  // Const payload
    long long ipow{0};     // Pow payload
    NodePtr a, b;
};
} // namespace detail

class ParaExpr {
  public:
    // Default-constructed expression is the variable z.
    ParaExpr();
    explicit ParaExpr(detail::NodePtr n) : node_(std::move(n)) {}

    const detail::ExprNode& node() const { return *node_; }
    const detail::NodePtr& ptr() const { return node_; }

  private:
    detail::NodePtr node_;
};

// --- construction -----------------------------------------------------------

ParaExpr var();
ParaExpr constant(ParaComplexd c);
inline ParaExpr constant(double c) { return constant(ParaComplexd(c)); }

ParaExpr operator+(const ParaExpr& a, const ParaExpr& b);
ParaExpr operator-(const ParaExpr& a, const ParaExpr& b);
ParaExpr operator*(const ParaExpr& a, const ParaExpr& b);
ParaExpr operator/(const ParaExpr& a, const ParaExpr& b);
ParaExpr operator-(const ParaExpr& a);

inline ParaExpr operator+(const ParaExpr& a, double c) { return a + constant(c); }
inline ParaExpr operator+(double c, const ParaExpr& a) { return constant(c) + a; }
inline ParaExpr operator-(const ParaExpr& a, double c) { return a - constant(c); }
inline ParaExpr operator-(double c, const ParaExpr& a) { return constant(c) - a; }
inline ParaExpr operator*(const ParaExpr& a, double c) { return a * constant(c); }
inline ParaExpr operator*(double c, const ParaExpr& a) { return constant(c) * a; }
inline ParaExpr operator/(const ParaExpr& a, double c) { return a / constant(c); }
inline ParaExpr operator/(double c, const ParaExpr& a) { return constant(c) / a; }

ParaExpr pow(const ParaExpr& a, long long n);
ParaExpr exp(const ParaExpr& a);
ParaExpr log(const ParaExpr& a);
ParaExpr arctan(const ParaExpr& a);
ParaExpr sinh(const ParaExpr& a);
ParaExpr cosh(const ParaExpr& a);
ParaExpr sin(const ParaExpr& a);
ParaExpr cos(const ParaExpr& a);
ParaExpr compose(const ParaExpr& outer, const ParaExpr& inner);

// --- evaluation and calculus ------------------------------------------------

// Evaluates e at z.  Domain errors (division by a zero divisor, log on the
// cone, ...) are thrown with the offending sub-expression spelled out.
ParaComplexd eval(const ParaExpr& e, const ParaComplexd& z);

// Exact derivative as a new tree.
ParaExpr deriv(const ParaExpr& e);

// Max of the two para-Cauchy-Riemann defects |X_u - Y_v|, |X_v - Y_u| by
// central differences with step h, writing e = X + jY.
double cr_residual(const ParaExpr& e, const ParaComplexd& z, double h);
double cr_residual(const std::function<ParaComplexd(const ParaComplexd&)>& f,
                   const ParaComplexd& z, double h);

// cr   : the residual above.
// deriv: |eval(deriv(e), z) - (X_u + j Y_u)| with X_u, Y_u central differences.
struct CrCheck {
    double cr{};
    double deriv{};
};
CrCheck cr_check(const ParaExpr& e, const ParaComplexd& z, double h);

// Splits e over a rectangle into its two null-coordinate profiles:
// e(u + jv) = (f1(u+v) + f2(u-v))/2 + j (f1(u+v) - f2(u-v))/2, with the
// integration constants pinned at the rectangle center.
struct NullSplit {
    std::function<double(double)> plus;   // f1, a function of u+v
    std::function<double(double)> minus;  // f2, a function of u-v
};
NullSplit null_split(const ParaExpr& e, const Rect& rect);

// --- serialization ----------------------------------------------------------

// Compact prefix form, e.g. "div(1, sub(pow(z,4), 1))".  Non-real constants
// print as pc(re,im); the constant j parses as pc(0,1).
std::string to_string(const ParaExpr& e);
ParaExpr parse_expr(const std::string& text);

} // namespace zmc
