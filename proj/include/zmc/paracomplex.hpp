#pragma once

// Para-complex (split-complex) numbers z = u + j v with j*j = +1.
//
// The ring R[j]/(j^2-1) is commutative with zero divisors on the null cone
// |u| = |v|.  Writing p = u+v and m = u-v ("null coordinates"), the algebra
// splits as R (+) R: every ring operation acts componentwise on (p, m), and
// that decomposition is what makes the elementary functions below both total
// where they should be and numerically stable near the cone.  All transcendental
// functions are evaluated through the null coordinates.

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <functional>

#include "zmc/errors.hpp"

namespace zmc {

// Relative tolerance deciding invertibility: z counts as a zero divisor when
// |u^2 - v^2| <= tol * (u^2 + v^2).
inline constexpr double kInvertTol = 1e-12;

template <class Scalar>
struct NullPair {
    Scalar plus{};   // u + v, the coefficient of (1+j)/2
    Scalar minus{};  // u - v, the coefficient of (1-j)/2
};

template <class Scalar>
class ParaComplex {
  public:
    constexpr ParaComplex() = default;
    constexpr ParaComplex(Scalar re) : re_(re) {}
    constexpr ParaComplex(Scalar re, Scalar im) : re_(re), im_(im) {}

    constexpr Scalar re() const { return re_; }
    constexpr Scalar im() const { return im_; }

    constexpr ParaComplex& operator+=(const ParaComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    constexpr ParaComplex& operator-=(const ParaComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    constexpr ParaComplex& operator*=(const ParaComplex& o) {
        const Scalar u = re_ * o.re_ + im_ * o.im_;
        const Scalar v = re_ * o.im_ + im_ * o.re_;
        re_ = u;
        im_ = v;
        return *this;
    }

  private:
    Scalar re_{};
    Scalar im_{};
};

using ParaComplexd = ParaComplex<double>;

template <class Scalar>
constexpr Scalar re(const ParaComplex<Scalar>& z) {
    return z.re();
}
template <class Scalar>
constexpr Scalar im(const ParaComplex<Scalar>& z) {
    return z.im();
}

template <class Scalar>
constexpr ParaComplex<Scalar> operator+(ParaComplex<Scalar> a, const ParaComplex<Scalar>& b) {
    return a += b;
}
template <class Scalar>
constexpr ParaComplex<Scalar> operator-(ParaComplex<Scalar> a, const ParaComplex<Scalar>& b) {
    return a -= b;
}
template <class Scalar>
constexpr ParaComplex<Scalar> operator*(ParaComplex<Scalar> a, const ParaComplex<Scalar>& b) {
    return a *= b;
}
template <class Scalar>
constexpr ParaComplex<Scalar> operator-(const ParaComplex<Scalar>& a) {
    return ParaComplex<Scalar>(-a.re(), -a.im());
}
template <class Scalar>
constexpr ParaComplex<Scalar> operator+(const ParaComplex<Scalar>& a) {
    return a;
}

template <class Scalar>
constexpr ParaComplex<Scalar> operator+(ParaComplex<Scalar> a, Scalar b) {
    return a += ParaComplex<Scalar>(b);
}
template <class Scalar>
constexpr ParaComplex<Scalar> operator+(Scalar a, ParaComplex<Scalar> b) {
    return b += ParaComplex<Scalar>(a);
}
template <class Scalar>
constexpr ParaComplex<Scalar> operator-(ParaComplex<Scalar> a, Scalar b) {
    return a -= ParaComplex<Scalar>(b);
}
template <class Scalar>
constexpr ParaComplex<Scalar> operator-(Scalar a, const ParaComplex<Scalar>& b) {
    return ParaComplex<Scalar>(a) - b;
}
template <class Scalar>
constexpr ParaComplex<Scalar> operator*(ParaComplex<Scalar> a, Scalar b) {
    return ParaComplex<Scalar>(a.re() * b, a.im() * b);
}
template <class Scalar>
constexpr ParaComplex<Scalar> operator*(Scalar a, ParaComplex<Scalar> b) {
    return ParaComplex<Scalar>(b.re() * a, b.im() * a);
}

template <class Scalar>
constexpr bool operator==(const ParaComplex<Scalar>& a, const ParaComplex<Scalar>& b) {
    return a.re() == b.re() && a.im() == b.im();
}
template <class Scalar>
constexpr bool operator!=(const ParaComplex<Scalar>& a, const ParaComplex<Scalar>& b) {
    return !(a == b);
}

template <class Scalar>
constexpr ParaComplex<Scalar> conj(const ParaComplex<Scalar>& z) {
    return ParaComplex<Scalar>(z.re(), -z.im());
}

// norm2(z) = z * conj(z) = u^2 - v^2.  Multiplicative, any sign, zero exactly
// on the null cone.
template <class Scalar>
constexpr Scalar norm2(const ParaComplex<Scalar>& z) {
    return z.re() * z.re() - z.im() * z.im();
}

// modulus(z) = sqrt(|norm2(z)|).  Vanishes on the whole null cone, so it is a
// pseudo-modulus only: it is multiplicative but separates no cone points.
template <class Scalar>
Scalar modulus(const ParaComplex<Scalar>& z) {
    using std::sqrt;
    using std::abs;
    return sqrt(abs(norm2(z)));
}

// Zero-divisor test, relative to the Euclidean magnitude of z.
template <class Scalar>
bool is_null(const ParaComplex<Scalar>& z, Scalar tol = Scalar(kInvertTol)) {
    using std::abs;
    const Scalar mag2 = z.re() * z.re() + z.im() * z.im();
    return abs(norm2(z)) <= tol * mag2;
}

template <class Scalar>
constexpr NullPair<Scalar> to_null(const ParaComplex<Scalar>& z) {
    return NullPair<Scalar>{z.re() + z.im(), z.re() - z.im()};
}

template <class Scalar>
constexpr ParaComplex<Scalar> from_null(Scalar plus, Scalar minus) {
    return ParaComplex<Scalar>((plus + minus) / Scalar(2), (plus - minus) / Scalar(2));
}

template <class Scalar>
constexpr ParaComplex<Scalar> from_null(const NullPair<Scalar>& n) {
    return from_null(n.plus, n.minus);
}

namespace detail {
template <class Scalar>
[[noreturn]] void throw_null(const char* op, const ParaComplex<Scalar>& z, const char* kind) {
    std::ostringstream os;
    os << op << ": argument " << z.re() << (z.im() < 0 ? " - " : " + ") << std::abs(z.im())
       << "j lies on the null cone";
    if (kind[0] == 'i')
        throw NonInvertible(os.str());
    throw NullConeArgument(os.str());
}
} // namespace detail

template <class Scalar>
ParaComplex<Scalar> inverse(const ParaComplex<Scalar>& z) {
    if (is_null(z))
        detail::throw_null("inverse", z, "inv");
    const auto n = to_null(z);
    return from_null(Scalar(1) / n.plus, Scalar(1) / n.minus);
}

template <class Scalar>
ParaComplex<Scalar> operator/(const ParaComplex<Scalar>& a, const ParaComplex<Scalar>& b) {
    if (is_null(b))
        detail::throw_null("divide", b, "inv");
    const auto na = to_null(a);
    const auto nb = to_null(b);
    return from_null(na.plus / nb.plus, na.minus / nb.minus);
}

template <class Scalar>
ParaComplex<Scalar> operator/(const ParaComplex<Scalar>& a, Scalar b) {
    return ParaComplex<Scalar>(a.re() / b, a.im() / b);
}

template <class Scalar>
ParaComplex<Scalar> operator/(Scalar a, const ParaComplex<Scalar>& b) {
    return ParaComplex<Scalar>(a) / b;
}

// Integer power by repeated squaring; negative exponents invert first.
template <class Scalar>
ParaComplex<Scalar> pow(ParaComplex<Scalar> z, long long n) {
    if (n < 0) {
        z = inverse(z);
        n = -n;
    }
    ParaComplex<Scalar> acc(Scalar(1));
    while (n > 0) {
        if (n & 1)
            acc *= z;
        z *= z;
        n >>= 1;
    }
    return acc;
}

// --- Tilde extension -------------------------------------------------------
//
// A real function f on an open set I extends to
//     f~(u + jv) = (f(u+v) + f(u-v))/2 + j (f(u+v) - f(u-v))/2,
// i.e. f applied componentwise in null coordinates.  The extension is a ring
// homomorphism in each null slot, so it respects sums, products, quotients and
// composition wherever everything is defined.

// A real function together with an explicit domain predicate.
template <class Scalar>
struct RealFunction {
    std::function<Scalar(Scalar)> f;
    std::function<bool(Scalar)> domain;  // open set I as a predicate
    std::string name{"f"};
};

template <class Scalar>
std::function<ParaComplex<Scalar>(const ParaComplex<Scalar>&)>
tilde_extend(RealFunction<Scalar> rf) {
    return [rf = std::move(rf)](const ParaComplex<Scalar>& z) {
        const auto n = to_null(z);
        if (!rf.domain(n.plus) || !rf.domain(n.minus)) {
            std::ostringstream os;
            os << "tilde(" << rf.name << "): null coordinate outside domain at (" << n.plus
               << ", " << n.minus << ")";
            throw DomainViolation(os.str());
        }
        return from_null(rf.f(n.plus), rf.f(n.minus));
    };
}

// --- Elementary functions --------------------------------------------------

template <class Scalar>
ParaComplex<Scalar> exp(const ParaComplex<Scalar>& z) {
    using std::exp;
    const auto n = to_null(z);
    return from_null(exp(n.plus), exp(n.minus));
}

// log is the tilde extension of log|x| on R \ {0}; total off the null cone.
// Equivalently log z = log sqrt|norm2 z| + j log sqrt(|u+v| / |u-v|), and
// log(exp z) = z holds for every z.
template <class Scalar>
ParaComplex<Scalar> log(const ParaComplex<Scalar>& z) {
    using std::log;
    using std::abs;
    if (is_null(z))
        detail::throw_null("log", z, "cone");
    const auto n = to_null(z);
    return from_null(log(abs(n.plus)), log(abs(n.minus)));
}

template <class Scalar>
ParaComplex<Scalar> arctan(const ParaComplex<Scalar>& z) {
    using std::atan;
    const auto n = to_null(z);
    return from_null(atan(n.plus), atan(n.minus));
}

template <class Scalar>
ParaComplex<Scalar> sin(const ParaComplex<Scalar>& z) {
    using std::sin;
    const auto n = to_null(z);
    return from_null(sin(n.plus), sin(n.minus));
}

template <class Scalar>
ParaComplex<Scalar> cos(const ParaComplex<Scalar>& z) {
    using std::cos;
    const auto n = to_null(z);
    return from_null(cos(n.plus), cos(n.minus));
}

template <class Scalar>
ParaComplex<Scalar> sinh(const ParaComplex<Scalar>& z) {
    using std::sinh;
    const auto n = to_null(z);
    return from_null(sinh(n.plus), sinh(n.minus));
}

template <class Scalar>
ParaComplex<Scalar> cosh(const ParaComplex<Scalar>& z) {
    using std::cosh;
    const auto n = to_null(z);
    return from_null(cosh(n.plus), cosh(n.minus));
}

// --- Polar form -------------------------------------------------------------
//
// Off the null cone every z is sgn * e^s (cosh t + j sinh t) when norm2 > 0,
// and sgn * e^s (sinh t + j cosh t) when norm2 < 0.  `t` is the hyperbolic
// angle argh(z), `s` = log modulus(z).

enum class PolarBranch {
    NormPositive,  // |u| > |v|
    NormNegative,  // |v| > |u|
};

template <class Scalar>
struct PolarForm {
    int sign{1};  // +1 or -1
    Scalar s{};
    Scalar t{};
    PolarBranch branch{PolarBranch::NormPositive};
};

// Hyperbolic angle of z (the t of the polar form), defined off the cone for
// either sign of norm2; equals im(log z).
template <class Scalar>
Scalar argh(const ParaComplex<Scalar>& z) {
    using std::log;
    using std::abs;
    if (is_null(z))
        detail::throw_null("argh", z, "cone");
    const auto n = to_null(z);
    return (log(abs(n.plus)) - log(abs(n.minus))) / Scalar(2);
}

template <class Scalar>
PolarForm<Scalar> polar_decompose(const ParaComplex<Scalar>& z) {
    if (is_null(z))
        detail::throw_null("polar_decompose", z, "cone");
    PolarForm<Scalar> p;
    const auto lg = log(z);
    p.s = lg.re();
    p.t = lg.im();
    if (norm2(z) > Scalar(0)) {
        p.branch = PolarBranch::NormPositive;
        p.sign = z.re() > Scalar(0) ? 1 : -1;
    } else {
        p.branch = PolarBranch::NormNegative;
        p.sign = z.im() > Scalar(0) ? 1 : -1;
    }
    return p;
}

template <class Scalar>
ParaComplex<Scalar> polar_compose(const PolarForm<Scalar>& p) {
    using std::exp;
    // Null coordinates of e^s(cosh t + j sinh t) are (e^{s+t}, e^{s-t});
    // for the norm-negative branch the minus coordinate flips sign.
    const Scalar plus = exp(p.s + p.t);
    const Scalar minus = exp(p.s - p.t);
    const Scalar sg = Scalar(p.sign);
    if (p.branch == PolarBranch::NormPositive)
        return from_null(sg * plus, sg * minus);
    return from_null(sg * plus, -sg * minus);
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const ParaComplex<Scalar>& z) {
    os << z.re();
    if (z.im() >= Scalar(0))
        os << "+" << z.im() << "j";
    else
        os << z.im() << "j";
    return os;
}

} // namespace zmc
