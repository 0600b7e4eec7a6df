#ifndef SEMIAUDIT_EXACTNUM_EXPR_HPP
#define SEMIAUDIT_EXACTNUM_EXPR_HPP

#include "semiaudit/exactnum/complex_mp.hpp"
#include "semiaudit/exactnum/zfactor.hpp"

#include <memory>
#include <stdexcept>

namespace semiaudit {

// expression tree over rationals, k-th roots of rationals and roots of unity
class Expr {
public:
    enum class Kind { Rational, Root, Zeta, Add, Sub, Mul, Div, Neg };

    static Expr rational(const Rat& q) { return Expr(Node{Kind::Rational, q, 0, nullptr, nullptr}); }
    // principal k-th root: positive real for q > 0, real for odd k and q < 0, else |q|^{1/k} e^{i pi/k}
    static Expr root(const Rat& q, unsigned k)
    {
        if (k == 0)
            throw std::domain_error("zeroth root");
        return Expr(Node{Kind::Root, q, k, nullptr, nullptr});
    }
    // e^{2 pi i / n}
    static Expr zeta(unsigned n)
    {
        if (n == 0)
            throw std::domain_error("zeta(0)");
        return Expr(Node{Kind::Zeta, 0, n, nullptr, nullptr});
    }

    friend Expr operator+(const Expr& a, const Expr& b) { return bin(Kind::Add, a, b); }
    friend Expr operator-(const Expr& a, const Expr& b) { return bin(Kind::Sub, a, b); }
    friend Expr operator*(const Expr& a, const Expr& b) { return bin(Kind::Mul, a, b); }
    friend Expr operator/(const Expr& a, const Expr& b) { return bin(Kind::Div, a, b); }
    Expr operator-() const { return Expr(Node{Kind::Neg, 0, 0, n_, nullptr}); }

    Complex value() const { return eval(*n_); }

    struct Node;
    const Node& node() const { return *n_; }

    struct Node {
        Kind kind;
        Rat q;
        unsigned k;
        std::shared_ptr<const Node> a, b;
    };

private:
    explicit Expr(Node n) : n_(std::make_shared<const Node>(std::move(n))) {}
    static Expr bin(Kind k, const Expr& a, const Expr& b) { return Expr(Node{k, 0, 0, a.n_, b.n_}); }

    static Complex eval(const Node& n)
    {
        switch (n.kind) {
        case Kind::Rational: return Complex(n.q);
        case Kind::Root: {
            if (n.q == 0)
                return Complex();
            Real mag = boost::multiprecision::pow(boost::multiprecision::abs(to_real(n.q)), Real(1) / Real(n.k));
            if (n.q > 0)
                return Complex(mag);
            if (n.k % 2)
                return Complex(-mag);
            return Complex::polar(mag, pi_real() / Real(n.k));
        }
        case Kind::Zeta: return Complex::polar(Real(1), 2 * pi_real() / Real(n.k));
        case Kind::Add: return eval(*n.a) + eval(*n.b);
        case Kind::Sub: return eval(*n.a) - eval(*n.b);
        case Kind::Mul: return eval(*n.a) * eval(*n.b);
        case Kind::Div: return eval(*n.a) / eval(*n.b);
        case Kind::Neg: return -eval(*n.a);
        }
        throw std::logic_error("bad node");
    }

    friend struct MinPolyBuilder;
    std::shared_ptr<const Node> n_;
};

struct AlgebraicValue {
    ZPoly minpoly;
    Complex value;
};

struct MinPolyBuilder {
    // the unique irreducible factor of f vanishing at z; fails loudly if the numerical gap is too small
    static ZPoly select_factor(const QPoly& f, const Complex& z)
    {
        static const Real tiny("1e-200"), large("1e-60");
        ZPoly hit;
        int hits = 0;
        for (auto& [g, m] : factor_over_q(f)) {
            Real r = relative_residual(g, z);
            if (r < tiny) {
                hit = g;
                ++hits;
            } else if (r < large) {
                throw std::runtime_error("minimal_polynomial: root isolation ambiguous");
            }
        }
        if (hits != 1)
            throw std::runtime_error("minimal_polynomial: no unique vanishing factor");
        return hit;
    }

    // Newton interpolation through (x_i, y_i), x_i = 0..D
    static QPoly interpolate(const std::vector<Rat>& ys)
    {
        std::size_t n = ys.size();
        std::vector<Rat> dd = ys;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = n - 1; i >= j; --i)
                dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(j));
        QPoly r = QPoly::constant(dd[n - 1]);
        for (std::size_t i = n - 1; i-- > 0;)
            r = r * QPoly{Rat(-static_cast<long>(i)), Rat(1)} + QPoly::constant(dd[i]);
        return r;
    }

    // polynomial whose roots are a+b (sum = true) or a*b over all root pairs
    static QPoly combine(const ZPoly& A, const ZPoly& B, bool sum)
    {
        long D = A.degree() * B.degree();
        QPoly a = to_q(A);
        std::vector<Rat> ys;
        for (long x0 = 0; x0 <= D; ++x0) {
            QPoly by;
            if (sum) {
                by = to_q(B).compose(QPoly{Rat(x0), Rat(-1)});
            } else {
                long m = B.degree();
                std::vector<Rat> v(m + 1);
                for (long j = 0; j <= m; ++j)
                    v[m - j] = Rat(B.c[j]) * qpow(Rat(x0), j);
                by = QPoly(std::move(v));
            }
            ys.push_back(resultant(a, by));
        }
        return interpolate(ys);
    }

    static AlgebraicValue build(const Expr::Node& n)
    {
        using K = Expr::Kind;
        switch (n.kind) {
        case K::Rational: return {primitive_part(QPoly{-n.q, Rat(1)}), Complex(n.q)};
        case K::Root: {
            Complex z = Expr::eval(n);
            QPoly f = QPoly::monomial(1, n.k) - QPoly::constant(n.q);
            return {select_factor(f, z), z};
        }
        case K::Zeta: return {cyclotomic(n.k), Expr::eval(n)};
        case K::Neg: {
            auto a = build(*n.a);
            ZPoly f = a.minpoly;
            for (std::size_t i = 1; i < f.c.size(); i += 2)
                f.c[i] = -f.c[i];
            return {primitive_part(f), -a.value};
        }
        default: break;
        }
        auto a = build(*n.a);
        auto b = build(*n.b);
        if (n.kind == K::Sub || n.kind == K::Div) {
            ZPoly g = b.minpoly;
            if (n.kind == K::Sub) {
                for (std::size_t i = 1; i < g.c.size(); i += 2)
                    g.c[i] = -g.c[i];
                b = {primitive_part(g), -b.value};
            } else {
                if (g.degree() == 1 && g.c[0] == 0)
                    throw std::domain_error("minimal_polynomial: division by zero");
                std::reverse(g.c.begin(), g.c.end());
                b = {primitive_part(g), Complex(Real(1)) / b.value};
            }
        }
        bool sum = n.kind == K::Add || n.kind == K::Sub;
        Complex z = sum ? a.value + b.value : a.value * b.value;
        if (!sum && (a.minpoly == ZPoly{BigInt(0), BigInt(1)} || b.minpoly == ZPoly{BigInt(0), BigInt(1)}))
            return {ZPoly{BigInt(0), BigInt(1)}, Complex()};
        return {select_factor(combine(a.minpoly, b.minpoly, sum), z), z};
    }
};

// primitive integer minimal polynomial with positive leading coefficient
inline ZPoly minimal_polynomial(const Expr& e)
{
    return MinPolyBuilder::build(e.node()).minpoly;
}

inline AlgebraicValue minimal_polynomial_with_value(const Expr& e)
{
    return MinPolyBuilder::build(e.node());
}

} // namespace semiaudit

#endif
