#ifndef SEMIAUDIT_EXACTNUM_POLY_HPP
#define SEMIAUDIT_EXACTNUM_POLY_HPP

#include "semiaudit/exactnum/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiaudit {

// dense univariate polynomial, coefficients low degree first
template <class R>
class Poly {
public:
    std::vector<R> c;

    Poly() = default;
    Poly(std::initializer_list<R> l) : c(l) { trim(); }
    explicit Poly(std::vector<R> v) : c(std::move(v)) { trim(); }

    static Poly constant(const R& a) { return Poly(std::vector<R>{a}); }
    static Poly x() { return Poly(std::vector<R>{R(0), R(1)}); }
    static Poly monomial(const R& a, std::size_t k)
    {
        std::vector<R> v(k + 1, R(0));
        v[k] = a;
        return Poly(std::move(v));
    }

    void trim()
    {
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const R& lead() const
    {
        if (c.empty())
            throw std::domain_error("lead of zero polynomial");
        return c.back();
    }
    R coeff(std::size_t i) const { return i < c.size() ? c[i] : R(0); }

    template <class V>
    V eval(const V& x) const
    {
        V r(0);
        for (std::size_t i = c.size(); i-- > 0;)
            r = r * x + V(c[i]);
        return r;
    }

    Poly derivative() const
    {
        std::vector<R> v;
        for (std::size_t i = 1; i < c.size(); ++i)
            v.push_back(c[i] * R(static_cast<long>(i)));
        return Poly(std::move(v));
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& a : r.c)
            a = -a;
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c.size() > c.size())
            c.resize(o.c.size(), R(0));
        for (std::size_t i = 0; i < o.c.size(); ++i)
            c[i] += o.c[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<R> v(a.c.size() + b.c.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                v[i + j] += a.c[i] * b.c[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const R& s, Poly a)
    {
        for (auto& x : a.c)
            x *= s;
        a.trim();
        return a;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const
    {
        Poly r = constant(R(1)), b = *this;
        while (e) {
            if (e & 1)
                r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // f(g(x))
    Poly compose(const Poly& g) const
    {
        Poly r;
        for (std::size_t i = c.size(); i-- > 0;)
            r = r * g + constant(c[i]);
        return r;
    }

    std::string str(const std::string& var = "x") const
    {
        if (c.empty())
            return "0";
        std::string s;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0)
                continue;
            std::string a = c[i].get_str();
            bool neg = a[0] == '-';
            if (neg)
                a = a.substr(1);
            if (!s.empty())
                s += neg ? " - " : " + ";
            else if (neg)
                s += "-";
            if (i == 0 || a != "1")
                s += a;
            if (i > 0) {
                if (a != "1")
                    s += "*";
                s += var;
                if (i > 1)
                    s += "^" + std::to_string(i);
            }
        }
        return s;
    }
};

using QPoly = Poly<Rat>;
using ZPoly = Poly<BigInt>;

inline QPoly to_q(const ZPoly& f)
{
    std::vector<Rat> v;
    for (auto& a : f.c)
        v.emplace_back(a);
    return QPoly(std::move(v));
}

inline BigInt content(const ZPoly& f)
{
    BigInt g = 0;
    for (auto& a : f.c)
        g = gcd(g, a);
    return g;
}

// primitive integer polynomial with positive leading coefficient
inline ZPoly primitive_part(const QPoly& f)
{
    if (f.is_zero())
        return ZPoly();
    BigInt d = 1;
    for (auto& a : f.c)
        d = lcm(d, a.get_den());
    std::vector<BigInt> v;
    for (auto& a : f.c)
        v.push_back(BigInt(a * Rat(d)));
    ZPoly z(std::move(v));
    BigInt g = content(z);
    if (z.lead() < 0)
        g = -g;
    for (auto& a : z.c)
        a /= g;
    return z;
}

inline ZPoly primitive_part(const ZPoly& f) { return primitive_part(to_q(f)); }

inline QPoly monic(const QPoly& f)
{
    Rat l = f.lead();
    return (1 / l) * f;
}

template <class R>
void divmod(const Poly<R>& a, const Poly<R>& b, Poly<R>& q, Poly<R>& r)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    r = a;
    long db = b.degree();
    std::vector<R> qv(std::max<long>(a.degree() - db + 1, 0), R(0));
    R inv = R(1) / b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        long k = r.degree() - db;
        R t = r.lead() * inv;
        qv[k] = t;
        for (long i = 0; i <= db; ++i)
            r.c[i + k] -= t * b.c[i];
        r.trim();
    }
    q = Poly<R>(std::move(qv));
}

inline QPoly operator%(const QPoly& a, const QPoly& b)
{
    QPoly q, r;
    divmod(a, b, q, r);
    return r;
}

inline QPoly operator/(const QPoly& a, const QPoly& b)
{
    QPoly q, r;
    divmod(a, b, q, r);
    return q;
}

inline QPoly poly_gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        QPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : monic(a);
}

// s*a + t*b = g (monic gcd)
inline QPoly poly_xgcd(QPoly a, QPoly b, QPoly& s, QPoly& t)
{
    QPoly s0 = QPoly::constant(1), s1, t0, t1 = QPoly::constant(1);
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rat l = a.lead();
    s = (1 / l) * s0;
    t = (1 / l) * t0;
    return (1 / l) * a;
}

// Res(f, g) by the Euclidean recursion Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r)
inline Rat resultant(QPoly f, QPoly g)
{
    if (f.is_zero() || g.is_zero())
        return 0;
    Rat acc = 1;
    while (true) {
        long m = f.degree(), n = g.degree();
        if (n == 0)
            return acc * qpow(g.lead(), m);
        if (m == 0)
            return acc * qpow(f.lead(), n);
        QPoly r = f % g;
        if (r.is_zero())
            return 0;
        if ((m * n) % 2)
            acc = -acc;
        acc *= qpow(g.lead(), m - r.degree());
        f = std::move(g);
        g = std::move(r);
    }
}

inline Rat resultant(const ZPoly& f, const ZPoly& g) { return resultant(to_q(f), to_q(g)); }

inline Rat poly_discriminant(const QPoly& f)
{
    if (f.is_zero())
        throw std::domain_error("discriminant of zero polynomial");
    long n = f.degree();
    if (n < 1)
        throw std::domain_error("discriminant needs degree >= 1");
    Rat r = resultant(f, f.derivative()) / f.lead();
    if ((n * (n - 1) / 2) % 2)
        r = -r;
    return r;
}

inline Rat poly_discriminant(const ZPoly& f) { return poly_discriminant(to_q(f)); }

inline QPoly squarefree_part(const QPoly& f)
{
    QPoly g = poly_gcd(f, f.derivative());
    return g.degree() <= 0 ? monic(f) : monic(f / g);
}

// real roots of f counted by a Sturm sequence (multiple roots counted once)
inline int count_real_roots(const QPoly& f0)
{
    if (f0.degree() < 1)
        return 0;
    QPoly f = squarefree_part(f0);
    std::vector<QPoly> seq{f, f.derivative()};
    while (seq.back().degree() > 0) {
        QPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero())
            break;
        seq.push_back(-r);
    }
    auto changes = [&](bool at_plus) {
        int n = 0, last = 0;
        for (auto& p : seq) {
            int s = sgn(p.lead());
            if (!at_plus && p.degree() % 2)
                s = -s;
            if (s != 0 && last != 0 && s != last)
                ++n;
            if (s != 0)
                last = s;
        }
        return n;
    };
    return changes(false) - changes(true);
}

inline ZPoly parse_zpoly(const std::vector<std::string>& coeffs)
{
    std::vector<BigInt> v;
    for (auto& s : coeffs) {
        BigInt z;
        if (z.set_str(s, 10) != 0)
            throw std::invalid_argument("not an integer: " + s);
        v.push_back(z);
    }
    return ZPoly(std::move(v));
}

inline ZPoly cyclotomic(unsigned n)
{
    // x^n - 1 divided by the cyclotomic factors of proper divisors
    QPoly f = QPoly::monomial(1, n) - QPoly::constant(1);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            f = f / to_q(cyclotomic(d));
    return primitive_part(f);
}

} // namespace semiaudit

#endif
