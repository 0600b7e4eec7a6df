#ifndef SEMIAUDIT_EXACTNUM_COMPLEX_MP_HPP
#define SEMIAUDIT_EXACTNUM_COMPLEX_MP_HPP

#include "semiaudit/exactnum/poly.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace semiaudit {

// 300 significant digits; fixed precision keeps evaluation free of global state
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<300>>;

inline Real to_real(const Rat& q)
{
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

struct Complex {
    Real re = 0, im = 0;

    Complex() = default;
    Complex(Real r, Real i = 0) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Rat& q) : re(to_real(q)) {}
    explicit Complex(const BigInt& z) : re(Real(z.get_str())) {}
    explicit Complex(int v) : re(v) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b)
    {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex operator-() const { return {-re, -im}; }
    Real abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

    static Complex polar(const Real& r, const Real& theta)
    {
        return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
    }
};

inline Real pi_real() { return boost::math::constants::pi<Real>(); }

// |f(z)| divided by sum |c_i||z|^i, a scale-free residual
template <class R>
Real relative_residual(const Poly<R>& f, const Complex& z)
{
    Complex v;
    Real scale = 0, az = z.abs(), pw = 1;
    for (std::size_t i = f.c.size(); i-- > 0;)
        v = v * z + Complex(f.c[i]);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        scale += boost::multiprecision::abs(to_real(Rat(f.c[i]))) * pw;
        pw *= az;
    }
    return scale == 0 ? Real(0) : v.abs() / scale;
}

} // namespace semiaudit

#endif
