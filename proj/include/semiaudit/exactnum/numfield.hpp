#ifndef SEMIAUDIT_EXACTNUM_NUMFIELD_HPP
#define SEMIAUDIT_EXACTNUM_NUMFIELD_HPP

#include "semiaudit/exactnum/fp.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace semiaudit {

// Q[v]/(f) for a monic irreducible integer f
class NumberField {
public:
    NumberField(ZPoly f, std::string label = {}) : f_(std::move(f)), label_(std::move(label))
    {
        if (f_.degree() < 1 || f_.lead() != 1)
            throw std::invalid_argument("NumberField: defining polynomial must be monic of degree >= 1");
    }
    const ZPoly& poly() const { return f_; }
    std::size_t degree() const { return static_cast<std::size_t>(f_.degree()); }
    const std::string& label() const { return label_; }

private:
    ZPoly f_;
    std::string label_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class AlgebraicNumber {
public:
    AlgebraicNumber(FieldPtr k, std::vector<Rat> coords) : k_(std::move(k)), c_(std::move(coords))
    {
        if (c_.size() != k_->degree())
            throw std::invalid_argument("AlgebraicNumber: coordinate count differs from field degree");
    }
    static AlgebraicNumber from_poly(FieldPtr k, const QPoly& g)
    {
        QPoly r = g % to_q(k->poly());
        std::vector<Rat> v(k->degree(), Rat(0));
        for (std::size_t i = 0; i < r.c.size(); ++i)
            v[i] = r.c[i];
        return AlgebraicNumber(std::move(k), std::move(v));
    }
    static AlgebraicNumber constant(FieldPtr k, const Rat& q) { return from_poly(std::move(k), QPoly::constant(q)); }
    static AlgebraicNumber generator(FieldPtr k) { return from_poly(std::move(k), QPoly::x()); }

    const FieldPtr& field() const { return k_; }
    const std::vector<Rat>& coords() const { return c_; }
    QPoly as_poly() const { return QPoly(c_); }

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b)
    {
        same(a, b);
        return from_poly(a.k_, a.as_poly() + b.as_poly());
    }
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b)
    {
        same(a, b);
        return from_poly(a.k_, a.as_poly() - b.as_poly());
    }
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b)
    {
        same(a, b);
        return from_poly(a.k_, a.as_poly() * b.as_poly());
    }
    AlgebraicNumber operator-() const { return from_poly(k_, -as_poly()); }
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.k_ == b.k_ && a.c_ == b.c_; }

    bool is_zero() const
    {
        for (auto& x : c_)
            if (x != 0)
                return false;
        return true;
    }

    AlgebraicNumber inverse() const
    {
        if (is_zero())
            throw std::domain_error("inverse of zero");
        QPoly s, t;
        QPoly g = poly_xgcd(as_poly(), to_q(k_->poly()), s, t);
        if (g.degree() != 0)
            throw std::domain_error("defining polynomial is reducible");
        return from_poly(k_, s);
    }

    AlgebraicNumber pow(long e) const
    {
        AlgebraicNumber b = e < 0 ? inverse() : *this;
        unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        AlgebraicNumber r = constant(k_, 1);
        while (n) {
            if (n & 1)
                r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    // N_{K/Q}(a) = Res(f, g) for monic f
    Rat norm() const
    {
        QPoly g = as_poly();
        if (g.is_zero())
            return 0;
        return resultant(to_q(k_->poly()), g);
    }

private:
    static void same(const AlgebraicNumber& a, const AlgebraicNumber& b)
    {
        if (a.k_ != b.k_)
            throw std::invalid_argument("elements of different fields");
    }

    FieldPtr k_;
    std::vector<Rat> c_;
};

// the ideal (p, v - shift) for the field generator v
struct PrimeIdealRep {
    std::uint64_t p = 0;
    Rat shift = 0;
    unsigned claimed_e = 1;
    unsigned claimed_f = 1;
};

namespace detail {

inline std::uint64_t checked_shift(const ZPoly& f, const PrimeIdealRep& pi)
{
    if (pi.claimed_f != 1)
        throw std::invalid_argument("reduce_mod_prime: residue degree must be 1");
    if (!is_prime(pi.p))
        throw std::invalid_argument("reduce_mod_prime: p is not prime");
    std::uint64_t s = rat_mod(pi.shift, pi.p);
    if (FpPoly::from_z(f, pi.p).eval(s) != 0)
        throw std::domain_error("reduce_mod_prime: shift is not a root of the defining polynomial mod p");
    return s;
}

} // namespace detail

// image in F_p under v -> shift
inline std::uint64_t reduce_mod_prime(const AlgebraicNumber& a, const PrimeIdealRep& pi)
{
    std::uint64_t s = detail::checked_shift(a.field()->poly(), pi);
    std::uint64_t r = 0;
    for (std::size_t i = a.coords().size(); i-- > 0;)
        r = (r * s + rat_mod(a.coords()[i], pi.p)) % pi.p;
    return r;
}

// image in O/P^k = F_p[t]/(t^k), t = v - shift a uniformizer; valid for k <= e.
// Returns the coefficients of 1, t, ..., t^{k-1}.
inline std::vector<std::uint64_t> reduce_mod_prime_power(const AlgebraicNumber& a, const PrimeIdealRep& pi, unsigned k)
{
    const ZPoly& f = a.field()->poly();
    std::uint64_t s = detail::checked_shift(f, pi);
    if (k > pi.claimed_e)
        throw std::invalid_argument("reduce_mod_prime_power: exponent exceeds ramification index");
    if (pi.shift.get_den() != 1)
        throw std::invalid_argument("reduce_mod_prime_power: shift must be an integer");
    if (k >= 2) {
        BigInt fs = f.eval(pi.shift.get_num());
        if (fs == 0 || valuation(Rat(fs), BigInt(static_cast<unsigned long>(pi.p))) != 1)
            throw std::domain_error("reduce_mod_prime_power: v - shift is not a uniformizer");
    }
    // Taylor expansion of g(shift + t) truncated at t^k
    std::uint64_t p = pi.p;
    std::vector<std::uint64_t> out(k, 0);
    const auto& c = a.coords();
    for (std::size_t j = 0; j < c.size(); ++j) {
        std::uint64_t cj = rat_mod(c[j], p);
        if (!cj)
            continue;
        // binomial(j, i) * s^{j-i}
        for (std::size_t i = 0; i < k && i <= j; ++i) {
            BigInt b;
            mpz_bin_uiui(b.get_mpz_t(), j, i);
            std::uint64_t term = mod_u64(b, p);
            std::uint64_t sp = 1;
            for (std::size_t t = 0; t < j - i; ++t)
                sp = sp * s % p;
            out[i] = (out[i] + cj * term % p * sp) % p;
        }
    }
    return out;
}

// k with m = n^k times an l-th power of a rational, if any
inline std::optional<unsigned> kummer_class_equiv(const Rat& m, const Rat& n, unsigned ell)
{
    if (m <= 0 || n <= 0)
        throw std::domain_error("kummer_class_equiv: positive rationals only");
    auto expvec = [&](const Rat& q) {
        std::map<BigInt, long> e;
        for (auto& [p, k] : factor_integer(q.get_num()))
            e[p] += k;
        for (auto& [p, k] : factor_integer(q.get_den()))
            e[p] -= k;
        std::map<BigInt, long> r;
        for (auto& [p, k] : e) {
            long v = ((k % static_cast<long>(ell)) + ell) % ell;
            if (v)
                r[p] = v;
        }
        return r;
    };
    auto em = expvec(m), en = expvec(n);
    if (em.empty() || en.empty())
        throw std::domain_error("kummer_class_equiv: argument is an l-th power");
    for (unsigned k = 1; k < ell; ++k) {
        std::map<BigInt, long> t;
        for (auto& [p, v] : en) {
            long w = (v * static_cast<long>(k)) % ell;
            if (w)
                t[p] = w;
        }
        if (t == em)
            return k;
    }
    return std::nullopt;
}

} // namespace semiaudit

#endif
