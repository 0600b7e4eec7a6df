#ifndef SEMIAUDIT_EXACTNUM_RADICAL_HPP
#define SEMIAUDIT_EXACTNUM_RADICAL_HPP

#include "semiaudit/exactnum/rational.hpp"

#include <cmath>
#include <map>
#include <string>

namespace semiaudit {

enum class Ordering { Less, Equal, Greater };

inline const char* to_string(Ordering o)
{
    switch (o) {
    case Ordering::Less: return "<";
    case Ordering::Equal: return "=";
    default: return ">";
    }
}

// prod p^e over primes p with rational exponents e != 0
class RadicalMonomial {
public:
    RadicalMonomial() = default;

    static RadicalMonomial prime_power(unsigned long p, const Rat& e)
    {
        if (!is_prime(BigInt(p)))
            throw std::invalid_argument("prime_power: " + std::to_string(p) + " is not prime");
        RadicalMonomial m;
        if (e != 0)
            m.f_[p] = e;
        return m;
    }

    // q^e for a positive rational q
    static RadicalMonomial of(const Rat& q, const Rat& e = 1)
    {
        if (q <= 0)
            throw std::domain_error("RadicalMonomial::of needs a positive rational");
        RadicalMonomial m;
        for (auto& [p, k] : factor_integer(q.get_num()))
            m.mul_factor(p.get_ui(), e * k);
        for (auto& [p, k] : factor_integer(q.get_den()))
            m.mul_factor(p.get_ui(), -e * k);
        return m;
    }

    const std::map<unsigned long, Rat>& factors() const { return f_; }

    Rat exponent(unsigned long p) const
    {
        auto it = f_.find(p);
        return it == f_.end() ? Rat(0) : it->second;
    }

    bool is_one() const { return f_.empty(); }

    RadicalMonomial& operator*=(const RadicalMonomial& o)
    {
        for (auto& [p, e] : o.f_)
            mul_factor(p, e);
        return *this;
    }

    friend RadicalMonomial operator*(RadicalMonomial a, const RadicalMonomial& b) { return a *= b; }

    RadicalMonomial pow(const Rat& e) const
    {
        RadicalMonomial r;
        if (e == 0)
            return r;
        for (auto& [p, x] : f_)
            r.f_[p] = x * e;
        return r;
    }

    RadicalMonomial inverse() const { return pow(-1); }

    friend RadicalMonomial operator/(const RadicalMonomial& a, const RadicalMonomial& b) { return a * b.inverse(); }

    friend bool operator==(const RadicalMonomial& a, const RadicalMonomial& b) { return a.f_ == b.f_; }

    // B = lcm of exponent denominators; the value raised to B is rational
    BigInt clearing_power() const
    {
        BigInt b = 1;
        for (auto& [p, e] : f_)
            b = lcm(b, e.get_den());
        return b;
    }

    // value^B as num/den with num, den integers
    std::pair<BigInt, BigInt> raised(const BigInt& B) const
    {
        BigInt num = 1, den = 1;
        for (auto& [p, e] : f_) {
            Rat k = e * Rat(B);
            if (k.get_den() != 1)
                throw std::logic_error("raised: B does not clear exponents");
            BigInt kk = k.get_num();
            if (kk > 0)
                num *= ipow(BigInt(p), kk.get_ui());
            else
                den *= ipow(BigInt(p), BigInt(-kk).get_ui());
        }
        return {num, den};
    }

    long double approx() const
    {
        long double s = 0;
        for (auto& [p, e] : f_)
            s += static_cast<long double>(e.get_d()) * std::log(static_cast<long double>(p));
        return std::exp(s);
    }

    // primes in increasing order, e.g. 2^(4/5)*3^(4/5)*5^(5/4)
    std::string str() const
    {
        if (f_.empty())
            return "1";
        std::string s;
        for (auto& [p, e] : f_) {
            if (!s.empty())
                s += "*";
            s += std::to_string(p);
            if (e != 1)
                s += "^(" + e.get_str() + ")";
        }
        return s;
    }

private:
    void mul_factor(unsigned long p, const Rat& e)
    {
        Rat& x = f_[p];
        x += e;
        if (x == 0)
            f_.erase(p);
    }

    std::map<unsigned long, Rat> f_;
};

// decides x <=> t by comparing x^B with t^B in integers, B the lcm of exponent denominators
inline Ordering exact_compare(const RadicalMonomial& x, const Rat& threshold)
{
    if (threshold <= 0)
        throw std::domain_error("exact_compare: threshold must be positive");
    BigInt B = x.clearing_power();
    auto [num, den] = x.raised(B);
    unsigned long b = B.get_ui();
    BigInt lhs = num * ipow(threshold.get_den(), b);
    BigInt rhs = den * ipow(threshold.get_num(), b);
    int c = cmp(lhs, rhs);
    return c < 0 ? Ordering::Less : (c == 0 ? Ordering::Equal : Ordering::Greater);
}

inline Ordering exact_compare(const RadicalMonomial& x, const RadicalMonomial& y)
{
    return exact_compare(x / y, Rat(1));
}

} // namespace semiaudit

#endif
