#ifndef SEMIAUDIT_GALMOD_LINALG_HPP
#define SEMIAUDIT_GALMOD_LINALG_HPP

#include "json.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiaudit::galmod {

using Vec = std::vector<int>;

inline int fl_mod(long x, int p) { return static_cast<int>(((x % p) + p) % p); }

inline int fl_inv(int a, int p)
{
    a = fl_mod(a, p);
    if (a == 0)
        throw std::domain_error("fl_inv: zero");
    long r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

// dense matrix over F_p, row major
class Mat {
public:
    Mat() = default;
    Mat(int p, int rows, int cols) : p_(p), r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}
    Mat(int p, std::vector<Vec> rows) : p_(p), r_(static_cast<int>(rows.size())), c_(rows.empty() ? 0 : static_cast<int>(rows[0].size()))
    {
        for (auto& row : rows) {
            if (static_cast<int>(row.size()) != c_)
                throw std::invalid_argument("Mat: ragged rows");
            for (int x : row)
                a_.push_back(fl_mod(x, p));
        }
    }

    static Mat identity(int p, int n)
    {
        Mat m(p, n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }
    static Mat scalar(int p, int n, int s)
    {
        Mat m(p, n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = fl_mod(s, p);
        return m;
    }
    // (A B; C D) from d x d blocks
    static Mat blocks(const Mat& a, const Mat& b, const Mat& c, const Mat& d)
    {
        int n = a.rows();
        Mat m(a.p(), 2 * n, 2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = a.at(i, j);
                m.at(i, n + j) = b.at(i, j);
                m.at(n + i, j) = c.at(i, j);
                m.at(n + i, n + j) = d.at(i, j);
            }
        return m;
    }

    int p() const { return p_; }
    int rows() const { return r_; }
    int cols() const { return c_; }
    int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    int at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    friend Mat operator*(const Mat& x, const Mat& y)
    {
        if (x.c_ != y.r_ || x.p_ != y.p_)
            throw std::invalid_argument("Mat: shape mismatch");
        Mat m(x.p_, x.r_, y.c_);
        for (int i = 0; i < x.r_; ++i)
            for (int k = 0; k < x.c_; ++k) {
                int v = x.at(i, k);
                if (!v)
                    continue;
                for (int j = 0; j < y.c_; ++j)
                    m.at(i, j) = (m.at(i, j) + v * y.at(k, j)) % x.p_;
            }
        return m;
    }
    friend Vec operator*(const Mat& x, const Vec& v)
    {
        Vec out(x.r_, 0);
        for (int i = 0; i < x.r_; ++i) {
            long s = 0;
            for (int j = 0; j < x.c_; ++j)
                s += static_cast<long>(x.at(i, j)) * v[j];
            out[i] = fl_mod(s, x.p_);
        }
        return out;
    }
    friend Mat operator+(const Mat& x, const Mat& y)
    {
        Mat m = x;
        for (std::size_t i = 0; i < m.a_.size(); ++i)
            m.a_[i] = (m.a_[i] + y.a_[i]) % m.p_;
        return m;
    }
    friend Mat operator-(const Mat& x, const Mat& y)
    {
        Mat m = x;
        for (std::size_t i = 0; i < m.a_.size(); ++i)
            m.a_[i] = fl_mod(m.a_[i] - y.a_[i], m.p_);
        return m;
    }
    Mat scaled(int s) const
    {
        Mat m = *this;
        for (auto& x : m.a_)
            x = fl_mod(static_cast<long>(x) * s, p_);
        return m;
    }
    friend bool operator==(const Mat& x, const Mat& y) { return x.p_ == y.p_ && x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_; }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    bool is_zero() const
    {
        for (int x : a_)
            if (x)
                return false;
        return true;
    }

    Mat pow(long k) const
    {
        Mat r = identity(p_, r_), b = *this;
        if (k < 0) {
            b = inverse().value();
            k = -k;
        }
        while (k) {
            if (k & 1)
                r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    Mat transpose() const
    {
        Mat m(p_, c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                m.at(j, i) = at(i, j);
        return m;
    }

    // reduced row echelon form in place; returns pivot columns
    std::vector<int> rref()
    {
        std::vector<int> piv;
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            int sel = -1;
            for (int i = row; i < r_; ++i)
                if (at(i, col)) {
                    sel = i;
                    break;
                }
            if (sel < 0)
                continue;
            for (int j = 0; j < c_; ++j)
                std::swap(at(row, j), at(sel, j));
            int inv = fl_inv(at(row, col), p_);
            for (int j = 0; j < c_; ++j)
                at(row, j) = at(row, j) * inv % p_;
            for (int i = 0; i < r_; ++i) {
                if (i == row || !at(i, col))
                    continue;
                int f = at(i, col);
                for (int j = 0; j < c_; ++j)
                    at(i, j) = fl_mod(at(i, j) - f * at(row, j), p_);
            }
            piv.push_back(col);
            ++row;
        }
        return piv;
    }

    int rank() const
    {
        Mat m = *this;
        return static_cast<int>(m.rref().size());
    }

    std::optional<Mat> inverse() const
    {
        if (r_ != c_)
            return std::nullopt;
        Mat aug(p_, r_, 2 * c_);
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < c_; ++j)
                aug.at(i, j) = at(i, j);
            aug.at(i, c_ + i) = 1;
        }
        auto piv = aug.rref();
        if (static_cast<int>(piv.size()) < r_ || piv[r_ - 1] >= c_)
            return std::nullopt;
        Mat inv(p_, r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                inv.at(i, j) = aug.at(i, c_ + j);
        return inv;
    }

    bool invertible() const { return r_ == c_ && rank() == r_; }

    // basis of {x : M x = 0}
    std::vector<Vec> nullspace() const
    {
        Mat m = *this;
        auto piv = m.rref();
        std::vector<bool> is_piv(c_, false);
        for (int c : piv)
            is_piv[c] = true;
        std::vector<Vec> out;
        for (int free = 0; free < c_; ++free) {
            if (is_piv[free])
                continue;
            Vec x(c_, 0);
            x[free] = 1;
            for (std::size_t i = 0; i < piv.size(); ++i)
                x[piv[i]] = fl_mod(-m.at(static_cast<int>(i), free), p_);
            out.push_back(x);
        }
        return out;
    }

    nlohmann::ordered_json to_json() const
    {
        auto j = nlohmann::ordered_json::array();
        for (int i = 0; i < r_; ++i) {
            auto row = nlohmann::ordered_json::array();
            for (int k = 0; k < c_; ++k)
                row.push_back(at(i, k));
            j.push_back(row);
        }
        return j;
    }

private:
    int p_ = 2, r_ = 0, c_ = 0;
    std::vector<int> a_;
};

// subspace of F_p^n kept as a reduced echelon basis, so equal subspaces compare equal
class Subspace {
public:
    Subspace(int p, int n) : p_(p), n_(n) {}
    Subspace(int p, int n, const std::vector<Vec>& vecs) : p_(p), n_(n)
    {
        for (auto& v : vecs)
            if (static_cast<int>(v.size()) != n)
                throw std::invalid_argument("Subspace: vector of wrong length");
        rebuild(vecs);
    }

    static Subspace full(int p, int n)
    {
        std::vector<Vec> e;
        for (int i = 0; i < n; ++i) {
            Vec v(n, 0);
            v[i] = 1;
            e.push_back(v);
        }
        return Subspace(p, n, e);
    }
    // span of standard basis vectors lo..hi-1
    static Subspace coordinate(int p, int n, int lo, int hi)
    {
        std::vector<Vec> e;
        for (int i = lo; i < hi; ++i) {
            Vec v(n, 0);
            v[i] = 1;
            e.push_back(v);
        }
        return Subspace(p, n, e);
    }

    int p() const { return p_; }
    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const
    {
        auto b = basis_;
        b.push_back(v);
        return Subspace(p_, n_, b).dim() == dim();
    }
    bool contains(const Subspace& s) const
    {
        for (auto& v : s.basis_)
            if (!contains(v))
                return false;
        return true;
    }
    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace operator+(const Subspace& a, const Subspace& b)
    {
        auto v = a.basis_;
        v.insert(v.end(), b.basis_.begin(), b.basis_.end());
        return Subspace(a.p_, a.n_, v);
    }

    Subspace intersect(const Subspace& o) const
    {
        // x_i a_i = y_j b_j  <=>  [A^T | -B^T] (x; y) = 0
        int da = dim(), db = o.dim();
        if (!da || !db)
            return Subspace(p_, n_);
        Mat m(p_, n_, da + db);
        for (int i = 0; i < da; ++i)
            for (int r = 0; r < n_; ++r)
                m.at(r, i) = basis_[i][r];
        for (int j = 0; j < db; ++j)
            for (int r = 0; r < n_; ++r)
                m.at(r, da + j) = fl_mod(-o.basis_[j][r], p_);
        std::vector<Vec> out;
        for (auto& sol : m.nullspace()) {
            Vec v(n_, 0);
            for (int i = 0; i < da; ++i)
                for (int r = 0; r < n_; ++r)
                    v[r] = fl_mod(v[r] + sol[i] * basis_[i][r], p_);
            out.push_back(v);
        }
        return Subspace(p_, n_, out);
    }

    Subspace image(const Mat& m) const
    {
        std::vector<Vec> out;
        for (auto& v : basis_)
            out.push_back(m * v);
        return Subspace(p_, m.rows(), out);
    }

    bool stable_under(const Mat& m) const
    {
        for (auto& v : basis_)
            if (!contains(m * v))
                return false;
        return true;
    }

    nlohmann::ordered_json to_json() const
    {
        auto j = nlohmann::ordered_json::array();
        for (auto& v : basis_)
            j.push_back(v);
        return j;
    }

private:
    void rebuild(const std::vector<Vec>& vecs)
    {
        basis_.clear();
        if (vecs.empty())
            return;
        Mat m(p_, vecs);
        auto piv = m.rref();
        for (std::size_t i = 0; i < piv.size(); ++i) {
            Vec v(n_);
            for (int j = 0; j < n_; ++j)
                v[j] = m.at(static_cast<int>(i), j);
            basis_.push_back(v);
        }
    }

    int p_, n_;
    std::vector<Vec> basis_;
};

// {x in s : g x in w}
inline Subspace preimage_within(const Subspace& s, const Mat& g, const Subspace& w)
{
    int n = s.ambient(), k = s.dim(), p = s.p();
    if (!k)
        return s;
    // reduce g b_i modulo w's echelon basis; the kernel of the reduced map gives the preimage
    auto reduce = [&](Vec v) {
        for (auto& bw : w.basis()) {
            int lead = 0;
            while (!bw[lead])
                ++lead;
            int f = v[lead];
            if (f)
                for (int j = 0; j < n; ++j)
                    v[j] = fl_mod(v[j] - f * bw[j], p);
        }
        return v;
    };
    Mat q(p, n, k);
    for (int i = 0; i < k; ++i) {
        Vec r = reduce(g * s.basis()[i]);
        for (int j = 0; j < n; ++j)
            q.at(j, i) = r[j];
    }
    std::vector<Vec> keep;
    for (auto& c : q.nullspace()) {
        Vec x(n, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j)
                x[j] = fl_mod(x[j] + c[i] * s.basis()[i][j], p);
        keep.push_back(x);
    }
    return Subspace(p, n, keep);
}

// largest subspace of w stable under every matrix in gens
inline Subspace largest_stable_subspace(Subspace w, const std::vector<Mat>& gens)
{
    for (;;) {
        Subspace next = w;
        for (auto& g : gens)
            next = preimage_within(next, g, w);
        if (next == w)
            return w;
        w = next;
    }
}

inline Vec random_vec(std::mt19937& rng, int p, int n)
{
    Vec v(n);
    for (auto& x : v)
        x = static_cast<int>(rng() % static_cast<unsigned>(p));
    return v;
}

inline Mat random_mat(std::mt19937& rng, int p, int r, int c)
{
    Mat m(p, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = static_cast<int>(rng() % static_cast<unsigned>(p));
    return m;
}

inline Mat random_invertible(std::mt19937& rng, int p, int n)
{
    for (;;) {
        Mat m = random_mat(rng, p, n, n);
        if (m.invertible())
            return m;
    }
}

} // namespace semiaudit::galmod

#endif
