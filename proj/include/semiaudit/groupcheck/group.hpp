#ifndef SEMIAUDIT_GROUPCHECK_GROUP_HPP
#define SEMIAUDIT_GROUPCHECK_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiaudit::groups {

using Elem = int;
using Subset = std::vector<Elem>;  // sorted element indices

class FiniteGroup {
public:
    FiniteGroup() = default;

    // table[a*n + b] = a*b; identity and inverses are found and the axioms checked
    FiniteGroup(int n, std::vector<std::uint16_t> table, std::string label)
        : n_(n), t_(std::move(table)), label_(std::move(label))
    {
        if (n_ < 1 || t_.size() != static_cast<std::size_t>(n_) * n_)
            throw std::invalid_argument("FiniteGroup: bad table size");
        for (auto x : t_)
            if (x >= n_)
                throw std::invalid_argument("FiniteGroup: entry out of range");
        e_ = -1;
        for (int a = 0; a < n_ && e_ < 0; ++a) {
            bool ok = true;
            for (int b = 0; b < n_ && ok; ++b)
                ok = mul(a, b) == b && mul(b, a) == b;
            if (ok)
                e_ = a;
        }
        if (e_ < 0)
            throw std::invalid_argument("FiniteGroup: no identity");
        inv_.assign(n_, -1);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == e_) {
                    if (mul(b, a) != e_)
                        throw std::invalid_argument("FiniteGroup: one-sided inverse");
                    inv_[a] = b;
                }
        for (int a = 0; a < n_; ++a)
            if (inv_[a] < 0)
                throw std::invalid_argument("FiniteGroup: missing inverse");
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                int ab = mul(a, b);
                for (int c = 0; c < n_; ++c)
                    if (mul(ab, c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("FiniteGroup: not associative");
            }
        order_.assign(n_, 0);
        for (int a = 0; a < n_; ++a) {
            int k = 1, x = a;
            while (x != e_) {
                x = mul(x, a);
                ++k;
            }
            order_[a] = k;
        }
    }

    int order() const { return n_; }
    int identity() const { return e_; }
    int mul(int a, int b) const { return t_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int elem_order(int a) const { return order_[a]; }
    int pow(int a, long k) const
    {
        int o = order_[a];
        k = ((k % o) + o) % o;
        int r = e_;
        for (long i = 0; i < k; ++i)
            r = mul(r, a);
        return r;
    }
    int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    const std::string& label() const { return label_; }
    void set_label(std::string s) { label_ = std::move(s); }
    const std::vector<std::uint16_t>& table() const { return t_; }

    bool is_abelian() const
    {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a))
                    return false;
        return true;
    }

    Subset all() const
    {
        Subset s(n_);
        std::iota(s.begin(), s.end(), 0);
        return s;
    }

    // subgroup generated by a set of elements
    Subset closure(const std::vector<int>& gens) const
    {
        std::vector<char> in(n_, 0);
        std::vector<int> list{e_};
        in[e_] = 1;
        for (std::size_t i = 0; i < list.size(); ++i)
            for (int g : gens) {
                int y = mul(list[i], g);
                if (!in[y]) {
                    in[y] = 1;
                    list.push_back(y);
                }
            }
        std::sort(list.begin(), list.end());
        return list;
    }

    Subset center() const
    {
        Subset z;
        for (int a = 0; a < n_; ++a) {
            bool c = true;
            for (int b = 0; b < n_ && c; ++b)
                c = mul(a, b) == mul(b, a);
            if (c)
                z.push_back(a);
        }
        return z;
    }

    Subset derived_subgroup() const
    {
        std::set<int> comms;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                comms.insert(commutator(a, b));
        return closure(std::vector<int>(comms.begin(), comms.end()));
    }

    bool is_normal(const Subset& h) const
    {
        std::vector<char> in(n_, 0);
        for (int x : h)
            in[x] = 1;
        for (int g = 0; g < n_; ++g)
            for (int x : h)
                if (!in[conj(g, x)])
                    return false;
        return true;
    }

    // a small generating set, chosen greedily by element order
    std::vector<int> generators() const
    {
        std::vector<int> gens;
        Subset cur{e_};
        std::vector<int> cand(n_);
        std::iota(cand.begin(), cand.end(), 0);
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return order_[a] > order_[b]; });
        while (static_cast<int>(cur.size()) < n_) {
            int best = -1;
            std::size_t best_size = 0;
            for (int c : cand) {
                if (std::binary_search(cur.begin(), cur.end(), c))
                    continue;
                auto g = gens;
                g.push_back(c);
                auto s = closure(g);
                if (s.size() > best_size) {
                    best_size = s.size();
                    best = c;
                }
            }
            gens.push_back(best);
            cur = closure(gens);
        }
        return gens;
    }

private:
    int n_ = 0;
    int e_ = 0;
    std::vector<std::uint16_t> t_;
    std::vector<int> inv_;
    std::vector<int> order_;
    std::string label_;
};

// materializes the group generated by gens under mul; T must be ordered
template <class T, class Mul>
FiniteGroup group_from_generators(const std::vector<T>& gens, const T& identity, Mul mul, std::string label,
                                  std::size_t cap = 4096)
{
    std::map<T, int> index{{identity, 0}};
    std::vector<T> elems{identity};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (auto& g : gens) {
            T y = mul(elems[i], g);
            if (!index.count(y)) {
                if (elems.size() >= cap)
                    throw std::runtime_error("group_from_generators: group larger than cap");
                index.emplace(y, static_cast<int>(elems.size()));
                elems.push_back(y);
            }
        }
    int n = static_cast<int>(elems.size());
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(index.at(mul(elems[a], elems[b])));
    return FiniteGroup(n, std::move(t), std::move(label));
}

inline FiniteGroup cyclic(int n)
{
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>((a + b) % n);
    return FiniteGroup(n, std::move(t), "C" + std::to_string(n));
}

inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string label = {})
{
    int n = g.order() * h.order(), m = h.order();
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] =
                static_cast<std::uint16_t>(g.mul(a / m, b / m) * m + h.mul(a % m, b % m));
    if (label.empty())
        label = g.label() + "x" + h.label();
    return FiniteGroup(n, std::move(t), std::move(label));
}

using Perm = std::vector<int>;

inline Perm perm_mul(const Perm& a, const Perm& b)
{
    // apply a first, then b
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = b[a[i]];
    return r;
}

inline FiniteGroup permutation_group(const std::vector<Perm>& gens, std::string label)
{
    Perm id(gens.at(0).size());
    std::iota(id.begin(), id.end(), 0);
    return group_from_generators(gens, id, perm_mul, std::move(label));
}

// automorphism given as an image vector on elements
using Map = std::vector<int>;

inline Map compose(const Map& outer, const Map& inner)
{
    Map r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i)
        r[i] = outer[inner[i]];
    return r;
}

inline Map identity_map(int n)
{
    Map m(n);
    std::iota(m.begin(), m.end(), 0);
    return m;
}

// Extension N.C_p: elements (x, i), t^p = z, t x t^-1 = alpha(x); needs alpha(z) = z, alpha^p = conj by z
inline FiniteGroup cyclic_extension(const FiniteGroup& nrm, const Map& alpha, int z, int p, std::string label = {})
{
    int m = nrm.order();
    std::vector<Map> apow{identity_map(m)};
    for (int i = 1; i < p; ++i)
        apow.push_back(compose(alpha, apow.back()));
    if (alpha[z] != z)
        throw std::invalid_argument("cyclic_extension: alpha must fix z");
    Map ap = compose(alpha, apow.back());
    for (int x = 0; x < m; ++x)
        if (ap[x] != nrm.conj(z, x))
            throw std::invalid_argument("cyclic_extension: alpha^p is not conjugation by z");
    int n = m * p;
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int x = a % m, i = a / m, y = b % m, j = b / m;
            int prod = nrm.mul(x, apow[i][y]);
            int k = i + j;
            if (k >= p) {
                prod = nrm.mul(prod, z);
                k -= p;
            }
            t[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(k * m + prod);
        }
    return FiniteGroup(n, std::move(t), std::move(label));
}

// G/K for a normal subgroup K
inline FiniteGroup quotient(const FiniteGroup& g, const Subset& k, std::string label = {})
{
    if (!g.is_normal(k))
        throw std::invalid_argument("quotient: subgroup is not normal");
    int n = g.order();
    std::vector<int> coset(n, -1);
    std::vector<int> rep;
    for (int a = 0; a < n; ++a) {
        if (coset[a] >= 0)
            continue;
        int id = static_cast<int>(rep.size());
        rep.push_back(a);
        for (int x : k)
            coset[g.mul(a, x)] = id;
    }
    int q = static_cast<int>(rep.size());
    std::vector<std::uint16_t> t(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            t[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(coset[g.mul(rep[a], rep[b])]);
    return FiniteGroup(q, std::move(t), std::move(label));
}

inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subset& h, std::string label = {})
{
    std::map<int, int> idx;
    for (std::size_t i = 0; i < h.size(); ++i)
        idx[h[i]] = static_cast<int>(i);
    int n = static_cast<int>(h.size());
    std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(idx.at(g.mul(h[a], h[b])));
    return FiniteGroup(n, std::move(t), std::move(label));
}

// every subgroup, by closing cyclic subgroups under joins
inline std::vector<Subset> all_subgroups(const FiniteGroup& g)
{
    std::set<Subset> subs;
    for (int a = 0; a < g.order(); ++a)
        subs.insert(g.closure({a}));
    std::vector<Subset> frontier(subs.begin(), subs.end());
    std::vector<Subset> cyclics = frontier;
    while (!frontier.empty()) {
        std::vector<Subset> next;
        for (auto& s : frontier)
            for (auto& c : cyclics) {
                if (std::includes(s.begin(), s.end(), c.begin(), c.end()))
                    continue;
                std::vector<int> gens(s.begin(), s.end());
                gens.insert(gens.end(), c.begin(), c.end());
                auto j = g.closure(gens);
                if (subs.insert(j).second)
                    next.push_back(j);
            }
        frontier = std::move(next);
    }
    std::vector<Subset> out(subs.begin(), subs.end());
    std::stable_sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
    return out;
}

inline std::vector<Subset> normal_subgroups(const FiniteGroup& g)
{
    std::vector<Subset> out;
    for (auto& s : all_subgroups(g))
        if (g.is_normal(s))
            out.push_back(s);
    return out;
}

// prime factorization of small ints
inline std::vector<std::pair<int, int>> small_factor(int n)
{
    std::vector<std::pair<int, int>> f;
    for (int p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            f.emplace_back(p, e);
    }
    if (n > 1)
        f.emplace_back(n, 1);
    return f;
}

// invariant factors d1 | d2 | ... of an abelian group, read off from p-power torsion counts
inline std::vector<int> abelian_invariants(const FiniteGroup& a)
{
    if (!a.is_abelian())
        throw std::invalid_argument("abelian_invariants: group is not abelian");
    std::vector<std::vector<int>> parts;  // per prime: cyclic p-power orders
    for (auto [p, e] : small_factor(a.order())) {
        std::vector<int> rank;  // rank[k] = log_p #{x : x^{p^k} = 1}
        int pk = 1;
        for (int k = 0; k <= e; ++k) {
            int cnt = 0;
            for (int x = 0; x < a.order(); ++x)
                if (pk % a.elem_order(x) == 0)
                    ++cnt;
            int r = 0;
            while (cnt > 1) {
                cnt /= p;
                ++r;
            }
            rank.push_back(r);
            pk *= p;
        }
        // number of cyclic factors of order >= p^k is rank[k] - rank[k-1]
        std::vector<int> orders;
        pk = p;
        for (int k = 1; k <= e; ++k, pk *= p) {
            int at_least = rank[k] - rank[k - 1];
            int at_least_next = k < e ? rank[k + 1] - rank[k] : 0;
            for (int i = 0; i < at_least - at_least_next; ++i)
                orders.push_back(pk);
        }
        std::sort(orders.begin(), orders.end(), std::greater<int>());
        parts.push_back(orders);
    }
    std::size_t len = 0;
    for (auto& v : parts)
        len = std::max(len, v.size());
    std::vector<int> inv(len, 1);
    for (auto& v : parts)
        for (std::size_t i = 0; i < v.size(); ++i)
            inv[i] *= v[i];
    std::reverse(inv.begin(), inv.end());
    return inv;
}

inline FiniteGroup abelianization_group(const FiniteGroup& g) { return quotient(g, g.derived_subgroup(), "ab"); }

inline std::vector<int> abelianization(const FiniteGroup& g)
{
    if (g.order() == 1)
        return {};
    auto inv = abelian_invariants(abelianization_group(g));
    return inv;
}

// isomorphism invariants; equal signatures are a necessary condition
inline std::vector<int> signature(const FiniteGroup& g)
{
    std::vector<int> s{g.order()};
    std::map<int, int> hist;
    for (int a = 0; a < g.order(); ++a)
        ++hist[g.elem_order(a)];
    for (auto [o, c] : hist) {
        s.push_back(o);
        s.push_back(c);
    }
    s.push_back(-1);
    auto z = g.center();
    s.push_back(static_cast<int>(z.size()));
    std::map<int, int> zh;
    for (int a : z)
        ++zh[g.elem_order(a)];
    for (auto [o, c] : zh) {
        s.push_back(o);
        s.push_back(c);
    }
    s.push_back(-2);
    s.push_back(static_cast<int>(g.derived_subgroup().size()));
    for (int d : abelianization(g))
        s.push_back(d);
    s.push_back(-3);
    // squares and their orders distinguish some p-groups
    std::map<int, int> sq;
    for (int a = 0; a < g.order(); ++a)
        ++sq[g.elem_order(g.mul(a, a))];
    for (auto [o, c] : sq) {
        s.push_back(o);
        s.push_back(c);
    }
    return s;
}

namespace detail {

// extends generator images to a homomorphism on <gens>; empty on conflict
inline Map extend_hom(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
                      const std::vector<int>& imgs)
{
    Map phi(g.order(), -1);
    phi[g.identity()] = h.identity();
    std::vector<int> queue{g.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int x = queue[i];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            int y = g.mul(x, gens[k]);
            int im = h.mul(phi[x], imgs[k]);
            if (phi[y] < 0) {
                phi[y] = im;
                queue.push_back(y);
            } else if (phi[y] != im) {
                return {};
            }
        }
    }
    return phi;
}

inline bool is_hom_on(const FiniteGroup& g, const FiniteGroup& h, const Map& phi, const Subset& dom)
{
    for (int a : dom)
        for (int b : dom)
            if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b]))
                return false;
    return true;
}

// backtracking over generator images; visit returns false to stop
inline void search_maps(const FiniteGroup& g, const FiniteGroup& h, bool injective,
                        const std::function<bool(const Map&)>& visit)
{
    auto gens = g.generators();
    std::vector<int> imgs;
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == gens.size()) {
            Map phi = extend_hom(g, h, gens, imgs);
            if (phi.empty() || !is_hom_on(g, h, phi, g.all()))
                return true;
            if (injective) {
                std::vector<char> seen(h.order(), 0);
                for (int x : phi) {
                    if (seen[x])
                        return true;
                    seen[x] = 1;
                }
            }
            return visit(phi);
        }
        for (int c = 0; c < h.order(); ++c) {
            if (injective ? h.elem_order(c) != g.elem_order(gens[k]) : g.elem_order(gens[k]) % h.elem_order(c) != 0)
                continue;
            imgs.push_back(c);
            // prune: the images so far must define a homomorphism on the generated subgroup
            std::vector<int> pg(gens.begin(), gens.begin() + static_cast<long>(k) + 1);
            Subset sub = g.closure(pg);
            Map part = extend_hom(g, h, pg, imgs);
            bool ok = !part.empty() && is_hom_on(g, h, part, sub);
            if (ok && injective) {
                std::set<int> im;
                for (int x : sub)
                    im.insert(part[x]);
                ok = im.size() == sub.size();
            }
            bool cont = true;
            if (ok)
                cont = rec(k + 1);
            imgs.pop_back();
            if (!cont)
                return false;
        }
        return true;
    };
    rec(0);
}

} // namespace detail

inline bool isomorphic(const FiniteGroup& g, const FiniteGroup& h)
{
    if (g.order() != h.order() || signature(g) != signature(h))
        return false;
    bool found = false;
    detail::search_maps(g, h, true, [&](const Map&) {
        found = true;
        return false;
    });
    return found;
}

inline std::vector<Map> automorphisms(const FiniteGroup& g)
{
    std::vector<Map> out;
    detail::search_maps(g, g, true, [&](const Map& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

inline long automorphism_count(const FiniteGroup& g) { return static_cast<long>(automorphisms(g).size()); }

// second strategy: bijections preserving element orders, filtered by the homomorphism
// property on every pair already assigned
inline long automorphism_count_by_permutations(const FiniteGroup& g)
{
    int n = g.order();
    Map phi(n, -1);
    std::vector<char> used(n, 0);
    phi[g.identity()] = g.identity();
    used[g.identity()] = 1;
    std::vector<int> order;
    for (int a = 0; a < n; ++a)
        if (a != g.identity())
            order.push_back(a);
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == order.size()) {
            if (detail::is_hom_on(g, g, phi, g.all()))
                ++count;
            return;
        }
        int a = order[k];
        for (int c = 0; c < n; ++c) {
            if (used[c] || g.elem_order(c) != g.elem_order(a))
                continue;
            phi[a] = c;
            used[c] = 1;
            bool ok = true;
            for (std::size_t i = 0; i <= k && ok; ++i) {
                int b = order[i];
                int ab = g.mul(a, b), ba = g.mul(b, a);
                if (phi[ab] >= 0 && phi[ab] != g.mul(c, phi[b]))
                    ok = false;
                if (ok && phi[ba] >= 0 && phi[ba] != g.mul(phi[b], c))
                    ok = false;
            }
            if (ok)
                rec(k + 1);
            phi[a] = -1;
            used[c] = 0;
        }
    };
    rec(0);
    return count;
}

// every homomorphism g -> h
inline std::vector<Map> homomorphisms(const FiniteGroup& g, const FiniteGroup& h)
{
    std::vector<Map> out;
    detail::search_maps(g, h, false, [&](const Map& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

inline std::string invariants_label(const std::vector<int>& inv)
{
    if (inv.empty())
        return "C1";
    std::string s;
    for (int d : inv)
        s += (s.empty() ? "C" : "xC") + std::to_string(d);
    return s;
}

} // namespace semiaudit::groups

#endif
