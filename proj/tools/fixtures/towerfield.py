"""Exact arithmetic in Q(zeta_l)(m_1^(1/l), ..., m_r^(1/l)) used to generate the
shipped field fixtures: primitive generators, their minimal polynomials, and
coordinates of known units in the generator's power basis."""
from fractions import Fraction as Fr
import itertools


class Tower:
    def __init__(self, ell, radicands):
        self.ell = ell
        self.rad = list(radicands)
        self.cyc_deg = ell - 1
        shape = [self.cyc_deg] + [ell] * len(self.rad)
        self.keys = list(itertools.product(*[range(s) for s in shape]))
        self.index = {k: i for i, k in enumerate(self.keys)}
        self.n = len(self.keys)

    # elements are dicts key -> Fraction
    def zero(self):
        return {}

    def const(self, c):
        return {self.keys[0]: Fr(c)} if c else {}

    def zeta(self, power=1):
        return self._reduce_cyc({(power,) + (0,) * len(self.rad): Fr(1)})

    def radical(self, i, power=1):
        k = [0] * (1 + len(self.rad))
        k[1 + i] = power
        return self._reduce_rad({tuple(k): Fr(1)})

    def _reduce_rad(self, e):
        out = {}
        for k, c in e.items():
            k = list(k)
            for i in range(len(self.rad)):
                while k[1 + i] >= self.ell:
                    k[1 + i] -= self.ell
                    c *= self.rad[i]
            out[tuple(k)] = out.get(tuple(k), 0) + c
        return {k: c for k, c in out.items() if c}

    def _reduce_cyc(self, e):
        # zeta^(ell-1) = -(1 + zeta + ... + zeta^(ell-2)); zeta^ell = 1
        out = {}
        work = list(e.items())
        while work:
            k, c = work.pop()
            z = k[0] % self.ell
            if z == self.ell - 1:
                for j in range(self.ell - 1):
                    work.append(((j,) + k[1:], -c))
                continue
            kk = (z,) + k[1:]
            out[kk] = out.get(kk, 0) + c
        return {k: c for k, c in out.items() if c}

    def add(self, a, b):
        out = dict(a)
        for k, c in b.items():
            out[k] = out.get(k, 0) + c
        return {k: c for k, c in out.items() if c}

    def scale(self, a, s):
        return {k: c * s for k, c in a.items() if c * s}

    def sub(self, a, b):
        return self.add(a, self.scale(b, -1))

    def mul(self, a, b):
        out = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                out[k] = out.get(k, 0) + ca * cb
        return self._reduce_cyc(self._reduce_rad(out))

    def vec(self, a):
        v = [Fr(0)] * self.n
        for k, c in a.items():
            v[self.index[k]] = c
        return v

    def from_vec(self, v):
        return {self.keys[i]: c for i, c in enumerate(v) if c}

    def inv(self, a):
        # solve a * x = 1 with the multiplication matrix
        cols = [self.vec(self.mul(a, {k: Fr(1)})) for k in self.keys]
        m = [[cols[j][i] for j in range(self.n)] for i in range(self.n)]
        rhs = self.vec(self.const(1))
        return self.from_vec(solve(m, rhs))

    def power(self, a, e):
        r = self.const(1)
        for _ in range(e):
            r = self.mul(r, a)
        return r


def solve(m, rhs):
    n = len(m)
    a = [row[:] + [rhs[i]] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def power_basis(tower, theta):
    """Returns (minpoly coefficients low->high, function mapping tower elements
    to theta-coordinates). Raises if theta is not primitive."""
    n = tower.n
    pows = [tower.const(1)]
    for _ in range(n):
        pows.append(tower.mul(pows[-1], theta))
    cols = [tower.vec(p) for p in pows[:n]]
    m = [[cols[j][i] for j in range(n)] for i in range(n)]
    c = solve(m, tower.vec(pows[n]))
    minpoly = [-x for x in c] + [Fr(1)]

    def coords(elem):
        return solve(m, tower.vec(elem))

    return minpoly, coords
