"""Haar state of the quantum symmetry group and its coaction on the torus."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .algebra import AlgebraElement, TensorAlgebra, expand_slot, tensor
from .cocycles import theta_cocycle
from .errors import ThetaMismatch
from .multitorus import (
    QuantumMultitorus,
    coinverse,
    id_delta_right,
    psi_tilde_exp,
)
from .perms import act
from .report import Report
from .scalar import Cyclo
from .torus import NCTorus, filtration_index, laplacian, trace_phi


def haar_key(A: QuantumMultitorus, key) -> Cyclo:
    return Cyclo.from_rational(A.N, Fraction(1, math.factorial(A.n))) if not any(key[1]) else Cyclo.zero(A.N)


def haar(a: AlgebraElement) -> Cyclo:
    A: QuantumMultitorus = a.parent
    out = Cyclo.zero(A.N)
    w = Fraction(1, math.factorial(A.n))
    for (_, r), c in a.terms.items():
        if not any(r):
            out = out + c * w
    return out


def _monomials(A: QuantumMultitorus, bound: int):
    for s in A.perms:
        for r in itertools.product(range(-bound, bound + 1), repeat=A.n):
            yield s, r


def check_haar_invariance(A: QuantumMultitorus, degree_bound: int, samples=(), report=None) -> Report:
    """Both invariance identities on every monomial; traciality and h o kappa = h on ``samples``
    (pairs of elements)."""
    rep = report or Report("haar")
    one = A.one()
    rep.add("h(1) = 1", {}, haar(one) == 1)
    for s, r in _monomials(A, degree_bound):
        key = (s, r)
        t = A.delta_monomial(key)
        hv = haar_key(A, key)
        left = expand_slot(t, 0, lambda k: haar_key(A, k), A)
        right = expand_slot(t, 1, lambda k: haar_key(A, k), A)
        rep.expect_zero("(h (x) id) Delta(x) = h(x) 1", {"sigma": s, "r": r}, left - one.scale(hv))
        rep.expect_zero("(id (x) h) Delta(x) = h(x) 1", {"sigma": s, "r": r}, right - one.scale(hv))
        expected = Fraction(1, math.factorial(A.n)) if not any(r) else 0
        rep.add("h(x_sigma^r) = delta_{r,0}/n!", {"sigma": s, "r": r}, hv == expected)
    for idx, (a, b) in enumerate(samples):
        d = haar(a * b) - haar(b * a)
        rep.add("h(ab) = h(ba)", {"sample": idx}, not d, d if d else None)
        d = haar(coinverse(a)) - haar(a)
        rep.add("h(kappa(a)) = h(a)", {"sample": idx}, not d, d if d else None)
        if a:
            v = haar(a.star() * a)
            rep.add("h(a^* a) > 0 for a != 0", {"sample": idx}, bool(v) and v.to_complex().real > 0, v)
    return rep


# ---------------------------------------------------------------------------
# coaction


def coaction_target(T: NCTorus, A: QuantumMultitorus) -> TensorAlgebra:
    if T.theta != A.theta or T.N != A.N:
        raise ThetaMismatch("torus and quantum group must share theta and conductor")
    return TensorAlgebra(T, A)


class Coaction:
    """alpha(x_k) = sum_i x_i (x) u_ik, extended multiplicatively, with cached generator powers."""

    def __init__(self, T: NCTorus, A: QuantumMultitorus):
        self.T, self.A = T, A
        self.target = coaction_target(T, A)
        self._cache: dict = {}

    def gen_power(self, k: int, m: int) -> AlgebraElement:
        hit = self._cache.get((k, m))
        if hit is not None:
            return hit
        if m == 0:
            out = self.target.one()
        elif m == 1:
            out = self.target.zero()
            for i in range(1, self.T.n + 1):
                out = out + tensor(self.T.gen(i), self.A.u_gen(i, k))
        elif m == -1:
            out = self.gen_power(k, 1).star()
        else:
            step = 1 if m > 0 else -1
            out = self.gen_power(k, m - step) * self.gen_power(k, step)
        self._cache[(k, m)] = out
        return out

    def monomial(self, r) -> AlgebraElement:
        hit = self._cache.get(("mono", r))
        if hit is None:
            hit = self.target.one()
            for k, rk in enumerate(r, start=1):
                if rk:
                    hit = hit * self.gen_power(k, rk)
            self._cache[("mono", r)] = hit
        return hit

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        if a.parent != self.T:
            raise ThetaMismatch("element does not belong to the coacted torus")
        out = self.target.zero()
        for r, c in a.terms.items():
            out = out + self.monomial(r).scale(c)
        return out


def alpha(a: AlgebraElement, A: QuantumMultitorus) -> AlgebraElement:
    return Coaction(a.parent, A)(a)


def alpha_closed_form(A: QuantumMultitorus, r, phi_variant: str = "vartheta") -> AlgebraElement:
    """sum_tau phi_r(tau) psi~_r(tau, e) x^{tau^-1 r} (x) x_{tau^-1}^{tau^-1 r}.

    ``phi_variant``: ``vartheta`` uses conj(vartheta_r(tau, e)) for every tau;
    ``reorder`` uses the phase of x_{tau^-1(1)}^{r_1} ... x_{tau^-1(n)}^{r_n} = phase * x^{tau^-1 r}.
    """
    r = tuple(r)
    T = NCTorus(A.theta, A.N)
    target = TensorAlgebra(T, A)
    terms: dict = {}
    one = Cyclo.one(A.N)
    for tau in A.perms:
        ti = tau.inverse()
        tr = act(ti, r)
        e = psi_tilde_exp(A._T0, A.N, r, tau, A.e)
        if phi_variant == "vartheta":
            e += theta_cocycle(r, A.theta, tau, A.e).conj().exponent(A.N)
        elif phi_variant == "reorder":
            e += _word_phase(A, r, ti)
        else:
            raise ValueError(phi_variant)
        key = (tr, (ti, tr))
        terms[key] = terms.get(key, Cyclo.zero(A.N)) + one.mul_root(e % A.N)
    return AlgebraElement(target, {k: c for k, c in terms.items() if c}, pruned=True)


def _word_phase(A: QuantumMultitorus, r, ti) -> int:
    """Exponent k with x_{ti(1)}^{r_1} ... x_{ti(n)}^{r_n} = zeta^k x^{ti r}."""
    T = A._T0
    e = 0
    n = len(r)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = ti(i + 1), ti(j + 1)
            if a > b:
                e += T[a - 1][b - 1] * r[i] * r[j]
    return e % A.N


def check_coaction(A: QuantumMultitorus, degree_bound: int, pq_bound: int = 3, report=None) -> Report:
    rep = report or Report("coaction")
    T = NCTorus(A.theta, A.N)
    al = Coaction(T, A)
    n = A.n
    one_T = T.one()
    rep.expect_zero("alpha(1) = 1 (x) 1", {}, al(one_T) - al.target.one())

    # homomorphism safety on the defining relations
    for i in range(1, n + 1):
        xi = T.gen(i)
        rep.expect_zero("alpha(x_i) alpha(x_i)^* = 1 (x) 1", {"i": i}, al(xi) * al(xi).star() - al.target.one())
        rep.expect_zero("alpha(x_i)^* alpha(x_i) = 1 (x) 1", {"i": i}, al(xi).star() * al(xi) - al.target.one())
        for j in range(1, n + 1):
            wij = Cyclo.one(A.N).mul_root(A._T0[i - 1][j - 1])
            lhs = al(T.gen(i)) * al(T.gen(j))
            rhs = (al(T.gen(j)) * al(T.gen(i))).scale(wij)
            rep.expect_zero("alpha(x_i) alpha(x_j) = w_ij alpha(x_j) alpha(x_i)", {"i": i, "j": j}, lhs - rhs)
    # Podles identity
    for k in range(1, n + 1):
        acc = al.target.zero()
        for i in range(1, n + 1):
            acc = acc + al(T.gen(i)) * tensor(one_T, A.u_gen(k, i).star())
        rep.expect_zero("sum_i alpha(x_i)(1 (x) u_ki^*) = x_k (x) 1", {"k": k}, acc - tensor(T.gen(k), A.one()))

    for r in itertools.product(range(-degree_bound, degree_bound + 1), repeat=n):
        x = T.monomial(r)
        ax = al(x)
        params = {"r": r}
        lhs = expand_slot(ax, 0, lambda s: al.monomial(s), TensorAlgebra(T, A, A))
        rhs = id_delta_right(ax)
        rep.expect_zero("(alpha (x) id) alpha = (id (x) Delta) alpha", params, lhs - rhs)
        # degree transport
        degs = {k[0] for k in ax.terms}
        perm_images = {act(s, r) for s in A.perms}
        rep.add("alpha(x^r) output degrees are permutation images of r", params, degs <= perm_images,
                None if degs <= perm_images else sorted(degs - perm_images))
        fi = filtration_index(r)
        if fi.p + fi.q <= pq_bound:
            ok = all(filtration_index(d) == fi for d in degs)
            rep.add("alpha(V_{p,q}) in V_{p,q} (x) A", {"r": r, "p": fi.p, "q": fi.q}, ok)
        lhs = expand_slot(ax, 0, lambda s: laplacian(T.monomial(s)), TensorAlgebra(T, A))
        rep.expect_zero("(L (x) id) alpha = alpha L", params, lhs - al(laplacian(x)))
        # invariance of the trace
        hx = expand_slot(ax, 1, lambda k: haar_key(A, k), T)
        rep.expect_zero("(id (x) h) alpha(x) = phi(x) 1", params, hx - one_T.scale(trace_phi(x)))
        # closed form from the expansion over tau
        for variant in ("vartheta", "reorder"):
            d = alpha_closed_form(A, r, variant) - ax
            rep.add(f"alpha(x^r) closed form over tau [{variant} phase]", params, not d,
                    d if d else None, informational=True)
    return rep
