"""The quantum multitorus A = (+)_sigma Poly(T_{theta^(sigma)}) and its Hopf structure.

Basis key ``(sigma, r)`` stands for x_sigma^r = x_{sigma,1}^{r_1} ... x_{sigma,n}^{r_n};
``(sigma, 0)`` is the central projection p_sigma.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import AlgebraElement, BasisAlgebra, TensorAlgebra, expand_slot, tensor
from .errors import DegreeMismatch, IndexOutOfRange, SupportOutsideSubgroup
from .perms import Perm, Subgroup, act, all_perms
from .report import Report
from .scalar import Cyclo, Phase
from .torus import NCTorus, ThetaMatrix, _exp_pair


def theta_sigma(theta: ThetaMatrix, sigma: Perm) -> ThetaMatrix:
    """theta^(sigma)_ij = theta_ji + theta_{sigma^-1(i), sigma^-1(j)}."""
    n = theta.n
    inv = sigma.inverse()
    rows = [
        [theta(j, i) + theta(inv(i), inv(j)) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return ThetaMatrix(n, tuple(tuple(r) for r in rows))


def _unit(n: int, i: int, m: int = 1) -> tuple:
    r = [0] * n
    r[i - 1] = m
    return tuple(r)


class QuantumMultitorus(BasisAlgebra):
    kind = "multi"

    def __init__(self, theta: ThetaMatrix, N: int | None = None):
        self.theta = theta
        self.n = theta.n
        self.N = theta.conductor() if N is None else int(N)
        theta.scaled(self.N)
        self.perms = all_perms(self.n)
        self.e = Perm.identity(self.n)
        self._T = {s: theta_sigma(theta, s).scaled(self.N) for s in self.perms}
        self._T0 = theta.scaled(self.N)
        self._delta_cache: dict = {}
        self._gen_cache: dict = {}

    def __eq__(self, other):
        return isinstance(other, QuantumMultitorus) and self.theta == other.theta and self.N == other.N

    def __hash__(self):
        return hash(("multi", self.theta, self.N))

    def __repr__(self):
        return f"QuantumMultitorus(n={self.n}, theta={self.theta}, N={self.N})"

    # ---- basis structure

    def _mul_keys(self, a, b):
        if a[0] != b[0]:
            return None
        r, s = a[1], b[1]
        return (a[0], tuple(x + y for x, y in zip(r, s))), _exp_pair(self._T[a[0]], self.N, r, s)

    def _star_key(self, a):
        r = a[1]
        return (a[0], tuple(-x for x in r)), _exp_pair(self._T[a[0]], self.N, r, r)

    def format_key(self, key) -> str:
        sigma, r = key
        return f"m[sigma=[{','.join(map(str, sigma))}], r=[{','.join(map(str, r))}]]"

    def component_torus(self, sigma: Perm) -> NCTorus:
        return NCTorus(theta_sigma(self.theta, sigma), self.N)

    # ---- named elements

    def _perm(self, sigma) -> Perm:
        sigma = sigma if isinstance(sigma, Perm) else Perm(sigma)
        if sigma.n != self.n:
            raise DegreeMismatch(f"permutation of degree {sigma.n} for n={self.n}")
        return sigma

    def _vec(self, r) -> tuple:
        r = tuple(int(a) for a in r)
        if len(r) != self.n:
            raise DegreeMismatch(f"exponent of length {len(r)} for n={self.n}")
        return r

    def one(self) -> AlgebraElement:
        z = (0,) * self.n
        return self.element({(s, z): 1 for s in self.perms})

    def monomial(self, sigma, r, coeff=1) -> AlgebraElement:
        return self.basis_element((self._perm(sigma), self._vec(r)), coeff)

    u_monomial = monomial

    def p_sigma(self, sigma) -> AlgebraElement:
        return self.monomial(sigma, (0,) * self.n)

    def x_gen(self, sigma, i: int) -> AlgebraElement:
        self._check_index(i)
        return self.monomial(sigma, _unit(self.n, i))

    def _check_index(self, *idx):
        for i in idx:
            if not 1 <= i <= self.n:
                raise IndexOutOfRange(f"index {i} out of range for n={self.n}")

    def u_gen(self, i: int, k: int) -> AlgebraElement:
        """u_ik = sum over sigma with sigma(k) = i of x_{sigma,i}."""
        self._check_index(i, k)
        ei = _unit(self.n, i)
        return self.element({(s, ei): 1 for s in self.perms if s(k) == i})

    def u_matrix(self) -> list:
        return [[self.u_gen(i, k) for k in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def p_from_generators(self, sigma) -> AlgebraElement:
        """p_sigma = prod_i u_{i,sigma^-1(i)} u_{i,sigma^-1(i)}^*, built from the u_ik."""
        sigma = self._perm(sigma)
        inv = sigma.inverse()
        out = self.one()
        for i in range(1, self.n + 1):
            u = self.u_gen(i, inv(i))
            out = out * u * u.star()
        return out

    def generator_product(self, sigma, r) -> AlgebraElement:
        """u_{1,s^-1(1)}^{r_1} ... u_{n,s^-1(n)}^{r_n} p_sigma, evaluated from the u_ik."""
        sigma, r = self._perm(sigma), self._vec(r)
        inv = sigma.inverse()
        out = self.one()
        for i, ri in enumerate(r, start=1):
            u = self.u_gen(i, inv(i))
            out = out * (u ** ri if ri >= 0 else u.star() ** -ri)
        return out * self.p_from_generators(sigma)

    def component(self, a: AlgebraElement, sigma) -> AlgebraElement:
        sigma = self._perm(sigma)
        T = self.component_torus(sigma)
        return T.element({r: c for (s, r), c in a.terms.items() if s == sigma})

    # ---- Hopf structure

    def tensor_square(self) -> TensorAlgebra:
        return TensorAlgebra(self, self)

    def delta_monomial(self, key) -> AlgebraElement:
        """Closed form: sum_tau psi~_r(tau, sigma) x_tau^r (x) x_{tau^-1 sigma}^{tau^-1 r}."""
        hit = self._delta_cache.get(key)
        if hit is not None:
            return hit
        sigma, r = key
        terms = {}
        one = Cyclo.one(self.N)
        for tau in self.perms:
            ti = tau.inverse()
            e = psi_tilde_exp(self._T0, self.N, r, tau, sigma)
            terms[((tau, r), (ti * sigma, act(ti, r)))] = one.mul_root(e)
        out = AlgebraElement(self.tensor_square(), terms, pruned=True)
        self._delta_cache[key] = out
        return out

    def counit_key(self, key) -> Cyclo:
        return Cyclo.one(self.N) if key[0] == self.e else Cyclo.zero(self.N)

    def coinverse_monomial(self, key) -> AlgebraElement:
        """Antimultiplicative extension of kappa(u_ik) = u_ki^* along
        x_sigma^r = u_{1,s^-1(1)}^{r_1} ... u_{n,s^-1(n)}^{r_n} p_sigma.

        Inside component sigma^-1 the image of u_{i,s^-1(i)}^{r_i} is
        x_{sigma^-1, sigma^-1(i)}^{-r_i}; factors are taken in reverse order.
        """
        sigma, r = key
        inv = sigma.inverse()
        cur = (inv, (0,) * self.n)
        e = 0
        for i in range(self.n, 0, -1):
            if r[i - 1] == 0:
                continue
            res = self._mul_keys(cur, (inv, _unit(self.n, inv(i), -r[i - 1])))
            cur, e = res[0], e + res[1]
        return AlgebraElement(self, {cur: Cyclo.one(self.N).mul_root(e % self.N)}, pruned=True)

    # generator path for the comultiplication

    def _delta_u(self, i: int, k: int, power: int) -> AlgebraElement:
        key = ("u", i, k, power)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        if power == 0:
            out = self.tensor_square().one()
        elif power == 1:
            out = AlgebraElement(self.tensor_square(), {}, pruned=True)
            for j in range(1, self.n + 1):
                out = out + tensor(self.u_gen(i, j), self.u_gen(j, k))
        elif power == -1:
            out = self._delta_u(i, k, 1).star()
        else:
            step = 1 if power > 0 else -1
            out = self._delta_u(i, k, power - step) * self._delta_u(i, k, step)
        self._gen_cache[key] = out
        return out

    def _delta_p(self, sigma: Perm) -> AlgebraElement:
        key = ("p", sigma)
        hit = self._gen_cache.get(key)
        if hit is None:
            inv = sigma.inverse()
            hit = self.tensor_square().one()
            for i in range(1, self.n + 1):
                hit = hit * self._delta_u(i, inv(i), 1) * self._delta_u(i, inv(i), -1)
            self._gen_cache[key] = hit
        return hit

    def delta_monomial_generator_path(self, key) -> AlgebraElement:
        sigma, r = key
        inv = sigma.inverse()
        out = self.tensor_square().one()
        for i, ri in enumerate(r, start=1):
            if ri:
                out = out * self._delta_u(i, inv(i), ri)
        return out * self._delta_p(sigma)


# ---------------------------------------------------------------------------
# phases psi~


def psi_tilde_exp(T, N: int, r, tau: Perm, sigma: Perm) -> int:
    ti, si = tau.inverse(), sigma.inverse()
    n = len(r)
    e = 0
    for i in range(1, n + 1):
        if not r[i - 1]:
            continue
        for j in range(i + 1, n + 1):
            if r[j - 1] and ti(i) > ti(j):
                e += (T[ti(j) - 1][ti(i) - 1] + T[si(i) - 1][si(j) - 1]) * r[i - 1] * r[j - 1]
    return e % N


def psi_tilde(theta: ThetaMatrix, r, tau: Perm, sigma: Perm) -> Phase:
    """prod over i<j with tau^-1(i) > tau^-1(j) of
    (w_{tau^-1(j), tau^-1(i)} w_{sigma^-1(i), sigma^-1(j)})^{r_i r_j}."""
    ti, si = tau.inverse(), sigma.inverse()
    q = 0
    n = theta.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if ti(i) > ti(j):
                q += (theta(ti(j), ti(i)) + theta(si(i), si(j))) * r[i - 1] * r[j - 1]
    return Phase(q)


def psi_tilde_substituted(theta: ThetaMatrix, r, tau: Perm, sigma: Perm) -> Phase:
    """The re-indexed display: prod over i<j with tau(i) > tau(j) of
    (w_ij w_{sigma^-1 tau(j), sigma^-1 tau(i)})^{r_tau(i) r_tau(j)}."""
    st = sigma.inverse() * tau
    q = 0
    n = theta.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if tau(i) > tau(j):
                q += (theta(i, j) + theta(st(j), st(i))) * r[tau(i) - 1] * r[tau(j) - 1]
    return Phase(q)


# ---------------------------------------------------------------------------
# public operations


def _multi(a: AlgebraElement) -> QuantumMultitorus:
    if not isinstance(a.parent, QuantumMultitorus):
        raise TypeError("expected an element of the quantum multitorus")
    return a.parent


def delta(a: AlgebraElement) -> AlgebraElement:
    A = _multi(a)
    out: dict = {}
    for key, c in a.terms.items():
        for k2, c2 in A.delta_monomial(key).terms.items():
            v = c * c2
            prev = out.get(k2)
            out[k2] = v if prev is None else prev + v
    return AlgebraElement(A.tensor_square(), {k: v for k, v in out.items() if v}, pruned=True)


def delta_generator_path(a: AlgebraElement) -> AlgebraElement:
    A = _multi(a)
    out = A.tensor_square().zero()
    for key, c in a.terms.items():
        out = out + A.delta_monomial_generator_path(key).scale(c)
    return out


def counit(a: AlgebraElement) -> Cyclo:
    A = _multi(a)
    out = Cyclo.zero(A.N)
    for (s, _), c in a.terms.items():
        if s == A.e:
            out = out + c
    return out


def coinverse(a: AlgebraElement) -> AlgebraElement:
    A = _multi(a)
    out = A.zero()
    for key, c in a.terms.items():
        out = out + A.coinverse_monomial(key).scale(c)
    return out


def delta_left_id(t: AlgebraElement) -> AlgebraElement:
    """(Delta (x) id) on a two-fold tensor."""
    A = t.parent.factors[0]
    return expand_slot(t, 0, A.delta_monomial, TensorAlgebra(A, A, t.parent.factors[1]))


def id_delta_right(t: AlgebraElement) -> AlgebraElement:
    B = t.parent.factors[1]
    return expand_slot(t, 1, B.delta_monomial, TensorAlgebra(t.parent.factors[0], B, B))


def counit_left(t: AlgebraElement) -> AlgebraElement:
    A, B = t.parent.factors
    return expand_slot(t, 0, A.counit_key, B)


def counit_right(t: AlgebraElement) -> AlgebraElement:
    A, B = t.parent.factors
    return expand_slot(t, 1, B.counit_key, A)


def antipode_left(t: AlgebraElement) -> AlgebraElement:
    """m (kappa (x) id) on a two-fold tensor."""
    A, B = t.parent.factors
    out = A.zero()
    for (a, b), c in t.terms.items():
        out = out + (A.coinverse_monomial(a) * B.basis_element(b)).scale(c)
    return out


def antipode_right(t: AlgebraElement) -> AlgebraElement:
    """m (id (x) kappa) on a two-fold tensor."""
    A, B = t.parent.factors
    out = A.zero()
    for (a, b), c in t.terms.items():
        out = out + (A.basis_element(a) * B.coinverse_monomial(b)).scale(c)
    return out


# ---------------------------------------------------------------------------
# subgroup algebras A_H


def restrict_AH(h: Subgroup, a: AlgebraElement) -> AlgebraElement:
    A = _multi(a)
    return AlgebraElement(A, {k: c for k, c in a.terms.items() if k[0] in h}, pruned=True)


def p_H(A: QuantumMultitorus, h: Subgroup) -> AlgebraElement:
    z = (0,) * A.n
    return A.element({(s, z): 1 for s in h})


def delta_H(h: Subgroup, a: AlgebraElement) -> AlgebraElement:
    """Comultiplication of A_H: Delta followed by restriction of both legs."""
    t = delta(restrict_AH(h, a))
    return AlgebraElement(
        t.parent, {k: c for k, c in t.terms.items() if k[0][0] in h and k[1][0] in h}, pruned=True
    )


def u_H_gen(A: QuantumMultitorus, h: Subgroup, i: int, k: int) -> AlgebraElement:
    return restrict_AH(h, A.u_gen(i, k))


def iota_H(A: QuantumMultitorus, h: Subgroup, f: dict) -> AlgebraElement:
    """C(H) -> A_H, delta_sigma -> p_sigma."""
    z = (0,) * A.n
    for s in f:
        if s not in h:
            raise SupportOutsideSubgroup(f"{list(s)} is not in the subgroup")
    return A.element({(Perm(s), z): c for s, c in f.items()})


def pi_H_to_torus(h: Subgroup, a: AlgebraElement, convention: str = "restriction") -> AlgebraElement:
    """A_H -> Poly(T_0^n).

    ``restriction`` (default) keeps the identity component: x_sigma^r -> delta_{sigma,e} x^r.
    ``literal`` sends every x_sigma^r with sigma in H to x^r; it is linear but not
    multiplicative (it maps each p_sigma to 1), and is kept for comparison.
    """
    A = _multi(a)
    for s, _ in a.terms:
        if s not in h:
            raise SupportOutsideSubgroup(f"component {list(s)} lies outside the subgroup")
    T0 = NCTorus(ThetaMatrix.zero(A.n), A.N)
    out: dict = {}
    for (s, r), c in a.terms.items():
        if convention == "restriction" and s != A.e:
            continue
        if convention not in ("restriction", "literal"):
            raise ValueError(f"unknown convention {convention!r}")
        out[r] = out.get(r, Cyclo.zero(A.N)) + c
    return T0.element(out)


def quotient_to_CH(h: Subgroup, a: AlgebraElement) -> dict:
    """Left adjoint direction for the exact sequence: the C(H)-part of an element of span{p_sigma}."""
    return {k[0]: c for k, c in a.terms.items() if not any(k[1])}


# ---------------------------------------------------------------------------
# relation suite


@lru_cache(maxsize=None)
def _algebra(theta: ThetaMatrix, N: int | None) -> QuantumMultitorus:
    return QuantumMultitorus(theta, N)


def check_relations(theta: ThetaMatrix, n: int | None = None, N: int | None = None) -> Report:
    if n is not None and n != theta.n:
        raise DegreeMismatch(f"theta has degree {theta.n}, asked for n={n}")
    A = _algebra(theta, N)
    n = A.n
    rep = Report("relations")
    U = A.u_matrix()
    Us = [[U[i][k].star() for k in range(n)] for i in range(n)]
    one = A.one()
    w = lambda i, j: Phase(theta(i, j)).to_cyclo(A.N)  # noqa: E731
    rng = range(1, n + 1)

    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    u = lambda a, b: U[a - 1][b - 1]  # noqa: E731
                    lhs = u(i, k) * u(j, l) + u(j, k) * u(i, l) * w(j, i)
                    rhs = u(i, l) * u(j, k) * w(k, l) + u(j, l) * u(i, k) * (w(j, i) * w(k, l))
                    rep.expect_zero(
                        "quadratic exchange: u_ik u_jl + w_ji u_jk u_il = w_kl u_il u_jk + w_ji w_kl u_jl u_ik",
                        {"i": i, "j": j, "k": k, "l": l}, lhs - rhs)
    for k in rng:
        for l in rng:
            delta_kl = one if k == l else A.zero()
            s_a = sum((U[i - 1][k - 1] * Us[i - 1][l - 1] for i in rng), A.zero())
            rep.expect_zero("sum_i u_ik u_il^* = delta_kl", {"k": k, "l": l}, s_a - delta_kl)
            s_b = sum((Us[i - 1][l - 1] * U[i - 1][k - 1] for i in rng), A.zero())
            rep.expect_zero("sum_i u_il^* u_ik = delta_kl", {"k": k, "l": l}, s_b - delta_kl)
    for i in rng:
        for j in rng:
            if i == j:
                continue
            for k in rng:
                rep.expect_zero("u_jk u_ik^* = 0 (i != j)", {"i": i, "j": j, "k": k},
                                U[j - 1][k - 1] * Us[i - 1][k - 1])
                rep.expect_zero("u_ik^* u_jk = 0 (i != j)", {"i": i, "j": j, "k": k},
                                Us[i - 1][k - 1] * U[j - 1][k - 1])
    for i in rng:
        for j in rng:
            d = one if i == j else A.zero()
            uu = sum((U[i - 1][k - 1] * Us[j - 1][k - 1] for k in rng), A.zero())
            rep.expect_zero("U U^* = 1", {"i": i, "j": j}, uu - d)
            uu = sum((Us[k - 1][i - 1] * U[k - 1][j - 1] for k in rng), A.zero())
            rep.expect_zero("U^* U = 1", {"i": i, "j": j}, uu - d)
            uu = sum((U[k - 1][i - 1] * Us[k - 1][j - 1] for k in rng), A.zero())
            rep.expect_zero("U^T (U^T)^* = 1", {"i": i, "j": j}, uu - d)
            uu = sum((Us[i - 1][k - 1] * U[j - 1][k - 1] for k in rng), A.zero())
            rep.expect_zero("(U^T)^* U^T = 1", {"i": i, "j": j}, uu - d)

    total = A.zero()
    for s in A.perms:
        rep.expect_zero("p_sigma from generators equals basis projection", {"sigma": s},
                        A.p_from_generators(s) - A.p_sigma(s))
        total = total + A.p_sigma(s)
    rep.expect_zero("sum_sigma p_sigma = 1", {}, total - one)
    for s in A.perms:
        for i in rng:
            rep.expect_zero("x_{sigma,i} = u_{i,sigma^-1(i)} p_sigma", {"sigma": s, "i": i},
                            U[i - 1][s.inverse()(i) - 1] * A.p_sigma(s) - A.x_gen(s, i))
    return rep


def check_monomial_identification(A: QuantumMultitorus, bound: int, report: Report | None = None) -> Report:
    """u_sigma^r (explicit generator product) equals the basis monomial (sigma, r)."""
    import itertools

    rep = report or Report("relations")
    for s in A.perms:
        for r in itertools.product(range(-bound, bound + 1), repeat=A.n):
            rep.expect_zero("generator product u_sigma^r equals basis monomial", {"sigma": s, "r": r},
                            A.generator_product(s, r) - A.monomial(s, r))
    return rep


def is_commutative_on(elements) -> bool:
    return all(a * b == b * a for a in elements for b in elements)
