"""Phase cocycles attached to an integer vector r: vartheta_r, psi_r, psi~_r, phi_r, chi_r."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import AlgebraElement, tensor
from .errors import NotInStabilizer
from .multitorus import QuantumMultitorus, delta_H, psi_tilde
from .perms import Perm, Subgroup, act, all_perms, stabilizer
from .report import Report
from .scalar import Phase
from .torus import ThetaMatrix


def theta_cocycle(r, theta: ThetaMatrix, sigma: Perm, tau: Perm) -> Phase:
    """vartheta_r(sigma, tau): product over i<j with sigma(i) > sigma(j) of
    w_{tau^-1(j), tau^-1(i)}^{r_sigma(i) r_sigma(j)}."""
    ti = tau.inverse()
    q = Fraction(0)
    for i, j in sigma.inversions():
        a, b = sigma(i), sigma(j)
        q += theta(ti(j), ti(i)) * r[a - 1] * r[b - 1]
    return Phase(q)


def psi(r, theta: ThetaMatrix, sigma: Perm, tau: Perm) -> Phase:
    """psi_r(sigma, tau) = conj(vartheta_r(sigma, e)) vartheta_r(sigma, tau)."""
    e = Perm.identity(theta.n)
    return theta_cocycle(r, theta, sigma, e).conj() * theta_cocycle(r, theta, sigma, tau)


def psi_tilde_via_theta(r, theta: ThetaMatrix, sigma: Perm, tau: Perm) -> Phase:
    """conj(vartheta_r(sigma, e)) vartheta_r(sigma, sigma^-1 tau)."""
    return psi(r, theta, sigma, sigma.inverse() * tau)


def phi(r, theta: ThetaMatrix, sigma: Perm) -> Phase:
    if act(sigma, tuple(r)) != tuple(r):
        raise NotInStabilizer(f"{list(sigma)} does not fix {list(r)}")
    return theta_cocycle(r, theta, sigma, Perm.identity(theta.n)).conj()


@dataclass
class CocycleTable:
    r: tuple
    theta: ThetaMatrix
    values: dict = field(default_factory=dict)

    @classmethod
    def build(cls, r, theta: ThetaMatrix) -> CocycleTable:
        r = tuple(r)
        perms = all_perms(theta.n)
        vals = {(s, t): theta_cocycle(r, theta, s, t) for s in perms for t in perms}
        return cls(r, theta, vals)

    def vartheta(self, s, t) -> Phase:
        return self.values[(s, t)]

    def psi(self, s, t) -> Phase:
        e = Perm.identity(self.theta.n)
        return self.values[(s, e)].conj() * self.values[(s, t)]

    def psi_tilde(self, t, s) -> Phase:
        return self.psi(t, t.inverse() * s)

    def phi(self, s) -> Phase:
        if s not in stabilizer(self.r):
            raise NotInStabilizer(f"{list(s)} does not fix {list(self.r)}")
        return self.values[(s, Perm.identity(self.theta.n))].conj()


def chi_character(r, A: QuantumMultitorus) -> AlgebraElement:
    """chi_r = sum over sigma in H_r of phi_r(sigma) u_sigma^r."""
    r = tuple(r)
    h = stabilizer(r)
    return A.element({(s, r): phi(r, A.theta, s).to_cyclo(A.N) for s in h})


def check_cocycles(theta: ThetaMatrix, vectors, A: QuantumMultitorus | None = None) -> Report:
    rep = Report("cocycles")
    n = theta.n
    perms = all_perms(n)
    e = Perm.identity(n)
    for r in vectors:
        r = tuple(r)
        tab = CocycleTable.build(r, theta)
        h: Subgroup = stabilizer(r)
        ok, bad = True, None
        for s in h:
            for t in perms:
                for rho in perms:
                    if tab.vartheta(s * t, rho) != tab.vartheta(s, t * rho) * tab.vartheta(t, rho):
                        ok, bad = False, (s, t, rho)
                        break
                if not ok:
                    break
            if not ok:
                break
        rep.add("vartheta(s t, rho) = vartheta(s, t rho) vartheta(t, rho) for s in H_r", {"r": r}, ok,
                None if ok else f"sigma={list(bad[0])} tau={list(bad[1])} rho={list(bad[2])}")

        ok = all(tab.psi_tilde(t, s) == psi_tilde(theta, r, t, s) for t in perms for s in perms)
        rep.add("psi~ from vartheta equals the inversion-product psi~", {"r": r}, ok)

        ok = all(tab.phi(s) * tab.phi(t) == tab.phi(s * t) * tab.psi(s, t) for s in h for t in h)
        rep.add("phi(s) phi(t) = phi(s t) psi(s, t) on H_r", {"r": r}, ok)

        ok = all(
            tab.psi(g, k) * tab.psi(g * k, l) == tab.psi(g, k * l) * tab.psi(k, l)
            for g in h for k in h for l in h
        )
        norm = all(tab.psi(g, e).is_trivial() and tab.psi(e, g).is_trivial() for g in h)
        rep.add("psi_r is a 2-cocycle on H_r", {"r": r}, ok)
        rep.add("psi_r is normalized", {"r": r}, norm)
        rep.add("vartheta(e, tau) = 1 and phi(e) = 1", {"r": r},
                all(tab.vartheta(e, t).is_trivial() for t in perms) and tab.phi(e).is_trivial())

        if A is not None:
            chi = chi_character(r, A)
            rep.expect_zero("Delta_H(chi_r) = chi_r (x) chi_r", {"r": r}, delta_H(h, chi) - tensor(chi, chi))
    return rep
