"""Exact unitary irreducible representations of S_1, S_2, S_3 and of Young subgroups.

Young subgroup irreps are outer tensor products of block irreps.  Blocks of size
four or more need a user-supplied table (JSON), validated on load.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import CatalogMissing, ConductorMismatch
from .linalg import identity, is_unitary, kron, mat_mul
from .perms import Perm, Subgroup, all_perms, young_blocks
from .scalar import Cyclo, embed_cyclo

CATALOG_CONDUCTOR = 3  # the S_3 standard irrep lives in Q(zeta_3)


@dataclass(frozen=True)
class GroupRep:
    subgroup: Subgroup
    dim: int
    matrices: tuple  # tuple of (Perm, matrix) pairs, sorted by Perm
    label: tuple
    N: int

    def __call__(self, sigma: Perm):
        return self._table()[sigma]

    def _table(self) -> dict:
        return _rep_table(self)

    def entry(self, sigma: Perm, j: int, i: int) -> Cyclo:
        """<e_j, v(sigma) e_i> with 0-based j, i."""
        return self._table()[sigma][j][i]

    def check(self) -> list[str]:
        """Homomorphism, identity and unitarity failures (empty when valid)."""
        errs = []
        tab = self._table()
        e = Perm.identity(self.subgroup.n)
        if tab[e] != identity(self.dim, self.N):
            errs.append("v(e) is not the identity")
        for a in self.subgroup:
            if not is_unitary(tab[a], self.N):
                errs.append(f"v({list(a)}) is not unitary")
            for b in self.subgroup:
                if mat_mul(tab[a], tab[b], self.N) != tab[a * b]:
                    errs.append(f"v({list(a)}) v({list(b)}) != v({list(a * b)})")
        return errs

    def character(self, sigma: Perm) -> Cyclo:
        m = self._table()[sigma]
        out = Cyclo.zero(self.N)
        for k in range(self.dim):
            out = out + m[k][k]
        return out


@lru_cache(maxsize=None)
def _rep_table(rep: GroupRep) -> dict:
    return dict(rep.matrices)


# ---------------------------------------------------------------------------
# symmetric groups of small degree


def _generate(n: int, gens: dict, N: int) -> dict:
    """Close a generator assignment {perm: matrix} into a full table by BFS."""
    e = Perm.identity(n)
    d = len(next(iter(gens.values())))
    table = {e: identity(d, N)}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for s, m in gens.items():
                h = s * g
                if h not in table:
                    table[h] = mat_mul(m, table[g], N)
                    nxt.append(h)
        frontier = nxt
    return table


def _embed_matrix(m, N: int):
    return tuple(tuple(embed_cyclo(x, N) for x in row) for row in m)


def symmetric_irreps(k: int, N: int, user_tables=None) -> list[tuple[str, dict]]:
    """(label, table) pairs for S_k in catalog order."""
    if user_tables and k in user_tables:
        return [(lab, {p: _embed_matrix(m, N) for p, m in tab.items()}) for lab, tab in user_tables[k]]
    one = Cyclo.one(N)
    perms = all_perms(k)
    if k <= 3:
        if k == 1:
            return [("triv", {perms[0]: ((one,),)})]
        out = [
            ("triv", {p: ((one,),) for p in perms}),
            ("sign", {p: ((one * p.sign(),),) for p in perms}),
        ]
        if k == 3:
            if N % 3:
                raise ConductorMismatch(f"the S_3 standard irrep needs 3 | N, got N={N}")
            w = Cyclo.root(N, N // 3)
            zero = Cyclo.zero(N)
            c = Perm((2, 3, 1))
            t = Perm((2, 1, 3))
            gens = {c: ((w, zero), (zero, w * w)), t: ((zero, one), (one, zero))}
            out.append(("std", _generate(3, gens, N)))
        return out
    raise CatalogMissing(
        f"no irreducible representations of S_{k} in the catalog; supply a table with "
        f"'irrep_table = <file.json>' in the config (see README)"
    )


def _block_perm(sigma: Perm, block) -> Perm:
    pos = {b: idx for idx, b in enumerate(block, start=1)}
    return Perm._trusted(pos[sigma(b)] for b in block)


def young_irreps(h: Subgroup, r, N: int, user_tables=None) -> list[GroupRep]:
    """Irreps of the stabilizer of r, which is the Young subgroup of the equal-entry blocks."""
    blocks = young_blocks(r)
    per_block = [symmetric_irreps(len(b), N, user_tables) for b in blocks]
    out = []
    for choice in itertools.product(*per_block):
        label = tuple(lab for lab, _ in choice)
        mats = []
        for s in h:
            m = ((Cyclo.one(N),),)
            for b, (_, tab) in zip(blocks, choice):
                m = kron(m, tab[_block_perm(s, b)], N)
            mats.append((s, m))
        dim = len(mats[0][1])
        out.append(GroupRep(h, dim, tuple(mats), label, N))
    return out


def trivial_rep(h: Subgroup, N: int) -> GroupRep:
    one = Cyclo.one(N)
    return GroupRep(h, 1, tuple((s, ((one,),)) for s in h), ("triv",), N)


# ---------------------------------------------------------------------------
# user tables


def load_irrep_table(path: str, N: int) -> dict:
    """JSON: {"degree": k, "irreps": [{"label": str, "generators": {"[2,1,3,4]": [[entry,...],...], ...}}]}.

    Entries are scalar strings in the expression grammar (e.g. "1/2", "-1/2*zeta(3)^1").
    Tables are closed under the generators, then checked for homomorphism and unitarity.
    """
    from .parser import parse_scalar

    with open(path) as fh:
        doc = json.load(fh)
    k = int(doc["degree"])
    out = []
    for item in doc["irreps"]:
        gens = {}
        for key, m in item["generators"].items():
            p = Perm(json.loads(key))
            if p.n != k:
                raise ValueError(f"generator {key} has degree {p.n}, expected {k}")
            gens[p] = tuple(tuple(parse_scalar(str(x), N) for x in row) for row in m)
        table = _generate(k, gens, N)
        if len(table) != len(all_perms(k)):
            raise ValueError(f"generators of irrep {item['label']!r} do not generate S_{k}")
        rep = GroupRep(Subgroup(k, tuple(all_perms(k)), check=False), len(next(iter(gens.values()))),
                       tuple(sorted(table.items())), (item["label"],), N)
        errs = rep.check()
        if errs:
            raise ValueError(f"irrep {item['label']!r} invalid: {errs[0]}")
        out.append((item["label"], table))
    return {k: out}
