"""Synor complexes: minimal strictly graded skeletons of order complexes.

An element x of a poset P is an i-synor when the order complex of the
elements strictly below x has nonzero reduced homology in degree i - 1;
minimal elements are 0-synors because the empty poset has one-dimensional
homology in degree -1.  A synor complex S(P) is a chain complex with a
distinguished basis graded by P: one generator of dimension -1 (the empty
generator), and for each element x as many dimension-i generators as the
rank of H_{i-1} of the part of S(P) below x.  It comes with an injective
graded chain map phi into the order-chain complex: the generator x star
zeta maps to x prepended to phi(zeta).  Restricting to any order ideal
preserves homology, which is checked against the simplicial side in the
test suite.

The construction processes elements along a fixed linear extension and
chooses echelon-deterministic cycle bases, so a complex is reproducible
run to run.

The module also houses the verification toolkit built on top of the
complex: prefix representations of a generator's image, coefficient-sum
brackets, the deterministic retraction rho from order chains to synor
chains, and the relative-homology comparison of chains modulo an ideal.
"""

from __future__ import annotations

import threading
from typing import NamedTuple

from .algebra import DimensionError, DomainError, Monomial, ValidationError
from .chains import (FormalChain, boundary, boundary_key, concat,
                     graded_component, homology as simplicial_homology)
from .linalg import HomologyBasis, Reducer, homology_of_complex, solve
from .poset import Poset


class Generator(NamedTuple):
    """A basis generator of a synor complex, graded by a poset element."""

    element: int  # poset id; -1 for the empty generator
    dim: int      # homological dimension; -1 for the empty generator
    index: int    # position in the echelon cycle basis at (element, dim)


EMPTY_GENERATOR = Generator(-1, -1, 0)


class SynorComplex:
    """A synor complex over a poset, possibly restricted to an order ideal.

    Restrictions share the generator data of the complex they came from;
    only the set of admitted elements differs.
    """

    def __init__(self, poset: Poset, field, element_ids, gens_by_dim,
                 delta, phi_memo, rho_memo, rho_lock):
        self.poset = poset
        self.field = field
        self.element_set = frozenset(element_ids)
        self.gens_by_dim = gens_by_dim
        self.delta = delta
        self._phi = phi_memo
        self._rho = rho_memo
        self._rho_lock = rho_lock

    # --- basis access ---

    def dims(self) -> list[int]:
        return sorted(d for d, gens in self.gens_by_dim.items() if gens)

    def generators(self, dim: int) -> list[Generator]:
        return list(self.gens_by_dim.get(dim, ()))

    def generators_at(self, element: int) -> list[Generator]:
        out = []
        for d in self.dims():
            out.extend(g for g in self.gens_by_dim[d] if g.element == element)
        return sorted(out)

    def total_rank(self) -> int:
        return sum(len(v) for v in self.gens_by_dim.values())

    # --- differential and embedding ---

    def delta_of(self, g: Generator) -> FormalChain:
        return self.delta[g]

    def delta_chain(self, chain: FormalChain) -> FormalChain:
        if chain.kind != "synor":
            raise ValidationError("expected a synor chain")
        out = FormalChain.zero(chain.dim - 1, self.field, "synor")
        for g, v in chain.terms.items():
            out = out + self.delta[g].scale(v)
        return out

    def phi(self, g: Generator) -> FormalChain:
        """The order-chain image of a generator (memoized)."""
        cached = self._phi.get(g)
        if cached is not None:
            return cached
        if g == EMPTY_GENERATOR:
            img = FormalChain(-1, self.field, {(): self.field.one}, "order")
        else:
            img = concat(self.poset, (g.element,), self.phi_chain(self.delta[g]))
        self._phi[g] = img
        return img

    def phi_chain(self, chain: FormalChain) -> FormalChain:
        if chain.kind != "synor":
            raise ValidationError("expected a synor chain")
        out = FormalChain.zero(chain.dim, self.field, "order")
        for g, v in chain.terms.items():
            out = out + self.phi(g).scale(v)
        return out

    # --- restriction and homology ---

    def restrict(self, ideal_ids) -> "SynorComplex":
        ideal = frozenset(int(i) for i in ideal_ids)
        if not ideal <= self.element_set:
            raise ValidationError("restriction exceeds the complex's elements")
        for x in ideal:
            for y in self.element_set:
                if self.poset.lt(y, x) and y not in ideal:
                    raise ValidationError(
                        f"{ideal_ids} is not an order ideal: missing {y} < {x}")
        gens = {
            d: [g for g in lst if g.element in ideal or g == EMPTY_GENERATOR]
            for d, lst in self.gens_by_dim.items()
        }
        return SynorComplex(self.poset, self.field, ideal, gens,
                            self.delta, self._phi, self._rho, self._rho_lock)

    def homology(self, k: int) -> HomologyBasis:
        """Homology of the restricted complex; cycles are synor chains."""
        basis_prev = self.generators(k - 1)
        basis_k = self.generators(k)
        basis_next = self.generators(k + 1)
        index_prev = {g: i for i, g in enumerate(basis_prev)}
        index_k = {g: i for i, g in enumerate(basis_k)}
        cols_k = [
            {index_prev[h]: v for h, v in self.delta[g].terms.items()}
            for g in basis_k
        ]
        cols_next = [
            {index_k[h]: v for h, v in self.delta[g].terms.items()}
            for g in basis_next
        ]
        hb = homology_of_complex(cols_k, cols_next, self.field, k)
        cycles = [
            FormalChain(k, self.field,
                        {basis_k[i]: v for i, v in vec.items()}, "synor")
            for vec in hb.cycles
        ]
        return HomologyBasis(k, hb.rank, cycles)


def build_synor_complex(P: Poset, field) -> SynorComplex:
    """Construct a synor complex of P with phi, deterministically.

    Elements are processed along P's linear extension; at each element the
    homology of the already-built complex restricted to the strict ideal
    below contributes one new generator per echelon basis cycle, with the
    cycle as its differential.
    """
    gens_by_dim: dict[int, list[Generator]] = {-1: [EMPTY_GENERATOR]}
    delta: dict[Generator, FormalChain] = {
        EMPTY_GENERATOR: FormalChain.zero(-2, field, "synor")
    }
    complex_so_far = SynorComplex(P, field, range(P.n), gens_by_dim, delta,
                                  {}, {}, threading.Lock())
    for x in P.linear_extension():
        below = frozenset(P.strictly_below(x))
        sub = complex_so_far.restrict(below)
        top_dim = max(sub.dims(), default=-1)
        for d in range(-1, top_dim + 1):
            hb = sub.homology(d)
            for idx, cycle in enumerate(hb.cycles):
                g = Generator(x, d + 1, idx)
                delta[g] = cycle
                gens_by_dim.setdefault(d + 1, []).append(g)
    for d in gens_by_dim:
        gens_by_dim[d].sort()
    return complex_so_far


def restrict(S: SynorComplex, ideal_ids) -> SynorComplex:
    return S.restrict(ideal_ids)


def synor_homology(S: SynorComplex, k: int) -> HomologyBasis:
    return S.homology(k)


def synors(P: Poset, field) -> list[tuple[int, int, int]]:
    """All (element, i, multiplicity) with nonzero H_{i-1} strictly below.

    Computed simplicially (independent of any synor complex), so this
    doubles as the oracle for the constructed complex's generator counts.
    """
    out = []
    for x in range(P.n):
        sub = P.sub(P.strictly_below(x))
        d = -1
        while True:
            if not sub.chains(d) and d != -1:
                break
            rank = simplicial_homology(sub, d, field).rank
            if rank:
                out.append((x, d + 1, rank))
            d += 1
    return out


# --- prefix representations ---


def ell_representation(S: SynorComplex, g: Generator,
                       ell: int) -> dict[tuple, FormalChain]:
    """Peel phi(g) into length-ell prefixes: phi(g) = sum chi * phi(zeta_chi).

    Returns {chi: zeta_chi} over decreasing (ell+1)-tuples starting at
    g's element; the zeta are synor chains of dimension dim(g) - ell - 1.
    Peeling one level maps the graded component of zeta at y to its delta,
    which is exactly the representation of the suffix sum below y.
    """
    if g == EMPTY_GENERATOR or g not in S.delta:
        raise DomainError("representation requires a generator of the complex")
    if not 0 <= ell <= g.dim:
        raise DomainError(
            f"prefix length {ell} outside 0..{g.dim} for this generator")
    reps: dict[tuple, FormalChain] = {(g.element,): S.delta[g]}
    for _ in range(ell):
        new: dict[tuple, FormalChain] = {}
        for chi, zeta in reps.items():
            for y in sorted({h.element for h in zeta.terms}):
                comp = graded_component(zeta, y)
                if comp.is_zero():
                    continue
                piece = S.delta_chain(comp)
                assert not piece.is_zero(), \
                    "a nonzero graded component cannot have zero delta"
                new[chi + (y,)] = piece
        reps = new
    return reps


def assemble_representation(S: SynorComplex,
                            reps: dict[tuple, FormalChain]) -> FormalChain:
    """Reassemble sum over chi of chi * phi(zeta_chi) as an order chain."""
    total = None
    for chi, zeta in sorted(reps.items()):
        term = concat(S.poset, chi, S.phi_chain(zeta))
        total = term if total is None else total + term
    if total is None:
        raise DomainError("empty representation")
    return total


# --- coefficient brackets ---


def bracket(t: FormalChain, c: tuple, j: int):
    """Sum of t's coefficients over basis chains equal to c off index j."""
    if t.kind == "synor":
        raise ValidationError("brackets act on order/multi chains")
    c = tuple(c)
    if len(c) != t.dim + 1:
        raise DimensionError("comparison chain has the wrong dimension")
    if not 0 <= j < len(c):
        raise IndexError(f"bracket index {j} out of range")
    total = t.field.zero
    for key, v in t.terms.items():
        if all(key[p] == c[p] for p in range(len(c)) if p != j):
            total = total + v
    return total


# --- the retraction rho ---


def rho(S: SynorComplex, key: tuple) -> FormalChain:
    """Deterministic chain-map retraction of an order chain into S.

    rho of the empty chain is the empty generator; rho of a longer chain
    is the least-pivot solution xi of delta(xi) = rho(boundary), taken
    among generators at elements below the chain's top, which exists
    because the complex restricted to a principal ideal is acyclic.
    Solutions are memoized per complex and safe to share across threads.
    """
    key = tuple(int(x) for x in key)
    cached = S._rho.get(key)
    if cached is not None:
        return cached
    for p in range(len(key) - 1):
        if not S.poset.lt(key[p + 1], key[p]):
            raise ValidationError(f"not a strictly decreasing chain: {key}")
    for x in key:
        if x not in S.element_set:
            raise DomainError(f"element {x} outside the complex")
    with S._rho_lock:
        return _rho_locked(S, key)


def _rho_locked(S: SynorComplex, key: tuple) -> FormalChain:
    cached = S._rho.get(key)
    if cached is not None:
        return cached
    if not key:
        out = FormalChain(-1, S.field, {EMPTY_GENERATOR: S.field.one}, "synor")
        S._rho[key] = out
        return out
    k = len(key) - 1
    target = FormalChain.zero(k - 1, S.field, "synor")
    for face, coeff in boundary_key(key, S.field).items():
        target = target + _rho_locked(S, face).scale(coeff)
    ideal = sorted(y for y in S.element_set if S.poset.le(y, key[0]))
    sub = S.restrict(ideal)
    cols_basis = sub.generators(k)
    rows = {g: i for i, g in enumerate(sub.generators(k - 1))}
    columns = [
        {rows[h]: v for h, v in S.delta[g].terms.items()} for g in cols_basis
    ]
    tvec = {}
    for h, v in target.terms.items():
        if h not in rows:
            raise DomainError("rho target escapes the principal ideal")
        tvec[rows[h]] = v
    sol = solve(columns, tvec, S.field)
    if sol is None:
        raise DomainError(
            "no delta-preimage below the chain top; the restricted complex "
            "is unexpectedly not acyclic")
    out = FormalChain(k, S.field,
                      {cols_basis[j]: v for j, v in sol.items()}, "synor")
    S._rho[key] = out
    return out


def rho_chain(S: SynorComplex, chain: FormalChain) -> FormalChain:
    """Linear extension of rho to order-chain combinations."""
    if chain.kind != "order":
        raise ValidationError("rho acts on order chains")
    out = FormalChain.zero(chain.dim, S.field, "synor")
    for key, v in chain.terms.items():
        out = out + rho(S, key).scale(v)
    return out


# --- relative homology comparison ---


def homologous_in_pair(g: FormalChain, g2: FormalChain, P: Poset,
                       ideal_ids) -> bool:
    """Whether two relative cycles agree in the homology of (P, ideal).

    Both chains must have boundaries supported in the ideal.  P must have
    a unique maximal element (it is a cone, which is what makes the
    membership test below a complete criterion).  The test: g - g2 must
    lie in the span of chains supported in the ideal plus boundaries of
    one-higher chains of P.
    """
    if g.dim != g2.dim:
        raise DimensionError("relative cycles of different dimensions")
    if len(P.maximal_elements()) != 1:
        raise DomainError("relative comparison requires a unique maximal element")
    ideal = frozenset(int(i) for i in ideal_ids)
    m = g.dim
    for c in (g, g2):
        db = boundary(c)
        for key in db.terms:
            if not set(key) <= ideal:
                raise ValidationError("input is not a relative cycle")
    basis_m = P.chains(m)
    index_m = {c: i for i, c in enumerate(basis_m)}
    red = Reducer(g.field)
    for key in basis_m:
        if key and set(key) <= ideal:
            red.insert({index_m[key]: g.field.one})
    for key in P.chains(m + 1):
        raw = boundary_key(key, g.field)
        red.insert({index_m[f]: v for f, v in raw.items()})
    diff = g - g2
    vec = {index_m[key]: v for key, v in diff.terms.items()}
    return red.contains(vec)


# --- serialization ---


def synor_to_json(S: SynorComplex, variables=None) -> dict:
    """JSON-ready dump of generators, differentials, and embeddings."""
    def gen_key(g):
        return [g.element, g.dim, g.index]

    def label(i):
        lab = S.poset.label_of(i)
        if variables is not None and isinstance(lab, Monomial):
            return lab.format(variables)
        return str(lab)

    gens = []
    for d in S.dims():
        for g in S.gens_by_dim[d]:
            gens.append({
                "element": g.element,
                "label": label(g.element) if g.element >= 0 else "",
                "dim": g.dim,
                "index": g.index,
                "delta": [
                    [gen_key(h), str(v)] for h, v in S.delta[g].items()
                ],
                "phi": [
                    [list(key), str(v)] for key, v in S.phi(g).items()
                ],
            })
    return {"n": S.poset.n, "generators": gens}
