"""Support tau-tilting pairs: validation, invariants, duality, order.

A pair is (M, P) with M a basic tau-rigid module and P a basic projective
with Hom(P, M) = 0; P is recorded by its set of support vertices.  The pair
is support tau-tilting when the summand count reaches the number of
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg, modules
from .errors import (
    AlgebraMismatch,
    NotBasic,
    NotTauRigid,
    SupportViolation,
    UnknownVertex,
)


def hom_tau_dim(n, m):
    """dim Hom(N, tau M), from the presentation of M (no tau computed).

    Uses the exactness of Hom(P0, N) -> Hom(P1, N) -> Hom(N, tau M)* -> 0:
    the dimension is the corank of the composition-with-d1 map.
    """
    if n.algebra is not m.algebra:
        raise AlgebraMismatch("modules over different algebras")
    field = n.algebra.field
    pres = modules.minimal_presentation(m)
    h1 = modules.hom_basis(pres.p1.module, n)
    if not h1:
        return 0
    h0 = modules.hom_basis(pres.p0.module, n)
    ncols = len(h1[0].flatten())
    span = linalg.Echelon(field, ncols)
    for phi in h0:
        span.add(phi.compose(pres.d1).flatten())
    return len(h1) - span.rank


def tau_hom_vanishes(n, m):
    """True iff Hom(N, tau M) = 0."""
    return hom_tau_dim(n, m) == 0


def _support_indices(algebra, support):
    out = []
    for v in support:
        if isinstance(v, str):
            if v not in algebra.vertex_index:
                raise UnknownVertex(f"unknown vertex {v!r}")
            out.append(algebra.vertex_index[v])
        else:
            if not 0 <= v < algebra.n_vertices:
                raise UnknownVertex(f"vertex index {v} out of range")
            out.append(int(v))
    if len(set(out)) != len(out):
        raise NotBasic("repeated support vertex")
    return tuple(sorted(out))


def _neg_unit(n, i):
    v = [0] * n
    v[i] = -1
    return tuple(v)


@dataclass
class TauPair:
    """A basic tau-rigid pair; build through check_pair for validation."""

    algebra: object
    summands: tuple  # indecomposable Modules, canonically sorted
    support: tuple  # sorted vertex indices

    def __post_init__(self):
        self.summands = tuple(self.summands)
        self.support = tuple(self.support)

    @property
    def count(self):
        return len(self.summands) + len(self.support)

    @property
    def is_support_tau_tilting(self):
        return self.count == self.algebra.n_vertices

    @property
    def is_almost_complete(self):
        return self.count == self.algebra.n_vertices - 1

    def module_part(self):
        total, _, _ = modules.direct_sum(self.algebra, list(self.summands))
        return total

    def g_vectors(self):
        """g-vectors of the module summands, then -e_i per support vertex."""
        out = [modules.g_vector(m) for m in self.summands]
        out.extend(
            _neg_unit(self.algebra.n_vertices, i) for i in self.support
        )
        return out

    def key(self):
        return tuple(sorted(self.g_vectors()))

    def positions(self):
        """Ordered mutation positions: module summands, then support."""
        out = [("module", i) for i in range(len(self.summands))]
        out.extend(("support", v) for v in self.support)
        return out

    def support_names(self):
        return [self.algebra.vertex_names[i] for i in self.support]

    def label(self):
        parts = [module_label(m) for m in self.summands]
        parts.extend(f"e{self.algebra.vertex_names[i]}" for i in self.support)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TauPair({self.label()})"


def check_pair(algebra, summand_modules, support):
    """Validate and canonicalize a tau-rigid pair from raw data.

    Decomposes the given modules, checks basicness, support compatibility
    and tau-rigidity, and returns the canonical TauPair.
    """
    support = _support_indices(algebra, support)
    leaves = []
    for m in summand_modules:
        if m.algebra is not algebra:
            raise AlgebraMismatch("summand over a different algebra")
        for leaf, mult in modules.decompose(m):
            if mult > 1:
                raise NotBasic(
                    f"summand of dims {leaf.dims} occurs {mult} times"
                )
            leaves.append(leaf)
    for i in range(len(leaves)):
        for j in range(i + 1, len(leaves)):
            if modules._indec_isomorphic(leaves[i], leaves[j]):
                raise NotBasic(
                    f"isomorphic summands at positions {i} and {j}"
                )
    for leaf in leaves:
        for v in support:
            if leaf.dims[v] != 0:
                raise SupportViolation(
                    f"summand of dims {leaf.dims} is nonzero at support "
                    f"vertex {algebra.vertex_names[v]}"
                )
    for j, mj in enumerate(leaves):
        for i, mi in enumerate(leaves):
            if not tau_hom_vanishes(mi, mj):
                raise NotTauRigid(
                    f"Hom(summand {i}, tau(summand {j})) is nonzero "
                    f"(dims {mi.dims} vs {mj.dims})"
                )
    if len(leaves) + len(support) > algebra.n_vertices:
        raise NotTauRigid(
            "pair has more summands than vertices; not tau-rigid"
        )
    leaves.sort(key=lambda m: (sum(m.dims), m.dims, modules.g_vector(m)))
    return TauPair(algebra, tuple(leaves), support)


def regular_pair(algebra):
    """The maximal pair (Lambda, 0)."""
    summands = [
        modules.standard_module(algebra, "projective", i)
        for i in range(algebra.n_vertices)
    ]
    return check_pair(algebra, summands, ())


def zero_pair(algebra):
    """The minimal pair (0, Lambda)."""
    return TauPair(algebra, (), tuple(range(algebra.n_vertices)))


def classify_pair(pair):
    """Flags: tauRigid, supportTauTilting, tauTilting, tilting, sincere,
    faithful, almostComplete."""
    total = pair.module_part()
    sincere = modules.is_sincere(total)
    faithful = modules.is_faithful(total)
    stt = pair.is_support_tau_tilting
    return {
        "tauRigid": True,
        "supportTauTilting": stt,
        "almostComplete": pair.is_almost_complete,
        "sincere": sincere,
        "faithful": faithful,
        "tauTilting": stt and sincere,
        "tilting": stt and faithful,
    }


def is_projective_summand(m):
    """True iff the (indecomposable) module is projective; with its vertex."""
    pres = modules.minimal_presentation(m)
    if pres.p1.copies:
        return False, None
    return True, pres.p0.copies[0]


def dagger(pair):
    """(M, P) -> (Tr M_np + P*, M_pr*) over the opposite algebra.

    Returns (pair, position_map) where position_map sends each position of
    the input to the corresponding position of the output.
    """
    A = pair.algebra
    opp = A.opposite()
    new_summands = []
    new_support = []
    position_map = {}
    for i, m in enumerate(pair.summands):
        proj, v = is_projective_summand(m)
        if proj:
            new_support.append(v)
            position_map[("module", i)] = ("support", v)
        else:
            position_map[("module", i)] = ("module", len(new_summands))
            new_summands.append(modules.transpose(m))
    for v in pair.support:
        position_map[("support", v)] = ("module", len(new_summands))
        new_summands.append(modules.standard_module(opp, "projective", v))
    out = TauPair(opp, tuple(new_summands), tuple(sorted(new_support)))
    return out, position_map


def torsionfree_companion(pair):
    """(M, P) -> (tau M + nu P, nu M_pr), cross-checked against the dagger
    route D((M,P)dagger)."""
    A = pair.algebra
    tau_parts = []
    nu_proj_parts = []
    for m in pair.summands:
        proj, v = is_projective_summand(m)
        if proj:
            nu_proj_parts.append(modules.standard_module(A, "injective", v))
        else:
            tau_parts.append(modules.tau(m))
    for v in pair.support:
        tau_parts.append(modules.standard_module(A, "injective", v))
    first, _, _ = modules.direct_sum(A, tau_parts)
    second, _, _ = modules.direct_sum(A, nu_proj_parts)
    dag, _ = dagger(pair)
    via_dagger_first = modules.dualize(dag.module_part())
    opp = A.opposite()
    via_dagger_second, _, _ = modules.direct_sum(
        A,
        [
            modules.dualize(modules.standard_module(opp, "projective", v))
            for v in dag.support
        ],
    )
    assert modules.is_isomorphic(first, via_dagger_first)
    assert modules.is_isomorphic(second, via_dagger_second)
    return first, second


def leq(pair_a, pair_b):
    """A <= B in the Fac-inclusion order."""
    if pair_a.algebra is not pair_b.algebra:
        raise AlgebraMismatch("pairs over different algebras")
    if not set(pair_b.support) <= set(pair_a.support):
        return False
    a_total = pair_a.module_part()
    return all(tau_hom_vanishes(a_total, m) for m in pair_b.summands)


def e_invariant(pair_a, pair_b):
    """(E'(A,B), E'(B,A), E) with E'(M,N) = <X, tau Y> + <P, Y>."""
    if pair_a.algebra is not pair_b.algebra:
        raise AlgebraMismatch("pairs over different algebras")

    def e_prime(p, q):
        x = p.module_part()
        total = 0
        for m in q.summands:
            total += hom_tau_dim(x, m)
            # <P, Y> = sum of dims of Y at the support vertices of p
            total += sum(m.dims[v] for v in p.support)
        return total

    eab = e_prime(pair_a, pair_b)
    eba = e_prime(pair_b, pair_a)
    return eab, eba, eab + eba


def module_label(m):
    """Composition-series style label from the radical filtration.

    Each layer lists vertex names of its semisimple composition factors;
    layers are separated by '/': e.g. the projective [1/2] prints "1/2".
    """
    A = m.algebra
    if m.total_dim == 0:
        return "0"
    layers = []
    current = m
    while current.total_dim > 0:
        rad, _ = _radical_submodule(current)
        layer = []
        for v in range(A.n_vertices):
            layer.extend([A.vertex_names[v]] * (current.dims[v] - rad.dims[v]))
        layers.append("".join(layer) if layer else "·")
        current = rad
    return "/".join(layers)


def _radical_submodule(m):
    A = m.algebra
    field = A.field
    bases = []
    for v in range(A.n_vertices):
        ech = linalg.Echelon(field, m.dims[v])
        basis = []
        for ai, (_, s, t) in enumerate(A.arrows):
            if t != v:
                continue
            for col in linalg.transpose(m.maps[ai]):
                if ech.add(col):
                    basis.append(col)
        bases.append(basis)
    return modules._submodule(m, bases)
