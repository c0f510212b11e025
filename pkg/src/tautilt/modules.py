"""Quiver representations over a bound quiver algebra.

Modules are representations: one vector space per vertex, one matrix per
arrow, relations evaluating to zero.  This module provides Hom spaces,
kernels/cokernels, projective covers and minimal presentations, the
Auslander-Reiten translate and transpose, dualities, Krull-Schmidt
decomposition, Fac membership, and minimal left approximations.

Conventions (fixed globally): arrows act as maps M_source -> M_target; a
path [a1, a2] traverses a1 first and equals the product a2*a1 as an algebra
element; left projectives P(i) = Lambda e_i with Hom(P(i), P(j)) identified
with e_i Lambda e_j via phi -> phi(e_i), phi_m(x) = x*m.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from . import linalg
from .errors import (
    AlgebraMismatch,
    ApproximationVerificationFailed,
    CharacteristicTooSmall,
    DecompositionInconclusive,
    NonAdmissible,
    UnknownVertex,
)


class Module:
    """A finite-dimensional left module given as a quiver representation."""

    def __init__(self, algebra, dims, maps, check=True):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.n_vertices:
            raise ValueError("dims must list one entry per vertex")
        self.maps = [linalg.copy_matrix(m) for m in maps]
        if len(self.maps) != len(algebra.arrows):
            raise ValueError("maps must list one matrix per arrow")
        for ai, (_, s, t) in enumerate(algebra.arrows):
            m = self.maps[ai]
            rows = len(m)
            cols = len(m[0]) if m else 0
            if rows != self.dims[t] or (rows and cols != self.dims[s]):
                raise ValueError(f"arrow matrix {ai} has wrong shape")
        self.total_dim = sum(self.dims)
        self.offsets = []
        off = 0
        for d in self.dims:
            self.offsets.append(off)
            off += d
        if check:
            self._check_relations()
        self._cache = {}

    def _check_relations(self):
        field = self.algebra.field
        for rel in self.algebra.presentation.relations:
            acc = None
            for coeff, names in rel:
                mat = self._path_matrix([self.algebra.arrow_index[n] for n in names])
                c = field.parse(str(coeff))
                mat = linalg.mat_scale(field, c, mat)
                acc = mat if acc is None else linalg.mat_add(field, acc, mat)
            if acc and not linalg.is_zero_matrix(field, acc):
                raise ValueError("relation does not vanish on the module")

    def _path_matrix(self, arrow_indices):
        """Matrix of the path action (first listed arrow applied first)."""
        field = self.algebra.field
        mat = None
        for ai in arrow_indices:
            step = self.maps[ai]
            mat = step if mat is None else linalg.mat_mul(field, step, mat)
        return mat

    def act_basis(self, k):
        """Total-space matrix of the k-th algebra basis element."""
        A = self.algebra
        field = A.field
        p = A.basis[k]
        i, j = p.source, A.basis_target[k]
        out = linalg.zeros(field, self.total_dim, self.total_dim)
        if p.arrows:
            block = self._path_matrix(list(p.arrows))
        else:
            block = linalg.identity(field, self.dims[i])
        for r in range(self.dims[j]):
            for c in range(self.dims[i]):
                out[self.offsets[j] + r][self.offsets[i] + c] = block[r][c]
        return out

    def canonical_seed(self):
        h = hashlib.sha256()
        h.update(repr(self.dims).encode())
        for m in self.maps:
            h.update(repr(m).encode())
        return int.from_bytes(h.digest()[:8], "big")

    def __repr__(self):
        return f"Module(dims={self.dims})"


class ModuleMap:
    """A homomorphism of modules: one matrix per vertex, intertwining."""

    def __init__(self, source, target, mats, check=True):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch("map between modules over different algebras")
        self.source = source
        self.target = target
        self.mats = [linalg.copy_matrix(m) for m in mats]
        if check:
            self._check()

    def _check(self):
        field = self.source.algebra.field
        for ai, (_, s, t) in enumerate(self.source.algebra.arrows):
            lhs = linalg.mat_mul(field, self.mats[t], self.source.maps[ai])
            rhs = linalg.mat_mul(field, self.target.maps[ai], self.mats[s])
            if not linalg.is_zero_matrix(field, linalg.mat_sub(field, lhs, rhs)):
                raise ValueError("matrices do not intertwine the arrow actions")

    def compose(self, other):
        """self after other."""
        field = self.source.algebra.field
        mats = []
        for v, (a, b) in enumerate(zip(self.mats, other.mats)):
            # mat_mul cannot recover the shape when the middle space is
            # zero-dimensional at v, so size the product explicitly
            if self.source.dims[v] == 0:
                mats.append(
                    linalg.zeros(
                        field, self.target.dims[v], other.source.dims[v]
                    )
                )
            else:
                mats.append(linalg.mat_mul(field, a, b))
        return ModuleMap(other.source, self.target, mats, check=False)

    def flatten(self):
        out = []
        for m in self.mats:
            for row in m:
                out.extend(row)
        return out

    def is_zero(self):
        field = self.source.algebra.field
        return all(linalg.is_zero_matrix(field, m) for m in self.mats)

    def __repr__(self):
        return f"ModuleMap({self.source.dims} -> {self.target.dims})"


def zero_module(algebra):
    return Module(
        algebra,
        [0] * algebra.n_vertices,
        [[] for _ in algebra.arrows],
        check=False,
    )


def zero_map(source, target):
    field = source.algebra.field
    mats = [
        linalg.zeros(field, target.dims[v], source.dims[v])
        for v in range(source.algebra.n_vertices)
    ]
    return ModuleMap(source, target, mats, check=False)


def identity_map(m):
    field = m.algebra.field
    return ModuleMap(
        m, m, [linalg.identity(field, d) for d in m.dims], check=False
    )


def direct_sum(algebra, modules):
    """Direct sum with inclusion and projection maps."""
    field = algebra.field
    for m in modules:
        if m.algebra is not algebra:
            raise AlgebraMismatch("direct sum over mixed algebras")
    dims = [sum(m.dims[v] for m in modules) for v in range(algebra.n_vertices)]
    maps = []
    for ai, (_, s, t) in enumerate(algebra.arrows):
        big = linalg.zeros(field, dims[t], dims[s])
        ro = co = 0
        for m in modules:
            blk = m.maps[ai]
            for r in range(m.dims[t]):
                for c in range(m.dims[s]):
                    big[ro + r][co + c] = blk[r][c]
            ro += m.dims[t]
            co += m.dims[s]
        maps.append(big)
    total = Module(algebra, dims, maps, check=False)
    inclusions, projections = [], []
    offs = [0] * algebra.n_vertices
    for m in modules:
        inc = [
            linalg.zeros(field, dims[v], m.dims[v])
            for v in range(algebra.n_vertices)
        ]
        prj = [
            linalg.zeros(field, m.dims[v], dims[v])
            for v in range(algebra.n_vertices)
        ]
        for v in range(algebra.n_vertices):
            for r in range(m.dims[v]):
                inc[v][offs[v] + r][r] = field.one
                prj[v][r][offs[v] + r] = field.one
        inclusions.append(ModuleMap(m, total, inc, check=False))
        projections.append(ModuleMap(total, m, prj, check=False))
        for v in range(algebra.n_vertices):
            offs[v] += m.dims[v]
    return total, inclusions, projections


# ---------------------------------------------------------------------------
# sums of indecomposable projectives, realized as representations


class ProjSum:
    """Direct sum of copies of indecomposable projectives P(i).

    Keeps the identification of each coordinate of the realized module with
    an algebra basis path, so maps between projective sums can be converted
    between block matrices of algebra elements and realized module maps.
    """

    def __init__(self, algebra, copies):
        self.algebra = algebra
        self.copies = list(copies)  # vertex index per copy
        field = algebra.field
        # coordinate labels per vertex: (copy position, algebra basis index)
        self.labels = [[] for _ in range(algebra.n_vertices)]
        for pos, i in enumerate(self.copies):
            for k in range(algebra.dim):
                if algebra.basis_source[k] == i:
                    self.labels[algebra.basis_target[k]].append((pos, k))
        dims = [len(lbl) for lbl in self.labels]
        self._coord = {
            (pos, k): r
            for v in range(algebra.n_vertices)
            for r, (pos, k) in enumerate(self.labels[v])
        }
        maps = []
        for ai, (_, s, t) in enumerate(algebra.arrows):
            arrow_vec = algebra.arrow_element(algebra.arrows[ai][0])
            mat = linalg.zeros(field, dims[t], dims[s])
            arrow_basis = next(
                idx for idx, c in enumerate(arrow_vec) if c != field.zero
            )
            for c, (pos, k) in enumerate(self.labels[s]):
                prod = algebra.basis_product(arrow_basis, k)
                for k2, coeff in prod:
                    mat[self._coord[(pos, k2)]][c] = coeff
            maps.append(mat)
        self.module = Module(algebra, dims, maps, check=False)

    def generator_coord(self, pos):
        """(vertex, row) of the generator e_i of the given copy."""
        i = self.copies[pos]
        k = self.algebra.idempotent_index[i]
        return i, self._coord[(pos, k)]

    def realize_blocks(self, target, blocks):
        """Module map self.module -> target.module from a block matrix.

        blocks[r][c] is an algebra element in e_{i_c} Lambda e_{j_r}, for
        column copy c of P(i_c) in self and row copy r of P(j_r) in target.
        """
        A = self.algebra
        field = A.field
        mats = [
            linalg.zeros(field, target.module.dims[v], self.module.dims[v])
            for v in range(A.n_vertices)
        ]
        for v in range(A.n_vertices):
            for c, (pos, k) in enumerate(self.labels[v]):
                for r in range(len(target.copies)):
                    m = blocks[r][pos]
                    # image of basis path x (in copy pos) is x*m in copy r
                    for b, coeff in enumerate(m):
                        if coeff == field.zero:
                            continue
                        for k2, c2 in A.basis_product(k, b):
                            row = target._coord[(r, k2)]
                            mats[v][row][c] = field.add(
                                mats[v][row][c], field.mul(coeff, c2)
                            )
        return ModuleMap(self.module, target.module, mats, check=False)

    def extract_blocks(self, target, f):
        """Inverse of realize_blocks for a map self.module -> target.module."""
        A = self.algebra
        field = A.field
        blocks = [
            [A.zero_element() for _ in self.copies] for _ in target.copies
        ]
        for pos in range(len(self.copies)):
            v, row = self.generator_coord(pos)
            col = f.mats[v] and [f.mats[v][r][row] for r in range(len(f.mats[v]))]
            if not col:
                continue
            for r2, (tpos, k) in enumerate(target.labels[v]):
                c = col[r2]
                if c != field.zero:
                    blocks[tpos][pos][k] = field.add(blocks[tpos][pos][k], c)
        return blocks

    def multiplicities(self):
        out = [0] * self.algebra.n_vertices
        for i in self.copies:
            out[i] += 1
        return out


def standard_module(algebra, kind, vertex):
    """P(i), I(i) or S(i) for a vertex name or index."""
    if isinstance(vertex, str):
        if vertex not in algebra.vertex_index:
            raise UnknownVertex(f"unknown vertex {vertex!r}")
        vertex = algebra.vertex_index[vertex]
    if not 0 <= vertex < algebra.n_vertices:
        raise UnknownVertex(f"vertex index {vertex} out of range")
    if kind == "projective":
        return ProjSum(algebra, [vertex]).module
    if kind == "simple":
        dims = [0] * algebra.n_vertices
        dims[vertex] = 1
        field = algebra.field
        maps = [
            linalg.zeros(field, dims[t], dims[s])
            for (_, s, t) in algebra.arrows
        ]
        return Module(algebra, dims, maps, check=False)
    if kind == "injective":
        opp = algebra.opposite()
        return dualize(ProjSum(opp, [vertex]).module)
    raise ValueError(f"unknown standard module kind {kind!r}")


def dualize(m):
    """D(M): module over the opposite algebra with transposed arrow maps."""
    opp = m.algebra.opposite()
    maps = [
        linalg.transpose_shaped(mat, m.dims[s], m.dims[t])
        for mat, (_, s, t) in zip(m.maps, m.algebra.arrows)
    ]
    return Module(opp, m.dims, maps, check=False)


def dualize_map(f):
    """D is contravariant: a map M -> N dualizes to D(N) -> D(M)."""
    mats = [
        linalg.transpose_shaped(mat, f.source.dims[v], f.target.dims[v])
        for v, mat in enumerate(f.mats)
    ]
    return ModuleMap(dualize(f.target), dualize(f.source), mats, check=False)


# ---------------------------------------------------------------------------
# Hom spaces


def hom_basis(m, n):
    """Basis of Hom(M, N) by solving the intertwining equations."""
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("Hom between modules over different algebras")
    A = m.algebra
    field = A.field
    nverts = A.n_vertices
    offs = []
    off = 0
    for v in range(nverts):
        offs.append(off)
        off += n.dims[v] * m.dims[v]
    nunk = off
    rows = []
    for ai, (_, s, t) in enumerate(A.arrows):
        ma, na = m.maps[ai], n.maps[ai]
        for r in range(n.dims[t]):
            for c in range(m.dims[s]):
                row = [field.zero] * nunk
                # (phi_t * M_a)[r][c] = sum_k phi_t[r][k] M_a[k][c]
                for k in range(m.dims[t]):
                    row[offs[t] + r * m.dims[t] + k] = field.add(
                        row[offs[t] + r * m.dims[t] + k], ma[k][c]
                    )
                # -(N_a * phi_s)[r][c] = -sum_k N_a[r][k] phi_s[k][c]
                for k in range(n.dims[s]):
                    idx = offs[s] + k * m.dims[s] + c
                    row[idx] = field.sub(row[idx], na[r][k])
                rows.append(row)
    basis = linalg.kernel_basis(field, rows, ncols=nunk)
    out = []
    for vec in basis:
        mats = []
        for v in range(nverts):
            mat = [
                vec[offs[v] + r * m.dims[v] : offs[v] + (r + 1) * m.dims[v]]
                for r in range(n.dims[v])
            ]
            mats.append(mat)
        out.append(ModuleMap(m, n, mats, check=False))
    return out


def hom_dim(m, n):
    return len(hom_basis(m, n))


@dataclass
class EndStructure:
    basis: list  # ModuleMaps
    radical: list  # ModuleMaps
    radical_coords: list  # coordinate vectors over basis
    is_local: bool

    @property
    def dim(self):
        return len(self.basis)


def end_structure(m):
    """Endomorphism algebra with radical via the trace form.

    The radical is the kernel of (x, y) -> trace of left multiplication by
    x*y on End(M); valid in characteristic 0, and in characteristic p only
    for p > dim End(M) (checked).
    """
    A = m.algebra
    field = A.field
    basis = hom_basis(m, m)
    d = len(basis)
    if field.characteristic and field.characteristic <= d:
        raise CharacteristicTooSmall(
            f"characteristic {field.characteristic} <= dim End = {d}"
        )
    if d == 0:
        return EndStructure(basis=[], radical=[], radical_coords=[], is_local=False)
    flat = [f.flatten() for f in basis]
    bmat = linalg.transpose(flat)
    lefts = []
    for f in basis:
        cols = []
        for g in basis:
            comp = f.compose(g).flatten()
            coords = linalg.solve(field, bmat, comp)
            cols.append(coords)
        lefts.append(linalg.transpose(cols))
    gram = [
        [
            _trace(field, linalg.mat_mul(field, lefts[i], lefts[j]))
            for j in range(d)
        ]
        for i in range(d)
    ]
    rad_coords = linalg.kernel_basis(field, gram, ncols=d)
    rad = [_combine(m, basis, coords) for coords in rad_coords]
    is_local = d - len(rad_coords) == 1
    return EndStructure(
        basis=basis, radical=rad, radical_coords=rad_coords, is_local=is_local
    )


def _trace(field, mat):
    s = field.zero
    for i in range(len(mat)):
        s = field.add(s, mat[i][i])
    return s


def _combine(m, maps, coords):
    """Linear combination of module maps with the given coefficients."""
    field = m.algebra.field
    out = None
    for c, f in zip(coords, maps):
        scaled = [linalg.mat_scale(field, c, mat) for mat in f.mats]
        if out is None:
            out = scaled
        else:
            out = [linalg.mat_add(field, a, b) for a, b in zip(out, scaled)]
    return ModuleMap(maps[0].source, maps[0].target, out, check=False)


# ---------------------------------------------------------------------------
# kernels, images, cokernels


def map_kernel(f):
    """Kernel with its inclusion."""
    A = f.source.algebra
    field = A.field
    bases = [linalg.kernel_basis(field, f.mats[v], ncols=f.source.dims[v])
             for v in range(A.n_vertices)]
    return _submodule(f.source, bases)


def map_image(f):
    """Image with its inclusion into the target."""
    A = f.source.algebra
    field = A.field
    bases = []
    for v in range(A.n_vertices):
        ech = linalg.Echelon(field, f.target.dims[v])
        basis = []
        for col in linalg.transpose(f.mats[v]):
            if ech.add(col):
                basis.append(col)
        bases.append(basis)
    return _submodule(f.target, bases)


def map_cokernel(f):
    """Cokernel with its projection from the target."""
    A = f.source.algebra
    field = A.field
    proj_mats = []
    dims = []
    for v in range(A.n_vertices):
        n = f.target.dims[v]
        ech = linalg.Echelon(field, n)
        for col in linalg.transpose(f.mats[v]):
            ech.add(col)
        # rows of the projection: a basis of the annihilator of the image
        proj = linalg.kernel_basis(field, [list(r) for r in ech.rows], ncols=n)
        proj_mats.append(proj)
        dims.append(len(proj))
    maps = []
    for ai, (_, s, t) in enumerate(A.arrows):
        # induced map: rows_t * M_a = C_a * rows_s must be solved for C_a
        lhs = linalg.mat_mul(field, proj_mats[t], f.target.maps[ai])
        if dims[s] == 0:
            maps.append([[field.zero] * 0 for _ in range(dims[t])])
            continue
        sol = linalg.solve(
            field, linalg.transpose(proj_mats[s]), linalg.transpose(lhs)
        )
        ca = linalg.transpose(sol) if sol is not None else None
        if ca is None:
            raise RuntimeError("cokernel projection failed to factor")
        maps.append(ca)
    coker = Module(A, dims, maps, check=False)
    projection = ModuleMap(f.target, coker, proj_mats, check=False)
    return coker, projection


def _submodule(parent, bases):
    """Module on given per-vertex invariant subspaces, with inclusion."""
    A = parent.algebra
    field = A.field
    dims = [len(b) for b in bases]
    inc_mats = [linalg.transpose(b) if b else [[] for _ in range(parent.dims[v])]
                for v, b in enumerate(bases)]
    # fix shapes of empty inclusions
    for v in range(A.n_vertices):
        if dims[v] == 0:
            inc_mats[v] = [[] for _ in range(parent.dims[v])]
    maps = []
    for ai, (_, s, t) in enumerate(A.arrows):
        if dims[s] == 0:
            maps.append([[field.zero] * 0 for _ in range(dims[t])])
            continue
        img = linalg.mat_mul(field, parent.maps[ai], inc_mats[s])
        sol = linalg.solve(field, inc_mats[t], img)
        if sol is None:
            raise RuntimeError("subspaces are not arrow-invariant")
        maps.append(sol)
    sub = Module(A, dims, maps, check=False)
    inclusion = ModuleMap(sub, parent, inc_mats, check=False)
    return sub, inclusion


# ---------------------------------------------------------------------------
# projective covers and minimal presentations


def top_lifts(m):
    """Per vertex: representatives in M_v of a basis of the top (M/rad M)."""
    A = m.algebra
    field = A.field
    lifts = []
    for v in range(A.n_vertices):
        ech = linalg.Echelon(field, m.dims[v])
        for ai, (_, s, t) in enumerate(A.arrows):
            if t != v:
                continue
            for col in linalg.transpose(m.maps[ai]):
                ech.add(col)
        reps = []
        for i in range(m.dims[v]):
            e = linalg.unit_vector(field, m.dims[v], i)
            if ech.add(e):
                reps.append(e)
        lifts.append(reps)
    return lifts


def projective_cover(m):
    """Projective cover P -> M; returns (ProjSum, ModuleMap)."""
    A = m.algebra
    field = A.field
    lifts = top_lifts(m)
    copies = []
    gens = []
    for v in range(A.n_vertices):
        for rep in lifts[v]:
            copies.append(v)
            gens.append((v, rep))
    ps = ProjSum(A, copies)
    mats = [
        linalg.zeros(field, m.dims[v], ps.module.dims[v])
        for v in range(A.n_vertices)
    ]
    for v in range(A.n_vertices):
        for c, (pos, k) in enumerate(ps.labels[v]):
            gv, rep = gens[pos]
            # basis path k goes from gv to v; its action sends rep into M_v
            p = A.basis[k]
            if p.arrows:
                block = m._path_matrix(list(p.arrows))
                img = linalg.mat_vec(field, block, rep)
            else:
                img = rep
            for r in range(m.dims[v]):
                mats[v][r][c] = img[r]
    cover = ModuleMap(ps.module, m, mats, check=False)
    for v in range(A.n_vertices):
        if linalg.rank(field, mats[v]) != m.dims[v]:
            raise RuntimeError("projective cover is not surjective")
    return ps, cover


@dataclass
class ProjectivePresentation:
    """Minimal projective presentation P1 -> P0 -> M -> 0."""

    module: Module
    p1: ProjSum
    p0: ProjSum
    d1: ModuleMap  # realized map p1.module -> p0.module
    blocks: list  # blocks[r][c] in e_{i_c} Lambda e_{j_r}
    cover: ModuleMap  # p0.module -> M

    def g_vector(self):
        m0 = self.p0.multiplicities()
        m1 = self.p1.multiplicities()
        return tuple(a - b for a, b in zip(m0, m1))


def minimal_presentation(m):
    pres = m._cache.get("presentation")
    if pres is not None:
        return pres
    A = m.algebra
    p0, cover = projective_cover(m)
    kernel, inclusion = map_kernel(cover)
    p1, cover1 = projective_cover(kernel)
    d1 = inclusion.compose(cover1)
    blocks = p1.extract_blocks(p0, d1)
    field = A.field
    for r, rowblocks in enumerate(blocks):
        for c, elt in enumerate(rowblocks):
            for vi in A.idempotent_index:
                if elt[vi] != field.zero:
                    raise RuntimeError(
                        "presentation differential has an idempotent component"
                    )
    pres = ProjectivePresentation(
        module=m, p1=p1, p0=p0, d1=d1, blocks=blocks, cover=cover
    )
    m._cache["presentation"] = pres
    return pres


def g_vector(m):
    return minimal_presentation(m).g_vector()


def c_vector(m):
    return tuple(m.dims)


# ---------------------------------------------------------------------------
# transpose, tau, annihilator


def _blocks_to_opposite(algebra, blocks):
    """Transpose a block matrix of algebra elements into the opposite algebra."""
    opp = algebra.opposite()
    if not blocks:
        return []
    nrows = len(blocks)
    ncols = len(blocks[0])
    return [
        [to_opposite_element(algebra, blocks[r][c]) for r in range(nrows)]
        for c in range(ncols)
    ]


def to_opposite_element(algebra, vec):
    """Image of an element under the canonical anti-isomorphism to A^op."""
    opp = algebra.opposite()
    field = algebra.field
    from .algebra import Path

    total = [field.zero] * opp._npaths
    for k, c in enumerate(vec):
        if c == field.zero:
            continue
        p = algebra.basis[k]
        q = Path(algebra.basis_target[k], tuple(reversed(p.arrows)))
        total[opp._path_index[q]] = field.add(total[opp._path_index[q]], c)
    return opp._reduce_path_vector(total)


def dual_presentation_map(m):
    """The map d1*: P0* -> P1* over the opposite algebra, realized.

    Returns (q0, q1, map) where q0, q1 are the opposite projective sums.
    """
    A = m.algebra
    opp = A.opposite()
    pres = minimal_presentation(m)
    q0 = ProjSum(opp, pres.p0.copies)
    q1 = ProjSum(opp, pres.p1.copies)
    blocks = _blocks_to_opposite(A, pres.blocks)
    # blocks is indexed [c][r] relative to the original, i.e. rows = p1 copies
    dstar = q0.realize_blocks(q1, blocks)
    return q0, q1, dstar


def transpose(m):
    """Auslander-Bridger transpose: cokernel of d1* over the opposite algebra."""
    _, _, dstar = dual_presentation_map(m)
    coker, _ = map_cokernel(dstar)
    return coker


def tau(m):
    """AR translate: kernel of nu(d1) = D(d1*)."""
    _, _, dstar = dual_presentation_map(m)
    nu_d1 = dualize_map(dstar)  # nu P1 -> nu P0
    kernel, _ = map_kernel(nu_d1)
    return kernel


def annihilator(m):
    """Basis of the kernel of the action map Lambda -> End_k(M)."""
    A = m.algebra
    field = A.field
    if m.total_dim == 0:
        return [linalg.unit_vector(field, A.dim, i) for i in range(A.dim)]
    cols = []
    for k in range(A.dim):
        mat = m.act_basis(k)
        cols.append([x for row in mat for x in row])
    return linalg.kernel_basis(field, linalg.transpose(cols), ncols=A.dim)


def is_sincere(m):
    return all(d > 0 for d in m.dims)


def is_faithful(m):
    return not annihilator(m)


# ---------------------------------------------------------------------------
# decomposition


def _submodule_pair(m, fmat_per_vertex):
    """Split M = ker(f) + im(f) for a module endomorphism with f^2-stable
    kernel/image (caller guarantees the sum is direct)."""
    field = m.algebra.field
    ker_bases = [
        linalg.kernel_basis(field, fmat_per_vertex[v], ncols=m.dims[v])
        for v in range(m.algebra.n_vertices)
    ]
    im_bases = []
    for v in range(m.algebra.n_vertices):
        ech = linalg.Echelon(field, m.dims[v])
        basis = []
        for col in linalg.transpose(fmat_per_vertex[v]):
            if ech.add(col):
                basis.append(col)
        im_bases.append(basis)
    k, _ = _submodule(m, ker_bases)
    i, _ = _submodule(m, im_bases)
    return k, i


def _poly_eval(field, coeffs, mats, dims):
    """Evaluate a polynomial (low-degree-first coeffs) at an endomorphism
    given per vertex; returns per-vertex matrices."""
    out = [linalg.zeros(field, d, d) for d in dims]
    for v in range(len(dims)):
        acc = linalg.zeros(field, dims[v], dims[v])
        power = linalg.identity(field, dims[v])
        for c in coeffs:
            if c != field.zero:
                acc = linalg.mat_add(field, acc, linalg.mat_scale(field, c, power))
            power = linalg.mat_mul(field, power, mats[v])
        out[v] = acc
    return out


def _min_poly(field, mats, dims):
    """Minimal polynomial (monic, low-degree-first) of a block endomorphism."""
    total = sum(dims)
    if total == 0:
        return [field.one]
    size = sum(d * d for d in dims)

    def flatten(ms):
        return [x for mat in ms for row in mat for x in row]

    powers = [[linalg.identity(field, d) for d in dims]]
    ech = linalg.Echelon(field, size)
    flat = [flatten(powers[0])]
    ech.add(flat[0])
    while True:
        prev = powers[-1]
        nxt = [linalg.mat_mul(field, prev[v], mats[v]) for v in range(len(dims))]
        fv = flatten(nxt)
        if not ech.add(fv):
            coords = linalg.solve(field, linalg.transpose(flat), fv)
            coeffs = [field.neg(c) for c in coords] + [field.one]
            return coeffs
        powers.append(nxt)
        flat.append(fv)


def _factor_min_poly(field, coeffs):
    """Coprime factor split of a minimal polynomial, via sympy.

    Returns (f, g) with f*g = minpoly up to scalars and gcd(f, g) = 1, or
    None when the minimal polynomial is a power of a single irreducible.
    """
    import sympy

    x = sympy.Symbol("x")
    if field.characteristic == 0:
        expr = sum(
            sympy.Rational(c.numerator, c.denominator) * x**i
            for i, c in enumerate(coeffs)
        )
        _, factors = sympy.factor_list(expr, x)
    else:
        expr = sum(int(c) * x**i for i, c in enumerate(coeffs))
        _, factors = sympy.factor_list(expr, x, modulus=field.characteristic)
    factors = [(p, e) for p, e in factors if p.has(x)]
    if len(factors) < 2:
        return None
    p0, e0 = factors[0]
    f = sympy.Poly(p0**e0, x)
    g = sympy.Poly(sympy.prod([p**e for p, e in factors[1:]]), x)

    def to_coeffs(poly):
        cs = list(reversed(poly.all_coeffs()))
        if field.characteristic == 0:
            from fractions import Fraction

            return [Fraction(str(c)) for c in cs]
        return [int(c) % field.characteristic for c in cs]

    return to_coeffs(f), to_coeffs(g)


def _try_split(m, endo):
    """Try to split M along one endomorphism; returns (M1, M2) or None."""
    field = m.algebra.field
    dims = list(m.dims)
    mats = endo.mats
    # stable kernel/image split: iterate to the total dimension
    power = mats
    for _ in range(max(1, m.total_dim).bit_length()):
        power = [linalg.mat_mul(field, p, p) for p in power]
    kdim = sum(
        m.dims[v] - linalg.rank(field, power[v]) for v in range(len(dims))
    )
    if 0 < kdim < m.total_dim:
        k, i = _submodule_pair(m, power)
        return k, i
    if kdim == m.total_dim:
        return None  # nilpotent
    # invertible: try a coprime factorization of the minimal polynomial
    minpoly = _min_poly(field, mats, dims)
    split = _factor_min_poly(field, minpoly)
    if split is None:
        return None
    fcoef, gcoef = split
    fmats = _poly_eval(field, fcoef, mats, dims)
    gmats = _poly_eval(field, gcoef, mats, dims)
    kf = [
        linalg.kernel_basis(field, fmats[v], ncols=dims[v])
        for v in range(len(dims))
    ]
    kg = [
        linalg.kernel_basis(field, gmats[v], ncols=dims[v])
        for v in range(len(dims))
    ]
    if sum(len(b) for b in kf) in (0, m.total_dim):
        return None
    m1, _ = _submodule(m, kf)
    m2, _ = _submodule(m, kg)
    return m1, m2


RANDOM_COMBINATIONS = 32
COEFF_BOUND = 9


def _split_indecomposable(m):
    """Split M into indecomposable leaves (list of Modules)."""
    if m.total_dim == 0:
        return []
    es = end_structure(m)
    if es.is_local:
        return [m]
    field = m.algebra.field
    candidates = list(es.basis)
    rng = random.Random(m.canonical_seed())
    for _ in range(RANDOM_COMBINATIONS):
        coeffs = [
            field.from_int(rng.randint(-COEFF_BOUND, COEFF_BOUND))
            for _ in es.basis
        ]
        candidates.append(_combine(m, es.basis, coeffs))
    for endo in candidates:
        result = _try_split(m, endo)
        if result is not None:
            m1, m2 = result
            return _split_indecomposable(m1) + _split_indecomposable(m2)
    raise DecompositionInconclusive(
        f"no split found: dim End/rad = {es.dim - len(es.radical)} > 1 "
        "(non-split field or isotypic block)"
    )


def decompose(m):
    """List of (indecomposable module, multiplicity), deterministic order."""
    leaves = _split_indecomposable(m)
    groups = []
    for leaf in leaves:
        for g in groups:
            if _indec_isomorphic(g[0], leaf):
                g[1] += 1
                break
        else:
            groups.append([leaf, 1])
    groups.sort(key=lambda g: (sum(g[0].dims), g[0].dims))
    return [(g[0], g[1]) for g in groups]


def _indec_isomorphic(m, n):
    """Isomorphism test for certified-indecomposable modules."""
    if m.dims != n.dims:
        return False
    field = m.algebra.field
    fwd = hom_basis(m, n)
    bwd = hom_basis(n, m)
    if not fwd or not bwd:
        return False
    es = end_structure(m)
    ech = linalg.Echelon(field, len(es.basis[0].flatten()) if es.basis else 0)
    for r in es.radical:
        ech.add(r.flatten())
    for f in fwd:
        for g in bwd:
            comp = g.compose(f)
            if not ech.contains(comp.flatten()):
                return True
    return False


def is_isomorphic(m, n):
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("modules over different algebras")
    if m.dims != n.dims:
        return False
    dm = decompose(m)
    dn = decompose(n)
    if len(dm) != len(dn):
        return False
    used = [False] * len(dn)
    for leaf, mult in dm:
        for j, (other, mult2) in enumerate(dn):
            if used[j] or mult != mult2:
                continue
            if _indec_isomorphic(leaf, other):
                used[j] = True
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Fac membership and approximations


def in_fac(x, u):
    """True iff X is a factor of a finite direct sum of copies of U."""
    if x.algebra is not u.algebra:
        raise AlgebraMismatch("modules over different algebras")
    field = x.algebra.field
    homs = hom_basis(u, x)
    for v in range(x.algebra.n_vertices):
        if x.dims[v] == 0:
            continue
        stacked = [[] for _ in range(x.dims[v])]
        for f in homs:
            for r in range(x.dims[v]):
                stacked[r].extend(f.mats[v][r])
        if linalg.rank(field, stacked) != x.dims[v]:
            return False
    return True


def minimal_left_approximation(x, summands):
    """Minimal left add(U)-approximation of X, U = direct sum of `summands`.

    The summands must be pairwise non-isomorphic indecomposables.  Returns
    (map X -> sum of U_i copies, target module, list of copy indices).
    """
    A = x.algebra
    field = A.field
    homs = [hom_basis(x, u) for u in summands]
    rads = []
    for i, ui in enumerate(summands):
        rads.append(end_structure(ui).radical)
    chosen = []  # (summand index, ModuleMap)
    for i, ui in enumerate(summands):
        if not homs[i]:
            continue
        ncols = len(homs[i][0].flatten())
        # maps that stay independent modulo radical-composed ones give the
        # multiplicity of U_i in the approximation target
        ech = linalg.Echelon(field, ncols)
        for j, uj in enumerate(summands):
            between = rads[i] if j == i else hom_basis(uj, ui)
            for psi in between:
                for f in homs[j]:
                    ech.add(psi.compose(f).flatten())
        for f in homs[i]:
            if ech.add(f.flatten()):
                chosen.append((i, f))
    copy_indices = [i for i, _ in chosen]
    target, inclusions, _ = direct_sum(A, [summands[i] for i in copy_indices])
    if not chosen:
        tgt = zero_module(A)
        return zero_map(x, tgt), tgt, []
    total = None
    for (i, f), inc in zip(chosen, inclusions):
        part = inc.compose(f)
        if total is None:
            total = part
        else:
            total = ModuleMap(
                x,
                target,
                [
                    linalg.mat_add(field, a, b)
                    for a, b in zip(total.mats, part.mats)
                ],
                check=False,
            )
    _verify_left_approximation(x, summands, chosen, total)
    return total, target, copy_indices


def _verify_left_approximation(x, summands, chosen, total):
    """Approximation property and minimality, asserted directly."""
    A = x.algebra
    field = A.field
    for i, ui in enumerate(summands):
        hx = hom_basis(x, ui)
        if not hx:
            continue
        target_dim = len(hx[0].flatten())
        span = linalg.Echelon(field, target_dim)
        full = linalg.Echelon(field, target_dim)
        for f in hx:
            full.add(f.flatten())
        for j, f in chosen:
            for psi in hom_basis(summands[j], ui):
                span.add(psi.compose(f).flatten())
        if span.rank < full.rank:
            raise ApproximationVerificationFailed(
                f"maps to summand {i} are not all realized through the target"
            )
    for drop in range(len(chosen)):
        kept = [c for k, c in enumerate(chosen) if k != drop]
        i_drop = chosen[drop][0]
        ui = summands[i_drop]
        hx = hom_basis(x, ui)
        target_dim = len(hx[0].flatten())
        span = linalg.Echelon(field, target_dim)
        full = linalg.Echelon(field, target_dim)
        for f in hx:
            full.add(f.flatten())
        for j, f in kept:
            for psi in hom_basis(summands[j], ui):
                span.add(psi.compose(f).flatten())
        if span.rank >= full.rank:
            raise ApproximationVerificationFailed(
                "approximation is not minimal: a copy is redundant"
            )
