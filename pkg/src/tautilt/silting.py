"""Two-term complexes of projectives and silting mutation.

A two-term complex lives in degrees -1 and 0; the differential is a block
matrix of algebra elements, entry (row copy of P(j) in degree 0, column
copy of P(i) in degree -1) in e_i Lambda e_j, realized on representations
when linear algebra is needed.  Reduction is Gaussian elimination over the
algebra: a block entry with an invertible corner component lets us split
off a contractible summand.
"""

from __future__ import annotations

from . import linalg, modules, mutation, pairs
from .errors import AlgebraMismatch, MutationMismatch


def corner_inverse(algebra, i, u):
    """Inverse of u in the local corner algebra e_i Lambda e_i, or None.

    u is invertible exactly when its idempotent coefficient is nonzero
    (the corner of a basic algebra is local).
    """
    field = algebra.field
    if u[algebra.idempotent_index[i]] == field.zero:
        return None
    cs = algebra.corner_indices(i, i)
    cols = []
    for j in cs:
        basis_elt = algebra.zero_element()
        basis_elt[j] = field.one
        prod = algebra.multiply(u, basis_elt)
        cols.append([prod[k] for k in cs])
    rhs = [field.one if k == algebra.idempotent_index[i] else field.zero
           for k in cs]
    sol = linalg.solve(field, linalg.transpose(cols), rhs)
    if sol is None:
        raise RuntimeError("corner element with unit component not invertible")
    inv = algebra.zero_element()
    for j, c in zip(cs, sol):
        inv[j] = c
    return inv


class TwoTermComplex:
    """Complex P(-1) -> P(0) of projectives, stored as copy lists + blocks."""

    def __init__(self, algebra, copies1, copies0, blocks):
        self.algebra = algebra
        self.copies1 = list(copies1)  # degree -1
        self.copies0 = list(copies0)  # degree 0
        # blocks[r][c]: element of e_{copies1[c]} Lambda e_{copies0[r]}
        self.blocks = [[list(e) for e in row] for row in blocks]
        self._realized = None

    def realized(self):
        """(p1, p0, d) with d the realized ModuleMap p1.module -> p0.module."""
        if self._realized is None:
            p1 = modules.ProjSum(self.algebra, self.copies1)
            p0 = modules.ProjSum(self.algebra, self.copies0)
            d = p1.realize_blocks(p0, self.blocks)
            self._realized = (p1, p0, d)
        return self._realized

    def multiplicities(self):
        n = self.algebra.n_vertices
        m1, m0 = [0] * n, [0] * n
        for i in self.copies1:
            m1[i] += 1
        for i in self.copies0:
            m0[i] += 1
        return m1, m0

    def __repr__(self):
        return f"TwoTermComplex({self.copies1} -> {self.copies0})"


def lambda_complex(algebra):
    """[0 -> Lambda]."""
    copies0 = list(range(algebra.n_vertices))
    return TwoTermComplex(algebra, [], copies0, [[] for _ in copies0])


def shifted_lambda_complex(algebra):
    """[Lambda -> 0] = Lambda[1]."""
    return TwoTermComplex(algebra, list(range(algebra.n_vertices)), [], [])


def _find_pivot(algebra, copies_src, copies_tgt, blocks):
    """(r, c, inverse) for an entry with invertible corner part, or None."""
    field = algebra.field
    for r in range(len(copies_tgt)):
        for c in range(len(copies_src)):
            if copies_src[c] != copies_tgt[r]:
                continue
            inv = corner_inverse(algebra, copies_src[c], blocks[r][c])
            if inv is not None:
                return r, c, inv
    return None


def _schur_update(algebra, blocks, r0, c0, inv):
    """Eliminate the pivot at (r0, c0): Schur complement on the rest."""
    A = algebra
    out = []
    for r in range(len(blocks)):
        if r == r0:
            continue
        row = []
        for c in range(len(blocks[0]) if blocks else 0):
            if c == c0:
                continue
            # morphisms apply left-to-right: first the pivot-row entry,
            # then the inverse, then the pivot-column entry
            corr = A.multiply(A.multiply(blocks[r0][c], inv), blocks[r][c0])
            row.append(
                [A.field.sub(x, y) for x, y in zip(blocks[r][c], corr)]
            )
        out.append(row)
    return out


def _drop(lst, i):
    return [x for j, x in enumerate(lst) if j != i]


def reduce_complex(cx):
    """Homotopy-equivalent complex with all entries in the radical."""
    A = cx.algebra
    copies1 = list(cx.copies1)
    copies0 = list(cx.copies0)
    blocks = [[list(e) for e in row] for row in cx.blocks]
    while True:
        hit = _find_pivot(A, copies1, copies0, blocks)
        if hit is None:
            break
        r0, c0, inv = hit
        blocks = _schur_update(A, blocks, r0, c0, inv)
        copies1 = _drop(copies1, c0)
        copies0 = _drop(copies0, r0)
    return TwoTermComplex(A, copies1, copies0, blocks)


# ---------------------------------------------------------------------------
# homotopy Hom spaces


def _flatten_pair(f1, f0):
    return f1.flatten() + f0.flatten()


class KHomSpace:
    """Hom in the homotopy category between two two-term complexes (shift 0).

    reps are chain-map representatives (f1, f0); coordinates are taken
    modulo null-homotopic maps.
    """

    def __init__(self, p, q):
        if p.algebra is not q.algebra:
            raise AlgebraMismatch("complexes over different algebras")
        self.p = p
        self.q = q
        field = p.algebra.field
        p1, p0, dp = p.realized()
        q1, q0, dq = q.realized()
        b1 = modules.hom_basis(p1.module, q1.module)
        b0 = modules.hom_basis(p0.module, q0.module)
        # chain condition: f0 . dp = dq . f1
        cond_rows = []
        probe = None
        for f1 in b1:
            vec = dq.compose(f1).flatten()
            cond_rows.append([field.neg(x) for x in vec])
            probe = len(vec)
        for f0 in b0:
            vec = f0.compose(dp).flatten()
            cond_rows.append(vec)
            probe = len(vec)
        ncoef = len(b1) + len(b0)
        if ncoef == 0 or probe in (None, 0):
            kern = [linalg.unit_vector(field, ncoef, i) for i in range(ncoef)]
        else:
            kern = linalg.kernel_basis(
                field, linalg.transpose(cond_rows), ncols=ncoef
            )
        self._chain_maps = []
        for coeffs in kern:
            f1 = _combine_or_zero(field, b1, coeffs[: len(b1)],
                                  p1.module, q1.module)
            f0 = _combine_or_zero(field, b0, coeffs[len(b1):],
                                  p0.module, q0.module)
            self._chain_maps.append((f1, f0))
        # null-homotopic subspace: h: P0 -> Q1 gives (h . dp, dq . h)
        width = len(_flatten_pair(*self._chain_maps[0])) if self._chain_maps \
            else 0
        self._ncols = width
        homotopies = []
        for h in modules.hom_basis(p0.module, q1.module):
            homotopies.append(_flatten_pair(h.compose(dp), dq.compose(h)))
        self._sub = linalg.Echelon(field, width)
        for v in homotopies:
            self._sub.add(v)
        ech = linalg.Echelon(field, width)
        for v in homotopies:
            ech.add(v)
        self.reps = []
        for fm in self._chain_maps:
            if ech.add(_flatten_pair(*fm)):
                self.reps.append(fm)
        self._res = [self._sub.reduce(_flatten_pair(*fm)) for fm in self.reps]
        self.dim = len(self.reps)
        self.field = field

    def coords(self, f1, f0):
        """Coordinates of a chain map over reps, modulo homotopy."""
        if not self.reps:
            return []
        target = self._sub.reduce(_flatten_pair(f1, f0))
        sol = linalg.solve(self.field, linalg.transpose(self._res), target)
        if sol is None:
            raise ValueError("map is not in the homotopy Hom space")
        return sol


def _combine_or_zero(field, basis, coeffs, src, tgt):
    live = [(c, f) for c, f in zip(coeffs, basis) if c != field.zero]
    if not live:
        return modules.zero_map(src, tgt)
    out = None
    for c, f in live:
        scaled = [linalg.mat_scale(field, c, m) for m in f.mats]
        out = scaled if out is None else [
            linalg.mat_add(field, a, b) for a, b in zip(out, scaled)
        ]
    return modules.ModuleMap(src, tgt, out, check=False)


def compose_chain(f, g):
    """Chain map f after g, componentwise."""
    return (f[0].compose(g[0]), f[1].compose(g[1]))


def hom_k(p, q, shift):
    """(dimension, basis) of Hom in the homotopy category, shift in -1,0,1."""
    if p.algebra is not q.algebra:
        raise AlgebraMismatch("complexes over different algebras")
    field = p.algebra.field
    p1, p0, dp = p.realized()
    q1, q0, dq = q.realized()
    if shift == 1:
        # all maps P(-1) -> Q(0), modulo phi.dp (phi: P0->Q0) and dq.psi
        space = modules.hom_basis(p1.module, q0.module)
        if not space:
            return 0, []
        width = len(space[0].flatten())
        ech = linalg.Echelon(field, width)
        for phi in modules.hom_basis(p0.module, q0.module):
            ech.add(phi.compose(dp).flatten())
        for psi in modules.hom_basis(p1.module, q1.module):
            ech.add(dq.compose(psi).flatten())
        reps = [f for f in space if ech.add(f.flatten())]
        return len(reps), reps
    if shift == 0:
        kh = KHomSpace(p, q)
        return kh.dim, kh.reps
    if shift == -1:
        # maps P(0) -> Q(-1) with dq-composite zero; no homotopies exist
        reps = [
            f
            for f in modules.hom_basis(p0.module, q1.module)
            if dq.compose(f).is_zero()
        ]
        return len(reps), reps
    return 0, []


def is_presilting(cx):
    return hom_k(cx, cx, 1)[0] == 0


def is_silting(cx):
    if not is_presilting(cx):
        return False
    pair = complex_to_pair(cx)
    return pair.count == cx.algebra.n_vertices


def silting_leq(p, q):
    """P <= Q in the silting order (Q >= P iff Hom(Q, P[1]) = 0)."""
    return hom_k(q, p, 1)[0] == 0


# ---------------------------------------------------------------------------
# the bijection with pairs


def pair_to_complex(pair):
    """(M, P) -> (P1 + P -> P0), block sum of minimal presentations."""
    A = pair.algebra
    copies1, copies0 = [], []
    summand_blocks = []
    for m in pair.summands:
        pres = modules.minimal_presentation(m)
        summand_blocks.append((pres.p1.copies, pres.p0.copies, pres.blocks))
    for v in pair.support:
        summand_blocks.append(([v], [], []))
    for c1, c0, _ in summand_blocks:
        copies1.extend(c1)
        copies0.extend(c0)
    blocks = [
        [A.zero_element() for _ in copies1] for _ in copies0
    ]
    roff = coff = 0
    for c1, c0, blk in summand_blocks:
        for r in range(len(c0)):
            for c in range(len(c1)):
                blocks[roff + r][coff + c] = list(blk[r][c])
        roff += len(c0)
        coff += len(c1)
    return TwoTermComplex(A, copies1, copies0, blocks)


def complex_to_pair(cx):
    """H0 plus the shifted-projective support, as a validated pair."""
    A = cx.algebra
    field = A.field
    red = reduce_complex(cx)
    p1, p0, d = red.realized()
    support = []
    for v in range(A.n_vertices):
        gen_rows = [
            r
            for r, (pos, k) in enumerate(p1.labels[v])
            if k == A.idempotent_index[v]
        ]
        if not gen_rows:
            continue
        kern = linalg.kernel_basis(
            field, d.mats[v], ncols=p1.module.dims[v]
        )
        proj = [[vec[r] for r in gen_rows] for vec in kern]
        s = linalg.rank(field, proj)
        support.extend([v] * s)
    coker, _ = modules.map_cokernel(d)
    summands = [coker] if coker.total_dim else []
    return pairs.check_pair(A, summands, support)


# ---------------------------------------------------------------------------
# mutation


def _indecomposable_complexes(pair):
    """One reduced indecomposable complex per position of the pair."""
    out = []
    for m in pair.summands:
        pres = modules.minimal_presentation(m)
        out.append(
            TwoTermComplex(
                pair.algebra, pres.p1.copies, pres.p0.copies, pres.blocks
            )
        )
    for v in pair.support:
        out.append(TwoTermComplex(pair.algebra, [v], [], []))
    return out


def _k_end_radical(cx):
    """Radical coordinate vectors of End in the homotopy category."""
    kh = KHomSpace(cx, cx)
    d = kh.dim
    field = kh.field
    if d == 0:
        return kh, []
    lefts = []
    for f in kh.reps:
        cols = [kh.coords(*compose_chain(f, g)) for g in kh.reps]
        lefts.append(linalg.transpose(cols))
    gram = [
        [_tr(field, linalg.mat_mul(field, lefts[i], lefts[j]))
         for j in range(d)]
        for i in range(d)
    ]
    rad_coords = linalg.kernel_basis(field, gram, ncols=d)
    return kh, rad_coords


def _tr(field, mat):
    s = field.zero
    for i in range(len(mat)):
        s = field.add(s, mat[i][i])
    return s


def _chain_combine(kh, coords):
    field = kh.field
    f1 = _combine_or_zero(
        field, [f for f, _ in kh.reps], coords,
        kh.reps[0][0].source, kh.reps[0][0].target,
    )
    f0 = _combine_or_zero(
        field, [f for _, f in kh.reps], coords,
        kh.reps[0][1].source, kh.reps[0][1].target,
    )
    return f1, f0


def _minimal_k_approximation(x, others, reverse=False):
    """Chosen chain maps for the minimal add(others)-approximation of x.

    Forward (reverse=False): left approximation, maps x -> Q_j.
    reverse=True: right approximation, maps Q_j -> x.
    Returns list of (summand index, chain map).
    """
    field = x.algebra.field
    spaces = []
    for q in others:
        spaces.append(KHomSpace(x, q) if not reverse else KHomSpace(q, x))
    chosen = []
    for i, q in enumerate(others):
        if spaces[i].dim == 0:
            continue
        width = spaces[i]._ncols
        ech = linalg.Echelon(field, width)
        for j, q2 in enumerate(others):
            if j == i:
                kh, rad = _k_end_radical(q)
                between = [_chain_combine(kh, c) for c in rad]
            else:
                between = (
                    KHomSpace(q2, q).reps if not reverse
                    else KHomSpace(q, q2).reps
                )
            for psi in between:
                for f in spaces[j].reps:
                    comp = (
                        compose_chain(psi, f) if not reverse
                        else compose_chain(f, psi)
                    )
                    ech.add(_flatten_pair(*comp))
        for f in spaces[i].reps:
            if ech.add(_flatten_pair(*f)):
                chosen.append((i, f))
    return chosen


def direct_sum_complexes(algebra, parts):
    copies1, copies0 = [], []
    for p in parts:
        copies1.extend(p.copies1)
        copies0.extend(p.copies0)
    blocks = [[algebra.zero_element() for _ in copies1] for _ in copies0]
    roff = coff = 0
    for p in parts:
        for r in range(len(p.copies0)):
            for c in range(len(p.copies1)):
                blocks[roff + r][coff + c] = list(p.blocks[r][c])
        roff += len(p.copies0)
        coff += len(p.copies1)
    return TwoTermComplex(algebra, copies1, copies0, blocks)


def silting_mutate(pair_complex, position, _verify=True):
    """Mutate a two-term silting complex at an indecomposable summand.

    `position` indexes the positions of complex_to_pair(P).  The mutation
    is computed as a mapping cone over the minimal approximation in the
    homotopy category, reduced back to two terms, and checked against the
    pair-side mutation.
    """
    A = pair_complex.algebra
    pair = complex_to_pair(pair_complex)
    if isinstance(position, int):
        pos = pair.positions()[position]
    else:
        pos = position
    idx = pair.positions().index(pos)
    parts = _indecomposable_complexes(pair)
    x = parts[idx]
    others = [p for i, p in enumerate(parts) if i != idx]
    direction = mutation.position_direction(pair, pos)
    if direction == "left":
        chosen = _minimal_k_approximation(x, others, reverse=False)
        cone = _left_cone(A, x, others, chosen)
    else:
        chosen = _minimal_k_approximation(x, others, reverse=True)
        cone = _right_cone(A, x, others, chosen)
    result = reduce_complex(direct_sum_complexes(A, others + [cone]))
    if _verify:
        pair_route, _, _ = mutation.mutate(pair, pos, verify=False)
        if complex_to_pair(result).key() != pair_route.key():
            raise MutationMismatch(
                "cone mutation disagrees with the pair mutation"
            )
    return result


def _approx_target_blocks(A, others, chosen):
    """Copies and differential blocks of the chosen approximation target."""
    copies1, copies0 = [], []
    blocks = []
    offs = []
    for i, _ in chosen:
        q = others[i]
        offs.append((len(copies1), len(copies0)))
        copies1.extend(q.copies1)
        copies0.extend(q.copies0)
    d = [[A.zero_element() for _ in copies1] for _ in copies0]
    for (i, _), (c1off, c0off) in zip(chosen, offs):
        q = others[i]
        for r in range(len(q.copies0)):
            for c in range(len(q.copies1)):
                d[c0off + r][c1off + c] = list(q.blocks[r][c])
    return copies1, copies0, d, offs


def _chain_blocks(x_sum, q_sum, fmap):
    """Blocks of a ModuleMap between realized projective sums."""
    return x_sum.extract_blocks(q_sum, fmap)


def _left_cone(A, x, others, chosen):
    """Cone of the left approximation f: X -> Q', reduced to two terms.

    Cone degrees: X1 (at -2) -> Q1 + X0 (at -1) -> Q0 (at 0); the -2 end
    is eliminated through its differential, which leaves the -1 -> 0
    differential untouched apart from dropped columns.
    """
    q_copies1, q_copies0, q_blocks, offs = _approx_target_blocks(
        A, others, chosen
    )
    x1, x0, _ = x.realized()
    neg = lambda e: [A.field.neg(c) for c in e]
    copies_a = list(x.copies1)
    copies_b = list(q_copies1) + list(x.copies0)
    copies_c = list(q_copies0)
    # d2: rows over B = Q1 then X0; columns over A = X1
    d2 = [[A.zero_element() for _ in copies_a] for _ in copies_b]
    # f1 components: X1 -> Q1 per chosen map
    for (i, f), (c1off, _) in zip(chosen, offs):
        q = others[i]
        q1, _, _ = q.realized()
        fb = x1.extract_blocks(q1, f[0])
        for r in range(len(q.copies1)):
            for c in range(len(x.copies1)):
                d2[c1off + r][c] = fb[r][c]
    for r in range(len(x.copies0)):
        for c in range(len(x.copies1)):
            d2[len(q_copies1) + r][c] = neg(x.blocks[r][c])
    # d1: rows over C = Q0; columns over B = Q1 then X0
    d1 = [[A.zero_element() for _ in copies_b] for _ in copies_c]
    for r in range(len(q_copies0)):
        for c in range(len(q_copies1)):
            d1[r][c] = list(q_blocks[r][c])
    for (i, f), (_, c0off) in zip(chosen, offs):
        q = others[i]
        _, q0, _ = q.realized()
        fb = x0.extract_blocks(q0, f[1])
        for r in range(len(q.copies0)):
            for c in range(len(x.copies0)):
                d1[c0off + r][len(q_copies1) + c] = fb[r][c]
    # eliminate the degree -2 end
    while copies_a:
        hit = _find_pivot(A, copies_a, copies_b, d2)
        if hit is None:
            raise MutationMismatch(
                "left mutation cone does not reduce to two terms"
            )
        r0, c0, inv = hit
        d2 = _schur_update(A, d2, r0, c0, inv)
        copies_a = _drop(copies_a, c0)
        copies_b = _drop(copies_b, r0)
        d1 = [_drop(row, r0) for row in d1]
    return TwoTermComplex(A, copies_b, copies_c, d1)


def _right_cone(A, x, others, chosen):
    """Shifted cone of the right approximation g: Q' -> X, reduced.

    Degrees: Q1 (at -1) -> X1 + Q0 (at 0) -> X0 (at 1); the +1 end is
    eliminated through the top differential, whose eliminations apply a
    Schur correction to the top map and drop rows of the lower one.
    """
    q_copies1, q_copies0, q_blocks, offs = _approx_target_blocks(
        A, others, chosen
    )
    copies_a = list(q_copies1)
    copies_b = list(x.copies1) + list(q_copies0)
    copies_c = list(x.copies0)
    x1, x0, _ = x.realized()
    # d2: rows over B = X1 then Q0; columns over A = Q1
    d2 = [[A.zero_element() for _ in copies_a] for _ in copies_b]
    for (i, g), (c1off, _) in zip(chosen, offs):
        q = others[i]
        q1, _, _ = q.realized()
        gb = q1.extract_blocks(x1, g[0])
        for r in range(len(x.copies1)):
            for c in range(len(q.copies1)):
                d2[r][c1off + c] = gb[r][c]
    neg = lambda e: [A.field.neg(c) for c in e]
    for r in range(len(q_copies0)):
        for c in range(len(q_copies1)):
            d2[len(x.copies1) + r][c] = neg(q_blocks[r][c])
    # d1: rows over C = X0; columns over B = X1 then Q0
    d1 = [[A.zero_element() for _ in copies_b] for _ in copies_c]
    for r in range(len(x.copies0)):
        for c in range(len(x.copies1)):
            d1[r][c] = list(x.blocks[r][c])
    for (i, g), (_, c0off) in zip(chosen, offs):
        q = others[i]
        _, q0, _ = q.realized()
        gb = q0.extract_blocks(x0, g[1])
        for r in range(len(x.copies0)):
            for c in range(len(q.copies0)):
                d1[r][len(x.copies1) + c0off + c] = gb[r][c]
    # eliminate the degree +1 end through d1
    while copies_c:
        hit = _find_pivot(A, copies_b, copies_c, d1)
        if hit is None:
            raise MutationMismatch(
                "right mutation cone does not reduce to two terms"
            )
        r0, c0, inv = hit
        d1 = _schur_update(A, d1, r0, c0, inv)
        copies_c = _drop(copies_c, r0)
        copies_b = _drop(copies_b, c0)
        d2 = _drop(d2, c0)
    return TwoTermComplex(A, copies_a, copies_b, d2)
