"""Bound quiver algebras kQ/I with an explicit path-class basis.

Construction works in the path algebra truncated at a nilpotency bound N:
the two-sided ideal generated by the relations is saturated by one-arrow
multiplications, and the algebra basis is the set of standard monomials
(paths not reducible by the echelonized ideal, preferring short paths in
the length-then-lex order).  Admissibility is certified by rebuilding at
bound N+1 and comparing dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg
from .errors import EmptyQuiver, NonAdmissible, UnknownVertex
from .fields import QQ


@dataclass(frozen=True)
class Path:
    """A path in the quiver: arrows listed in traversal order."""

    source: int  # vertex index
    arrows: tuple  # arrow indices, first entry traversed first


@dataclass
class QuiverPresentation:
    """Quiver with relations; relation terms are (coefficient, arrow-name
    sequence in traversal order) and each relation sums to zero."""

    vertices: list
    arrows: list  # (name, source vertex name, target vertex name)
    relations: list  # list of relations; relation = list of (coeff, [names])
    nilpotency_bound: int

    def validate(self):
        if not self.vertices:
            raise EmptyQuiver("quiver has no vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise NonAdmissible("duplicate vertex names")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise NonAdmissible("duplicate arrow names")
        vset = set(self.vertices)
        for name, s, t in self.arrows:
            if s not in vset or t not in vset:
                raise UnknownVertex(f"arrow {name}: unknown endpoint")
        if self.nilpotency_bound < 1:
            raise NonAdmissible("nilpotency bound must be positive")
        arrow_by_name = {a[0]: a for a in self.arrows}
        for rel in self.relations:
            if not rel:
                raise NonAdmissible("empty relation")
            ends = set()
            for _, path in rel:
                if len(path) < 2:
                    raise NonAdmissible(
                        "relation term of length < 2 (ideal must lie in R^2)"
                    )
                for x, y in zip(path, path[1:]):
                    if x not in arrow_by_name or y not in arrow_by_name:
                        raise UnknownVertex(f"unknown arrow in relation: {x}")
                    if arrow_by_name[x][2] != arrow_by_name[y][1]:
                        raise NonAdmissible(
                            f"non-composable relation path {path}"
                        )
                ends.add((arrow_by_name[path[0]][1], arrow_by_name[path[-1]][2]))
            if len(ends) > 1:
                raise NonAdmissible("relation terms are not parallel paths")

    def opposite(self):
        return QuiverPresentation(
            vertices=list(self.vertices),
            arrows=[(name, t, s) for name, s, t in self.arrows],
            relations=[
                [(c, list(reversed(path))) for c, path in rel]
                for rel in self.relations
            ],
            nilpotency_bound=self.nilpotency_bound,
        )


class Algebra:
    """Finite-dimensional bound quiver algebra with multiplication table.

    Immutable after construction.  Elements are coefficient vectors over
    `basis`, whose entries are path classes tagged with source and target.
    """

    def __init__(self, presentation, field=QQ):
        presentation.validate()
        self.presentation = presentation
        self.field = field
        self.vertex_names = list(presentation.vertices)
        self.vertex_index = {v: i for i, v in enumerate(self.vertex_names)}
        self.n_vertices = len(self.vertex_names)
        # arrows as (name, source index, target index)
        self.arrows = [
            (name, self.vertex_index[s], self.vertex_index[t])
            for name, s, t in presentation.arrows
        ]
        self.arrow_index = {a[0]: i for i, a in enumerate(self.arrows)}

        bound = presentation.nilpotency_bound
        paths, ech = self._truncated_ideal(bound)
        paths1, ech1 = self._truncated_ideal(bound + 1)
        dim = len(paths) - ech.rank
        dim1 = len(paths1) - ech1.rank
        if dim != dim1:
            raise NonAdmissible(
                f"dimension changes from {dim} (bound {bound}) to {dim1} "
                f"(bound {bound + 1}); the ideal is not admissible within the "
                "given bound.  For inhomogeneous relations this check is a "
                "documented heuristic."
            )

        self._paths = paths
        self._npaths = len(paths)
        self._path_index = {p: i for i, p in enumerate(paths)}
        self._ideal = ech
        pivot_set = set(ech.pivots)
        self.basis = [
            p for i, p in enumerate(paths) if self._revindex(i) not in pivot_set
        ]
        self.dim = len(self.basis)
        self._basis_index = {p: i for i, p in enumerate(self.basis)}
        self.basis_source = [p.source for p in self.basis]
        self.basis_target = [self.path_target(p) for p in self.basis]
        self.idempotent_index = [
            self._basis_index[Path(v, ())] for v in range(self.n_vertices)
        ]
        self._table = self._multiplication_table()
        self._opposite = None

    # ----- path bookkeeping -------------------------------------------

    def path_target(self, p):
        return self.arrows[p.arrows[-1]][2] if p.arrows else p.source

    def _all_paths(self, bound):
        paths = [Path(v, ()) for v in range(self.n_vertices)]
        frontier = paths[:]
        for _ in range(bound):
            nxt = []
            for p in frontier:
                t = self.path_target(p)
                for ai, (_, s, _t) in enumerate(self.arrows):
                    if s == t:
                        nxt.append(Path(p.source, p.arrows + (ai,)))
            paths.extend(nxt)
            frontier = nxt
        paths.sort(key=lambda p: (len(p.arrows), p.arrows, p.source))
        return paths

    def _revindex(self, i):
        # The ideal echelon pivots on the largest path in length-lex order,
        # so columns are reversed: index i becomes npaths-1-i.
        return self._npaths - 1 - i

    def _truncated_ideal(self, bound):
        field = self.field
        paths = self._all_paths(bound)
        index = {p: i for i, p in enumerate(paths)}
        npaths = len(paths)

        def rev(v):
            return v[::-1]

        ech = linalg.Echelon(field, npaths)
        queue = []
        for rel in self.presentation.relations:
            v = [field.zero] * npaths
            for coeff, names in rel:
                arrows = tuple(self.arrow_index[x] for x in names)
                if len(arrows) > bound:
                    continue  # truncated away
                src = self.arrows[arrows[0]][1]
                i = index[Path(src, arrows)]
                c = field.parse(str(coeff))
                v[i] = field.add(v[i], c)
            if ech.add(rev(v)):
                queue.append(v)
        while queue:
            v = queue.pop()
            for ai, (_, s, t) in enumerate(self.arrows):
                # post-compose with the arrow (arrow traversed last)
                post = [field.zero] * npaths
                pre = [field.zero] * npaths
                changed_post = changed_pre = False
                for i, c in enumerate(v):
                    if c == field.zero:
                        continue
                    p = paths[i]
                    if len(p.arrows) + 1 <= bound:
                        if self.path_target(p) == s:
                            j = index[Path(p.source, p.arrows + (ai,))]
                            post[j] = field.add(post[j], c)
                            changed_post = True
                        if p.source == t:
                            j = index[Path(s, (ai,) + p.arrows)]
                            pre[j] = field.add(pre[j], c)
                            changed_pre = True
                if changed_post and ech.add(rev(post)):
                    queue.append(post)
                if changed_pre and ech.add(rev(pre)):
                    queue.append(pre)
        return paths, ech

    def _reduce_path_vector(self, v):
        """Coordinates over the basis of an element given over all paths."""
        res = self._ideal.reduce(v[::-1])[::-1]
        out = [self.field.zero] * self.dim
        for i, c in enumerate(res):
            if c != self.field.zero:
                out[self._basis_index[self._paths[i]]] = c
        return out

    def _multiplication_table(self):
        field = self.field
        bound = self.presentation.nilpotency_bound
        table = {}
        for i, b in enumerate(self.basis):
            for j, c in enumerate(self.basis):
                # product b*c applies c first: target(c) must be source(b)
                if self.basis_target[j] != self.basis_source[i]:
                    continue
                arrows = c.arrows + b.arrows
                if len(arrows) > bound:
                    continue  # zero in the truncated algebra
                v = [field.zero] * self._npaths
                v[self._path_index[Path(c.source, arrows)]] = field.one
                prod = self._reduce_path_vector(v)
                entries = tuple(
                    (k, x) for k, x in enumerate(prod) if x != field.zero
                )
                if entries:
                    table[(i, j)] = entries
        return table

    # ----- element arithmetic -----------------------------------------

    def zero_element(self):
        return [self.field.zero] * self.dim

    def idempotent(self, v):
        out = self.zero_element()
        out[self.idempotent_index[v]] = self.field.one
        return out

    def arrow_element(self, name):
        ai = self.arrow_index[name]
        src = self.arrows[ai][1]
        out = self.zero_element()
        out[self._basis_index[Path(src, (ai,))]] = self.field.one
        return out

    def identity_element(self):
        out = self.zero_element()
        for i in self.idempotent_index:
            out[i] = self.field.one
        return out

    def multiply(self, a, b):
        """Product a*b (b acts first under the traversal convention)."""
        field = self.field
        out = self.zero_element()
        for i, x in enumerate(a):
            if x == field.zero:
                continue
            for j, y in enumerate(b):
                if y == field.zero:
                    continue
                for k, c in self._table.get((i, j), ()):
                    out[k] = field.add(out[k], field.mul(x, field.mul(y, c)))
        return out

    def basis_product(self, i, j):
        return self._table.get((i, j), ())

    def corner_indices(self, i, j):
        """Basis indices of e_i Λ e_j (path classes from vertex j to i)."""
        return [
            k
            for k in range(self.dim)
            if self.basis_target[k] == i and self.basis_source[k] == j
        ]

    def element_to_str(self, vec):
        field = self.field
        terms = []
        for i, c in enumerate(vec):
            if c == field.zero:
                continue
            p = self.basis[i]
            if p.arrows:
                label = "*".join(self.arrows[a][0] for a in reversed(p.arrows))
            else:
                label = f"e_{self.vertex_names[p.source]}"
            coeff = field.to_str(c)
            terms.append(label if coeff == "1" else f"{coeff}*{label}")
        return " + ".join(terms) if terms else "0"

    def opposite(self):
        """The opposite algebra; double opposite returns the original."""
        if self._opposite is None:
            opp = Algebra(self.presentation.opposite(), self.field)
            opp._opposite = self
            self._opposite = opp
        return self._opposite

    def __repr__(self):
        return (
            f"Algebra(dim={self.dim}, vertices={self.vertex_names}, "
            f"field={self.field!r})"
        )


def build_algebra(presentation, field=QQ):
    return Algebra(presentation, field)
