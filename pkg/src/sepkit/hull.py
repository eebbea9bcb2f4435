"""Exact convex-hull facet counting, independent of the combinatorial route.

Vertices of the polytope are the 2m integer points +-(e_u - e_v). They
live in the zero-coordinate-sum hyperplane, so everything runs in the
chart that drops coordinate n-1 (the lattice basis e_i - e_{n-1}), where
the polytope is full-dimensional with the origin interior.

Two oracles are provided:

* `facet_count_hull` runs the double description method on the polar
  dual: facets of P are exactly the vertices of P* = {y : q.y <= 1 for
  all chart points q}, found as extreme rays of the homogenization cone.
  All arithmetic is on Python ints (rays are kept gcd-reduced), and every
  reported facet is re-verified against all points before counting.

* `facet_count_hull_subsets` solves, for every (n-1)-subset of the 2m
  points, the rational linear system a.q = 1 and accepts the hyperplane
  iff every point satisfies a.q <= 1; accepted normals are deduplicated
  exactly. Much slower; it cross-checks the double description oracle on
  tiny inputs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import InputError, OracleSizeError, VerificationError
from .graphs import Graph, is_connected

__all__ = [
    "hull_vertices",
    "facet_count_hull",
    "facet_count_hull_subsets",
    "HULL_SIZE_GUARD",
]

HULL_SIZE_GUARD = 8


def hull_vertices(g: Graph) -> list[tuple[int, ...]]:
    """The 2m points +-(e_u - e_v), as integer vectors of length n."""
    pts = []
    for u, v in g.edges:
        p = [0] * g.n
        p[u], p[v] = 1, -1
        pts.append(tuple(p))
        pts.append(tuple(-x for x in p))
    return pts


def _chart_points(g: Graph) -> list[tuple[int, ...]]:
    return [p[:-1] for p in hull_vertices(g)]


def _guard(g: Graph, force: bool) -> None:
    if not is_connected(g):
        raise InputError("hull oracle needs a connected graph")
    if g.n < 2:
        raise InputError("hull oracle needs at least 2 vertices")
    if g.n > HULL_SIZE_GUARD and not force:
        raise OracleSizeError(
            f"hull oracle guarded at n <= {HULL_SIZE_GUARD} (got n={g.n}); "
            "pass force=True to override"
        )


def _reduce(vec: list[int]) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in vec)
    return tuple(vec)


class _Echelon:
    """Incremental exact rank tracker with a mutually reduced basis."""

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[Fraction]] = []
        self.leads: list[int] = []

    def add(self, row: tuple[int, ...]) -> bool:
        vec = [Fraction(x) for x in row]
        for b, lead in zip(self.rows, self.leads):
            if vec[lead]:
                factor = vec[lead] / b[lead]
                vec = [x - factor * y for x, y in zip(vec, b)]
        lead = next((j for j, x in enumerate(vec) if x), None)
        if lead is None:
            return False
        for b in self.rows:
            if b[lead]:
                factor = b[lead] / vec[lead]
                for j in range(self.width):
                    b[j] -= factor * vec[j]
        self.rows.append(vec)
        self.leads.append(lead)
        return True


def _independent_rows(rows: list[tuple[int, ...]], need: int) -> list[int]:
    picked: list[int] = []
    ech = _Echelon(len(rows[0]))
    for idx, row in enumerate(rows):
        if ech.add(row):
            picked.append(idx)
            if len(picked) == need:
                return picked
    raise ValueError("rows do not span the space")


def _invert(mat: list[list[int]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan; raises on singular input."""
    d = len(mat)
    a = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(d)]
        for i, row in enumerate(mat)
    ]
    for col in range(d):
        piv = next((r for r in range(col, d) if a[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(d):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [row[d:] for row in a]


def _tight_mask(ray: tuple[int, ...], rows: list[tuple[int, ...]]) -> int:
    mask = 0
    for bit, h in enumerate(rows):
        if sum(a * b for a, b in zip(h, ray)) == 0:
            mask |= 1 << bit
    return mask


def facet_count_hull(g: Graph, force: bool = False) -> int:
    """Facet count of the hull via double description on the polar dual."""
    _guard(g, force)
    d = g.n - 1
    pts = _chart_points(g)
    # h . (y, t) >= 0 rows: (-q, 1) for each point, plus t >= 0
    ineqs: list[tuple[int, ...]] = [tuple(-x for x in q) + (1,) for q in pts]
    ineqs.append(tuple([0] * d + [1]))

    init = _independent_rows(ineqs, d + 1)
    inv = _invert([list(ineqs[i]) for i in init])
    rays: list[tuple[int, ...]] = []
    for j in range(d + 1):
        col = [inv[i][j] for i in range(d + 1)]
        lcm = 1
        for x in col:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        rays.append(_reduce([int(x * lcm) for x in col]))

    done = [ineqs[i] for i in init]
    zmask = [_tight_mask(r, done) for r in rays]
    init_set = set(init)

    for idx, h in enumerate(ineqs):
        if idx in init_set:
            continue
        svals = [sum(a * b for a, b in zip(h, r)) for r in rays]
        neg = [i for i, s in enumerate(svals) if s < 0]
        if neg:
            pos = [i for i, s in enumerate(svals) if s > 0]
            nrays = len(rays)
            fresh: dict[tuple[int, ...], None] = {}
            for ip in pos:
                zp = zmask[ip]
                sp = svals[ip]
                for im in neg:
                    t = zp & zmask[im]
                    if t.bit_count() < d - 1:
                        continue
                    if any(
                        k != ip and k != im and (zmask[k] & t) == t
                        for k in range(nrays)
                    ):
                        continue
                    sm = svals[im]
                    combo = [
                        sp * rays[im][j] - sm * rays[ip][j] for j in range(d + 1)
                    ]
                    fresh[_reduce(combo)] = None
            kept = {rays[i]: None for i, s in enumerate(svals) if s >= 0}
            kept.update(fresh)
            rays = list(kept)
        done.append(h)
        zmask = [_tight_mask(r, done) for r in rays]

    count = 0
    for r in rays:
        t = r[d]
        if t <= 0:
            raise VerificationError("polar dual came out unbounded; hull degenerate")
        # facet hyperplane q . (r_head / t) = 1; verify exactly in integers
        head = r[:d]
        tight = 0
        for q in pts:
            s = sum(a * b for a, b in zip(head, q))
            if s > t:
                raise VerificationError("double description produced a cut vertex")
            if s == t:
                tight += 1
        if tight < d:
            raise VerificationError("facet candidate touches fewer than d points")
        count += 1
    return count


def _solve_unit_rhs(rows: list[tuple[int, ...]]) -> list[Fraction] | None:
    """Solve A a = 1 exactly; None if A is singular."""
    d = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(1)] for row in rows]
    for col in range(d):
        piv = next((r for r in range(col, d) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(d):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[i][d] for i in range(d)]


def facet_count_hull_subsets(g: Graph, force: bool = False) -> int:
    """Facet count by brute force over (n-1)-point subsets (slow, tiny n)."""
    _guard(g, force)
    d = g.n - 1
    pts = _chart_points(g)
    normals: set[tuple[int, ...]] = set()
    for subset in combinations(pts, d):
        sol = _solve_unit_rhs(list(subset))
        if sol is None:
            continue
        if all(sum(a * x for a, x in zip(sol, q)) <= 1 for q in pts):
            lcm = 1
            for x in sol:
                lcm = lcm * x.denominator // gcd(lcm, x.denominator)
            normals.add(_reduce([int(x * lcm) for x in sol] + [lcm]))
    return len(normals)
