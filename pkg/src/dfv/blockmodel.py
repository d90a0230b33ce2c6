"""Matrix picture of classical parabolic pairs and a generic-orbit oracle.

Conventions: the Borel consists of upper-triangular matrices; SO_n
preserves the symmetric form with the antidiagonal unit matrix; Sp_n
preserves the skew form whose matrix has 1 on the upper half of the
antidiagonal and -1 on the lower half.  With these forms so_n consists
of matrices antisymmetric about the secondary diagonal (zero on it),
and sp_n has symmetric off-diagonal quadrants and a free secondary
diagonal.

A pair of block parabolics determines a grid of nonzero blocks X_{ij}
of p_u ∩ q_u over the common refinement of the two compositions, on
which B ∩ L ∩ M acts by X_{ij} -> A_i X_{ij} A_j^{-1}.  The complexity
equals the codimension of a generic orbit; the oracle here evaluates
the rank of the infinitesimal action at random integer points with
exact arithmetic.  Stroke parabolics are realized by conjugating block
membership with the transposition of the two middle basis vectors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexity import integer_rank
from .parabolic import BlockComposition, ParabolicError

Matrix = list[list[int]]


class BlockModelError(RuntimeError):
    pass


# -- block grids ----------------------------------------------------------

@dataclass(frozen=True)
class BlockGrid:
    """Locations of the nonzero blocks of p_u ∩ q_u.

    ``active`` stores, for SO/Sp, only cells on or below the secondary
    diagonal of the grid (i + j >= r + 1); their mirror images are
    implied by the form symmetry.  For SL it stores all cells.
    """

    family: str
    refined: tuple[int, ...]
    active: frozenset[tuple[int, int]]
    antidiag: frozenset[tuple[int, int]]

    @property
    def r(self) -> int:
        return len(self.refined)

    def mirror(self, cell: tuple[int, int]) -> tuple[int, int]:
        i, j = cell
        return (self.r + 1 - j, self.r + 1 - i)

    def full_active(self) -> frozenset[tuple[int, int]]:
        if self.family == "SL":
            return self.active
        return self.active | frozenset(self.mirror(c) for c in self.active)


def build_block_grid(family: str, p: BlockComposition, q: BlockComposition) -> BlockGrid:
    """Grid of nonzero blocks over the common refinement of two compositions."""
    if p.family != family or q.family != family:
        raise ParabolicError("grid compositions must share the family")
    if p.n != q.n:
        raise ParabolicError(f"mismatched matrix sizes {p.n} != {q.n}")
    if p.stroke or q.stroke:
        raise ParabolicError(
            "block grids are defined for unstroked compositions; reduce stroke "
            "pairs first (see reduce_stroke_pair)"
        )
    bounds = sorted(set(p.boundaries()) | set(q.boundaries()))
    refined = []
    prev = 0
    for b in bounds + [p.n]:
        refined.append(b - prev)
        prev = b
    r = len(refined)
    pidx = _refined_to_block(refined, p)
    qidx = _refined_to_block(refined, q)
    cells = set()
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            if pidx[i] != pidx[j] and qidx[i] != qidx[j]:
                cells.add((i, j))
    anti = frozenset(c for c in cells if c[0] + c[1] == r + 1)
    if family != "SL":
        cells = {c for c in cells if c[0] + c[1] >= r + 1}
    return BlockGrid(family, tuple(refined), frozenset(cells), anti)


def _refined_to_block(refined, comp: BlockComposition) -> dict[int, int]:
    out = {}
    pos = 0
    bounds = list(comp.boundaries()) + [comp.n]
    for i, k in enumerate(refined, start=1):
        pos += k
        out[i] = next(bi for bi, b in enumerate(bounds) if pos <= b)
    return out


def reduce_stroke_pair(
    p: BlockComposition, q: BlockComposition
) -> tuple[BlockComposition, BlockComposition]:
    """Replace a stroked pair by an unstroked one without raising complexity.

    If both are stroked the simultaneous diagram automorphism removes
    both strokes exactly.  A single stroked parabolic is enlarged by
    merging its two middle blocks (the merged parabolic contains it, so
    the complexity can only drop); the result is suitable for lower
    bounds.
    """
    if p.stroke and q.stroke:
        return p.automorphism_image(), q.automorphism_image()
    out = []
    for c in (p, q):
        if c.stroke:
            sizes = c.sizes
            h = len(sizes) // 2
            merged = sizes[: h - 1] + (2 * sizes[h - 1],) + sizes[h + 1 :]
            c = BlockComposition(c.family, c.n, merged)
        out.append(c)
    return out[0], out[1]


# -- pattern lower bounds -------------------------------------------------

def pattern_lower_bound(grid: BlockGrid) -> int:
    """Best complexity lower bound from invariant patterns in the grid.

    Counts pairwise independent "square" (four cells at the corners of a
    rectangle) and "triangle" (cells ij, ik, jk) patterns, and rows of
    at least 3 / 4 blocks of height >= 2.  For SO, cells on the secondary
    diagonal carry no invariant and are excluded.  Patterns related by
    the secondary-diagonal mirror share their invariant, so independence
    is judged on mirror-closed cell sets.
    """
    cells = grid.full_active()
    if grid.family == "SO":
        cells = cells - grid.antidiag
    patterns = _invariant_patterns(grid, cells)
    packing = _max_disjoint(patterns, limit=3)
    row_bound = 0
    for i in range(1, grid.r + 1):
        if grid.refined[i - 1] < 2:
            continue
        count = sum(1 for c in cells if c[0] == i)
        if count >= 4:
            row_bound = max(row_bound, 2)
        elif count >= 3:
            row_bound = max(row_bound, 1)
    return max(packing, row_bound)


def _invariant_patterns(grid: BlockGrid, cells, cap: int = 256):
    """Mirror-closed cell sets of square and triangle patterns.

    For SO/Sp a pattern may not contain two cells that are mirror images
    of each other: such blocks are tied by the form symmetry and are not
    independent coordinates, so the invariant construction fails.
    """
    def closure(cs):
        if grid.family == "SL":
            return frozenset(cs)
        for c in cs:
            m = grid.mirror(c)
            if m != c and m in cs:
                return None
        return frozenset(cs) | frozenset(grid.mirror(c) for c in cs)

    patterns = []
    by_row: dict[int, set[int]] = {}
    for (i, j) in cells:
        by_row.setdefault(i, set()).add(j)
    rows = sorted(by_row)
    # squares
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            common = sorted(by_row[rows[a]] & by_row[rows[b]])
            for x in range(len(common)):
                for y in range(x + 1, len(common)):
                    pat = closure(
                        {
                            (rows[a], common[x]),
                            (rows[a], common[y]),
                            (rows[b], common[x]),
                            (rows[b], common[y]),
                        }
                    )
                    if pat is not None:
                        patterns.append(pat)
                    if len(patterns) >= cap:
                        return patterns
    # triangles
    for (i, j) in cells:
        for k in by_row.get(i, ()):
            if k > j and (j, k) in cells:
                pat = closure({(i, j), (i, k), (j, k)})
                if pat is not None:
                    patterns.append(pat)
                if len(patterns) >= cap:
                    return patterns
    return patterns


def _max_disjoint(patterns, limit: int) -> int:
    if not patterns:
        return 0
    best = 1
    # exhaustive search for a disjoint pair, greedy beyond that
    for a in range(len(patterns)):
        if best >= 2:
            break
        for b in range(a + 1, len(patterns)):
            if not patterns[a] & patterns[b]:
                best = 2
                break
    if best >= 2 and limit > 2:
        for a in range(len(patterns)):
            chosen = [patterns[a]]
            used = set(patterns[a])
            for p in patterns:
                if len(chosen) >= limit:
                    break
                if not (p & used):
                    chosen.append(p)
                    used |= p
            best = max(best, len(chosen))
    return min(best, limit)


# -- explicit matrix models ----------------------------------------------

def _stroke_posmap(comp: BlockComposition):
    """Position relabeling realizing the stroke (middle transposition)."""
    if not comp.stroke:
        return lambda a: a
    l = comp.n // 2

    def w(a: int) -> int:
        if a == l:
            return l + 1
        if a == l + 1:
            return l
        return a

    return w


def _block_of(comp: BlockComposition):
    bounds = list(comp.boundaries()) + [comp.n]
    w = _stroke_posmap(comp)

    def idx(a: int) -> int:
        wa = w(a)
        return next(i for i, b in enumerate(bounds) if wa <= b)

    return idx


def _inside_blocks(comp: BlockComposition):
    idx = _block_of(comp)
    return lambda a, b: idx(a) == idx(b)


def _basis_elements(family: str, n: int):
    """(positions, coefficients) of a spanning set of the Lie algebra.

    Off-diagonal elements are listed once per symmetry class, keyed by a
    representative position (a, b); diagonal torus elements separately.
    """
    elems: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    if family == "SL":
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if a != b:
                    elems[(a, b)] = [(a, b, 1)]
        torus = [[(i, i, 1), (i + 1, i + 1, -1)] for i in range(1, n)]
        return elems, torus
    if family == "SO":
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if a + b < n + 1:
                    elems[(a, b)] = [(a, b, 1), (n + 1 - b, n + 1 - a, -1)]
        torus = [[(a, a, 1), (n + 1 - a, n + 1 - a, -1)] for a in range(1, n // 2 + 1)]
        return elems, torus
    if family == "Sp":
        l = n // 2

        def tau(u: int) -> int:
            return -1 if u <= l else 1

        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if a + b < n + 1 and a != b:
                    elems[(a, b)] = [(a, b, 1), (n + 1 - b, n + 1 - a, -tau(b) * tau(a))]
                elif a + b == n + 1:
                    elems[(a, b)] = [(a, b, 1)]
        torus = [[(a, a, 1), (n + 1 - a, n + 1 - a, -1)] for a in range(1, l + 1)]
        return elems, torus
    raise BlockModelError(f"unknown family {family!r}")


def nilradical_intersection_basis(p: BlockComposition, q: BlockComposition):
    """Basis of p_u ∩ q_u as sparse matrices (strictly upper, off-block)."""
    n = p.n
    elems, _ = _basis_elements(p.family, n)
    in_p = _inside_blocks(p)
    in_q = _inside_blocks(q)
    out = []
    for (a, b), entries in sorted(elems.items()):
        if a < b and not in_p(a, b) and not in_q(a, b):
            out.append(entries)
    return out


def borel_levi_basis(p: BlockComposition, q: BlockComposition):
    """Basis of b ∩ l ∩ m: upper-triangular matrices inside both Levis."""
    n = p.n
    elems, torus = _basis_elements(p.family, n)
    in_p = _inside_blocks(p)
    in_q = _inside_blocks(q)
    out = list(torus)
    for (a, b), entries in sorted(elems.items()):
        if a < b and in_p(a, b) and in_q(a, b):
            out.append(entries)
    return out


def _sparse_to_matrix(entries, n: int) -> Matrix:
    m = [[0] * n for _ in range(n)]
    for a, b, c in entries:
        m[a - 1][b - 1] += c
    return m


def _bracket(x: Matrix, y: Matrix) -> Matrix:
    n = len(x)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        xi = x[i]
        oi = out[i]
        for k in range(n):
            c = xi[k]
            if c:
                yk = y[k]
                for j in range(n):
                    if yk[j]:
                        oi[j] += c * yk[j]
    for i in range(n):
        yi = y[i]
        oi = out[i]
        for k in range(n):
            c = yi[k]
            if c:
                xk = x[k]
                for j in range(n):
                    if xk[j]:
                        oi[j] -= c * xk[j]
    return out


def generic_orbit_complexity(
    p: BlockComposition,
    q: BlockComposition,
    seed: int = 0,
    samples: int = 3,
    entry_bound: int = 10**6,
    n_cap: int = 20,
) -> int:
    """Codimension of a generic B ∩ L ∩ M orbit on p_u ∩ q_u.

    Exact integer evaluation of the infinitesimal action at random
    points; the rank at any point can only underestimate the generic
    rank, so the maximum over several samples is taken.
    """
    if p.family != q.family or p.n != q.n:
        raise ParabolicError("oracle needs two parabolics of the same group")
    if p.n > n_cap:
        raise BlockModelError(f"matrix size {p.n} above oracle cap {n_cap}")
    n = p.n
    module = [_sparse_to_matrix(e, n) for e in nilradical_intersection_basis(p, q)]
    acting = [_sparse_to_matrix(e, n) for e in borel_levi_basis(p, q)]
    dim = len(module)
    if dim == 0:
        return 0
    rng = random.Random(seed)
    best = 0
    for _ in range(max(1, samples)):
        point = [[0] * n for _ in range(n)]
        for mat in module:
            c = rng.randint(-entry_bound, entry_bound)
            for i in range(n):
                row = mat[i]
                pi = point[i]
                for j in range(n):
                    if row[j]:
                        pi[j] += c * row[j]
        rows = [
            [x for row in _bracket(xi, point) for x in row] for xi in acting
        ]
        best = max(best, integer_rank(rows))
    return dim - best


def module_dimension(p: BlockComposition, q: BlockComposition) -> int:
    return len(nilradical_intersection_basis(p, q))


# -- chain configurations -------------------------------------------------

# Complexity of the configuration whose blocks fill the first row and the
# last column with height 1, by the two-step recursion
#   c_{m,a} = c_{m-1,b} + 1,   c_{m,b} = c_{m-1,a}
# valid for m >= 4 (SO) and m >= 3 (Sp).  Base values are frozen from
# direct engine evaluation of the realizing compositions.
_CHAIN_BASE = {
    ("SO", "a"): (3, 0),
    ("SO", "b"): (3, 0),
    ("Sp", "a"): (2, 0),
    ("Sp", "b"): (2, 0),
}
_CHAIN_MIN_RECURSION = {"SO": 4, "Sp": 3}


def chain_complexity(m: int, variant: str, family: str) -> int:
    if variant not in ("a", "b"):
        raise BlockModelError("variant must be 'a' or 'b'")
    if family not in ("SO", "Sp"):
        raise BlockModelError("chain configurations exist for SO and Sp")
    base_m, base_val = _CHAIN_BASE[(family, variant)]
    if m < base_m:
        raise BlockModelError(f"{family} chain value undefined below m={base_m}")
    if m == base_m:
        return base_val
    if m < _CHAIN_MIN_RECURSION[family]:
        raise BlockModelError(f"recursion needs m >= {_CHAIN_MIN_RECURSION[family]}")
    if variant == "a":
        return chain_complexity(m - 1, "b", family) + 1
    return chain_complexity(m - 1, "a", family)


def chain_realizer(family: str, m: int, variant: str) -> tuple[BlockComposition, BlockComposition]:
    """A concrete pair realizing the chain configuration (m, variant).

    P = (1, n-2, 1) confines the blocks to the first row and last
    column with height 1; Q controls the number of diagonal blocks.
    The realized grid shape is asserted.
    """
    if family not in ("SO", "Sp"):
        raise BlockModelError("chain configurations exist for SO and Sp")
    if m < 2:
        raise BlockModelError("need m >= 2")
    if variant == "a":
        if m % 2 == 0:
            t = m // 2
            q_sizes = (1,) * t + (2,) + (1,) * t
        else:
            t = (m + 1) // 2
            q_sizes = (1,) * (t - 1) + (2, 2) + (1,) * (t - 1)
    elif variant == "b":
        if m == 2:
            q_sizes = (2, 2)
        elif m % 2 == 1:
            j = (m - 3) // 2
            q_sizes = (2,) + (1,) * j + (2,) + (1,) * j + (2,)
        else:
            j = (m - 2) // 2
            q_sizes = (2,) + (1,) * (j - 1) + (2, 2) + (1,) * (j - 1) + (2,)
    else:
        raise BlockModelError("variant must be 'a' or 'b'")
    n = sum(q_sizes)
    p = BlockComposition(family, n, (1, n - 2, 1))
    q = BlockComposition(family, n, q_sizes)
    grid = build_block_grid(family, p, q)
    r = grid.r
    expected_r = m + (1 if variant == "a" else 2)
    if r != expected_r or grid.refined[0] != 1:
        raise BlockModelError(f"realizer produced r={r}, expected {expected_r}")
    first_row = {c for c in grid.full_active() if c[0] == 1}
    last_col = {c for c in grid.full_active() if c[1] == r}
    if len(first_row) != m or grid.full_active() != first_row | last_col:
        raise BlockModelError("realizer grid is not a first-row/last-column shape")
    return p, q
