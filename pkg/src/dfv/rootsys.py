"""Root systems of the simple complex Lie algebras, with exact arithmetic.

Roots are stored as integer coordinate tuples in the simple-root basis.
The numbering of simple roots follows the Onishchik--Vinberg reference
tables rather than Bourbaki.  For the classical families this is the
usual ordering (A_r: chain; B_l/C_l: short/long root last; D_l: fork at
the last two nodes).  For the exceptional types the layout is:

    E6:  1 - 2 - 3 - 4 - 5        E7:  1 - 2 - 3 - 4 - 5 - 6
                 |                                  |
                 6                                  7

    E8:  1 - 2 - 3 - 4 - 5 - 6 - 7
                         |
                         8

    F4:  1 - 2 => 3 - 4   (1, 2 long; 3, 4 short)
    G2:  1 => 2           (1 long triple edge to 2; alpha_2 short)

so in E6 the nodes 1 and 5 are the ends of the A5 chain and node 6 is
the branch node; in E7 node 1 is the end of the long leg; in E8 node 1
is the end of the longest leg.  All simple-root indices in this package
are 1-based.

Each system also carries an "ambient" realization: a rational matrix
sending simple-root coordinates to an orthogonal coordinate system, used
for display and for cross-checks in the epsilon notation (for E6 the
ambient coordinates are (eps_1..eps_6, eps) with sum(eps_i) = 0 and the
extra coordinate of square length 1/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Coords = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
_EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class RootSystemError(ValueError):
    """Invalid root-system data (family/rank combination, bad root, ...)."""


@dataclass(frozen=True)
class RootSystemId:
    """A simple type: one of A, B, C, D (with a rank) or E6/E7/E8/F4/G2."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}")
        if self.family in _EXCEPTIONAL_RANK:
            if self.rank != _EXCEPTIONAL_RANK[self.family]:
                raise RootSystemError(
                    f"{self.family} has fixed rank {_EXCEPTIONAL_RANK[self.family]}, "
                    f"got {self.rank}"
                )
        else:
            if self.rank < _MIN_RANK[self.family]:
                raise RootSystemError(
                    f"{self.family}_{self.rank} rejected: rank must be >= "
                    f"{_MIN_RANK[self.family]} (smaller ranks are duplicates of "
                    f"other families or not simple)"
                )

    def __str__(self) -> str:
        if self.family in _EXCEPTIONAL_RANK:
            return self.family
        return f"{self.family}{self.rank}"


def system_id(family: str, rank: int | None = None) -> RootSystemId:
    """Build a RootSystemId, inferring the rank for exceptional families."""
    if family in _EXCEPTIONAL_RANK:
        r = _EXCEPTIONAL_RANK[family]
        if rank is not None and rank != r:
            raise RootSystemError(f"{family} has rank {r}")
        return RootSystemId(family, r)
    if rank is None:
        raise RootSystemError(f"family {family} needs an explicit rank")
    return RootSystemId(family, rank)


def cartan_matrix(rsid: RootSystemId) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix C with C[i][j] = <alpha_j, alpha_i^vee> (0-based here)."""
    r = rsid.rank
    c = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def bond(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        c[i - 1][j - 1] = cij
        c[j - 1][i - 1] = cji

    fam = rsid.family
    if fam == "A":
        for i in range(1, r):
            bond(i, i + 1)
    elif fam == "B":
        for i in range(1, r - 1):
            bond(i, i + 1)
        # alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
        bond(r - 1, r, cij=-1, cji=-2)
    elif fam == "C":
        for i in range(1, r - 1):
            bond(i, i + 1)
        # alpha_r long: <alpha_r, alpha_{r-1}^vee> = -2
        bond(r - 1, r, cij=-2, cji=-1)
    elif fam == "D":
        for i in range(1, r - 1):
            bond(i, i + 1)
        bond(r - 2, r)
    elif fam in ("E6", "E7", "E8"):
        for i in range(1, r - 1):
            bond(i, i + 1)
        bond({"E6": 3, "E7": 4, "E8": 5}[fam], r)
    elif fam == "F4":
        bond(1, 2)
        # double edge, alpha_2 long, alpha_3 short
        bond(2, 3, cij=-1, cji=-2)
        bond(3, 4)
    elif fam == "G2":
        # alpha_1 long, alpha_2 short, triple edge
        bond(1, 2, cij=-1, cji=-3)
    return tuple(tuple(row) for row in c)


def _symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[Fraction, ...]:
    """d_i with d_i * C[i][j] == d_j * C[j][i] (d_i = |alpha_i|^2 / 2, long = 1)."""
    r = len(cartan)
    d: list[Fraction | None] = [None] * r
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(r):
            for j in range(r):
                if cartan[i][j] != 0 and d[i] is not None and d[j] is None:
                    d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                    changed = True
    assert all(x is not None for x in d)
    top = max(x for x in d)  # type: ignore[type-var]
    return tuple(x / top for x in d)  # type: ignore[operator]


def _ambient_columns(rsid: RootSystemId) -> tuple[tuple[Fraction, ...], ...]:
    """Ambient coordinates of each simple root (one column per simple root)."""
    r = rsid.rank
    fam = rsid.family

    def e(i: int, dim: int, val: int | Fraction = 1) -> list[Fraction]:
        v = [Fraction(0)] * dim
        v[i] = Fraction(val)
        return v

    def diff(i: int, dim: int) -> tuple[Fraction, ...]:
        v = e(i, dim)
        v[i + 1] -= 1
        return tuple(v)

    cols: list[tuple[Fraction, ...]] = []
    if fam == "A":
        cols = [diff(i, r + 1) for i in range(r)]
    elif fam == "B":
        cols = [diff(i, r) for i in range(r - 1)] + [tuple(e(r - 1, r))]
    elif fam == "C":
        cols = [diff(i, r) for i in range(r - 1)] + [tuple(e(r - 1, r, 2))]
    elif fam == "D":
        last = e(r - 2, r)
        last[r - 1] += 1
        cols = [diff(i, r) for i in range(r - 1)] + [tuple(last)]
    elif fam == "E6":
        # coordinates (eps_1..eps_6, eps); eps parts normalized to sum 0
        cols = [diff(i, 7) for i in range(5)]
        half = Fraction(1, 2)
        cols.append((-half, -half, -half, half, half, half, Fraction(1)))
    elif fam == "E7":
        cols = [diff(i, 8) for i in range(6)]
        half = Fraction(1, 2)
        cols.append((-half, -half, -half, -half, half, half, half, half))
    elif fam == "E8":
        cols = [diff(i, 9) for i in range(7)]
        third = Fraction(1, 3)
        col = [-third] * 9
        for i in (5, 6, 7):
            col[i] = 2 * third
        cols.append(tuple(col))
    elif fam == "F4":
        cols = [
            (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
            (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
            (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)),
        ]
    elif fam == "G2":
        cols = [
            (Fraction(-2), Fraction(1), Fraction(1)),
            (Fraction(1), Fraction(-1), Fraction(0)),
        ]
    return tuple(cols)


_ROOT_COUNTS = {
    "A": lambda r: r * (r + 1),
    "B": lambda r: 2 * r * r,
    "C": lambda r: 2 * r * r,
    "D": lambda r: 2 * r * (r - 1),
    "E6": lambda r: 72,
    "E7": lambda r: 126,
    "E8": lambda r: 240,
    "F4": lambda r: 48,
    "G2": lambda r: 12,
}


class RootSystem:
    """All roots of one simple type, with support/height/pairing helpers.

    Immutable after construction; instances are cached and may be shared
    freely between threads.
    """

    def __init__(self, rsid: RootSystemId):
        self.id = rsid
        self.rank = rsid.rank
        self.cartan = cartan_matrix(rsid)
        self.simple_roots: tuple[Coords, ...] = tuple(
            tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)
        )
        pos = self._close_positive()
        self.positive_roots: tuple[Coords, ...] = tuple(
            sorted(pos, key=lambda a: (height(a), a))
        )
        self.all_roots: frozenset[Coords] = frozenset(pos) | frozenset(
            negate(a) for a in pos
        )
        expected = _ROOT_COUNTS[rsid.family](self.rank)
        if len(self.all_roots) != expected:
            raise AssertionError(
                f"{rsid}: built {len(self.all_roots)} roots, expected {expected}"
            )
        self.symmetrizer = _symmetrizer(self.cartan)
        self.ambient_columns = _ambient_columns(rsid)
        self._support: dict[Coords, int] = {
            a: _support_mask(a) for a in self.all_roots
        }
        self.full_mask = (1 << self.rank) - 1

    # -- construction -------------------------------------------------

    def _close_positive(self) -> set[Coords]:
        roots: set[Coords] = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            new: list[Coords] = []
            for beta in frontier:
                for i in range(self.rank):
                    pairing = sum(beta[j] * self.cartan[i][j] for j in range(self.rank))
                    # length of the descending alpha_i-string through beta
                    p = 0
                    gamma = _sub_simple(beta, i)
                    while gamma in roots:
                        p += 1
                        gamma = _sub_simple(gamma, i)
                    if p - pairing > 0:
                        up = _add_simple(beta, i)
                        if up not in roots:
                            roots.add(up)
                            new.append(up)
            frontier = new
        return roots

    # -- queries ------------------------------------------------------

    def is_root(self, a: Coords) -> bool:
        return a in self.all_roots

    def support_mask(self, a: Coords) -> int:
        return self._support[a]

    def support(self, a: Coords) -> frozenset[int]:
        """1-based indices of the simple roots occurring in a."""
        return frozenset(i + 1 for i, c in enumerate(a) if c != 0)

    def pairing(self, a: Coords, i: int) -> int:
        """<a, alpha_i^vee> for a 1-based simple index i."""
        row = self.cartan[i - 1]
        return sum(a[j] * row[j] for j in range(self.rank))

    def reflect(self, a: Coords, i: int) -> Coords:
        """Simple reflection s_i applied to a root (1-based i)."""
        k = self.pairing(a, i)
        b = list(a)
        b[i - 1] -= k
        return tuple(b)

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def dimension(self) -> int:
        """dim of the corresponding group: rank + number of roots."""
        return self.rank + len(self.all_roots)

    def mask_of(self, indices) -> int:
        m = 0
        for i in indices:
            if not 1 <= i <= self.rank:
                raise RootSystemError(f"simple-root index {i} out of range for {self.id}")
            m |= 1 << (i - 1)
        return m

    def to_ambient(self, a: Coords) -> tuple[Fraction, ...]:
        dim = len(self.ambient_columns[0])
        out = [Fraction(0)] * dim
        for coef, col in zip(a, self.ambient_columns):
            if coef:
                for k in range(dim):
                    out[k] += coef * col[k]
        return tuple(out)

    def highest_root(self) -> Coords:
        return self.positive_roots[-1]

    # -- indexed fast path (lazily built) -------------------------------

    def indexed(self) -> "_IndexedRoots":
        """Integer-indexed root tables for hot loops (built on first use)."""
        cached = getattr(self, "_indexed", None)
        if cached is None:
            cached = _IndexedRoots(self)
            object.__setattr__(self, "_indexed", cached)
        return cached

    def __repr__(self) -> str:
        return f"RootSystem({self.id})"


class _IndexedRoots:
    """Root addition table and minimality ranks over integer indices."""

    def __init__(self, rs: RootSystem):
        self.roots: tuple[Coords, ...] = tuple(sorted(rs.all_roots))
        self.index: dict[Coords, int] = {a: i for i, a in enumerate(self.roots)}
        n = len(self.roots)
        idx = self.index
        table = []
        for a in self.roots:
            row = [-1] * n
            for j, b in enumerate(self.roots):
                s = add(a, b)
                k = idx.get(s)
                if k is not None:
                    row[j] = k
            table.append(row)
        self.add_table = table
        self.rank_by_tie: dict[str, list[int]] = {}
        for tie, key in _TIE_BREAKS.items():
            order = sorted(range(n), key=lambda i: (height(self.roots[i]), key(self.roots[i])))
            rank = [0] * n
            for pos, i in enumerate(order):
                rank[i] = pos
            self.rank_by_tie[tie] = rank


def _support_mask(a: Coords) -> int:
    m = 0
    for i, c in enumerate(a):
        if c != 0:
            m |= 1 << i
    return m


def _add_simple(a: Coords, i: int) -> Coords:
    b = list(a)
    b[i] += 1
    return tuple(b)


def _sub_simple(a: Coords, i: int) -> Coords:
    b = list(a)
    b[i] -= 1
    return tuple(b)


def negate(a: Coords) -> Coords:
    return tuple(-c for c in a)


def height(a: Coords) -> int:
    return sum(a)


def add(a: Coords, b: Coords) -> Coords:
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def build_root_system(rsid: RootSystemId) -> RootSystem:
    """Construct (and cache) the full root system for a valid id."""
    return RootSystem(rsid)


def in_integer_span(rs: RootSystem, a: Coords, levi) -> bool:
    """Whether a lies in the integer span of the simple roots indexed by levi.

    Since simple roots are linearly independent this is a support test.
    """
    if a not in rs.all_roots:
        raise RootSystemError(f"{a} is not a root of {rs.id}")
    return rs.support_mask(a) & ~rs.mask_of(levi) == 0


# Tie-break orders for minimal_root.  Both refine the height order; "lex"
# prefers mass on earlier simple roots (so {alpha_1, alpha_2} -> alpha_1),
# "revlex" is the opposite and exists to show results do not depend on
# the choice.
_TIE_BREAKS = {
    "lex": lambda a: tuple(-c for c in a),
    "revlex": lambda a: a,
}


def minimal_root(roots, tie_break: str = "lex") -> Coords:
    """Minimum of a nonempty set of roots by height, ties by tie_break."""
    try:
        key = _TIE_BREAKS[tie_break]
    except KeyError:
        raise RootSystemError(f"unknown tie_break {tie_break!r}") from None
    it = iter(roots)
    try:
        best = next(it)
    except StopIteration:
        raise RootSystemError("minimal_root of an empty set") from None
    best_key = (height(best), key(best))
    for a in it:
        k = (height(a), key(a))
        if k < best_key:
            best, best_key = a, k
    return best


# -- E6 epsilon notation -------------------------------------------------

def e6_epsilon_form(rs: RootSystem, a: Coords):
    """Classify an E6 root in the (eps_1..eps_6, eps) notation.

    Returns one of
        ("diff", i, j)        for eps_i - eps_j,
        ("triple", (i, j, k), s) for s * (eps_i + eps_j + eps_k + eps),
        ("2eps", s)           for s * 2 eps.
    """
    if rs.id.family != "E6":
        raise RootSystemError("epsilon form is defined for E6 only")
    amb = rs.to_ambient(a)
    eps_part, e_coef = amb[:6], amb[6]
    if e_coef == 0:
        plus = [i + 1 for i, c in enumerate(eps_part) if c == 1]
        minus = [i + 1 for i, c in enumerate(eps_part) if c == -1]
        if len(plus) == 1 and len(minus) == 1:
            return ("diff", plus[0], minus[0])
        raise RootSystemError(f"unrecognized E6 root {a}")
    if e_coef in (2, -2):
        if all(c == 0 for c in eps_part):
            return ("2eps", 1 if e_coef == 2 else -1)
        raise RootSystemError(f"unrecognized E6 root {a}")
    sign = 1 if e_coef == 1 else -1
    shifted = [sign * c + Fraction(1, 2) for c in eps_part]
    idx = tuple(i + 1 for i, c in enumerate(shifted) if c == 1)
    if len(idx) == 3 and all(c in (0, 1) for c in shifted):
        return ("triple", idx, sign)
    raise RootSystemError(f"unrecognized E6 root {a}")
