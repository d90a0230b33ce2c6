"""Weight-lattice utilities: dominance, Weyl dimension, characters.

Weights are integer tuples of coordinates with respect to the
fundamental weights, so the pairing with the i-th simple coroot is just
the i-th coordinate.  All inner products use the Weyl-invariant form
normalized so long roots have square length 2; everything is exact
(integers and Fractions).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .rootsys import RootSystem, RootSystemId, build_root_system

Weight = tuple[int, ...]


class CapExceeded(RuntimeError):
    """A character/tensor computation went over its configured budget."""


class OracleError(RuntimeError):
    """Internal inconsistency in a character computation."""


class WeightLattice:
    """Pairing data for the weight lattice of one simple type."""

    def __init__(self, rsid: RootSystemId):
        self.id = rsid
        self.rank = rsid.rank
        rs: RootSystem = build_root_system(rsid)
        self.rs = rs
        self.cartan = rs.cartan
        self.d = rs.symmetrizer
        # fundamental coordinates of alpha_j are the j-th Cartan column
        self.simple_fw: tuple[Weight, ...] = tuple(
            tuple(self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank)
        )
        self.pos_roots_rb = rs.positive_roots
        self.pos_roots_fw: tuple[Weight, ...] = tuple(
            self._rb_to_fw(a) for a in self.pos_roots_rb
        )
        self.rho: Weight = (1,) * self.rank
        self.cartan_inv = _invert_fraction_matrix(
            [[Fraction(x) for x in row] for row in self.cartan]
        )

    # -- coordinate plumbing -------------------------------------------

    def _rb_to_fw(self, a) -> Weight:
        return tuple(
            sum(self.cartan[i][j] * a[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def fw_to_rb(self, w: Weight) -> tuple[Fraction, ...]:
        """Root-basis coordinates of a weight (rational in general)."""
        return tuple(
            sum(self.cartan_inv[j][i] * w[i] for i in range(self.rank))
            for j in range(self.rank)
        )

    def in_positive_root_cone(self, w: Weight) -> bool:
        return all(c >= 0 for c in self.fw_to_rb(w))

    def root_height(self, w: Weight) -> Fraction:
        return sum(self.fw_to_rb(w), Fraction(0))

    # -- form ------------------------------------------------------------

    def inner_fw_root(self, w: Weight, root_rb) -> Fraction:
        """B(w, alpha) for w in fundamental coordinates, alpha in root basis."""
        return sum(
            self.d[j] * root_rb[j] * w[j] for j in range(self.rank) if root_rb[j]
        )

    def inner(self, u: Weight, v: Weight) -> Fraction:
        """B(u, v) for two weights in fundamental coordinates."""
        vr = self.fw_to_rb(v)
        return sum(self.d[j] * vr[j] * u[j] for j in range(self.rank) if vr[j])

    # -- Weyl group -------------------------------------------------------

    def is_dominant(self, w: Weight) -> bool:
        return all(c >= 0 for c in w)

    def reflect_simple(self, w: Weight, i: int) -> Weight:
        """s_i(w), 0-based simple index."""
        c = w[i]
        if not c:
            return w
        col = self.simple_fw[i]
        return tuple(w[j] - c * col[j] for j in range(self.rank))

    def to_dominant(self, w: Weight) -> tuple[Weight, int]:
        """Dominant representative and the sign (-1)^length of the move."""
        sign = 1
        w = tuple(w)
        while True:
            i = next((k for k, c in enumerate(w) if c < 0), None)
            if i is None:
                return w, sign
            w = self.reflect_simple(w, i)
            sign = -sign

    def orbit(self, w: Weight) -> set[Weight]:
        seen = {tuple(w)}
        frontier = [tuple(w)]
        while frontier:
            new = []
            for u in frontier:
                for i in range(self.rank):
                    v = self.reflect_simple(u, i)
                    if v not in seen:
                        seen.add(v)
                        new.append(v)
            frontier = new
        return seen

    # -- dimensions and characters ----------------------------------------

    def weyl_dim(self, w: Weight) -> int:
        if not self.is_dominant(w):
            raise OracleError(f"weyl_dim of non-dominant weight {w}")
        num = Fraction(1)
        for a in self.pos_roots_rb:
            top = sum(self.d[j] * a[j] * (w[j] + 1) for j in range(self.rank) if a[j])
            bot = sum(self.d[j] * a[j] for j in range(self.rank) if a[j])
            num *= Fraction(top, bot)
        if num.denominator != 1:
            raise OracleError("Weyl dimension came out non-integral")
        return int(num)

    def dominant_character(self, w: Weight, point_budget: int = 400_000) -> dict[Weight, int]:
        """Multiplicities of the dominant weights of the irreducible of h.w. w.

        Freudenthal recursion over the dominant weights mu <= w, processed
        by increasing height of w - mu.
        """
        if not self.is_dominant(w):
            raise OracleError(f"character of non-dominant weight {w}")
        dominants = self._dominant_weights_below(w, point_budget)
        order = sorted(dominants, key=lambda m: self.root_height(_sub(w, m)))
        mult: dict[Weight, int] = {}
        wr = self.inner(_add(w, self.rho), _add(w, self.rho))
        for mu in order:
            if mu == w:
                mult[mu] = 1
                continue
            acc = Fraction(0)
            for a_rb, a_fw in zip(self.pos_roots_rb, self.pos_roots_fw):
                k = 1
                nu = _add(mu, a_fw)
                while True:
                    diff = _sub(w, nu)
                    if not self.in_positive_root_cone(diff):
                        break
                    dom, _ = self.to_dominant(nu)
                    m = mult.get(dom, 0)
                    if m:
                        acc += m * self.inner_fw_root(nu, a_rb)
                    k += 1
                    nu = _add(nu, a_fw)
            denom = self.inner(_add(w, mu, self.rho, self.rho), _sub(w, mu))
            val = 2 * acc / denom
            if val.denominator != 1 or val < 0:
                raise OracleError("Freudenthal recursion produced a bad multiplicity")
            if val:
                mult[mu] = int(val)
        return mult

    def _dominant_weights_below(self, w: Weight, point_budget: int) -> list[Weight]:
        seen = {tuple(w)}
        frontier = [tuple(w)]
        dominants = [tuple(w)]
        while frontier:
            new = []
            for u in frontier:
                for a_fw in self.simple_fw:
                    v = _sub(u, a_fw)
                    if v in seen:
                        continue
                    dom, _ = self.to_dominant(v)
                    if not self.in_positive_root_cone(_sub(w, dom)):
                        continue
                    seen.add(v)
                    if len(seen) > point_budget:
                        raise CapExceeded(
                            f"weight diagram of {w} exceeds {point_budget} points"
                        )
                    new.append(v)
                    if v == dom:
                        dominants.append(v)
            frontier = new
        return dominants

    def character(self, w: Weight, point_budget: int = 400_000) -> dict[Weight, int]:
        """Full weight multiplicity map of the irreducible with h.w. w."""
        dom_char = self.dominant_character(w, point_budget)
        out: dict[Weight, int] = {}
        npoints = 0
        for mu, m in dom_char.items():
            for nu in self.orbit(mu):
                out[nu] = m
                npoints += 1
                if npoints > point_budget:
                    raise CapExceeded("character support exceeds point budget")
        return out


def _add(*ws: Weight) -> Weight:
    return tuple(sum(cs) for cs in zip(*ws))


def _sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def _invert_fraction_matrix(m):
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def weight_lattice(rsid: RootSystemId) -> WeightLattice:
    return WeightLattice(rsid)
