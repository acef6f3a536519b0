"""Truncated three-variable power series and the generating-function catalog.

Coefficients are exact integers on a dense grid indexed by the exponents of
(x, y, z), i.e. by prism dimensions (b, k, h). Multiplication packs both
operands into big integers (Kronecker substitution) so the convolution runs
inside GMP; division is forward substitution and is cheap because every
catalog denominator is a short polynomial with unit constant term.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    def mpz(v):
        return v

from .core import checked_count
from .formulas import p2d_min

Bounds = tuple[int, int, int]
Terms = Mapping[tuple[int, int, int], int]


class BoundsMismatchError(ValueError):
    pass


class NonUnitConstantTermError(ValueError):
    pass


class InsufficientBoundsError(ValueError):
    pass


class TruncatedSeries:
    """Dense grid of exact coefficients for exponents 0..Bx, 0..By, 0..Bz."""

    __slots__ = ("bounds", "_c")

    def __init__(self, bounds: Bounds, coeffs: list[int] | None = None):
        bx, by, bz = bounds
        if bx < 0 or by < 0 or bz < 0:
            raise ValueError(f"bounds must be non-negative: {bounds}")
        n = (bx + 1) * (by + 1) * (bz + 1)
        if coeffs is None:
            coeffs = [0] * n
        elif len(coeffs) != n:
            raise ValueError("coefficient grid does not match bounds")
        self.bounds = (bx, by, bz)
        self._c = coeffs

    # -- construction -----------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Terms, bounds: Bounds) -> "TruncatedSeries":
        s = cls(bounds)
        bx, by, bz = bounds
        for (i, j, l), v in terms.items():
            if 0 <= i <= bx and 0 <= j <= by and 0 <= l <= bz:
                s._c[s._idx(i, j, l)] += v
        return s

    @classmethod
    def one(cls, bounds: Bounds) -> "TruncatedSeries":
        return cls.from_terms({(0, 0, 0): 1}, bounds)

    def copy(self) -> "TruncatedSeries":
        return TruncatedSeries(self.bounds, list(self._c))

    # -- access ------------------------------------------------------------

    def _idx(self, i: int, j: int, l: int) -> int:
        _, by, bz = self.bounds
        return (i * (by + 1) + j) * (bz + 1) + l

    def coeff(self, b: int, k: int, h: int) -> int:
        bx, by, bz = self.bounds
        if not (0 <= b <= bx and 0 <= k <= by and 0 <= h <= bz):
            raise IndexError(f"({b},{k},{h}) outside bounds {self.bounds}")
        return self._c[self._idx(b, k, h)]

    def items(self) -> Iterator[tuple[tuple[int, int, int], int]]:
        bx, by, bz = self.bounds
        pos = 0
        for i in range(bx + 1):
            for j in range(by + 1):
                for l in range(bz + 1):
                    v = self._c[pos]
                    pos += 1
                    if v:
                        yield (i, j, l), v

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.bounds == other.bounds
            and self._c == other._c
        )

    def __repr__(self) -> str:
        nz = sum(1 for v in self._c if v)
        return f"TruncatedSeries(bounds={self.bounds}, nonzero={nz})"

    # -- ring operations ----------------------------------------------------

    def _check_bounds(self, other: "TruncatedSeries") -> None:
        if self.bounds != other.bounds:
            raise BoundsMismatchError(f"{self.bounds} != {other.bounds}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_bounds(other)
        return TruncatedSeries(self.bounds, [a + b for a, b in zip(self._c, other._c)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_bounds(other)
        return TruncatedSeries(self.bounds, [a - b for a, b in zip(self._c, other._c)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.bounds, [-a for a in self._c])

    def scale(self, factor: int) -> "TruncatedSeries":
        return TruncatedSeries(self.bounds, [factor * a for a in self._c])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_bounds(other)
        return _kronecker_mul(self, other)

    def div(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Quotient q with q * other == self within bounds."""
        self._check_bounds(other)
        c0 = other._c[0]
        if c0 not in (1, -1):
            raise NonUnitConstantTermError(f"constant term {c0} is not a unit")
        dterms = [(e, v) for e, v in other.items() if e != (0, 0, 0)]
        bx, by, bz = self.bounds
        q = TruncatedSeries(self.bounds)
        qc = q._c
        for i in range(bx + 1):
            for j in range(by + 1):
                for l in range(bz + 1):
                    acc = self._c[self._idx(i, j, l)]
                    for (a, b, c), v in dterms:
                        if a <= i and b <= j and c <= l:
                            acc -= v * qc[self._idx(i - a, j - b, l - c)]
                    qc[self._idx(i, j, l)] = acc if c0 == 1 else -acc
        return q

    def div_terms(self, terms: Terms) -> "TruncatedSeries":
        return self.div(TruncatedSeries.from_terms(terms, self.bounds))

    # -- reshaping -----------------------------------------------------------

    def crop(self, bounds: Bounds) -> "TruncatedSeries":
        bx, by, bz = bounds
        if any(n > o for n, o in zip(bounds, self.bounds)):
            raise InsufficientBoundsError(f"cannot crop {self.bounds} to {bounds}")
        out = TruncatedSeries(bounds)
        for i in range(bx + 1):
            for j in range(by + 1):
                for l in range(bz + 1):
                    out._c[out._idx(i, j, l)] = self._c[self._idx(i, j, l)]
        return out

    def shift_up(self, exps: Bounds) -> "TruncatedSeries":
        """Multiply by the monomial x^a y^b z^c (top coefficients fall off)."""
        a, b, c = exps
        bx, by, bz = self.bounds
        out = TruncatedSeries(self.bounds)
        for i in range(a, bx + 1):
            for j in range(b, by + 1):
                for l in range(c, bz + 1):
                    out._c[out._idx(i, j, l)] = self._c[self._idx(i - a, j - b, l - c)]
        return out

    def shift_down(self, exps: Bounds) -> "TruncatedSeries":
        """Exact division by a monomial; bounds shrink, low slices must be 0."""
        a, b, c = exps
        bx, by, bz = self.bounds
        for (i, j, l), v in self.items():
            if i < a or j < b or l < c:
                raise ArithmeticError(
                    f"series not divisible by x^{a} y^{b} z^{c}: term at {(i, j, l)}"
                )
        out = TruncatedSeries((bx - a, by - b, bz - c))
        for i in range(bx - a + 1):
            for j in range(by - b + 1):
                for l in range(bz - c + 1):
                    out._c[out._idx(i, j, l)] = self._c[self._idx(i + a, j + b, l + c)]
        return out

    def permute(self, perm: Bounds) -> "TruncatedSeries":
        """Relabel variables: new axis t reads exponents from old axis perm[t]."""
        if sorted(perm) != [0, 1, 2]:
            raise ValueError(f"not a permutation: {perm}")
        old = self.bounds
        nb = (old[perm[0]], old[perm[1]], old[perm[2]])
        out = TruncatedSeries(nb)
        for e, v in self.items():
            out._c[out._idx(e[perm[0]], e[perm[1]], e[perm[2]])] = v
        return out


# -- Kronecker-substitution multiplication ---------------------------------


def _pack(values: list[int], width_bytes: int) -> int:
    buf = bytearray(len(values) * width_bytes)
    for slot, v in enumerate(values):
        if v:
            off = slot * width_bytes
            buf[off : off + width_bytes] = v.to_bytes(width_bytes, "little")
    return int.from_bytes(buf, "little")


def _unpack(value: int, nslots: int, width_bytes: int) -> list[int]:
    raw = value.to_bytes(nslots * width_bytes, "little")
    return [
        int.from_bytes(raw[s * width_bytes : (s + 1) * width_bytes], "little")
        for s in range(nslots)
    ]


def _kronecker_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    bx, by, bz = a.bounds
    sy, sz = 2 * by + 1, 2 * bz + 1  # padded strides so digit groups never carry
    nslots = (2 * bx + 1) * sy * sz

    max_a = max((abs(v) for v in a._c), default=0)
    max_b = max((abs(v) for v in b._c), default=0)
    if max_a == 0 or max_b == 0:
        return TruncatedSeries(a.bounds)
    nterms = min(sum(1 for v in a._c if v), sum(1 for v in b._c if v))
    width_bits = max_a.bit_length() + max_b.bit_length() + nterms.bit_length() + 2
    width_bytes = (width_bits + 7) // 8

    def split(s: TruncatedSeries) -> tuple[list[int], list[int]]:
        pos = [0] * nslots
        neg = [0] * nslots
        for (i, j, l), v in s.items():
            slot = (i * sy + j) * sz + l
            if v > 0:
                pos[slot] = v
            else:
                neg[slot] = -v
        return pos, neg

    ap, an = split(a)
    bp, bn = split(b)
    pp = mpz(_pack(ap, width_bytes))
    pn = mpz(_pack(an, width_bytes))
    qp = mpz(_pack(bp, width_bytes))
    qn = mpz(_pack(bn, width_bytes))

    plus = _unpack(int(pp * qp + pn * qn), nslots, width_bytes)
    minus = _unpack(int(pp * qn + pn * qp), nslots, width_bytes)

    out = TruncatedSeries(a.bounds)
    oc = out._c
    for i in range(bx + 1):
        for j in range(by + 1):
            base = (i * sy + j) * sz
            row = out._idx(i, j, 0)
            for l in range(bz + 1):
                v = plus[base + l] - minus[base + l]
                if v:
                    oc[row + l] = v
    return out


# -- generating-function catalog --------------------------------------------

X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)
ONE = (0, 0, 0)


def _rat(bounds: Bounds, num: Terms, dens: Iterable[Terms]) -> TruncatedSeries:
    """Expand num / prod(dens); every denominator has unit constant term."""
    s = TruncatedSeries.from_terms(num, bounds)
    for d in dens:
        s = s.div_terms(d)
    return s


def _pad(bounds: Bounds, extra: int) -> Bounds:
    return (bounds[0] + extra, bounds[1] + extra, bounds[2] + extra)


def _build_tripod(bounds: Bounds) -> TruncatedSeries:
    return _rat(
        bounds,
        {(2, 2, 2): 1},
        [{ONE: 1, X: -1}, {ONE: 1, Y: -1}, {ONE: 1, Z: -1}],
    )


def _build_stair(bounds: Bounds) -> TruncatedSeries:
    return _rat(bounds, {(1, 1, 1): 1}, [{ONE: 1, X: -1, Y: -1, Z: -1}])


def _build_twodhook(bounds: Bounds) -> TruncatedSeries:
    return (
        _rat(bounds, {(2, 2, 1): 1}, [{ONE: 1, X: -1}, {ONE: 1, Y: -1}])
        + _rat(bounds, {(2, 1, 2): 1}, [{ONE: 1, X: -1}, {ONE: 1, Z: -1}])
        + _rat(bounds, {(1, 2, 2): 1}, [{ONE: 1, Y: -1}, {ONE: 1, Z: -1}])
    )


def _deg2_piece(bounds: Bounds) -> TruncatedSeries:
    # [2yz/(1-y-z) - 2yz/((1-y)(1-z))] * x^2/(1-x)
    inner = _rat(bounds, {(0, 1, 1): 2}, [{ONE: 1, Y: -1, Z: -1}]) - _rat(
        bounds, {(0, 1, 1): 2}, [{ONE: 1, Y: -1}, {ONE: 1, Z: -1}]
    )
    return inner * _rat(bounds, {(2, 0, 0): 1}, [{ONE: 1, X: -1}])


def _build_deg2(bounds: Bounds) -> TruncatedSeries:
    zpiece = _deg2_piece(bounds)  # pilar along x, corner polyomino in yz
    return (
        zpiece
        + zpiece.permute((1, 0, 2)).crop(bounds)  # pilar along y
        + zpiece.permute((2, 1, 0)).crop(bounds)  # pilar along z
    )


def _hook_bracket(bounds: Bounds) -> TruncatedSeries:
    """1 + (Tripod + Deg2 + 2Dhook)/xyz, exact within ``bounds``."""
    p = _pad(bounds, 1)
    hooks = _build_tripod(p) + _build_deg2(p) + _build_twodhook(p)
    return TruncatedSeries.one(bounds) + hooks.shift_down((1, 1, 1))


def _build_deg1(bounds: Bounds) -> TruncatedSeries:
    stair = _build_stair(bounds)
    return (stair - TruncatedSeries.from_terms({(1, 1, 1): 1}, bounds)) * _hook_bracket(
        bounds
    )


def _build_pc(bounds: Bounds) -> TruncatedSeries:
    return _build_stair(bounds) * _hook_bracket(bounds)


def _build_onediag(bounds: Bounds) -> TruncatedSeries:
    br = _hook_bracket(bounds)
    return _build_stair(bounds) * br * br


def _build_twodiag_z(bounds: Bounds) -> TruncatedSeries:
    # (1/xy) * (2xy/(1-x-y) - xy/((1-x)(1-y)))^2 * z/(1-z)^2
    p = (bounds[0] + 1, bounds[1] + 1, bounds[2])
    corner = _rat(p, {(1, 1, 0): 2}, [{ONE: 1, X: -1, Y: -1}]) - _rat(
        p, {(1, 1, 0): 1}, [{ONE: 1, X: -1}, {ONE: 1, Y: -1}]
    )
    sq = (corner * corner).shift_down((1, 1, 0))
    pilar = _rat(bounds, {(0, 0, 1): 1}, [{ONE: 1, Z: -1}, {ONE: 1, Z: -1}])
    return sq * pilar


def _build_cross3d(bounds: Bounds) -> TruncatedSeries:
    fx = _rat(bounds, {(2, 0, 0): 2, (3, 0, 0): -1}, [{ONE: 1, X: -1}, {ONE: 1, X: -1}])
    fy = _rat(bounds, {(0, 2, 0): 2, (0, 3, 0): -1}, [{ONE: 1, Y: -1}, {ONE: 1, Y: -1}])
    fz = _rat(bounds, {(0, 0, 2): 2, (0, 0, 3): -1}, [{ONE: 1, Z: -1}, {ONE: 1, Z: -1}])
    return fx * fy * fz


def _build_diag(bounds: Bounds) -> TruncatedSeries:
    one = _build_onediag(bounds)
    tz = _build_twodiag_z(bounds)
    tx = tz.permute((2, 1, 0)).crop(bounds)
    ty = tz.permute((0, 2, 1)).crop(bounds)
    return one.scale(4) - (tz + tx + ty).scale(2) + _build_cross3d(bounds).scale(3)


def _build_sh(bounds: Bounds) -> TruncatedSeries:
    return _rat(
        bounds,
        {(1, 0, 1): 1},
        [{ONE: 1, X: -1}, {ONE: 1, Y: -1}, {ONE: 1, Z: -1}],
    )


def _corner_min2(bounds: Bounds, u: int, v: int) -> TruncatedSeries:
    """uv * (2/(1-u-v) - 1/((1-u)(1-v)) - 1/(1-u)) in axes (u, v).

    2D corner polyominoes in the uv plane whose extent along v is >= 2.
    """
    eu = tuple(1 if t == u else 0 for t in range(3))
    ev = tuple(1 if t == v else 0 for t in range(3))
    euv = tuple(a + b for a, b in zip(eu, ev))
    du = {ONE: 1, eu: -1}
    dv = {ONE: 1, ev: -1}
    duv = {ONE: 1, eu: -1, ev: -1}
    return (
        _rat(bounds, {euv: 2}, [duv])
        - _rat(bounds, {euv: 1}, [du, dv])
        - _rat(bounds, {euv: 1}, [du])
    )


def _build_corner_z2(bounds: Bounds) -> TruncatedSeries:
    return _corner_min2(bounds, 1, 2)  # P_{c,z>=2}(y,z)


def _build_corner_x2(bounds: Bounds) -> TruncatedSeries:
    return _corner_min2(bounds, 1, 0)  # P_{c,x>=2}(x,y)


def _build_corner_y2(bounds: Bounds) -> TruncatedSeries:
    return _corner_min2(bounds, 2, 1)  # P_{c,y>=2}(y,z)


def _p2dx2d_pair(bounds: Bounds, u: int, v: int, w: int) -> TruncatedSeries:
    """2Dx2D polyominoes for the plane pair (uv, vw); v is the shared axis."""
    eu = tuple(1 if t == u else 0 for t in range(3))
    ev = tuple(1 if t == v else 0 for t in range(3))
    ew = tuple(1 if t == w else 0 for t in range(3))
    du = {ONE: 1, eu: -1}
    dv = {ONE: 1, ev: -1}
    dw = {ONE: 1, ew: -1}
    e2uv = tuple(2 * a + b for a, b in zip(eu, ev))
    e2wv = tuple(2 * a + b for a, b in zip(ew, ev))
    blue = _corner_min2(bounds, v, u).scale(2) - _rat(bounds, {e2uv: 1}, [du, dv])
    yellow = _corner_min2(bounds, v, w).scale(2) - _rat(bounds, {e2wv: 1}, [dv, dw])
    euw = tuple(a + b for a, b in zip(eu, ew))
    sh = _rat(bounds, {euw: 1}, [du, dv, dw])
    return (blue * sh * yellow).scale(2)


def _build_pxyyz(bounds: Bounds) -> TruncatedSeries:
    return _p2dx2d_pair(bounds, 0, 1, 2)


def _build_p2dx2d(bounds: Bounds) -> TruncatedSeries:
    return (
        _p2dx2d_pair(bounds, 0, 1, 2)  # xy x yz
        + _p2dx2d_pair(bounds, 1, 0, 2)  # xy x xz
        + _p2dx2d_pair(bounds, 0, 2, 1)  # xz x yz
    )


def _build_sca1(bounds: Bounds) -> TruncatedSeries:
    p = (bounds[0], bounds[1], bounds[2] + 1)
    prod = _corner_min2(p, 1, 2) * _corner_min2(p, 1, 0) * _corner_min2(p, 0, 2)
    return prod.scale(4).shift_up((0, 1, 0)).shift_down((0, 0, 1))


def _sc_symmetric_numerator(bounds: Bounds, constant: int, sign: int) -> TruncatedSeries:
    # sign * ((1-x+y)(1-x+z) + (1-y+x)(1-y+z) + (1-z+x)(1-z+y) + constant)
    def expand2(m1: Terms, m2: Terms) -> dict:
        out: dict = {}
        for e1, v1 in m1.items():
            for e2, v2 in m2.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + v1 * v2
        return out

    def lin(plus: int, minus: int) -> Terms:
        e_p = tuple(1 if t == plus else 0 for t in range(3))
        e_m = tuple(1 if t == minus else 0 for t in range(3))
        return {ONE: 1, e_m: -1, e_p: 1}

    acc: dict = {ONE: constant}
    for a, b, c in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
        prod = expand2(lin(b, a), lin(c, a))
        for e, v in prod.items():
            acc[e] = acc.get(e, 0) + v
    shifted = {(e[0] + 3, e[1] + 3, e[2] + 3): sign * v for e, v in acc.items()}
    dens = [
        {ONE: 1, X: -1},
        {ONE: 1, X: -1},
        {ONE: 1, Y: -1},
        {ONE: 1, Y: -1},
        {ONE: 1, Z: -1},
        {ONE: 1, Z: -1},
        {ONE: 1, Y: -1, Z: -1},
        {ONE: 1, X: -1, Y: -1},
        {ONE: 1, X: -1, Z: -1},
    ]
    return _rat(bounds, shifted, dens)


def _build_sca(bounds: Bounds) -> TruncatedSeries:
    # The published numerator sign is corrected so SCa + SCb == SC and the
    # cube-diagonal values match the reference table (48 at n=3).
    return _sc_symmetric_numerator(bounds, 0, 16)


def _build_scb(bounds: Bounds) -> TruncatedSeries:
    # 16 x^3y^3z^3 (4 - sum-of-products) / D, i.e. constant -4 with sign -16.
    return _sc_symmetric_numerator(bounds, -4, -16)


def _build_sc(bounds: Bounds) -> TruncatedSeries:
    return _rat(
        bounds,
        {(3, 3, 3): 64},
        [
            {ONE: 1, X: -1, Y: -1},
            {ONE: 1, X: -1, Z: -1},
            {ONE: 1, Y: -1, Z: -1},
            {ONE: 1, X: -1},
            {ONE: 1, X: -1},
            {ONE: 1, Y: -1},
            {ONE: 1, Y: -1},
            {ONE: 1, Z: -1},
            {ONE: 1, Z: -1},
        ],
    )


_CATALOG: dict[str, Callable[[Bounds], TruncatedSeries]] = {
    "Tripod": _build_tripod,
    "Stair": _build_stair,
    "TwoDhook": _build_twodhook,
    "Deg2": _build_deg2,
    "Deg1": _build_deg1,
    "Pc": _build_pc,
    "OneDiag": _build_onediag,
    "TwoDiagZ": _build_twodiag_z,
    "TwoDiagX": lambda b: _build_twodiag_z(b).permute((2, 1, 0)),
    "TwoDiagY": lambda b: _build_twodiag_z(b).permute((0, 2, 1)),
    "Cross3D": _build_cross3d,
    "Diag": _build_diag,
    "SH": _build_sh,
    "CornerZ2": _build_corner_z2,
    "CornerX2": _build_corner_x2,
    "CornerY2": _build_corner_y2,
    "PxyYz": _build_pxyyz,
    "P2Dx2D": _build_p2dx2d,
    "SCa1": _build_sca1,
    "SCa": _build_sca,
    "SCb": _build_scb,
    "SC": _build_sc,
}

#: Smallest (b, k, h) for which a catalog coefficient equals the intended
#: count; below these the inclusion-exclusion terms are invalid or vacuous.
GF_VALIDITY: dict[str, tuple[int, int, int]] = {
    "Diag": (2, 2, 2),
    "TwoDiagZ": (2, 2, 2),
    "TwoDiagX": (2, 2, 2),
    "TwoDiagY": (2, 2, 2),
    "Cross3D": (2, 2, 2),
    "SC": (3, 3, 3),
    "SCa": (3, 3, 3),
    "SCb": (3, 3, 3),
    "P2Dx2D": (2, 3, 3),
}


class UnknownSeriesError(KeyError):
    pass


def catalog_names() -> list[str]:
    return sorted(_CATALOG)


@lru_cache(maxsize=None)
def expand(name: str, bounds: Bounds) -> TruncatedSeries:
    """Expand the named catalog generating function within ``bounds``.

    Internally computed on the cubic hull of ``bounds`` so the axis
    permutations used by several entries stay well-formed, then cropped.
    """
    try:
        builder = _CATALOG[name]
    except KeyError:
        raise UnknownSeriesError(name) from None
    m = max(bounds)
    s = builder((m, m, m))
    if s.bounds != bounds:
        s = s.crop(bounds)
    for v in s._c:
        checked_count(v)
    return s


def total_min(b: int, k: int, h: int, bounds: Bounds | None = None) -> int:
    """Total minimal inscribed polycubes in a b x k x h prism via the series.

    Degenerate prisms (a side of length 1) fall back to the 2D/1D formula
    because the diagonal inclusion-exclusion is not valid there.
    """
    if b < 1 or k < 1 or h < 1:
        raise ValueError(f"dimensions must be >= 1: {(b, k, h)}")
    sides = sorted((b, k, h))
    if sides[0] == 1:
        if sides[1] == 1:
            return 1  # straight rod
        return p2d_min(sides[1], sides[2])
    if bounds is None:
        m = max(b, k, h)
        bounds = (m, m, m)
    return checked_count(
        expand("Diag", bounds).coeff(b, k, h)
        + expand("P2Dx2D", bounds).coeff(b, k, h)
        + expand("SC", bounds).coeff(b, k, h)
    )


def volume_sequence(s: TruncatedSeries, n_max: int) -> list[int]:
    """Entry m = sum of coefficients with b + k + h = m, for 0 <= m <= n_max."""
    if any(bound < n_max for bound in s.bounds):
        raise InsufficientBoundsError(
            f"bounds {s.bounds} too small for total degree {n_max}"
        )
    out = [0] * (n_max + 1)
    for (i, j, l), v in s.items():
        m = i + j + l
        if m <= n_max:
            out[m] += v
    return out


def diagonal_sequence(s: TruncatedSeries, n_max: int) -> list[int]:
    """Entries coeff(n, n, n) for n = 1..n_max."""
    if any(bound < n_max for bound in s.bounds):
        raise InsufficientBoundsError(
            f"bounds {s.bounds} too small for diagonal index {n_max}"
        )
    return [s.coeff(n, n, n) for n in range(1, n_max + 1)]


def to_csv(s: TruncatedSeries) -> str:
    """One row per nonzero coefficient: header 'b,k,h,coefficient'."""
    lines = ["b,k,h,coefficient"]
    lines += [f"{i},{j},{l},{v}" for (i, j, l), v in s.items()]
    return "\n".join(lines) + "\n"
