"""Ground-truth brute-force enumeration of inscribed minimal polycubes.

The enumerator is a canonical-growth search over the cells of the box:
cells are totally ordered lexicographically and every connected set is
generated exactly once from its minimal cell, by extending a frontier of
neighbours larger than the root (removed candidates are never revisited).

Pruning for inscribed targets uses the additive face-deficit bound: a cell
joined to the current set differs from some existing cell in exactly one
coordinate, so one addition can shrink the total bounding-box deficit by at
most one. A branch whose deficit exceeds its remaining budget is dead.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from .core import (
    Cell,
    FamilyTag,
    Polycube,
    PrismDims,
    checked_count,
    is_inscribed,
    min_volume,
)

Coords = tuple[int, int, int]


@dataclass(frozen=True)
class EnumerationConfig:
    dims: PrismDims
    volume: int
    inscribed_only: bool = False
    corner_constraint: tuple[int, int, int] | None = None  # min/max flag per axis

    def __post_init__(self) -> None:
        if self.volume < 1:
            raise ValueError(f"volume must be >= 1, got {self.volume}")
        if self.corner_constraint is not None and any(
            f not in (0, 1) for f in self.corner_constraint
        ):
            raise ValueError(f"corner flags must be 0/1: {self.corner_constraint}")


def _box_geometry(b: int, k: int, h: int):
    """Index <-> coordinate tables and the 6-neighbour adjacency list."""
    coords = [(x, y, z) for x in range(b) for y in range(k) for z in range(h)]
    index = {c: i for i, c in enumerate(coords)}
    nbrs = []
    for x, y, z in coords:
        adj = []
        for dx, dy, dz in ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)):
            n = (x + dx, y + dy, z + dz)
            if 0 <= n[0] < b and 0 <= n[1] < k and 0 <= n[2] < h:
                adj.append(index[n])
        nbrs.append(tuple(adj))
    return coords, nbrs


def _search(
    b: int,
    k: int,
    h: int,
    volume: int,
    inscribed_only: bool,
    roots: range | list[int] | None = None,
    visit: Callable[[list[int], list[Coords]], None] | None = None,
) -> int:
    n_cells = b * k * h
    if volume > n_cells:
        return 0
    if inscribed_only and volume < b + k + h - 2:
        return 0
    coords, nbrs = _box_geometry(b, k, h)
    faces = (b - 1, k - 1, h - 1)
    target = volume
    count = 0
    if roots is None:
        roots = range(n_cells)

    if target == 1:
        for r in roots:
            if not inscribed_only or n_cells == 1:
                count += 1
                if visit:
                    visit([r], coords)
        return count

    seen = bytearray(n_cells)

    for root in roots:
        rx, ry, rz = coords[root]
        ext0 = [u for u in nbrs[root] if u > root]
        if not ext0:
            continue
        seen[root] = 1
        for u in ext0:
            seen[u] = 1
        cells = [root]

        def rec(csize, ext, x0, x1, y0, y1, z0, z1):
            nonlocal count
            rem = target - csize
            leaf = csize + 1 == target
            for i, v in enumerate(ext):
                x, y, z = coords[v]
                nx0 = x if x < x0 else x0
                nx1 = x if x > x1 else x1
                ny0 = y if y < y0 else y0
                ny1 = y if y > y1 else y1
                nz0 = z if z < z0 else z0
                nz1 = z if z > z1 else z1
                if leaf:
                    if not inscribed_only or (
                        nx0 == 0
                        and ny0 == 0
                        and nz0 == 0
                        and nx1 == faces[0]
                        and ny1 == faces[1]
                        and nz1 == faces[2]
                    ):
                        count += 1
                        if visit:
                            cells.append(v)
                            visit(cells, coords)
                            cells.pop()
                    continue
                if inscribed_only:
                    deficit = (
                        nx0
                        + (faces[0] - nx1)
                        + ny0
                        + (faces[1] - ny1)
                        + nz0
                        + (faces[2] - nz1)
                    )
                    if deficit > rem - 1:
                        continue
                new = [u for u in nbrs[v] if u > root and not seen[u]]
                for u in new:
                    seen[u] = 1
                cells.append(v)
                rec(csize + 1, ext[i + 1 :] + new, nx0, nx1, ny0, ny1, nz0, nz1)
                cells.pop()
                for u in new:
                    seen[u] = 0

        rec(1, ext0, rx, rx, ry, ry, rz, rz)
        seen[root] = 0
        for u in ext0:
            seen[u] = 0

    return count


def _threads() -> int:
    raw = os.environ.get("POLYCUBE_THREADS", "")
    if not raw:
        return 1
    value = int(raw)
    if value < 1:
        raise ValueError(f"POLYCUBE_THREADS must be a positive integer, got {raw}")
    return value


def _count_root_chunk(args) -> int:
    b, k, h, volume, inscribed_only, lo, hi = args
    return _search(b, k, h, volume, inscribed_only, roots=range(lo, hi))


def count_connected(cfg: EnumerationConfig) -> int:
    """Exact number of connected cell sets matching the configuration."""
    b, k, h = cfg.dims.as_tuple()
    if cfg.corner_constraint is not None:
        # Reflect the chosen corner onto (0,0,0); counts are reflection
        # invariant and index 0 is then the minimal cell of any set holding
        # it, so restricting the root to 0 enumerates exactly those sets.
        return checked_count(
            _search(b, k, h, cfg.volume, cfg.inscribed_only, roots=[0])
        )
    workers = _threads()
    n_cells = b * k * h
    if workers > 1 and n_cells > 8:
        chunks = []
        step = max(1, n_cells // (4 * workers))
        for lo in range(0, n_cells, step):
            chunks.append((b, k, h, cfg.volume, cfg.inscribed_only, lo, min(lo + step, n_cells)))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return checked_count(sum(pool.map(_count_root_chunk, chunks)))
    return checked_count(_search(b, k, h, cfg.volume, cfg.inscribed_only))


def count_min_inscribed(d: PrismDims) -> int:
    """Minimal-volume inscribed polycubes in the prism, by brute force."""
    return count_connected(
        EnumerationConfig(dims=d, volume=min_volume(d), inscribed_only=True)
    )


def count_min_corner(d: PrismDims, corner: tuple[int, int, int] = (0, 0, 0)) -> int:
    """Minimal inscribed polycubes containing the given corner of the box."""
    return count_connected(
        EnumerationConfig(
            dims=d,
            volume=min_volume(d),
            inscribed_only=True,
            corner_constraint=corner,
        )
    )


def count_2d_min(b: int, k: int) -> int:
    """Minimal inscribed 2D polyominoes in a b x k rectangle, by brute force."""
    return count_min_inscribed(PrismDims(b, k, 1))


def weighted_2d_count(b: int, k: int) -> int:
    """Sum over minimal inscribed 2D polyominoes of sum_x 2^deg(x).

    Counts minimal polycubes of the 2 x b x k prism through the rooted-cell
    bijection; the 1 x 1 degenerate case yields 1 (single cell, degree 0),
    consistent with the unique minimal polycube of the 2 x 1 x 1 prism.
    """
    dims = PrismDims(b, k, 1)
    total = 0

    def visit(cells: list[int], coords) -> None:
        nonlocal total
        inset = set(cells)
        for c in cells:
            x, y, _ = coords[c]
            deg = 0
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                n = (x + dx, y + dy)
                if 0 <= n[0] < b and 0 <= n[1] < k and (n[0] * k + n[1]) in inset:
                    deg += 1
            total += 1 << deg
    # index layout for h=1 is (x*k + y)*1 + z == x*k + y

    _search(b, k, 1, min_volume(dims), True, visit=visit)
    return checked_count(total)


_STEPS = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))


def _connected(cells: set[Coords]) -> bool:
    if not cells:
        return True
    start = next(iter(cells))
    todo = [start]
    seen = {start}
    while todo:
        x, y, z = todo.pop()
        for dx, dy, dz in _STEPS:
            n = (x + dx, y + dy, z + dz)
            if n in cells and n not in seen:
                seen.add(n)
                todo.append(n)
    return len(seen) == len(cells)


def _components(cells: set[Coords]) -> list[set[Coords]]:
    left = set(cells)
    out: list[set[Coords]] = []
    while left:
        start = left.pop()
        todo = [start]
        comp = {start}
        while todo:
            x, y, z = todo.pop()
            for dx, dy, dz in _STEPS:
                n = (x + dx, y + dy, z + dz)
                if n in left:
                    left.discard(n)
                    comp.add(n)
                    todo.append(n)
        out.append(comp)
    return out


def _is_stair(cells: set[Coords], u: Coords, v: Coords) -> bool:
    """True iff ``cells`` is a coordinate-monotone lattice path from u to v."""
    if len(cells) != sum(v[a] - u[a] for a in range(3)) + 1:
        return False
    cur = u
    steps = 1
    while cur != v:
        succ = [
            n
            for n in (
                (cur[0] + 1, cur[1], cur[2]),
                (cur[0], cur[1] + 1, cur[2]),
                (cur[0], cur[1], cur[2] + 1),
            )
            if n in cells
        ]
        if len(succ) != 1:
            return False
        cur = succ[0]
        steps += 1
    return steps == len(cells)


def _is_diagonal(cells: frozenset[Coords], dims: tuple[int, int, int]) -> bool:
    """Hook-stair-hook decomposition test along one of the four diagonals.

    A diagonal shape splits, for some orientation and cut cells u <= v, into
    a corner polycube filling the sub-box below u, a monotone stair from u
    to v, and a corner polycube filling the sub-box above v. Corner
    polycubes of a sub-box are exactly its minimal inscribed polycubes that
    contain the sub-box corner, so the three sizes add up to the whole.
    """
    far = (dims[0] - 1, dims[1] - 1, dims[2] - 1)
    for flip_y, flip_z in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        oriented = frozenset(
            (
                x,
                y if flip_y == 1 else far[1] - y,
                z if flip_z == 1 else far[2] - z,
            )
            for x, y, z in cells
        )
        for u in oriented:
            low = {c for c in oriented if all(c[a] <= u[a] for a in range(3))}
            if len(low) != sum(u) + 1:
                continue
            if not all(any(c[a] == 0 for c in low) for a in range(3)):
                continue
            if not _connected(low):
                continue
            for v in oriented:
                if not all(u[a] <= v[a] for a in range(3)):
                    continue
                high = {c for c in oriented if all(c[a] >= v[a] for a in range(3))}
                if len(high) != sum(far[a] - v[a] for a in range(3)) + 1:
                    continue
                if not all(any(c[a] == far[a] for c in high) for a in range(3)):
                    continue
                stair = {
                    c for c in oriented if all(u[a] <= c[a] <= v[a] for a in range(3))
                }
                if not _is_stair(stair, u, v):
                    continue
                if len(low | stair | high) != len(oriented):
                    continue
                if _connected(high):
                    return True
    return False


def _corner_plane_normal(comp: set[Coords], corner: Coords) -> int | None:
    """Normal axis if ``comp`` is a planar 2D corner-polyomino cornered at
    ``corner`` (i.e. minimal in its bounding rectangle, with ``corner`` on a
    rectangle corner); None otherwise."""
    for normal in range(3):
        if len({c[normal] for c in comp}) != 1:
            continue
        axes = [a for a in range(3) if a != normal]
        lo = [min(c[a] for c in comp) for a in axes]
        hi = [max(c[a] for c in comp) for a in axes]
        if len(comp) != (hi[0] - lo[0]) + (hi[1] - lo[1]) + 1:
            continue
        if corner[axes[0]] in (lo[0], hi[0]) and corner[axes[1]] in (lo[1], hi[1]):
            return normal
    return None


def _skew_kind(cells: frozenset[Coords]) -> FamilyTag | None:
    """Skew-cross test: a central cell of degree three that is the corner
    cell of three mutually perpendicular 2D corner-polyominoes.

    Type a has two contact faces on the same axis (paired arms); type b has
    its three contact faces meeting around a vertex (all axes distinct).
    """
    for c in cells:
        neighbours = [
            n
            for n in (
                (c[0] + dx, c[1] + dy, c[2] + dz) for dx, dy, dz in _STEPS
            )
            if n in cells
        ]
        if len(neighbours) != 3:
            continue
        arms = _components(set(cells) - {c})
        if len(arms) != 3:
            continue
        normals: list[int] = []
        contact_axes: list[int] = []
        for arm in arms:
            attached = [n for n in neighbours if n in arm]
            if len(attached) != 1:
                break
            normal = _corner_plane_normal(arm | {c}, c)
            if normal is None:
                break
            normals.append(normal)
            n = attached[0]
            contact_axes.append(next(a for a in range(3) if n[a] != c[a]))
        else:
            if len(set(normals)) == 3:
                if len(set(contact_axes)) == 3:
                    return FamilyTag.SKEW_CROSS_B
                return FamilyTag.SKEW_CROSS_A
    return None


def classify(p: Polycube) -> FamilyTag:
    """Assign a minimal inscribed polycube to its structural family.

    Diagonal and skew-cross shapes are recognised positively; everything
    else is the 2Dx2D family (two perpendicular planar pieces joined by a
    skew hook). The three families partition the minimal polycubes, and the
    per-family counts are cross-checked against independent generating
    functions in the verification suite.
    """
    if not is_inscribed(p):
        raise ValueError("classify expects an inscribed polycube")
    if len(p) != min_volume(p.dims):
        raise ValueError("classify expects a minimal-volume polycube")
    cells = frozenset(c.as_tuple() for c in p.cells)
    if _is_diagonal(cells, p.dims.as_tuple()):
        return FamilyTag.DIAGONAL
    kind = _skew_kind(cells)
    if kind is not None:
        return kind
    return FamilyTag.TWO_D_X_TWO_D


def count_by_family(d: PrismDims) -> dict[FamilyTag, int]:
    """Enumerate the minimal inscribed polycubes of ``d`` and tally families."""
    counts = {tag: 0 for tag in FamilyTag}
    dims = d.as_tuple()

    def visit(cell_ids: list[int], coords) -> None:
        cells = frozenset(coords[i] for i in cell_ids)
        if _is_diagonal(cells, dims):
            counts[FamilyTag.DIAGONAL] += 1
            return
        kind = _skew_kind(cells)
        counts[kind if kind is not None else FamilyTag.TWO_D_X_TWO_D] += 1

    _search(d.b, d.k, d.h, min_volume(d), True, visit=visit)
    for tag in counts:
        counts[tag] = checked_count(counts[tag])
    return counts


def iter_min_inscribed(d: PrismDims) -> Iterator[Polycube]:
    """Yield every minimal inscribed polycube of the prism exactly once."""
    found: list[Polycube] = []

    def visit(cells: list[int], coords) -> None:
        found.append(Polycube(d, [Cell(*coords[c]) for c in cells]))

    _search(d.b, d.k, d.h, min_volume(d), True, visit=visit)
    return iter(found)
