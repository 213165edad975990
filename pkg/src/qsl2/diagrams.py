"""Framed oriented tangle and link diagrams as words of horizontal slices.

A diagram is a list of slices read bottom to top; each slice applies one
elementary generator (crossing, cup or cap) at a strand position, with
identities everywhere else.  Orientations live on the strands: at every
interface each strand carries a direction, +1 for pointing up and -1 for
pointing down.  Cups and caps carry a left-to-right / right-to-left flag
that fixes how the orientation runs around the arc:

    cup "lr" creates the pair (down, up),  cup "rl" creates (up, down),
    cap "lr" consumes (up, down),          cap "rl" consumes (down, up).

A link is a closed diagram (empty bottom and top).  Framing is blackboard:
writhe is genuine diagram content, and integer framing vectors are realized
by inserting kinks until each component's writhe equals its framing.
"""

from __future__ import annotations

from collections import namedtuple
from fractions import Fraction

from .linalg import congruence_signature

Gen = namedtuple("Gen", "kind pos flag")
Gen.__new__.__defaults__ = (None,)

_CROSSINGS = ("x+", "x-")
_KINDS = ("x+", "x-", "cup", "cap", "id")

_CUP_DIRS = {"lr": (-1, +1), "rl": (+1, -1)}
_CAP_DIRS = {"lr": (+1, -1), "rl": (-1, +1)}


class DiagramError(ValueError):
    pass


def _in_width(g: Gen) -> int:
    return 2 if g.kind in ("cap", "x+", "x-") else 0


def _out_width(g: Gen) -> int:
    return 2 if g.kind in ("cup", "x+", "x-") else 0


class SliceDiagram:
    """A validated slice word with precomputed orientation and component
    data.  Immutable by discipline: all operations return new diagrams."""

    def __init__(self, bottom=(), slices=()):
        self.bottom = tuple(bottom)
        self.slices = tuple(
            g if isinstance(g, Gen) else Gen(*g) for g in slices
        )
        for d in self.bottom:
            if d not in (+1, -1):
                raise DiagramError(f"bottom orientation must be +1 or -1, got {d}")
        self._validate()
        self._label()

    # -- construction-time bookkeeping --------------------------------------

    def _validate(self):
        dirs = list(self.bottom)
        interfaces = [tuple(dirs)]
        for i, g in enumerate(self.slices):
            kind, p, flag = g.kind, g.pos, g.flag
            if kind not in _KINDS:
                raise DiagramError(f"slice {i}: unknown generator kind {kind!r}")
            w = len(dirs)
            if kind == "id":
                pass
            elif kind in _CROSSINGS:
                if not 0 <= p <= w - 2:
                    raise DiagramError(f"slice {i}: crossing at {p} outside width {w}")
                dirs[p], dirs[p + 1] = dirs[p + 1], dirs[p]
            elif kind == "cup":
                if flag not in _CUP_DIRS:
                    raise DiagramError(f"slice {i}: cup needs flag lr or rl")
                if not 0 <= p <= w:
                    raise DiagramError(f"slice {i}: cup at {p} outside width {w}")
                dirs[p:p] = list(_CUP_DIRS[flag])
            elif kind == "cap":
                if flag not in _CAP_DIRS:
                    raise DiagramError(f"slice {i}: cap needs flag lr or rl")
                if not 0 <= p <= w - 2:
                    raise DiagramError(f"slice {i}: cap at {p} outside width {w}")
                expect = _CAP_DIRS[flag]
                got = (dirs[p], dirs[p + 1])
                if got != expect:
                    raise DiagramError(
                        f"slice {i}: cap {flag} expects orientations {expect}, "
                        f"strands carry {got}"
                    )
                del dirs[p:p + 2]
            interfaces.append(tuple(dirs))
        self.interfaces = tuple(interfaces)
        self.top = interfaces[-1]

    def _label(self):
        parent = {}

        def find(x):
            root = x
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        def union(a, b):
            parent.setdefault(a, a)
            parent.setdefault(b, b)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra

        for i, iface in enumerate(self.interfaces):
            for p in range(len(iface)):
                parent.setdefault((i, p), (i, p))
        for i, g in enumerate(self.slices):
            kind, q = g.kind, g.pos
            w = len(self.interfaces[i])
            if kind == "id":
                for p in range(w):
                    union((i, p), (i + 1, p))
            elif kind in _CROSSINGS:
                union((i, q), (i + 1, q + 1))
                union((i, q + 1), (i + 1, q))
                for p in range(w):
                    if p != q and p != q + 1:
                        union((i, p), (i + 1, p))
            elif kind == "cup":
                union((i + 1, q), (i + 1, q + 1))
                for p in range(w):
                    union((i, p), (i + 1, p if p < q else p + 2))
            elif kind == "cap":
                union((i, q), (i, q + 1))
                for p in range(w):
                    if p < q:
                        union((i, p), (i + 1, p))
                    elif p > q + 1:
                        union((i, p), (i + 1, p - 2))

        comp_of_root = {}
        seg_comp = []
        for i, iface in enumerate(self.interfaces):
            row = []
            for p in range(len(iface)):
                root = find((i, p))
                if root not in comp_of_root:
                    comp_of_root[root] = len(comp_of_root)
                row.append(comp_of_root[root])
            seg_comp.append(tuple(row))
        self.seg_comp = tuple(seg_comp)
        self.ncomponents = len(comp_of_root)

        crossings = []
        writhes = [0] * self.ncomponents
        for i, g in enumerate(self.slices):
            if g.kind not in _CROSSINGS:
                continue
            q = g.pos
            d1 = self.interfaces[i][q]
            d2 = self.interfaces[i][q + 1]
            sign = d1 * d2 if g.kind == "x+" else -d1 * d2
            ca = self.seg_comp[i][q]
            cb = self.seg_comp[i][q + 1]
            crossings.append((i, q, sign, ca, cb))
            if ca == cb:
                writhes[ca] += sign
        self.crossings = tuple(crossings)
        self.writhes = tuple(writhes)

    # -- protocol ------------------------------------------------------------

    @property
    def is_closed(self) -> bool:
        return not self.bottom and not self.top

    def __eq__(self, other):
        if not isinstance(other, SliceDiagram):
            return NotImplemented
        return self.bottom == other.bottom and self.slices == other.slices

    def __hash__(self):
        return hash((self.bottom, self.slices))

    def __repr__(self):
        return f"SliceDiagram({self.ncomponents} comps, {len(self.crossings)} crossings, {len(self.slices)} slices)"

    def with_slices(self, slices) -> "SliceDiagram":
        return SliceDiagram(self.bottom, slices)

    def component_of(self, interface: int, pos: int) -> int:
        return self.seg_comp[interface][pos]


def build(slices, bottom=()) -> SliceDiagram:
    """Validate a slice word into a diagram."""
    return SliceDiagram(bottom, slices)


def compose(s: SliceDiagram, t: SliceDiagram) -> SliceDiagram:
    """Stack s on top of t (operator order: s after t)."""
    if t.top != s.bottom:
        raise DiagramError(
            f"composition boundary mismatch: top {t.top} vs bottom {s.bottom}"
        )
    return SliceDiagram(t.bottom, t.slices + s.slices)


def tensor(s: SliceDiagram, t: SliceDiagram) -> SliceDiagram:
    """Place t to the right of s."""
    off = len(s.top)
    shifted = tuple(Gen(g.kind, g.pos + off if g.kind != "id" else g.pos, g.flag)
                    for g in t.slices)
    return SliceDiagram(s.bottom + t.bottom, s.slices + shifted)


def normal_form(d: SliceDiagram) -> SliceDiagram:
    """Drop identity slices and sink independent generators leftward-down.

    Pure relabelling of the slice word (interchange law); the diagram is
    unchanged as a tangle, and equal tangles presented with interleaved
    independent generators get equal words.
    """
    gens = [g for g in d.slices if g.kind != "id"]
    _bubble(gens)
    return SliceDiagram(d.bottom, gens)


def _key(g: Gen):
    return (g.pos, g.kind, g.flag or "")


def _bubble(gens) -> bool:
    changed_any = False
    guard = (len(gens) + 2) ** 2 + 10
    while True:
        guard -= 1
        if guard < 0:
            raise DiagramError("slice-word normalization did not stabilize")
        changed = False
        for i in range(len(gens) - 1):
            a, b = gens[i], gens[i + 1]
            b_end = b.pos + _in_width(b)
            a_start = a.pos
            if b_end < a_start or (b_end == a_start and _key(b) < _key(a)):
                delta_b = _out_width(b) - _in_width(b)
                gens[i] = b
                gens[i + 1] = Gen(a.kind, a.pos + delta_b, a.flag)
                changed = True
        if not changed:
            return changed_any
        changed_any = True


def reduce_word(d: SliceDiagram, allow_r1: bool = False):
    """Greedy simplification: interchange normalization plus cancelling of
    circles (counted and removed), snake pairs, and opposite-crossing pairs;
    with allow_r1 also kink absorption, which preserves link type but not
    writhe.  Returns (diagram, circles_removed)."""
    gens = [g for g in d.slices if g.kind != "id"]
    circles = 0
    guard = 40 * (len(gens) + 4)
    while True:
        guard -= 1
        if guard < 0:
            raise DiagramError("reduction did not stabilize")
        _bubble(gens)
        hit = False
        for i in range(len(gens) - 1):
            a, b = gens[i], gens[i + 1]
            if a.kind == "cup" and b.kind == "cap":
                if b.pos == a.pos:
                    del gens[i:i + 2]
                    circles += 1
                    hit = True
                    break
                if b.pos in (a.pos + 1, a.pos - 1):
                    del gens[i:i + 2]
                    hit = True
                    break
            if (a.kind in _CROSSINGS and b.kind in _CROSSINGS
                    and a.pos == b.pos and a.kind != b.kind):
                del gens[i:i + 2]
                hit = True
                break
            if allow_r1:
                if a.kind == "cup" and b.kind in _CROSSINGS and b.pos == a.pos:
                    gens[i] = Gen("cup", a.pos, "rl" if a.flag == "lr" else "lr")
                    del gens[i + 1]
                    hit = True
                    break
                if a.kind in _CROSSINGS and b.kind == "cap" and b.pos == a.pos:
                    gens[i + 1] = Gen("cap", b.pos, "rl" if b.flag == "lr" else "lr")
                    del gens[i]
                    hit = True
                    break
        if not hit:
            return SliceDiagram(d.bottom, gens), circles


# -- local moves -------------------------------------------------------------


def switch_crossing(d: SliceDiagram, slice_index: int) -> SliceDiagram:
    g = d.slices[slice_index]
    if g.kind not in _CROSSINGS:
        raise DiagramError(f"slice {slice_index} is not a crossing")
    flipped = Gen("x-" if g.kind == "x+" else "x+", g.pos, None)
    return d.with_slices(d.slices[:slice_index] + (flipped,) + d.slices[slice_index + 1:])


def smooth_crossing(d: SliceDiagram, slice_index: int) -> SliceDiagram:
    """Replace a crossing by its oriented smoothing."""
    g = d.slices[slice_index]
    if g.kind not in _CROSSINGS:
        raise DiagramError(f"slice {slice_index} is not a crossing")
    p = g.pos
    d1 = d.interfaces[slice_index][p]
    d2 = d.interfaces[slice_index][p + 1]
    if d1 == d2:
        block = ()
    else:
        capflag = "lr" if (d1, d2) == (+1, -1) else "rl"
        cupflag = "lr" if (d2, d1) == (-1, +1) else "rl"
        block = (Gen("cap", p, capflag), Gen("cup", p, cupflag))
    return d.with_slices(d.slices[:slice_index] + block + d.slices[slice_index + 1:])


def resolve(d, crossing_index: int, mode: str) -> SliceDiagram:
    """Switch or smooth the crossing_index-th crossing of a diagram."""
    if isinstance(d, FramedLink):
        d = d.materialize()
    try:
        slice_index = d.crossings[crossing_index][0]
    except IndexError:
        raise DiagramError(f"no crossing with index {crossing_index}")
    if mode == "switch":
        return switch_crossing(d, slice_index)
    if mode == "smooth":
        return smooth_crossing(d, slice_index)
    raise DiagramError(f"unknown resolution mode {mode!r}")


def insert_kink(d: SliceDiagram, interface: int, pos: int, sign: int) -> SliceDiagram:
    """Insert a kink of the given writhe sign on the strand at
    (interface, pos)."""
    if not 0 <= interface <= len(d.slices):
        raise DiagramError(f"no interface {interface}")
    iface = d.interfaces[interface]
    if not 0 <= pos < len(iface):
        raise DiagramError(f"no strand at position {pos} of interface {interface}")
    if sign not in (+1, -1):
        raise DiagramError("kink sign must be +1 or -1")
    down = iface[pos] == -1
    xkind = "x+" if sign > 0 else "x-"
    block = (
        Gen("cup", pos + 1, "lr" if down else "rl"),
        Gen(xkind, pos, None),
        Gen("cap", pos + 1, "rl" if down else "lr"),
    )
    return d.with_slices(d.slices[:interface] + block + d.slices[interface:])


def insert_kink_pair(d: SliceDiagram, interface: int, pos: int) -> SliceDiagram:
    """Framed first Reidemeister move: a cancelling +1/-1 kink pair."""
    d = insert_kink(d, interface, pos, -1)
    return insert_kink(d, interface, pos, +1)


def insert_r2(d: SliceDiagram, interface: int, pos: int, lead_sign: int = +1) -> SliceDiagram:
    """Insert a cancelling pair of opposite crossings at (interface, pos)."""
    iface = d.interfaces[interface]
    if not 0 <= pos <= len(iface) - 2:
        raise DiagramError(f"no strand pair at position {pos} of interface {interface}")
    first, second = ("x+", "x-") if lead_sign > 0 else ("x-", "x+")
    block = (Gen(first, pos, None), Gen(second, pos, None))
    return d.with_slices(d.slices[:interface] + block + d.slices[interface:])


def r3_sites(d: SliceDiagram):
    """Slice indices where a third Reidemeister rewrite applies."""
    sites = []
    for i in range(len(d.slices) - 2):
        a, b, c = d.slices[i:i + 3]
        if not all(g.kind in _CROSSINGS for g in (a, b, c)):
            continue
        if not (a.kind == b.kind == c.kind):
            continue
        if a.pos == c.pos and b.pos == a.pos + 1:
            sites.append(i)
        elif a.pos == c.pos and b.pos == a.pos - 1:
            sites.append(i)
    return sites


def apply_r3(d: SliceDiagram, site: int) -> SliceDiagram:
    a, b, c = d.slices[site:site + 3]
    ok = (all(g.kind in _CROSSINGS for g in (a, b, c))
          and a.kind == b.kind == c.kind and a.pos == c.pos
          and b.pos in (a.pos + 1, a.pos - 1))
    if not ok:
        raise DiagramError(f"no third Reidemeister pattern at slice {site}")
    block = (Gen(b.kind, b.pos, None), Gen(a.kind, a.pos, None), Gen(b.kind, b.pos, None))
    return d.with_slices(d.slices[:site] + block + d.slices[site + 3:])


def apply_move(d, move: str, site) -> "SliceDiagram | FramedLink":
    """Apply a named move.  site is (interface, pos) for R0-kink and R2,
    a slice index for R3, and +1/-1 for kirby_blowup (FramedLink only)."""
    if move == "kirby_blowup":
        if not isinstance(d, FramedLink):
            raise DiagramError("kirby_blowup acts on framed links")
        return kirby_blowup(d, site)
    diagram = d.materialize() if isinstance(d, FramedLink) else d
    if move == "R0-kink":
        return insert_kink_pair(diagram, *site)
    if move == "R2":
        return insert_r2(diagram, *site)
    if move == "R3":
        return apply_r3(diagram, site)
    raise DiagramError(f"unknown move {move!r}")


def reverse_component(d: SliceDiagram, comp: int) -> SliceDiagram:
    """Reverse the orientation of one component."""
    if not 0 <= comp < d.ncomponents:
        raise DiagramError(f"no component {comp}")
    bottom = tuple(
        -dd if d.seg_comp[0][p] == comp else dd for p, dd in enumerate(d.bottom)
    )
    slices = []
    for i, g in enumerate(d.slices):
        if g.kind == "cup" and d.seg_comp[i + 1][g.pos] == comp:
            slices.append(Gen("cup", g.pos, "rl" if g.flag == "lr" else "lr"))
        elif g.kind == "cap" and d.seg_comp[i][g.pos] == comp:
            slices.append(Gen("cap", g.pos, "rl" if g.flag == "lr" else "lr"))
        else:
            slices.append(g)
    return SliceDiagram(bottom, slices)


# -- traversal (descending-order bookkeeping for the skein engine) -----------


def _component_walk(d: SliceDiagram, start, travel):
    """Walk a closed component from a starting segment along its
    orientation; yields (slice_index, over) for every crossing pass."""
    passes = []
    i, p = start
    state = (i, p, travel)
    while True:
        i, p, trav = state
        if trav == "up":
            g = d.slices[i]
            q = g.pos
            if g.kind == "cap" and p in (q, q + 1):
                state = (i, q + 1 if p == q else q, "down")
            elif g.kind in _CROSSINGS and p in (q, q + 1):
                if p == q:
                    passes.append((i, g.kind == "x+"))
                    state = (i + 1, q + 1, "up")
                else:
                    passes.append((i, g.kind == "x-"))
                    state = (i + 1, q, "up")
            else:
                if g.kind == "cup":
                    np = p + 2 if p >= q else p
                elif g.kind == "cap":
                    np = p - 2 if p > q + 1 else p
                else:
                    np = p
                state = (i + 1, np, "up")
        else:
            g = d.slices[i - 1]
            q = g.pos
            if g.kind == "cup" and p in (q, q + 1):
                state = (i, q + 1 if p == q else q, "up")
            elif g.kind in _CROSSINGS and p in (q, q + 1):
                if p == q:
                    passes.append((i - 1, g.kind == "x-"))
                    state = (i - 1, q + 1, "down")
                else:
                    passes.append((i - 1, g.kind == "x+"))
                    state = (i - 1, q, "down")
            else:
                if g.kind == "cup":
                    np = p - 2 if p > q + 1 else p
                elif g.kind == "cap":
                    np = p + 2 if p >= q else p
                else:
                    np = p
                state = (i - 1, np, "down")
        if state[:2] == start and state[2] == travel:
            return passes


def _basepoints(d: SliceDiagram, strategy: str):
    segs = {}
    for i, row in enumerate(d.seg_comp):
        for p, comp in enumerate(row):
            if strategy == "first":
                if comp not in segs or (i, p) < segs[comp]:
                    segs[comp] = (i, p)
            else:
                if comp not in segs or (i, p) > segs[comp]:
                    segs[comp] = (i, p)
    comps = sorted(segs) if strategy == "first" else sorted(segs, reverse=True)
    return [(c, segs[c]) for c in comps]


def first_bad_crossing(d: SliceDiagram, strategy: str = "first"):
    """Index (into d.slices) of the first crossing met on its under-strand
    before its over-strand, traversing components from canonical basepoints;
    None when the diagram is descending."""
    if not d.is_closed:
        raise DiagramError("descending order is defined for closed diagrams")
    seen = set()
    for _, start in _basepoints(d, strategy):
        i, p = start
        travel = "up" if d.interfaces[i][p] == +1 else "down"
        for slice_index, over in _component_walk(d, start, travel):
            if slice_index in seen:
                continue
            seen.add(slice_index)
            if not over:
                return slice_index
    return None


# -- framed links -------------------------------------------------------------


class FramedLink:
    """A closed diagram with an integer framing per component.  The framing
    is absolute: materialization inserts kinks until each component's
    writhe equals its framing integer."""

    def __init__(self, diagram: SliceDiagram, framing):
        if not diagram.is_closed:
            raise DiagramError("a framed link needs a closed diagram")
        framing = tuple(int(f) for f in framing)
        if len(framing) != diagram.ncomponents:
            raise DiagramError(
                f"framing vector has length {len(framing)}, "
                f"diagram has {diagram.ncomponents} components"
            )
        self.diagram = diagram
        self.framing = framing
        self._materialized = None

    def __eq__(self, other):
        if not isinstance(other, FramedLink):
            return NotImplemented
        return self.diagram == other.diagram and self.framing == other.framing

    def __hash__(self):
        return hash((self.diagram, self.framing))

    def __repr__(self):
        return f"FramedLink({self.diagram!r}, framing={self.framing})"

    @property
    def ncomponents(self) -> int:
        return self.diagram.ncomponents

    def with_framing(self, framing) -> "FramedLink":
        return FramedLink(self.diagram, framing)

    def materialize(self) -> SliceDiagram:
        """The blackboard diagram whose per-component writhe equals the
        framing vector."""
        if self._materialized is not None:
            return self._materialized
        d = self.diagram
        deltas = [f - w for f, w in zip(self.framing, d.writhes)]
        if any(deltas):
            sites = {}
            for i, g in enumerate(d.slices):
                if g.kind == "cap":
                    sites[d.seg_comp[i][g.pos]] = (i, g.pos)
            for comp in sorted(sites, key=lambda c: sites[c][0], reverse=True):
                delta = deltas[comp]
                i, p = sites[comp]
                for _ in range(abs(delta)):
                    d = insert_kink(d, i, p, +1 if delta > 0 else -1)
        self._materialized = d
        return d

    def linking_matrix(self) -> "LinkingMatrix":
        return linking_matrix(self)


class LinkingMatrix:
    """Symmetric integer matrix: framings on the diagonal, pairwise linking
    numbers off it."""

    def __init__(self, matrix):
        self.matrix = tuple(tuple(int(v) for v in row) for row in matrix)
        n = len(self.matrix)
        for row in self.matrix:
            if len(row) != n:
                raise DiagramError("linking matrix must be square")
        for i in range(n):
            for j in range(n):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise DiagramError("linking matrix must be symmetric")

    @property
    def size(self) -> int:
        return len(self.matrix)

    def total(self) -> int:
        """Sum of all entries: the total self-linking L.L."""
        return sum(sum(row) for row in self.matrix)

    def signature(self) -> int:
        """Signature, computed exactly by rational congruence
        diagonalization."""
        if not self.matrix:
            return 0
        return congruence_signature(
            [[Fraction(v) for v in row] for row in self.matrix]
        )

    def __repr__(self):
        return f"LinkingMatrix({list(map(list, self.matrix))})"


def linking_matrix(link: FramedLink) -> LinkingMatrix:
    d = link.materialize()
    n = d.ncomponents
    mat = [[0] * n for _ in range(n)]
    for _, _, sign, ca, cb in d.crossings:
        if ca == cb:
            mat[ca][ca] += sign
        else:
            mat[ca][cb] += sign
            mat[cb][ca] += sign
    for i in range(n):
        for j in range(n):
            if i != j:
                if mat[i][j] % 2:
                    raise DiagramError("odd signed crossing count between components")
                mat[i][j] //= 2
    return LinkingMatrix(mat)


def cable(link: FramedLink, multiplicities) -> FramedLink:
    """Replace each component by parallel blackboard copies.

    multiplicity 0 deletes the component; the result carries the natural
    blackboard framing of the cabled diagram.
    """
    mult = tuple(int(m) for m in multiplicities)
    if len(mult) != link.ncomponents:
        raise DiagramError(
            f"{len(mult)} multiplicities for {link.ncomponents} components"
        )
    if any(m < 0 for m in mult):
        raise DiagramError("multiplicities must be nonnegative")
    d = link.materialize()
    exp = []  # multiplicity of each live strand, left to right
    out = []
    for i, g in enumerate(d.slices):
        kind, q, flag = g.kind, g.pos, g.flag
        if kind == "id":
            continue
        if kind == "cup":
            m = mult[d.seg_comp[i + 1][q]]
            base = sum(exp[:q])
            out.extend(Gen("cup", base + j, flag) for j in range(m))
            exp[q:q] = [m, m]
        elif kind == "cap":
            m = exp[q]
            base = sum(exp[:q])
            out.extend(Gen("cap", base + j, flag) for j in reversed(range(m)))
            del exp[q:q + 2]
        else:
            m1, m2 = exp[q], exp[q + 1]
            base = sum(exp[:q])
            for a in reversed(range(m1)):
                out.extend(Gen(kind, base + a + b, None) for b in range(m2))
            exp[q], exp[q + 1] = exp[q + 1], exp[q]
    cabled = SliceDiagram((), out)
    return FramedLink(cabled, cabled.writhes)


def kirby_blowup(link: FramedLink, sign: int) -> FramedLink:
    """Adjoin a disjoint (+1)- or (-1)-framed unknot."""
    if sign not in (+1, -1):
        raise DiagramError("blow-up sign must be +1 or -1")
    d = link.materialize()
    xkind = "x+" if sign > 0 else "x-"
    extra = (
        Gen("cup", 0, "lr"),
        Gen("cup", 1, "lr"),
        Gen(xkind, 0, None),
        Gen("cap", 1, "rl"),
        Gen("cap", 0, "rl"),
    )
    new = SliceDiagram((), d.slices + extra)
    return FramedLink(new, link.framing + (sign,))


# -- builtins ------------------------------------------------------------------


def braid_closure(word, nstrands: int) -> SliceDiagram:
    """Closure of a braid word; entries +/-i stand for the i-th elementary
    braid generator and its inverse (1-based)."""
    if nstrands < 1:
        raise DiagramError("need at least one strand")
    slices = [Gen("cup", i, "lr") for i in range(nstrands)]
    for s in word:
        i = abs(s)
        if not 1 <= i < nstrands:
            raise DiagramError(f"braid generator {s} out of range")
        slices.append(Gen("x+" if s > 0 else "x-", i - 1, None))
    slices.extend(Gen("cap", i, "rl") for i in reversed(range(nstrands)))
    return SliceDiagram((), slices)


def builtin(name: str) -> FramedLink:
    """Named framed links, in blackboard framing."""
    if name == "unknot":
        return FramedLink(braid_closure([], 1), (0,))
    if name == "unknot_kink_pos":
        d = insert_kink(braid_closure([], 1), 1, 0, +1)
        return FramedLink(d, (1,))
    if name == "unlink2":
        return FramedLink(braid_closure([], 2), (0, 0))
    if name == "hopf":
        return FramedLink(braid_closure([1, 1], 2), (0, 0))
    if name == "trefoil":
        return FramedLink(braid_closure([1, 1, 1], 2), (3,))
    if name == "whitehead":
        raw = FramedLink(braid_closure([1, -2, 1, -2, 1], 3), (0, 0))
        return FramedLink(raw.materialize(), (0, 0))
    raise DiagramError(f"unknown builtin link {name!r}")


BUILTIN_NAMES = ("unknot", "unknot_kink_pos", "unlink2", "hopf", "trefoil", "whitehead")


# -- slice-notation text format ------------------------------------------------


def parse_text(text: str) -> SliceDiagram:
    """Parse slice notation: optional header ``strands <n> <signs>`` with
    '+' for up and '-' for down, then one generator per line (``cup 0 lr``,
    ``x+ 1``, ``cap 2 rl``, ``id``); '#' starts a comment."""
    bottom = ()
    slices = []
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "strands":
            if saw_header or slices:
                raise DiagramError(f"line {lineno}: misplaced strands header")
            saw_header = True
            try:
                n = int(parts[1])
            except (IndexError, ValueError):
                raise DiagramError(f"line {lineno}: bad strand count")
            signs = parts[2] if len(parts) > 2 else ""
            if n and len(signs) != n:
                raise DiagramError(f"line {lineno}: need {n} orientation signs")
            if any(ch not in "+-" for ch in signs):
                raise DiagramError(f"line {lineno}: orientation signs are + or -")
            bottom = tuple(+1 if ch == "+" else -1 for ch in signs)
            continue
        kind = parts[0]
        if kind == "id":
            slices.append(Gen("id", 0, None))
            continue
        if kind not in ("cup", "cap", "x+", "x-"):
            raise DiagramError(f"line {lineno}: unknown generator {kind!r}")
        try:
            pos = int(parts[1])
        except (IndexError, ValueError):
            raise DiagramError(f"line {lineno}: generator needs a position")
        flag = None
        if kind in ("cup", "cap"):
            if len(parts) < 3 or parts[2] not in ("lr", "rl"):
                raise DiagramError(f"line {lineno}: {kind} needs direction lr or rl")
            flag = parts[2]
        slices.append(Gen(kind, pos, flag))
    try:
        return SliceDiagram(bottom, slices)
    except DiagramError as exc:
        raise DiagramError(f"invalid diagram: {exc}") from exc


def to_text(d: SliceDiagram) -> str:
    lines = []
    if d.bottom:
        signs = "".join("+" if s == +1 else "-" for s in d.bottom)
        lines.append(f"strands {len(d.bottom)} {signs}")
    else:
        lines.append("strands 0")
    for g in d.slices:
        if g.kind == "id":
            lines.append("id")
        elif g.flag:
            lines.append(f"{g.kind} {g.pos} {g.flag}")
        else:
            lines.append(f"{g.kind} {g.pos}")
    return "\n".join(lines) + "\n"
