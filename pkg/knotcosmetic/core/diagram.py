"""
Oriented link diagrams in PD notation

A crossing X(a,b,c,d) lists its four edge labels counterclockwise, starting
from the incoming under-strand, so the under-strand runs a -> c. Edge labels
increase along each component and wrap from the component's largest label to
its smallest. A crossing is positive when the over-strand runs d -> b and
negative when it runs b -> d. With this rule the right-handed trefoil
X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) has three positive crossings and v3 = +1.
"""

import logging
import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

from ..exceptions import (
    DiagramError,
    InconsistentOrientation,
    IndexOutOfRange,
    LabelMultiplicity,
    MalformedSyntax,
    NonPlanarDiagram,
    SameComponent,
    UnknownComponent,
)

logger = logging.getLogger(__name__)

Crossing = Tuple[int, int, int, int]

UNDER_IN, OVER_B, UNDER_OUT, OVER_D = range(4)

_COMMENT = re.compile(r"#[^\n]*")
_TERM = re.compile(
    r"""
    X\s*(?P<open>[(\[])\s*
        (?P<a>\d+)\s*,\s*(?P<b>\d+)\s*,\s*(?P<c>\d+)\s*,\s*(?P<d>\d+)\s*
    (?P<close>[)\]])
  | UNKNOT(?:\s*\(\s*(?P<count>\d+)\s*\))?
    """,
    re.VERBOSE,
)
_SEPARATOR = re.compile(r"[\s,]*")
_BRACKETS = {"(": ")", "[": "]"}


@dataclass(frozen=True)
class PlanarDiagram:
    """
    Oriented link diagram.

    crossings holds the PD tuples, signs the matching crossing signs (+1/-1)
    and free_loops counts crossingless unknotted components drawn apart from
    everything else.
    """

    crossings: Tuple[Crossing, ...]
    signs: Tuple[int, ...]
    free_loops: int = 0

    def __post_init__(self):
        if len(self.crossings) != len(self.signs):
            raise DiagramError("one sign is required per crossing")
        if any(s not in (1, -1) for s in self.signs):
            raise DiagramError("crossing signs must be +1 or -1")
        if self.free_loops < 0:
            raise DiagramError("free loop count cannot be negative")
        if not self.crossings and not self.free_loops:
            raise DiagramError("a diagram needs at least one crossing or one loop")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @cached_property
    def _successor(self) -> Dict[int, int]:
        return _next_map(self.crossings, self.signs)

    @cached_property
    def _cycles(self) -> List[List[int]]:
        nxt = self._successor
        seen = set()
        cycles = []
        for start in sorted(nxt):
            if start in seen:
                continue
            cycle = []
            label = start
            while label not in seen:
                seen.add(label)
                cycle.append(label)
                label = nxt[label]
            cycles.append(cycle)
        return cycles

    @cached_property
    def label_component(self) -> Dict[int, int]:
        """Edge label -> component id"""
        return {label: cid for cid, cycle in enumerate(self._cycles) for label in cycle}

    @property
    def component_count(self) -> int:
        return len(self._cycles) + self.free_loops

    @property
    def is_knot(self) -> bool:
        return self.component_count == 1

    def component_labels(self, cid: int) -> Tuple[int, ...]:
        """Edge labels of component cid in orientation order (empty for a free loop)"""
        _check_component(self, cid)
        if cid < len(self._cycles):
            return tuple(self._cycles[cid])
        return ()

    def strand_components(self, i: int) -> Tuple[int, int]:
        """(under component, over component) at crossing i"""
        _check_index(self, i)
        a, b, _, _ = self.crossings[i]
        return self.label_component[a], self.label_component[b]

    def __str__(self) -> str:
        return to_pd_text(self)


@dataclass(frozen=True)
class SkeinTriple:
    """Diagrams L+, L-, L0 that agree away from crossing `site` of the source"""

    positive: PlanarDiagram
    negative: PlanarDiagram
    resolved: PlanarDiagram
    site: int
    source_sign: int = field(default=1)


# construction

def unknot(count: int = 1) -> PlanarDiagram:
    """Crossingless diagram of `count` disjoint unknots"""
    return PlanarDiagram((), (), count)


def parse_pd(text: str, unknot: bool = False) -> PlanarDiagram:
    """
    Parse PD text such as "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)".

    Terms are X(a,b,c,d) or X[a,b,c,d], optionally separated by commas, plus
    UNKNOT or UNKNOT(k) for k disjoint crossingless unknots. '#' starts a
    comment. Empty input is accepted only with unknot=True and then means the
    0-crossing unknot.
    """
    body = _COMMENT.sub(" ", text or "")
    crossings: List[Crossing] = []
    free_loops = 0
    position = 0

    for match in _TERM.finditer(body):
        gap = body[position:match.start()]
        if not _SEPARATOR.fullmatch(gap):
            raise MalformedSyntax(f"unexpected text {gap.strip()!r} at offset {position}")
        position = match.end()

        if match.group("open"):
            if _BRACKETS[match.group("open")] != match.group("close"):
                raise MalformedSyntax(f"mismatched brackets in {match.group(0)!r}")
            labels = tuple(int(match.group(k)) for k in "abcd")
            if min(labels) < 1:
                raise MalformedSyntax(f"edge labels must be positive integers: {match.group(0)!r}")
            crossings.append(labels)
        else:
            count = int(match.group("count") or 1)
            if count < 1:
                raise MalformedSyntax("UNKNOT count must be at least 1")
            free_loops += count

    tail = body[position:]
    if not _SEPARATOR.fullmatch(tail):
        raise MalformedSyntax(f"unexpected text {tail.strip()!r} at offset {position}")

    if not crossings and not free_loops:
        if unknot:
            return unknot_diagram()
        raise MalformedSyntax("empty diagram; use the UNKNOT token or the unknot flag for the 0-crossing unknot")

    diagram = from_pd(crossings, free_loops)
    logger.debug(f"Parsed diagram with {diagram.n_crossings} crossings, {diagram.component_count} components")
    return diagram


def unknot_diagram() -> PlanarDiagram:
    return unknot(1)


def from_pd(crossings: Sequence[Sequence[int]], free_loops: int = 0) -> PlanarDiagram:
    """Validate PD tuples and infer crossing signs from label succession"""
    tuples = [tuple(int(v) for v in x) for x in crossings]
    for x in tuples:
        if len(x) != 4:
            raise MalformedSyntax(f"a crossing needs exactly 4 labels, got {x}")

    occurrences = _occurrences(tuples)
    bad = sorted(label for label, where in occurrences.items() if len(where) != 2)
    if bad:
        raise LabelMultiplicity(f"labels not occurring exactly twice: {bad}")

    check_planar(tuples)
    successor = _label_successor(tuples)
    signs = _infer_signs(tuples, successor, occurrences)
    return PlanarDiagram(tuple(tuples), tuple(signs), free_loops)


def _occurrences(crossings: Sequence[Crossing]) -> Dict[int, List[Tuple[int, int]]]:
    where: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for i, x in enumerate(crossings):
        for slot, label in enumerate(x):
            where[label].append((i, slot))
    return where


def check_planar(crossings: Sequence[Crossing]) -> None:
    """
    Reject crossing data whose rotation system is not planar.

    Faces are the orbits of "cross the edge, then turn counterclockwise";
    a planar diagram with n crossings in k connected pieces has n + 2k faces.
    """
    if not crossings:
        return
    where = _occurrences(crossings)
    other: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for first, second in where.values():
        other[first] = second
        other[second] = first

    faces = 0
    seen = set()
    for i in range(len(crossings)):
        for slot in range(4):
            dart = (i, slot)
            if dart in seen:
                continue
            faces += 1
            while dart not in seen:
                seen.add(dart)
                j, t = other[dart]
                dart = (j, (t + 1) % 4)

    parent = list(range(len(crossings)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, _), (j, _) in where.values():
        parent[find(i)] = find(j)
    pieces = len({find(i) for i in range(len(crossings))})

    expected = len(crossings) + 2 * pieces
    if faces != expected:
        raise NonPlanarDiagram(
            f"{len(crossings)} crossings in {pieces} piece(s) need {expected} faces, found {faces}"
        )


def _label_successor(crossings: Sequence[Crossing]) -> Dict[int, int]:
    """Successor of every label within its component's contiguous label range"""
    parent: Dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, d in crossings:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)

    groups: Dict[int, List[int]] = defaultdict(list)
    for label in list(parent):
        groups[find(label)].append(label)

    successor: Dict[int, int] = {}
    for labels in groups.values():
        lo, hi = min(labels), max(labels)
        if hi - lo + 1 != len(labels):
            raise InconsistentOrientation(
                f"component labels {sorted(labels)} are not a contiguous range"
            )
        for label in labels:
            successor[label] = label + 1 if label < hi else lo
    return successor


def _infer_signs(
    crossings: Sequence[Crossing],
    successor: Dict[int, int],
    occurrences: Dict[int, List[Tuple[int, int]]],
) -> List[int]:
    head: Dict[int, Tuple[int, int]] = {}
    tail: Dict[int, Tuple[int, int]] = {}

    def mark(label, slot_in, slot_out_label, slot_out):
        for table, lab, where in ((head, label, slot_in), (tail, slot_out_label, slot_out)):
            known = table.get(lab)
            if known is not None and known != where:
                raise InconsistentOrientation(f"edge {lab} would run in two directions")
            table[lab] = where

    for i, (a, b, c, d) in enumerate(crossings):
        if successor[a] != c:
            raise InconsistentOrientation(f"under-strand {a} -> {c} at crossing {i} breaks label succession")
        mark(a, (i, UNDER_IN), c, (i, UNDER_OUT))

    signs = [0] * len(crossings)

    def settle(i, sign):
        a, b, c, d = crossings[i]
        signs[i] = sign
        if sign > 0:
            mark(d, (i, OVER_D), b, (i, OVER_B))
        else:
            mark(b, (i, OVER_B), d, (i, OVER_D))

    pending = []
    for i, (a, b, c, d) in enumerate(crossings):
        forward = successor[d] == b
        backward = successor[b] == d
        if forward and not backward:
            settle(i, 1)
        elif backward and not forward:
            settle(i, -1)
        elif not forward and not backward:
            raise InconsistentOrientation(f"over-strand {b}/{d} at crossing {i} breaks label succession")
        else:
            pending.append(i)

    # two-edge components leave the over direction open; read it off the
    # other end of each edge, seeding when nothing constrains it
    while pending:
        progressed = False
        for i in list(pending):
            sign = _vote(i, crossings[i], head, tail)
            if sign:
                settle(i, sign)
                pending.remove(i)
                progressed = True
        if not progressed:
            i = pending.pop(0)
            logger.debug(f"Crossing {i}: over-strand direction unconstrained, choosing d -> b")
            settle(i, 1)

    return signs


def _vote(i: int, crossing: Crossing, head, tail) -> int:
    _, b, _, d = crossing
    votes = set()
    at_d, at_b = (i, OVER_D), (i, OVER_B)
    if d in head and head[d] != at_d:
        votes.add(-1)
    elif d in tail and tail[d] != at_d:
        votes.add(1)
    if b in head and head[b] != at_b:
        votes.add(1)
    elif b in tail and tail[b] != at_b:
        votes.add(-1)
    if len(votes) > 1:
        raise InconsistentOrientation(f"over-strand at crossing {i} is forced both ways")
    return votes.pop() if votes else 0


def _next_map(crossings: Sequence[Crossing], signs: Sequence[int]) -> Dict[int, int]:
    """Label -> label that follows it along the orientation"""
    nxt: Dict[int, int] = {}
    for i, ((a, b, c, d), sign) in enumerate(zip(crossings, signs)):
        pairs = ((a, c), (d, b) if sign > 0 else (b, d))
        for incoming, outgoing in pairs:
            if incoming in nxt:
                raise InconsistentOrientation(f"edge {incoming} enters two crossings (second at {i})")
            nxt[incoming] = outgoing
    return nxt


def _rebuild(
    crossings: Sequence[Crossing],
    signs: Sequence[int],
    merges: Iterable[Tuple[int, int]] = (),
    loose_labels: Iterable[int] = (),
    free_loops: int = 0,
) -> PlanarDiagram:
    """
    Glue edges, then relabel so labels increase along every component.

    Merged edge classes that no longer touch a crossing become free loops.
    """
    parent: Dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in merges:
        parent[find(x)] = find(y)

    renamed = [tuple(find(label) for label in x) for x in crossings]
    present = {label for x in renamed for label in x}
    loops = free_loops + len({find(label) for label in loose_labels} - present)
    if not renamed:
        return PlanarDiagram((), (), loops)

    nxt = _next_map(renamed, signs)
    fresh: Dict[int, int] = {}
    for x in renamed:
        for start in x:
            label = start
            while label not in fresh:
                fresh[label] = len(fresh) + 1
                label = nxt[label]

    relabeled = tuple(tuple(fresh[label] for label in x) for x in renamed)
    return PlanarDiagram(relabeled, tuple(signs), loops)


# queries

def _check_index(d: PlanarDiagram, i: int) -> None:
    if not isinstance(i, int) or not 0 <= i < d.n_crossings:
        raise IndexOutOfRange(f"crossing index {i} outside 0..{d.n_crossings - 1}")


def _check_component(d: PlanarDiagram, cid: int) -> None:
    if not isinstance(cid, int) or not 0 <= cid < d.component_count:
        raise UnknownComponent(f"component {cid} not in 0..{d.component_count - 1}")


def crossing_sign(d: PlanarDiagram, i: int) -> int:
    _check_index(d, i)
    return d.signs[i]


def writhe(d: PlanarDiagram) -> int:
    return sum(d.signs)


def components(d: PlanarDiagram) -> List[int]:
    return list(range(d.component_count))


def linking_number(d: PlanarDiagram, first: int, second: int) -> int:
    """Half the signed count of crossings between two components"""
    _check_component(d, first)
    _check_component(d, second)
    if first == second:
        raise SameComponent(f"linking number needs two distinct components, got {first} twice")

    total = 0
    wanted = {first, second}
    for i, sign in enumerate(d.signs):
        if set(d.strand_components(i)) == wanted:
            total += sign
    if total % 2:
        raise DiagramError(f"odd crossing sum {total} between components {first} and {second}")
    return total // 2


# transformations

def flip_crossing(d: PlanarDiagram, i: int) -> PlanarDiagram:
    """Exchange over and under at crossing i, keeping the orientation"""
    _check_index(d, i)
    crossings = list(d.crossings)
    signs = list(d.signs)
    crossings[i] = _flipped(crossings[i], signs[i])
    signs[i] = -signs[i]
    return PlanarDiagram(tuple(crossings), tuple(signs), d.free_loops)


def _flipped(crossing: Crossing, sign: int) -> Crossing:
    a, b, c, d = crossing
    # the old over-strand's incoming edge becomes the new first slot
    return (d, a, b, c) if sign > 0 else (b, c, d, a)


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    crossings = tuple(_flipped(x, s) for x, s in zip(d.crossings, d.signs))
    return PlanarDiagram(crossings, tuple(-s for s in d.signs), d.free_loops)


def smooth_crossing(d: PlanarDiagram, i: int) -> PlanarDiagram:
    """Oriented smoothing at crossing i"""
    _check_index(d, i)
    a, b, c, dd = d.crossings[i]
    over_in, over_out = (dd, b) if d.signs[i] > 0 else (b, dd)
    rest = [x for k, x in enumerate(d.crossings) if k != i]
    rest_signs = [s for k, s in enumerate(d.signs) if k != i]
    return _rebuild(
        rest,
        rest_signs,
        merges=((a, over_out), (over_in, c)),
        loose_labels=(a, b, c, dd),
        free_loops=d.free_loops,
    )


def resolve(d: PlanarDiagram, i: int) -> SkeinTriple:
    """Skein triple at crossing i with d in the slot its sign dictates"""
    sign = crossing_sign(d, i)
    partner = flip_crossing(d, i)
    resolved = smooth_crossing(d, i)
    if sign > 0:
        return SkeinTriple(d, partner, resolved, i, sign)
    return SkeinTriple(partner, d, resolved, i, sign)


def component_subdiagram(d: PlanarDiagram, cid: int) -> PlanarDiagram:
    """
    Diagram of one component with every other component erased.

    Crossings of the component with itself are kept; crossings with other
    components disappear and the component's strand runs straight through.
    """
    _check_component(d, cid)
    labels = d.component_labels(cid)
    if not labels:
        return unknot_diagram()

    kept, kept_signs, merges = [], [], []
    for i, (x, sign) in enumerate(zip(d.crossings, d.signs)):
        under, over = d.strand_components(i)
        a, b, c, dd = x
        if under == cid and over == cid:
            kept.append(x)
            kept_signs.append(sign)
        elif under == cid:
            merges.append((a, c))
        elif over == cid:
            merges.append((b, dd))

    return _rebuild(kept, kept_signs, merges=merges, loose_labels=labels)


def to_pd_text(d: PlanarDiagram) -> str:
    terms = [f"X({a},{b},{c},{dd})" for a, b, c, dd in d.crossings]
    if d.free_loops == 1:
        terms.append("UNKNOT")
    elif d.free_loops > 1:
        terms.append(f"UNKNOT({d.free_loops})")
    return " ".join(terms)
