"""Online construction of the parameterized position heap.

The index is a trie over prev-encoding labels. Each non-root node stores
one or two suffix start positions: the primary position marks the suffix
whose insertion created the node, and a secondary position marks a suffix
whose entire encoding equals the node's path label. Construction is online:
reading one more text symbol extends the structure by walking suffix
pointers from the active node, where the suffix pointer of the node for
some window links to the node for that window with its first symbol
dropped (labels re-normalized for the shorter window).

Node ids are dense integers into an arena; the root is always id 0. A
virtual auxiliary node sits above the root and accepts every label, which
lets the update loop terminate without special cases.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .coding import (
    Alphabet,
    IncrementalEncoder,
    PrevLabel,
    PString,
    PSymbol,
    norm,
)
from .errors import InvalidNode, StructuralError, UnknownSymbol

ROOT = 0
BOTTOM = -1  # virtual parent of the root; child(BOTTOM, c) == ROOT for every c


class IndexStats(NamedTuple):
    n: int
    node_count: int
    double_count: int
    max_depth: int


class PPHIndex:
    """Finalized, immutable position-heap index over a p-string text.

    The arena is held as parallel per-node lists indexed by node id:
    ``parents`` (-1 for the root), ``labels`` (incoming edge label, None for
    the root), ``depths``, ``children`` (dict label -> child id, or None for
    a leaf), ``primaries`` (None for the root), ``suffixes`` (BOTTOM for the
    root). ``secondaries`` maps the node ids of double nodes to their
    secondary position. Treat a finalized index as read-only; concurrent
    queries over it are safe.
    """

    __slots__ = ("alphabet", "text", "prev_text", "parents", "labels",
                 "depths", "children", "primaries", "secondaries", "suffixes")

    def __init__(self, alphabet, text, prev_text, parents, labels, depths,
                 children, primaries, secondaries, suffixes):
        self.alphabet: Alphabet = alphabet
        self.text: PString = text
        self.prev_text: tuple[PrevLabel, ...] = prev_text
        self.parents: list[int] = parents
        self.labels: list[Optional[PrevLabel]] = labels
        self.depths: list[int] = depths
        self.children: list[Optional[dict]] = children
        self.primaries: list[Optional[int]] = primaries
        self.secondaries: dict[int, int] = secondaries
        self.suffixes: list[int] = suffixes

    @property
    def n(self) -> int:
        return len(self.text)

    @property
    def node_count(self) -> int:
        return len(self.parents)

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self.parents):
            raise InvalidNode(v)

    def child(self, v: int, label: PrevLabel) -> Optional[int]:
        """Child of v under the given label, or None when absent."""
        self._check(v)
        kids = self.children[v]
        return None if kids is None else kids.get(label)

    def children_items(self, v: int) -> list[tuple[PrevLabel, int]]:
        """(label, child) pairs of v in the deterministic label order."""
        self._check(v)
        kids = self.children[v]
        if not kids:
            return []
        key = self.alphabet.label_key
        return sorted(kids.items(), key=lambda kv: key(kv[0]))

    def parent(self, v: int) -> Optional[int]:
        self._check(v)
        return None if v == ROOT else self.parents[v]

    def incoming_label(self, v: int) -> Optional[PrevLabel]:
        self._check(v)
        return self.labels[v]

    def depth(self, v: int) -> int:
        self._check(v)
        return self.depths[v]

    def primary(self, v: int) -> Optional[int]:
        self._check(v)
        return self.primaries[v]

    def secondary(self, v: int) -> Optional[int]:
        self._check(v)
        return self.secondaries.get(v)

    def suffix(self, v: int) -> int:
        """Suffix pointer of v; BOTTOM for the root."""
        self._check(v)
        return self.suffixes[v]

    def positions_at(self, v: int) -> list[int]:
        """Positions stored at v, primary first."""
        self._check(v)
        p = self.primaries[v]
        out = [] if p is None else [p]
        s = self.secondaries.get(v)
        if s is not None:
            out.append(s)
        return out

    def path_label(self, v: int) -> tuple[PrevLabel, ...]:
        """Concatenated edge labels from the root down to v."""
        self._check(v)
        out = []
        while v != ROOT:
            out.append(self.labels[v])
            v = self.parents[v]
        out.reverse()
        return tuple(out)

    def node_at(self, prev: tuple) -> Optional[int]:
        """Node reached by walking the given labels from the root, or None."""
        v = ROOT
        for c in prev:
            kids = self.children[v]
            v = None if kids is None else kids.get(c)
            if v is None:
                return None
        return v

    def stats(self) -> IndexStats:
        return IndexStats(
            n=self.n,
            node_count=self.node_count,
            double_count=len(self.secondaries),
            max_depth=max(self.depths) if self.depths else 0,
        )


class Builder:
    """Single-owner online builder: push symbols, then finalize.

    After k pushed symbols, suffix start positions below the active
    position already sit at their permanent node as primaries; positions
    from the active position through k are pending and get materialized as
    secondary positions by finalize(). finalize() consumes the builder;
    snapshot() finalizes a copy so the stream can continue.
    """

    __slots__ = ("alphabet", "_encoder", "_symbols", "_prev", "_parents",
                 "_labels", "_depths", "_children", "_primaries", "_suffixes",
                 "_active_node", "_active_pos", "_k", "_done", "suffix_steps")

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._encoder = IncrementalEncoder(alphabet)
        self._symbols: list[PSymbol] = []
        self._prev: list[PrevLabel] = []
        # arena with the root node only
        self._parents: list[int] = [-1]
        self._labels: list[Optional[PrevLabel]] = [None]
        self._depths: list[int] = [0]
        self._children: list[Optional[dict]] = [None]
        self._primaries: list[Optional[int]] = [None]
        self._suffixes: list[int] = [BOTTOM]
        self._active_node = ROOT
        self._active_pos = 1
        self._k = 0
        self._done = False
        self.suffix_steps = 0  # total suffix-pointer traversals, for audits

    @property
    def size(self) -> int:
        """Number of symbols consumed so far."""
        return self._k

    @property
    def active_position(self) -> int:
        return self._active_pos

    @property
    def active_node(self) -> int:
        return self._active_node

    def push(self, s: PSymbol) -> None:
        """Consume one symbol, updating the heap for the longer text."""
        if self._done:
            raise RuntimeError("builder already finalized")
        if not self.alphabet.is_member(s):
            raise UnknownSymbol(s.sym, self._k + 1)
        label = self._encoder.push(s)
        self._symbols.append(s)
        self._prev.append(label)
        self._k += 1

        parents = self._parents
        labels = self._labels
        depths = self._depths
        children = self._children
        primaries = self._primaries
        suffixes = self._suffixes

        cur = self._active_node
        spos = self._active_pos
        is_offset = type(label) is int
        c = 0 if is_offset and label > depths[cur] else label
        last = -1
        while True:
            if cur == BOTTOM:
                nxt = ROOT  # the virtual node accepts every label
                break
            kids = children[cur]
            nxt = None if kids is None else kids.get(c)
            if nxt is not None:
                break
            new = len(parents)
            parents.append(cur)
            labels.append(c)
            depths.append(depths[cur] + 1)
            children.append(None)
            primaries.append(spos)
            suffixes.append(ROOT)  # placeholder, always patched below
            if kids is None:
                children[cur] = {c: new}
            else:
                kids[c] = new
            if last >= 0:
                suffixes[last] = new
            last = new
            cur = suffixes[cur]
            self.suffix_steps += 1
            if is_offset:
                d = depths[cur] if cur != BOTTOM else -1
                c = 0 if label > d else label
            spos += 1
        if last >= 0:
            suffixes[last] = nxt
        self._active_node = nxt
        self._active_pos = spos

    def extend(self, symbols) -> None:
        """Push every symbol of an iterable (e.g. a PString)."""
        for s in symbols:
            self.push(s)

    def finalize(self) -> PPHIndex:
        """Assign the pending secondary positions and freeze the arena.

        Consumes the builder; further pushes raise.
        """
        if self._done:
            raise RuntimeError("builder already finalized")
        self._done = True
        secondaries: dict[int, int] = {}
        cur = self._active_node
        spos = self._active_pos
        suffixes = self._suffixes
        while spos <= self._k:
            secondaries[cur] = spos
            cur = suffixes[cur]
            spos += 1
        text = PString(tuple(self._symbols), self.alphabet)
        return PPHIndex(self.alphabet, text, tuple(self._prev), self._parents,
                        self._labels, self._depths, self._children,
                        self._primaries, secondaries, self._suffixes)

    def snapshot(self) -> PPHIndex:
        """Finalize a deep copy, leaving this builder usable mid-stream."""
        dup = Builder.__new__(Builder)
        dup.alphabet = self.alphabet
        dup._encoder = self._encoder.copy()
        dup._symbols = list(self._symbols)
        dup._prev = list(self._prev)
        dup._parents = list(self._parents)
        dup._labels = list(self._labels)
        dup._depths = list(self._depths)
        dup._children = [dict(d) if d is not None else None for d in self._children]
        dup._primaries = list(self._primaries)
        dup._suffixes = list(self._suffixes)
        dup._active_node = self._active_node
        dup._active_pos = self._active_pos
        dup._k = self._k
        dup._done = False
        dup.suffix_steps = self.suffix_steps
        return dup.finalize()


def new_builder(alphabet: Alphabet) -> Builder:
    """Fresh builder over the given alphabet."""
    return Builder(alphabet)


def build_index(text: PString) -> PPHIndex:
    """Build the finalized index for a whole p-string in one call."""
    b = Builder(text.alphabet)
    for s in text.symbols:
        b.push(s)
    return b.finalize()


def audit_index(idx: PPHIndex) -> None:
    """Verify the structural invariants; raise StructuralError on violation.

    Covers arena coherence (parent/child/label/depth agreement), the node
    count bound, the exactly-once position partition, the secondary suffix
    interval, primary < secondary at double nodes, the suffix-pointer
    re-normalization law, and agreement of every stored position's path
    label with the re-normalized global encoding. Cost grows with total
    path length; intended for tests and self-checks, not query paths.
    """
    problems: list[str] = []
    n = idx.n
    count = idx.node_count
    prev_text = idx.prev_text

    if count > n + 1:
        problems.append(f"node count {count} exceeds n+1 = {n + 1}")
    if idx.depths[ROOT] != 0 or idx.parents[ROOT] != -1 or idx.labels[ROOT] is not None:
        problems.append("malformed root node")
    if idx.suffixes[ROOT] != BOTTOM:
        problems.append("root suffix pointer must be the virtual node")

    for v in range(1, count):
        p = idx.parents[v]
        if not 0 <= p < count:
            problems.append(f"node {v}: parent {p} out of range")
            continue
        if idx.depths[v] != idx.depths[p] + 1:
            problems.append(f"node {v}: depth {idx.depths[v]} != depth(parent)+1")
        kids = idx.children[p]
        if kids is None or kids.get(idx.labels[v]) != v:
            problems.append(f"node {v}: not registered under its label at parent {p}")
    edge_total = sum(len(d) for d in idx.children if d)
    if edge_total != count - 1:
        problems.append(f"children maps hold {edge_total} edges for {count} nodes")

    # position partition: every position 1..n stored exactly once
    seen: dict[int, int] = {}
    if idx.primaries[ROOT] is not None or ROOT in idx.secondaries:
        problems.append("root must hold no positions")
    for v in range(1, count):
        prim = idx.primaries[v]
        if prim is None:
            problems.append(f"node {v}: missing primary position")
            continue
        for pos in idx.positions_at(v):
            if pos in seen:
                problems.append(f"position {pos} stored at nodes {seen[pos]} and {v}")
            seen[pos] = v
    missing = [i for i in range(1, n + 1) if i not in seen]
    if missing:
        problems.append(f"positions never stored: {missing[:8]}")

    secs = sorted(idx.secondaries.values())
    if secs and secs != list(range(secs[0], n + 1)):
        problems.append(f"secondary positions {secs} are not a suffix interval")
    for v, spos in idx.secondaries.items():
        prim = idx.primaries[v]
        if prim is not None and prim >= spos:
            problems.append(f"node {v}: primary {prim} not below secondary {spos}")
    if count != n + 1 - len(idx.secondaries):
        problems.append("node count does not equal n + 1 - double nodes")

    # suffix-pointer law: dropping the first symbol re-normalizes the rest
    for v in range(1, count):
        u = idx.suffixes[v]
        if not 0 <= u < count:
            problems.append(f"node {v}: suffix pointer {u} out of range")
            continue
        if idx.depths[u] != idx.depths[v] - 1:
            problems.append(f"node {v}: suffix pointer does not drop depth by one")
            continue
        x = idx.path_label(v)
        y = idx.path_label(u)
        for j in range(len(y)):
            if y[j] != norm(x[j + 1], j):
                problems.append(f"node {v}: suffix pointer label law broken at {j}")
                break

    # stored positions: path label must equal the window's re-normalized encoding,
    # and a secondary's path label must cover its entire remaining text
    for v in range(1, count):
        path = idx.path_label(v)
        for pos in idx.positions_at(v):
            if pos + len(path) - 1 > n:
                problems.append(f"node {v}: position {pos} path label overruns text")
                continue
            for j, c in enumerate(path):
                if c != norm(prev_text[pos + j - 1], j):
                    problems.append(
                        f"node {v}: position {pos} label mismatch at offset {j}")
                    break
        spos = idx.secondaries.get(v)
        if spos is not None and len(path) != n - spos + 1:
            problems.append(f"node {v}: secondary {spos} does not span its suffix")

    if problems:
        raise StructuralError("; ".join(problems))
