"""PQ-tree over a finite ground set, for consecutive-arrangement queries.

P-node children permute freely; Q-node children may only reverse.  After
reducing with every constraint set, the frontiers of the tree are exactly the
orderings in which each constraint set is consecutive.  Queries can addition-
ally pin one leaf to the front and one to the back, which is how the interval
recognizers answer "clique C leftmost / C' rightmost".
"""

EMPTY, FULL, PARTIAL = 0, 1, 2


class _Leaf:
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value


class _P:
    __slots__ = ("children",)

    def __init__(self, children):
        self.children = list(children)


class _Q:
    __slots__ = ("children",)

    def __init__(self, children):
        self.children = list(children)


class ReductionFailed(Exception):
    pass


def _leaves(node, out):
    if isinstance(node, _Leaf):
        out.append(node.value)
    else:
        for c in node.children:
            _leaves(c, out)


def _count(node, members, memo):
    if isinstance(node, _Leaf):
        return 1 if node.value in members else 0
    total = sum(_count(c, members, memo) for c in node.children)
    memo[id(node)] = total
    return total


def _size(node):
    if isinstance(node, _Leaf):
        return 1
    return sum(_size(c) for c in node.children)


def _normalize(node):
    """Collapse single-child internal nodes (children are already normalized)."""
    if isinstance(node, _Leaf):
        return node
    if len(node.children) == 1:
        return node.children[0]
    return node


class PQTree:
    """Starts as one P-node over the ground set; reduce() adds constraints."""

    def __init__(self, universe):
        universe = list(universe)
        if not universe:
            self.root = None
        elif len(universe) == 1:
            self.root = _Leaf(universe[0])
        else:
            self.root = _P([_Leaf(x) for x in universe])
        self._universe = set(universe)

    def frontier(self) -> list:
        out = []
        if self.root is not None:
            _leaves(self.root, out)
        return out

    def reduce(self, members) -> bool:
        """Constrain `members` to be consecutive; False if impossible.

        After a failed reduce the tree is dead: discard it.
        """
        members = set(members)
        if not members <= self._universe:
            raise ValueError("constraint outside ground set")
        if len(members) <= 1 or len(members) == len(self._universe):
            return True
        memo = {}
        total = _count(self.root, members, memo)
        assert total == len(members)
        try:
            self.root = _normalize(self._apply(self.root, members, memo))
        except ReductionFailed:
            return False
        return True

    # --- reduction ---------------------------------------------------------

    def _apply(self, node, members, memo):
        """Handle the deepest node whose subtree holds all of `members`."""
        for i, c in enumerate(node.children):
            cnt = memo.get(id(c), 1 if isinstance(c, _Leaf) and c.value in members else 0)
            if cnt == len(members):
                node.children[i] = _normalize(self._apply(c, members, memo))
                return node
        return self._root_template(node, members, memo)

    def _classify(self, node, members, memo):
        """Non-root pertinent node -> (state, replacement).

        PARTIAL replacements are Q-nodes ordered empty-side first, full-side
        last.
        """
        if isinstance(node, _Leaf):
            return (FULL if node.value in members else EMPTY), node
        cnt = memo.get(id(node), 0)
        if cnt == 0:
            return EMPTY, node
        if cnt == _size(node):
            return FULL, node
        empties, fulls, partials = self._split_children(node, members, memo)
        if isinstance(node, _P):
            if len(partials) > 1:
                raise ReductionFailed
            seq = []
            if empties:
                seq.append(self._group(empties))
            if partials:
                seq.extend(partials[0].children)
            if fulls:
                seq.append(self._group(fulls))
            return PARTIAL, _Q(seq)
        # Q-node: the pertinent side must sit at one end
        states = self._q_states(node, members, memo)
        for seq in (node.children, list(reversed(node.children))):
            st = states if seq is node.children else list(reversed(states))
            if self._q_partial_ok(st):
                out = []
                for child, (state, repl) in zip(seq, st):
                    if state == PARTIAL:
                        out.extend(repl.children)
                    else:
                        out.append(repl)
                return PARTIAL, _Q(out)
        raise ReductionFailed

    def _q_partial_ok(self, states) -> bool:
        """empty* [partial]? full* pattern with the pertinent side rightmost."""
        i = 0
        n = len(states)
        while i < n and states[i][0] == EMPTY:
            i += 1
        if i == n:
            return False
        saw = False
        if states[i][0] == PARTIAL:
            i += 1
            saw = True
        while i < n and states[i][0] == FULL:
            i += 1
            saw = True
        return i == n and saw

    def _split_children(self, node, members, memo):
        empties, fulls, partials = [], [], []
        for c in node.children:
            state, repl = self._classify(c, members, memo)
            if state == EMPTY:
                empties.append(repl)
            elif state == FULL:
                fulls.append(repl)
            else:
                partials.append(repl)
        return empties, fulls, partials

    def _q_states(self, node, members, memo):
        return [self._classify(c, members, memo) for c in node.children]

    def _group(self, nodes):
        return nodes[0] if len(nodes) == 1 else _P(nodes)

    def _root_template(self, node, members, memo):
        if isinstance(node, _Leaf):
            return node
        if isinstance(node, _P):
            empties, fulls, partials = self._split_children(node, members, memo)
            if len(partials) > 2:
                raise ReductionFailed
            if not partials:
                if not empties or not fulls:
                    return node  # wholly full or wholly empty: nothing to do
                node.children = empties + [self._group(fulls)]
                return node
            seq = list(partials[0].children)
            if fulls:
                seq.append(self._group(fulls))
            if len(partials) == 2:
                seq.extend(reversed(partials[1].children))
            q = _Q(seq)
            if not empties:
                return q
            node.children = empties + [q]
            return node
        # Q root: pertinent children must form one consecutive block, with at
        # most one partial at each edge of the block
        states = self._q_states(node, members, memo)
        idx = [i for i, (s, _) in enumerate(states) if s != EMPTY]
        lo, hi = idx[0], idx[-1]
        if idx != list(range(lo, hi + 1)):
            raise ReductionFailed
        for i in range(lo + 1, hi):
            if states[i][0] != FULL:
                raise ReductionFailed
        out = list(node.children[:lo])
        state, repl = states[lo]
        if state == PARTIAL:
            out.extend(repl.children)  # empty side faces left: already ordered
        else:
            out.append(repl)
        for i in range(lo + 1, hi):
            out.append(states[i][1])
        if hi > lo:
            state, repl = states[hi]
            if state == PARTIAL:
                out.extend(reversed(repl.children))
            else:
                out.append(repl)
        out.extend(node.children[hi + 1:])
        node.children = out
        return node

    # --- constrained frontiers ----------------------------------------------

    def ordering(self, first=None, last=None):
        """A frontier with `first` leading and `last` trailing, or None."""
        if self.root is None:
            return [] if first is None and last is None else None
        if isinstance(self.root, _Leaf):
            ok_first = first is None or first == self.root.value
            ok_last = last is None or last == self.root.value
            return [self.root.value] if ok_first and ok_last else None
        if first is not None and first == last and len(self._universe) > 1:
            return None
        return self._arrange(self.root, first, last)

    def _locate(self, node, value):
        """Child of `node` whose subtree contains leaf `value` (None if absent)."""
        for c in node.children:
            out = []
            _leaves(c, out)
            if value in out:
                return c
        return None

    def _arrange(self, node, first, last):
        if isinstance(node, _Leaf):
            if first is not None and node.value != first:
                return None
            if last is not None and node.value != last:
                return None
            return [node.value]
        cf = self._locate(node, first) if first is not None else None
        cl = self._locate(node, last) if last is not None else None
        if first is not None and cf is None:
            return None
        if last is not None and cl is None:
            return None
        if cf is not None and cl is not None and cf is cl:
            return None  # both pins inside one child: no room for the others
        if isinstance(node, _P):
            middle = [c for c in node.children if c is not cf and c is not cl]
            out = []
            if cf is not None:
                head = self._arrange(cf, first, None)
                if head is None:
                    return None
                out.extend(head)
            for c in middle:
                part = []
                _leaves(c, part)
                out.extend(part)
            if cl is not None:
                tail = self._arrange(cl, None, last)
                if tail is None:
                    return None
                out.extend(tail)
            return out
        for seq in (node.children, list(reversed(node.children))):
            if cf is not None and seq[0] is not cf:
                continue
            if cl is not None and seq[-1] is not cl:
                continue
            head = self._arrange(seq[0], first, None) if cf is not None else None
            if cf is not None and head is None:
                continue
            tail = self._arrange(seq[-1], None, last) if cl is not None else None
            if cl is not None and tail is None:
                continue
            out = list(head) if head is not None else []
            if head is None:
                part = []
                _leaves(seq[0], part)
                out.extend(part)
            for c in seq[1:-1]:
                part = []
                _leaves(c, part)
                out.extend(part)
            if tail is not None:
                out.extend(tail)
            else:
                part = []
                _leaves(seq[-1], part)
                out.extend(part)
            return out
        return None
