"""Pure-Python G4ip core over hash-consed formula codes.

Formulas are interned as small integers; a sequent is a frozenset of
codes and a goal code.  Results are memoized per sequent.
"""

ATOM, BOT, TOP, AND, OR, IMP = range(6)


class Prover:
    def __init__(self):
        self.tag = []
        self.left = []
        self.right = []
        self._index = {}
        self._memo = {}
        self.bot = self.make(BOT, -1, -1)
        self.top = self.make(TOP, -1, -1)

    def make(self, tag, a, b):
        key = (tag, a, b)
        code = self._index.get(key)
        if code is None:
            code = len(self.tag)
            self.tag.append(tag)
            self.left.append(a)
            self.right.append(b)
            self._index[key] = code
        return code

    def clear(self):
        self._memo.clear()

    def memo_size(self):
        return len(self._memo)

    def prove(self, ctx, goal):
        """Is ctx ⇒ goal derivable?  ctx is a frozenset of codes."""
        key = (ctx, goal)
        memo = self._memo
        r = memo.get(key)
        if r is None:
            r = self._prove(ctx, goal)
            memo[key] = r
        return r

    def _prove(self, ctx, goal):
        tag, left, right, make = self.tag, self.left, self.right, self.make
        # invertible left rules
        for f in ctx:
            t = tag[f]
            if t == BOT:
                return True
            if t == TOP:
                return self.prove(ctx - {f}, goal)
            if t == AND:
                return self.prove((ctx - {f}) | {left[f], right[f]}, goal)
            if t == OR:
                rest = ctx - {f}
                return (self.prove(rest | {left[f]}, goal)
                        and self.prove(rest | {right[f]}, goal))
            if t == IMP:
                a, b = left[f], right[f]
                ta = tag[a]
                if ta == ATOM and a in ctx:
                    return self.prove((ctx - {f}) | {b}, goal)
                if ta == TOP:
                    return self.prove((ctx - {f}) | {b}, goal)
                if ta == BOT:
                    return self.prove(ctx - {f}, goal)
                if ta == AND:
                    g = make(IMP, left[a], make(IMP, right[a], b))
                    return self.prove((ctx - {f}) | {g}, goal)
                if ta == OR:
                    g1 = make(IMP, left[a], b)
                    g2 = make(IMP, right[a], b)
                    return self.prove((ctx - {f}) | {g1, g2}, goal)
        # invertible right rules
        tg = tag[goal]
        if tg == TOP:
            return True
        if tg == AND:
            return self.prove(ctx, left[goal]) and self.prove(ctx, right[goal])
        if tg == IMP:
            return self.prove(ctx | {left[goal]}, right[goal])
        if tg == ATOM and goal in ctx:
            return True
        # choices
        if tg == OR:
            if self.prove(ctx, left[goal]) or self.prove(ctx, right[goal]):
                return True
        for f in ctx:
            if tag[f] == IMP and tag[left[f]] == IMP:
                a, b = left[f], right[f]
                d = right[a]
                rest = ctx - {f}
                if (self.prove(rest | {make(IMP, d, b)}, a)
                        and self.prove(rest | {b}, goal)):
                    return True
        return False
