# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled G4ip core; same interface and results as ``_kernel_py``."""

cdef enum:
    ATOM = 0
    BOT = 1
    TOP = 2
    AND = 3
    OR = 4
    IMP = 5


cdef class Prover:
    cdef public list tag
    cdef public list left
    cdef public list right
    cdef dict _index
    cdef dict _memo
    cdef public int bot
    cdef public int top

    def __init__(self):
        self.tag = []
        self.left = []
        self.right = []
        self._index = {}
        self._memo = {}
        self.bot = self.make(BOT, -1, -1)
        self.top = self.make(TOP, -1, -1)

    cpdef int make(self, int tag, int a, int b):
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

    cpdef bint prove(self, frozenset ctx, int goal):
        key = (ctx, goal)
        r = self._memo.get(key)
        if r is None:
            r = self._prove(ctx, goal)
            self._memo[key] = r
        return r

    cdef bint _prove(self, frozenset ctx, int goal):
        cdef list tag = self.tag, left = self.left, right = self.right
        cdef int f, t, a, b, ta, g, g1, g2, tg, d
        cdef frozenset rest
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
                a = left[f]
                b = right[f]
                ta = tag[a]
                if ta == ATOM and a in ctx:
                    return self.prove((ctx - {f}) | {b}, goal)
                if ta == TOP:
                    return self.prove((ctx - {f}) | {b}, goal)
                if ta == BOT:
                    return self.prove(ctx - {f}, goal)
                if ta == AND:
                    g = self.make(IMP, left[a], self.make(IMP, right[a], b))
                    return self.prove((ctx - {f}) | {g}, goal)
                if ta == OR:
                    g1 = self.make(IMP, left[a], b)
                    g2 = self.make(IMP, right[a], b)
                    return self.prove((ctx - {f}) | {g1, g2}, goal)
        tg = tag[goal]
        if tg == TOP:
            return True
        if tg == AND:
            return self.prove(ctx, left[goal]) and self.prove(ctx, right[goal])
        if tg == IMP:
            return self.prove(ctx | {left[goal]}, right[goal])
        if tg == ATOM and goal in ctx:
            return True
        if tg == OR:
            if self.prove(ctx, left[goal]) or self.prove(ctx, right[goal]):
                return True
        for f in ctx:
            if tag[f] == IMP and tag[left[f]] == IMP:
                a = left[f]
                b = right[f]
                d = right[a]
                rest = ctx - {f}
                if (self.prove(rest | {self.make(IMP, d, b)}, a)
                        and self.prove(rest | {b}, goal)):
                    return True
        return False
