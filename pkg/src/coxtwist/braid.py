"""Word problem by Tits' braid-move rewriting.

Used for Coxeter labels outside the Z[phi] family handled by the root
kernel, and as an independent oracle in the test-suite.  Cost grows with
the number of reduced words of an element, so it is only practical for
short words.
"""

from __future__ import annotations

from collections import deque


class BraidKernel:
    """Same interface as the root kernel, driven by braid moves.

    ``labels[s][t]`` is the Coxeter label, ``0`` meaning infinity.
    """

    backend = "braid"

    def __init__(self, labels):
        self.n = len(labels)
        self._labels = [list(row) for row in labels]
        self._memo: dict[tuple[int, ...], tuple[int, ...]] = {}

    def _braid_neighbours(self, word):
        n = len(word)
        for i in range(n - 1):
            s, t = word[i], word[i + 1]
            if s == t:
                continue
            m = self._labels[s][t]
            if m == 0 or i + m > n:
                continue
            ok = True
            for j in range(m):
                if word[i + j] != (s if j % 2 == 0 else t):
                    ok = False
                    break
            if not ok:
                continue
            swapped = tuple(t if j % 2 == 0 else s for j in range(m))
            yield word[:i] + swapped + word[i + m:]

    def _reduce_once(self, word):
        """Return (shortlex-min reduced word, None) or (shorter word, class)."""
        seen = {word}
        queue = deque([word])
        while queue:
            w = queue.popleft()
            for i in range(len(w) - 1):
                if w[i] == w[i + 1]:
                    return w[:i] + w[i + 2:], seen
            for v in self._braid_neighbours(w):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return min(seen), seen

    def reduce(self, word):
        word = tuple(word)
        trail = []
        while True:
            hit = self._memo.get(word)
            if hit is not None:
                result = hit
                break
            out, cls = self._reduce_once(word)
            trail.append(cls)
            if len(out) == len(word):
                result = out
                break
            word = out
        for cls in trail:
            for w in cls:
                self._memo[w] = result
        return result

    def length(self, word):
        return len(self.reduce(word))

    def distance(self, x, y):
        return self.length(tuple(reversed(x)) + tuple(y))

    def left_descents(self, word):
        w = self.reduce(word)
        k = len(w)
        return tuple(s for s in range(self.n) if len(self.reduce((s,) + w)) < k)

    def is_identity(self, word):
        return not self.reduce(word)

    def order(self, word, cutoff):
        w = self.reduce(word)
        if not w:
            return 1
        acc = w
        for k in range(1, cutoff + 1):
            if not acc:
                return k
            acc = self.reduce(acc + w)
        return 0

    def ball(self, radius, cap):
        out = [()]
        layer = [()]
        for k in range(radius):
            nxt = set()
            for w in layer:
                for s in range(self.n):
                    v = self.reduce((s,) + w)
                    if len(v) == k + 1:
                        nxt.add(v)
            if len(out) + len(nxt) > cap:
                return None
            layer = sorted(nxt)
            out.extend(layer)
            if not layer:
                break
        return out
