"""Pure-Python word kernel.

Elements are encoded by the image ``w.rho`` of a point ``rho`` in the
interior of the fundamental chamber of the contragredient Tits
representation.  Coordinates live in Z[phi] (phi the golden ratio), stored
as integer pairs ``(a, b)`` meaning ``a + b*phi``.  A generator ``s`` is a
left descent of ``w`` iff coordinate ``s`` of ``w.rho`` is negative, so the
ShortLex normal form is read off greedily.
"""

from __future__ import annotations

BACKEND = "python"


def _sign(a: int, b: int) -> int:
    # sign of a + b*phi == sign of (2a + b) + b*sqrt(5)
    p = 2 * a + b
    q = b
    if p >= 0 and q >= 0:
        return 0 if p == 0 and q == 0 else 1
    if p <= 0 and q <= 0:
        return -1
    lhs = p * p
    rhs = 5 * q * q
    if lhs == rhs:
        return 0
    if lhs > rhs:
        return 1 if p > 0 else -1
    return 1 if q > 0 else -1


class Kernel:
    """Normal forms for a Coxeter group given by a Z[phi] Cartan matrix.

    ``cartan[s][t]`` is the pair ``(a, b)`` with ``s(alpha_t) = alpha_t -
    (a + b*phi) alpha_s``.
    """

    backend = BACKEND

    def __init__(self, cartan):
        self.n = len(cartan)
        self._rows = []
        for s in range(self.n):
            row = []
            for t in range(self.n):
                if t == s:
                    continue
                a, b = cartan[s][t]
                if a or b:
                    row.append((t, int(a), int(b)))
            self._rows.append(tuple(row))

    # -- vector primitives -------------------------------------------------
    def _apply(self, xa, xb, s):
        sa = xa[s]
        sb = xb[s]
        for t, ma, mb in self._rows[s]:
            # x_t -= m * x_s in Z[phi]; phi^2 = phi + 1
            xa[t] -= ma * sa + mb * sb
            xb[t] -= ma * sb + mb * sa + mb * sb
        xa[s] = -sa
        xb[s] = -sb

    def _vector(self, word):
        xa = [1] * self.n
        xb = [0] * self.n
        apply = self._apply
        for s in reversed(word):
            apply(xa, xb, s)
        return xa, xb

    def _drain(self, xa, xb):
        out = []
        n = self.n
        apply = self._apply
        while True:
            for s in range(n):
                if _sign(xa[s], xb[s]) < 0:
                    break
            else:
                return tuple(out)
            out.append(s)
            apply(xa, xb, s)

    # -- public API --------------------------------------------------------
    def reduce(self, word):
        xa, xb = self._vector(word)
        return self._drain(xa, xb)

    def length(self, word):
        xa, xb = self._vector(word)
        n = self.n
        apply = self._apply
        count = 0
        while True:
            for s in range(n):
                if _sign(xa[s], xb[s]) < 0:
                    break
            else:
                return count
            count += 1
            apply(xa, xb, s)

    def distance(self, x, y):
        """Length of ``x^-1 y`` for reduced words ``x`` and ``y``."""
        return self.length(tuple(reversed(x)) + tuple(y))

    def left_descents(self, word):
        xa, xb = self._vector(word)
        return tuple(s for s in range(self.n) if _sign(xa[s], xb[s]) < 0)

    def is_identity(self, word):
        xa, xb = self._vector(word)
        return all(a == 1 for a in xa) and not any(xb)

    def order(self, word, cutoff):
        """Least ``k <= cutoff`` with ``word^k = 1``, else 0."""
        if not word:
            return 1
        n = self.n
        xa = [1] * n
        xb = [0] * n
        rev = tuple(reversed(word))
        apply = self._apply
        for k in range(1, cutoff + 1):
            for s in rev:
                apply(xa, xb, s)
            if all(a == 1 for a in xa) and not any(xb):
                return k
        return 0

    def ball(self, radius, cap):
        """Canonical words of length <= radius, layer by layer in ShortLex.

        Returns ``None`` when more than ``cap`` elements would be produced.
        """
        n = self.n
        apply = self._apply
        layer = {(): ([1] * n, [0] * n)}
        out = [()]
        for _ in range(radius):
            nxt = {}
            for word, (xa, xb) in layer.items():
                for s in range(n):
                    if _sign(xa[s], xb[s]) < 0:
                        continue
                    ya = list(xa)
                    yb = list(xb)
                    apply(ya, yb, s)
                    key = (tuple(ya), tuple(yb))
                    if key not in nxt:
                        nxt[key] = (ya, yb)
            new_layer = {}
            for ya, yb in nxt.values():
                w = self._drain(list(ya), list(yb))
                new_layer[w] = (ya, yb)
            if len(out) + len(new_layer) > cap:
                return None
            words = sorted(new_layer)
            out.extend(words)
            layer = {w: new_layer[w] for w in words}
            if not layer:
                break
        return out
