"""Exact root computation in the Tits representation of F4."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import VerificationFailed

Vector = tuple[Fraction, ...]

h = Fraction(1, 2)
SIMPLE_ROOTS: dict[str, Vector] = {
    "u": (Fraction(1), Fraction(-1), Fraction(0), Fraction(0)),
    "s": (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
    "t": (Fraction(0), Fraction(0), Fraction(1), Fraction(0)),
    "p": (-h, -h, -h, -h),
}
# consecutive vertices u - s = t - p of the Coxeter-Dynkin diagram
F4_LABELS = {("u", "s"): 3, ("s", "t"): 4, ("t", "p"): 3, ("u", "t"): 2, ("u", "p"): 2, ("s", "p"): 2}


def dot(x: Vector, y: Vector) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def add(*vs: Vector) -> Vector:
    return tuple(sum(col, Fraction(0)) for col in zip(*vs))


def scale(c, v: Vector) -> Vector:
    return tuple(Fraction(c) * a for a in v)


def reflect(j: str, v: Vector) -> Vector:
    a = SIMPLE_ROOTS[j]
    return add(v, scale(-2 * dot(v, a) / dot(a, a), a))


def act(word: str, v: Vector) -> Vector:
    """Apply the word right to left, so ``act("ptu", v) = p(t(u v))``."""
    for j in reversed(word):
        v = reflect(j, v)
    return v


def combo(**coeffs) -> Vector:
    return add(*(scale(c, SIMPLE_ROOTS[j]) for j, c in coeffs.items()))


def _order(a: str, b: str) -> int:
    """Order of ``ab`` read off the angle between the simple roots."""
    x, y = SIMPLE_ROOTS[a], SIMPLE_ROOTS[b]
    c2 = dot(x, y) ** 2 / (dot(x, x) * dot(y, y))   # cos^2(pi/m)
    table = {Fraction(0): 2, Fraction(1, 4): 3, Fraction(1, 2): 4, Fraction(3, 4): 6}
    return table[c2]


@dataclass
class RootReport:
    checks: list[tuple[str, bool]] = field(default_factory=list)
    conclusion: str = ""

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.checks)

    def lines(self) -> list[str]:
        out = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in self.checks]
        if self.conclusion:
            out.append(self.conclusion)
        return out


def f4_root_identity(strict: bool = True) -> RootReport:
    """Verify the six root images and the sum identity exactly."""
    rep = RootReport()
    for a, b in combinations("ustp", 2):
        m = F4_LABELS.get((a, b), F4_LABELS.get((b, a)))
        rep.checks.append((f"order({a}{b}) = {m}", _order(a, b) == m))
    a_s, a_t = SIMPLE_ROOTS["s"], SIMPLE_ROOTS["t"]
    expected = [
        ("u a_s = a_u + a_s", act("u", a_s), combo(u=1, s=1)),
        ("tu a_s = a_u + a_s + 2a_t", act("tu", a_s), combo(u=1, s=1, t=2)),
        ("ptu a_s = a_u + a_s + 2a_t + 2a_p", act("ptu", a_s), combo(u=1, s=1, t=2, p=2)),
        ("p a_t = a_t + a_p", act("p", a_t), combo(t=1, p=1)),
        ("sp a_t = a_s + a_t + a_p", act("sp", a_t), combo(s=1, t=1, p=1)),
        ("usp a_t = a_u + a_s + a_t + a_p", act("usp", a_t), combo(u=1, s=1, t=1, p=1)),
    ]
    for name, got, want in expected:
        rep.checks.append((name, got == want))
    lhs = add(act("u", a_s), act("ptu", a_s))
    rhs = scale(2, act("usp", a_t))
    rep.checks.append(("u a_s + ptu a_s = 2 usp a_t", lhs == rhs))
    if rep.ok:
        # <v, usp a_t> is half the sum of two positive pairings on U
        rep.conclusion = "U meets only the positive side of usp H_t, so U meet usp H^-_t is empty"
    if strict and not rep.ok:
        raise VerificationFailed("; ".join(n for n, ok in rep.checks if not ok))
    return rep
