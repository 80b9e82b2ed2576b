"""Exact counts and asymptotics bounding the state complexity of plus-complement-plus."""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from .errors import InputError

PRECISION = 50  # decimal digits, well above 80 bits

W1 = Decimal("0.5671432904097838729999686622103555497538")
C1 = Decimal("1.12511909098678593170279439143182676599")


def upper_count(n: int) -> int:
    """Number of (permutation, chain) representations of the reachable-state form."""
    if n < 1:
        raise InputError("upper_count needs n >= 1")
    return sum(math.comb(n, k) * math.factorial(k) * (k + 1) ** (n - k) for k in range(1, n + 1))


def crude_bound(n: int) -> int:
    if n < 1:
        raise InputError("crude_bound needs n >= 1")
    return math.factorial(n) * (n + 2) ** n


@lru_cache(maxsize=None)
def _egf_coefficients(n_max: int) -> tuple[Fraction, ...]:
    # g(x) = e^{-x} - x;  h = 1/g  via  h_n = -(1/g_0) * sum_{j>=1} g_j h_{n-j}
    g = [Fraction((-1) ** j, math.factorial(j)) for j in range(n_max + 1)]
    if n_max >= 1:
        g[1] -= 1
    h = [Fraction(1) / g[0]]
    for m in range(1, n_max + 1):
        h.append(-sum(g[j] * h[m - j] for j in range(1, m + 1)) / g[0])
    return tuple(h)


def a072597(n: int) -> int:
    """n! [x^n] 1/(e^{-x} - x), by exact series inversion."""
    if n < 0:
        raise InputError("a072597 needs n >= 0")
    value = _egf_coefficients(n)[n] * math.factorial(n)
    assert value.denominator == 1
    return int(value)


def asymptotic_estimate(n: int) -> Decimal:
    if n < 1:
        raise InputError("asymptotic_estimate needs n >= 1")
    with localcontext() as ctx:
        ctx.prec = PRECISION
        return C1 * math.factorial(n) / W1 ** n


def lambert_w1_check(x0: float | str = "0.5", max_iter: int = 100) -> Decimal:
    """Newton's method on x e^x = 1."""
    with localcontext() as ctx:
        ctx.prec = PRECISION + 10
        x = Decimal(x0)
        tol = Decimal(10) ** -(PRECISION - 5)
        for _ in range(max_iter):
            ex = x.exp()
            step = (x * ex - 1) / (ex * (x + 1))
            x -= step
            if abs(step) < tol:
                return +x
    raise RuntimeError("Newton iteration for W(1) did not converge")


def c1_from_w(w: Decimal = W1) -> Decimal:
    """Residue constant of 1/(e^{-x}-x) at its dominant pole x = W(1)."""
    with localcontext() as ctx:
        ctx.prec = PRECISION
        return 1 / (w * (1 + w))


def _proper_supersets(n: int) -> list[int]:
    """For each subset s of an n-set, the bitmask (over subset indices) of its proper supersets."""
    size = 1 << n
    out = []
    for s in range(size):
        m = 0
        for t in range(size):
            if t != s and t & s == s:
                m |= 1 << t
        out.append(m)
    return out


def antichains_brute(n: int) -> int:
    """Count antichains by testing every family of subsets of an n-set."""
    sup = _proper_supersets(n)
    size = 1 << n
    count = 0
    for fam in range(1 << size):
        f, s = fam, 0
        while f:
            if f & 1 and fam & sup[s]:
                break
            f >>= 1
            s += 1
        else:
            count += 1
    return count


def downsets(n: int) -> list[int]:
    """All ⊆-downward-closed families of subsets of an n-set, as bitmasks over subset indices."""
    sup = _proper_supersets(n)
    size = 1 << n
    out = []
    for fam in range(1 << size):
        # downward closed: a member's supersets may be present only if it is
        ok = True
        for s in range(size):
            if not fam >> s & 1 and fam & sup[s]:
                ok = False
                break
        if ok:
            out.append(fam)
    return out


def antichains_by_pairs(n: int) -> int:
    """M(n) as the number of nested pairs A ⊆ B of downsets of an (n-1)-set."""
    if n == 0:
        return 2
    ds = downsets(n - 1)
    return sum(1 for a in ds for b in ds if a & b == a)


def dedekind(n: int) -> int:
    if n < 0:
        raise InputError("dedekind needs n >= 0")
    if n <= 4:
        return antichains_brute(n)
    if n == 5:
        return antichains_by_pairs(n)
    raise InputError(f"dedekind({n}) unsupported (n <= 5)")


def lower_count(n: int) -> int:
    if n < 2:
        raise InputError("lower_count needs n >= 2")
    m = -(-n // 2)
    return m ** (n - m)


@dataclass(frozen=True)
class BoundRow:
    n: int
    f: int
    a072597: int
    crude: int
    dedekind: int | None
    estimate: Decimal
    ratio: Decimal

    def fields(self) -> list[str]:
        return [str(self.n), str(self.f), str(self.a072597), str(self.crude),
                "" if self.dedekind is None else str(self.dedekind),
                f"{self.estimate:.6f}", f"{self.ratio:.12f}"]


COLUMNS = ("n", "f", "a072597", "crude", "dedekind", "estimate", "ratio")


def bound_table(max_n: int) -> list[BoundRow]:
    rows = []
    for n in range(1, max_n + 1):
        est = asymptotic_estimate(n)
        a = a072597(n)
        with localcontext() as ctx:
            ctx.prec = PRECISION
            ratio = Decimal(a) / est
        rows.append(BoundRow(n, upper_count(n), a, crude_bound(n),
                             dedekind(n) if n <= 5 else None, est, ratio))
    return rows
