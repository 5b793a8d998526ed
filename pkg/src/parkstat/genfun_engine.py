"""Area and sum generating polynomials, plus the jet engine at x = 1.

Q(n,a)(x) = sum of x^area(p) over all a-parking functions p of length n.
It satisfies the shifted analog of the counting recurrence,

    Q(n,a)(x) = Q(n,a-1)(x)
              + sum_{k=1..n} C(n,k) x^{k(k+2a-3)/2} Q(n-k,a+k-1)(x),
    Q(0,a)(x) = 1,  Q(n,0)(x) = 0,

and P(n,a)(x) (the sum-statistic analog) is its coefficient reversal at
offset n(2a+n-1)/2.

Two independent engines share the recurrence:

  * area_genfun materializes the full coefficient vector of Q (the audit
    path; memory grows with n^3);
  * jet_at_one carries only (Q(1), Q'(1), ..., Q^(K)(1)) per state (the
    performance path; this is what makes n in the hundreds cheap).

The jets are propagated in the Taylor basis T_i = Q^(i)(1)/i!, where the
monomial shift x^e acts binomially (T_i += C(e,t) T_{i-t}); this is exactly
the K-times-differentiated recurrence with Leibniz products, divided
through by i!, and it is converted back to derivative values on harvest.

Both engines sweep anti-diagonals of the state triangle and retire a
diagonal as soon as the sweep passes it, so peak memory holds two diagonals
plus the harvested targets.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from . import backend
from .errors import BudgetExceeded
from .exactalg import PolyX, binomial_rows

DEFAULT_CELL_BUDGET = 10**7


@dataclass(frozen=True)
class AreaGenFun:
    """Q(n,a) as a dense polynomial: coeff of x^m counts functions of area m."""

    n: int
    a: int
    poly: PolyX

    @property
    def total(self) -> int:
        return self.poly.eval_one()

    def coeff(self, m: int) -> int:
        return self.poly.coeff(m)

    def to_csv(self) -> str:
        lines = ["area,count"]
        lines += [f"{m},{c}" for m, c in enumerate(self.poly.coeffs) if c]
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "total": str(self.total),
            "counts": {str(m): str(c)
                       for m, c in enumerate(self.poly.coeffs) if c},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


@dataclass(frozen=True)
class JetAtOne:
    """(Q(n,a)(1), Q'(n,a)(1), ..., Q^(K)(n,a)(1)) as exact integers."""

    n: int
    a: int
    order: int
    values: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "k": self.order,
            "values": [str(v) for v in self.values],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _diagonal_cells(s: int, n_cap: int) -> int:
    # coefficient slots held by the full-polynomial diagonal s
    cells = 0
    for n in range(0, min(s, n_cap) + 1):
        a = s - n
        if n == 0:
            cells += 1
        elif a >= 1:
            cells += n * (2 * a + n - 3) // 2 + 1
    return cells


def _check_cell_budget(targets: list[tuple[int, int]], n_cap: int, s_max: int,
                       budget: int) -> None:
    peak = 0
    prev = 1
    for s in range(1, s_max + 1):
        cur = _diagonal_cells(s, n_cap)
        peak = max(peak, prev + cur)
        prev = cur
    harvest = sum(n * (2 * a + n - 3) // 2 + 1
                  for n, a in targets if n >= 1 and a >= 1)
    if peak + harvest > budget:
        raise BudgetExceeded(peak + harvest, budget,
                             what="generating-function coefficient slots")


def _sweep(targets: Iterable[tuple[int, int]], step, budget: int | None):
    """Drive a diagonal-step kernel over the triangle covering `targets`.

    Returns {(n, a): kernel entry} for each requested state; entries are the
    raw kernel payloads (coefficient lists, jet lists, or None for zero
    states).  Only two diagonals are live at any moment.
    """
    targets = sorted(set(targets))
    if not targets:
        return {}
    if any(n < 0 or a < 0 for n, a in targets):
        raise ValueError("states need n >= 0 and a >= 0")
    n_cap = max(n for n, _ in targets)
    s_max = max(n + a for n, a in targets)
    if budget is not None:
        _check_cell_budget(targets, n_cap, s_max, budget)
    by_diag: dict[int, list[tuple[int, int]]] = {}
    for n, a in targets:
        by_diag.setdefault(n + a, []).append((n, a))
    binom = binomial_rows(n_cap)
    harvest: dict[tuple[int, int], object] = {}
    prev = [step.unit]
    for n, a in by_diag.get(0, ()):
        harvest[(n, a)] = prev[0]
    for s in range(1, s_max + 1):
        cur = step.fn(prev, s, n_cap, binom)
        for n, a in by_diag.get(s, ()):
            harvest[(n, a)] = cur[n]
        prev = cur
    return harvest


class _PolyStep:
    unit = [1]

    @staticmethod
    def fn(prev, s, n_cap, binom):
        return backend.kernels.genfun_step(prev, s, n_cap, binom)


class _JetStep:
    def __init__(self, order: int):
        self.order = order
        self.unit = [0] * (order + 1)
        self.unit[0] = 1

    def fn(self, prev, s, n_cap, binom):
        return backend.kernels.jet_step(prev, s, n_cap, self.order, binom)


def area_genfun_many(targets: Iterable[tuple[int, int]],
                     budget: int = DEFAULT_CELL_BUDGET) -> dict[tuple[int, int], AreaGenFun]:
    """Q(n,a) for every requested state, from one shared sweep."""
    raw = _sweep(targets, _PolyStep, budget)
    return {
        (n, a): AreaGenFun(n=n, a=a,
                           poly=PolyX(coeffs) if coeffs is not None else PolyX.zero())
        for (n, a), coeffs in raw.items()
    }


def area_genfun(n: int, a: int = 1,
                budget: int = DEFAULT_CELL_BUDGET) -> AreaGenFun:
    """Q(n,a)(x) with exact integer coefficients."""
    return area_genfun_many([(n, a)], budget)[(n, a)]


def sum_genfun(n: int, a: int = 1, budget: int = DEFAULT_CELL_BUDGET) -> PolyX:
    """P(n,a)(x): coefficient of x^s counts functions with sum s.

    Computed as the reversal of Q at offset n(2a+n-1)/2; the lowest term is
    x^n (the all-ones function) and P(1) = Q(1).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    q = area_genfun(n, a, budget)
    return q.poly.reverse(n * (2 * a + n - 1) // 2)


def jet_many(targets: Iterable[tuple[int, int]], order: int) -> dict[tuple[int, int], JetAtOne]:
    """K-jets at x = 1 for every requested state, from one shared sweep.

    Never materializes polynomial coefficients; per the Taylor-basis note in
    the module docstring, harvested entries are rescaled by i! to derivative
    values.
    """
    if order < 0:
        raise ValueError("need order >= 0")
    raw = _sweep(targets, _JetStep(order), None)
    fact = [math.factorial(i) for i in range(order + 1)]
    out = {}
    for (n, a), taylor in raw.items():
        if taylor is None:
            values = (0,) * (order + 1)
        else:
            values = tuple(t * f for t, f in zip(taylor, fact))
        out[(n, a)] = JetAtOne(n=n, a=a, order=order, values=values)
    return out


def jet_at_one(n: int, a: int, order: int) -> JetAtOne:
    """(Q(1), Q'(1), ..., Q^(order)(1)) for one state."""
    return jet_many([(n, a)], order)[(n, a)]
