"""Explicit lower and upper bounds on alpha_s(H_{2t}(n)) and the report that
compares them with constructed sets and exact values.

All values are exact rationals. Leading-order asymptotic bounds are tagged
``asymptotic`` and never take part in ordering checks; only inequalities valid
at every finite n (transfer bounds with exact layer values, the Frankl-Wilson
chain) are enforced.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, factorial, log2

from .cube import CubeParams
from .field import is_prime_power

PRIME_POWER_OFFSETS = range(0, 11)


class BoundsOrderingError(AssertionError):
    """A constructed size, exact value and finite upper bound are out of order."""


@dataclass(frozen=True)
class Bound:
    value: Fraction
    asymptotic: bool
    note: str = ""

    def as_dict(self) -> dict:
        out = {"exact": str(self.value), "approx": float(self.value), "asymptotic": self.asymptotic}
        if self.note:
            out["note"] = self.note
        return out


def prime_power_coefficient(t: int, i: int) -> int | None:
    """(2t-1+i)! / (t-1+i)! when t+i is a prime power, else None."""
    if t < 1 or i < 0:
        raise ValueError("need t >= 1 and i >= 0")
    if not is_prime_power(t + i):
        return None
    return factorial(2 * t - 1 + i) // factorial(t - 1 + i)


def prime_power_upper_bound(n: int, t: int, i: int) -> Fraction | None:
    """Leading term coeff * 2^n / n^t of the independence-number upper bound."""
    coeff = prime_power_coefficient(t, i)
    if coeff is None:
        return None
    return Fraction(coeff * (1 << n), n**t)


def prime_power_finite_bound(n: int, t: int, i: int) -> Fraction | None:
    """2^n C(n, t+i-1) / C(n, 2t-1+i): transfer to layer 2t-1+i plus Frankl-Wilson with q = t+i.

    Valid at every n >= 2t-1+i, so it is checked against exact values.
    """
    k = 2 * t - 1 + i
    if prime_power_coefficient(t, i) is None or k > n:
        return None
    return Fraction((1 << n) * frankl_wilson_bound(n, t + i), comb(n, k))


def frankl_wilson_bound(n: int, q: int, k: int | None = None) -> int:
    """C(n, q-1): bound on k-uniform families with no intersection size = k (mod q).

    ``k`` is accepted for symmetry with the family it bounds but does not enter the value.
    """
    if not is_prime_power(q):
        raise ValueError(f"q={q} is not a prime power")
    return comb(n, q - 1)


def subsequence_witness(n: int) -> tuple[int, int]:
    """(m, k) with n = 2^m - k and 2^(m-1) < n <= 2^m."""
    m = max(0, ceil(log2(n)))
    return m, (1 << m) - n


def lower_bounds(n: int, t: int, s: int) -> dict[str, Bound]:
    """Leading-order lower bounds: layer-coloring ((s-1)/(t+1)) and BCH-subsequence (s-1)."""
    base = Fraction(1 << n, n**t)
    m, k = subsequence_witness(n)
    return {
        "layer_coloring": Bound(Fraction(s - 1, t + 1) * base, True),
        "bch_subsequence": Bound((s - 1) * base, True, f"n = 2^{m} - {k}"),
    }


def r2_upper_bound(n: int, s: int) -> Fraction:
    """alpha_s(H_2(n)) <= m_s(n,1,0) * 2^n / n, exact at every n."""
    return Fraction(min(n, s - 1) * (1 << n), n)


def upper_bounds(n: int, t: int, s: int) -> dict[str, Bound]:
    out = {}
    if t == 1:
        out["r2_transfer"] = Bound(r2_upper_bound(n, s), False)
    if s == 2:
        best = None
        for i in PRIME_POWER_OFFSETS:
            lead = prime_power_upper_bound(n, t, i)
            if lead is None:
                continue
            out[f"prime_power_i{i}"] = Bound(lead, True, f"t+i = {t + i}")
            if best is None or lead < best[1]:
                best = (i, lead)
            fin = prime_power_finite_bound(n, t, i)
            if fin is not None:
                out[f"prime_power_finite_i{i}"] = Bound(fin, False, f"layer {2 * t - 1 + i}, q = {t + i}")
        if best is not None:
            out["prime_power_best"] = Bound(best[1], True, f"i = {best[0]}")
    return out


@dataclass
class BoundsReport:
    params: CubeParams
    lower: dict[str, Bound]
    upper: dict[str, Bound]
    transfer: dict[int, Fraction] = field(default_factory=dict)
    constructed: dict[str, int] = field(default_factory=dict)
    exact: int | None = None
    exact_is_exact: bool = True

    def finite_uppers(self) -> dict[str, Fraction]:
        out = {k: b.value for k, b in self.upper.items() if not b.asymptotic}
        out.update({f"transfer_k{k}": v for k, v in self.transfer.items()})
        return out

    def check(self) -> None:
        uppers = self.finite_uppers()
        exact = self.exact if self.exact_is_exact else None
        for name, size in self.constructed.items():
            if exact is not None and size > exact:
                raise BoundsOrderingError(f"construction {name}={size} exceeds exact {exact}")
            for uname, u in uppers.items():
                if size > u:
                    raise BoundsOrderingError(f"construction {name}={size} exceeds {uname}={u}")
        if exact is not None:
            for uname, u in uppers.items():
                if exact > u:
                    raise BoundsOrderingError(f"exact {exact} exceeds {uname}={u}")

    def as_dict(self) -> dict:
        uppers = self.finite_uppers()
        return {
            "params": self.params.as_dict(),
            "lower": {k: b.as_dict() for k, b in self.lower.items()},
            "upper": {k: b.as_dict() for k, b in self.upper.items()},
            "transfer": {
                str(k): Bound(v, False, f"layer {k}").as_dict() for k, v in sorted(self.transfer.items())
            },
            "best_finite_upper": str(min(uppers.values())) if uppers else None,
            "constructed": dict(sorted(self.constructed.items())),
            "exact": self.exact,
            "exact_complete": self.exact_is_exact if self.exact is not None else None,
        }


def assemble_report(
    params: CubeParams,
    constructions: dict[str, int],
    exact: int | None = None,
    exact_is_exact: bool = True,
    transfer: dict[int, Fraction] | None = None,
) -> BoundsReport:
    if not constructions:
        raise ValueError("at least one construction is required")
    n, t, s = params.n, params.t, params.s
    report = BoundsReport(
        params=params,
        lower=lower_bounds(n, t, s),
        upper=upper_bounds(n, t, s),
        transfer=dict(transfer or {}),
        constructed=dict(constructions),
        exact=exact,
        exact_is_exact=exact_is_exact,
    )
    report.check()
    return report


GRID_FIELDS = [
    "n",
    "r",
    "s",
    "lower_layer_coloring",
    "lower_bch_subsequence",
    "best_finite_upper",
    "constructed_best",
    "exact",
]


def grid_csv(reports: list[BoundsReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=GRID_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rep in reports:
        d = rep.as_dict()
        uppers = rep.finite_uppers()
        writer.writerow(
            {
                "n": rep.params.n,
                "r": rep.params.r,
                "s": rep.params.s,
                "lower_layer_coloring": f"{float(rep.lower['layer_coloring'].value):.6g}",
                "lower_bch_subsequence": f"{float(rep.lower['bch_subsequence'].value):.6g}",
                "best_finite_upper": f"{float(min(uppers.values())):.6g}" if uppers else "",
                "constructed_best": max(rep.constructed.values()),
                "exact": "" if d["exact"] is None or not rep.exact_is_exact else d["exact"],
            }
        )
    return buf.getvalue()
