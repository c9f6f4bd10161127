"""Regenerate the published numeric tables from module calls.

Every number in the report comes from the certifier, the knowledge base or
the Koszul engine. The only constants here are the grids the tables range
over and the scan resolution.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .certifier import EmbeddingSpec, best_certificate
from .knowledge import INFINITE, mukai_min_q, veronese_bounds
from .slopes import FormalBundle

# grids
VERONESE_GRID_N = range(1, 5)
VERONESE_GRID_D = range(1, 6)
THRESHOLD_P_RANGES = {1: range(0, 8), 2: range(0, 8), 3: range(0, 5), 4: range(0, 3), 5: range(0, 3)}
MUKAI_GRID = {"g": range(0, 4), "n": range(1, 4), "p": range(0, 3), "tau": range(1, 3)}
KOSZUL_CHECKS = (((2, 2), 2), ((3, 2), 5), ((2, 3), 6))
KOSZUL_SEED = 20240601
KOSZUL_Q_MAX = 4
SCAN_LIMIT = 200
SCAN_STEPS = 64

GOLDEN = "tables.md"


def _certifies(g: int, nu: Fraction, p: int) -> bool:
    """Does the certifier reach N_p for ``H + pi^*B`` with ``b + mu^-(E) = nu``?"""
    b = int(nu) if nu.denominator == 1 else nu.numerator // nu.denominator
    mu = nu - b
    bundle = (
        FormalBundle.split([0, 0])
        if mu == 0
        else FormalBundle.semistable_bundle(mu.denominator, mu.numerator)
    )
    cert = best_certificate(EmbeddingSpec(g, bundle.rank - 1, 1, b, bundle))
    got = cert.p_certified
    return got == INFINITE or (got is not None and got >= p)


@dataclass(frozen=True)
class Threshold:
    genus: int
    p: int
    nu_min: int
    strict_below: bool

    def render(self) -> str:
        if self.strict_below:
            return f"nu > {self.nu_min - 1}"
        return f"nu >= {self.nu_min}"


def nu_threshold(g: int, p: int) -> Threshold:
    """Least integer ``nu`` that certifies N_p, and whether all rationals just below also do."""
    nu = next(
        (v for v in range(2 * g, SCAN_LIMIT) if _certifies(g, Fraction(v), p)),
        None,
    )
    if nu is None:
        raise RuntimeError(f"no certification below nu={SCAN_LIMIT} for g={g}, p={p}")
    strict = all(
        _certifies(g, nu - 1 + Fraction(k, SCAN_STEPS), p) for k in range(1, SCAN_STEPS)
    )
    return Threshold(g, p, nu, strict)


def threshold_rows() -> list[Threshold]:
    return [nu_threshold(g, p) for g, ps in THRESHOLD_P_RANGES.items() for p in ps]


def normality_rows() -> list[tuple[int, int, int]]:
    """``(g, nu for N_0, nu for N_1)``."""
    return [
        (g, nu_threshold(g, 0).nu_min, nu_threshold(g, 1).nu_min) for g in THRESHOLD_P_RANGES
    ]


def veronese_rows() -> list[tuple[int, int, str, str]]:
    rows = []
    for n in VERONESE_GRID_N:
        for d in VERONESE_GRID_D:
            holds, fails = veronese_bounds(n, d)
            holds_txt = "all p" if holds == INFINITE else f"p <= {holds}"
            fails_txt = "-" if fails is None else f"p >= {fails}"
            rows.append((n, d, holds_txt, fails_txt))
    return rows


def koszul_rows() -> list[tuple[str, int, str, str]]:
    """Recompute a few Veronese boundary cells from Koszul complexes."""
    from .koszul import Field, koszul_value, property_np, veronese_ring

    field = Field.two_primes(KOSZUL_SEED)
    rows = []
    for (n, d), p in KOSZUL_CHECKS:
        ring = veronese_ring(n, d, q_max=KOSZUL_Q_MAX)
        verdict = property_np(ring, p, field)
        nxt = p + 1
        if nxt <= ring.dim_v - 1:
            value, sound = koszul_value(ring, nxt, 2, field)
            beyond = f"k_{{{nxt},2}} = {value} ({sound.value})"
        else:
            beyond = "beyond resolution length"
        rows.append((f"(P^{n}, O({d}))", p, verdict.status.value, beyond))
    return rows


def mukai_rows() -> list[tuple[int, int, int, int, int]]:
    """``(g, n, tau, p, least q)`` for ``K_X + A_1 + ... + A_q`` to satisfy N_p."""
    return [
        (g, n, tau, p, mukai_min_q(g, n, tau, p))
        for tau in MUKAI_GRID["tau"]
        for g in MUKAI_GRID["g"]
        for n in MUKAI_GRID["n"]
        for p in MUKAI_GRID["p"]
    ]


def _table(header: list[str], rows) -> list[str]:
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out.extend("| " + " | ".join(str(c) for c in row) + " |" for row in rows)
    return out


def render_report(include_koszul: bool = True) -> str:
    lines = ["# Regenerated tables", ""]
    lines += ["## Property N_p for (P^n, O(d))", ""]
    lines += _table(["n", "d", "holds", "fails"], veronese_rows())
    if include_koszul:
        lines += ["", "### Koszul recomputation (two fixed primes)", ""]
        lines += _table(["embedding", "p", "N_p verdict", "next cell"], koszul_rows())
    lines += ["", "## nu thresholds for H + pi^*B (nu = b + mu^-(E))", ""]
    lines += _table(
        ["g", "p", "least integer nu", "condition"],
        [(t.genus, t.p, t.nu_min, t.render()) for t in threshold_rows()],
    )
    lines += ["", "## Normal generation and normal presentation", ""]
    lines += _table(["g", "N_0 from nu", "N_1 from nu"], normality_rows())
    lines += ["", "## Mukai-type bound: least q", ""]
    lines += _table(["g", "n", "tau", "p", "q_min"], mukai_rows())
    return "\n".join(lines) + "\n"


def golden_text() -> str:
    return resources.files("syzcert.golden").joinpath(GOLDEN).read_text()


def diff_against_golden(report: str, golden: str | None = None) -> list[str]:
    golden = golden_text() if golden is None else golden
    return list(
        difflib.unified_diff(
            golden.splitlines(), report.splitlines(), "golden", "regenerated", lineterm=""
        )
    )
