"""Numeric chain of the hyperelliptic construction showing Mukai's bound is sharp.

Over a hyperelliptic curve of genus ``g`` one builds semistable bundles
``E_2, ..., E_n`` of degree one, each an extension of the previous by ``O_C``.
On ``X_n = P_C(E_n)`` the bundle ``K + (n+2+p)H`` restricts to a degree
``2g+1+p`` line bundle on a section curve, which fails N_{p+1}. Only these
numbers are produced here; no extension classes are constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .certifier import EmbeddingSpec, best_certificate, frac_str
from .slopes import FormalBundle, LineBundleClass, Tri, miyaoka_ample

HYPERELLIPTIC_NOTE = (
    "the construction needs a hyperelliptic curve, so genus >= 2 is required; "
    "genus 1 is ambiguous in the source construction and is rejected"
)


class NoHyperellipticWitness(ValueError):
    pass


@dataclass(frozen=True)
class ChainStep:
    rank: int
    bundle: FormalBundle
    ample: Tri


@dataclass(frozen=True)
class WitnessReport:
    n: int
    genus: int
    p: int
    chain: tuple[ChainStep, ...]
    line_class: LineBundleClass
    section_degree: int
    holds: str
    fails: str
    certifier_p: int | str | None

    @property
    def mu_chain(self) -> list[Fraction]:
        return [step.bundle.mu_minus for step in self.chain]

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "genus": self.genus,
            "p": self.p,
            "chain": [
                {
                    "rank": s.rank,
                    "degree": s.bundle.degree,
                    "mu_minus": frac_str(s.bundle.mu_minus),
                    "slope": frac_str(s.bundle.slope),
                    "semistable": s.bundle.semistable,
                    "H_ample": s.ample.value,
                }
                for s in self.chain
            ],
            "line_bundle": {
                "expression": f"K + ({self.n}+2+{self.p})H",
                "a": self.line_class.a,
                "b": self.line_class.b,
            },
            "deg_L_C": self.section_degree,
            "conclusion": {
                "bundle": f"K + {self.n + 2 + self.p}H",
                "holds": self.holds,
                "fails": self.fails,
            },
            "certifier_p_certified": self.certifier_p,
        }

    def to_markdown(self) -> str:
        rows = "\n".join(
            f"| E_{s.rank} | {s.bundle.degree} | {s.bundle.mu_minus} | {s.ample.value} |"
            for s in self.chain
        )
        return (
            f"# Sharpness witness: n={self.n}, g={self.genus}, p={self.p}\n\n"
            "| bundle | degree | mu_minus | H ample |\n|---|---|---|---|\n"
            f"{rows}\n\n"
            f"- L = K + {self.n + 2 + self.p}H = {self.line_class.a}H + pi^*B, "
            f"deg B = {self.line_class.b}\n"
            f"- deg(L_C) = {self.section_degree}\n"
            f"- Mukai prediction: {self.holds}; fails: {self.fails}\n"
        )


def optimality_witness(n: int, g: int, p: int) -> WitnessReport:
    if g < 2:
        raise NoHyperellipticWitness(HYPERELLIPTIC_NOTE)
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    chain = []
    for i in range(2, n + 1):
        E = FormalBundle.semistable_bundle(i, 1)
        chain.append(ChainStep(i, E, miyaoka_ample(E, LineBundleClass(1, 0))))
    # K_X = -nH + pi^*(K_C + det E_n) on P_C(E_n), rank E_n = n, det of degree 1
    canonical_twist = 2 * g - 2 + chain[-1].bundle.degree
    L = LineBundleClass(a=-n + (n + 2 + p), b=canonical_twist)
    # the minimal section of X_2 = P(E_2) is a degree-one quotient of E_2
    section_quotient_degree = 1
    section_degree = L.a * section_quotient_degree + L.b
    assert section_degree == 2 * g + 1 + p
    # the witness must never be certified beyond N_p; record what the certifier says
    E_n = chain[-1].bundle
    spec = EmbeddingSpec(genus=g, n=n - 1, a=L.a, b=L.b, bundle=E_n)
    cert = best_certificate(spec)
    if isinstance(cert.p_certified, int) and cert.p_certified >= p + 1:
        raise AssertionError(f"certifier claims N_{cert.p_certified} for a known N_{p + 1} failure")
    return WitnessReport(
        n=n,
        genus=g,
        p=p,
        chain=tuple(chain),
        line_class=L,
        section_degree=section_degree,
        holds=f"N_{p}",
        fails=f"N_{p + 1}",
        certifier_p=cert.p_certified,
    )
