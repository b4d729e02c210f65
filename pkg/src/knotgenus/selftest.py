"""Seeded self-checks run by ``knotgenus selftest``."""

from __future__ import annotations

import random

from .diagram import braid_closure
from .errors import KnotGenusError, PDValidationError
from .laurent import LaurentPoly, normalize
from .verdicts import FAIL, PASS, TheoremVerdict, analyze, check_breadth_inv

__all__ = ["random_laurent", "random_braid_knot", "laurent_suite", "oracle_suite", "run_selftest"]


def random_laurent(rng: random.Random, terms: int = 4, span: int = 4) -> LaurentPoly:
    return LaurentPoly({rng.randint(-span, span): rng.randint(-9, 9) for _ in range(terms)})


def random_braid_knot(rng: random.Random, max_len: int = 10):
    """Closure of a random braid word that happens to be a knot."""
    while True:
        strands = rng.randint(2, 4)
        length = rng.randint(strands, max_len)
        word = [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
        if len({abs(g) for g in word}) != strands - 1:
            continue
        try:
            d = braid_closure(word, name="braid" + "".join(f"{g:+d}" for g in word))
        except PDValidationError:
            # an outer strand crossed once closes into a kink loop
            continue
        if d.is_knot():
            return word, d


def laurent_suite(rng: random.Random, trials: int) -> TheoremVerdict:
    bad = []
    for _ in range(trials):
        f, g, h = (random_laurent(rng) for _ in range(3))
        checks = {
            "distributive": f * (g + h) == f * g + f * h,
            "associative": (f * g) * h == f * (g * h),
            "commutative": f * g == g * f,
            "parse-roundtrip": LaurentPoly.parse(str(f)) == f,
            "reflect-involution": f.reflect().reflect() == f,
        }
        failed = [k for k, ok in checks.items() if not ok]
        if failed:
            bad.append({"f": str(f), "g": str(g), "h": str(h), "failed": failed})
    return TheoremVerdict(
        "random", "laurent-ring", FAIL if bad else PASS,
        {"samples": trials, **({"counterexamples": bad[:5]} if bad else {})},
    )


def oracle_suite(rng: random.Random, trials: int) -> TheoremVerdict:
    """Random braid knots: block polynomial agrees with Fox, and is symmetric with value ±1 at 1."""
    bad = []
    for _ in range(trials):
        word, d = random_braid_knot(rng)
        try:
            r = analyze(d)
        except KnotGenusError as exc:
            bad.append({"braid": word, "error": str(exc)})
            continue
        delta = r.alexander
        if abs(delta(1)) != 1 or normalize(delta.reflect()) != delta:
            bad.append({"braid": word, "alexander": str(delta)})
        elif r.breadth > 2 * r.genus_F:
            bad.append({"braid": word, "breadth": r.breadth, "genus_F": r.genus_F})
    return TheoremVerdict(
        "random", "oracle-agreement", FAIL if bad else PASS,
        {"samples": trials, **({"counterexamples": bad[:5]} if bad else {})},
    )


def run_selftest(seed: int, trials: int) -> list[TheoremVerdict]:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    out = check_breadth_inv(trials, seed)
    rng = random.Random(seed + 1)
    out.append(laurent_suite(rng, min(trials, 200)))
    out.append(oracle_suite(rng, min(trials, 100)))
    return out
