"""Grid self-checks of the generator and signature invariants.

Every check recomputes a property with an independent, deliberately
naive method and compares.  They exist to be run over a whole parameter
grid at once (see the validate-grid command); a failing check means a
broken invariant, not bad user input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    argmax_set,
    enumerate_strategies,
    generate_correspondence,
    generate_form,
    row_signature,
    signature_of_strategy,
    strategy_count,
)

__all__ = ["CheckResult", "run_grid_validation", "CHECK_NAMES"]

CHECK_NAMES = (
    "strategy-count",
    "strategy-weights",
    "strategy-uniqueness",
    "strategy-order",
    "argmax-exact",
    "correspondence-cells",
    "signature-vs-row",
    "signature-distinct",
    "signature-sums",
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


def _naive_argmax(z) -> frozenset[int]:
    return frozenset(
        i for i in range(len(z)) if all(z[i] >= z[j] for j in range(len(z)))
    )


def run_grid_validation(pmax: int = 4, wmax: int = 4) -> list[CheckResult]:
    """Run every invariant check over p in [2, pmax], weights in [1, wmax].

    Returns one result per check with a case count or the first
    counterexample.  Grid cost grows steeply with the bounds; the
    defaults finish in well under a second.
    """
    if pmax < 2 or wmax < 1:
        raise ValueError("need pmax >= 2 and wmax >= 1")
    results: list[CheckResult] = []
    ps = range(2, pmax + 1)
    ws = range(1, wmax + 1)

    def record(name: str, failures: list[str], cases: int) -> None:
        if failures:
            results.append(CheckResult(name, False, failures[0]))
        else:
            results.append(CheckResult(name, True, f"{cases} cases"))

    fails: list[str] = []
    cases = 0
    for p in ps:
        for w in ws:
            got = len(enumerate_strategies(p, w))
            want = math.comb(w + p - 1, p - 1)
            cases += 1
            if got != want or strategy_count(p, w) != want:
                fails.append(f"p={p}, w={w}: {got} strategies, expected {want}")
    record("strategy-count", fails, cases)

    fails, cases = [], 0
    for p in ps:
        for w in ws:
            for x in enumerate_strategies(p, w):
                cases += 1
                if sum(x) != w or any(c < 0 for c in x):
                    fails.append(f"bad strategy {x} for p={p}, w={w}")
    record("strategy-weights", fails, cases)

    fails, cases = [], 0
    for p in ps:
        for w in ws:
            xs = enumerate_strategies(p, w)
            cases += 1
            if len(set(xs)) != len(xs):
                fails.append(f"duplicates for p={p}, w={w}")
    record("strategy-uniqueness", fails, cases)

    fails, cases = [], 0
    for p in ps:
        for w in ws:
            xs = enumerate_strategies(p, w)
            cases += 1
            if xs != sorted(xs, reverse=True):
                fails.append(f"order broken for p={p}, w={w}")
            if xs[0] != (w,) + (0,) * (p - 1):
                fails.append(f"first strategy wrong for p={p}, w={w}")
    record("strategy-order", fails, cases)

    fails, cases = [], 0
    for p in ps:
        for w in ws:
            for x in enumerate_strategies(p, w):
                cases += 1
                got = argmax_set(x)
                if not got or got != _naive_argmax(x):
                    fails.append(f"argmax mismatch on {x}")
    record("argmax-exact", fails, cases)

    fails, cases = [], 0
    for p in ps:
        for a in ws:
            for b in ws:
                corr = generate_correspondence(p, a, b)
                xs = enumerate_strategies(p, a)
                ys = enumerate_strategies(p, b)
                for i, x in enumerate(xs):
                    for j, y in enumerate(ys):
                        cases += 1
                        z = tuple(u + v for u, v in zip(x, y))
                        if corr.cells[i][j] != _naive_argmax(z):
                            fails.append(
                                f"cell ({i},{j}) wrong for p={p}, alpha={a}, beta={b}"
                            )
    record("correspondence-cells", fails, cases)

    fails, cases = [], 0
    for p in ps:
        for a in ws:
            for b in ws:
                corr = generate_correspondence(p, a, b)
                for i, x in enumerate(enumerate_strategies(p, a)):
                    cases += 1
                    if signature_of_strategy(x, p, b) != row_signature(corr, i):
                        fails.append(
                            f"signature mismatch at row {i}, p={p}, alpha={a}, beta={b}"
                        )
    record("signature-vs-row", fails, cases)

    # Distinct strategies have distinct signatures whenever the column
    # weight is at least the row weight minus one.
    fails, cases = [], 0
    for p in ps:
        for a in ws:
            for b in range(max(1, a - 1), wmax + 1):
                sigs = [
                    signature_of_strategy(x, p, b)
                    for x in enumerate_strategies(p, a)
                ]
                cases += 1
                if len(set(sigs)) != len(sigs):
                    fails.append(
                        f"colliding signatures for p={p}, alpha={a}, beta={b}"
                    )
    record("signature-distinct", fails, cases)

    fails, cases = [], 0
    for p in ps:
        for a in ws:
            for b in ws:
                corr = generate_correspondence(p, a, b)
                form = generate_form(p, a, b)
                for i in range(corr.rows):
                    cases += 1
                    ties = sum(1 for cell in corr.cells[i] if len(cell) > 1)
                    csum = sum(row_signature(corr, i))
                    if sum(row_signature(form, i)) != corr.cols:
                        fails.append(f"form row sum wrong at {i}, p={p}, {a},{b}")
                    if csum < corr.cols or (csum == corr.cols) != (ties == 0):
                        fails.append(f"corr row sum wrong at {i}, p={p}, {a},{b}")
    record("signature-sums", fails, cases)

    return results
