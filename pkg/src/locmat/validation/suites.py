"""
Seeded property suites over the whole library.

Each suite draws from its own generator, seeded by (seed, suite position), so
a suite's results do not depend on which other suites run or in what order
the worker threads finish. Reports list suites in canonical order and carry
no timings, so two runs with the same seed print identical text.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from locmat.constants import DEFAULT_TRIALS, SUITE_NAMES, SUITE_WORKERS
from locmat.io.steinitz_parser import format_steinitz, parse_steinitz
from locmat.models.fields import (
    FieldDescriptor,
    RootTower,
    extension_field,
    prime_field,
    rationals,
    tau,
)
from locmat.models.permatrix import (
    block_view,
    det_at,
    embed,
    identity,
    inverse,
    is_block_transvection,
    make,
    mul,
    transpose,
    transvection,
    unblock,
)
from locmat.models.steinitz import (
    divides,
    from_integer,
    gcd,
    lcm,
    multiply,
    quotient,
    steinitz_of_chain,
)
from locmat.processors import autos, groups, homothety
from locmat.utils.sampling import (
    random_descriptor,
    random_divisor_chain,
    random_element,
    random_invertible,
    random_matrix,
    random_period,
    random_sl,
    random_steinitz,
)
from locmat.utils.timer import measure_time
from locmat.validation import oracles

logger = logging.getLogger(__name__)

INTEGER_ORACLE_BOUND = 10**6
LEMMA1_SHAPES = ((2, 4), (4, 8), (4, 12))
DECOMPOSITION_LEVELS = (2, 3, 4, 6)
HOMOTHETY_SETTINGS = ((5, 3, (1, 3)), (7, 5, (1, 5)))
COHERENCE_POINTS = 100


@dataclass(slots=True)
class SuiteResult:
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, passed: bool, description: str) -> None:
        self.checks += 1
        if not passed:
            self.failures.append(description)

    def run(self, description: str, predicate: Callable[[], bool]) -> None:
        """Record ``predicate()``; an exception counts as a failure."""
        try:
            passed = bool(predicate())
        except Exception as e:  # noqa: BLE001
            self.check(False, f"{description}: {type(e).__name__}: {e}")
            return
        self.check(passed, description)


@dataclass(slots=True)
class VerificationReport:
    seed: int
    trials: int
    results: List[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self) -> List[str]:
        out = [f"seed={self.seed} trials={self.trials}"]
        for r in self.results:
            if r.ok:
                out.append(f"{r.name}: ok ({r.checks} checks)")
            else:
                out.append(f"{r.name}: FAILED ({len(r.failures)} of {r.checks} checks)")
                out.extend(f"  failure: {f}" for f in r.failures)
        failed = sum(len(r.failures) for r in self.results)
        out.append(f"summary: {len(self.results)} suites, {failed} failures")
        return out

    def to_dict(self) -> Dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "ok": self.ok,
            "suites": [
                {"name": r.name, "checks": r.checks, "failures": list(r.failures)}
                for r in self.results
            ],
        }


def _choice(rng: np.random.Generator, options: Sequence):
    return options[int(rng.integers(0, len(options)))]


# ----------------------------------------------------------------------
# Suites
# ----------------------------------------------------------------------


def steinitz_suite(rng: np.random.Generator, trials: int) -> SuiteResult:
    result = SuiteResult("steinitz")
    one = from_integer(1)
    for t in range(trials):
        a, b, c = random_steinitz(rng), random_steinitz(rng), random_steinitz(rng)
        tag = f"trial {t} ({a}; {b}; {c})"
        ab = multiply(a, b)
        result.run(f"{tag}: associativity", lambda: multiply(ab, c) == multiply(a, multiply(b, c)))
        result.run(f"{tag}: commutativity", lambda: ab == multiply(b, a))
        result.run(f"{tag}: identity", lambda: multiply(a, one) == a)
        result.run(f"{tag}: divides product", lambda: divides(a, ab) and divides(b, ab))
        result.run(f"{tag}: quotient round trip", lambda: multiply(a, quotient(ab, a)) == ab)
        result.run(f"{tag}: absorption", lambda: lcm([a, gcd([a, b])]) == a and gcd([a, lcm([a, b])]) == a)
        result.run(f"{tag}: partial order", lambda: oracles.is_partial_order_sample(a, b, c))
        result.run(
            f"{tag}: monotone product",
            lambda: not divides(a, b) or divides(multiply(a, c), multiply(b, c)),
        )
        result.run(f"{tag}: parse(format)", lambda: parse_steinitz(format_steinitz(a)) == a)

        x = int(rng.integers(1, INTEGER_ORACLE_BOUND + 1))
        y = int(rng.integers(1, INTEGER_ORACLE_BOUND + 1))
        fx, fy = from_integer(x), from_integer(y)
        result.run(f"integers {x}, {y}: product", lambda: oracles.integer_agrees(multiply(fx, fy), x * y))
        result.run(f"integers {x}, {y}: lcm", lambda: lcm([fx, fy]) == oracles.integer_lcm([x, y]))
        result.run(f"integers {x}, {y}: gcd", lambda: gcd([fx, fy]) == oracles.integer_gcd([x, y]))
    return result


def _suite_fields() -> List[FieldDescriptor]:
    return [prime_field(5), prime_field(7), extension_field(5, 2), rationals()]


def permatrix_suite(rng: np.random.Generator, trials: int) -> SuiteResult:
    result = SuiteResult("permatrix")
    fields = _suite_fields()
    for t in range(trials):
        F = _choice(rng, fields)
        na, nb, nc = (random_period(rng) for _ in range(3))
        A, B, C = random_matrix(F, na, rng), random_matrix(F, nb, rng), random_matrix(F, nc, rng)
        tag = f"trial {t} over {F} periods ({na}, {nb}, {nc})"
        AB = mul(A, B)
        result.run(f"{tag}: associativity", lambda: mul(AB, C) == mul(A, mul(B, C)))
        result.run(f"{tag}: distributivity", lambda: mul(A, B + C) == AB + mul(A, C))
        result.run(f"{tag}: additive commutativity", lambda: A + B == B + A)
        result.run(f"{tag}: canonical stability", lambda: make(F, 2 * A.period, embed(A, 2 * A.period)) == A)

        m = math.lcm(A.period, B.period)
        result.run(
            f"{tag}: embed is multiplicative",
            lambda: bool((embed(AB, m) == embed(A, m) @ embed(B, m)).all()),
        )
        k = int(_choice(rng, (2, 3, 4)))
        result.run(f"{tag}: det_at power rule k={k}", lambda: det_at(A, A.period * k) == det_at(A, A.period) ** k)
        if A.period <= 4:
            result.run(f"{tag}: det_at vs Leibniz", lambda: det_at(A, A.period) == oracles.leibniz_det(A, A.period))
        result.run(f"{tag}: transpose reverses products", lambda: transpose(AB) == mul(transpose(B), transpose(A)))

        i = int(rng.integers(1, 2 * m + 1))
        j = int(rng.integers(1, 2 * m + 1))
        result.run(f"{tag}: entry ({i}, {j}) of product", lambda: AB.entry(i, j) == oracles.product_entry(A, B, i, j))

        n = int(_choice(rng, [d for d in range(1, m + 1) if m % d == 0]))
        result.run(f"{tag}: unblock(block_view) q={m} n={n}", lambda: unblock(block_view(A, m, n)) == A)
        result.run(
            f"{tag}: block_view multiplicative q={m} n={n}",
            lambda: block_view(AB, m, n) == block_view(A, m, n) @ block_view(B, m, n),
        )
        if groups.is_invertible(A):
            result.run(f"{tag}: inverse", lambda: mul(A, inverse(A)) == identity(F))
    return result


def groups_suite(rng: np.random.Generator, trials: int) -> SuiteResult:
    result = SuiteResult("groups")
    gf5, gf7, q_field = prime_field(5), prime_field(7), rationals()

    two = make(gf5, 1, [[2]])
    result.run("GF(5) [2] at 2^inf", lambda: groups.sl_membership(two, parse_steinitz("2^inf")) == groups.SLMembership(True, 4))
    result.run("GF(5) [2] at 2", lambda: not groups.sl_membership(two, parse_steinitz("2")).member)

    for t in range(trials):
        F = _choice(rng, (gf5, gf7))
        m = int(_choice(rng, DECOMPOSITION_LEVELS))
        tag = f"trial {t} over {F} level {m}"

        A = random_sl(F, m, rng)
        word = groups.decompose_transvections(A, m)
        result.run(f"{tag}: SL decomposition", lambda: groups.evaluate(word) == A)
        result.run(f"{tag}: SL word length", lambda: len(word) <= m * m + 4 * m)

        B = random_invertible(F, m, rng)
        gl_word = groups.decompose_gl(B, m)
        d = det_at(B, m)
        expected = [] if d == 1 else [d]
        result.run(f"{tag}: GL decomposition", lambda: groups.evaluate(gl_word) == B)
        result.run(f"{tag}: GL diagonal token", lambda: [u.alpha for u in gl_word.diagonal_tokens()] == expected)

        MF = _choice(rng, (gf5, gf7, q_field))
        M = random_invertible(MF, random_period(rng, (1, 2, 3)), rng)
        s = random_steinitz(rng)
        result.run(
            f"{tag}: sl_membership vs scan over {MF} at {s}",
            lambda: groups.sl_membership(M, s) == groups.sl_membership_oracle(M, s),
        )
        s2 = multiply(s, random_steinitz(rng))
        result.run(
            f"{tag}: membership grows along divisibility",
            lambda: not groups.sl_membership(M, s).member or groups.sl_membership(M, s2).member,
        )
        result.run(
            f"{tag}: GL_s closed under product and inverse",
            lambda: not (groups.gl_membership(A, s) and groups.gl_membership(B, s))
            or (groups.gl_membership(mul(A, B), s) and groups.gl_membership(inverse(B), s)),
        )

        n, q = _choice(rng, LEMMA1_SHAPES)
        i = int(rng.integers(1, q + 1))
        j = int(_choice(rng, [x for x in range(1, q + 1) if x != i]))
        alpha = random_element(gf5, rng)
        rewrite = groups.lemma1_rewrite(i, j, alpha, q, n)
        result.run(
            f"{tag}: block rewrite of t_{i},{j}({alpha}) n={n} q={q}",
            lambda: groups.evaluate(rewrite) == transvection(gf5, q, i, j, alpha),
        )
        result.run(
            f"{tag}: block rewrite shape n={n} q={q}",
            lambda: all(is_block_transvection(tok.matrix(), q, n) for tok in rewrite.factors),
        )

        size = int(rng.integers(3, 7))
        i, r, j = (int(x) + 1 for x in rng.permutation(size)[:3])
        a = random_element(F, rng)
        result.run(f"{tag}: [t_{i},{r}(1), t_{r},{j}(a)] = t_{i},{j}(a) at {size}", lambda: groups.steinberg_check(F, size, i, r, j, a))

        chain = random_divisor_chain(rng)
        top = steinitz_of_chain(chain)
        C = random_invertible(F, random_period(rng, (1, 2, 3)), rng)
        result.run(
            f"{tag}: union over chain {chain}",
            lambda: groups.sl_membership(C, top).member == oracles.divisor_chain_membership(C, chain),
        )
    return result


def homothety_suite(rng: np.random.Generator, trials: int) -> SuiteResult:
    result = SuiteResult("homothety")
    handles = []
    for p, r, periods in HOMOTHETY_SETTINGS:
        tower = RootTower(prime_field(p), parse_steinitz(f"{r}^inf"))
        handles.append((homothety.central_homothety_from_detr(homothety.RelativeDeterminant(tower)), periods))

    gf5_tower = handles[0][0].rd.tower
    result.run("tau_3(2) = 3 over GF(5)", lambda: tau(gf5_tower, 3, 2) == 3)

    for t in range(trials):
        handle, periods = _choice(rng, handles)
        F = handle.rd.tower.field
        tag = f"trial {t} over {F}"
        g = random_invertible(F, random_period(rng, periods), rng)
        h = random_invertible(F, random_period(rng, periods), rng)
        report = homothety.verify_homothety(handle, [(g, h)])
        result.checks += report.checks
        result.failures.extend(f"{tag}: {c}" for c in report.counterexamples)

        A = random_matrix(F, random_period(rng, periods), rng)
        result.run(
            f"{tag}: invertible iff det_r != 0 for {A}",
            lambda: groups.is_invertible(A) == (not handle(A).is_zero()),
        )
        membership = groups.sl_membership(g, handle.rd.index)
        result.run(
            f"{tag}: SL members have det_r = 1",
            lambda: not membership.member or homothety.det_r_at(handle.rd, g, membership.level) == 1,
        )
    return result


def autos_suite(rng: np.random.Generator, trials: int) -> SuiteResult:
    result = SuiteResult("autos")
    fields = [extension_field(5, 2), extension_field(7, 2), extension_field(5, 3), prime_field(7)]
    two_power = parse_steinitz("2^inf")
    for t in range(trials):
        F = _choice(rng, fields)
        tag = f"trial {t} over {F}"
        g = random_invertible(F, random_period(rng, (1, 2, 3)), rng)
        h = random_invertible(F, random_period(rng, (1, 2, 3)), rng)
        result.run(f"{tag}: psi involution", lambda: autos.apply_psi(autos.apply_psi(g)) == g)
        result.run(f"{tag}: psi homomorphism", lambda: autos.apply_psi(mul(g, h)) == mul(autos.apply_psi(g), autos.apply_psi(h)))

        d1, d2, d3 = (random_descriptor(F, rng, 2) for _ in range(3))
        d12 = autos.compose(d1, d2)
        points = [random_invertible(F, random_period(rng, (1, 2)), rng) for _ in range(COHERENCE_POINTS)]
        result.run(
            f"{tag}: compose/apply coherence on {len(points)} points",
            lambda: all(autos.apply(d12, x) == autos.apply(d1, autos.apply(d2, x)) for x in points),
        )

        S = random_sl(F, random_period(rng, (1, 2, 3)), rng)
        result.run(
            f"{tag}: apply keeps SL membership at 2^inf",
            lambda: groups.sl_membership(autos.apply(d1, S), two_power) == groups.sl_membership(S, two_power)
            and groups.sl_membership(autos.apply(d1, g), two_power) == groups.sl_membership(g, two_power),
        )
        gens = autos.probe_elements(F, 2)
        images = [autos.apply(d1, x) for x in gens]
        result.run(
            f"{tag}: apply multiplicative on generators",
            lambda: all(autos.apply(d1, mul(x, y)) == mul(images[a], images[b]) for a, x in enumerate(gens) for b, y in enumerate(gens)),
        )
        result.run(
            f"{tag}: apply injective on generators",
            lambda: all(images[a] != images[b] for a in range(len(images)) for b in range(a + 1, len(images))),
        )
        result.run(
            f"{tag}: compose associativity",
            lambda: autos.equivalent(autos.compose(d12, d3), autos.compose(d1, autos.compose(d2, d3))),
        )
        psi = autos.AutomorphismDescriptor(F, psi=True)
        result.run(f"{tag}: psi has order 2", lambda: autos.compose(psi, psi).is_trivial())

        anti = random_descriptor(F, rng, 2, psi=False)
        a = random_matrix(F, random_period(rng, (1, 2)), rng)
        b = random_matrix(F, random_period(rng, (1, 2)), rng)
        iso = autos.anti_to_iso(anti)
        result.run(f"{tag}: anti-map reverses products", lambda: autos.apply_anti(anti, mul(a, b)) == mul(autos.apply_anti(anti, b), autos.apply_anti(anti, a)))
        result.run(f"{tag}: anti_to_iso multiplicative", lambda: autos.apply(iso, mul(a, b)) == mul(autos.apply(iso, a), autos.apply(iso, b)))
        result.run(
            f"{tag}: group automorphism from anti-map",
            lambda: autos.apply(autos.anti_to_group_automorphism(anti), g) == autos.apply_anti(anti, inverse(g)),
        )
        f = anti.frob
        result.run(f"{tag}: field lift commutes with transpose", lambda: autos.lift_field_auto(f, transpose(a)) == transpose(autos.lift_field_auto(f, a)))
        result.run(f"{tag}: center automorphism", lambda: autos.center_automorphism(anti) == f)
    return result


SUITES: Dict[str, Callable[[np.random.Generator, int], SuiteResult]] = {
    "steinitz": steinitz_suite,
    "permatrix": permatrix_suite,
    "groups": groups_suite,
    "homothety": homothety_suite,
    "autos": autos_suite,
}


def suite_rng(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng([int(seed), SUITE_NAMES.index(name)])


def run_suite(name: str, seed: int, trials: int = DEFAULT_TRIALS) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}")
    with measure_time(f"suite {name}"):
        result = SUITES[name](suite_rng(seed, name), trials)
    logger.info(f"Suite {name}: {result.checks} checks, {len(result.failures)} failures")
    return result


def run_suites(
    names: Sequence[str],
    seed: int,
    trials: int = DEFAULT_TRIALS,
    workers: int = SUITE_WORKERS,
    progress_cb: Optional[Callable[[int, int], None]] = None,
) -> VerificationReport:
    """
    Run suites side by side and return them in canonical order.

    ``names`` may contain "all". Duplicates are ignored.
    """
    selected = list(SUITE_NAMES) if "all" in names else [n for n in SUITE_NAMES if n in set(names)]
    unknown = [n for n in names if n != "all" and n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}; expected one of {', '.join(SUITE_NAMES)} or all")

    results: Dict[str, SuiteResult] = {}
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        tasks = {executor.submit(run_suite, name, seed, trials): name for name in selected}
        for done, task in enumerate(as_completed(tasks), start=1):
            results[tasks[task]] = task.result()
            if progress_cb:
                progress_cb(done, len(selected))

    return VerificationReport(seed, trials, [results[name] for name in selected])
