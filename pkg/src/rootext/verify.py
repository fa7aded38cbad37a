"""Seeded randomized verification suites.

Every case draws its inputs from its own RNG (seeded by suite name, run
seed and case index), serializes them, and runs a list of named checks on
the *deserialized* inputs, so a failing case can be replayed from its
serialized form alone.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .bezout import (SWAPPED, BezoutConfig, BezoutKernel, bezout_matrix, bezout_poly,
                     choice_addend_witness, determinant, extend_step,
                     first_commutativity_mismatch, h_degree_bound, product_bound,
                     product_functional)
from .diffderiv import CovectorXY, decompose_difference, nabla, nabla_product, nabla_swapped
from .functional import Functional, functional_lincomb
from .ideal import DEFAULT_COLUMN_CAP, annihilates, membership, root_functional_basis
from .ring import (Poly, PolyXY, SystemProfile, count_monomials, embed_x, embed_y,
                   monomials_upto, poly_parse)

SUITE_NAMES = ("lemma1", "lemma2", "thm1", "thm2", "thm3", "thm4")


@dataclass
class Params:
    nmax: int = 3
    degmax: int = 3
    cap: int = DEFAULT_COLUMN_CAP
    corrupt: bool = False  # test hook: perturb the canonical difference derivative


@dataclass
class RunReport:
    command: str
    suite: str
    seed: int
    cases: int
    passed: int = 0
    failed: int = 0
    checks: Dict[str, int] = field(default_factory=dict)
    counterexample: Optional[dict] = None
    duration: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self, with_duration: bool = True) -> str:
        data = asdict(self)
        if not with_duration:
            data.pop("duration")
        return json.dumps(data, indent=2, sort_keys=True)


# -- random inputs ---------------------------------------------------------------

def random_rational(rng: random.Random, nonzero: bool = True) -> Fraction:
    while True:
        p = rng.randint(-5, 5)
        if p or not nonzero:
            return Fraction(p, rng.randint(1, 3))


def random_poly(rng: random.Random, n: int, deg: int, max_terms: int = 4,
                exact: bool = True) -> Poly:
    """Random polynomial of degree ``deg`` (at most ``deg`` if not exact)."""
    if deg < 0:
        return Poly.zero(n)
    monos = monomials_upto(n, deg)
    top = [m for m in monos if sum(m) == deg]
    while True:
        terms = {}
        if exact:
            terms[rng.choice(top)] = random_rational(rng)
        for _ in range(rng.randint(0, max_terms - 1)):
            terms[rng.choice(monos)] = random_rational(rng)
        p = Poly(n, terms)
        if not exact or p.degree() == deg:
            return p


def random_system(rng: random.Random, n: int, degmax: int) -> SystemProfile:
    return SystemProfile([random_poly(rng, n, rng.randint(1, degmax), max_terms=3)
                          for _ in range(n)])


def random_root_functional(rng: random.Random, f: SystemProfile, delta: int,
                           cap: int = DEFAULT_COLUMN_CAP) -> Functional:
    """Random rational combination of the bounded root functional basis at
    degree delta_f + delta."""
    basis = root_functional_basis(f, f.delta_f + delta, cap).basis
    picks = [(random_rational(rng, nonzero=False), L) for L in basis]
    return functional_lincomb(picks)


def random_extension(rng: random.Random, L: Functional, bound: int) -> Functional:
    extra = {e: random_rational(rng, nonzero=False)
             for e in monomials_upto(L.nvars, bound) if sum(e) > L.bound}
    return L.extended(bound, extra)


def corrupted_nabla(F: Poly) -> CovectorXY:
    D = nabla(F)
    comps = list(D.comps)
    comps[0] = comps[0] + PolyXY.constant(F.nvars, 1)
    return CovectorXY(D.nvars, tuple(comps))


# -- serialization helpers ---------------------------------------------------------

def _ps(p: Poly) -> str:
    return str(p)


def _pp(text: str, n: int) -> Poly:
    return poly_parse(text, n)


def _sys_s(f: SystemProfile) -> List[str]:
    return f.to_lines()


def _sys_p(lines: List[str]) -> SystemProfile:
    return SystemProfile.parse(lines)


def _draw_system(rng, params: Params, extra_degree: int) -> SystemProfile:
    # redraw until the largest truncated space stays under the column cap
    while True:
        n = rng.randint(1, params.nmax)
        f = random_system(rng, n, params.degmax)
        if count_monomials(n, f.delta_f + extra_degree) <= params.cap:
            return f


# -- lemma1: difference derivatives -----------------------------------------------

def gen_lemma1(rng, params: Params) -> dict:
    n = rng.randint(1, params.nmax)
    F = random_poly(rng, n, rng.randint(0, params.degmax), exact=False)
    G = random_poly(rng, n, rng.randint(0, params.degmax), exact=False)
    return {"n": n, "F": _ps(F), "G": _ps(G),
            "a": str(random_rational(rng, False)), "b": str(random_rational(rng, False))}


def check_lemma1(inp: dict, params: Params):
    n = inp["n"]
    F, G = _pp(inp["F"], n), _pp(inp["G"], n)
    a, b = Fraction(inp["a"]), Fraction(inp["b"])
    deriv = corrupted_nabla if params.corrupt else nabla
    DF = deriv(F)
    return [
        ("telescoping", lambda: DF.is_derivative_of(F)),
        ("monotonous", lambda: DF.degree() <= F.degree() - 1),
        ("linear", lambda: deriv(F * a + G * b) == deriv(F).scale(a) + deriv(G).scale(b)),
    ]


# -- lemma2: swapped derivatives and their discrepancy ----------------------------

def gen_lemma2(rng, params: Params) -> dict:
    n = rng.randint(2, max(2, params.nmax))
    F = random_poly(rng, n, rng.randint(1, params.degmax + 1), max_terms=5)
    G = random_poly(rng, n, rng.randint(0, params.degmax), exact=False)
    return {"n": n, "F": _ps(F), "G": _ps(G)}


def check_lemma2(inp: dict, params: Params):
    n = inp["n"]
    F, G = _pp(inp["F"], n), _pp(inp["G"], n)
    deriv = corrupted_nabla if params.corrupt else nabla
    D1 = deriv(F)
    D2 = nabla_swapped(D1)
    d = int(max(F.degree(), 1))

    def decomposition():
        dec = decompose_difference(D1, D2, d)
        return dec.reconstruct() == D1 - D2 and dec.max_degree() <= d - 2

    return [
        ("swapped_is_derivative", lambda: D2.is_derivative_of(F)),
        ("product_rule", lambda: nabla_product(F, G, deriv(F), deriv(G)).is_derivative_of(F * G)),
        ("decomposition", decomposition),
    ]


# -- thm1: the Bezoutian determinant ----------------------------------------------

def gen_thm1(rng, params: Params) -> dict:
    f = _draw_system(rng, params, params.degmax)
    F = random_poly(rng, f.nvars, rng.randint(0, params.degmax), exact=False)
    return {"system": _sys_s(f), "F": _ps(F)}


def check_thm1(inp: dict, params: Params):
    f = _sys_p(inp["system"])
    n = f.nvars
    F = _pp(inp["F"], n)
    d = max(int(F.degree()), 0) if not F.is_zero() else 0
    if params.corrupt:
        cfg = BezoutConfig(derivative_choice_F=corrupted_nabla(F))
    else:
        cfg = BezoutConfig()
    state = {}

    def forms():
        rx = determinant(bezout_matrix(f, F, cfg, d, "x"))
        ry = determinant(bezout_matrix(f, F, cfg, d, "y"))
        state["R"] = rx
        return rx == ry

    def bareiss():
        return determinant(bezout_matrix(f, F, cfg, d, "x"), "bareiss") == state["R"]

    def degree():
        return state["R"].degree() <= f.delta_f + d

    def unique_F():
        R2 = bezout_poly(f, F, BezoutConfig(derivative_choice_F=SWAPPED), d)
        w = choice_addend_witness(f, F, state["R"], R2, d, vary="F")
        return w is not None and w.reconstruct() == state["R"] - R2

    def unique_f():
        R2 = bezout_poly(f, F, BezoutConfig(derivative_choice_f=SWAPPED), d)
        w = choice_addend_witness(f, F, state["R"], R2, d, vary="f")
        return w is not None and w.reconstruct() == state["R"] - R2

    return [("forms_agree", forms), ("bareiss_agrees", bareiss), ("degree", degree),
            ("unique_nabla_F", unique_F), ("unique_nabla_f", unique_f)]


# -- thm2: the extension step -----------------------------------------------------

def gen_thm2(rng, params: Params) -> dict:
    delta = rng.randint(0, 1)
    d = rng.randint(0, params.degmax + 1)
    f = _draw_system(rng, params, d + 1)
    n = f.nvars
    L = random_root_functional(rng, f, delta, params.cap)
    top = max(f.delta_f + d, L.bound)
    F = random_poly(rng, n, d, exact=False)
    mults = [random_poly(rng, n, d - g, exact=False) for g in f.degrees]
    member = Poly.zero(n)
    for p, m in zip(f.polys, mults):
        member = member + p * m
    return {
        "system": _sys_s(f), "delta": delta, "d": d, "F": _ps(F), "member": _ps(member),
        "L": random_extension(rng, L, top).to_json(),
        "L_alt": random_extension(rng, L, top).to_json(),
    }


def check_thm2(inp: dict, params: Params):
    f = _sys_p(inp["system"])
    n = f.nvars
    delta, d = inp["delta"], inp["d"]
    F, member = _pp(inp["F"], n), _pp(inp["member"], n)
    L, L_alt = Functional.from_json(inp["L"]), Functional.from_json(inp["L_alt"])
    cfg = BezoutConfig(derivative_choice_F=corrupted_nabla(F)) if params.corrupt else None
    low = d - delta - 1
    top = h_degree_bound(f, d, delta)
    state = {}

    def H():
        if "H" not in state:
            state["H"] = extend_step(L, delta, f, F, cfg, d)
        return state["H"]

    def in_ideal(p: Poly, degree) -> bool:
        if p.degree() > degree:
            return False
        w = membership(p, f, degree)
        return w is not None and w.reconstruct() == p

    def st1():
        return H().degree() <= top

    def st2_F():
        H2 = extend_step(L, delta, f, F, BezoutConfig(derivative_choice_F=SWAPPED), d)
        return in_ideal(H() - H2, low)

    def st2_f():
        H2 = extend_step(L, delta, f, F, BezoutConfig(derivative_choice_f=SWAPPED), d)
        return in_ideal(H() - H2, top)

    def st3():
        return in_ideal(extend_step(L, delta, f, member, cfg, d), low)

    def st4():
        return in_ideal(H() - extend_step(L_alt, delta, f, F, cfg, d), low)

    return [("h_degree", st1), ("h_choice_nabla_F", st2_F),
            ("h_choice_nabla_f", st2_f), ("h_in_ideal", st3),
            ("h_extension_free", st4)]


# -- thm3, thm4: product functionals ----------------------------------------------

def gen_pair(rng, params: Params) -> dict:
    d1, d2 = rng.randint(0, 1), rng.randint(0, 1)
    f = _draw_system(rng, params, d1 + d2 + 1)
    L1 = random_root_functional(rng, f, d1, params.cap)
    L2 = random_root_functional(rng, f, d2, params.cap)
    return {"system": _sys_s(f), "delta1": d1, "delta2": d2,
            "L1": L1.to_json(), "L2": L2.to_json(),
            "L1_ext": random_extension(rng, L1, L1.bound + 2).to_json(),
            "L2_ext": random_extension(rng, L2, L2.bound + 2).to_json()}


def _pair_inputs(inp):
    f = _sys_p(inp["system"])
    return (f, inp["delta1"], inp["delta2"], Functional.from_json(inp["L1"]),
            Functional.from_json(inp["L2"]))


def _cfg(params: Params, f: SystemProfile) -> Optional[BezoutConfig]:
    if not params.corrupt:
        return None
    return BezoutConfig(derivative_choice_f=tuple(corrupted_nabla(p) for p in f.polys))


def check_thm3(inp: dict, params: Params):
    f, d1, d2, L1, L2 = _pair_inputs(inp)
    top = product_bound(f, d1, d2)
    state = {}

    def P():
        if "P" not in state:
            state["P"] = product_functional(L1, d1, L2, d2, f, _cfg(params, f))
        return state["P"]

    def st2():
        return annihilates(P(), f, top)

    def st1():
        cfg = BezoutConfig(derivative_choice_f=SWAPPED, derivative_choice_F=SWAPPED)
        return product_functional(L1, d1, L2, d2, f, cfg) == P()

    def st3():
        L1e = Functional.from_json(inp["L1_ext"])
        L2e = Functional.from_json(inp["L2_ext"])
        return product_functional(L1e, d1, L2e, d2, f) == P()

    def cascade():
        low = f.delta_f + min(d1, d2)
        return annihilates(P().restrict(low), f, low)

    return [("annihilates_grown", st2), ("choice_free", st1),
            ("extension_free", st3), ("restriction_cascade", cascade)]


def check_thm4(inp: dict, params: Params):
    f, d1, d2, L1, L2 = _pair_inputs(inp)
    return [("commutes",
             lambda: first_commutativity_mismatch(L1, d1, L2, d2, f, _cfg(params, f)) is None)]


SUITES: Dict[str, Tuple[Callable, Callable]] = {
    "lemma1": (gen_lemma1, check_lemma1),
    "lemma2": (gen_lemma2, check_lemma2),
    "thm1": (gen_thm1, check_thm1),
    "thm2": (gen_thm2, check_thm2),
    "thm3": (gen_pair, check_thm3),
    "thm4": (gen_pair, check_thm4),
}


# -- running -------------------------------------------------------------------------

def case_rng(suite: str, seed: int, index: int) -> random.Random:
    return random.Random(f"{suite}:{seed}:{index}")


def run_checks(suite: str, inputs: dict, params: Params,
               only: Optional[Sequence[str]] = None) -> List[Tuple[str, bool, str]]:
    """Run the named checks of one case; exceptions count as failures."""
    _, check = SUITES[suite]
    results = []
    for name, fn in check(inputs, params):
        if only is not None and name not in only:
            continue
        try:
            ok, detail = bool(fn()), ""
        except Exception as exc:  # a raising check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, ok, detail))
        if not ok:
            break
    return results


def _run_case(args):
    suite, seed, index, params, only = args
    gen, _ = SUITES[suite]
    inputs = gen(case_rng(suite, seed, index), params)
    return inputs, run_checks(suite, inputs, params, only)


def run_suite(suite: str, seed: int, cases: int, params: Optional[Params] = None,
              only: Optional[Sequence[str]] = None, jobs: int = 1,
              command: str = "") -> RunReport:
    params = params or Params()
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    report = RunReport(command or f"verify --suite {suite}", suite, seed, cases)
    start = time.perf_counter()
    work = [(suite, seed, i, params, only) for i in range(cases)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            outcomes = list(pool.map(_run_case, work))
    else:
        outcomes = [_run_case(w) for w in work]
    for i, (inputs, results) in enumerate(outcomes):
        for name, ok, _ in results:
            if ok:
                report.checks[name] = report.checks.get(name, 0) + 1
        bad = [(name, detail) for name, ok, detail in results if not ok]
        if bad:
            report.failed += 1
            if report.counterexample is None:
                report.counterexample = {
                    "suite": suite, "seed": seed, "case": i,
                    "check": bad[0][0], "detail": bad[0][1],
                    "params": asdict(params), "inputs": inputs,
                }
        else:
            report.passed += 1
    report.duration = time.perf_counter() - start
    return report


def run_all(seed: int, cases: int, params: Optional[Params] = None, jobs: int = 1,
            command: str = "") -> RunReport:
    params = params or Params()
    total = RunReport(command or "verify --suite all", "all", seed, cases)
    start = time.perf_counter()
    for name in SUITE_NAMES:
        r = run_suite(name, seed, cases, params, jobs=jobs)
        total.passed += r.passed
        total.failed += r.failed
        for k, v in r.checks.items():
            total.checks[f"{name}.{k}"] = v
        if total.counterexample is None and r.counterexample is not None:
            total.counterexample = r.counterexample
    total.duration = time.perf_counter() - start
    return total


def replay(counterexample: dict) -> List[Tuple[str, bool, str]]:
    """Re-run a serialized counterexample without its seed."""
    params = Params(**counterexample.get("params", {}))
    return run_checks(counterexample["suite"], counterexample["inputs"], params)
