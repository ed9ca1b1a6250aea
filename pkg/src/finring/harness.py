"""Executable theorem suites: fast paths vs constructions vs brute force."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Optional

from . import deciders, fastpath
from .constructions import (
    generalized_matrix,
    group_ring,
    matrix_ring,
    trivial_extension,
    upper_triangular,
)
from .errors import CapExceededError
from .groups import FiniteGroup, cyclic, group_product, symmetric
from .kernel import Ring, direct_product, freeze, make_zmod, verify_ring_axioms

DEFAULT_RING_CAP = 1296


@dataclass
class SuiteReport:
    """Outcome of one parameterized suite run."""

    suite: str
    kind: str                      # "discriminating" | "consistency"
    attempted: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    wall_time: float = 0.0

    def record(self, case: str, ok: bool, expected=None, got=None, witness=None):
        self.attempted += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(
                {"case": case, "expected": expected, "got": got, "witness": witness}
            )

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "kind": self.kind,
            "attempted": self.attempted,
            "passed": self.passed,
            "failures": sorted(self.failures, key=lambda f: str(f["case"])),
            "skipped": sorted(self.skipped),
        }
        if include_timing:
            out["wall_time"] = self.wall_time
        return out


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_time = time.perf_counter() - start
        return report

    return wrapper


# -- brute-force ring-level sweeps ----------------------------------------


def ring_regular(R: Ring) -> tuple[bool, Optional[int]]:
    """(flag, least failing element) by exhaustive sweep."""
    freeze(R)
    for x in R.elements():
        if not deciders.is_regular(R, x):
            return False, x
    return True, None


def ring_unit_regular(R: Ring) -> tuple[bool, Optional[int]]:
    freeze(R)
    for x in R.elements():
        if not deciders.is_unit_regular(R, x):
            return False, x
    return True, None


# -- default case lists ----------------------------------------------------


def _std_groups():
    return {
        "C2": cyclic(2),
        "C3": cyclic(3),
        "C4": cyclic(4),
        "C5": cyclic(5),
        "S3": symmetric(3),
    }


def theorem_4_5_cases():
    g = _std_groups()
    return [
        (2, g["C3"]), (3, g["C2"]), (5, g["C2"]),
        (2, g["C2"]), (3, g["C3"]), (4, g["C3"]), (6, g["C2"]),
    ]


def connell_cases():
    return theorem_4_5_cases() + [(3, _std_groups()["S3"])]


# -- suites ----------------------------------------------------------------


@_timed
def suite_lemma_4_4(n_max: int = 60) -> SuiteReport:
    """Brute-force unit-regularity of Z_n vs the squarefree test."""
    if n_max > 256:
        raise ValueError("n_max must be <= 256")
    report = SuiteReport("lemma-4-4", "discriminating")
    for n in range(1, n_max + 1):
        R = make_zmod(n)
        brute, witness = ring_unit_regular(R)
        fast = fastpath.zn_unit_regular(n)
        report.record(
            f"Z({n})", brute == fast, expected=fast, got=brute,
            witness=None if witness is None else R.format_element(witness),
        )
    return report


@_timed
def suite_theorem_4_5(cases=None, cap: int = DEFAULT_RING_CAP) -> SuiteReport:
    """Brute-force unit-regularity of Z_nG vs the coprimality fast path."""
    report = SuiteReport("theorem-4-5", "discriminating")
    for n, G in cases or theorem_4_5_cases():
        case = f"GR(Z({n}), {G.label})"
        try:
            R = group_ring(make_zmod(n), G, cap=cap)
            freeze(R, cap=cap)
        except CapExceededError as exc:
            report.skipped.append(f"{case}: {exc}")
            continue
        brute, witness = ring_unit_regular(R)
        fast = fastpath.zng_unit_regular(n, G)
        report.record(
            case, brute == fast, expected=fast, got=brute,
            witness=None if witness is None else R.format_element(witness),
        )
    return report


@_timed
def suite_connell(cases=None, cap: int = DEFAULT_RING_CAP) -> SuiteReport:
    """Brute-force regularity of Z_nG vs the closed form; also checks that
    regularity and unit-regularity coincide over Z_n bases."""
    report = SuiteReport("connell", "discriminating")
    for n, G in cases or connell_cases():
        case = f"GR(Z({n}), {G.label})"
        try:
            R = group_ring(make_zmod(n), G, cap=cap)
            freeze(R, cap=cap)
        except CapExceededError as exc:
            report.skipped.append(f"{case}: {exc}")
            continue
        brute, witness = ring_regular(R)
        fast = fastpath.connell_regular_zn(n, G)
        report.record(
            case, brute == fast, expected=fast, got=brute,
            witness=None if witness is None else R.format_element(witness),
        )
        brute_ur, _ = ring_unit_regular(R)
        report.record(
            f"{case} regular<=>unit-regular", brute == brute_ur,
            expected=brute, got=brute_ur,
        )
    return report


@_timed
def suite_matrix_sunc(bases=None, k: int = 2, cap: int = DEFAULT_RING_CAP) -> SuiteReport:
    """Strong unit nil-cleanness transfers between an NI base and M_k(base)."""
    report = SuiteReport("matrix-sunc", "consistency")
    if bases is None:
        bases = [make_zmod(1), make_zmod(2), make_zmod(4)]
    for base in bases:
        case = f"M({k}, {base.label})"
        freeze(base)
        if not deciders.is_NI(base):
            report.skipped.append(f"{case}: base not NI")
            continue
        try:
            M = matrix_ring(base, k, cap=cap)
            freeze(M, cap=cap)
        except CapExceededError as exc:
            report.skipped.append(f"{case}: {exc}")
            continue
        base_flag = deciders.classify(base).flags["strongly_unit_nil_clean"]
        mat_flag = deciders.classify(M).flags["strongly_unit_nil_clean"]
        report.record(case, base_flag == mat_flag, expected=base_flag, got=mat_flag)
    return report


def _morita_cases():
    z2, z3, z4, z6 = (make_zmod(m) for m in (2, 3, 4, 6))
    return [
        ("Ks(Z(4), 2)", generalized_matrix(z4, 2)),
        ("Ks(Z(2), 0)", generalized_matrix(z2, 0)),
        ("U(2, Z(2))", upper_triangular(z2, 2)),
        ("U(3, Z(2))", upper_triangular(z2, 3)),
        ("U(2, Z(6))", upper_triangular(z6, 2)),
        ("Triv(Z(3))", trivial_extension(z3)),
        ("Triv(Z(6))", trivial_extension(z6)),
    ]


@_timed
def suite_morita(cases=None, cap: int = DEFAULT_RING_CAP) -> SuiteReport:
    """Strong unit nil-cleanness of K_s / triangular / trivial-extension rings
    matches the base ring's flag."""
    report = SuiteReport("morita", "consistency")
    for case, R in cases or _morita_cases():
        try:
            freeze(R, cap=cap)
        except CapExceededError as exc:
            report.skipped.append(f"{case}: {exc}")
            continue
        base = R.meta["base"]
        freeze(base)
        base_flag = deciders.classify(base).flags["strongly_unit_nil_clean"]
        flag = deciders.classify(R).flags["strongly_unit_nil_clean"]
        report.record(case, flag == base_flag and flag, expected=base_flag, got=flag)
    return report


def _group_ring_sunc_cases():
    g = _std_groups()
    return [
        (make_zmod(4), g["C2"]),
        (make_zmod(2), g["S3"]),
        (make_zmod(2), g["C3"]),
        (make_zmod(4), g["C4"]),
    ]


@_timed
def suite_group_ring_sunc(cases=None, cap: int = DEFAULT_RING_CAP) -> SuiteReport:
    """Group rings over finite (hence perfect) bases are strongly unit
    nil-clean; the homomorphic-image direction back to the base is asserted."""
    report = SuiteReport("group-ring-sunc", "consistency")
    for base, G in cases or _group_ring_sunc_cases():
        case = f"GR({base.label}, {G.label})"
        try:
            RG = group_ring(base, G, cap=cap)
            freeze(RG, cap=cap)
        except CapExceededError as exc:
            report.skipped.append(f"{case}: {exc}")
            continue
        flag = deciders.classify(RG).flags["strongly_unit_nil_clean"]
        report.record(case, flag, expected=True, got=flag)
        freeze(base)
        base_flag = deciders.classify(base).flags["strongly_unit_nil_clean"]
        report.record(
            f"{case} -> base", (not flag) or base_flag, expected=True, got=base_flag
        )
    return report


@_timed
def suite_periodic(cases=None, cap: int = DEFAULT_RING_CAP) -> SuiteReport:
    """Every element of every finite group ring is periodic."""
    report = SuiteReport("periodic", "consistency")
    if cases is None:
        g = _std_groups()
        cases = [(make_zmod(2), g["S3"]), (make_zmod(4), g["C2"])]
    for base, G in cases:
        case = f"GR({base.label}, {G.label})"
        try:
            RG = group_ring(base, G, cap=cap)
            freeze(RG, cap=cap)
        except CapExceededError as exc:
            report.skipped.append(f"{case}: {exc}")
            continue
        bad = None
        for x in RG.elements():
            m, n = deciders.periodic_indices(RG, x)
            if not (1 <= m < n):
                bad = x
                break
        report.record(
            case, bad is None,
            expected="all periodic", got="ok" if bad is None else "aperiodic",
            witness=None if bad is None else RG.format_element(bad),
        )
    return report


ALL_SUITES = {
    "lemma-4-4": suite_lemma_4_4,
    "theorem-4-5": suite_theorem_4_5,
    "connell": suite_connell,
    "matrix-sunc": suite_matrix_sunc,
    "morita": suite_morita,
    "group-ring-sunc": suite_group_ring_sunc,
    "periodic": suite_periodic,
}


# -- the standard desk-scale corpus ----------------------------------------


def standard_corpus(cap: int = DEFAULT_RING_CAP):
    """The fixed ring list exercised by the acceptance suite."""
    rings = [make_zmod(n) for n in range(1, 10)]
    rings.append(make_zmod(12))
    rings.append(direct_product(make_zmod(2), make_zmod(3)))
    z2, z3, z4, z6 = (make_zmod(m) for m in (2, 3, 4, 6))
    g = _std_groups()
    rings += [
        matrix_ring(z2, 2),
        matrix_ring(z4, 2),
        upper_triangular(z2, 2),
        upper_triangular(z2, 3),
        upper_triangular(z6, 2),
        group_ring(z2, g["C2"]),
        group_ring(z2, g["C3"]),
        group_ring(z4, g["C2"]),
        group_ring(z4, g["C4"]),
        group_ring(z2, g["S3"]),
        group_ring(z3, g["C3"]),
        group_ring(z6, g["C2"]),
        trivial_extension(z3),
        trivial_extension(z6),
        generalized_matrix(z4, 2),
        generalized_matrix(z2, 0),
        generalized_matrix(z2, 1),
    ]
    return [R for R in rings if R.order <= cap]


# -- randomized counterexample search --------------------------------------


@dataclass
class SearchConfig:
    seed: int = 0
    count: int = 100
    order_cap: int = 256
    weights: Optional[dict] = None

    DEFAULT_WEIGHTS = {
        "zmod": 3, "product": 1, "matrix": 1, "upper": 1,
        "group_ring": 2, "triv": 1, "ks": 1,
    }


_IMPLICATIONS = [
    ("unit_regular", "regular"),
    ("strongly_nil_clean", "nil_clean"),
    ("nil_clean", "unit_nil_clean"),
    ("strongly_nil_clean", "strongly_unit_nil_clean"),
    ("strongly_unit_nil_clean", "unit_nil_clean"),
    ("nil_clean", "clean"),
]


def _random_instance(rng: random.Random, cap: int, weights: Optional[dict] = None):
    weights = weights or SearchConfig.DEFAULT_WEIGHTS
    kinds = sorted(weights)
    kind = rng.choices(kinds, weights=[weights[k] for k in kinds])[0]
    if kind == "zmod":
        return make_zmod(rng.randint(1, min(24, cap)))
    if kind == "product":
        a = rng.randint(1, 12)
        b = rng.randint(1, max(1, min(12, cap // a)))
        return direct_product(make_zmod(a), make_zmod(b))
    if kind == "matrix":
        m = rng.choice([m for m in (1, 2, 3, 4) if m**4 <= cap])
        return matrix_ring(make_zmod(m), 2)
    if kind == "upper":
        m = rng.choice([m for m in (1, 2, 3, 4, 5, 6) if m**3 <= cap])
        return upper_triangular(make_zmod(m), 2)
    if kind == "group_ring":
        g = _std_groups()
        pool = [
            (m, G)
            for m in (1, 2, 3, 4)
            for G in (g["C2"], g["C3"], g["C4"], g["S3"], group_product(g["C2"], g["C2"]))
            if m**G.order <= cap
        ]
        m, G = rng.choice(pool)
        return group_ring(make_zmod(m), G)
    if kind == "triv":
        m = rng.randint(1, max(1, int(cap**0.5)))
        return trivial_extension(make_zmod(m))
    # kind == "ks"
    m = rng.choice([m for m in (2, 3, 4) if m**4 <= cap] or [2])
    base = freeze(make_zmod(m))
    s = rng.choice(sorted(base.caches.nilpotents | {base.one}))
    return generalized_matrix(base, s)


def _check_instance(R: Ring, failures: list):
    case = R.label
    try:
        verify_ring_axioms(R)
    except AssertionError as exc:
        failures.append({"case": case, "expected": "ring axioms", "got": str(exc), "witness": None})
        return
    freeze(R)
    report = deciders.classify(R)
    flags = report.flags
    for pre, post in _IMPLICATIONS:
        if flags[pre] and not flags[post]:
            failures.append({
                "case": case, "expected": f"{pre} => {post}",
                "got": "violated", "witness": report.witnesses.get(post),
            })
    for name in ("clean", "strongly_unit_nil_clean", "strongly_pi_regular", "periodic"):
        if not flags[name]:
            failures.append({
                "case": case, "expected": f"{name} universal", "got": False,
                "witness": report.witnesses.get(name),
            })
    ni = flags["NI"]
    collapse = R.caches.nilpotents == R.caches.jacobson
    if ni != collapse:
        failures.append({
            "case": case, "expected": "NI <=> Nil == J",
            "got": {"NI": ni, "Nil==J": collapse}, "witness": None,
        })
    for x in R.elements():
        search = deciders.is_strongly_nil_clean(R, x) is not None
        poly = deciders.snc_poly_criterion(R, x)
        if search != poly:
            failures.append({
                "case": case, "expected": "Diesl criterion",
                "got": {"search": search, "poly": poly},
                "witness": R.format_element(x),
            })
            break
    if R.order <= 512:
        for x in R.elements():
            ur = deciders.is_unit_regular(R, x)
            ehrlich = deciders.is_regular(R, x) and deciders.is_left_morphic(R, x)
            if ur != ehrlich:
                failures.append({
                    "case": case, "expected": "Ehrlich equivalence",
                    "got": {"unit_regular": ur, "regular&morphic": ehrlich},
                    "witness": R.format_element(x),
                })
                break
    if R.kind == "zmod":
        fast = fastpath.zn_unit_regular(R.meta["n"])
        if fast != flags["unit_regular"]:
            failures.append({
                "case": case, "expected": "Lemma 4.4 fast path",
                "got": {"fast": fast, "brute": flags["unit_regular"]},
                "witness": report.witnesses.get("unit_regular"),
            })
    if R.kind == "group_ring" and R.meta["base"].kind == "zmod":
        n = R.meta["base"].meta["n"]
        G = R.meta["group"]
        fast = fastpath.zng_unit_regular(n, G)
        if fast != flags["unit_regular"]:
            failures.append({
                "case": case, "expected": "Theorem 4.5 fast path",
                "got": {"fast": fast, "brute": flags["unit_regular"]},
                "witness": report.witnesses.get("unit_regular"),
            })
        if fastpath.connell_regular_zn(n, G) != flags["regular"]:
            failures.append({
                "case": case, "expected": "Connell fast path",
                "got": {"fast": fastpath.connell_regular_zn(n, G), "brute": flags["regular"]},
                "witness": report.witnesses.get("regular"),
            })
        if not flags["strongly_unit_nil_clean"]:
            failures.append({
                "case": case, "expected": "group ring sunc", "got": False,
                "witness": report.witnesses.get("strongly_unit_nil_clean"),
            })


@_timed
def falsify(config: SearchConfig) -> SuiteReport:
    """Random constructions cross-checked against every applicable predicate.

    Deterministic under a fixed seed; the serialized report excludes
    timing so two runs are byte-identical.
    """
    report = SuiteReport("falsify", "discriminating")
    rng = random.Random(config.seed)
    cap = config.order_cap
    for _ in range(config.count):
        try:
            R = _random_instance(rng, cap, config.weights)
        except CapExceededError as exc:
            report.skipped.append(str(exc))
            continue
        if R.order > cap:
            report.skipped.append(f"{R.label}: order {R.order} > cap {cap}")
            continue
        before = len(report.failures)
        _check_instance(R, report.failures)
        report.attempted += 1
        if len(report.failures) == before:
            report.passed += 1
    return report
