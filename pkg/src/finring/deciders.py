"""Element- and ring-level decision procedures, all over frozen caches."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import CapExceededError
from .kernel import CLASSIFY_CAP, Ring, freeze, ring_pow

RING_FLAGS = (
    "regular",
    "unit_regular",
    "strongly_regular",
    "clean",
    "nil_clean",
    "strongly_nil_clean",
    "unit_nil_clean",
    "strongly_unit_nil_clean",
    "strongly_pi_regular",
    "periodic",
    "NI",
    "reduced",
)


@dataclass
class Decomposition:
    """A witnessed sum decomposition x = e + other (possibly after a unit multiple)."""

    kind: str                      # "nil-clean" | "strongly-nil-clean" | "clean"
    idempotent: int
    other: int
    unit: Optional[int] = None     # u such that u*x = idempotent + other

    def verify(self, R: Ring, x: int) -> bool:
        caches = R.caches
        target = x if self.unit is None else R.mul(self.unit, x)
        if R.add(self.idempotent, self.other) != target:
            return False
        if self.idempotent not in caches.idempotents:
            return False
        if self.kind == "clean":
            return self.other in caches.units
        if self.other not in caches.nilpotents:
            return False
        if self.kind == "strongly-nil-clean":
            return R.mul(self.idempotent, self.other) == R.mul(self.other, self.idempotent)
        return True


def _require_frozen(R: Ring) -> Ring:
    if not R.frozen:
        freeze(R)
    return R


# -- regularity ------------------------------------------------------------


def is_regular(R: Ring, x: int) -> bool:
    """x = x*y*x for some y."""
    _require_frozen(R)
    mul = R.mul
    return any(mul(mul(x, y), x) == x for y in R.elements())


def is_unit_regular(R: Ring, x: int) -> bool:
    """x = x*u*x for some unit u."""
    _require_frozen(R)
    mul = R.mul
    return any(mul(mul(x, u), x) == x for u in sorted(R.caches.units))


def is_strongly_regular(R: Ring, x: int) -> bool:
    """x lies in x^2*R and in R*x^2."""
    _require_frozen(R)
    mul = R.mul
    sq = mul(x, x)
    return any(mul(sq, y) == x for y in R.elements()) and any(
        mul(z, sq) == x for z in R.elements()
    )


# -- morphic ---------------------------------------------------------------


def _morphic_tables(R: Ring):
    """Per-element left annihilators and principal left ideals, cached."""
    if R._morphic is None:
        n = R.order
        mul = R.mul
        left_ann = []
        principal = []
        by_principal = {}
        for a in range(n):
            col = [mul(y, a) for y in range(n)]
            la = frozenset(y for y in range(n) if col[y] == 0)
            pr = frozenset(col)
            left_ann.append(la)
            principal.append(pr)
            by_principal.setdefault(pr, []).append(a)
        R._morphic = (left_ann, principal, by_principal)
    return R._morphic


def is_left_morphic(R: Ring, x: int) -> bool:
    """Some b has left-ann(x) = R*b and left-ann(b) = R*x."""
    _require_frozen(R)
    left_ann, principal, by_principal = _morphic_tables(R)
    candidates = by_principal.get(left_ann[x], ())
    return any(left_ann[b] == principal[x] for b in candidates)


# -- clean / nil-clean families --------------------------------------------


def is_nil_clean(R: Ring, x: int) -> Optional[Decomposition]:
    """x = idempotent + nilpotent, least idempotent index first."""
    _require_frozen(R)
    caches = R.caches
    for e in sorted(caches.idempotents):
        b = R.sub(x, e)
        if b in caches.nilpotents:
            return Decomposition("nil-clean", e, b)
    return None


def is_strongly_nil_clean(R: Ring, x: int) -> Optional[Decomposition]:
    """As is_nil_clean, with the two parts required to commute."""
    _require_frozen(R)
    caches = R.caches
    for e in sorted(caches.idempotents):
        b = R.sub(x, e)
        if b in caches.nilpotents and R.mul(e, b) == R.mul(b, e):
            return Decomposition("strongly-nil-clean", e, b)
    return None


def snc_poly_criterion(R: Ring, x: int) -> bool:
    """x - x^2 nilpotent; an independent route to strong nil-cleanness."""
    _require_frozen(R)
    return R.sub(x, R.mul(x, x)) in R.caches.nilpotents


def is_clean(R: Ring, x: int) -> Optional[Decomposition]:
    """x = idempotent + unit."""
    _require_frozen(R)
    caches = R.caches
    for e in sorted(caches.idempotents):
        u = R.sub(x, e)
        if u in caches.units:
            return Decomposition("clean", e, u)
    return None


def is_unit_nil_clean(R: Ring, x: int) -> Optional[Decomposition]:
    """Some unit multiple u*x is nil-clean; u recorded on the decomposition."""
    _require_frozen(R)
    for u in sorted(R.caches.units):
        dec = is_nil_clean(R, R.mul(u, x))
        if dec is not None:
            dec.unit = u
            return dec
    return None


def is_strongly_unit_nil_clean(R: Ring, x: int) -> Optional[Decomposition]:
    """Some unit multiple u*x is strongly nil-clean.

    Units are screened with the fast polynomial criterion on u*x; the
    explicit commuting decomposition is then reconstructed by idempotent
    search and must exist (the two routes are asserted to agree).
    """
    _require_frozen(R)
    for u in sorted(R.caches.units):
        ux = R.mul(u, x)
        if snc_poly_criterion(R, ux):
            dec = is_strongly_nil_clean(R, ux)
            assert dec is not None, "polynomial criterion and search disagree"
            dec.unit = u
            return dec
    return None


# -- periodicity -----------------------------------------------------------


def periodic_indices(R: Ring, x: int) -> tuple[int, int]:
    """Lexicographically least (m, n), 1 <= m < n, with x^m = x^n."""
    _require_frozen(R)
    seen = {}
    power = x
    k = 1
    while power not in seen:
        seen[power] = k
        power = R.mul(power, x)
        k += 1
    return seen[power], k


def is_strongly_pi_regular(R: Ring, x: int) -> bool:
    """Some power of x is strongly regular."""
    _require_frozen(R)
    _, bound = periodic_indices(R, x)
    power = R.one
    for _ in range(1, bound + 1):
        power = R.mul(power, x)
        if is_strongly_regular(R, power):
            return True
    return False


# -- m-potents -------------------------------------------------------------


def is_m_potent(R: Ring, x: int, m: int) -> bool:
    """x^m = x, for m > 1."""
    if m <= 1:
        raise ValueError("m must be > 1")
    _require_frozen(R)
    return ring_pow(R, x, m) == x


def ring_strongly_m_nil_clean(R: Ring, m: int) -> bool:
    """Every element is a commuting sum of an m-potent and a nilpotent."""
    if m <= 1:
        raise ValueError("m must be > 1")
    _require_frozen(R)
    caches = R.caches
    m_potents = [w for w in R.elements() if is_m_potent(R, w, m)]
    for x in R.elements():
        if not any(
            R.sub(x, w) in caches.nilpotents
            and R.mul(w, R.sub(x, w)) == R.mul(R.sub(x, w), w)
            for w in m_potents
        ):
            return False
    return True


# -- nil set / radicals ----------------------------------------------------


def nil_set(R: Ring) -> frozenset:
    _require_frozen(R)
    return R.caches.nilpotents


def is_NI(R: Ring) -> bool:
    """The nilpotents form a two-sided ideal."""
    _require_frozen(R)
    nils = R.caches.nilpotents
    for a in nils:
        for b in nils:
            if R.add(a, b) not in nils:
                return False
    for a in nils:
        for r in R.elements():
            if R.mul(r, a) not in nils or R.mul(a, r) not in nils:
                return False
    return True


def _ni_witness(R: Ring) -> int:
    """A non-nilpotent sum/product escaping the nil set (R not NI)."""
    nils = sorted(R.caches.nilpotents)
    for a in nils:
        for b in nils:
            s = R.add(a, b)
            if s not in R.caches.nilpotents:
                return s
    for a in nils:
        for r in R.elements():
            for p in (R.mul(r, a), R.mul(a, r)):
                if p not in R.caches.nilpotents:
                    return p
    raise ValueError("ring is NI; no witness")


def is_reduced(R: Ring) -> bool:
    _require_frozen(R)
    return R.caches.nilpotents == frozenset({0})


# -- aggregate classification ----------------------------------------------


@dataclass
class PropertyReport:
    """Per-ring classification with least-index witnesses for false flags."""

    label: str
    order: int
    flags: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    jacobson_size: int = 0
    nil_size: int = 0

    def to_json(self):
        return {
            "label": self.label,
            "order": self.order,
            "flags": dict(self.flags),
            "witnesses": dict(self.witnesses),
            "radicals": {"jacobson": self.jacobson_size, "nil": self.nil_size},
        }


_ELEMENT_DECIDERS = {
    "regular": is_regular,
    "unit_regular": is_unit_regular,
    "strongly_regular": is_strongly_regular,
    "clean": lambda R, x: is_clean(R, x) is not None,
    "nil_clean": lambda R, x: is_nil_clean(R, x) is not None,
    "strongly_nil_clean": lambda R, x: is_strongly_nil_clean(R, x) is not None,
    "unit_nil_clean": lambda R, x: is_unit_nil_clean(R, x) is not None,
    "strongly_unit_nil_clean": lambda R, x: is_strongly_unit_nil_clean(R, x) is not None,
    "strongly_pi_regular": is_strongly_pi_regular,
    "periodic": lambda R, x: periodic_indices(R, x) is not None,
}


def classify(R: Ring, cap: int = CLASSIFY_CAP) -> PropertyReport:
    """Classify every ring-level flag by exhaustive elementwise sweep."""
    if R.order > cap:
        raise CapExceededError(f"classification of {R.label} exceeds cap {cap}")
    _require_frozen(R)
    report = PropertyReport(label=R.label, order=R.order)
    report.jacobson_size = len(R.caches.jacobson)
    report.nil_size = len(R.caches.nilpotents)
    for name, decider in _ELEMENT_DECIDERS.items():
        flag = True
        for x in R.elements():
            if not decider(R, x):
                flag = False
                report.witnesses[name] = {
                    "index": x,
                    "element": R.format_element(x),
                }
                break
        report.flags[name] = flag
    report.flags["NI"] = is_NI(R)
    if not report.flags["NI"]:
        w = _ni_witness(R)
        report.witnesses["NI"] = {"index": w, "element": R.format_element(w)}
    report.flags["reduced"] = is_reduced(R)
    if not report.flags["reduced"]:
        w = min(x for x in R.caches.nilpotents if x != 0)
        report.witnesses["reduced"] = {"index": w, "element": R.format_element(w)}
    return report
