"""Well-rounded ideals of a single field: classification, class numbers, principal search."""

import logging
from math import gcd
from typing import Dict, List, Optional, Set, Tuple

from cachetools import LRUCache, cached

from ..arith.integers import is_squarefree
from ..arith.sieve import squarefree_sieve, squarefree_values
from ..config import A_MAX_FACTOR, CLASS_NUMBER_CACHE_SIZE, DEFAULT_PRINCIPAL_HEIGHT
from ..diophantine.solver import count_functions, solve_pq
from ..errors import InvalidArgumentError, NotSquarefreeError
from ..latgeom.ideal_lattices import gram_of_ideal
from ..latgeom.reduction import is_wr, similarity_class
from ..models.classes import PqClass
from ..models.fields import FieldDesc, IdealBasis
from ..models.survey import ClassNumberRecord, ClassReport, PrincipalHit, RealFieldRow
from ..quadfield.fields import make_field
from ..quadfield.ideals import iter_ideals, principal_hnf

logger = logging.getLogger(__name__)

SQUARE_CLASS = (0, 1)


def expected_classes(D: int) -> List[PqClass]:
    """Classes (p, q, 1, D) predicted for Q(√−D), including the square class for D = 1"""
    pairs = [SQUARE_CLASS] if D == 1 else solve_pq(D, 1)
    return [PqClass(p=p, q=q, r=1, D=D) for p, q in pairs]


def classify_wr_ideals(
    field: FieldDesc, a_max: Optional[int] = None, include_scaled: bool = False
) -> ClassReport:
    """
    Enumerate ideals with a ≤ a_max, keep the well-rounded ones and group
    them by similarity class.

    Scaling an ideal by g scales its form by g², so primitive ideals already
    meet every class; include_scaled also lists the g > 1 ideals. For an
    imaginary field the class set is compared against the solutions of
    p² + D = q² and missing classes are reported.
    """
    if a_max is None:
        a_max = A_MAX_FACTOR * field.D
    if a_max < 1:
        raise InvalidArgumentError(f"a_max must be ≥ 1 (got {a_max})")

    found: Dict[Tuple[int, int, int, int], PqClass] = {}
    representatives: List[IdealBasis] = []
    for ideal in iter_ideals(field, a_max, primitive_only=not include_scaled):
        form = gram_of_ideal(ideal)
        if not is_wr(form):
            continue
        cls = similarity_class(form)
        logger.debug(f"{field}: {ideal.label()} is well-rounded with p/q = {cls.p}/{cls.q}, r = {cls.r}")
        found.setdefault(cls.key(), cls)
        representatives.append(ideal)

    classes = sorted(found.values(), key=lambda c: (c.p, c.q, c.r))

    h = None
    expected = None
    missing: List[PqClass] = []
    if field.kind == "imaginary":
        h = class_number_imag(field.D).h
        expected = expected_classes(field.D)
        missing = [c for c in expected if c.key() not in found]
        if missing:
            logger.warning(f"{field}: classes {[(c.p, c.q) for c in missing]} not met with a ≤ {a_max}")
        unexpected = [c for c in classes if c.r != 1]
        if unexpected:
            logger.warning(f"{field}: classes with r ≠ 1 found: {[(c.p, c.q, c.r) for c in unexpected]}")

    logger.info(f"{field}: {len(classes)} well-rounded classes among ideals with a ≤ {a_max}")
    return ClassReport(
        m=field.m,
        D=field.D,
        a_max=a_max,
        classes=classes,
        representatives=representatives,
        h=h,
        wr_class_count=len(classes),
        expected=expected,
        missing=missing,
    )


def fundamental_discriminant(D: int) -> int:
    """Discriminant of Q(√−D): −D if −D ≡ 1 (mod 4), else −4D"""
    return -D if (-D) % 4 == 1 else -4 * D


def reduced_forms(delta: int) -> List[Tuple[int, int, int]]:
    """Reduced primitive positive forms (a, b, c) of discriminant delta < 0"""
    forms = []
    a = 1
    while 3 * a * a <= -delta:
        for b in range(-a + 1, a + 1):
            if (b - delta) % 2:
                continue
            numerator = b * b - delta
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            if gcd(gcd(a, b), c) == 1:
                forms.append((a, b, c))
        a += 1
    return forms


@cached(LRUCache(maxsize=CLASS_NUMBER_CACHE_SIZE))
def class_number_imag(D: int) -> ClassNumberRecord:
    """h(−D) by counting reduced forms, next to the number of well-rounded classes"""
    if D < 1:
        raise InvalidArgumentError(f"D must be ≥ 1 (got {D})")
    if not is_squarefree(D):
        raise NotSquarefreeError(D)

    delta = fundamental_discriminant(D)
    forms = reduced_forms(delta)
    wr_classes = 1 if D == 1 else count_functions(D, 1).f
    if wr_classes == len(forms) and D not in (1, 3):
        logger.warning(f"D={D}: every ideal class is well-rounded")
    return ClassNumberRecord(D=D, delta=delta, h=len(forms), forms=tuple(forms), wr_classes=wr_classes)


def principal_wr_search(field: FieldDesc, height: int = DEFAULT_PRINCIPAL_HEIGHT) -> List[PrincipalHit]:
    """
    Well-rounded ideals generated by some x + yδ with |x|, |y| ≤ height.

    α and −α give the same ideal, so only the half-plane y > 0 or
    (y = 0, x > 0) is scanned. Hits are sorted by (norm, a, b).
    """
    if height < 1:
        raise InvalidArgumentError(f"height must be ≥ 1 (got {height})")

    seen: Set[Tuple[int, int, int]] = set()
    hits: List[PrincipalHit] = []
    for y in range(0, height + 1):
        for x in range(-height, height + 1):
            if y == 0 and x <= 0:
                continue
            basis = principal_hnf(field, x, y)
            if basis in seen:
                continue
            seen.add(basis)
            a, b, g = basis
            ideal = IdealBasis(field=field, a=a, b=b, g=g)
            form = gram_of_ideal(ideal)
            if is_wr(form):
                hits.append(PrincipalHit(x=x, y=y, ideal=ideal, cls=similarity_class(form)))

    hits.sort(key=lambda hit: (hit.ideal.norm, hit.ideal.a, hit.ideal.b))
    logger.info(f"{field}: {len(hits)} principal well-rounded ideals among {len(seen)} with height ≤ {height}")
    return hits


def real_field_scan(
    N: int, a_max_factor: int = A_MAX_FACTOR, height: int = DEFAULT_PRINCIPAL_HEIGHT
) -> List[RealFieldRow]:
    """
    For each squarefree 2 ≤ D ≤ N: solvability of p² + D = q², well-rounded
    primitive ideals of Q(√D) with a ≤ a_max_factor·D, and whether one of
    them is principal with a generator of height ≤ height.
    """
    if N < 2:
        raise InvalidArgumentError(f"N must be ≥ 2 (got {N})")
    if a_max_factor < 1:
        raise InvalidArgumentError(f"a_max_factor must be ≥ 1 (got {a_max_factor})")

    rows = []
    for value in squarefree_values(squarefree_sieve(N), lower=2):
        D = int(value)
        field = make_field(D)
        report = classify_wr_ideals(field, a_max_factor * D)
        principal = principal_wr_search(field, height)
        rows.append(
            RealFieldRow(
                D=D,
                d_mod_4=D % 4,
                solvable=bool(solve_pq(D, 1)),
                wr_class_count=report.wr_class_count,
                first_wr_ideal=report.representatives[0].label() if report.representatives else None,
                principal_wr=bool(principal),
            )
        )
    return rows
