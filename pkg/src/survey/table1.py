"""Recompute the reference table of well-rounded ideals in real fields."""

import logging
from fractions import Fraction
from typing import List

from ..config import TABLE1
from ..diophantine.solver import solve_pq
from ..errors import Table1MismatchError
from ..latgeom.ideal_lattices import gram_of_ideal
from ..latgeom.reduction import is_wr, similarity_class
from ..models.fields import IdealBasis
from ..models.survey import Table1Row
from ..quadfield.fields import make_field
from ..quadfield.ideals import construct_wr_ideal, validate_ideal

logger = logging.getLogger(__name__)


def table1_report() -> List[Table1Row]:
    """
    Check each listed ideal ⟨a, b+δ⟩ of Q(√D): valid, well-rounded, with the
    listed ratio p/q and r = 1. The two ideals must also be the companion
    and the standard construction for that (p, q).

    Raises Table1MismatchError on the first cell that differs.
    """
    rows = []
    for D, listed, (p, q) in TABLE1:
        field = make_field(D)
        ideals = []
        for a, b in listed:
            if not validate_ideal(field, a, b, 1):
                raise Table1MismatchError(f"D={D}: ⟨{a}, {b}+δ⟩ is not an ideal")
            ideal = IdealBasis(field=field, a=a, b=b, g=1)
            form = gram_of_ideal(ideal)
            if not is_wr(form):
                raise Table1MismatchError(f"D={D}: {ideal.label()} is not well-rounded")
            cls = similarity_class(form)
            if (cls.p, cls.q, cls.r, cls.D) != (p, q, 1, D):
                raise Table1MismatchError(
                    f"D={D}: {ideal.label()} has class {cls.p}/{cls.q} (r={cls.r}), listed {p}/{q}"
                )
            ideals.append(ideal)

        if solve_pq(D, 1) != [(p, q)]:
            raise Table1MismatchError(f"D={D}: listed ratio {p}/{q} is not the unique solution")
        constructed = (
            construct_wr_ideal(D, p, q, "real", companion=True),
            construct_wr_ideal(D, p, q, "real"),
        )
        if tuple(ideals) != constructed:
            raise Table1MismatchError(f"D={D}: listed ideals differ from the constructions")

        logger.debug(f"D={D}: {ideals[0].label()} and {ideals[1].label()} confirmed")
        rows.append(
            Table1Row(D=D, ideal_1=ideals[0].label(), ideal_2=ideals[1].label(), ratio=Fraction(p, q), r=1)
        )
    return rows
