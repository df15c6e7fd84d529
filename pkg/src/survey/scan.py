"""
Field scans over squarefree D ≤ N.

Per-D records are computed exactly from divisor pairs; the density report
uses vectorised masks so it reaches N = 10⁶ in seconds. Parallel scans
merge chunks in ascending-D order.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from ..arith.integers import factorize
from ..arith.sieve import squarefree_sieve, squarefree_values
from ..config import (
    DEFAULT_NU,
    DENSITY_BOUND_DISPLAY_DIGITS,
    DENSITY_PROOF_THRESHOLD,
    ScanOptions,
)
from ..diophantine.nearsquare import nearsquare_mask, nearsquare_witness
from ..diophantine.solver import count_functions, f2_divisor_count, solvable_mask
from ..errors import InvalidArgumentError
from ..models.survey import DensityReport, ScanSummary, SurveyRecord

logger = logging.getLogger(__name__)


def survey_record(D: int) -> SurveyRecord:
    """Scan row for one squarefree D"""
    witness = nearsquare_witness(D, DEFAULT_NU)
    counts = count_functions(D, 1)
    factorization = factorize(D)
    solvable = counts.f > 0 or D == 1
    return SurveyRecord(
        D=D,
        nearsquare3=witness is not None,
        witness=witness,
        solvable=solvable,
        f=counts.f,
        f1=counts.f1,
        f2=counts.f2,
        f2_divisors=f2_divisor_count(D, 1),
        omega=factorization.omega,
        tau=factorization.tau,
        f1_bound_ok=2 * counts.f1 <= 2 ** factorization.omega,
        real_claim="sufficient" if solvable else "open",
    )


def _record_chunk(values: Sequence[int]) -> List[SurveyRecord]:
    return [survey_record(D) for D in values]


def _chunks(values: Sequence[int], size: int) -> Iterator[List[int]]:
    for start in range(0, len(values), size):
        yield list(values[start:start + size])


def iter_survey_records(options: ScanOptions) -> Iterator[SurveyRecord]:
    """Records for every squarefree D ≤ max_D, in ascending D."""
    values = [int(D) for D in squarefree_values(squarefree_sieve(options.max_D))]
    chunks = _chunks(values, options.chunk_size)
    logger.info(f"Scanning {len(values)} squarefree D ≤ {options.max_D} with {options.workers} worker(s)")

    if options.workers == 1:
        for chunk in chunks:
            yield from _record_chunk(chunk)
        return

    # Executor.map yields in submission order
    with ProcessPoolExecutor(max_workers=options.workers) as executor:
        for records in executor.map(_record_chunk, chunks):
            yield from records


def summarize(N: int, records: Sequence[SurveyRecord]) -> ScanSummary:
    squarefree = len(records)
    nearsquare = sum(record.nearsquare3 for record in records)
    solvable = sum(record.solvable for record in records)
    return ScanSummary(
        N=N,
        squarefree_count=squarefree,
        nearsquare_count=nearsquare,
        solvable_count=solvable,
        ratio_nearsquare=Fraction(nearsquare, squarefree),
        ratio_solvable=Fraction(solvable, squarefree),
    )


def scan_fields(N: int, workers: int = 1) -> Tuple[List[SurveyRecord], ScanSummary]:
    """One record per squarefree D ≤ N plus the set sizes |A(N)|, |B(N)| and solvable count"""
    if N < 1:
        raise InvalidArgumentError(f"N must be ≥ 1 (got {N})")
    records = list(iter_survey_records(ScanOptions(max_D=N, workers=workers)))
    summary = summarize(N, records)
    logger.info(
        f"N={N}: {summary.squarefree_count} squarefree, {summary.nearsquare_count} nearsquare, "
        f"{summary.solvable_count} solvable"
    )
    return records, summary


def density_bound() -> Decimal:
    """(√3 − 1)/(2√3), rounded for display"""
    with localcontext() as context:
        context.prec = 30
        root3 = Decimal(3).sqrt()
        exact = (root3 - 1) / (2 * root3)
        return exact.quantize(Decimal(1).scaleb(-DENSITY_BOUND_DISPLAY_DIGITS))


def meets_density_bound(ratio: Fraction) -> bool:
    """Exact test of ratio ≥ (√3 − 1)/(2√3), i.e. 12·(1/2 − ratio)² ≤ 1 when ratio < 1/2"""
    gap = Fraction(1, 2) - ratio
    return gap <= 0 or 12 * gap * gap <= 1


def density_report(N: int) -> DensityReport:
    """Nearsquare and solvable ratios among squarefree D ≤ N."""
    if N < 1:
        raise InvalidArgumentError(f"N must be ≥ 1 (got {N})")
    if N < DENSITY_PROOF_THRESHOLD:
        logger.warning(f"N={N} is below {DENSITY_PROOF_THRESHOLD}; the density bound is not claimed there")

    squarefree = squarefree_sieve(N)
    nearsquare = squarefree & nearsquare_mask(N, DEFAULT_NU)
    solvable = squarefree & solvable_mask(N)
    squarefree_count = int(np.count_nonzero(squarefree))
    nearsquare_count = int(np.count_nonzero(nearsquare))
    # D = 1 is solvable through the square class
    solvable_count = int(np.count_nonzero(solvable)) + 1

    summary = ScanSummary(
        N=N,
        squarefree_count=squarefree_count,
        nearsquare_count=nearsquare_count,
        solvable_count=solvable_count,
        ratio_nearsquare=Fraction(nearsquare_count, squarefree_count),
        ratio_solvable=Fraction(solvable_count, squarefree_count),
    )
    meets = meets_density_bound(summary.ratio_nearsquare)
    if not meets:
        logger.warning(
            f"N={N}: nearsquare ratio {float(summary.ratio_nearsquare):.6f} is below {density_bound()}"
        )
    return DensityReport(
        summary=summary,
        squarefree_density=Fraction(squarefree_count, N),
        squarefree_density_limit=f"{6 / math.pi ** 2:.{DENSITY_BOUND_DISPLAY_DIGITS}f}",
        bound=str(density_bound()),
        meets_bound=meets,
        below_proof_threshold=N < DENSITY_PROOF_THRESHOLD,
    )
