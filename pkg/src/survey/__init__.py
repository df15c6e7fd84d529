from .classify import (
    class_number_imag,
    classify_wr_ideals,
    expected_classes,
    fundamental_discriminant,
    principal_wr_search,
    real_field_scan,
    reduced_forms,
)
from .scan import (
    density_bound,
    density_report,
    iter_survey_records,
    meets_density_bound,
    scan_fields,
    summarize,
    survey_record,
)
from .table1 import table1_report

__all__ = [
    "class_number_imag",
    "classify_wr_ideals",
    "density_bound",
    "density_report",
    "expected_classes",
    "fundamental_discriminant",
    "iter_survey_records",
    "meets_density_bound",
    "principal_wr_search",
    "real_field_scan",
    "reduced_forms",
    "scan_fields",
    "summarize",
    "survey_record",
    "table1_report",
]
