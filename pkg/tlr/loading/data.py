import logging
from pathlib import Path

import pandas as pd

from tlr.constants import MONTHS_PER_YEAR
from tlr.exceptions import ModelValidationError
from tlr.loading.domain import MonthlySeries, QuantityKind

logger = logging.getLogger(__name__)


def load_monthly_series(path: str | Path, kind: QuantityKind | str) -> MonthlySeries:
    """
    Read a two-column (month index, value) text file into a MonthlySeries.

    Columns may be separated by commas or whitespace; lines starting with '#'
    are ignored. Rows are ordered by month index before use.

    Raises:
        ModelValidationError: If the file is missing, malformed or not exactly 12 rows.
    """
    path = Path(path)
    if not path.is_file():
        raise ModelValidationError(
            "monthly data file not found", key="path", got=str(path)
        )

    try:
        frame = pd.read_csv(
            path,
            sep=r"[,\s]+",
            engine="python",
            header=None,
            comment="#",
            names=["month", "value"],
            skip_blank_lines=True,
        )
    except (ValueError, pd.errors.ParserError) as e:
        raise ModelValidationError(
            f"could not parse monthly data file {path}", key="path", details={"error": str(e)}
        ) from e

    if len(frame) != MONTHS_PER_YEAR:
        raise ModelValidationError(
            f"monthly data file {path.name} has the wrong number of rows",
            key="path",
            expected=f"{MONTHS_PER_YEAR} rows",
            got=len(frame),
        )

    months = pd.to_numeric(frame["month"], errors="coerce")
    values = pd.to_numeric(frame["value"], errors="coerce")
    if months.isna().any() or values.isna().any():
        raise ModelValidationError(
            f"monthly data file {path.name} contains non-numeric entries", key="path"
        )
    if sorted(months.astype(int).tolist()) != list(range(1, MONTHS_PER_YEAR + 1)):
        raise ModelValidationError(
            f"monthly data file {path.name} must list months 1..12 once each",
            key="path",
            got=months.astype(int).tolist(),
        )

    ordered = values.to_numpy()[months.to_numpy().argsort(kind="stable")]
    logger.info(f"Loaded {QuantityKind(kind).value} series from {path}")
    return MonthlySeries(
        values=tuple(float(v) for v in ordered), quantity_kind=QuantityKind(kind)
    )
