import numpy as np
import numpy.typing as npt

from tlr.exceptions import ModelValidationError


def convergence_error(candidate: npt.ArrayLike, reference: npt.ArrayLike) -> float:
    """Relative L2 error ||candidate - reference|| / ||reference||."""
    cand = np.atleast_1d(np.asarray(candidate, dtype=float))
    ref = np.atleast_1d(np.asarray(reference, dtype=float))
    if cand.shape != ref.shape:
        raise ModelValidationError(
            "series lengths differ", key="candidate", expected=str(ref.shape), got=str(cand.shape)
        )
    norm = float(np.linalg.norm(ref))
    if norm == 0.0:
        raise ModelValidationError("reference series has zero norm", key="reference")
    return float(np.linalg.norm(cand - ref)) / norm
