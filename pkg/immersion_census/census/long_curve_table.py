from collections import Counter

from immersion_census.encodings.y_method import u_sigma_arrays, y_genus_array
from immersion_census.utils.custom_logger import CustomLogger, loggable

logger = CustomLogger.get_logger()


@loggable
def long_curve_table(n: int) -> list[int]:
    """Number of long curves (rooted one-component maps) with n crossings, per genus.

    Every σ = β·ξ of the gauge-fixed coset is one long curve; the row sums to 2ⁿn!.

    Args:
        n (int): Number of crossings, n ≥ 1.

    Returns:
        list[int]: Counts for g = 0, 1, … up to the largest genus reached.

    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    counts = Counter(y_genus_array(sigma, n) for sigma in u_sigma_arrays(n))
    row = [counts[g] for g in range(max(counts) + 1)]
    logger.debug(f"Long curves n={n}: {row}")
    return row
