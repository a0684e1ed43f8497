"""Shared utility functions for the transport simulator"""
import logging
import os
from typing import Iterable

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12


def format_number(value: float) -> str:
    """Format a number with 12 significant digits in scientific notation

    Locale independent.

    Examples:
        1.0 -> "1.00000000000e+00"
        -0.296296 -> "-2.96296000000e-01"
    """
    return f"{float(value):.{SIGNIFICANT_DIGITS - 1}e}"


def round_significant(value: float | None) -> float | None:
    """Round to 12 significant digits for JSON output (None passes through)"""
    if value is None:
        return None
    return float(format_number(value))


def dedupe_preserving_order(items: Iterable[str]) -> tuple[list[str], list[str]]:
    """Split items into first occurrences and repeated entries

    Returns:
        (unique items in original order, duplicates in order seen)
    """
    seen = set()
    unique, duplicates = [], []
    for item in items:
        if item in seen:
            duplicates.append(item)
            continue
        seen.add(item)
        unique.append(item)
    return unique, duplicates


def atomic_write_text(filepath: str, text: str):
    """Write text with atomic replace to prevent half-written outputs

    Args:
        filepath: Target file path
        text: Full file contents (written with LF line endings)

    Raises:
        OSError: If the write or the rename fails
    """
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)

    temp_file = filepath + '.tmp'
    try:
        with open(temp_file, 'w', newline='\n', encoding='utf-8') as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())

        os.replace(temp_file, filepath)
        logger.debug(f"💾 Saved {filepath}")
    except OSError as e:
        logger.error(f"Failed to save {filepath}: {e}")
        if os.path.exists(temp_file):
            try:
                os.remove(temp_file)
            except OSError:
                pass
        raise
