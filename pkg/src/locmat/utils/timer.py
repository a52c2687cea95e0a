import logging
import time
from contextlib import contextmanager
from typing import Generator, List, Optional

logger = logging.getLogger(__name__)


@contextmanager
def measure_time(label: str, sink: Optional[List[float]] = None) -> Generator[None, None, None]:
    """
    Log the wall time of a block at INFO, using time.perf_counter.

    When ``sink`` is given the elapsed seconds are appended to it as well.
    Timings go to the log only; command output stays reproducible.

    Usage:
    with measure_time("suite groups"):
        run_suite(...)
    """
    start_time = time.perf_counter()
    try:
        yield
    finally:
        elapsed_time = time.perf_counter() - start_time
        if sink is not None:
            sink.append(elapsed_time)
        logger.info(f"{label}: {elapsed_time:.6f} seconds")
