"""
Worker pool helpers shared by the enumeration and decision engines.
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor

from django.conf import settings

logger = logging.getLogger(__name__)


def worker_count():
    """Number of workers allowed by CTX_THREADS (0 means one per CPU)."""
    configured = 0
    if settings.configured:
        configured = getattr(settings, "CTX_THREADS", 0) or 0
    if configured > 0:
        return configured
    return os.cpu_count() or 1


def parallel_map(func, items):
    """Map func over items on the worker pool, keeping input order."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [func(item) for item in items]
    logger.debug("Running %d tasks on %d workers", len(items), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
