"""Shared router dependencies."""

from typing import Optional

from fastapi import Query

from hypalg.services.workbench import AlgebraWorkbench


def get_workbench(seed: Optional[int] = Query(None, description="Seed for randomized checks")) -> AlgebraWorkbench:
    """Dependency providing a workbench bound to the request's seed.

    Returns:
        AlgebraWorkbench: workbench using ``seed`` or the configured default
    """
    return AlgebraWorkbench(seed=seed)
