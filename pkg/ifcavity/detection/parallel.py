# -*- coding: utf-8 -*-
"""Evaluation of independent work items on a thread pool"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from ..exceptions import InvalidSpec

__author__ = "ifcavity developers"

T = TypeVar("T")
R = TypeVar("R")


def check_threads(threads: int):
    if not (isinstance(threads, int) and threads >= 1):
        tpl = "Invalid value for threads: {} (must be an int >= 1)"
        raise InvalidSpec(tpl.format(threads), field="threads")


def ordered_map(func: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """Apply ``func`` to all ``items`` and return the results in the order of ``items``.

    With ``threads == 1`` everything runs in the calling thread.  The results do not depend on
    ``threads``; work items in pure Python hold the GIL, so more threads do not speed them up.
    """
    check_threads(threads)
    if threads == 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))
