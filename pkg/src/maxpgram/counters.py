"""Global predicate-call counters.

The complexity claims are tested by counting elementary geometric
predicate evaluations rather than wall time.  Counting is process-global
and cheap; tests reset() around the region they measure.
"""
from __future__ import annotations


class Counters:
    __slots__ = ("classify", "orient", "portion")

    def __init__(self) -> None:
        self.classify = 0
        self.orient = 0
        self.portion = 0

    def reset(self) -> None:
        self.classify = 0
        self.orient = 0
        self.portion = 0

    def total(self) -> int:
        return self.classify + self.orient + self.portion

    def snapshot(self) -> dict:
        return {
            "classify": self.classify,
            "orient": self.orient,
            "portion": self.portion,
            "total": self.total(),
        }


COUNT = Counters()
