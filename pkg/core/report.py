#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Report Types

Result types shared by the monogenity pipelines, the family verdicts and the
exporters: the tri-state value, verdicts, reason codes and MonogenityReport.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional


class Tri(Enum):
    """
    Tri-state answer. UNKNOWN is returned when a budget ran out.
    """
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag):
        return cls.YES if flag else cls.NO


class Verdict(Enum):
    MONOGENIC = "Monogenic"
    NOT_MONOGENIC = "NotMonogenic"
    INCONCLUSIVE = "Inconclusive"
    HYPOTHESIS_VIOLATED = "HypothesisViolated"

    @property
    def is_decisive(self):
        return self in (Verdict.MONOGENIC, Verdict.NOT_MONOGENIC)


class ReasonCode(Enum):
    """
    Which condition of the three-condition characterization failed, plus
    reducibility of the composition.
    """
    BASE_NOT_MONOGENIC = "BaseNotMonogenic"
    PRIME_POWER_OBSTRUCTION = "PrimePowerObstruction"
    CONSTANT_TERM_NOT_SQUAREFREE = "ConstantTermNotSquarefree"
    REDUCIBLE = "Reducible"


@dataclass
class MonogenityReport:
    """
    Outcome of one analysis of f(x^k).

    Attributes:
        polynomial: The base polynomial f (an IntPoly)
        k: Composition exponent
        verdict: Overall verdict
        witness: Prime exhibiting the failure (NotMonogenic only, may be
            None for Reducible)
        reason: Failing condition (NotMonogenic only)
        cause: Why no decision was reached (Inconclusive / HypothesisViolated)
        monogenic_base: Condition (1); None when not evaluated
        prime_checks: Condition (2) per prime p | k, True meaning "passes"
        f0_squarefree: Condition (3); None when not evaluated
        irreducibility: IrreducibilityResult for f(x^k), if computed
        notes: Free-form remarks attached by the pipeline
        timings: Stage name -> seconds (only filled on request)
        method: Which pipeline produced the report
    """
    polynomial: object
    k: int
    verdict: Verdict
    witness: Optional[int] = None
    reason: Optional[ReasonCode] = None
    cause: Optional[str] = None
    monogenic_base: Optional[Tri] = None
    prime_checks: Dict[int, bool] = field(default_factory=dict)
    f0_squarefree: Optional[Tri] = None
    irreducibility: Optional[object] = None
    notes: List[str] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    method: str = "fast"

    @property
    def is_decisive(self):
        return self.verdict.is_decisive

    def check_invariants(self):
        """
        Check the consistency rules between verdict and condition breakdown.

        Returns:
            True if the report is consistent, False otherwise
        """
        if self.verdict is Verdict.MONOGENIC:
            if self.method != "fast":
                return self.witness is None and self.reason is None
            conditions_pass = (
                self.monogenic_base is Tri.YES
                and all(self.prime_checks.values())
                and (self.k == 1 or self.f0_squarefree is Tri.YES)
            )
            return conditions_pass and self.irreducibility is not None
        if self.verdict is Verdict.NOT_MONOGENIC:
            if self.reason is ReasonCode.REDUCIBLE:
                return True
            if self.method != "fast":
                return self.witness is not None
            return self.reason is not None and self.witness is not None
        return self.witness is None
