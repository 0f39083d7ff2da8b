"""
Base class that every classification check inherits from.
Apps declare checks in their checks.py; the registry finds and orders them.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict

from django.db import models


class CheckStatus(models.TextChoices):
    PASS = 'pass', 'Pass'
    FAIL = 'fail', 'Fail'
    NOT_APPLICABLE = 'not_applicable', 'Not applicable'
    # stated by the source argument, consistent with computed data, not proven here
    ASSERTED = 'asserted', 'Asserted'
    INFO = 'info', 'Informational'


# statuses that do not make a report fail
NON_FAILING = (CheckStatus.PASS, CheckStatus.ASSERTED, CheckStatus.INFO)


@dataclass(frozen=True)
class CheckResult:
    claim_id: str
    description: str
    status: CheckStatus
    witness: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status in NON_FAILING

    def as_dict(self) -> Dict[str, Any]:
        return {
            'claim_id': self.claim_id,
            'description': self.description,
            'status': self.status.value,
            'witness': self.witness,
        }


@dataclass(frozen=True)
class CheckConfig:
    """Check configuration."""
    claim_id: str
    description: str
    order: int = 100
    is_enabled: bool = True


class BaseCheck(ABC):
    """
    Abstract base class for all registered checks.

    ``run`` receives a shared context that lazily computes the census,
    invariant records and fixture gluings, so checks never recompute them.
    """

    @property
    @abstractmethod
    def config(self) -> CheckConfig:
        """Return the check configuration."""

    @abstractmethod
    def run(self, context) -> CheckResult:
        """Evaluate the check."""

    def result(self, status: CheckStatus, **witness) -> CheckResult:
        return CheckResult(self.config.claim_id, self.config.description, CheckStatus(status), witness)

    def on_register(self):
        """Hook called when the check is registered."""
