"""
Central registry that discovers and orders classification checks.
Similar to Django admin's autodiscover: each app listed in
PAPER_CHECK_MODULES may provide a checks.py with BaseCheck subclasses.
"""
import importlib
import inspect
import logging
from typing import Dict, List, Optional, Type

from django.conf import settings

from .base_check import BaseCheck

logger = logging.getLogger(__name__)


class CheckRegistry:
    """
    Singleton registry for all checks.
    """

    _instance = None
    _checks: Dict[str, BaseCheck] = {}
    _initialized = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._checks = {}
            cls._instance._initialized = False
        return cls._instance

    def register(self, check_class: Type[BaseCheck]) -> Type[BaseCheck]:
        """
        Register a check with the registry. Usable as a class decorator.

        Args:
            check_class: The check class to register
        """
        check = check_class()
        claim_id = check.config.claim_id

        if claim_id in self._checks:
            logger.warning(f"Check '{claim_id}' already registered, skipping.")
            return check_class

        self._checks[claim_id] = check
        check.on_register()
        logger.info(f'Registered check: {claim_id} (order {check.config.order})')
        return check_class

    def autodiscover(self) -> None:
        """
        Import 'checks.py' from each app in PAPER_CHECK_MODULES and register
        every concrete BaseCheck subclass defined there.
        """
        if self._initialized:
            return

        for app_name in getattr(settings, 'PAPER_CHECK_MODULES', []):
            try:
                module = importlib.import_module(f'{app_name}.checks')
            except ModuleNotFoundError as e:
                logger.debug(f'No checks found for {app_name}: {e}')
                continue

            for _, attr in inspect.getmembers(module, inspect.isclass):
                if (issubclass(attr, BaseCheck) and
                        not inspect.isabstract(attr) and
                        attr.__module__ == module.__name__):
                    self.register(attr)

        self._initialized = True

    def get_check(self, claim_id: str) -> Optional[BaseCheck]:
        return self._checks.get(claim_id)

    def get_enabled_checks(self) -> List[BaseCheck]:
        """Enabled checks sorted by order, then claim id."""
        enabled = [check for check in self._checks.values() if check.config.is_enabled]
        return sorted(enabled, key=lambda c: (c.config.order, c.config.claim_id))


# Global registry instance
registry = CheckRegistry()
