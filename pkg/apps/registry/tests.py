from django.test import SimpleTestCase

from .base_check import BaseCheck, CheckConfig, CheckResult, CheckStatus
from .check_registry import CheckRegistry, registry


class DisabledCheck(BaseCheck):

    @property
    def config(self):
        return CheckConfig('disabled-example', 'Never runs', order=0, is_enabled=False)

    def run(self, context):
        return self.result(CheckStatus.PASS)


class CheckResultTests(SimpleTestCase):

    def test_non_failing_statuses(self):
        for status, passed in ((CheckStatus.PASS, True), (CheckStatus.ASSERTED, True),
                               (CheckStatus.INFO, True), (CheckStatus.FAIL, False),
                               (CheckStatus.NOT_APPLICABLE, False)):
            self.assertEqual(CheckResult('x', 'x', status).passed, passed)

    def test_as_dict(self):
        result = DisabledCheck().result('fail', value=3)
        self.assertEqual(result.as_dict(), {
            'claim_id': 'disabled-example',
            'description': 'Never runs',
            'status': 'fail',
            'witness': {'value': 3},
        })


class CheckRegistryTests(SimpleTestCase):

    def test_singleton(self):
        self.assertIs(CheckRegistry(), registry)

    def test_autodiscovered_on_ready(self):
        self.assertIsNotNone(registry.get_check('gluing-patterns'))
        self.assertIsNotNone(registry.get_check('constant-prefixes'))

    def test_disabled_checks_skipped(self):
        registry.register(DisabledCheck)
        try:
            self.assertIsNotNone(registry.get_check('disabled-example'))
            self.assertNotIn('disabled-example',
                             [c.config.claim_id for c in registry.get_enabled_checks()])
        finally:
            registry._checks.pop('disabled-example')

    def test_duplicate_registration_keeps_first(self):
        first = registry.get_check('adams-inequality')
        registry.register(type(first))
        self.assertIs(registry.get_check('adams-inequality'), first)
