from django.conf import settings

from apps.registry.base_check import BaseCheck, CheckConfig, CheckStatus

from .services import (
    ConstantName,
    EvaluationMethod,
    constant,
    terms_for_tolerance,
)

PREFIXES = (
    ('2V3', 2, ConstantName.V3, '2.02'),
    ('V8', 1, ConstantName.V8, '3.66'),
    ('2V8', 2, ConstantName.V8, '7.32'),
)
AGREEMENT = 1e-12


class ConstantPrefixCheck(BaseCheck):

    @property
    def config(self):
        return CheckConfig('constant-prefixes', 'Printed prefixes 2.02, 3.66 and 7.32 of 2V3, V8 and 2V8', order=1)

    def run(self, context):
        printed, wrong = {}, []
        for label, multiple, name, prefix in PREFIXES:
            text = f'{multiple * constant(name).value:.12f}'
            printed[label] = text
            if not text.startswith(prefix):
                wrong.append(label)
        return self.result(CheckStatus.FAIL if wrong else CheckStatus.PASS, printed=printed, wrong=wrong)


class SeriesAgreementCheck(BaseCheck):

    @property
    def config(self):
        return CheckConfig('series-agreement', 'V8 from the Lobachevsky function agrees with the alternating series', order=2)

    def run(self, context):
        by_function = constant(ConstantName.V8, EvaluationMethod.LOBACHEVSKY_SERIES).value
        by_series = constant(ConstantName.V8, EvaluationMethod.ALTERNATING_SERIES).value
        difference = abs(by_function - by_series)
        status = CheckStatus.PASS if difference < AGREEMENT else CheckStatus.FAIL
        return self.result(
            status,
            lobachevsky=by_function,
            alternating=by_series,
            terms=terms_for_tolerance(settings.HYPERVOL_SERIES_TOLERANCE),
            difference=difference,
        )
