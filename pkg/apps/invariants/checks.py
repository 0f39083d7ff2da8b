from apps.registry.base_check import BaseCheck, CheckConfig, CheckStatus

from .services import adams_lower_bound, cusp_count_upper_bound


class AdamsInequalityCheck(BaseCheck):
    """Every census manifold has volume at least cusps * V3."""

    @property
    def config(self):
        return CheckConfig('adams-inequality', 'Volume is not less than n V3 for every census class', order=50)

    def run(self, context):
        records = context.records.values()
        violations = [
            {'signature': record.signature.text, 'cusps': record.cusp_count, 'volume': record.volume}
            for record in records
            if record.volume < adams_lower_bound(record.cusp_count)
        ]
        return self.result(
            CheckStatus.FAIL if violations else CheckStatus.PASS,
            checked=len(context.records),
            most_cusps=max((record.cusp_count for record in records), default=0),
            cusp_bound=min((cusp_count_upper_bound(record.volume) for record in records), default=0),
            violations=sorted(violations, key=lambda v: v['signature']),
        )
