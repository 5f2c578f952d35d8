"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` that the CLI reports.
"""

from __future__ import annotations


class WreathZetaError(Exception):
    code = "error"


class DegreeMismatch(WreathZetaError):
    code = "degree_mismatch"


class OrderExceedsBound(WreathZetaError):
    code = "order_exceeds_bound"


class NotFaithful(WreathZetaError):
    code = "not_faithful"


class NotTransitive(WreathZetaError):
    code = "not_transitive"


class NotPerfect(WreathZetaError):
    code = "not_perfect"


class UnknownPartition(WreathZetaError):
    code = "unknown_partition"


class NumericalDegreeExtraction(WreathZetaError):
    code = "numerical_degree_extraction"


class MultiplicityOverflow(WreathZetaError):
    code = "multiplicity_overflow"


class NonIntegralCoefficient(WreathZetaError):
    code = "non_integral_coefficient"


class InternalStabilizationFailure(WreathZetaError):
    code = "internal_stabilization_failure"


class IllConditioned(WreathZetaError):
    code = "ill_conditioned"


class BadBracket(WreathZetaError):
    code = "bad_bracket"


class MultiplicityDetectionFailed(WreathZetaError):
    code = "multiplicity_detection_failed"


class RootTrackingAmbiguity(WreathZetaError):
    code = "root_tracking_ambiguity"


class UnknownGroup(WreathZetaError):
    code = "unknown_group"
