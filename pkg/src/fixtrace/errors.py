"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""


class FixtraceError(Exception):
    code = "error"

    def to_dict(self):
        return {"code": self.code, "message": str(self)}


class MalformedInputError(FixtraceError):
    code = "malformed_input"


class ComplexError(FixtraceError):
    code = "invalid_complex"


class DimensionError(FixtraceError):
    code = "dimension_out_of_range"


class InvalidMapError(FixtraceError):
    code = "invalid_map"


class DisconnectedComplexError(FixtraceError):
    code = "disconnected_complex"


class BasepointError(FixtraceError):
    code = "basepoint_not_fixed"


class GroupContextError(FixtraceError):
    code = "group_context_mismatch"


class InvalidGroupError(FixtraceError):
    code = "invalid_group"


class NotHomomorphismError(FixtraceError):
    code = "not_homomorphism"


class NonVertexFixedPointError(FixtraceError):
    code = "non_vertex_fixed_point"


class IndexComputationError(FixtraceError):
    code = "index_sample_vanished"


class UnsupportedDimensionError(FixtraceError):
    code = "unsupported_dimension"


class RingMismatchError(FixtraceError):
    code = "ring_mismatch"


class LinearityError(FixtraceError):
    code = "linearity_violation"


class NotIdempotentError(FixtraceError):
    code = "not_idempotent"
