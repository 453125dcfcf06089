from meshroots.core.response_codes import ResponseCode, ResponseCodes


class DomainException(Exception):
    """
    Base exception for domain errors.

    Usage:
        raise DomainException(ResponseCodes.UNSUPPORTED_DIAGRAM)
        raise DomainException(
            ResponseCodes.SIZE_LIMIT_EXCEEDED,
            custom_message="Component A_{1,1;40} needs 3_000_000 basis paths"
        )
    """

    def __init__(
        self,
        response_code: ResponseCode,
        custom_message: str | None = None,
        details: dict | None = None
    ):
        self.code = response_code.code
        self.message = custom_message or response_code.message
        self.exit_status = response_code.exit_status
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> dict:
        """Convert exception to standardized error document."""
        response = {
            "code": self.code,
            "message": self.message
        }
        if self.details:
            response["details"] = self.details
        return response


class UnsupportedDiagramException(DomainException):
    """Exception for a (family, rank) outside A_n, D_n (n>=4), E_6..E_8."""
    def __init__(self, spec: str):
        super().__init__(
            ResponseCodes.UNSUPPORTED_DIAGRAM,
            custom_message=f"Unsupported diagram: {spec}",
            details={"diagram": spec}
        )


class InvalidTreeException(DomainException):
    """Exception for custom graphs that are not trees."""
    def __init__(self, reason: str):
        super().__init__(
            ResponseCodes.INVALID_TREE,
            custom_message=f"Invalid tree: {reason}"
        )


class WindowExceededException(DomainException):
    """Exception for levels leaving a finite window of the quiver."""
    def __init__(self, level: int, lo: int, hi: int):
        super().__init__(
            ResponseCodes.WINDOW_EXCEEDED,
            custom_message=f"Level {level} outside window {lo}..{hi}",
            details={"level": level, "window": [lo, hi]}
        )


class InvalidHeightException(DomainException):
    """Exception for maps that are not height functions."""
    def __init__(self, reason: str):
        super().__init__(
            ResponseCodes.INVALID_HEIGHT,
            custom_message=f"Invalid height function: {reason}"
        )


class NotSourceOrSinkException(DomainException):
    """Exception for reflection moves at a node of the wrong kind."""
    def __init__(self, node: int, expected: str):
        super().__init__(
            ResponseCodes.NOT_SOURCE_OR_SINK,
            custom_message=f"Node {node} is not a {expected}",
            details={"node": node, "expected": expected}
        )


class InvalidVertexException(DomainException):
    """Exception for (node, level) pairs off the parity component."""
    def __init__(self, node: int, level: int):
        super().__init__(
            ResponseCodes.INVALID_VERTEX,
            custom_message=f"({node},{level}) is not a vertex of the quiver",
            details={"node": node, "level": level}
        )


class SizeLimitExceededException(DomainException):
    """Exception for computations refused by a configured cutoff."""
    def __init__(self, what: str, required: int, cutoff: int):
        super().__init__(
            ResponseCodes.SIZE_LIMIT_EXCEEDED,
            custom_message=f"{what} needs {required}, cutoff is {cutoff}",
            details={"what": what, "required": required, "cutoff": cutoff}
        )


class NotAComplexException(DomainException):
    """Exception for differentials with d∘d != 0."""
    def __init__(self, degree: int):
        super().__init__(
            ResponseCodes.NOT_A_COMPLEX,
            custom_message=f"d_{degree} ∘ d_{degree + 1} is not zero",
            details={"degree": degree}
        )


class KnittingInconsistencyException(DomainException):
    """Exception for a knitting run that fails its closure check."""
    def __init__(self, reason: str, details: dict | None = None):
        super().__init__(
            ResponseCodes.KNITTING_INCONSISTENCY,
            custom_message=f"Knitting inconsistency: {reason}",
            details=details
        )


class NonFiniteTypeException(DomainException):
    """Exception for reflection closures that do not terminate."""
    def __init__(self, limit: int):
        super().__init__(
            ResponseCodes.NON_FINITE_TYPE,
            custom_message=f"Root closure exceeded {limit} vectors",
            details={"limit": limit}
        )


class NotWellDefinedException(DomainException):
    """Exception for a Coxeter matrix that does not fit all classes."""
    def __init__(self, reason: str):
        super().__init__(
            ResponseCodes.NOT_WELL_DEFINED,
            custom_message=reason
        )


class RootMismatchException(DomainException):
    """Exception listing the symmetric difference of class and root sets."""
    def __init__(self, missing: list, extra: list):
        super().__init__(
            ResponseCodes.ROOT_MISMATCH,
            details={"missing": missing, "extra": extra}
        )
