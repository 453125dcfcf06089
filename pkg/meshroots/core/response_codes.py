from typing import NamedTuple


class ResponseCode(NamedTuple):
    """
    Response code structure with code, message, and process exit status.

    Attributes:
        code: Unique identifier for the response
        message: Default human-readable message
        exit_status: Process exit status to return from the CLI
    """
    code: str
    message: str
    exit_status: int = 0


class ResponseCodes:
    """
    Centralized response code registry for meshroots.

    Format for domain codes: <DOMAIN>_<NUMBER>
    - DOMAIN: module identifier (DYN, HAT, LA, DG, MESH, ROOT, CLI)
    - NUMBER: Sequential 3-digit number (001, 002, etc.)

    Exit statuses follow the CLI contract:
    0 pass / 1 claim failure or implementation bug / 2 usage / 3 resource.

    Usage:
        raise DomainException(ResponseCodes.UNSUPPORTED_DIAGRAM)
    """

    # ==================== STANDARD CODES ====================
    SUCCESS = ResponseCode("00", "Operation successful", 0)
    CLAIM_FAILED = ResponseCode("01", "One or more checks failed", 1)
    BAD_REQUEST = ResponseCode("02", "Invalid run configuration", 2)
    INTERNAL_ERROR = ResponseCode("500", "Internal error", 1)

    # ==================== DYNKIN DOMAIN (DYN) ====================
    UNSUPPORTED_DIAGRAM = ResponseCode(
        "DYN_001",
        "Unsupported diagram",
        2
    )
    INVALID_TREE = ResponseCode(
        "DYN_002",
        "Graph is not a tree",
        2
    )

    # ==================== TRANSLATION QUIVER DOMAIN (HAT) ====================
    WINDOW_EXCEEDED = ResponseCode(
        "HAT_001",
        "Level leaves the quiver window",
        2
    )
    INVALID_HEIGHT = ResponseCode(
        "HAT_002",
        "Invalid height function",
        2
    )
    NOT_SOURCE_OR_SINK = ResponseCode(
        "HAT_003",
        "Node is not a source or sink of the orientation",
        2
    )
    INVALID_VERTEX = ResponseCode(
        "HAT_004",
        "Vertex does not belong to the quiver",
        2
    )

    # ==================== LINEAR ALGEBRA DOMAIN (LA) ====================
    SIZE_LIMIT_EXCEEDED = ResponseCode(
        "LA_001",
        "Size cutoff exceeded",
        3
    )
    NOT_A_COMPLEX = ResponseCode(
        "LA_002",
        "Consecutive differentials do not compose to zero",
        1
    )

    # ==================== MESH CATEGORY DOMAIN (MESH) ====================
    KNITTING_INCONSISTENCY = ResponseCode(
        "MESH_001",
        "Knitting closure failed",
        1
    )

    # ==================== ROOT SYSTEM DOMAIN (ROOT) ====================
    NON_FINITE_TYPE = ResponseCode(
        "ROOT_001",
        "Reflection closure exceeded the safety bound",
        2
    )
    NOT_WELL_DEFINED = ResponseCode(
        "ROOT_002",
        "Coxeter element is not well defined on the knitted classes",
        1
    )
    ROOT_MISMATCH = ResponseCode(
        "ROOT_003",
        "Knitted classes differ from the oracle root system",
        1
    )
