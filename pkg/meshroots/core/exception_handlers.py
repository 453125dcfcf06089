import sys
from typing import TextIO

import structlog
from pydantic import ValidationError

from meshroots.schemas.response_models import StandardResponse

from .exceptions import DomainException
from .response_codes import ResponseCodes

logger = structlog.get_logger(__name__)


def domain_exception_handler(exc: DomainException, stream: TextIO) -> int:
    """
    Handle domain layer exceptions.

    Writes the StandardResponse error document and returns the exit status
    carried by the exception's response code.
    """
    logger.warning(
        "Domain exception occurred",
        code=exc.code,
        message=exc.message,
        details=exc.details
    )
    _write(stream, StandardResponse.error_response(
        code=exc.code,
        message=exc.message,
        data=exc.details if exc.details else None
    ))
    return exc.exit_status


def validation_exception_handler(exc: ValidationError, stream: TextIO) -> int:
    """Handle Pydantic validation errors in the CLI input."""
    validation_errors = exc.errors()

    logger.warning(
        "Validation error occurred",
        validation_errors=len(validation_errors)
    )

    error_details = []
    for error in validation_errors:
        field_name = '.'.join(str(x) for x in error['loc']) if error['loc'] else 'config'
        error_details.append({
            "field": field_name,
            "message": error['msg'],
            "type": error['type']
        })

    _write(stream, StandardResponse.error_response(
        code=ResponseCodes.BAD_REQUEST.code,
        message="Invalid command line input",
        data={"validation_errors": error_details}
    ))
    return ResponseCodes.BAD_REQUEST.exit_status


def general_exception_handler(exc: Exception, stream: TextIO) -> int:
    """Handle unexpected errors."""
    logger.error(
        "Unexpected error occurred",
        error=str(exc),
        error_type=type(exc).__name__,
        exc_info=True
    )
    _write(stream, StandardResponse.error_response(
        code=ResponseCodes.INTERNAL_ERROR.code,
        message=ResponseCodes.INTERNAL_ERROR.message
    ))
    return ResponseCodes.INTERNAL_ERROR.exit_status


def handle_exception(exc: Exception, stream: TextIO | None = None) -> int:
    """Dispatch an exception to its handler and return the exit status."""
    stream = stream or sys.stderr
    if isinstance(exc, DomainException):
        return domain_exception_handler(exc, stream)
    if isinstance(exc, ValidationError):
        return validation_exception_handler(exc, stream)
    return general_exception_handler(exc, stream)


def _write(stream: TextIO, document: StandardResponse):
    stream.write(document.model_dump_json() + "\n")
