from typing import Generic, Optional, TypeVar

from pydantic import BaseModel, ConfigDict, Field

T = TypeVar('T')


class StandardResponse(BaseModel, Generic[T]):
    """
    Standard envelope for CLI error documents.

    Written to stderr on failure:
    {
        "code": "LA_001",
        "message": "Human-readable message",
        "data": {...}
    }

    Usage:
        from meshroots.core.response_codes import ResponseCodes

        return StandardResponse.error_response(
            code=ResponseCodes.SIZE_LIMIT_EXCEEDED.code,
            message="basis of A_{1,1;40} needs 3000000, cutoff is 200000",
            data={"required": 3000000}
        )
    """
    code: str = Field(..., description="Response code (e.g., '00', 'LA_001')")
    message: str = Field(..., description="Human-readable message")
    data: Optional[T] = Field(None, description="Response payload")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "code": "HAT_001",
                "message": "Level 7 outside window 0..4",
                "data": {"level": 7, "window": [0, 4]}
            }
        }
    )

    @classmethod
    def error_response(cls, code: str, message: str, data: Optional[T] = None) -> 'StandardResponse[T]':
        """
        Helper method for creating error documents.

        Args:
            code: Error code (e.g., "DYN_001")
            message: Error message
            data: Optional error details

        Returns:
            StandardResponse with error code
        """
        return cls(code=code, message=message, data=data)
