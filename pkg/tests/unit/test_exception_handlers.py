import io
import json

import pytest
from pydantic import ValidationError

from meshroots.core.exception_handlers import handle_exception
from meshroots.core.exceptions import (
    DomainException,
    SizeLimitExceededException,
    UnsupportedDiagramException,
)
from meshroots.core.response_codes import ResponseCodes
from meshroots.schemas.run_config import RunConfig


class TestExceptionHandlers:
    """Test suite for CLI error documents"""

    def test_domain_exception(self):
        """Test domain errors carry their code and exit status"""
        stream = io.StringIO()

        status = handle_exception(UnsupportedDiagramException("B2"), stream)

        document = json.loads(stream.getvalue())
        assert status == 2
        assert document == {
            "code": "DYN_001",
            "message": "Unsupported diagram: B2",
            "data": {"diagram": "B2"},
        }

    def test_resource_exception(self):
        """Test cutoff errors exit with status 3"""
        stream = io.StringIO()

        status = handle_exception(SizeLimitExceededException("basis", 10, 5), stream)

        assert status == 3
        assert json.loads(stream.getvalue())["code"] == "LA_001"

    def test_validation_error(self):
        """Test invalid input exits with status 2"""
        stream = io.StringIO()
        with pytest.raises(ValidationError) as exc_info:
            RunConfig(command="table")

        status = handle_exception(exc_info.value, stream)

        document = json.loads(stream.getvalue())
        assert status == 2
        assert document["code"] == ResponseCodes.BAD_REQUEST.code
        assert document["data"]["validation_errors"]

    def test_unexpected_error(self):
        """Test unexpected errors are internal errors"""
        stream = io.StringIO()

        status = handle_exception(RuntimeError("boom"), stream)

        document = json.loads(stream.getvalue())
        assert status == 1
        assert document["code"] == "500"
        assert "boom" not in document["message"]

    def test_domain_exception_to_dict(self):
        """Test the standardized error dictionary"""
        exc = DomainException(ResponseCodes.NOT_A_COMPLEX, custom_message="d_1 ∘ d_2 is not zero")

        assert exc.to_dict() == {"code": "LA_002", "message": "d_1 ∘ d_2 is not zero"}
        assert exc.exit_status == 1
