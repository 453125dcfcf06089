"""
Run context for logging.

Bound once per CLI command and merged into every structlog event emitted
while the command runs.

Usage:
    # In the CLI entry point:
    bind_run_context(command="verify", diagram="D4", suites="all")

    # In any service function:
    logger.info("Component built", i=1, j=2, l=6)
"""
import hashlib

import structlog


def run_key(command: str, **options) -> str:
    """Deterministic identifier of a run, derived from its options."""
    payload = command + "|" + "|".join(
        f"{key}={options[key]}" for key in sorted(options)
    )
    return hashlib.sha1(payload.encode("utf-8")).hexdigest()[:12]


def bind_run_context(command: str, diagram: str | None = None, **options) -> str:
    """Bind command/diagram/run_key into the structlog context."""
    key = run_key(command, diagram=diagram, **options)
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(
        command=command,
        diagram=diagram,
        run_key=key,
    )
    return key
