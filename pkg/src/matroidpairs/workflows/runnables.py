# workflows/runnables.py
from typing import Any, Dict

from langchain_core.runnables import Runnable, RunnableLambda, RunnableSequence

from ..errors import MatroidError
from ..utils.logging import setup_logger

logger = setup_logger()


async def _open_report(inputs: Dict[str, Any]) -> Dict[str, Any]:
    inputs.setdefault("report", [])
    return inputs


async def _record_error(inputs: Dict[str, Any]) -> Dict[str, Any]:
    error = inputs["error"]
    logger.error(f"Workflow stopped: {error}")
    inputs["error"] = str(error)
    inputs["success"] = False
    return inputs


def with_error_report(sequence: RunnableSequence) -> Runnable:
    """Open the ``report`` list before ``sequence`` runs.

    A library error raised by any step ends the run with ``success`` False and
    the message under ``error``; the report lines written so far are kept.
    """
    return (RunnableLambda(_open_report) | sequence).with_fallbacks(
        [RunnableLambda(_record_error)],
        exceptions_to_handle=(MatroidError,),
        exception_key="error",
    )
