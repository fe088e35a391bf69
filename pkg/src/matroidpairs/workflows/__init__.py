# workflows/__init__.py
from .catalogue_workflow import IfcWorkflow, PopulateWorkflow
from .runnables import with_error_report
from .search_workflow import PairsWorkflow, SearchWorkflow, search_report_path
from .verification_workflow import VerificationWorkflow

__all__ = [
    "IfcWorkflow",
    "PairsWorkflow",
    "PopulateWorkflow",
    "SearchWorkflow",
    "VerificationWorkflow",
    "search_report_path",
    "with_error_report",
]
