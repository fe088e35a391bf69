import pytest
from langchain_core.runnables import RunnableSequence

from matroidpairs.config import RunConfig, load_expected_counts
from matroidpairs.errors import MissingPrerequisiteError
from matroidpairs.generation import Catalogue
from matroidpairs.utils.pool import WorkerPool
from matroidpairs.utils.trackers import RunState
from matroidpairs.workflows import (
    IfcWorkflow,
    PairsWorkflow,
    PopulateWorkflow,
    SearchWorkflow,
    VerificationWorkflow,
    with_error_report,
)

pytestmark = pytest.mark.asyncio


@pytest.fixture
def config() -> RunConfig:
    """Settings from the test environment, capped at eight elements."""
    return RunConfig(max_size=8)


@pytest.fixture
def pool():
    with WorkerPool(1) as pool:
        yield pool


class TestErrorReport:
    async def test_steps_run_in_order(self):
        async def first(inputs):
            inputs["order"] = ["first"]
            return inputs

        async def second(inputs):
            inputs["order"].append("second")
            inputs["success"] = True
            return inputs

        result = await with_error_report(RunnableSequence(first, second)).ainvoke({})
        assert result["order"] == ["first", "second"]
        assert result["success"]
        assert result["report"] == []

    async def test_library_error_stops_the_sequence(self):
        async def reporting(inputs):
            inputs["report"].append("Populate(6): [0, 0, 0, 1, 0, 0, 0, 0]")
            return inputs

        async def failing(inputs):
            raise MissingPrerequisiteError("run populate first")

        async def never(inputs):
            inputs["reached"] = True
            return inputs

        sequence = RunnableSequence(reporting, failing, never)
        result = await with_error_report(sequence).ainvoke({})
        assert not result["success"]
        assert result["error"] == "run populate first"
        assert result["report"] == ["Populate(6): [0, 0, 0, 1, 0, 0, 0, 0]"]
        assert "reached" not in result

    async def test_other_errors_propagate(self):
        async def broken(inputs):
            raise RuntimeError("worker died")

        async def never(inputs):
            return inputs

        with pytest.raises(RuntimeError):
            await with_error_report(RunnableSequence(broken, never)).ainvoke({})


class TestCatalogueWorkflows:
    async def test_populate_then_ifc(self, config, pool):
        expected = load_expected_counts()
        state = RunState()
        result = await PopulateWorkflow(config, pool, state, expected).setup().ainvoke({})
        assert result["success"]
        assert "Populate(8): [0, 0, 0, 0, 3, 0, 0, 0]" in result["report"]
        assert Catalogue.load(config.catalogue_path).completed == {6, 7, 8}
        assert (config.report_path / "summary.json").exists()

        result = await IfcWorkflow(config, pool, state, expected).setup().ainvoke({})
        assert result["success"]
        assert "PopulateIFC(7): [0, 0, 0, 1, 1, 0, 0, 0]" in result["report"]
        assert Catalogue.load(config.ifc_path).counts(8) == [0] * 8

    async def test_populate_resumes(self, config, pool):
        expected = load_expected_counts()
        await PopulateWorkflow(config, pool, RunState(), expected).setup().ainvoke({})
        bigger = RunConfig(max_size=9)
        result = await PopulateWorkflow(bigger, pool, RunState(), expected).setup().ainvoke({})
        assert result["success"]
        assert list(result["timings"]) == [9]

    async def test_count_mismatch_fails(self, config, pool):
        expected = load_expected_counts()
        wrong = expected.model_copy(update={"populate": {**expected.populate, 7: [0] * 8}})
        state = RunState()
        result = await PopulateWorkflow(config, pool, state, wrong).setup().ainvoke({})
        assert not result["success"]
        assert state.failed_checks

    async def test_ifc_needs_the_catalogue(self, config, pool):
        workflow = IfcWorkflow(config, pool, RunState(), load_expected_counts())
        result = await workflow.setup().ainvoke({})
        assert not result["success"]
        assert "run populate first" in result["error"]


class TestSearchWorkflows:
    async def test_unsupported_size(self, config, pool):
        workflow = SearchWorkflow(config, pool, RunState(), load_expected_counts())
        result = await workflow.setup().ainvoke({"size": 13})
        assert not result["success"]

    async def test_search_needs_the_ifc_file(self, config, pool):
        workflow = SearchWorkflow(config, pool, RunState(), load_expected_counts())
        result = await workflow.setup().ainvoke({"size": 14})
        assert not result["success"]
        assert "run ifc first" in result["error"]

    async def test_pairs_need_the_search_reports(self, config, pool):
        workflow = PairsWorkflow(config, pool, RunState(), load_expected_counts())
        result = await workflow.setup().ainvoke({})
        assert not result["success"]
        assert "search --size 14" in result["error"]


class TestVerificationWorkflow:
    async def test_selected_certificates(self, config, pool, temp_dir):
        path = temp_dir / "certificates.txt"
        path.write_text(
            "CERT kind=ring matroid=B1* labels=1,3,12,0,6,11,5,9,13,7,8,14 claim=P*\n"
            "CERT kind=wheel4 matroid=A6* labels=1,0,13,10,4,11,12,5,8,7 claim=Delta4* "
            "central=4,10,11,12\n"
        )
        state = RunState()
        workflow = VerificationWorkflow(config, pool, state)
        result = await workflow.setup().ainvoke({"certificates_path": path})
        assert result["success"], result["report"]
        assert result["report"][-1] == "Verified 4/4"
        written = (config.report_path / "verification.txt").read_text()
        assert "VERIFY ring:B1*->P* pass" in written

    async def test_failed_certificate_is_reported(self, config, pool, temp_dir):
        path = temp_dir / "certificates.txt"
        path.write_text("CERT kind=ring matroid=B1* labels=1,3,12,0,6,11,5,9,13,7,8 claim=P*\n")
        state = RunState()
        workflow = VerificationWorkflow(config, pool, state)
        result = await workflow.setup().ainvoke({"certificates_path": path})
        assert not result["success"]
        assert state.failed_checks == ["ring:B1*->P*: shape"]
