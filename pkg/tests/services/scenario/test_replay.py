import shutil

import pytest

from dtos.moves import MoveRecord
from errors.scenario import ScenarioError
from repositories.trace import TraceRepository
from services.scenario.replay import SCENARIOS, ReplayScenarioService


@pytest.fixture
def replay(fixtures_dir):
    return ReplayScenarioService(str(fixtures_dir))


@pytest.mark.parametrize("name", SCENARIOS)
def test_scripted_proofs_pass(replay, name):
    report = replay.run(name)
    assert report.passed, report.failures
    assert report.lines


def test_incompressible_reduction_reaches_a_handlebody_and_back(replay):
    report = replay.run("lemma-incompressible")
    assert any("h=6 j=4" in line for line in report.lines)
    assert report.lines[-1].split()[-4:-2] == ["h=4", "j=4"]


@pytest.fixture
def scratch(tmp_path, fixtures_dir):
    (tmp_path / "scenarios").mkdir()
    shutil.copy(fixtures_dir / "circular_1_2.ghs", tmp_path)
    shutil.copy(fixtures_dir / "corrupted.ghs", tmp_path)
    return tmp_path


def write(scratch, name, text):
    (scratch / "scenarios" / f"{name}.trace").write_text(text)
    return ReplayScenarioService(str(scratch))


def test_wrong_claim_is_a_failure(scratch):
    replay = write(scratch, "claim", "start|circular_1_2\ncheck|h|4\n")
    report = replay.run("claim")
    assert not report.passed
    assert report.failures == ("line 2: expected h = 4, got 2",)


def test_recorded_values_are_compared(scratch):
    text = (
        "start|circular_1_2\n"
        'inflate|{"thin":"R"}|2|2|2|3\n'
    )
    report = write(scratch, "recorded", text).run("recorded")
    assert "recorded h/j (2, 2, 2, 3)" in report.failures[0]


def test_refused_move_stops_the_replay(scratch):
    text = (
        "start|circular_1_2\n"
        'amalgamate|{"thin":["R"]}\n'
        "check|h|0\n"
    )
    report = write(scratch, "refused", text).run("refused")
    assert len(report.failures) == 1
    assert "with itself" in report.failures[0]


def test_stabilization_is_allowed_to_change_the_index(scratch):
    text = 'start|circular_1_2\nstabilize|{"thick":"S"}\ncheck|j|4\n'
    assert write(scratch, "stab", text).run("stab").passed


def test_invalid_start_complex(scratch):
    report = write(scratch, "bad", "start|corrupted\n").run("bad")
    assert "start complex is invalid" in report.failures[0]


@pytest.mark.parametrize("text, message", [
    ("check|h|1\n", "no start complex"),
    ("start|circular_1_2\nteleport|{}\n", "unknown step 'teleport'"),
    ("start|circular_1_2\npiece|a\n", "no piece 'a'"),
    ("start|circular_1_2\ncheck|g|1\n", r"check\|h\|<n>"),
    ('start|circular_1_2\ninflate|{"surface":"R"}\n', "bad arguments"),
])
def test_malformed_scripts(scratch, text, message):
    with pytest.raises(ScenarioError, match=message):
        write(scratch, "broken", text).run("broken")


def test_unknown_scenario(replay):
    with pytest.raises(ScenarioError, match="unknown scenario"):
        replay.run("thm-nonexistent")


def test_replay_records_every_move(replay, fixtures_dir):
    report = replay.run("lemma-incompressible")
    records = [MoveRecord.from_line(line) for line in report.records]
    assert [record.kind for record in records] == [
        "weak_reduce", "amalgamate", "amalgamate",
    ]
    assert [(r.h_before, r.h_after, r.j_before, r.j_after) for r in records] == [
        (4, 6, 4, 4), (6, 4, 4, 4), (4, 4, 4, 4),
    ]
    steps = TraceRepository(fixtures_dir / "scenarios").get(
        "lemma-incompressible"
    )
    assert [s.expected for s in steps if s.expected is not None] == [
        (4, 6, 4, 4), (6, 4, 4, 4), (4, 4, 4, 4),
    ]


def test_records_replay_as_a_script(replay, scratch, fixtures_dir):
    shutil.copy(fixtures_dir / "circular_2_4.ghs", scratch)
    report = replay.run("lemma-incompressible")
    text = "start|circular_2_4\n" + "\n".join(report.records) + "\n"
    rerun = write(scratch, "rerun", text).run("rerun")
    assert rerun.passed, rerun.failures
    assert rerun.records == report.records
