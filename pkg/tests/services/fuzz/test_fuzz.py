import numpy as np
import pytest

from constants.topology import DiskKind
from dtos.configurations.app import FuzzConfigurationDTO
from dtos.moves import WeakReductionMove
from dtos.surface import DiskSurgery
from services.complex.validate import ComplexValidationService
from services.fuzz.generator import (
    RandomComplexService,
    RandomReductionService,
    free_label,
)
from services.fuzz.run import FuzzService
from services.fuzz.trial import FuzzTrialService
from services.moves.weak_reduce import WeakReduceService
from tests.helpers import shape

CONFIG = FuzzConfigurationDTO(trials=12, seed=3, max_moves=8, jobs=1)


@pytest.mark.parametrize("seed", range(20))
def test_random_complexes_are_valid(seed):
    rng = np.random.default_rng(seed)
    complex_, origin = RandomComplexService(CONFIG).run(rng)
    assert ComplexValidationService().is_valid(complex_), origin


@pytest.mark.parametrize("seed", range(20))
def test_random_reductions_apply(circular, seed):
    rng = np.random.default_rng(seed)
    start = circular(1, 4)
    move = RandomReductionService().run(start, "S", rng)
    assert move is not None
    outcome = WeakReduceService().run(start, move)
    assert outcome.record.j_before == outcome.record.j_after


def test_no_reduction_of_a_fibration(trefoil):
    rng = np.random.default_rng(0)
    assert RandomReductionService().run(trefoil, "S", rng) is None


def test_free_label_skips_used_prefixes(circular):
    start = circular(1, 4)
    assert free_label(start) == "w1"
    move = RandomReductionService().run(start, "S", np.random.default_rng(1))
    reduced = WeakReduceService().run(start, move).complex
    assert free_label(reduced) == "w2"


def test_trials_keep_the_invariants():
    seeds = np.random.SeedSequence(CONFIG.seed).spawn(CONFIG.trials)
    for index, seed in enumerate(seeds):
        result = FuzzTrialService(CONFIG).run(index, seed)
        assert result.violations == (), result.violations


def test_report_is_deterministic():
    first = FuzzService(CONFIG, progress=False).run()
    second = FuzzService(CONFIG, progress=False).run()
    assert first == second
    assert first.violations == ()
    assert sum(first.applied.values()) > 0
    assert first.to_text().startswith("trials: 12\nseed: 3\n")


def test_report_does_not_depend_on_workers():
    serial = FuzzService(CONFIG, progress=False).run()
    parallel = FuzzService(
        CONFIG.model_copy(update={"jobs": 2}), progress=False
    ).run()
    assert serial == parallel


def test_separating_reduction_is_amalgamated_back(circular):
    start = circular(2, 4)
    move = WeakReductionMove(
        thick="S",
        disks_a=[DiskSurgery(target="S")],
        disks_b=[DiskSurgery(
            target="S",
            kind=DiskKind.SEPARATING,
            left=shape(2, k=1),
            right=shape(2),
        )],
        disks_b_on_s1=[DiskSurgery(
            target="S",
            kind=DiskKind.SEPARATING,
            left=shape(1, k=1),
            right=shape(2),
        )],
        a1_minus={"S": ["R"]},
        b1_minus={"S": ["S.0", "S.1"]},
        a2_minus={"S.0": ["S.0"], "S.1": ["S.1"]},
        b2_minus={"S.0": ["R"], "S.1": []},
    )
    reduced = WeakReduceService().run(start, move).complex
    assert len(reduced.thin) == 3

    restored = FuzzTrialService(CONFIG).undo_reduction(start, reduced)
    assert [c.key for c in restored.thin] == ["R"]
    assert len(restored.thick) == 1
    assert restored.thick[0].shape() == start.component("S").shape()


@pytest.mark.parametrize("seed", range(20))
def test_random_reductions_round_trip(circular, seed):
    start = circular(1, 4)
    move = RandomReductionService().run(start, "S", np.random.default_rng(seed))
    reduced = WeakReduceService().run(start, move).complex
    restored = FuzzTrialService(CONFIG).undo_reduction(start, reduced)
    new_thick = [c for c in restored.thick if start.component(c.key) is None]
    assert len(new_thick) == 1
    assert new_thick[0].shape() == start.component("S").shape()


def test_trial_service_can_be_reused():
    seeds = np.random.SeedSequence(CONFIG.seed).spawn(4)
    shared = FuzzTrialService(CONFIG)
    first = [shared.run(index, seed) for index, seed in enumerate(seeds)]
    again = [shared.run(index, seed) for index, seed in enumerate(seeds)]
    fresh = [
        FuzzTrialService(CONFIG).run(index, seed)
        for index, seed in enumerate(seeds)
    ]
    assert first == again == fresh
