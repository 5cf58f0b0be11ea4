from collections import Counter
from typing import List

import numpy as np
import tqdm
from joblib import Parallel, delayed

from dtos.configurations.app import FuzzConfigurationDTO
from dtos.fuzz import FuzzReport, TrialResult
from services.fuzz.abstraction import IFuzzService
from services.fuzz.trial import FuzzTrialService

from start_utils import logger


def run_trial(
    index: int,
    seed: np.random.SeedSequence,
    config: FuzzConfigurationDTO,
) -> TrialResult:
    return FuzzTrialService(config).run(index, seed)


class FuzzService(IFuzzService):
    """
    Run independent fuzz trials, serially or in parallel with joblib.
    Trial i always draws from the i-th child of SeedSequence(seed), so the
    report depends only on the configuration and not on the worker count.
    """

    def __init__(self, config: FuzzConfigurationDTO, progress: bool = True):
        super().__init__()
        self.logger = logger
        self.config = config
        self.progress = progress

    def run(self) -> FuzzReport:
        config = self.config
        seeds = np.random.SeedSequence(config.seed).spawn(config.trials)
        self.logger.info(
            f"fuzzing {config.trials} trials with seed {config.seed} "
            f"on {config.jobs} workers"
        )
        tasks = (
            delayed(run_trial)(index, seed, config)
            for index, seed in enumerate(seeds)
        )
        results: List[TrialResult] = []
        with tqdm.tqdm(
            total=config.trials,
            desc="Fuzzing",
            disable=not self.progress,
        ) as pbar:
            for result in Parallel(n_jobs=config.jobs, return_as="generator")(
                tasks
            ):
                results.append(result)
                pbar.update(1)

        applied: Counter = Counter()
        rejected: Counter = Counter()
        violations: List[str] = []
        for result in sorted(results, key=lambda item: item.index):
            applied.update(result.applied)
            rejected.update(result.rejected)
            violations.extend(result.violations)
        report = FuzzReport(
            trials=config.trials,
            seed=config.seed,
            max_moves=config.max_moves,
            applied=dict(applied),
            rejected=dict(rejected),
            handlebody_trials=sum(1 for r in results if r.handlebody),
            round_trips=sum(r.round_trips for r in results),
            violations=tuple(violations),
        )
        self.logger.info(f"fuzzing found {len(violations)} violations")
        return report
