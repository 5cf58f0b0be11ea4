from typing import List, Optional, Tuple

import numpy as np

from constants.topology import BodyLabel, DiskKind, Topology
from dtos.configurations.app import FuzzConfigurationDTO
from dtos.moves import WeakReductionMove
from dtos.splitting_complex import SplittingComplex
from dtos.surface import DiskSurgery, Shape
from errors.moves import MoveError
from services.compression_body.handles import handle_index, is_trivial
from services.constructions.circular import CircularSplittingService
from services.constructions.pattern import PatternSplittingService
from services.fuzz.abstraction import IFuzzService
from services.moves.inflate import InflateService
from services.moves.weak_reduce import WeakReduceService

from start_utils import logger


def pick(rng: np.random.Generator, items: List):
    return items[int(rng.integers(0, len(items)))]


def free_label(complex_: SplittingComplex) -> str:
    keys = [component.key for component in complex_.components()]
    index = 1
    while any(key.startswith(f"w{index}.") for key in keys):
        index += 1
    return f"w{index}"


def non_separating(target: str, count: int) -> Tuple[DiskSurgery, ...]:
    return tuple(DiskSurgery(target=target) for _ in range(count))


class RandomReductionService(IFuzzService):
    """
    Draw a random weak reduction of a thick surface that is realizable by
    construction: `a` non-separating A disks and either `b` non-separating
    B disks, or one separating B disk cutting off a closed handlebody of
    genus g2 <= min(j(B), g - a).
    """

    def run(
        self,
        complex_: SplittingComplex,
        thick: str,
        rng: np.random.Generator,
    ) -> Optional[WeakReductionMove]:
        surface = complex_.component(thick)
        body_a = complex_.body(thick, BodyLabel.A)
        body_b = complex_.body(thick, BodyLabel.B)
        if surface is None or body_a is None or body_b is None:
            return None
        if is_trivial(body_a) or is_trivial(body_b):
            return None

        genus, closed = surface.genus, surface.boundary_total == 0
        max_a = min(handle_index(body_a), genus)
        if max_a < 1:
            return None
        a = int(rng.integers(1, max_a + 1))
        max_b = min(handle_index(body_b), genus - a - (1 if closed else 0))
        if max_b < 1:
            return None
        b = int(rng.integers(1, max_b + 1))
        label = free_label(complex_)

        if rng.random() >= 0.3:
            return WeakReductionMove(
                thick=thick,
                disks_a=non_separating(thick, a),
                disks_b=non_separating(thick, b),
                label=label,
            )

        left, right = (
            f"{thick}{Topology.LEFT_SUFFIX}",
            f"{thick}{Topology.RIGHT_SUFFIX}",
        )
        handlebody = Shape(genus=b)
        return WeakReductionMove(
            thick=thick,
            disks_a=non_separating(thick, a),
            disks_b=(DiskSurgery(
                target=thick,
                kind=DiskKind.SEPARATING,
                left=Shape(genus=genus - b, boundary=surface.boundary),
                right=handlebody,
            ),),
            disks_b_on_s1=(DiskSurgery(
                target=thick,
                kind=DiskKind.SEPARATING,
                left=Shape(genus=genus - a - b, boundary=surface.boundary),
                right=handlebody,
            ),),
            a1_minus={thick: list(body_a.minus_keys())},
            b1_minus={thick: [left, right]},
            a2_minus={left: [left], right: [right]},
            b2_minus={left: list(body_b.minus_keys()), right: []},
            label=label,
        )


class RandomComplexService(IFuzzService):
    """
    Random valid complex: a circular or pattern splitting with random
    genera, followed by a few random weak reductions and inflations.
    Validity holds by construction since only moves are applied.
    """

    def __init__(self, config: FuzzConfigurationDTO) -> None:
        super().__init__()
        self.logger = logger
        self.config = config
        self.circular = CircularSplittingService()
        self.pattern = PatternSplittingService()
        self.reductions = RandomReductionService()
        self.weak_reduce = WeakReduceService()
        self.inflate = InflateService()

    def run(
        self,
        rng: np.random.Generator,
    ) -> Tuple[SplittingComplex, str]:
        genus_thin = int(rng.integers(0, self.config.max_genus))
        genus_thick = int(rng.integers(genus_thin, self.config.max_genus + 1))
        if rng.random() < 0.5:
            complex_ = self.circular.run(genus_thin, genus_thick)
            origin = f"circular({genus_thin},{genus_thick})"
        else:
            winding = int(rng.integers(1, self.config.max_winding + 1))
            complex_ = self.pattern.run(genus_thin, genus_thick, winding)
            origin = f"pattern({genus_thin},{genus_thick},{winding})"

        steps: List[str] = []
        for _ in range(int(rng.integers(0, 4))):
            try:
                if rng.random() < 0.6:
                    thick = pick(rng, [c.key for c in complex_.thick])
                    move = self.reductions.run(complex_, thick, rng)
                    if move is None:
                        continue
                    complex_ = self.weak_reduce.run(complex_, move).complex
                    steps.append("weak_reduce")
                else:
                    thin = pick(rng, [c.key for c in complex_.thin])
                    complex_ = self.inflate.run(complex_, thin).complex
                    steps.append("inflate")
            except MoveError as error:
                self.logger.debug(f"seed step rejected: {error.message}")
        if steps:
            origin = f"{origin} + {','.join(steps)}"
        return complex_, origin
