"""
DTOs for application configuration settings.
"""
from pydantic import BaseModel, Field


class FuzzConfigurationDTO(BaseModel):
    """
    Defaults of the invariant fuzzer.
    Fields:
        trials (int): Number of independent trials.
        seed (int): Root seed; each trial derives its own sub-seed.
        max_moves (int): Upper bound of random moves per trial.
        max_genus (int): Largest genus used by seed complexes.
        max_winding (int): Largest winding of seed pattern complexes.
        jobs (int): Parallel workers.
    """
    trials: int = Field(1000, ge=1)
    seed: int = Field(7, ge=0)
    max_moves: int = Field(20, ge=0)
    max_genus: int = Field(4, ge=1)
    max_winding: int = Field(3, ge=1)
    jobs: int = Field(1, ge=1)


class AppConfigurationDTO(BaseModel):
    """
    DTO for application configuration.
    Fields:
        log_level (str): loguru level name.
        default_table (str): `.knots` table used when none is given.
        fixture_dir (str): Directory of `.ghs` and `.trace` fixtures.
        fuzz (FuzzConfigurationDTO): Fuzzer defaults.
    """
    log_level: str = "INFO"
    default_table: str = "fixtures/tables/default.knots"
    fixture_dir: str = "fixtures"
    fuzz: FuzzConfigurationDTO = Field(default_factory=FuzzConfigurationDTO)
