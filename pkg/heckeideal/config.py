import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict


@dataclass
class HarnessConfig:
    # Element engine
    root_cap: int = 10000  # env override: HECKEIDEAL_ROOT_CAP

    # Exhaustive checks are only run when |W| stays under this gate
    max_order: int = 1200  # env override: HECKEIDEAL_MAX_ORDER

    # Reports keep the first k failing witnesses
    witness_limit: int = 5  # env override: HECKEIDEAL_WITNESS_LIMIT

    # r-table solver budget; larger unknown sets fail fast with SolverIncomplete
    solver_max_unknowns: int = 60  # env override: HECKEIDEAL_SOLVER_MAX_UNKNOWNS
    solver_max_branches: int = 256

    # R-tilde extraction: "signed" (eps eps q^-1 R) or "unsigned" (q^-1 R)
    normalization: str = "signed"

    # Output
    output_dir: Path = field(default_factory=lambda: Path("out"))
    output_formats: set = field(default_factory=lambda: {"json"})  # env override: HECKEIDEAL_OUTPUT_FORMATS=csv,json
    include_timing: bool = False  # timing breaks byte-identical reruns

    @classmethod
    def from_env(cls, **overrides: Any) -> "HarnessConfig":
        """Build a config from defaults, environment, then explicit overrides."""
        cfg = cls()
        cfg.root_cap = int(os.environ.get("HECKEIDEAL_ROOT_CAP", cfg.root_cap))
        cfg.max_order = int(os.environ.get("HECKEIDEAL_MAX_ORDER", cfg.max_order))
        cfg.witness_limit = int(os.environ.get("HECKEIDEAL_WITNESS_LIMIT", cfg.witness_limit))
        cfg.solver_max_unknowns = int(
            os.environ.get("HECKEIDEAL_SOLVER_MAX_UNKNOWNS", cfg.solver_max_unknowns)
        )
        formats = os.environ.get("HECKEIDEAL_OUTPUT_FORMATS")
        if formats:
            cfg.output_formats = {f.strip() for f in formats.split(",") if f.strip()}
        for key, value in overrides.items():
            if value is not None:
                setattr(cfg, key, value)
        return cfg


def as_dict(cfg: HarnessConfig) -> Dict[str, Any]:
    return {
        "root_cap": cfg.root_cap,
        "max_order": cfg.max_order,
        "witness_limit": cfg.witness_limit,
        "solver_max_unknowns": cfg.solver_max_unknowns,
        "normalization": cfg.normalization,
        "output_formats": sorted(cfg.output_formats),
        "include_timing": cfg.include_timing,
    }
