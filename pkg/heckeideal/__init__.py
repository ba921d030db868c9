__all__ = [
    "cli",
    "config",
    "coxeter",
    "laurent",
    "hecke",
    "parabolic",
    "ideals",
    "ideal_module",
    "solver",
    "maps",
    "factorization",
    "rpoly",
    "hat_ideal",
    "wgraph",
    "harness",
    "loader",
]
