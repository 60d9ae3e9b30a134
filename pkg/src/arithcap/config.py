from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds shared by the library and the CLI.

    ``check`` is the relative tolerance of pass/fail comparisons
    (identity checks, theorem comparisons); ``--tol`` on the CLI overrides it.
    """

    pivot: float = 1e-10
    minor_rel: float = 1e-12
    cond_max: float = 1e12
    equal_components: float = 1e-9
    symmetry: float = 0.0
    check: float = 1e-12
    archimedean: float = 1e-12

    def with_overrides(self, **kw) -> "Tolerances":
        return replace(self, **{k: float(v) for k, v in kw.items() if v is not None})


DEFAULT = Tolerances()
