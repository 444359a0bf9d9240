from dataclasses import dataclass, field

from conelift.apps.magic import magic_array
from conelift.config import DEFAULTS
from conelift.core.lattice import integer_kernel
from conelift.core.order import Bounds
from conelift.core.vectors import IntMatrix
from conelift.exceptions import ConfigValidationError
from conelift.hilbert.engines import get_engine
from conelift.hilbert.strategies import get_strategy, list_strategies

DEFAULT_SIDE = 3
DEFAULT_DIMS = 2
DEFAULT_ROUNDS = 3


@dataclass(frozen=True)
class BenchmarkConfig:
    side: int = DEFAULT_SIDE
    dims: int = DEFAULT_DIMS
    diagonals: bool = True
    strategies: tuple[str, ...] = ()
    engine: str = DEFAULTS["CONELIFT_ENGINE"]
    rounds: int = DEFAULT_ROUNDS
    bound: int | None = None

    system: IntMatrix = field(init=False, repr=False)
    lattice: IntMatrix = field(init=False, repr=False)

    def __post_init__(self):
        if self.rounds < 1:
            raise ConfigValidationError("rounds must be >= 1")
        if self.bound is not None and self.bound < 0:
            raise ConfigValidationError("bound must be non-negative")
        if not self.strategies:
            object.__setattr__(self, "strategies", tuple(list_strategies()))
        for name in self.strategies:
            get_strategy(name)
        get_engine(self.engine)
        system = magic_array(self.side, self.dims, self.diagonals)
        object.__setattr__(self, "system", system)
        object.__setattr__(self, "lattice", integer_kernel(system))

    def bounds(self) -> Bounds | None:
        if self.bound is None:
            return None
        return Bounds.uniform(self.system.ncols, self.bound)

    def label(self) -> str:
        shape = "x".join([str(self.side)] * self.dims)
        return f"magic {shape}{'' if self.diagonals else ' (no diagonals)'}"
