"""
Seeded generators for datasets and validator samples.

All randomness comes from :class:`SplitMix64`, whose state transition is
fixed here so that any implementation can replay a witness from its seed:

    state  = (state + 0x9E3779B97F4A7C15) mod 2**64
    z      = state
    z      = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z      = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output = z ^ (z >> 31)

Bounded draws use rejection sampling on the 64-bit output, so they are
unbiased and equally reproducible.
"""
import enum
import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import TypeVar

from core.exceptions import ConfigurationError
from core.models.dataset import CategoricalVariable, Dataset
from core.settings import Config

logger = logging.getLogger(__name__)

MASK_64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

SYMBOLS = "abcdefghijklmnopqrstuvwxyz"

T = TypeVar("T")


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & MASK_64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK_64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK_64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK_64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound < 1:
            raise ConfigurationError(f"Cannot draw below {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound

    def between(self, low: int, high: int) -> int:
        return low + self.below(high - low + 1)

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]

    def shuffled(self, items: Sequence[T]) -> list[T]:
        result = list(items)
        for i in range(len(result) - 1, 0, -1):
            j = self.below(i + 1)
            result[i], result[j] = result[j], result[i]
        return result


class CorrelationMode(str, enum.Enum):
    INDEPENDENT = "independent"
    REFINED = "refined"
    NOISY_COPY = "noisy-copy"
    ARBITRARY = "arbitrary"


@dataclass(frozen=True)
class GenConfig:
    seed: int
    rows: tuple[int, int] = (2, 12)
    alphabet_size: tuple[int, int] = (1, 4)
    correlation_mode: CorrelationMode = CorrelationMode.ARBITRARY

    def __post_init__(self) -> None:
        for name, (low, high) in (
            ("rows", self.rows),
            ("alphabet_size", self.alphabet_size),
        ):
            if low < 1 or low > high:
                raise ConfigurationError(f"Degenerate {name} range {low}-{high}")
        if self.alphabet_size[1] > len(SYMBOLS):
            raise ConfigurationError(
                f"At most {len(SYMBOLS)} symbols per column are supported"
            )
        object.__setattr__(
            self, "correlation_mode", CorrelationMode(self.correlation_mode)
        )


def column_name(index: int) -> str:
    return f"c{index}"


def designated_pair() -> tuple[str, str]:
    """In refined mode ``c1`` is a coarsening of ``c0``."""
    return column_name(1), column_name(0)


def _draw_labels(rng: SplitMix64, rows: int, size: int) -> list[str]:
    return [SYMBOLS[rng.below(size)] for _ in range(rows)]


def _coarsen(rng: SplitMix64, labels: list[str], cfg: GenConfig) -> list[str]:
    alphabet = list(dict.fromkeys(labels))
    target = rng.between(min(cfg.alphabet_size[0], len(alphabet)), len(alphabet))
    merge = {label: SYMBOLS[rng.below(target)] for label in alphabet}
    return [merge[label] for label in labels]


def _noisy_copy(rng: SplitMix64, labels: list[str], cfg: GenConfig) -> list[str]:
    alphabet = list(dict.fromkeys(labels))
    images = rng.shuffled(SYMBOLS.upper()[: max(len(alphabet), 1)])
    copy = [images[alphabet.index(label)] for label in labels]
    # half of the copies stay exact relabelings
    if len(alphabet) > 1 and rng.below(2):
        row = rng.below(len(copy))
        copy[row] = rng.choice([image for image in images if image != copy[row]])
    return copy


def _independent_grid(
    rng: SplitMix64, cfg: GenConfig, columns: int
) -> list[list[str]] | None:
    """
    Mixed-radix digits of the row index, repeated and shuffled.
    Over a full grid the columns are exactly independent.
    """
    low, high = cfg.rows
    bases = [rng.between(*cfg.alphabet_size) for _ in range(columns)]
    product = 1
    for base in bases:
        product *= base
    while product > high and max(bases) > cfg.alphabet_size[0]:
        largest = bases.index(max(bases))
        product = product // bases[largest] * (bases[largest] - 1)
        bases[largest] -= 1
    repeats = [m for m in range(1, high // product + 1) if product * m >= low]
    if product > high or not repeats:
        return None

    rows = product * rng.choice(repeats)
    order = rng.shuffled(range(rows))
    result = []
    for base_index, base in enumerate(bases):
        stride = 1
        for previous in bases[:base_index]:
            stride *= previous
        result.append(
            [SYMBOLS[(order[row] % product) // stride % base] for row in range(rows)]
        )
    return result


def gen_dataset(cfg: GenConfig, columns: int) -> Dataset:
    if columns < 1:
        raise ConfigurationError("A generated dataset needs at least one column")

    rng = SplitMix64(cfg.seed)
    mode = cfg.correlation_mode
    if mode is CorrelationMode.ARBITRARY:
        mode = rng.choice(
            [
                CorrelationMode.INDEPENDENT,
                CorrelationMode.REFINED,
                CorrelationMode.NOISY_COPY,
            ]
        )

    generated: list[list[str]] | None = None
    if mode is CorrelationMode.INDEPENDENT:
        generated = _independent_grid(rng, cfg, columns)
        if generated is None:
            if cfg.correlation_mode is CorrelationMode.INDEPENDENT:
                raise ConfigurationError(
                    f"Cannot build {columns} independent columns with alphabet "
                    f"sizes {cfg.alphabet_size} in {cfg.rows} rows"
                )
            mode = CorrelationMode.ARBITRARY

    if generated is None:
        rows = rng.between(*cfg.rows)
        generated = [_draw_labels(rng, rows, rng.between(*cfg.alphabet_size))]
        for _ in range(1, columns):
            previous = generated[-1]
            if mode is CorrelationMode.REFINED:
                generated.append(_coarsen(rng, previous, cfg))
            elif mode is CorrelationMode.NOISY_COPY:
                generated.append(_noisy_copy(rng, previous, cfg))
            else:
                generated.append(
                    _draw_labels(rng, rows, rng.between(*cfg.alphabet_size))
                )

    logger.debug("Generated %s dataset from seed %d", mode.value, cfg.seed)
    return Dataset.from_columns(
        CategoricalVariable(name=column_name(index), labels=tuple(labels))
        for index, labels in enumerate(generated)
    )


def gen_seeds(seed: int, count: int) -> list[int]:
    rng = SplitMix64(seed)
    return [rng.next_u64() for _ in range(count)]


def tuples_for(
    pool: Sequence[str],
    arity: int,
    exhaustive: bool,
    samples: int,
    seed: int,
) -> Iterator[tuple[str, ...]]:
    if exhaustive:
        yield from itertools.product(pool, repeat=arity)
        return

    rng = SplitMix64(seed)
    for _ in range(samples):
        yield tuple(rng.choice(pool) for _ in range(arity))


def sampling_plan(
    column_count: int, samples: int | None, seed: int | None
) -> tuple[bool, int, int]:
    """
    Resolve validator sampling: exhaustive when no sample size is requested
    and the pool is at most ``Config.EXHAUSTIVE_COLUMN_LIMIT`` columns wide.

    :return: (exhaustive, sample size, seed)
    """
    if samples is not None and samples < 1:
        raise ConfigurationError("Sample size must be positive")
    exhaustive = samples is None and column_count <= Config.EXHAUSTIVE_COLUMN_LIMIT
    return (
        exhaustive,
        samples or Config.DEFAULT_SAMPLES,
        Config.DEFAULT_SEED if seed is None else seed,
    )


def gen_population(
    seed: int,
    count: int,
    columns: int,
    mode: CorrelationMode | str = CorrelationMode.ARBITRARY,
    rows: tuple[int, int] = (2, 12),
    alphabet_size: tuple[int, int] = (1, 4),
) -> Iterator[tuple[int, Dataset]]:
    if count < 1:
        raise ConfigurationError("A population needs at least one instance")
    for instance_seed in gen_seeds(seed, count):
        cfg = GenConfig(
            seed=instance_seed,
            rows=rows,
            alphabet_size=alphabet_size,
            correlation_mode=mode,
        )
        yield instance_seed, gen_dataset(cfg, columns)
