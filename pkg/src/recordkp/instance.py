"""Problem data, file formats, Pisinger-style generators and solution evaluation.

Two text formats are supported:

canonical
    ``n W`` on the first line, then ``n`` lines ``p w [d]`` (``d`` defaults to 1).
jooken
    ``n`` on the first line, ``n`` lines ``index p w``, and ``W`` on the last line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

INT64_MAX = (1 << 63) - 1

FORMATS = ("canonical", "jooken")


class ParseError(ValueError):
    """Raised for malformed instance text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Item:
    profit: int
    weight: int
    availability: int = 1

    def __post_init__(self):
        for name in ("profit", "weight", "availability"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
                raise TypeError(f"{name} must be an integer, got {v!r}")
            if v < 1:
                raise ValueError(f"{name} must be >= 1, got {v}")
            if v > INT64_MAX:
                raise ValueError(f"{name} does not fit in 64 bits: {v}")
            object.__setattr__(self, name, int(v))


@dataclass(frozen=True)
class Instance:
    items: tuple[Item, ...]
    capacity: int

    def __init__(self, items: Iterable[Item | Sequence[int]], capacity: int):
        its = tuple(it if isinstance(it, Item) else Item(*it) for it in items)
        if not its:
            raise ValueError("an instance needs at least one item")
        if capacity < 1 or capacity > INT64_MAX:
            raise ValueError(f"capacity must be a positive 64-bit integer, got {capacity}")
        object.__setattr__(self, "items", its)
        object.__setattr__(self, "capacity", int(capacity))

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def profits(self) -> list[int]:
        return [it.profit for it in self.items]

    @property
    def weights(self) -> list[int]:
        return [it.weight for it in self.items]

    @property
    def availabilities(self) -> list[int]:
        return [it.availability for it in self.items]

    @property
    def is_binary(self) -> bool:
        return all(it.availability == 1 for it in self.items)


@dataclass(frozen=True)
class Solution:
    multiplicities: tuple[int, ...]
    value: int
    weight: int


@dataclass(frozen=True)
class Evaluation:
    value: int
    weight: int
    feasible: bool
    reason: str = ""


def evaluate_solution(inst: Instance, x: Sequence[int]) -> Evaluation:
    if len(x) != inst.n:
        raise ValueError(f"solution has {len(x)} entries, instance has {inst.n} items")
    value = weight = 0
    reason = ""
    for xi, it in zip(x, inst.items):
        if xi < 0 or xi > it.availability:
            reason = reason or "availability"
        value += xi * it.profit
        weight += xi * it.weight
    if not reason and weight > inst.capacity:
        reason = "weight"
    return Evaluation(value, weight, not reason, reason)


def make_solution(inst: Instance, x: Sequence[int]) -> Solution:
    ev = evaluate_solution(inst, x)
    return Solution(tuple(int(v) for v in x), ev.value, ev.weight)


# --------------------------------------------------------------------------
# text formats

def _ints(line: str, lineno: int, count: Iterable[int]) -> list[int]:
    parts = line.split()
    if len(parts) not in count:
        raise ParseError(f"expected {' or '.join(map(str, count))} fields, got {len(parts)}", lineno)
    out = []
    for tok in parts:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}", lineno) from None
        if v > INT64_MAX:
            raise ParseError(f"value overflows 64 bits: {tok}", lineno)
        out.append(v)
    return out


def _item(p: int, w: int, d: int, lineno: int) -> Item:
    if p < 1 or w < 1 or d < 1:
        raise ParseError("profits, weights and availabilities must be positive", lineno)
    return Item(p, w, d)


def parse_instance(text: str | bytes, format: str = "canonical") -> Instance:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = [(i + 1, ln) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise ParseError("empty input", 1)
    if format == "canonical":
        lineno, first = lines[0]
        n, cap = _ints(first, lineno, (2,))
        if n < 1:
            raise ParseError("item count must be positive", lineno)
        if len(lines) - 1 != n:
            raise ParseError(f"expected {n} item lines, found {len(lines) - 1}",
                             lines[-1][0])
        items = []
        for lineno, ln in lines[1:]:
            vals = _ints(ln, lineno, (2, 3))
            items.append(_item(vals[0], vals[1], vals[2] if len(vals) == 3 else 1, lineno))
    elif format == "jooken":
        lineno, first = lines[0]
        (n,) = _ints(first, lineno, (1,))
        if n < 1:
            raise ParseError("item count must be positive", lineno)
        if len(lines) != n + 2:
            raise ParseError(f"expected {n} item lines and a capacity line", lines[-1][0])
        items = []
        for lineno, ln in lines[1:-1]:
            _, p, w = _ints(ln, lineno, (3,))
            items.append(_item(p, w, 1, lineno))
        lineno, last = lines[-1]
        (cap,) = _ints(last, lineno, (1,))
    else:
        raise ValueError(f"unknown format {format!r}")
    if cap < 1:
        raise ParseError("capacity must be positive", lineno if format == "jooken" else lines[0][0])
    return Instance(items, cap)


def write_instance(inst: Instance, format: str = "canonical") -> str:
    if format == "canonical":
        out = [f"{inst.n} {inst.capacity}"]
        for it in inst.items:
            if it.availability == 1:
                out.append(f"{it.profit} {it.weight}")
            else:
                out.append(f"{it.profit} {it.weight} {it.availability}")
    elif format == "jooken":
        if not inst.is_binary:
            raise ValueError("the jooken format has no availability column")
        out = [str(inst.n)]
        out += [f"{i + 1} {it.profit} {it.weight}" for i, it in enumerate(inst.items)]
        out.append(str(inst.capacity))
    else:
        raise ValueError(f"unknown format {format!r}")
    return "\n".join(out) + "\n"


def sniff_format(text: str) -> str:
    """Guess the format from the shape of the first line."""
    for ln in text.splitlines():
        if ln.strip():
            return "jooken" if len(ln.split()) == 1 else "canonical"
    return "canonical"


def read_instance(path, format: str | None = None) -> Instance:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    return parse_instance(text, format or sniff_format(text))


# --------------------------------------------------------------------------
# generators

#: class name -> (number, bound constant c with 1 <= p, w <= c*R)
CLASSES = {
    "uncorrelated": 1,
    "weakly-correlated": 2,
    "strongly-correlated": 3,
    "inverse-strongly-correlated": 4,
    "almost-strongly-correlated": 5,
    "subset-sum": 6,
    "similar-weights": 7,
    "uncorrelated-span": 8,
    "weakly-correlated-span": 9,
    "strongly-correlated-span": 10,
    "multiple-strongly-correlated": 11,
    "profit-ceiling": 12,
    "circle": 13,
}

SPAN_CLASSES = {"uncorrelated-span", "weakly-correlated-span", "strongly-correlated-span"}

# span(v, m), mstr(k1, k2, d), pceil(d), circle(d) parameters used for the hard classes
SPAN_V, SPAN_M = 2, 10
PCEIL_D = 3
CIRCLE_D = 2 / 3
SIMILAR_LO, SIMILAR_HI = 100_000, 100_100

BOUNDED_AVAILABILITY = (1, 20)
DEDUP_RETRIES = 100


@dataclass(frozen=True)
class GeneratorSpec:
    cls: str
    n: int
    R: int = 1000
    h: int = 1
    H: int = 100
    seed: int = 0
    bounded: bool = False
    pceil_d: int = PCEIL_D

    def __post_init__(self):
        if self.cls not in CLASSES:
            raise ValueError(f"unknown instance class {self.cls!r}")
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 1 <= self.h <= self.H:
            raise ValueError(f"need 1 <= h <= H, got h={self.h}, H={self.H}")
        if not 10 <= self.R <= 10**8:
            raise ValueError(f"R={self.R} outside the supported range [10, 1e8]")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.pceil_d < 1:
            raise ValueError("profit-ceiling divisor must be positive")


def bound_constant(cls: str, R: int) -> int:
    """Smallest integer c with every generated profit and weight <= c*R."""
    if cls == "similar-weights":
        return max(1, -(-SIMILAR_HI // R))
    return 2


def make_rng(seed: int) -> np.random.Generator:
    # Philox is counter-based; its stream depends only on the seed
    return np.random.Generator(np.random.Philox(seed))


def _profit_for(cls: str, w: int, R: int, rng: np.random.Generator, pceil_d: int) -> int:
    r10 = R // 10
    if cls in ("uncorrelated", "uncorrelated-span"):
        return int(rng.integers(1, R, endpoint=True))
    if cls in ("weakly-correlated", "weakly-correlated-span"):
        lo = max(1, w - r10)
        return int(rng.integers(lo, w + r10, endpoint=True))
    if cls in ("strongly-correlated", "strongly-correlated-span"):
        return w + r10
    if cls == "almost-strongly-correlated":
        j = R // 500
        return int(rng.integers(max(1, w + r10 - j), w + r10 + j, endpoint=True))
    if cls == "subset-sum":
        return w
    if cls == "multiple-strongly-correlated":
        return w + (3 * R) // 10 if w % 6 == 0 else w + (2 * R) // 10
    if cls == "profit-ceiling":
        return pceil_d * (-(-w // pceil_d))
    if cls == "circle":
        return max(1, int(round(CIRCLE_D * math.sqrt(4 * R * R - (w - 2 * R) ** 2))))
    raise AssertionError(cls)


def _draw(spec: GeneratorSpec, rng: np.random.Generator, key: list[tuple[int, int]]) -> tuple[int, int]:
    R, cls = spec.R, spec.cls
    if cls in SPAN_CLASSES:
        p, w = key[int(rng.integers(0, len(key)))]
        a = int(rng.integers(1, SPAN_M, endpoint=True))
        return a * p, a * w
    if cls == "inverse-strongly-correlated":
        p = int(rng.integers(1, R, endpoint=True))
        return p, p + R // 10
    if cls == "similar-weights":
        w = int(rng.integers(SIMILAR_LO, SIMILAR_HI, endpoint=True))
        return int(rng.integers(1, 1000, endpoint=True)), w
    w = int(rng.integers(1, R, endpoint=True))
    return _profit_for(cls, w, R, rng, spec.pceil_d), w


def generate(spec: GeneratorSpec) -> Instance:
    """Deterministically build one instance of a Pisinger-style class.

    The capacity of the h-th of H instances is ``floor(h * sum(w) / (H + 1))``,
    where the weight sum counts every copy when ``bounded`` is set.
    """
    rng = make_rng(spec.seed)
    key = []
    if spec.cls in SPAN_CLASSES:
        for _ in range(SPAN_V):
            w = int(rng.integers(1, spec.R, endpoint=True))
            p = _profit_for(spec.cls, w, spec.R, rng, spec.pceil_d)
            key.append((max(1, p // (SPAN_M + 1)), max(1, w // (SPAN_M + 1))))
    dedup = spec.bounded and spec.cls not in SPAN_CLASSES
    seen: set[tuple[int, int]] = set()
    items = []
    for _ in range(spec.n):
        p, w = _draw(spec, rng, key)
        if dedup:
            tries = 0
            while (p, w) in seen and tries < DEDUP_RETRIES:
                p, w = _draw(spec, rng, key)
                tries += 1
            seen.add((p, w))
        d = int(rng.integers(*BOUNDED_AVAILABILITY, endpoint=True)) if spec.bounded else 1
        items.append(Item(p, w, d))
    total = sum(it.weight * it.availability for it in items)
    cap = max(1, (spec.h * total) // (spec.H + 1))
    return Instance(items, cap)
