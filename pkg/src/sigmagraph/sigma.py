"""Partitions of the primes into classes, and class arithmetic on integers.

A partition is given by finitely many explicit prime classes plus an implicit
residual class holding every other prime, or by the atomic partition in which
each prime is its own class.  Classes are value objects tied to their
partition, so classes from different partitions never compare equal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, GroupInputError


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[tuple[int, int], ...]:
    """(prime, exponent) pairs of n >= 1 in increasing prime order."""
    if n < 1:
        raise DomainError(f"cannot factor {n}; need a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def primes_of(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in prime_factors(n))


@dataclass(frozen=True)
class SigmaPartition:
    explicit_classes: tuple[frozenset[int], ...] = ()
    atomic: bool = False

    def __post_init__(self):
        if self.atomic and self.explicit_classes:
            raise GroupInputError("atomic partition cannot carry explicit classes")
        seen: set[int] = set()
        for cls in self.explicit_classes:
            if not cls:
                raise GroupInputError("explicit classes must be nonempty")
            for p in cls:
                if p < 2 or primes_of(p) != (p,):
                    raise GroupInputError(f"{p} is not a prime")
                if p in seen:
                    raise GroupInputError(f"prime {p} appears in two classes")
                seen.add(p)

    def classify(self, p: int) -> "SigmaClass":
        if p < 2 or primes_of(p) != (p,):
            raise DomainError(f"{p} is not a prime")
        if self.atomic:
            return SigmaClass(self, "atomic", prime=p)
        for i, cls in enumerate(self.explicit_classes):
            if p in cls:
                return SigmaClass(self, "explicit", index=i)
        return SigmaClass(self, "residual")

    def class_by_tag(self, tag: str) -> "SigmaClass":
        if tag == "residual":
            if self.atomic:
                raise DomainError("atomic partition has no residual class")
            return SigmaClass(self, "residual")
        kind, _, arg = tag.partition(":")
        if kind == "explicit" and arg.isdigit() and int(arg) < len(self.explicit_classes):
            return SigmaClass(self, "explicit", index=int(arg))
        if kind == "atomic" and self.atomic and arg.isdigit():
            return self.classify(int(arg))
        raise DomainError(f"unknown class tag {tag!r} for this partition")

    def to_json(self) -> dict:
        return {"classes": [sorted(c) for c in self.explicit_classes], "atomic": self.atomic}

    @staticmethod
    def from_json(data: dict) -> "SigmaPartition":
        if not isinstance(data, dict):
            raise GroupInputError("partition spec must be a JSON object")
        classes = data.get("classes", [])
        atomic = bool(data.get("atomic", False))
        try:
            explicit = tuple(frozenset(int(p) for p in cls) for cls in classes)
        except (TypeError, ValueError) as exc:
            raise GroupInputError(f"bad class list in partition spec: {exc}") from exc
        return SigmaPartition(explicit, atomic=atomic)


ATOMIC = SigmaPartition(atomic=True)


def parse_sigma_spec(text: str) -> SigmaPartition:
    """Parse 'atomic' or a JSON object like {"classes": [[2, 3], [5]]}."""
    text = text.strip()
    if text == "atomic":
        return ATOMIC
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroupInputError(f"bad partition spec: {exc}") from exc
    return SigmaPartition.from_json(data)


@dataclass(frozen=True)
class SigmaClass:
    partition: SigmaPartition
    kind: str  # "explicit" | "residual" | "atomic"
    index: int | None = None
    prime: int | None = None

    @property
    def tag(self) -> str:
        if self.kind == "explicit":
            return f"explicit:{self.index}"
        if self.kind == "atomic":
            return f"atomic:{self.prime}"
        return "residual"

    def contains(self, p: int) -> bool:
        return self.partition.classify(p) == self

    @property
    def sort_key(self) -> tuple:
        rank = {"explicit": 0, "atomic": 1, "residual": 2}[self.kind]
        return (rank, self.index if self.index is not None else self.prime or 0)

    def __str__(self) -> str:
        return self.tag


@dataclass(frozen=True)
class PiSet:
    classes: frozenset[SigmaClass]

    def __post_init__(self):
        partitions = {c.partition for c in self.classes}
        if len(partitions) > 1:
            raise DomainError("all classes of a class set must come from one partition")

    def __contains__(self, cls: SigmaClass) -> bool:
        return cls in self.classes

    def complement_in(self, vertex_classes) -> frozenset[SigmaClass]:
        return frozenset(c for c in vertex_classes if c not in self.classes)


def sigma_of_int(n: int, sigma: SigmaPartition) -> frozenset[SigmaClass]:
    """Classes touched by the prime divisors of n; empty for n = 1."""
    if n < 1:
        raise DomainError(f"sigma_of_int needs a positive integer, got {n}")
    return frozenset(sigma.classify(p) for p in primes_of(n))


def sigma_of_group(group, sigma: SigmaPartition) -> frozenset[SigmaClass]:
    return sigma_of_int(group.order, sigma)


def sigma_coprime(n: int, m: int, sigma: SigmaPartition) -> bool:
    """True when n and m touch no common class."""
    return not (sigma_of_int(n, sigma) & sigma_of_int(m, sigma))


def pi_part(n: int, pi: PiSet | frozenset[SigmaClass]) -> int:
    """Largest divisor of n whose prime factors all lie in classes of pi."""
    classes = pi.classes if isinstance(pi, PiSet) else pi
    out = 1
    for p, e in prime_factors(n):
        if any(c.contains(p) for c in classes):
            out *= p**e
    return out


def class_part(n: int, cls: SigmaClass) -> int:
    """Largest divisor of n all of whose prime factors lie in cls."""
    out = 1
    for p, e in prime_factors(n):
        if cls.contains(p):
            out *= p**e
    return out


def is_class_number(n: int, cls: SigmaClass) -> bool:
    return class_part(n, cls) == n


def primes_in_class(n: int, cls: SigmaClass) -> tuple[int, ...]:
    return tuple(p for p in primes_of(n) if cls.contains(p))
