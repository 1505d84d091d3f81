"""Coefficient rings for exact homology: the integers, the rationals, and prime fields."""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Ring:
    """One of Z, Q, or F_p, identified by its label ("Z", "Q", "F<p>")."""

    label: str
    p: int | None = None

    @property
    def is_field(self) -> bool:
        return self.label != "Z"

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def __str__(self) -> str:
        return self.label


Z = Ring("Z")
Q = Ring("Q")

_FIELD_CACHE: dict[int, Ring] = {}


def GF(p: int) -> Ring:
    """The prime field with p elements."""
    if p not in _FIELD_CACHE:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        _FIELD_CACHE[p] = Ring(f"F{p}", p)
    return _FIELD_CACHE[p]


def parse_ring(text: str) -> Ring:
    """Parse a ring label: "z", "q", "f2", "f3", ... (case-insensitive)."""
    t = text.strip().lower()
    if t == "z":
        return Z
    if t == "q":
        return Q
    if t.startswith("f") and t[1:].isdigit():
        return GF(int(t[1:]))
    raise ValueError(f"unknown ring {text!r} (expected z, q, or f<prime>)")
