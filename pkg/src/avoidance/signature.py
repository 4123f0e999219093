from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from errors import BadSymbol, UnrealizableSignature


@dataclass(frozen=True)
class CyclicSignature:
    """Ascent/descent word of a permutation read around a cycle.

    ``signs[i]`` for i < n-1 compares positions i and i+1; the last sign
    compares position n with position 1 and is ``+`` iff tau_n < tau_1.
    """

    signs: str

    def __post_init__(self) -> None:
        bad = set(self.signs) - {"+", "-"}
        if bad:
            raise BadSymbol(f"signature {self.signs!r} contains {''.join(sorted(bad))!r}")

    @property
    def n(self) -> int:
        return len(self.signs)

    @property
    def realizable(self) -> bool:
        return "+" in self.signs and "-" in self.signs

    def __str__(self) -> str:
        return self.signs


def signature_of(tau: Sequence[int]) -> CyclicSignature:
    n = len(tau)
    return CyclicSignature(
        "".join("+" if tau[i] < tau[(i + 1) % n] else "-" for i in range(n))
    )


def perm_from_cyclic_signature(signature: CyclicSignature | str) -> Tuple[int, ...]:
    """Realise a non-constant cyclic signature by peak insertion.

    A peak is a position whose incoming arc is + and outgoing arc is -; it
    takes the largest unused value and is removed, its two arcs merging into
    one.  The merged sign is - unless that would make the remaining word
    constant.
    """
    if isinstance(signature, str):
        signature = CyclicSignature(signature)
    if not signature.realizable:
        raise UnrealizableSignature(f"signature {signature} needs both + and -")
    n = signature.n
    positions: List[int] = list(range(n))
    arcs: List[str] = list(signature.signs)
    values = [0] * n
    next_value = n
    while len(positions) > 2:
        m = len(positions)
        peak = next(t for t in range(m) if arcs[t - 1] == "+" and arcs[t] == "-")
        values[positions[peak]] = next_value
        next_value -= 1
        incoming = (peak - 1) % m
        rest = [arcs[t] for t in range(m) if t not in (incoming, peak)]
        arcs[incoming] = "+" if all(sign == "-" for sign in rest) else "-"
        del arcs[peak]
        del positions[peak]
    first, second = positions
    if arcs[0] == "+":
        values[first], values[second] = 1, 2
    else:
        values[first], values[second] = 2, 1
    return tuple(values)
