"""Binary de Bruijn sequences, the recursive ranking bijection, and the pair codec.

Sequences are plain strings over ``"01"``.  An order-``n`` sequence has
length ``2**n``; its *B0 form* starts with ``n`` zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bijection import NuInput, nu, nu_inverse
from .euler import CycleError, EulerCycle, canonical, check_cycle
from .graph_core import debruijn_graph


class SequenceError(ValueError):
    pass


@dataclass(frozen=True)
class DeBruijnSeq:
    bits: str
    order: int

    @property
    def form(self) -> str:
        return "B0" if self.bits.startswith("0" * self.order) else "B"

    def __str__(self) -> str:
        return self.bits


def order_of(bits: str) -> int:
    n = len(bits).bit_length() - 1
    if len(bits) < 4 or len(bits) != 1 << n:
        raise SequenceError(f"length {len(bits)} is not 2**n with n >= 2")
    if set(bits) - {"0", "1"}:
        raise SequenceError("sequence must be over 0/1")
    return n


def windows(bits: str, n: int) -> list[int]:
    ext = bits + bits[: n - 1]
    return [int(ext[k:k + n], 2) for k in range(len(bits))]


def parse(bits: str, n: int | None = None, form: str = "B") -> DeBruijnSeq:
    """Validate *bits* as an order-n de Bruijn sequence (B0 form if requested)."""
    k = order_of(bits)
    if n is not None and k != n:
        raise SequenceError(f"length {len(bits)} does not match order {n}")
    if len(set(windows(bits, k))) != len(bits):
        missing = sorted(set(range(len(bits))) - set(windows(bits, k)))
        raise SequenceError(f"window {missing[0]:0{k}b} missing")
    seq = DeBruijnSeq(bits, k)
    if form == "B0" and seq.form != "B0":
        raise SequenceError(f"B0 sequence must start with {k} zeros")
    return seq


@lru_cache(maxsize=None)
def _graph(n: int):
    return debruijn_graph(n)


def cycle_to_seq(c: EulerCycle, n: int) -> DeBruijnSeq:
    """First symbol of every traversed edge word, rotated to start at 0^n."""
    try:
        check_cycle(_graph(n), c.traversals)
    except CycleError as exc:
        raise SequenceError(f"not an Eulerian cycle of H_{n}: {exc}") from None
    trav = c.traversals
    k = trav.index(0)
    trav = trav[k:] + trav[:k]
    return DeBruijnSeq("".join(str(e >> (n - 1)) for e in trav), n)


def seq_to_cycle(b: DeBruijnSeq | str) -> EulerCycle:
    seq = parse(str(b), form="B0")
    return canonical(windows(seq.bits, seq.order))


def rho(n: int, s: str) -> DeBruijnSeq:
    """Rank-to-sequence bijection S(2^(n-1) - n) -> B0(n)."""
    if n < 2:
        raise SequenceError(f"order must be >= 2, got {n}")
    if len(s) != (1 << (n - 1)) - n or set(s) - {"0", "1"}:
        raise SequenceError(f"rho_{n} needs {(1 << (n - 1)) - n} bits, got {s!r}")
    if n == 2:
        return DeBruijnSeq("0011", 2)
    head = (1 << (n - 2)) - (n - 1)
    base = seq_to_cycle(rho(n - 1, s[:head]))
    # double(H_{n-1}) is H_n with identical edge ids
    return cycle_to_seq(nu(_graph(n - 1), NuInput(base, s[head:])), n)


def rho_inverse(b: DeBruijnSeq | str) -> str:
    seq = parse(str(b), form="B0")
    n = seq.order
    if n == 2:
        return ""
    inp = nu_inverse(_graph(n - 1), seq_to_cycle(seq))
    return rho_inverse(cycle_to_seq(inp.base_cycle, n - 1)) + inp.bits


def b_split(b: DeBruijnSeq | str) -> tuple[int, DeBruijnSeq]:
    """Rotation ``r`` with ``b[r:] + b[:r]`` in B0 form, and that B0 sequence."""
    seq = parse(str(b))
    r = windows(seq.bits, seq.order).index(0)
    return r, DeBruijnSeq(seq.bits[r:] + seq.bits[:r], seq.order)


def b_unsplit(r: int, b0: DeBruijnSeq | str) -> DeBruijnSeq:
    seq = parse(str(b0), form="B0")
    if not 0 <= r < len(seq.bits):
        raise SequenceError(f"rotation {r} out of range")
    bits = seq.bits[len(seq.bits) - r:] + seq.bits[: len(seq.bits) - r]
    return DeBruijnSeq(bits, seq.order)


def _encode_one(b: str, n: int) -> str:
    r, b0 = b_split(parse(b, n))
    return format(r, f"0{n}b") + rho_inverse(b0)


def stanley_encode(b1: str, b2: str, n: int) -> str:
    """Pair of order-n sequences -> bit string of length 2^n."""
    return _encode_one(str(b1), n) + _encode_one(str(b2), n)


def stanley_decode(bits: str, n: int) -> tuple[DeBruijnSeq, DeBruijnSeq]:
    if len(bits) != 1 << n or set(bits) - {"0", "1"}:
        raise SequenceError(f"expected {1 << n} bits for order {n}")
    half = 1 << (n - 1)
    out = []
    for chunk in (bits[:half], bits[half:]):
        out.append(b_unsplit(int(chunk[:n], 2), rho(n, chunk[n:])))
    return out[0], out[1]
