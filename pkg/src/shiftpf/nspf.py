"""Parking functions, naive shifted parking functions and their block census.

A naive shifted parking function (NSPF) is a parking function whose entries
are each colored red or blue; here it is a tuple of ``(value, red)`` pairs.
NSPFs are grouped into blocks by their value multiplicities together with
the colors of the leftmost occurrence of every value.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .partitions import gen_partitions, multinomial, normalize
from .shifted_pf import VerificationError, sh_easy_v, sh_main_v

DEFAULT_BOUND = 8
ENUMERATION_CAP = 6


class BoundError(ValueError):
    pass


def is_parking(seq):
    return all(b <= i for i, b in enumerate(sorted(seq), start=1))


def _check_bound(n, bound):
    if n < 1:
        raise ValueError("n must be positive")
    if n > bound:
        raise BoundError(f"n={n} exceeds the enumeration bound {bound}")


def enumerate_pf(n, bound=DEFAULT_BOUND):
    """Yield every parking function of length ``n`` in lexicographic order."""
    _check_bound(n, bound)
    seq = []
    # below[i] = number of chosen entries <= i
    below = [0] * (n + 2)

    def extendable(remaining):
        return all(below[i] + remaining >= i for i in range(1, n + 1))

    def rec():
        k = len(seq)
        if k == n:
            yield tuple(seq)
            return
        for v in range(1, n + 1):
            for i in range(v, n + 1):
                below[i] += 1
            if extendable(n - k - 1):
                seq.append(v)
                yield from rec()
                seq.pop()
            for i in range(v, n + 1):
                below[i] -= 1

    yield from rec()


def parking_multisets(n):
    """Nondecreasing parking functions, i.e. the S_n-orbit representatives."""
    def rec(prefix, low):
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        for v in range(low, k + 2):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], 1)


def canonical_permutation(cycle_type):
    """A permutation (as an image list on 0..n-1) with cycles on consecutive indices."""
    perm, start = [], 0
    for length in cycle_type:
        perm.extend(start + (j + 1) % length for j in range(length))
        start += length
    return perm


def _cycles(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        out.append(cyc)
    return out


def _fixes(cycles, pf):
    return all(all(pf[j] == pf[c[0]] for j in c) for c in cycles)


def count_fixed(lam, perm=None, bound=DEFAULT_BOUND):
    """Brute-force number of parking functions fixed by a permutation of type ``lam``."""
    n = sum(lam)
    perm = canonical_permutation(lam) if perm is None else perm
    cycles = [c for c in _cycles(perm) if len(c) > 1]
    return sum(1 for pf in enumerate_pf(n, bound) if _fixes(cycles, pf))


def count_fixed_all(n, bound=DEFAULT_BOUND):
    """Fixed-point counts for every cycle type of S_n, from a single enumeration pass."""
    types = gen_partitions(n)
    cycles = {lam: [c for c in _cycles(canonical_permutation(lam)) if len(c) > 1] for lam in types}
    counts = Counter()
    for pf in enumerate_pf(n, bound):
        for lam in types:
            if _fixes(cycles[lam], pf):
                counts[lam] += 1
    return {lam: counts[lam] for lam in types}


def nspf_count_formula(n):
    return 2**n * (n + 1) ** (n - 1)


def enumerate_nspf(n, bound=ENUMERATION_CAP):
    """Yield every NSPF of length ``n`` as a tuple of ``(value, red)`` pairs."""
    _check_bound(n, bound)
    for pf in enumerate_pf(n, bound):
        for colors in product((False, True), repeat=n):
            yield tuple(zip(pf, colors))


def nspf_count(n, brute_bound=5):
    """2^n (n+1)^(n-1), cross-checked by explicit enumeration when n <= brute_bound."""
    expected = nspf_count_formula(n)
    if n <= brute_bound:
        counted = sum(1 for _ in enumerate_nspf(n))
        if counted != expected:
            raise VerificationError(f"enumerated {counted} NSPFs of length {n}", counted, expected)
    return expected


@dataclass(frozen=True)
class BlockKey:
    multiplicities: tuple
    first_colors: tuple  # ((value, red), ...) for the values that occur, ascending

    @property
    def label(self):
        return normalize(m for m in self.multiplicities if m)


@dataclass
class Block:
    key: BlockKey
    size: int
    members: list = field(default=None, repr=False)

    @property
    def label(self):
        return self.key.label


def block_key(nspf, n):
    mult = [0] * n
    first = {}
    for value, red in nspf:
        mult[value - 1] += 1
        first.setdefault(value, red)
    return BlockKey(tuple(mult), tuple(sorted(first.items())))


def predicted_block_size(lam):
    n = sum(lam)
    return 2 ** (n - len(lam)) * multinomial(n, lam)


@dataclass
class Census:
    n: int
    blocks: list
    method: str

    @property
    def total(self):
        return sum(b.size for b in self.blocks)

    def blocks_per_label(self):
        return dict(Counter(b.label for b in self.blocks))


def _blocks_by_enumeration(n):
    groups = {}
    for s in enumerate_nspf(n):
        groups.setdefault(block_key(s, n), []).append(s)
    return [Block(k, len(v), v) for k, v in groups.items()]


def _blocks_by_counting(n):
    blocks = []
    for ms in parking_multisets(n):
        mult = [0] * n
        for v in ms:
            mult[v - 1] += 1
        present = [v for v in range(1, n + 1) if mult[v - 1]]
        arrangements = multinomial(n, [m for m in mult if m])
        size = arrangements * 2 ** (n - len(present))
        for colors in product((False, True), repeat=len(present)):
            blocks.append(Block(BlockKey(tuple(mult), tuple(zip(present, colors))), size))
    return blocks


def _sort_blocks(blocks):
    return sorted(blocks, key=lambda b: (tuple(-m for m in b.key.multiplicities), b.key.first_colors))


def partition_into_blocks(n, enumerate_members=None, bound=DEFAULT_BOUND):
    """Build the block census of length-``n`` NSPFs and check its numerology.

    Block sizes must equal ``2^(n - len) * multinomial(n; lam)`` and the number
    of blocks with label ``lam`` must equal the coefficient of ``V_lam`` in the
    easy V-expansion of sh_n.  Full member enumeration is used for
    ``n <= 5`` unless overridden.
    """
    _check_bound(n, bound)
    if enumerate_members is None:
        enumerate_members = n <= 5
    if enumerate_members:
        _check_bound(n, ENUMERATION_CAP)
        blocks, method = _blocks_by_enumeration(n), "enumeration"
        for b in blocks:
            for s in b.members:
                if not is_parking([v for v, _ in s]):
                    raise VerificationError(f"non-parking member {s}")
    else:
        blocks, method = _blocks_by_counting(n), "counting"
    census = Census(n, _sort_blocks(blocks), method)

    for b in census.blocks:
        rearranged = sorted(v for v in range(1, n + 1) for _ in range(b.key.multiplicities[v - 1]))
        if not is_parking(rearranged):
            raise VerificationError(f"block {b.key} has a non-parking multiset")
        want = predicted_block_size(b.label)
        if b.size != want:
            raise VerificationError(f"block {b.key} has size {b.size}", b.size, want)
    counts = census.blocks_per_label()
    predicted = {lam: int(c) for lam, c in sh_easy_v(n).items()}
    if counts != predicted:
        raise VerificationError(f"block counts per label differ for n={n}", counts, predicted)
    if census.total != nspf_count_formula(n):
        raise VerificationError(f"census total {census.total}", census.total, nspf_count_formula(n))
    return census


def format_nspf(s):
    """Plain-text rendering with red entries marked by a trailing ``'``."""
    return "".join(f"{v}'" if red else str(v) for v, red in s)


def format_nspf_latex(s):
    return "".join(rf"\bar{{{v}}}" if red else str(v) for v, red in s)


def serious_spf_numerology(n):
    """Numbers a hypothetical 'serious' shifted parking function set must satisfy.

    Returns ``(total size, number of blocks)`` implied by the odd-P expansion:
    each odd ``lam`` contributes ``a_lam`` blocks of size ``dim V_lam``.
    """
    v = sh_main_v(n)
    total = sum(int(c) * predicted_block_size(lam) for lam, c in v.items())
    return total, int(sum(v.values()))


def total_fixed_predicted(lam):
    n = sum(lam)
    return (n + 1) ** (len(lam) - 1)


__all__ = [
    "Block",
    "BlockKey",
    "BoundError",
    "Census",
    "block_key",
    "canonical_permutation",
    "count_fixed",
    "count_fixed_all",
    "enumerate_nspf",
    "enumerate_pf",
    "format_nspf",
    "is_parking",
    "nspf_count",
    "parking_multisets",
    "partition_into_blocks",
    "predicted_block_size",
    "serious_spf_numerology",
]

