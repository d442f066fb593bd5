"""Cut recursion for the gluing counts, with a persistent memo table.

The recursion works on a scaled variant T(g; n_1..n_L) = count * z! where z is
the number of zero boundary sizes (T is what satisfies the clean identity; the
plain count is recovered by dividing z! back out). With m_k = max(n_k, 1):

    (L + 2g - 1) * T(g; n_1..n_L)
        = sum_{i<j} m_i m_j T(g; n_i+n_j+2, rest)
        + (1/2) * sum_i m_i sum_{x=1}^{n_i+1} T(g-1; n_i+2-x, x, rest)

with T(0; n) = 1 for a single boundary, and T = 0 whenever the genus goes
negative or no boundary remains. Merging two boundaries drops L by one;
cutting a handle drops g by one, so 2g + L shrinks at every step and the
recursion terminates. Both divisions (by 2(L+2g-1) and by z!) are checked to
be exact.

Persistence: a CountTable can be saved to / loaded from a small text format,

    #gluecount-cache v1
    g=<int>;ns=<comma-separated sizes, non-increasing>;count=<decimal integer>

with entry lines sorted by (g, ns). Unknown versions are refused; malformed
lines are reported with their line number. `memo_store_load(path, verify=True)`
re-derives every entry with a scratch table (never seeded from the file) and
raises ConsistencyError on the first disagreement.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import CacheError, CacheVersionError, ConsistencyError, SignatureError
from .exact import factorial
from .formula import SurfaceSignature

__all__ = ["CountTable", "count_recursive", "memo_store_load", "memo_store_save"]

_HEADER = "#gluecount-cache v1"
_LINE_RE = re.compile(r"^g=(\d+);ns=(\d+(?:,\d+)*);count=(\d+)$")

# Memo keys are (genus, sizes sorted non-increasing); values are plain counts.
MemoKey = tuple[int, tuple[int, ...]]


class CountTable:
    """Dict of memoized counts keyed by normalized signature."""

    def __init__(self, entries: dict[MemoKey, int] | None = None) -> None:
        self.entries: dict[MemoKey, int] = dict(entries or {})

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CountTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        return f"CountTable({len(self.entries)} entries)"


def count_recursive(sig: SurfaceSignature, memo: CountTable | None = None) -> int:
    """Count gluings for `sig` by the cut recursion.

    Passing the same CountTable across calls shares all intermediate results.
    The table is trusted as-is: fill it only through this function, and load
    files with memo_store_load(path, verify=True) when provenance is in doubt.
    """
    table = memo if memo is not None else CountTable()
    return _count_normalized(sig.genus, sig.sorted_sizes(), table.entries)


def _scaled(genus: int, sizes: tuple[int, ...], entries: dict[MemoKey, int]) -> int:
    """T(genus; sizes): scaled count, 0 outside the valid range."""
    if genus < 0 or len(sizes) == 0:
        return 0
    key = sizes if _is_sorted_desc(sizes) else tuple(sorted(sizes, reverse=True))
    plain = _count_normalized(genus, key, entries)
    zeros = key.count(0)
    return plain * factorial(zeros) if zeros else plain


def _is_sorted_desc(sizes: tuple[int, ...]) -> bool:
    return all(sizes[i] >= sizes[i + 1] for i in range(len(sizes) - 1))


def _count_normalized(genus: int, sizes: tuple[int, ...], entries: dict[MemoKey, int]) -> int:
    holes = len(sizes)
    if genus == 0 and holes == 1:
        return 1
    key = (genus, sizes)
    hit = entries.get(key)
    if hit is not None:
        return hit

    merge_total = 0
    for i in range(holes):
        ni = sizes[i]
        mi = ni if ni > 0 else 1
        for j in range(i + 1, holes):
            nj = sizes[j]
            mj = nj if nj > 0 else 1
            rest = sizes[:i] + sizes[i + 1 : j] + sizes[j + 1 :]
            merge_total += mi * mj * _scaled(genus, (ni + nj + 2,) + rest, entries)

    cut_total = 0
    if genus > 0:
        for i in range(holes):
            ni = sizes[i]
            mi = ni if ni > 0 else 1
            rest = sizes[:i] + sizes[i + 1 :]
            acc = 0
            for x in range(1, ni + 2):
                acc += _scaled(genus - 1, (ni + 2 - x, x) + rest, entries)
            cut_total += mi * acc

    numerator = 2 * merge_total + cut_total
    denominator = 2 * (holes + 2 * genus - 1)
    scaled, rem = divmod(numerator, denominator)
    if rem:
        raise ConsistencyError(
            f"recursion produced non-exact division at g={genus}, ns={sizes}"
        )
    plain, rem = divmod(scaled, factorial(sizes.count(0)))
    if rem:
        raise ConsistencyError(
            f"zero-size normalization not exact at g={genus}, ns={sizes}"
        )
    entries[key] = plain
    return plain


def memo_store_save(memo: CountTable, path: str | Path) -> None:
    """Write `memo` to `path` in the versioned text format (sorted, stable)."""
    lines = [_HEADER]
    for (genus, sizes), count in sorted(memo.entries.items()):
        ns = ",".join(str(n) for n in sizes)
        lines.append(f"g={genus};ns={ns};count={count}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def memo_store_load(path: str | Path, verify: bool = False) -> CountTable:
    """Read a CountTable back from `path`; a missing file yields an empty table.

    With verify=True every entry is recomputed from scratch and compared.
    """
    file = Path(path)
    if not file.exists():
        return CountTable()
    lines = file.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise CacheError(f"{file}: empty file, expected header {_HEADER!r}")
    if lines[0] != _HEADER:
        raise CacheVersionError(
            f"{file}: unsupported cache header {lines[0]!r}, expected {_HEADER!r}"
        )
    entries: dict[MemoKey, int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        match = _LINE_RE.match(line)
        if match is None:
            raise CacheError(f"{file}: line {lineno}: malformed entry {line!r}")
        genus = int(match.group(1))
        sizes = tuple(int(part) for part in match.group(2).split(","))
        if not _is_sorted_desc(sizes):
            raise CacheError(
                f"{file}: line {lineno}: sizes must be non-increasing, got {sizes}"
            )
        if sum(sizes) == 0:
            raise CacheError(f"{file}: line {lineno}: all-zero size key {sizes}")
        key = (genus, sizes)
        if key in entries:
            raise CacheError(f"{file}: line {lineno}: duplicate key g={genus}, ns={sizes}")
        entries[key] = int(match.group(3))

    if verify:
        scratch = CountTable()
        for (genus, sizes), stored in sorted(entries.items()):
            try:
                actual = count_recursive(SurfaceSignature(genus, sizes), scratch)
            except SignatureError as exc:
                raise CacheError(f"{file}: invalid signature g={genus}, ns={sizes}") from exc
            if actual != stored:
                raise ConsistencyError(
                    f"{file}: entry g={genus}, ns={sizes} holds {stored}, "
                    f"recomputed {actual}"
                )
    return CountTable(entries)
