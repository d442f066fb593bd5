"""Cut recursion, memo transparency, and the persistent table format."""

import itertools

import pytest

from gluecount import (
    CacheError,
    CacheVersionError,
    ConsistencyError,
    CountTable,
    SurfaceSignature,
    count_closed,
    count_recursive,
    memo_store_load,
    memo_store_save,
)


def test_known_values():
    assert count_recursive(SurfaceSignature(0, (1, 1))) == 1
    assert count_recursive(SurfaceSignature(1, (1,))) == 1
    # 1*2*3*(1+2+3+3) for three sphere boundaries.
    assert count_recursive(SurfaceSignature(0, (1, 2, 3))) == 54
    assert count_recursive(SurfaceSignature(2, (1,))) == 21


def test_matches_closed_formula():
    memo = CountTable()
    for genus in range(0, 3):
        for holes in range(1, 4):
            for sizes in itertools.product(range(0, 5), repeat=holes):
                if sum(sizes) == 0:
                    continue
                sig = SurfaceSignature(genus, sizes)
                assert count_recursive(sig, memo) == count_closed(sig)


def test_boundary_order_irrelevant():
    memo = CountTable()
    for sizes in itertools.permutations((3, 1, 0)):
        assert count_recursive(SurfaceSignature(1, sizes), memo) == count_recursive(
            SurfaceSignature(1, (3, 1, 0)), memo
        )


def test_memo_transparency(tmp_path):
    sig = SurfaceSignature(2, (2, 1))
    cold = count_recursive(sig)

    memo = CountTable()
    first = count_recursive(sig, memo)
    assert len(memo) > 0
    warm = count_recursive(sig, memo)

    path = tmp_path / "counts.txt"
    memo_store_save(memo, path)
    reloaded = memo_store_load(path)
    rewarmed = count_recursive(sig, reloaded)

    assert cold == first == warm == rewarmed


def test_store_roundtrip_and_determinism(tmp_path):
    memo = CountTable()
    for genus in range(0, 3):
        for holes in range(1, 3):
            for sizes in itertools.product(range(0, 4), repeat=holes):
                if sum(sizes) == 0:
                    continue
                count_recursive(SurfaceSignature(genus, sizes), memo)
    path_a = tmp_path / "a.txt"
    path_b = tmp_path / "b.txt"
    memo_store_save(memo, path_a)
    memo_store_save(memo_store_load(path_a), path_b)
    assert path_a.read_bytes() == path_b.read_bytes()
    assert memo_store_load(path_a) == memo


def test_store_exact_format(tmp_path):
    memo = CountTable()
    count_recursive(SurfaceSignature(0, (1, 1)), memo)
    path = tmp_path / "one.txt"
    memo_store_save(memo, path)
    assert path.read_text() == "#gluecount-cache v1\ng=0;ns=1,1;count=1\n"


def test_empty_table_serializes_to_header_only(tmp_path):
    path = tmp_path / "empty.txt"
    memo_store_save(CountTable(), path)
    assert path.read_text() == "#gluecount-cache v1\n"
    assert len(memo_store_load(path)) == 0


def test_load_missing_file_gives_empty_table(tmp_path):
    assert len(memo_store_load(tmp_path / "absent.txt")) == 0


def test_load_rejects_unknown_version(tmp_path):
    path = tmp_path / "future.txt"
    path.write_text("#gluecount-cache v2\ng=0;ns=1,1;count=1\n")
    with pytest.raises(CacheVersionError):
        memo_store_load(path)


def test_load_rejects_malformed_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("#gluecount-cache v1\ng=0;ns=1,1;count=1\nwhat is this\n")
    with pytest.raises(CacheError, match="line 3"):
        memo_store_load(path)


def test_load_rejects_unsorted_sizes(tmp_path):
    path = tmp_path / "unsorted.txt"
    path.write_text("#gluecount-cache v1\ng=0;ns=1,2;count=2\n")
    with pytest.raises(CacheError, match="non-increasing"):
        memo_store_load(path)


def test_load_verify_accepts_true_entries(tmp_path):
    memo = CountTable()
    count_recursive(SurfaceSignature(1, (2, 1)), memo)
    path = tmp_path / "good.txt"
    memo_store_save(memo, path)
    assert memo_store_load(path, verify=True) == memo


def test_load_verify_rejects_corrupt_entry(tmp_path):
    path = tmp_path / "corrupt.txt"
    path.write_text("#gluecount-cache v1\ng=0;ns=1,1;count=2\n")
    with pytest.raises(ConsistencyError):
        memo_store_load(path, verify=True)


def test_poisoned_memo_is_caught_by_verify(tmp_path):
    # verify recomputes from scratch, so a wrong entry cannot hide behind
    # other correct ones.
    memo = CountTable()
    count_recursive(SurfaceSignature(1, (2, 1)), memo)
    key = (1, (2, 1))
    assert key in memo.entries
    memo.entries[key] += 1
    path = tmp_path / "poisoned.txt"
    memo_store_save(memo, path)
    with pytest.raises(ConsistencyError):
        memo_store_load(path, verify=True)
