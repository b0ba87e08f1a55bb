import hashlib
import sys
from collections.abc import Iterator
from itertools import islice
from pathlib import Path
from typing import TypeVar

# Various utility functions.

T = TypeVar("T")


def path_check(pathname: str) -> None:
    """
    Create a directory path if it doesn't exist.

    :param str pathname: path to check/create.
    """
    path = Path(pathname)
    if not path.is_dir():
        path.mkdir(parents=True, exist_ok=True)


def write_output(data: bytes, out_file: str | None = None) -> None:
    """
    Write {data} to {out_file}, creating its parent directory, or to standard output when
    {out_file} is None.
    """
    if out_file is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    path = Path(out_file)
    path_check(str(path.parent))
    path.write_bytes(data)


def derive_seed(master: int, *parts: object) -> int:
    """
    A per-trial seed that depends only on {master} and {parts}, so trials give the same
    inputs however they are sharded across workers.
    """
    key = ":".join(str(p) for p in (master, *parts)).encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big")


def batcher(iterator: Iterator[T], batch_size: int) -> Iterator[tuple[T, ...]]:
    """
    Take a generic iterator and slice it into tuples that contain the number of items
    specified by {batch_size}. These new tuples make up the contents of a new iterator.

    For example, batcher turns this iterator into another iterator of two-batch tuples.
    trials = iter([1, 2, 3, 4, 5])
    batch = batcher(trials, 2)
    next(batch)
    >>> (1, 2)
    next(batch)
    >>> (3, 4)
    """
    while batch := tuple(islice(iterator, batch_size)):
        yield batch
