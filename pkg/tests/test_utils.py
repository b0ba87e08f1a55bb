from pathlib import Path

import pytest

from gcrystal.utils import batcher, derive_seed, path_check, write_output

###########
# Utilities
###########


def test_path_check() -> None:
    """Verify the path creation helper utility works."""
    path = Path("Sierra_Peaks_Section")
    if path.exists():
        raise Exception("'Sierra' directory exists.")
    path_check("Sierra_Peaks_Section")
    assert path.is_dir() is True
    path.rmdir()


def test_write_output_creates_parent_directories(tmp_path: Path) -> None:
    out = tmp_path / "peaks" / "whitney.json"
    write_output(b"[1]\n", str(out))
    assert out.read_bytes() == b"[1]\n"


def test_write_output_to_stdout(capsysbinary: pytest.CaptureFixture[bytes]) -> None:
    write_output(b'{"charge":1}\n')
    assert capsysbinary.readouterr().out == b'{"charge":1}\n'


class TestDeriveSeed:
    def test_is_stable(self) -> None:
        assert derive_seed(7, "grsk-local", 3) == derive_seed(7, "grsk-local", 3)

    def test_depends_on_every_part(self) -> None:
        seeds = {derive_seed(7, "grsk-local", 3), derive_seed(8, "grsk-local", 3), derive_seed(7, "grsk-inverse", 3)}
        seeds.add(derive_seed(7, "grsk-local", 4))
        assert len(seeds) == 4

    def test_fits_in_64_bits(self) -> None:
        assert 0 <= derive_seed(7, "x") < 2**64


def test_batcher() -> None:
    """
    Verify batcher batches items by {batch_size}, however they're formed, and that if there
    are fewer than {batch_size} items in the last batch, they're still returned.
    """
    trials = iter([0, 1, (2, 3), 4, 5])
    batch = batcher(trials, 2)
    assert next(batch) == (0, 1)
    assert next(batch) == ((2, 3), 4)
    assert next(batch) == (5,)
    with pytest.raises(StopIteration):
        next(batch)
