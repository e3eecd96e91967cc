import random

import pytest

from trimlat.bitlattice import SetFamily, mask_of

_ACCEPTANCE: list[str] = []


def M(*elements):
    """Mask from 1-based element labels, matching the usual set notation."""
    return mask_of(e - 1 for e in elements)


def fam(n, *sets):
    return SetFamily(n, tuple(M(*s) for s in sets))


def random_family(rng: random.Random, n: int, size: int, allow_empty=False) -> SetFamily:
    lo = 0 if allow_empty else 1
    masks = {rng.randrange(lo, 1 << n) for _ in range(size)}
    return SetFamily(n, tuple(sorted(masks)))


def record_criterion(number: int, name: str, ok: bool, detail: str = "") -> None:
    _ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'} criterion {number}: {name}" + (f" ({detail})" if detail else ""))


@pytest.fixture
def criterion():
    return record_criterion


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
