import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from groupcodes import BitMatrix, LinearCode

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

HAMMING_7 = ["1000110", "0100011", "0010111", "0001101"]


@pytest.fixture
def hamming():
    return LinearCode.from_strings(HAMMING_7)


def np_rank(a: np.ndarray) -> int:
    """GF(2) rank by plain numpy elimination (independent of the package)."""
    a = (np.array(a, dtype=np.uint8) & 1).copy()
    r = 0
    rows, cols = a.shape
    for c in range(cols):
        hit = np.nonzero(a[r:, c])[0]
        if hit.size == 0:
            continue
        p = r + hit[0]
        a[[r, p]] = a[[p, r]]
        mask = a[:, c].astype(bool)
        mask[r] = False
        a[mask] ^= a[r]
        r += 1
        if r == rows:
            break
    return r


def span(rows: list[int]) -> set[int]:
    out = {0}
    for r in rows:
        out |= {x ^ r for x in out}
    return out


def brute_min_weight(c: LinearCode) -> int:
    """Minimum nonzero weight by enumerating the whole span."""
    return min(x.bit_count() for x in span(list(c.gen.data)) if x)


def random_matrix(rng, rows, cols) -> BitMatrix:
    return BitMatrix.from_array(rng.integers(0, 2, size=(rows, cols), dtype=np.uint8))


def all_vectors(n):
    return itertools.product((0, 1), repeat=n)


def random_uniform_perm(rng, p: int, c: int, f: int = 0):
    """Random permutation with ``c`` cycles of length ``p`` and ``f`` fixed points."""
    from groupcodes import Permutation

    n = p * c + f
    pts = [int(x) for x in rng.permutation(n)]
    cycles = [pts[i * p : (i + 1) * p] for i in range(c)]
    return Permutation.from_cycles(n, cycles)


def random_invariant_code(rng, perm, gens: int) -> LinearCode:
    """Span of the orbits of ``gens`` random vectors under ``perm``."""
    n = perm.n
    rows = []
    for _ in range(gens):
        x = [int(b) for b in rng.integers(0, 2, size=n)]
        for _ in range(perm.order()):
            rows.append(sum(b << j for j, b in enumerate(x)))
            y = [0] * n
            for j, b in enumerate(x):
                y[perm(j)] = b
            x = y
    return LinearCode(BitMatrix(tuple(rows), n))


def check_decomposition(c: LinearCode, perm, F: LinearCode, E: LinearCode, ct) -> None:
    """Direct-sum and invariance laws for a decomposition (asserts)."""
    from groupcodes import apply_perm, rowspace_equal
    from groupcodes.gf2linalg import rank as _rank

    p, cycles, fixed = ct
    assert F.k + E.k == c.k
    both = F.gen.vstack(E.gen)
    assert _rank(both) == c.k  # F and E meet only in zero
    assert rowspace_equal(both, c.gen) if c.k else True
    assert apply_perm(F, perm) == F
    assert apply_perm(E, perm) == E
    for r in F.gen:
        assert apply_perm(LinearCode(BitMatrix((r.bits,), c.n)), perm).gen.data == (r.bits,)
    assert F.k <= cycles + fixed
    if E.k and E.k <= 16:
        assert brute_min_weight(E) % 2 == 0
    if fixed == 0:
        assert F.k <= cycles
        if F.k and F.k <= 16:
            assert brute_min_weight(F) % p == 0


# --- acceptance reporting: one line per criterion in the terminal summary ---

_CRITERIA: dict[int, tuple[str, str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        _CRITERIA[num] = (title, status, detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, status, detail = _CRITERIA[num]
        line = f"criterion {num:2d}  {status}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
