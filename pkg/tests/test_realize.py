from __future__ import annotations

import random
from itertools import permutations

import pytest

from turaev.dt import DtCode, parse_dt
from turaev.realize import (
    NotRealizable,
    PlanarDiagram,
    face_count,
    format_diagram,
    realize,
    try_realize,
    validate_diagram,
)

TREFOIL = parse_dt("{{3},{4,6,2}}")
KINK = parse_dt("{{1},{2}}")
K11N183_REP = parse_dt("{{12},{-6,10,22,18,2,16,24,20,8,12,4,14}}")
TWELVE_MIN = parse_dt("{{12},{4,8,14,2,-18,16,6,20,22,-24,12,-10}}")
TWELVE_REP = parse_dt("{{17},{4,8,14,2,24,32,6,30,26,28,-16,12,34,18,20,22,10}}")


def _max_faces_over_all_orientations(code: DtCode) -> int:
    # Oracle for realizability, written against the same conventions but
    # over the full, unpinned 2^n orientation space with its own tracer.
    n = code.n
    two = 2 * n
    best = 0
    for mask in range(1 << n):
        rot: dict[tuple[int, str], tuple[int, str]] = {}
        for i in range(n):
            p, q = 2 * i, abs(code.labels[i]) - 1
            u, o = (q, p) if code.labels[i] > 0 else (p, q)
            if (mask >> i) & 1 == 0:
                cyc = [(u, "in"), (o, "in"), (u, "out"), (o, "out")]
            else:
                cyc = [(u, "in"), (o, "out"), (u, "out"), (o, "in")]
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                rot[a] = b
        mate: dict[tuple[int, str], tuple[int, str]] = {}
        for t in range(two):
            mate[(t, "out")] = ((t + 1) % two, "in")
            mate[((t + 1) % two, "in")] = (t, "out")
        seen: set[tuple[int, str]] = set()
        faces = 0
        for e0 in rot:
            if e0 not in seen:
                faces += 1
                e = e0
                while e not in seen:
                    seen.add(e)
                    e = rot[mate[e]]
        best = max(best, faces)
    return best


def test_trefoil_realization() -> None:
    pd = realize(TREFOIL)
    assert pd.n == 3
    assert pd.n_edges == 6
    assert face_count(pd) == 5
    validate_diagram(pd)


def test_kink_realization() -> None:
    pd = realize(KINK)
    assert face_count(pd) == 3
    validate_diagram(pd)
    # the self-loop edge occupies two slots of the single crossing
    assert sorted(pd.crossings[0].slots) == [1, 1, 2, 2]


def test_twelve_crossing_pair_realizes() -> None:
    for code in (TWELVE_MIN, TWELVE_REP):
        pd = realize(code)
        assert face_count(pd) == code.n + 2
        validate_diagram(pd)


def test_eleven_crossing_representation_face_count() -> None:
    assert face_count(realize(K11N183_REP)) == 14


def test_empty_code_gives_crossingless_diagram() -> None:
    pd = realize(parse_dt("{{0},{}}"))
    assert pd == PlanarDiagram(())
    assert face_count(pd) == 2


def test_realization_is_deterministic() -> None:
    assert realize(TWELVE_REP) == realize(TWELVE_REP)
    assert try_realize(TREFOIL).diagram == realize(TREFOIL)


def test_format_diagram_shape() -> None:
    lines = format_diagram(realize(TREFOIL)).splitlines()
    assert len(lines) == 3
    for k, line in enumerate(lines, start=1):
        assert line.startswith(f"X{k}: (")
        assert line.endswith("sign=+1") or line.endswith("sign=-1")


def test_exhaustive_small_codes_against_full_enumeration() -> None:
    # Every 4- and 5-crossing unsigned arrangement, checked against an
    # independent tracer running the full unpinned orientation space.
    # At least one non-realizable witness must exist at this size.
    witnesses = []
    for n in (4, 5):
        for perm in permutations(range(2, 2 * n + 1, 2)):
            code = DtCode(n, perm)
            result = try_realize(code)
            realizable = _max_faces_over_all_orientations(code) == n + 2
            if result.diagram is not None:
                assert realizable
                assert face_count(result.diagram) == n + 2
                validate_diagram(result.diagram)
            else:
                assert not realizable
                witnesses.append(code)
    assert witnesses, "expected some non-realizable 4- or 5-crossing code"
    with pytest.raises(NotRealizable):
        realize(witnesses[0])


def test_signs_do_not_affect_realizability() -> None:
    # Flipping over/under at a crossing relabels its slots but keeps the
    # same rotation systems available, so the face search is unaffected.
    rng = random.Random(20)
    for _ in range(60):
        n = rng.randint(3, 7)
        evens = list(range(2, 2 * n + 1, 2))
        rng.shuffle(evens)
        unsigned = DtCode(n, tuple(evens))
        signed = DtCode(n, tuple(a if rng.random() < 0.5 else -a for a in evens))
        assert (try_realize(unsigned).diagram is None) == (
            try_realize(signed).diagram is None
        )
        d = try_realize(signed).diagram
        if d is not None:
            validate_diagram(d)
            assert face_count(d) == n + 2


def test_kernel_paths_agree() -> None:
    import numpy as np

    from turaev._kernels import realize_search, realize_search_py
    from turaev.realize import _pass_times

    rng = random.Random(7)
    for _ in range(80):
        n = rng.randint(2, 8)
        evens = list(range(2, 2 * n + 1, 2))
        rng.shuffle(evens)
        code = DtCode(n, tuple(a if rng.random() < 0.5 else -a for a in evens))
        u, o = _pass_times(code)
        ua, oa = np.asarray(u, np.int64), np.asarray(o, np.int64)
        assert realize_search(n, ua, oa) == realize_search_py(n, ua, oa)
