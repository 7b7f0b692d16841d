"""The compiled and pure backends must be interchangeable."""

import os
import random
import subprocess
import sys

import pytest

from rzformal import BACKEND
from rzformal import _f2pure as pure

try:
    from rzformal import _f2core as core
except ImportError:
    core = None

needs_compiled = pytest.mark.skipif(
    core is None, reason="compiled backend not built"
)


def random_rows(rng, nrows, ncols):
    return [rng.getrandbits(ncols) for _ in range(nrows)]


@needs_compiled
def test_backends_agree_on_random_matrices():
    rng = random.Random(20240817)
    for _ in range(300):
        ncols = rng.randint(1, 130)
        nrows = rng.randint(0, 40)
        rows = random_rows(rng, nrows, ncols)
        assert core.rank(list(rows), ncols) == pure.rank(list(rows), ncols)
        ech_c, piv_c = core.rref(list(rows), ncols)
        ech_p, piv_p = pure.rref(list(rows), ncols)
        assert list(ech_c) == list(ech_p)
        assert list(piv_c) == list(piv_p)
        assert list(core.kernel_basis(list(rows), ncols)) == list(
            pure.kernel_basis(list(rows), ncols)
        )
        queries = random_rows(rng, rng.randint(0, 10), ncols)
        assert list(core.reduce_batch(queries, list(ech_c), list(piv_c))) == list(
            pure.reduce_batch(queries, list(ech_p), list(piv_p))
        )


@needs_compiled
def test_backends_agree_on_wide_matrices():
    # multi-word widths, where packing bugs would hide
    rng = random.Random(7)
    for ncols in (63, 64, 65, 127, 128, 129, 257):
        rows = random_rows(rng, 30, ncols)
        assert core.rank(list(rows), ncols) == pure.rank(list(rows), ncols)
        assert list(core.kernel_basis(list(rows), ncols)) == list(
            pure.kernel_basis(list(rows), ncols)
        )


def test_backend_name_is_exposed():
    assert BACKEND in {"pure", "compiled"}


def test_pure_override_env_var():
    env = dict(os.environ, RZFORMAL_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import rzformal; print(rzformal.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "pure"


def test_public_results_identical_under_pure_backend():
    # run a small end-to-end computation in a forced-pure subprocess and
    # compare with the in-process backend, whichever one it is
    script = (
        "import json\n"
        "from rzformal import SimplicialComplex, hochster_real_betti, general_criterion\n"
        "k = SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])\n"
        "r = general_criterion(k, [1, 3])\n"
        "print(json.dumps([hochster_real_betti(k).to_json_obj(), r.to_json_obj()]))\n"
    )
    env = dict(os.environ, RZFORMAL_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", script],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    import json

    from rzformal import SimplicialComplex, general_criterion, hochster_real_betti

    k = SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
    local = [
        hochster_real_betti(k).to_json_obj(),
        general_criterion(k, [1, 3]).to_json_obj(),
    ]
    assert json.loads(out.stdout) == local
