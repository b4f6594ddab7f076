#!/usr/bin/env python3
"""Smoke test for the demazure_py extension module.

Builds nothing itself: it looks for the compiled cdylib under target/
(`cargo build -p demazure-py` produces it) and loads it in place.
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libdemazure_py.so", "demazure_py.so", "libdemazure_py.dylib")
    ]
    for cand in candidates:
        if cand.exists():
            tmp = pathlib.Path(tempfile.mkdtemp(prefix="demazure_py_"))
            shutil.copy(cand, tmp / "demazure_py.so")
            sys.path.insert(0, str(tmp))
            import demazure_py

            return demazure_py
    sys.exit("demazure_py cdylib not found; run `cargo build -p demazure-py` first")


def main():
    d = load_module()

    assert d.cartan_matrix(2) == [[2, -1], [-1, 2]]
    assert d.is_dominant([1, 0]) and not d.is_dominant([-1, 2])
    assert d.pair_coroot([1, 2, 3], 1, 3) == 6

    nu, lam = d.parity_decompose([3, 2])
    assert nu == [1, 1] and lam == [1, 0]
    assert d.odd_even_split([1, 1, 1]) == ([1, 0, 1], [0, 1, 0])

    # sl_3 adjoint: dimension 8, zero weight twice.
    assert d.weyl_dimension([1, 1]) == 8
    ch = dict((tuple(w), m) for w, m in d.weyl_character([1, 1]))
    assert sum(ch.values()) == 8 and ch[(0, 0)] == 2

    # Local Weyl module W(2 omega) for sl_2: V(2) at grade 0, trivial at 1.
    dem = {(tuple(w), g): m for w, g, m in d.demazure_character(1, [2])}
    assert dem == {((2,), 0): 1, ((0,), 0): 1, ((-2,), 0): 1, ((0,), 1): 1}

    lo, le = d.split_dominant([0, 0], [1, 1])
    assert lo[1] == 1 and le[1] == 1  # two level-one images

    primes = d.enumerate_p1(2)
    assert len(primes) == 1 + 2 + 2 * (2**2 - 1 - 2)
    assert d.in_p1([(1, 0), (2, 3)]) and not d.in_p1([(1, 0), (2, 1)])
    o, e = d.oe_split([(1, 0), (2, 3), (3, 0)])
    assert o == [(1, 0), (3, 0)] and e == [(2, 3)]
    assert d.tensor_irreducible(3, o)
    assert d.has_simple_socle(3, o + e)

    kappa = d.height_of_prime(2, [(1, 0), (2, 3)])
    assert d.prime_of_subset(kappa, 1, 2) == [(1, 0), (2, 3)]

    # Engine: dim M(a omega, b omega) = 3^a 2^b, and the level-two identity.
    dims = d.construct_m([1], [1])
    assert sum(x for _, _, x in dims) == 6
    dims = d.construct_d(2, [3])
    assert sum(x for _, _, x in dims) == 6
    v = d.construct_v_xi(1, 0)
    assert sum(x for _, _, x in v) == 3
    assert d.verify_level_two_identity([1], [1])

    print("smoke test passed")


if __name__ == "__main__":
    main()
