"""Quick checks of the pseudofn_py extension module.

Build first, e.g. `maturin develop -m crates/python/Cargo.toml`, then run
`python python/smoke_test.py`.
"""

import math

import pseudofn_py as pf


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol


def main():
    iv = pf.pnorm([[1, 1j], [1j, 1]], 1)
    assert close(iv.lower, 2.0) and close(iv.upper, 2.0), iv
    iv = pf.pnorm([[1, 1j], [1j, 1]], "4/3", seed=7)
    assert iv.lower <= iv.upper + 1e-12 and iv.contains(iv.lower), iv

    z2 = pf.FiniteGroup.cyclic(2)
    f = pf.GroupAlgebraElement(z2, [1, 1j])
    assert close(pf.fp_lambda_norm(f, 2).lower, math.sqrt(2))
    g = pf.circulant_norm(f.gelfand(), 2)
    assert g.overlaps(f.norm(2), 1e-7)

    s3 = pf.FiniteGroup.symmetric(3)
    assert s3.order == 6
    d = pf.GroupAlgebraElement.delta(s3, 1)
    assert close(d.norm(2.5).upper, 1.0)

    u = pf.dft_matrix(2)
    assert close(abs(u[1][1] + 1 / math.sqrt(2)), 0.0)

    avg = pf.folner_average(4, 2)
    assert close(avg.l1_norm(), 1.0)
    lift = pf.folner_lift(f, 8)
    pushed = lift.push(2)
    assert all(close(abs(a - b), 0.0) for a, b in zip(pushed.coeffs, f.coeffs))

    assert pf.theta_l1(4, 2, 0) == (0, 1)
    assert close(pf.theta_p_bound(4, 2, 2), 2 * math.sqrt(0.5))

    q = pf.quotient_gap(pf.GroupAlgebraElement.delta(z2, 0), 2, 4)
    assert q["sandwich"], q

    try:
        pf.pnorm([[1, 2], [3]], 2)
    except ValueError:
        pass
    else:
        raise AssertionError("ragged matrix accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
