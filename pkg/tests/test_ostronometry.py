import pytest

from ostro.ostronometry import (
    IDENTITIES,
    UnknownIdentity,
    identity_suite,
    row_companion,
    row_identity_suite,
    verify_identity,
    verify_row_identity,
)


@pytest.mark.parametrize("identity,params", [
    ("cassini", 3),
    ("jacobi", (3, 2, 1)),
    ("doctagne", (4, 2)),
    ("gcd", (6, 4)),
    ("pell", 3),
])
def test_catalogue_examples(identity, params):
    rep = verify_identity(2, identity, params)
    assert rep.ok and rep.checked == 1


def test_example_arithmetic():
    from ostro.numer import context
    D, E = context(2).D, context(2).E
    assert D(4) * D(2) - D(3) ** 2 == -1
    assert -D(3) * D(1) - D(2) * D(-2) + D(1) * D(1) == 0
    assert D(4) * D(3) - D(5) * D(2) == 2 == D(2)
    assert E(3) ** 2 - 8 * D(3) ** 2 == -4


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        verify_identity(2, "catalan")


def test_broken_identity_is_caught():
    # a wrong instance must produce a counterexample: d'Octagne with the sign dropped
    rep = verify_identity(2, "cassini", 2)
    assert rep.ok
    from ostro import ostronometry
    bad = dict(ostronometry._CHECKS)
    bad["cassini"] = lambda ctx, n: ctx.D(n + 1) * ctx.D(n - 1) - ctx.D(n) ** 2 == 1
    saved = ostronometry._CHECKS
    ostronometry._CHECKS = bad
    try:
        assert not verify_identity(2, "cassini", bound=5).ok
    finally:
        ostronometry._CHECKS = saved


@pytest.mark.parametrize("d", range(1, 11))
def test_full_catalogue(d):
    for rep in identity_suite([d]):
        assert rep.ok, (rep.identity, rep.counterexamples[:5])
        assert rep.checked > 0


def test_divisibility_skips_repeated_one_for_fibonacci():
    rep = verify_identity(1, "divisibility")
    assert rep.ok and rep.notes


def test_row_companion_examples():
    c = row_companion(2, 1)
    assert (c.Y0, c.Y1, c.X0, c.C) == (0, 1, 2, 4)
    c = row_companion(2, 2)
    assert (c.Y0, c.Y1, c.X0, c.C) == (1, 3, 4, 8)
    assert (c.X(1), c.X(2)) == (8, 20)
    assert c.X(2) ** 2 - 8 * c.Y(2) ** 2 == 8
    c = row_companion(2, 3)
    assert (c.Y0, c.Y1, c.X0, c.C) == (2, 4, 4, -16)
    assert c.X(1) ** 2 - 8 * c.Y(1) ** 2 == 16


def test_row_jacobi_example():
    c = row_companion(2, 2)
    Y = c.Y
    assert Y(2) * Y(2) - Y(3) * Y(1) == -2
    assert 4 * (Y(2) * Y(2) - Y(3) * Y(1)) == -1 * 1 * c.C


def test_row_one_reduces_to_doctagne():
    reps = verify_row_identity(2, 1, 10)
    assert all(r.ok for r in reps.values())
    assert row_companion(2, 1).C == 4


def test_row_suite_and_flags():
    reps = row_identity_suite(range(2, 7), rows=100, bound=20)
    assert all(r.ok for r in reps)
    jac = [r for r in reps if r.identity == "row_jacobi"]
    assert len(jac) == 5
    # the opposite sign fails whenever D_{a-b} C != 0
    assert all(r.flagged["sign (-1)^b instead of (-1)^(b-1)"] > 0 for r in jac)
    recon = [r for r in reps if r.identity == "row_reconstruction"]
    assert all(r.flagged["Y_n = X_0 D_n + Y_0 E_n (no factor 1/2)"] > 0 for r in recon)


def test_report_merge():
    a = verify_identity(3, "gcd", bound=10)
    b = verify_identity(3, "gcd", bound=5)
    m = a.merge(b)
    assert m.checked == a.checked + b.checked and m.ok
    with pytest.raises(ValueError):
        a.merge(verify_identity(2, "gcd", bound=3))
    assert set(IDENTITIES) == {"cassini", "pell", "jacobi", "doctagne", "gcd", "divisibility", "carmichael"}
