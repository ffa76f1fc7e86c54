"""Smoke test for the psi_py extension.

Build and install first:  pip install --no-build-isolation crates/python
"""

import psi_py


def lucas(n):
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def psi_reference(a, b, n):
    prev, cur = 2, 1
    if n == 0:
        return prev
    for k in range(1, n):
        lead = (2 * a - b) * cur if k % 2 else cur
        prev, cur = cur, lead - a * prev
    return cur


def main():
    assert psi_py.psi_eval("1", "4", 16, ring="mod:31") == "0"
    for n in range(40):
        want = str(psi_reference(3, -5, n))
        for method in ("ladder", "recurrence"):
            assert psi_py.psi_eval("3", "-5", n, method=method) == want, (n, method)
    assert psi_py.psi_mod(1, 4, 1000, 2**31 - 1) == psi_reference(1, 4, 1000) % (2**31 - 1)
    assert psi_py.psi_eval("-1", "-3", 50) == str(lucas(50))

    primes = [p for p in (5, 7, 11, 13, 17, 19, 23, 29, 31)
              if psi_py.mersenne_test(p, "psi")["verdict"] == "prime"]
    assert primes == [5, 7, 13, 17, 19, 31], primes
    assert psi_py.mersenne_test(11, "mu")["verdict"] == "condition-fails"
    try:
        psi_py.mersenne_test(17, "ab")
    except psi_py.CapacityError:
        pass
    else:
        raise AssertionError("ab at p = 17 should exceed capacity")

    assert psi_py.coeff_table(6, 1, 2) == ["3*a^2*b - b^3", "-6*a^2 - 6*a*b + 6*b^2", "12*a - 9*b", "2"]
    assert psi_py.tau_identity(3, "quarter") == (["1", "-8", "8"], True)
    assert all(psi_py.bridge_failures(name) == [] for name in psi_py.bridge_names())
    period, table = psi_py.period("1", "1")
    assert period == len(table) == 6, (period, table)
    print("psi_py smoke test: ok")


if __name__ == "__main__":
    main()
