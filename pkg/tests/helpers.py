import numpy as np


def assert_matrix_close(a, b, tol):
    err = float(np.sqrt(np.sum(np.abs(np.asarray(a) - np.asarray(b)) ** 2)))
    assert err <= tol, f"Frobenius residual {err:.3e} > {tol:.1e}"
