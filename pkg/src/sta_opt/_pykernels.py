"""Pure numpy kernels. Reference behaviour for the compiled ``_ckernels``."""

import numpy as np

SPHERE, ROSENBROCK, RASTRIGIN, GRIEWANK = range(4)


def evaluate(code, X):
    """Evaluate benchmark ``code`` on every row of ``X`` (shape ``(m, n)``)."""
    X = np.asarray(X, dtype=np.float64)
    if code == SPHERE:
        return np.sum(X * X, axis=1)
    if code == ROSENBROCK:
        head, tail = X[:, :-1], X[:, 1:]
        return np.sum(100.0 * (tail - head * head) ** 2 + (head - 1.0) ** 2, axis=1)
    if code == RASTRIGIN:
        return np.sum(X * X - 10.0 * np.cos(2.0 * np.pi * X) + 10.0, axis=1)
    if code == GRIEWANK:
        root_i = np.sqrt(np.arange(1, X.shape[1] + 1, dtype=np.float64))
        return np.sum(X * X, axis=1) / 4000.0 - np.prod(np.cos(X / root_i), axis=1) + 1.0
    raise ValueError(f"unknown benchmark code {code}")


def rotation_candidates(x, alpha, R, lower, upper):
    n = x.shape[0]
    u = x / np.max(np.abs(x))
    scale = alpha / (n * np.sqrt(np.dot(u, u)))
    out = x + scale * np.matmul(R, u)
    return np.clip(out, lower, upper, out=out)


def translation_candidates(x, unit, beta, r, lower, upper):
    out = x + (beta * r)[:, None] * unit
    return np.clip(out, lower, upper, out=out)


def expansion_candidates(x, gamma, G, lower, upper):
    out = x + gamma * (G * x)
    return np.clip(out, lower, upper, out=out)


def tour_lengths(D, perms):
    """Closed-tour lengths for each row of ``perms`` under distance matrix ``D``."""
    perms = np.asarray(perms, dtype=np.intp)
    return np.sum(D[perms, np.roll(perms, -1, axis=1)], axis=1)
