"""Random instance generators shared by the test modules."""

from locring.matrix import Matrix


def random_poly(P, rng, deg, max_terms=3, coeff=5):
    out = P.zero
    for _ in range(rng.randint(0, max_terms)):
        e = [0] * P.nvars
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(P.nvars)] += 1
        out = out + P.monomial(e, rng.randint(-coeff, coeff))
    return out


def random_matrix(R, rng, m, n, deg, max_terms=3):
    P = R.base
    return Matrix(R, [[random_poly(P, rng, deg, max_terms) for _ in range(n)] for _ in range(m)], n)
