"""Independent dense reference computations used as test oracles.

Nothing here imports the library's linear algebra: products, Kronecker
products and group algebra structure constants are written out directly
with Fraction lists.
"""

from fractions import Fraction

from hypothesis import strategies as st


def dense(f):
    """The library morphism as a list of Fraction rows."""
    return [[Fraction(int(x.numerator), int(x.denominator)) if hasattr(x, "denominator")
             else Fraction(int(x)) for x in row] for row in f.mat]


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def kron(a, b):
    ra, ca, rb, cb = len(a), len(a[0]), len(b), len(b[0])
    return [[a[i // rb][j // cb] * b[i % rb][j % cb] for j in range(ca * cb)]
            for i in range(ra * rb)]


def eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def perm_matrix(images, n_cod=None):
    n_cod = n_cod if n_cod is not None else len(images)
    return [[Fraction(int(images[j] == i)) for j in range(len(images))] for i in range(n_cod)]


def group_algebra_constants(op):
    """Dense (unit, prod, counit, coprod, antipode) of K[G] from a table."""
    n = len(op)
    ident = next(e for e in range(n) if all(op[e][x] == x for x in range(n)))
    inv = [next(y for y in range(n) if op[x][y] == ident) for x in range(n)]
    unit = [[Fraction(int(i == ident))] for i in range(n)]
    prod = perm_matrix([op[a][b] for a in range(n) for b in range(n)], n)
    counit = [[Fraction(1)] * n]
    coprod = perm_matrix([g * n + g for g in range(n)], n * n)
    antipode = perm_matrix(inv, n)
    return unit, prod, counit, coprod, antipode


def rationals(bound=6):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


def dense_matrices(rows, cols, bound=6):
    return st.lists(st.lists(rationals(bound), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)
