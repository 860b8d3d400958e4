"""Independent reference computations used by several test files (sympy only)."""

import sympy

X, Y, Z, W = SYMS = sympy.symbols("X Y Z W")
T_IDEAL = [X * Z - Y**2, X * W - Y * Z, Y * W - Z**2, X]
_T_GB = sympy.groebner(T_IDEAL, *SYMS, order="grevlex")


def t_basis(n):
    """Monomial basis of T in degree n: W^n, Y W^(n-1), Z W^(n-1)."""
    if n < 0:
        return []
    if n == 0:
        return [sympy.Integer(1)]
    return [W**n, Y * W**(n - 1), Z * W**(n - 1)]


def t_normal(expr):
    return sympy.expand(_T_GB.reduce(sympy.expand(expr))[1])


def _coords(expr, n):
    """Coordinates of a degree-n element of T in t_basis(n)."""
    e = t_normal(expr)
    basis = t_basis(n)
    out = [0] * len(basis)
    if e == 0:
        return out
    poly = sympy.Poly(e, *SYMS)
    for mono, c in poly.terms():
        m = sympy.Mul(*[s**k for s, k in zip(SYMS, mono)])
        out[basis.index(m)] = c
    return out


def _linear_map(matrix, src_shift, tgt_shift, n):
    """k-matrix of ``a -> matrix * a`` from (T^c)_n to (T^r)_(n+1), entries linear forms."""
    rows, cols = len(matrix), len(matrix[0])
    src = [(j, b) for j in range(cols) for b in t_basis(n + src_shift)]
    tgt_len = len(t_basis(n + tgt_shift))
    M = sympy.zeros(rows * tgt_len, len(src))
    for k, (j, b) in enumerate(src):
        for i in range(rows):
            c = _coords(matrix[i][j] * b, n + tgt_shift)
            for t, v in enumerate(c):
                M[i * tgt_len + t, k] = v
    return M, len(src)


def ext1_t_tj_dimension(max_degree=6):
    """dim_k Ext^1_T(T/J, T) by degree-truncated linear algebra.

    Resolution F2 -> F1 -> F0 of T/J with d1 = (y z) and hand-checked syzygies
    d2 = columns (y,0), (z,0), (0,y), (w,-z).  Dualising gives
    T -> T^2 -> T^4 with matrices d1^t and d2^t, all of degree one.
    """
    d1t = [[Y], [Z]]
    d2t = [[Y, 0], [Z, 0], [0, Y], [W, -Z]]
    total = 0
    for n in range(0, max_degree + 1):
        A, dim_c1 = _linear_map(d2t, 0, 1, n)  # cocycles: kernel of (T^2)_n -> (T^4)_(n+1)
        B, _ = _linear_map(d1t, -1, 0, n)      # coboundaries: image of T_(n-1) -> (T^2)_n
        ker = dim_c1 - (A.rank() if A.shape[0] else 0)
        im = B.rank() if B.shape[1] else 0
        total += ker - im
    return total


def coker_h_dimension(max_degree=6):
    """dim_k coker(h) for R/I = T/(y) over T.

    (T/(y))* = (0 :_T y) = J = (y, z), so the bidual is Hom_T(J, T): pairs
    (a, b) = (phi(y), phi(z)) killed by the syzygies of (y, z), i.e. the
    kernel of d2^t.  The image of h is T * (y, z), the image of d1^t.  The
    quotient is the same graded linear algebra as Ext^1 above.
    """
    return ext1_t_tj_dimension(max_degree)
