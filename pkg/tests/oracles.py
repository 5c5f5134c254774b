"""Independent reference computations used to cross-check the library.

Nothing here imports the closed forms it is meant to check.
"""
from fractions import Fraction


def solve_linear(rows, rhs):
    """Gauss-Jordan over Fractions. Returns the unique solution or raises."""
    m = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    n = len(m[0]) - 1
    piv_row = 0
    pivots = []
    for col in range(n):
        pr = next((r for r in range(piv_row, len(m)) if m[r][col] != 0), None)
        if pr is None:
            continue
        m[piv_row], m[pr] = m[pr], m[piv_row]
        pv = m[piv_row][col]
        m[piv_row] = [x / pv for x in m[piv_row]]
        for r in range(len(m)):
            if r != piv_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[piv_row])]
        pivots.append(col)
        piv_row += 1
    for r in range(piv_row, len(m)):
        if m[r][-1] != 0:
            raise ValueError("inconsistent system")
    if len(pivots) != n:
        raise ValueError("underdetermined system")
    sol = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        sol[col] = m[r][-1]
    return sol


def bg_oracle(alpha, beta, gamma, t):
    """Solve for (A, B, C, D, E, F, p, q, u) from the monomial identity and the matching conditions.

    Unknown order: A B C D E F p q u. Re(Z_alpha^beta) = beta n - d - alpha k, Im = n.
    Monomial equations of Re*(A n + B d + C k) + n*(D n + E d + F k) = k(d+n-k) + p d^2 + q n^2 + u k^2:
      n^2: beta A + D - q = 0
      d^2: -B - p = 0
      k^2: -alpha C - u = -1
      nd : beta B - A + E = 0
      nk : beta C - alpha A + F = 1
      dk : -C - alpha B = 1
    Matching the tilted charge: 1 + t D = gamma, t E = 1, t F = -1.
    """
    a, b, g, t = map(Fraction, (alpha, beta, gamma, t))
    rows = [
        [b, 0, 0, 1, 0, 0, 0, -1, 0],
        [0, -1, 0, 0, 0, 0, -1, 0, 0],
        [0, 0, -a, 0, 0, 0, 0, 0, -1],
        [-1, b, 0, 0, 1, 0, 0, 0, 0],
        [-a, 0, b, 0, 0, 1, 0, 0, 0],
        [0, -a, -1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, t, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, t, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, t, 0, 0, 0],
    ]
    rhs = [0, 0, -1, 0, 1, 1, g - 1, 1, -1]
    A, B, C, D, E, F, p, q, u = solve_linear(rows, rhs)
    return dict(A=A, B=B, C=C, D=D, E=E, F=F, p=p, q=q, u=u)


def brute_min_positive(alpha, beta, bound=10):
    alpha, beta = Fraction(alpha), Fraction(beta)
    best = None
    for n in range(-bound, bound + 1):
        for k in range(-bound, bound + 1):
            base = alpha * k - beta * n
            for d in range(-bound, bound + 1):
                v = base + d
                if v > 0 and (best is None or v < best):
                    best = v
    return best


def tilt_slope_value(n, d, k, alpha, beta, gamma):
    """-(d + gamma n - k)/(d + alpha k - beta n) or None for infinity."""
    im = d + Fraction(alpha) * k - Fraction(beta) * n
    if im == 0:
        return None
    return -(d + Fraction(gamma) * n - k) / im
