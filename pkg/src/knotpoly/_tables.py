"""Entry tables for the built-in R-matrices.

Dense tables map 1-based ``(row, col)`` positions of the 16x16 matrix (basis
``e_1⊗e_1, e_1⊗e_2, ...``) to entries.  Block tables list invariant subspaces
of the 64x64 matrices as ``(labels, prefactor, rows)``: ``labels[k] = (i, j)``
names the basis vector ``v_i⊗v_j`` used both for row ``k`` and column ``k``,
and ``rows[k][m]`` is the entry in row ``labels[k]``, column ``labels[m]``
before multiplying by ``prefactor``.  Entries are polynomial text; ``r`` is
the free parameter substituted at build time and ``zeta`` is the imaginary
unit.
"""

V1_R = {
    (1, 1): '-1',
    (2, 5): '-1',
    (3, 9): '-1',
    (4, 13): '-1',
    (5, 2): '-t0',
    (5, 5): 't0 - 1',
    (6, 6): 't0',
    (7, 10): '-r^-1 * t1^-1',
    (7, 13): 't1^-1 - 1',
    (8, 14): 'r^-1 * t1^-1',
    (9, 3): '-t1',
    (9, 9): 't1 - 1',
    (10, 7): '-r * t1',
    (10, 13): 'r * (t1 - 1)',
    (11, 11): 't1',
    (12, 15): 'r * t1',
    (13, 4): '-t0 * t1',
    (13, 7): '(t0 - 1) * t1',
    (13, 10): 'r^-1 * (1 - t0)',
    (13, 13): 't0 + t1 - 2',
    (14, 8): 'r * t0 * t1',
    (14, 14): 't0 - 1',
    (15, 12): 'r^-1',
    (15, 15): 't1 - 1',
    (16, 16): '-1',
}

LAMBDA1_R = {
    (1, 1): '1',
    (2, 5): '1',
    (3, 9): '1',
    (4, 13): '1',
    (5, 2): 't0',
    (5, 5): '1 - t0',
    (6, 6): '-t0',
    (7, 10): 't0 * r',
    (7, 13): '1 - t0',
    (8, 14): '-t0 * r',
    (9, 3): 't1',
    (9, 9): '1 - t1',
    (10, 7): 't1 * r^-1',
    (10, 13): '(1 - t1) * r^-1',
    (11, 11): '-t1',
    (12, 15): '-t1 * r^-1',
    (13, 4): 't0 * t1',
    (13, 7): '(1 - t0) * t1',
    (13, 10): 't0 * (1 - t1) * r',
    (13, 13): '(1 - t0) * (1 - t1)',
    (14, 8): '-t0 * t1 * r^-1',
    (14, 14): '-t0 * (1 - t1)',
    (15, 12): '-t0 * t1 * r',
    (15, 15): '-t1 * (1 - t0)',
    (16, 16): 't0 * t1',
}

LAMBDA_M1_BLOCKS = (
    (((1, 1),), '1', (
        ('1',),
    )),
    (((2, 2),), '1', (
        ('-s',),
    )),
    (((3, 3),), '1', (
        ('-t',),
    )),
    (((6, 6),), '1', (
        ('-s^2 * t',),
    )),
    (((7, 7),), '1', (
        ('-s * t^2',),
    )),
    (((8, 8),), '1', (
        ('s^2 * t^2',),
    )),
    (((1, 2), (2, 1)), '1', (
        ('0', '1'),
        ('s', '1 - s'),
    )),
    (((1, 3), (3, 1)), '1', (
        ('0', '1'),
        ('t', '1 - t'),
    )),
    (((2, 6), (6, 2)), '1', (
        ('0', 'r * s'),
        ('-((s^2 * t) / (r))', '-s * (1 + s * t)'),
    )),
    (((3, 7), (7, 3)), '1', (
        ('0', '-((t) / (r))'),
        ('r * s * t^2', '-t * (1 + s * t)'),
    )),
    (((6, 8), (8, 6)), '1', (
        ('0', 'r^2 * s^2 * t'),
        ('((s^2 * t^2) / (r^2))', '-s^2 * t * (1 - t)'),
    )),
    (((7, 8), (8, 7)), '1', (
        ('0', '((s * t^2) / (r^2))'),
        ('r^2 * s^2 * t^2', '-s * t^2 * (1 - s)'),
    )),
    (((1, 4), (1, 5), (2, 3), (3, 2), (5, 1), (4, 1)), '1', (
        ('0', '0', '0', '0', '0', '1'),
        ('0', '0', '0', '0', '1', '0'),
        ('0', '0', '0', 'r * s', 'r * (1 - s)', '1 + s'),
        ('0', '0', '-((t) / (r))', '0', '1 + t', '((t - 1) / (r))'),
        ('0', 't * s', '0', 's * (1 - t)', '1 - s', '((s * (1 - t)) / (r))'),
        ('s * t', '0', 't * (1 - s)', '0', 'r * t * (s - 1)', '1 - t'),
    )),
    (((1, 6), (2, 4), (2, 5), (5, 2), (4, 2), (6, 1)), '1', (
        ('0', '0', '0', '0', '0', '1'),
        ('0', '0', '0', '0', '-r * s', 'r * (s - 1)'),
        ('0', '0', '0', '-r * s', '0', '1 + s'),
        ('0', '0', '((s * t) / (r))', '-s * (1 + t)', '((s * (1 - t)) / (r))', '((1 + s * t) / (r))'),
        ('0', '((s * t) / (r))', '0', '0', '0', '1 + s * t'),
        ('s^2 * t', '0', 't * s * (1 - s)', 'r * s * t * (s - 1)', 's * (1 - t)', '(1 - s) * (1 + s * t)'),
    )),
    (((1, 7), (3, 5), (3, 4), (4, 3), (5, 3), (7, 1)), '1', (
        ('0', '0', '0', '0', '0', '1'),
        ('0', '0', '0', '0', '((t) / (r))', '((1 - t) / (r))'),
        ('0', '0', '0', '((t) / (r))', '0', '1 + t'),
        ('0', '0', '-r * s * t', '-(1 + s) * t', 'r * t * (s - 1)', '-r * (1 + s * t)'),
        ('0', '-r * s * t', '0', '0', '0', '1 + s * t'),
        ('s * t^2', '0', 't * s * (1 - t)', '((t * s * (1 - t)) / (r))', 't * (1 - s)', '(1 - t) * (1 + s * t)'),
    )),
    (((2, 8), (5, 6), (4, 6), (6, 4), (6, 5), (8, 2)), '1', (
        ('0', '0', '0', '0', '0', 'r^2 * s'),
        ('0', '0', '0', '0', '-((s * t) / (r))', '((s * (t - 1)) / (r))'),
        ('0', '0', '0', '-((s * t) / (r))', '0', '0'),
        ('0', '0', 'r * s^2 * t', '0', 'r * s * t * (1 - s)', 'r * s * t * (s - 1)'),
        ('0', 'r * s^2 * t', '0', '0', '-s * t * (1 + s)', 's * (t - 1)'),
        ('((s^2 * t^2) / (r^2))', 'r * s^2 * t * (1 + t)', 's^2 * t * (t - 1)', '((s * t * (1 + s * t)) / (r))', '-s * t * (1 + s * t)', 's * (t - 1) * (1 + s * t)'),
    )),
    (((3, 8), (4, 7), (5, 7), (7, 5), (7, 4), (8, 3)), '1', (
        ('0', '0', '0', '0', '0', '((t) / (r^2))'),
        ('0', '0', '0', '0', 'r * s * t', '((t * (s - 1)) / (r))'),
        ('0', '0', '0', 'r * s * t', '0', '0'),
        ('0', '0', '-((s * t^2) / (r))', '0', '((s * t * (t - 1)) / (r))', '((s * t * (t - 1)) / (r^3))'),
        ('0', '-((s * t^2) / (r))', '0', '0', '-s * t * (1 + t)', '-((t * (s - 1)) / (r^2))'),
        ('r^2 * s^2 * t^2', 'r * s * t^2 * (1 + s)', 'r^2 * s * t^2 * (1 - s)', 'r^3 * s * t * (1 + s * t)', 'r^2 * s * t * (1 + s * t)', 't * (s - 1) * (1 + s * t)'),
    )),
    (((4, 8), (5, 8), (6, 7), (7, 6), (8, 5), (8, 4)), '1', (
        ('0', '0', '0', '0', '0', 's * t'),
        ('0', '0', '0', '0', 's * t', '0'),
        ('0', '0', '0', '-r^3 * s^2 * t', 'r * s * t * (1 - s)', '0'),
        ('0', '0', '((s * t^2) / (r^3))', '0', '0', '((s * t * (1 - t)) / (r^3))'),
        ('0', 's^2 * t^2', '-((s * (1 + s) * t^2) / (r))', 'r^2 * s^2 * t * (t - 1)', 's^2 * t * (t - 1)', '((s * t * (t - 1)) / (r))'),
        ('s^2 * t^2', '0', 's * t^2 * (1 - s)', '-r^3 * s^2 * t * (1 + t)', 'r * s * t * (1 - s)', 's * (s - 1) * t^2'),
    )),
    (((1, 8), (2, 7), (3, 6), (4, 5), (4, 4), (5, 5), (5, 4), (6, 3), (7, 2), (8, 1)), '1', (
        ('0', '0', '0', '0', '0', '0', '0', '0', '0', '1'),
        ('0', '0', '0', '0', '0', '0', '0', '0', '-r^2 * s', '1 - s'),
        ('0', '0', '0', '0', '0', '0', '0', '-((t) / (r^2))', '0', '((t - 1) / (r^2))'),
        ('0', '0', '0', '0', '0', '0', '-s * t', '((t * (s + 1)) / (r))', '0', '((1 - t) / (r))'),
        ('0', '0', '0', '0', '-s * t', '0', '0', 't * (s - 1)', '0', '(1 - s) * t'),
        ('0', '0', '0', '0', '0', '-s * t', '0', '0', 's * (t - 1)', '((s * (t - 1)) / (r^2))'),
        ('0', '0', '0', '-s * t', '0', '0', '0', '0', '-r * s * (1 + t)', '((1 - s) / (r))'),
        ('0', '0', '-r^2 * s^2 * t', '-r * s * t * (s + 1)', '0', 'r^2 * s * t * (s - 1)', '0', '0', '-r^2 * s * (1 + s * t)', '(1 - s) * (1 + s * t)'),
        ('0', '-((s * t^2) / (r^2))', '0', '0', '((s * t * (t - 1)) / (r^2))', '0', '((s * t * (t + 1)) / (r))', '-((t * (1 + s * t)) / (r^2))', '0', '(((t - 1) * (1 + s * t)) / (r^2))'),
        ('s^2 * t^2', 's * t^2 * (1 - s)', 'r^2 * s^2 * t * (t - 1)', 'r * s^2 * t * (t - 1)', 's * t * (1 - t)', 'r^2 * s * t * (s - 1)', 'r * s * t^2 * (s - 1)', '(t * (1 - s)) * ((1 + s * t))', '(r^2 * s * (t - 1)) * ((1 + s * t))', '((s - 1) * (t - 1)) * ((1 + s * t))'),
    )),
)

# Eleven entries here differ from the widely circulated version of this table
# (the (6,5) diagonal entry and rows (8,2), (8,3), (8,4), (8,5)); with those
# values the matrix fails the trace, rotation and Yang-Baxter axioms.  The
# values below restore all axioms and the diagonal conjugacy to the Λ_{-1}
# matrix, and are pinned by tests.
SL3_BLOCKS = (
    (((1, 1),), '1', (
        ('t1^2 * t2^2',),
    )),
    (((2, 2),), '1', (
        ('-t2^2',),
    )),
    (((3, 3),), '1', (
        ('-t1^2',),
    )),
    (((6, 6),), '1', (
        ('-t1^-2',),
    )),
    (((7, 7),), '1', (
        ('-t2^-2',),
    )),
    (((8, 8),), '1', (
        ('t1^-2 * t2^-2',),
    )),
    (((1, 2), (2, 1)), 't2^2', (
        ('0', 't1'),
        ('t1', 't1^2 - 1'),
    )),
    (((1, 3), (3, 1)), 't1^2', (
        ('0', 't2'),
        ('t2', 't2^2 - 1'),
    )),
    (((2, 6), (6, 2)), '-t1^-1*t2', (
        ('0', 'zeta'),
        ('zeta', 't1 * t2 + t1^-1 * t2^-1'),
    )),
    (((3, 7), (7, 3)), '-t1*t2^-1', (
        ('0', 'zeta'),
        ('zeta', 't1 * t2 + t1^-1 * t2^-1'),
    )),
    (((6, 8), (8, 6)), '-t1^-2', (
        ('0', 't2^-1'),
        ('t2^-1', '1 - t2^-2'),
    )),
    (((7, 8), (8, 7)), '-t2^-2', (
        ('0', 't1^-1'),
        ('t1^-1', '1 - t1^-2'),
    )),
    (((1, 4), (1, 5), (2, 3), (3, 2), (5, 1), (4, 1)), '1', (
        ('0', '0', '0', '0', '0', 't1 * t2'),
        ('0', '0', '0', '0', 't1 * t2', '0'),
        ('0', '0', '0', '-zeta * t1 * t2', 'zeta * t2 * (1 - t1^2)', 't2 * (t1^2 + 1)'),
        ('0', '0', '-zeta * t1 * t2', '0', 't1 * (t2^2 + 1)', 'zeta * t1 * (1 - t2^2)'),
        ('0', 't1 * t2', '0', 't1 * (t2^2 - 1)', 't2^2 * (t1^2 - 1)', 'zeta * (t2^2 - 1)'),
        ('t1 * t2', '0', 't2 * (t1^2 - 1)', '0', 'zeta * (t1^2 - 1)', 't1^2 * (t2^2 - 1)'),
    )),
    (((1, 6), (2, 4), (2, 5), (5, 2), (4, 2), (6, 1)), '1', (
        ('0', '0', '0', '0', '0', 't2'),
        ('0', '0', '0', '0', 'zeta * t2', 'zeta * t2 * (t1 - t1^-1)'),
        ('0', '0', '0', 'zeta * t2', '0', 't2 * (t1 + t1^-1)'),
        ('0', '0', 'zeta * t2', '-(t2^2 + 1)', 'zeta * (t2^2 - 1)', 'zeta * (t1 * t2^2 + t1^-1)'),
        ('0', 'zeta * t2', '0', '0', '0', '(t1 * t2^2 + t1^-1)'),
        ('t2', '0', 't2 * (t1 - t1^-1)', 'zeta * (t1 - t1^-1)', 't1 * (t2^2 - 1)', '(t2^2 + t1^-2) * (t1^2 - 1)'),
    )),
    (((1, 7), (3, 5), (3, 4), (4, 3), (5, 3), (7, 1)), '1', (
        ('0', '0', '0', '0', '0', 't1'),
        ('0', '0', '0', '0', 'zeta * t1', 'zeta * t1 * (t2 - t2^-1)'),
        ('0', '0', '0', 'zeta * t1', '0', 't1 * (t2 + t2^-1)'),
        ('0', '0', 'zeta * t1', '-(t1^2 + 1)', 'zeta * (t1^2 - 1)', 'zeta * (t1^2 * t2 + t2^-1)'),
        ('0', 'zeta * t1', '0', '0', '0', '(t1^2 * t2 + t2^-1)'),
        ('t1', '0', 't1 * (t2 - t2^-1)', 'zeta * (t2 - t2^-1)', 't2 * (t1^2 - 1)', '(t1^2 + t2^-2) * (t2^2 - 1)'),
    )),
    (((2, 8), (5, 6), (4, 6), (6, 4), (6, 5), (8, 2)), '1', (
        ('0', '0', '0', '0', '0', '-t1^-1'),
        ('0', '0', '0', '0', '-zeta * t1^-1', 'zeta * t1^-1 * (t2^-1 - t2)'),
        ('0', '0', '0', '-zeta * t1^-1', '0', '0'),
        ('0', '0', '-zeta * t1^-1', '0', 'zeta * (t1^-2 - 1)', 'zeta * t2^-1 * (1 - t1^-2)'),
        ('0', '-zeta * t1^-1', '0', '0', '-t1^-2 * (t1^2 + 1)', 't2^-1 - t2'),
        ('-t1^-1', '-zeta * t1^-1 * (t2^-1 + t2)', 't1^-1 * (t2^-1 - t2)', 'zeta * (t2 + t1^-2 * t2^-1)', '-(t2 + t1^-2 * t2^-1)', '(1 + t1^-2 * t2^-2) * (1 - t2^2)'),
    )),
    (((3, 8), (4, 7), (5, 7), (7, 5), (7, 4), (8, 3)), '1', (
        ('0', '0', '0', '0', '0', '-t2^-1'),
        ('0', '0', '0', '0', '-zeta * t2^-1', 'zeta * t2^-1 * (t1^-1 - t1)'),
        ('0', '0', '0', '-zeta * t2^-1', '0', '0'),
        ('0', '0', '-zeta * t2^-1', '0', 'zeta * (t2^-2 - 1)', 'zeta * t1^-1 * (1 - t2^-2)'),
        ('0', '-zeta * t2^-1', '0', '0', '-t2^-2 * (t2^2 + 1)', '(t1^-1 - t1)'),
        ('-t2^-1', '-zeta * t2^-1 * (t1^-1 + t1)', 't2^-1 * (t1^-1 - t1)', 'zeta * (t1 + t1^-1 * t2^-2)', '-(t1 + t1^-1 * t2^-2)', '(1 + t1^-2 * t2^-2) * (1 - t1^2)'),
    )),
    (((4, 8), (5, 8), (6, 7), (7, 6), (8, 5), (8, 4)), '1', (
        ('0', '0', '0', '0', '0', 't1^-1 * t2^-1'),
        ('0', '0', '0', '0', 't1^-1 * t2^-1', '0'),
        ('0', '0', '0', '-zeta * t1^-1 * t2^-1', 'zeta * t2^-1 * (t1^-2 - 1)', '0'),
        ('0', '0', '-zeta * t1^-1 * t2^-1', '0', '0', 'zeta * t1^-1 * (t2^-2 - 1)'),
        ('0', 't1^-1 * t2^-1', '-zeta * t2^-1 * (t1^-2 + 1)', 't1^-1 * (1 - t2^-2)', 't1^-2 * (t2^-2 - 1)', 'zeta * (t2^-2 - 1)'),
        ('t1^-1 * t2^-1', '0', 't2^-1 * (1 - t1^-2)', '-zeta * t1^-1 * (t2^-2 + 1)', 'zeta * (t1^-2 - 1)', 't2^-2 * (t1^-2 - 1)'),
    )),
    (((1, 8), (2, 7), (3, 6), (4, 5), (4, 4), (5, 5), (5, 4), (6, 3), (7, 2), (8, 1)), '1', (
        ('0', '0', '0', '0', '0', '0', '0', '0', '0', '1'),
        ('0', '0', '0', '0', '0', '0', '0', '0', '1', 't1 - t1^-1'),
        ('0', '0', '0', '0', '0', '0', '0', '1', '0', 't2 - t2^-1'),
        ('0', '0', '0', '0', '0', '0', '-1', 'zeta * (t1 + t1^-1)', '0', '((t2 - t2^-1)) * (zeta * t1)'),
        ('0', '0', '0', '0', '-1', '0', '0', 't1^-1 - t1', '0', '((t1 - t1^-1)) * (t2^-1)'),
        ('0', '0', '0', '0', '0', '-1', '0', '0', 't2^-1 - t2', '((t2 - t2^-1)) * (t1^-1)'),
        ('0', '0', '0', '-1', '0', '0', '0', '0', 'zeta * (t2 + t2^-1)', '((t1 - t1^-1)) * (zeta * t2)'),
        ('0', '0', '1', 'zeta * (t1 + t1^-1)', '0', 't1 - t1^-1', '0', '0', 't1 * t2 + t1^-1 * t2^-1', '((t1 * t2 + t1^-1 * t2^-1)) * ((t1 - t1^-1))'),
        ('0', '1', '0', '0', 't2 - t2^-1', '0', 'zeta * (t2 + t2^-1)', 't1 * t2 + t1^-1 * t2^-1', '0', '((t1 * t2 + t1^-1 * t2^-1)) * ((t2 - t2^-1))'),
        ('1', 't1 - t1^-1', 't2 - t2^-1', '((t2 - t2^-1)) * (zeta * t1^-1)', '((t2 - t2^-1)) * (t1)', '((t1 - t1^-1)) * (t2)', '((t1 - t1^-1)) * (zeta * t2^-1)', '((t1 * t2 + t1^-1 * t2^-1)) * ((t1 - t1^-1))', '((t1 * t2 + t1^-1 * t2^-1)) * ((t2 - t2^-1))', '((t1 - t1^-1) * (t2 - t2^-1)) * ((t1 * t2 + t1^-1 * t2^-1))'),
    )),
)
