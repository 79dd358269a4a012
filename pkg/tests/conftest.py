import random

import pytest

from flagcomb import TypeVector, flag_from_matrix
from flagcomb.codefile import parse_code

# A 3-flag code of type (1,3,5) on F_2^6 whose parameters are known exactly:
# pairwise distances 5, 5 and 2, hence d_f = 2.
TYPE_135_TEXT = """\
# type-(1,3,5) code on F_2^6
2 6 1,3,5

1 0 0 0 0 0
0 1 0 0 0 0
0 0 1 0 0 0
0 0 0 1 0 0
0 0 0 0 1 0

0 0 0 1 0 0
0 0 0 0 1 0
0 0 0 0 0 1
1 0 0 0 0 0
0 1 0 0 0 0

0 0 0 0 1 0
0 0 0 1 0 0
0 0 0 0 0 1
0 1 0 0 0 0
0 0 1 0 0 0
"""


@pytest.fixture
def type_135_text():
    return TYPE_135_TEXT


@pytest.fixture
def type_135_code():
    return parse_code(TYPE_135_TEXT)


def identity_rows(n):
    return [[1 if c == r else 0 for c in range(n)] for r in range(n)]


def standard_flag(q, n):
    """The full flag spanned by the standard basis in order."""
    return flag_from_matrix(q, n, TypeVector.full(n), identity_rows(n))


def reversed_flag(q, n):
    """The full flag spanned by the standard basis in reverse order."""
    return flag_from_matrix(q, n, TypeVector.full(n),
                            list(reversed(identity_rows(n))))


@pytest.fixture
def rng():
    return random.Random(20240817)
