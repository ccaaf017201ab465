import pytest

from polyqsym.ring import FormalSum, PRODUCT_RING


@pytest.fixture(scope="session")
def catalogue():
    from polyqsym.suites import catalogue as build
    return build()


def fs(poly, ambient=PRODUCT_RING, coeff=1):
    return FormalSum.of(poly, ambient, coeff)


def brute_flag_number(poly, subset):
    """Independent oracle: enumerate strictly increasing face chains by
    direct recursion over the order relation."""
    lat = poly.lattice
    subset = tuple(sorted(set(subset) - {-1, poly.dim}))
    ranks = [a + 1 for a in subset]
    if not ranks:
        return 1
    strata = [lat.elements_of_rank(r) for r in ranks]

    def count(i, below):
        if i == len(strata):
            return 1
        total = 0
        for x in strata[i]:
            if below is None or lat.leq(below, x):
                total += count(i + 1, x)
        return total

    return count(0, None)


def omega_words(n):
    from polyqsym.transforms import basis_word_strings
    return basis_word_strings(n)
