from hypothesis import strategies as st

from cayleyspec.perms import IntegerPartition, Permutation


@st.composite
def permutations(draw, n=None, min_n=1, max_n=6):
    n = n if n is not None else draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def permutation_pairs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return draw(permutations(n)), draw(permutations(n))


@st.composite
def integer_partitions(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    parts, rest = [], n
    while rest:
        k = draw(st.integers(1, min(rest, parts[-1] if parts else rest)))
        parts.append(k)
        rest -= k
    return IntegerPartition(tuple(parts))
