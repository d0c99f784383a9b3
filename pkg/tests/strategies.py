from hypothesis import strategies as st


@st.composite
def partitions(draw, min_n=0, max_n=30):
    """Random partitions built from random compositions."""
    n = draw(st.integers(min_n, max_n))
    parts = []
    left = n
    while left:
        k = draw(st.integers(1, left))
        parts.append(k)
        left -= k
    return tuple(sorted(parts, reverse=True))


@st.composite
def partition_pairs(draw, min_n=1, max_n=30):
    lam = draw(partitions(min_n, max_n))
    n = sum(lam)
    mu = draw(partitions(n, n))
    return lam, mu
