import pytest
from hypothesis import strategies as st

from covertor.batch import load_corpus
from covertor.notation import BraidWord, closure_components


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


def _close_up(k: int, letters: list[int], signs) -> BraidWord:
    """Append generators merging closure cycles until one component is left."""
    b = BraidWord(k, tuple(letters))
    j = 0
    while closure_components(b) > 1:
        perm = b.permutation()
        cycle = {}
        for s in range(k):
            if s not in cycle:
                x = s
                while x not in cycle:
                    cycle[x] = s
                    x = perm[x]
        pos = [None] * k
        for s in range(k):
            pos[perm[s]] = cycle[s]
        i = next(i for i in range(k - 1) if pos[i] != pos[i + 1])
        letters.append((i + 1) * signs[j % len(signs)])
        j += 1
        b = BraidWord(k, tuple(letters))
    return b


@st.composite
def knot_braids(draw, max_strands=4, max_len=10):
    """Random braid words whose closure is a knot."""
    k = draw(st.integers(2, max_strands))
    letter = st.integers(1, k - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    letters = draw(st.lists(letter, min_size=1, max_size=max_len))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=1, max_size=4))
    return _close_up(k, letters, signs)
