from hypothesis import settings, strategies as st

from schurkit.partition import Partition, partitions_of

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def partitions(max_weight: int = 6, min_weight: int = 0):
    """Hypothesis strategy: a partition of weight in [min_weight, max_weight]."""
    return st.integers(min_weight, max_weight).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def coefficients():
    return st.fractions(min_value=-5, max_value=5, max_denominator=4)


def symfuncs(max_weight: int = 4, basis: str = "s"):
    from schurkit.symfunc import SymFunc

    return st.dictionaries(partitions(max_weight), coefficients(), max_size=4).map(lambda d: SymFunc(d, basis))
