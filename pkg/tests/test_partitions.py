import pytest
from hypothesis import given, strategies as st

from oc_verifier.partitions import (
    enumerate_basis,
    enumerate_even,
    format_partition,
    from_even,
    is_valid_even,
    is_valid_odd,
    make_shape,
    parse_partition,
    point_partition,
    to_even,
)
from oracles import SWEEP6, brute_force_basis

shapes = st.integers(1, 6).flatmap(lambda n: st.tuples(st.integers(1, n), st.just(n)))


@pytest.mark.parametrize("k,n,dim,r,top", [(2, 2, 5, 4, 3), (1, 2, 4, 5, 4), (4, 5, 22, 8, 7)])
def test_shape_constants(k, n, dim, r, top):
    s = make_shape(k, n)
    assert (s.dimension, s.fano_index, s.max_part, s.strictness) == (dim, r, top, n - k)


@pytest.mark.parametrize("k,n", [(3, 2), (0, 2), (4, 2), (1, 0)])
def test_make_shape_rejects(k, n):
    with pytest.raises(ValueError):
        make_shape(k, n)


def test_lagrangian_message():
    with pytest.raises(ValueError, match="Lagrangian"):
        make_shape(3, 2)


def test_validity_examples(ig25):
    assert not is_valid_odd(ig25, (2, 2))
    assert is_valid_odd(ig25, (3, -1))
    assert not is_valid_odd(ig25, (2, -1))
    assert not is_valid_odd(ig25, (3,))


def test_ig25_basis(ig25):
    # ascending weight, ties in lexicographically descending order
    assert enumerate_basis(ig25) == (
        (0, 0), (1, 0), (3, -1), (2, 0), (3, 0), (2, 1), (3, 1), (3, 2))


@pytest.mark.parametrize("k,n,expected", [(1, 1, 3), (1, 2, 5)])
def test_projective_space_basis(k, n, expected):
    basis = enumerate_basis(make_shape(k, n))
    assert basis == tuple((i,) for i in range(expected))


@pytest.mark.parametrize("k,n", SWEEP6)
def test_basis_matches_brute_force(k, n):
    shape = make_shape(k, n)
    basis = enumerate_basis(shape)
    assert sorted(basis) == sorted(brute_force_basis(k, n))
    assert len(set(basis)) == len(basis)
    weights = [sum(p) for p in basis]
    assert weights == sorted(weights)
    assert all(0 <= w <= shape.dimension for w in weights)
    # exactly one class in weights 0, 1 and dim
    for w, cls in [(0, (0,) * k), (1, (1,) + (0,) * (k - 1)), (shape.dimension, point_partition(shape))]:
        assert [p for p in basis if sum(p) == w] == [cls]


@pytest.mark.parametrize("k,n", SWEEP6)
def test_even_odd_correspondence(k, n):
    shape = make_shape(k, n)
    for lam in enumerate_basis(shape):
        ev = to_even(shape, lam)
        assert is_valid_even(shape, ev)
        assert from_even(shape, ev) == lam
    contained = {p for p in enumerate_even(shape) if is_valid_even(shape, p)}
    assert contained == {to_even(shape, lam) for lam in enumerate_basis(shape)}


def test_to_even_examples(ig25):
    assert to_even(make_shape(5, 7), (10, 5, 2, 2, -1)) == (11, 6, 3, 3, 0)
    assert to_even(ig25, (0, 0)) == (1, 1)
    assert to_even(ig25, (3, -1)) == (4, 0)


def test_from_even_rejects_uncontained(ig25):
    # first column short but first row not full
    with pytest.raises(ValueError):
        from_even(ig25, (3, 0))


@given(shapes, st.data())
def test_strictness_transfers(kn, data):
    shape = make_shape(*kn)
    k = shape.k
    parts = tuple(sorted(data.draw(st.lists(st.integers(-1, shape.max_part), min_size=k, max_size=k)), reverse=True))
    odd_ok = is_valid_odd(shape, parts)
    assert odd_ok == is_valid_even(shape, tuple(p + 1 for p in parts))


@pytest.mark.parametrize("k,n,rho", [(2, 2, (3, 2)), (4, 5, (7, 6, 5, 4)), (1, 2, (4,))])
def test_point_partition(k, n, rho):
    shape = make_shape(k, n)
    assert point_partition(shape) == rho
    assert sum(rho) == shape.dimension


def test_parse_format_roundtrip():
    assert parse_partition("3,-1") == (3, -1)
    assert parse_partition(" (3, -1) ") == (3, -1)
    assert format_partition((3, -1)) == "3,-1"
    with pytest.raises(ValueError):
        parse_partition("3,x")
    with pytest.raises(ValueError):
        parse_partition("")
