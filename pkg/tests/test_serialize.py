import json

from hypothesis import given, strategies as st

from vff import ALPHA, GAMMA, I, FockVector, Partition
from vff.linalg import ScalarMatrix
from vff.partitions import enumerate_level
from vff.serialize import (
    fock_from_obj,
    fock_to_obj,
    kac_table_csv,
    matrix_csv,
    matrix_from_obj,
    matrix_to_obj,
    partition_from_obj,
    partition_to_obj,
    scalar_from_obj,
    scalar_to_obj,
    singular_from_obj,
    singular_to_obj,
)
from vff.structure import descendant_matrix, kac_factors, singular_vector

from conftest import scalars

partitions = st.integers(0, 5).flatmap(lambda n: st.sampled_from(enumerate_level(n)))


def _rt(obj):
    return json.loads(json.dumps(obj))


@given(scalars())
def test_scalar_round_trip(x):
    assert scalar_from_obj(_rt(scalar_to_obj(x))) == x


def test_scalar_schema():
    obj = scalar_to_obj(GAMMA / 2 + I * ALPHA)
    assert obj["re"] == {"num": [["1/2", 1, 0]], "den": [["1", 0, 0]]}
    assert obj["im"] == {"num": [["1", 0, 1]], "den": [["1", 0, 0]]}


@given(st.dictionaries(partitions, scalars(), max_size=4))
def test_fock_round_trip(terms):
    v = FockVector(terms)
    assert fock_from_obj(_rt(fock_to_obj(v))) == v


def test_fock_schema():
    obj = fock_to_obj(FockVector({(2, 1, 1): GAMMA}))
    assert obj["terms"][0]["phi"] == [[1, 2], [2, 1]]


@given(partitions)
def test_partition_round_trip(p):
    assert partition_from_obj(_rt(partition_to_obj(p))) == p


@given(st.integers(1, 3).flatmap(lambda n: st.lists(st.lists(scalars(), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_matrix_round_trip(rows):
    labels = [Partition((k,)) for k in range(len(rows), 0, -1)]
    m = ScalarMatrix(labels, labels, rows)
    assert matrix_from_obj(_rt(matrix_to_obj(m))) == m


def test_singular_round_trip():
    res = singular_vector(2, 2)
    back = singular_from_obj(_rt(singular_to_obj(res)))
    assert back == res


def test_csv():
    assert kac_table_csv(kac_factors(2)).splitlines() == ["r,s,exponent", "1,1,1", "1,2,1", "2,1,1"]
    text = matrix_csv(descendant_matrix(2))
    assert text.splitlines()[0] == ',2,"1,1"'
