import copy
import json

import pytest

from crossorder.errors import InputError
from crossorder.groups import FiniteGroup, GroupTableError
from crossorder.profile import (
    check_compatibility, coarsen_profile, profile_to_json, restrict, table_violations, validate_abstract,
)
from crossorder.randomtables import catalogue, random_tables
from crossorder.selftest import fixtures_dir
from crossorder.valuegroup import ValueGroup


def fixture_raw(name):
    return json.loads((fixtures_dir() / name).read_text())


def codes(doc):
    with pytest.raises(InputError) as exc:
        validate_abstract(doc)
    return {v.code for v in exc.value.violations}


def test_catalogue_groups_are_groups():
    orders = {name: g.order for name, g in catalogue().items()}
    assert orders["S3"] == 6 and orders["D4"] == 8 and orders["Q8"] == 8
    for g in catalogue().values():
        for sub in g.subgroups():
            assert g.order % len(sub) == 0
            cosets = g.right_cosets(sub)
            assert sorted(x for c in cosets for x in c) == list(g.elements())


def test_s3_is_nonabelian_and_q8_has_one_involution():
    S3, Q8 = catalogue()["S3"], catalogue()["Q8"]
    assert any(S3.mul(a, b) != S3.mul(b, a) for a in S3.elements() for b in S3.elements())
    assert [g for g in Q8.elements() if g != Q8.identity and Q8.inv(g) == g] == [4]


def test_group_table_errors():
    with pytest.raises(GroupTableError):
        FiniteGroup.from_table([[0, 1], [1, 1]])
    with pytest.raises(GroupTableError):
        FiniteGroup.from_table([[0, 1, 2], [1, 2, 0], [2, 1, 0]])


def test_klein_abstract_decomposition_groups():
    profile, table = validate_abstract(fixture_raw("klein-abstract.json"))
    assert profile.decomposition_group(0) == [0, 1] == profile.decomposition_group(1)
    assert not table_violations(profile, table)


@pytest.mark.parametrize("mutate, code", [
    (lambda d: d["cocycle_valuations"][0][0].__setitem__(1, 1), "normalization"),
    (lambda d: d["cocycle_valuations"][0][3].__setitem__(3, -1), "negative_value"),
    (lambda d: d["cocycle_valuations"][1][2].__setitem__(3, 5), "cocycle_law"),
    (lambda d: d.__setitem__("action", [[0, 1], [1, 0], [1, 0], [1, 0]]), "action_homomorphism"),
    (lambda d: d.__setitem__("action", [[0, 1], [0, 1], [0, 1], [0, 1]]), "action_not_transitive"),
    (lambda d: d.__setitem__("action", [[0, 1], [0, 0], [1, 0], [1, 0]]), "action_not_permutation"),
    (lambda d: d["cocycle_valuations"].pop(), "table_shape"),
])
def test_abstract_violations(mutate, code):
    doc = copy.deepcopy(fixture_raw("klein-abstract.json"))
    mutate(doc)
    assert code in codes(doc)


def test_normalization_names_the_cell():
    doc = copy.deepcopy(fixture_raw("klein-abstract.json"))
    doc["cocycle_valuations"][1][2][0] = 1
    with pytest.raises(InputError) as exc:
        validate_abstract(doc)
    v = next(v for v in exc.value.violations if v.code == "normalization")
    assert v.witness == (1, 2)
    assert "M=1, s=2" in v.message


def test_dense_fraction_values():
    profile, table = validate_abstract(fixture_raw("dense-half.json"))
    assert table.w[0][1][1].to_json() == "1/2"
    assert profile.gamma == ValueGroup.dense_q()


def test_profile_json_round_trip():
    for profile, table in random_tables(3, 30):
        doc = profile_to_json(profile, table)
        p2, t2 = validate_abstract(json.loads(json.dumps(doc)))
        assert p2.group.table == profile.group.table and p2.action == profile.action
        assert t2 == table


def test_restrict_to_decomposition_group_keeps_one_ideal():
    profile, table = validate_abstract(fixture_raw("klein-abstract.json"))
    rp, rt = restrict(profile, table, [0, 1], 0)
    assert rp.r == 1 and rp.n == 2
    assert rt.w[0] == tuple(tuple(table.w[0][s][t] for t in (0, 1)) for s in (0, 1))
    assert not table_violations(rp, rt)


def test_restrictions_of_random_tables_are_valid():
    for profile, table in random_tables(11, 40):
        for sub in profile.group.subgroups():
            for M0 in range(profile.r):
                rp, rt = restrict(profile, table, sub, M0)
                assert not table_violations(rp, rt)


def test_restrict_errors():
    profile, table = validate_abstract(fixture_raw("klein-abstract.json"))
    with pytest.raises(InputError):
        restrict(profile, table, [0, 2, 3], 0)
    with pytest.raises(InputError):
        restrict(profile, table, [0, 1], 5)


def test_coarsen_profile():
    profile, table = validate_abstract(fixture_raw("lex2-sh-coarsen.json"))
    cp, ct = coarsen_profile(profile, table, 1)
    assert cp.gamma == ValueGroup.lex(1)
    assert ct.w[0][1][1].is_zero()
    assert not table_violations(cp, ct)
    dense, dtable = validate_abstract(fixture_raw("dense-half.json"))
    with pytest.raises(InputError):
        coarsen_profile(dense, dtable, 1)


def test_coarsened_random_tables_stay_valid():
    for profile, table in random_tables(5, 40, gamma_choices=[ValueGroup.lex(2)]):
        cp, ct = coarsen_profile(profile, table, 1)
        assert not table_violations(cp, ct)


def test_concrete_compatibility(klein5, qi5):
    from crossorder.profile import concrete_profile

    for sp in (klein5, qi5):
        prof = concrete_profile(sp)
        elems = [sp.field.element([1, 2, 3, 4][: sp.field.degree]), sp.factor_element(0) * 7]
        assert check_compatibility(prof, elems) == []
