import json
from fractions import Fraction

import pytest

from qmckay.exact_ring import CycScalar, RSLaurent, rs_monomial
from qmckay.group_data import (
    BUILTIN_KINDS,
    ClassFunctionRS,
    TableError,
    antipode,
    builtin_group,
    load_table,
    parse_group_spec,
    tensor_multiplicities,
)
from qmckay.mckay_form import mckay_weight

ALL_GROUPS = [
    builtin_group("cyclic", 1),
    builtin_group("cyclic", 2),
    builtin_group("cyclic", 3),
    builtin_group("cyclic", 5),
    builtin_group("binary_dihedral", 2),
    builtin_group("binary_dihedral", 3),
    builtin_group("binary_tetrahedral"),
    builtin_group("binary_octahedral"),
    builtin_group("binary_icosahedral"),
]


@pytest.mark.parametrize("table", ALL_GROUPS, ids=lambda t: t.name)
def test_catalogue_loads_and_roundtrips(table):
    # construction already runs both orthogonality identities exactly
    doc = table.to_doc()
    again = load_table(json.loads(json.dumps(doc)))
    assert again.order == table.order
    assert again.chars == table.chars


def test_cyclic_is_fourier_matrix():
    t = builtin_group("cyclic", 6)
    for i in range(6):
        for j in range(6):
            assert t.chars[i][j] == CycScalar.zeta(6, i * j)


def test_z2_document_example():
    t = builtin_group("cyclic", 2)
    assert [c.centralizer for c in t.classes] == [2, 2]
    assert t.chars[1][1] == CycScalar.from_rational(-1)


def test_load_table_reports_orthogonality_violation():
    doc = builtin_group("cyclic", 2).to_doc()
    doc["characters"][1][1] = "[1]@1"  # break gamma_1(c^1)
    with pytest.raises(TableError, match="orthogonality"):
        load_table(doc)


def test_load_table_reports_size_violation():
    doc = builtin_group("cyclic", 2).to_doc()
    doc["classes"][1]["centralizer"] = 4
    with pytest.raises(TableError, match="size"):
        load_table(doc)


def test_load_table_reports_bad_inverse():
    doc = builtin_group("cyclic", 3).to_doc()
    doc["classes"][1]["inverse"] = 1
    doc["classes"][2]["inverse"] = 2
    # the fake involution breaks column orthogonality instead
    with pytest.raises(TableError):
        load_table(doc)


def test_dims_are_affine_marks():
    assert builtin_group("binary_tetrahedral").dims == (1, 1, 1, 2, 2, 2, 3)
    assert builtin_group("binary_octahedral").dims == (1, 2, 3, 4, 3, 2, 1, 2)
    assert builtin_group("binary_icosahedral").dims == (1, 2, 3, 4, 5, 6, 4, 2, 3)


def test_natural_character_is_faithful_dimension_two():
    for table in ALL_GROUPS:
        vals = table.natural_values()
        assert vals[0] == CycScalar.from_rational(2)


@pytest.mark.parametrize("table", ALL_GROUPS, ids=lambda t: t.name)
def test_antipode_involution_and_mckay_self_duality(table):
    f = ClassFunctionRS(
        table,
        [rs_monomial(1, 2 * i, -2, 0) for i in range(table.n_chars)],
    )
    assert antipode(antipode(f)) == f
    xi = mckay_weight(table)
    assert xi.self_dual
    assert antipode(xi.base) == xi.base


def test_tensor_multiplicities_with_trivial_weight_is_identity():
    table = builtin_group("binary_tetrahedral")
    triv = ClassFunctionRS.character(table, 0)
    for i in range(table.n_chars):
        row = tensor_multiplicities(table, triv, i)
        for j, v in enumerate(row):
            assert v == (RSLaurent.one() if i == j else RSLaurent.zero())


def test_tensor_multiplicities_z2_mckay_row():
    table = builtin_group("cyclic", 2)
    xi = mckay_weight(table)
    row = tensor_multiplicities(table, xi.base, 0)
    diag = rs_monomial(1, 1, -1) + rs_monomial(1, -1, 1)
    assert row[0] == diag
    assert row[1] == RSLaurent.monomial(-2)


def test_tensor_multiplicities_z3_mckay_row():
    table = builtin_group("cyclic", 3)
    xi = mckay_weight(table)
    row = tensor_multiplicities(table, xi.base, 0)
    diag = rs_monomial(1, 1, -1) + rs_monomial(1, -1, 1)
    assert row == [diag, RSLaurent.monomial(-1), RSLaurent.monomial(-1)]


def test_antipode_negates_exponents_and_inverts_class():
    table = builtin_group("cyclic", 3)
    f = ClassFunctionRS.character(table, 1, rs_monomial(1, 2 * 3, 2 * 4))  # g1 (x) r^3 s^4
    sf = antipode(f)
    # S(f)(c) = f(c^{-1}) with inverted exponents
    for c in range(3):
        want = table.chars[1][table.inverse_class(c)] * rs_monomial(1, -6, -8)
        assert sf.evaluate(c) == want


def test_twisted_evaluation():
    table = builtin_group("cyclic", 2)
    f = ClassFunctionRS.character(table, 1, rs_monomial(1, 2, 4))  # g1 (x) r s^2
    assert f.evaluate_twisted(1, 3) == rs_monomial(-1, 6, 12)


def test_parse_group_spec():
    assert parse_group_spec("cyclic:4").order == 4
    assert parse_group_spec("binary_octahedral").order == 48
    with pytest.raises(ValueError):
        parse_group_spec("nope")
    assert set(BUILTIN_KINDS) == {
        "cyclic",
        "binary_dihedral",
        "binary_tetrahedral",
        "binary_octahedral",
        "binary_icosahedral",
    }
