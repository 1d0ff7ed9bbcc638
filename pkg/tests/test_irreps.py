import json
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from capelli_lab import linalg
from capelli_lab.algebra import AlgebraElement, character_element
from capelli_lab.catalog import catalog_group, catalog_irreps, catalog_names
from capelli_lab.cyclo import Cyclo
from capelli_lab.irreps import (
    E_matrix,
    Irrep,
    IrrepSet,
    character_inner_product,
    equivalent,
    irrep_from_dict,
    irrep_to_dict,
    validate,
    validate_complete,
    verify_E_basis,
    verify_schur_products,
)
from helpers import leibniz_det, naive_convolve


def test_validate_trivial_everywhere():
    for name in catalog_names():
        report = validate(catalog_irreps(name).by_label("triv"))
        assert report.ok, str(report)


def test_validate_standard_s3():
    assert validate(catalog_irreps("S3").by_label("std")).ok


def test_validate_catches_broken_homomorphism():
    std = catalog_irreps("S3").by_label("std")
    identity_block = tuple(map(tuple, linalg.identity_matrix(2, std.conductor)))
    mats = list(std.matrices)
    mats[3] = identity_block  # overwrite a non-identity element's matrix
    broken = Irrep("broken", std.group, 2, tuple(mats))
    report = validate(broken)
    assert not report.ok
    failed = {r.check for r in report.failures()}
    assert "homomorphism" in failed


def test_validate_catches_non_unitary():
    # s -> [[1, 1], [0, -1]] squares to the identity, so it is a genuine
    # matrix rep of C2, just not a unitary (or irreducible) one
    c2 = catalog_group("C2")
    one = Cyclo.one(2)
    zero = Cyclo.zero(2)
    mats = (
        ((one, zero), (zero, one)),
        ((one, one), (zero, -one)),
    )
    report = validate(Irrep("shear", c2, 2, mats))
    failed = {r.check for r in report.failures()}
    assert "unitarity" in failed
    assert "homomorphism" not in failed
    assert "irreducibility" in failed


def test_validate_complete_s3():
    assert validate_complete(catalog_irreps("S3")).ok


def test_validate_complete_catches_missing_irrep():
    full = catalog_irreps("S3")
    partial = IrrepSet(full.group, tuple(r for r in full.irreps if r.label != "sgn"))
    report = validate_complete(partial)
    assert not report.ok
    assert any(r.check == "degree-squares" for r in report.failures())


def test_validate_complete_q8_degrees():
    q8 = catalog_irreps("Q8")
    assert sorted(r.degree for r in q8.irreps) == [1, 1, 1, 1, 2]
    assert validate_complete(q8).ok


def test_reducible_character_rejected():
    # direct sum of trivial and sign of C2 has <chi,chi> = 2
    c2 = catalog_group("C2")
    one = Cyclo.one(2)
    zero = Cyclo.zero(2)
    neg = -one
    mats = (
        ((one, zero), (zero, one)),
        ((one, zero), (zero, neg)),
    )
    report = validate(Irrep("red", c2, 2, mats))
    assert any(r.check == "irreducibility" for r in report.failures())


def test_character_inner_products_orthonormal():
    irreps = catalog_irreps("S3").irreps
    for a in irreps:
        for b in irreps:
            expected = 1 if a.label == b.label else 0
            assert character_inner_product(a, b) == expected
            assert equivalent(a, b) == (a.label == b.label)


def test_E_matrix_trivial():
    triv = catalog_irreps("S3").by_label("triv")
    em = E_matrix(triv)
    assert len(em) == 1
    total = AlgebraElement(triv.group, [Cyclo.one(6)] * 6)
    assert em[0][0] == total


def test_E_matrix_sign():
    sgn = catalog_irreps("S3").by_label("sgn")
    em = E_matrix(sgn)
    group = sgn.group
    expected = AlgebraElement(group, [sgn.matrices[g][0][0] for g in range(6)])
    assert em[0][0] == expected


def test_E_matrix_diagonal_sums_to_character():
    std = catalog_irreps("S3").by_label("std")
    em = E_matrix(std)
    assert em[0][0] + em[1][1] == character_element(std)


def test_trivial_schur_product_is_order_times_E():
    triv = catalog_irreps("S3").by_label("triv")
    e = E_matrix(triv)[0][0]
    assert e * e == 6 * e


def test_s3_standard_schur_product_example():
    std = catalog_irreps("S3").by_label("std")
    em = E_matrix(std)
    # oracle convolution: E_12 * E_21 = 3 * E_11 since alpha = 6/2
    oracle = naive_convolve(std.group.table, em[0][1].coeffs, em[1][0].coeffs, Cyclo.zero(6))
    assert list((em[0][1] * em[1][0]).coeffs) == oracle
    assert em[0][1] * em[1][0] == 3 * em[0][0]


def test_cross_irrep_products_vanish():
    irreps = catalog_irreps("S3")
    triv = E_matrix(irreps.by_label("triv"))[0][0]
    sgn = E_matrix(irreps.by_label("sgn"))[0][0]
    oracle = naive_convolve(irreps.group.table, triv.coeffs, sgn.coeffs, Cyclo.zero(6))
    assert all(not c for c in oracle)
    assert not (triv * sgn)


@pytest.mark.parametrize("name", ["C4", "S3", "D4", "Q8"])
def test_verify_schur_products(name):
    report = verify_schur_products(catalog_irreps(name))
    assert report.ok, str(report)


def test_verify_E_basis_trivial_group():
    report = verify_E_basis(catalog_irreps("C1"))
    assert report.ok


def test_verify_E_basis_c4_and_s3_with_det_oracle():
    for name in ("C4", "S3"):
        irrep_set = catalog_irreps(name)
        assert verify_E_basis(irrep_set).ok
        group = irrep_set.group
        conductor = irrep_set.conductor
        rows = []
        for irrep in irrep_set.irreps:
            for i in range(irrep.degree):
                for j in range(irrep.degree):
                    rows.append([
                        irrep.matrices[g][i][j].promote(conductor) for g in range(group.order)
                    ])
        assert leibniz_det(rows)  # nonzero determinant certifies full rank


def test_s4_character_table_matches_textbook_values():
    # classes ordered: e, (12)(34)-type, transpositions, 3-cycles, 4-cycles
    # (identity class first, then by least element index in the catalog group)
    from capelli_lab.groups import conjugacy_classes

    s4 = catalog_irreps("S4")
    partition = conjugacy_classes(s4.group)
    sizes = [len(c) for c in partition.classes]
    reps = [c[0] for c in partition.classes]
    by_size = {}
    for cls_index, size in enumerate(sizes):
        by_size.setdefault(size, []).append(cls_index)
    # identify classes by size + element order: 1, 3, 6, 8, 6 with orders
    # 1, 2, 2, 3, 4
    def class_of(size, order):
        for idx in by_size[size]:
            if s4.group.element_order(reps[idx]) == order:
                return idx
        raise AssertionError((size, order))

    order_of_classes = [
        class_of(1, 1), class_of(3, 2), class_of(6, 2), class_of(8, 3), class_of(6, 4)
    ]
    expected = {
        "triv": [1, 1, 1, 1, 1],
        "sgn": [1, 1, -1, 1, -1],
        "dim2": [2, 2, 0, -1, 0],
        "std": [3, -1, 1, 0, -1],
        "std_sgn": [3, -1, -1, 0, 1],
    }
    for label, values in expected.items():
        irrep = s4.by_label(label)
        got = [irrep.character(reps[idx]) for idx in order_of_classes]
        assert got == values, (label, got)


def test_a4_standard_character():
    a4 = catalog_irreps("A4")
    std = a4.by_label("std")
    from capelli_lab.groups import conjugacy_classes

    partition = conjugacy_classes(a4.group)
    # classes: e (1), double transpositions (3), two classes of 3-cycles (4, 4)
    values = sorted(
        (len(cls), std.character(cls[0]).as_rational()) for cls in partition.classes
    )
    assert values == [(1, 3), (3, -1), (4, 0), (4, 0)]


def test_alpha_is_positive_integer_for_catalog():
    for name in catalog_names():
        for irrep in catalog_irreps(name).irreps:
            alpha = irrep.alpha
            assert alpha.denominator == 1 and alpha > 0


def test_irrep_json_round_trip():
    std = catalog_irreps("S3").by_label("std")
    data = json.loads(json.dumps(irrep_to_dict(std)))
    again = irrep_from_dict(std.group, data)
    assert again.degree == 2
    assert again.matrices == std.matrices
    assert validate(again).ok


def test_irrep_json_accepts_larger_conductor():
    # the same irrep presented over a non-minimal cyclotomic field still
    # validates and still satisfies the product relations
    std = catalog_irreps("S3").by_label("std")
    data = irrep_to_dict(std)
    data["conductor"] = 12
    data["matrices"] = [
        [[v.promote(12).to_dict() for v in map(Cyclo.from_dict, row)] for row in mat]
        for mat in data["matrices"]
    ]
    lifted = irrep_from_dict(std.group, data)
    assert lifted.conductor == 12
    assert validate(lifted).ok
    from capelli_lab.capelli import verify_closed_form

    assert verify_closed_form(lifted).ok


def test_irrep_json_rejects_wrong_group():
    std = catalog_irreps("S3").by_label("std")
    data = irrep_to_dict(std)
    data["group"] = "Q8"
    with pytest.raises(ValueError):
        irrep_from_dict(catalog_group("Q8"), data)


def test_irrep_json_rejects_bad_shape():
    std = catalog_irreps("S3").by_label("std")
    data = irrep_to_dict(std)
    data["matrices"][0] = [data["matrices"][0][0]]
    with pytest.raises(ValueError):
        irrep_from_dict(std.group, data)


# -- rank function cross-check ------------------------------------------------------


@st.composite
def small_matrices(draw):
    n = draw(st.sampled_from((3, 4)))
    return [
        [Cyclo.rational(draw(st.integers(-3, 3)), n) for _ in range(3)] for _ in range(3)
    ]


@given(small_matrices())
@settings(max_examples=60)
def test_rank_matches_leibniz_determinant(matrix):
    full = bool(leibniz_det(matrix))
    assert (linalg.rank(matrix) == 3) == full
    if full:
        inv = linalg.mat_inverse(matrix)
        ident = linalg.identity_matrix(3, matrix[0][0].conductor)
        assert linalg.mat_eq(linalg.mat_mul(matrix, inv), ident)
    else:
        with pytest.raises(linalg.SingularMatrix):
            linalg.mat_inverse(matrix)
