from g12.cyclotomic import CycNum
from g12.group import (
    CLASS_LABELS,
    IRREP_LABELS,
    REFERENCE_TABLE,
    central_reflection_sum,
    g12,
    inner_product,
    mat_mul,
)


def test_order_and_classes():
    G = g12()
    assert G.order == 48
    assert [cl.label for cl in G.classes] == list(CLASS_LABELS)
    assert [cl.size for cl in G.classes] == [1, 1, 12, 8, 6, 8, 6, 6]
    assert [cl.order for cl in G.classes] == [1, 2, 2, 3, 4, 6, 8, 8]
    assert sum(cl.size for cl in G.classes) == 48


def test_named_representatives_land_in_their_classes():
    G = g12()
    for word, label in (("e", "e"), ("eg", "eg"), ("ef", "ef"), ("fg", "fg"),
                        ("efg", "efg"), ("egf", "egf"), ("efg" * 4, "(efg)^4")):
        assert G.classes[G.class_of[G.word_index(word)]].label == label


def test_reflections():
    G = g12()
    assert len(G.reflections) == 12
    e_class = CLASS_LABELS.index("e")
    for r in G.reflections:
        assert G.class_of[r.element] == e_class
        assert r.eigenvalue == -1
        m = G.elements[r.element].matrix
        a, v = r.alpha, r.coroot
        # alpha s = det(s) alpha, s v = det(s) v, <alpha, v> = 2
        assert [a[0] * m[0][j] + a[1] * m[1][j] for j in range(2)] == [-a[0], -a[1]]
        assert [m[i][0] * v[0] + m[i][1] * v[1] for i in range(2)] == [-v[0], -v[1]]
        assert a[0] * v[0] + a[1] * v[1] == 2
        assert a[0] == 1 or (a[0] == 0 and a[1] == 1)


def test_character_table_matches_reference():
    G = g12()
    for row, ref in zip(G.table, REFERENCE_TABLE):
        assert row == [CycNum(x) if not isinstance(x, CycNum) else x for x in ref]
    assert REFERENCE_TABLE[3][6] * REFERENCE_TABLE[3][6] == -2


def test_irreps_are_homomorphisms_and_orthonormal():
    G = g12()
    for rep in G.irreps:
        for i in range(0, 48, 5):
            for j in range(0, 48, 7):
                assert mat_mul(rep.matrices[i], rep.matrices[j]) == rep.matrices[G.mult[i][j]]
    for a, ra in zip(IRREP_LABELS, G.table):
        for b, rb in zip(IRREP_LABELS, G.table):
            assert inner_product(ra, rb) == (1 if a == b else 0)


def test_reflection_representation_is_2plus_and_dual_is_2minus():
    G = g12()
    traces_h = [G.elements[cl.representative].matrix[0][0] + G.elements[cl.representative].matrix[1][1]
                for cl in G.classes]
    traces_hstar = [G.hstar(cl.representative)[0][0] + G.hstar(cl.representative)[1][1]
                    for cl in G.classes]
    assert traces_h == G.table[IRREP_LABELS.index("2+")]
    assert traces_hstar == G.table[IRREP_LABELS.index("2-")]


def test_central_reflection_sums():
    assert [central_reflection_sum(t) for t in IRREP_LABELS] == [12, -12, 0, 0, 0, 4, -4, 0]


def test_group_summary_json():
    data = g12().to_json()
    assert data["order"] == 48
    assert [c["size"] for c in data["classes"]] == [1, 1, 12, 8, 6, 8, 6, 6]
