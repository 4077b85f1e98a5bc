import pytest

from webdimer.plabic import (
    BLACK,
    WHITE,
    PlabicError,
    PlabicGraph,
    certify_rectangle,
    make_claw_graph,
    make_rectangle_graph,
)


def test_claw_trip_permutation_shifts_by_one():
    for n in (3, 4, 7):
        g = make_claw_graph(n)
        pi = g.trip_permutation()
        assert pi == {i: i % n + 1 for i in range(1, n + 1)}


def test_claw_face_labels_are_singletons():
    # The face between boundary i and i+1 is labeled {i+1}.
    g = make_claw_graph(5)
    got = g.boundary_face_labels()
    for (i, j), label in got.items():
        assert label == frozenset({j})
    assert len(got) == 5


def test_single_edge_graph_n1():
    g = PlabicGraph(1, {1: WHITE}, {1: (-1, 1)}, {1: [1]})
    assert g.trip_permutation() == {1: 1}
    assert len(g.faces()) == 1


def test_rectangle_3_12_face_count():
    g = make_rectangle_graph(3, 12)
    assert len(g.faces()) == 28
    assert g.n == 12


def test_rectangle_2_4_basics():
    g = make_rectangle_graph(2, 4)
    assert len(g.faces()) == 5
    assert g.trip_permutation() == {1: 3, 2: 4, 3: 1, 4: 2}


def test_rectangle_3_6_boundary_labels_cyclic():
    g = make_rectangle_graph(3, 6)
    labels = set(g.boundary_face_labels().values())
    want = {frozenset({1, 2, 3}), frozenset({2, 3, 4}), frozenset({3, 4, 5}),
            frozenset({4, 5, 6}), frozenset({5, 6, 1}), frozenset({6, 1, 2})}
    assert labels == want


@pytest.mark.parametrize("n", range(2, 13))
def test_rectangle_certified_for_all_types(n):
    for k in range(1, n):
        g = make_rectangle_graph(k, n)
        assert certify_rectangle(g, k, n)
        assert len(g.faces()) == k * (n - k) + 1
        pi = g.trip_permutation()
        assert all(pi[i] == (i + k - 1) % n + 1 for i in range(1, n + 1))


def test_face_labels_have_size_k_and_adjacent_faces_exchange_one():
    for (k, n) in [(2, 5), (3, 6), (3, 7), (4, 9)]:
        g = make_rectangle_graph(k, n)
        labels = g.face_labels()
        assert all(len(v) == k for v in labels.values())
        dart_face = g.face_of_dart()
        for e in g.edges:
            f0 = dart_face[("e", e, 0)]
            f1 = dart_face[("e", e, 1)]
            if f0 == f1:
                continue
            a, b = labels[f0], labels[f1]
            assert len(a - b) == 1 and len(b - a) == 1


def test_improper_coloring_rejected():
    with pytest.raises(PlabicError):
        PlabicGraph(2, {1: WHITE, 2: WHITE}, {1: (-1, 1), 2: (-2, 2), 3: (1, 2)},
                    {1: [1, 3], 2: [2, 3]})


def test_boundary_degree_checked():
    with pytest.raises(PlabicError):
        PlabicGraph(2, {1: WHITE}, {1: (-1, 1)}, {1: [1]})  # boundary 2 bare


def test_dangling_internal_vertex_rejected():
    with pytest.raises(PlabicError):
        PlabicGraph(1, {1: WHITE, 2: BLACK}, {1: (-1, 1)}, {1: [1], 2: []})


def test_rectangle_rejects_bad_type():
    with pytest.raises(PlabicError):
        make_rectangle_graph(0, 4)
    with pytest.raises(PlabicError):
        make_rectangle_graph(4, 4)


def test_json_round_trip():
    g = make_rectangle_graph(2, 5)
    data = g.to_json()
    h = PlabicGraph.from_json(data)
    assert h.trip_permutation() == g.trip_permutation()
    assert len(h.faces()) == len(g.faces())
    assert h.type_k == g.type_k
