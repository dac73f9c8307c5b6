import pytest

from indsat.coloring import verify_nice
from indsat.constructions import (ClassFWitness, corollary3_coloring, find_class_f,
                                  hamming_saturation_search, leg_color_lists, leg_colors,
                                  make_plan, proposition4_suite, recognize_class_h,
                                  recognize_class_t, theorem_a_embedding, theorem_a_s3_coloring,
                                  theorem_b_embedding, theorem_b_s3_coloring, _subdivision_colors)
from indsat.errors import ContractError
from indsat.experiments import spider_with_clique_leaves, wheel
from indsat.graph import Graph, path, spider, star
from indsat.iso import forests

K14 = star(4)


def test_recognize_class_h():
    hw = recognize_class_h(K14, 3)
    assert hw.r == 0 and hw.components == [[1], [2], [3], [4]] and hw.dims == [0, 0, 0, 0]
    assert recognize_class_h(star(3), 3) is None
    with pytest.raises(ContractError):
        recognize_class_h(K14, 2)


def test_recognize_class_t():
    assert recognize_class_t(spider(4, 2), 3)
    assert not recognize_class_t(path(5), 3)
    two_centres = Graph.from_edges(10, [(0, i) for i in range(1, 5)] + [(1, 5)]
                                   + [(5, i) for i in range(6, 9)] + [(5, 9)])
    assert not recognize_class_t(two_centres, 3)


def test_every_t_class_tree_is_in_h_class():
    for n in range(5, 10):
        for t in forests(n):
            if recognize_class_t(t, 3):
                assert recognize_class_h(t, 3) is not None


def test_plan_invariants_and_violations():
    plan = make_plan(3, 2, 2)
    assert plan.k == (plan.ell - 1) * 4 + 3
    plan.X = [2, plan.W[0][1]]
    with pytest.raises(ContractError, match="X must avoid"):
        plan.check()


@pytest.mark.parametrize("q", [2, 3])
def test_theorem_a_embedding_star(q):
    hw = recognize_class_h(K14, 3)
    sigma, extra, plan = theorem_a_embedding(K14, hw, q)
    assert sigma[0] == (0, 0, 0)
    assert [sigma[v] for v in (1, 2, 3)] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert sigma[4] == extra[1] == (2,) * q + (0,) * (3 - q)


def test_theorem_a_embedding_bad_q():
    hw = recognize_class_h(K14, 3)
    with pytest.raises(ContractError):
        theorem_a_embedding(K14, hw, 4)


def test_theorem_a_embedding_larger_components():
    h = spider(4, 3)
    hw = recognize_class_h(h, 3)
    for q in (2, 3):
        theorem_a_embedding(h, hw, q)


def test_theorem_a_colouring():
    hw = recognize_class_h(K14, 3)
    plus, col = theorem_a_s3_coloring(K14, hw)
    assert verify_nice(plus, col) and col.palette == 3
    for i, v in enumerate(hw.attachments[:3], 1):
        assert col[(0, v)] == i
    assert col[(hw.attachments[2], hw.attachments[3])] == 3


def test_theorem_a_minimal_k_within_plan_bound():
    k, _ = hamming_saturation_search(K14, 3, 7)
    assert k == 3
    assert k <= make_plan(3, 1, 2).k


def test_class_f_smallest_instance():
    h = spider_with_clique_leaves(3)
    fw = find_class_f(h, 3)
    assert fw is not None and validate(h, fw)
    assert len(fw.legs) == 4 and all(len(leg) == 6 for leg in fw.legs)
    for q in (2, 3):
        sigma, extra, k = theorem_b_embedding(h, fw, q)
        assert k == 11
        for i in range(2):
            assert sigma[fw.legs[i][1]] == tuple(1 if t == i else 0 for t in range(3))
        assert sigma[fw.legs[3][1]] == extra[1]
    with pytest.raises(ContractError, match="k >= 11"):
        theorem_b_embedding(h, fw, 2, k=10)


def validate(h, fw):
    from indsat.constructions import validate_class_f
    return validate_class_f(h, fw, fw.n)


def test_class_f_rejections():
    from indsat.constructions import validate_class_f
    # height n+1 instead of n+2
    h = spider(4, 4)
    assert find_class_f(h, 3) is None
    good = spider_with_clique_leaves(3)
    fw = find_class_f(good, 3)
    shared = ClassFWitness(3, fw.r, [fw.legs[0], fw.legs[0], *fw.legs[2:]], fw.f_vertices, fw.leaves)
    assert not validate_class_f(good, shared, 3)


def test_theorem_b_colouring_n3_found_by_search():
    h = spider_with_clique_leaves(3)
    fw = find_class_f(h, 3)
    plus, col, how = theorem_b_s3_coloring(h, fw)
    assert how == "search" and verify_nice(plus, col)
    # frozen output of the deterministic search
    assert leg_colors(fw, col) == [[1, 2, 1, 2, 1], [2, 3, 1, 2, 3], [3, 1, 2, 1, 3], [3, 1, 2, 1, 3]]


def test_leg_color_lists_n4():
    assert leg_color_lists(4) == [[1, 2, 3, 4, 1, 4], [2, 3, 4, 1, 2, 4], [3, 4, 1, 2, 3, 4],
                                  [4, 1, 2, 4, 3, 4], [4, 1, 2, 3, 1, 4]]
    for n in (4, 5, 6):
        for legs in leg_color_lists(n):
            assert set(legs) == set(range(1, n + 1)) and legs[-1] == n and legs[0] in range(1, n + 1)


def test_subdivision_instance_n4():
    sub = corollary3_coloring(wheel(5), 0)
    assert sub.graph.n == 56 and sub.f_graph.n == 30
    assert verify_nice(sub.f_graph, sub.coloring)
    fw = sub.witness
    assert fw is not None and validate(sub.graph, fw)
    for q in (2, 3, 4):
        theorem_b_embedding(sub.graph, fw, q)
    plus, col, how = theorem_b_s3_coloring(sub.graph, fw)
    assert how == "closed form" and verify_nice(plus, col)
    assert leg_colors(fw, col) == leg_color_lists(4)
    x, y = fw.legs[3][1], fw.legs[4][1]
    assert col[(fw.r, x)] == col[(fw.r, y)] == col[(x, y)] == 4


def test_subdivision_path_colours():
    assert _subdivision_colors(5, 3, 3) == [3, 1, 2, 3, 4, 1, 3]
    assert _subdivision_colors(5, 1, 1) == [1, 2, 1, 3, 4, 2, 1]
    assert _subdivision_colors(5, 3, 1) == [3, 1, 2, 3, 4, 2, 1]


def test_subdivision_preconditions():
    with pytest.raises(ContractError):
        corollary3_coloring(star(4), 0)


def test_proposition4_routes():
    entries = {e.name: e for e in proposition4_suite()}
    assert entries["spider(1, 1, 1)"].route == "ch1"
    assert entries["C5+P2"].route == "ch1"
    for name, e in entries.items():
        if not name.startswith("C~"):
            assert e.verified, name
