import pytest

import struclus


def path_db(*families):
    db = struclus.Database()
    for labels, copies in families:
        for _ in range(copies):
            edges = [(i - 1, i, "s") for i in range(1, len(labels))]
            db.add_graph(list(labels), edges)
    return db


def test_database_round_trip(tmp_path):
    db = path_db(("CCO", 2))
    assert len(db) == 2
    assert db.graph(0) == {"vertices": ["C", "C", "O"], "edges": [(0, 1, "s"), (1, 2, "s")]}
    assert db.size_of(0) == 5
    back = struclus.Database.from_text(db.to_text())
    assert back.to_text() == db.to_text()
    f = tmp_path / "db.txt"
    db.write(f)
    assert struclus.Database.read(f).to_text() == db.to_text()


def test_bad_input_raises():
    with pytest.raises(struclus.IoError, match="line 2"):
        struclus.Database.from_text("t # 0\nv 1 C\n")
    with pytest.raises(ValueError):
        path_db().add_graph(["C"], [(0, 0, "s")])


def test_isomorphism_helpers():
    db = path_db(("CC", 1), ("CCO", 1), ("NN", 1))
    assert struclus.is_subgraph(db, 0, 1)
    assert not struclus.is_subgraph(db, 1, 0)
    assert struclus.mcs_size(db, 0, 1) == 3
    assert struclus.mcs_size(db, 0, 2) == 0


def test_metrics():
    a = {0: 0, 1: 0, 2: 1, 3: 1}
    assert struclus.nvi(a, a) == pytest.approx(1.0)
    singles = {i: i for i in range(4)}
    block = {i: 0 for i in range(4)}
    assert struclus.nvi(singles, block) == pytest.approx(0.0)
    assert struclus.evaluate(block, {i: int(i < 2) for i in range(4)})["purity"] == pytest.approx(0.5)


def test_mine_uniform_corpus():
    db = path_db(("CCON", 6))
    patterns = struclus.mine(db, 0.5, count=10, exact=True)
    assert len(patterns) == 1
    assert len(patterns[0]["edges"]) == 3


def test_cluster_two_families():
    db = path_db(("CCO", 10), ("NNSP", 10))
    labels, stats = struclus.cluster(db, {"seed": 3, "pre_min_sup": 0.1, "candidates": 10})
    assert len(labels) == 20
    assert len({labels[i] for i in range(10)}) == 1
    assert len({labels[i] for i in range(10, 20)}) == 1
    assert labels[0] != labels[10]
    assert stats["converged"]
    with pytest.raises(KeyError):
        struclus.cluster(db, {"no_such_option": 1})


def test_generate_and_cluster_small():
    db, truth = struclus.generate(size=60, seed=2, clusters=3)
    assert len(db) == 60 and len(truth) == 60
    labels, _ = struclus.cluster(db, {"seed": 1, "max_iterations": 2, "pre_min_sup": 0.1})
    scores = struclus.evaluate(labels, truth)
    assert 0.0 <= scores["nvi"] <= 1.0
