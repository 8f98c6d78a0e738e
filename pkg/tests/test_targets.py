import pytest

from cohenexp import (
    INFINITE,
    bundled_table,
    concrete_h_space,
    even_sphere,
    hp_infty_model,
    load_model,
    load_table,
    odd_sphere,
)
from cohenexp.targets import DataError, HomotopyTable, save_model, save_table


def test_bundled_table_basics():
    table = bundled_table()
    assert table.get(3, 0) == (0,)
    assert table.get(3, 3) == (12,)
    assert table.get(6, 4) == ()  # recorded trivial
    assert table.get(99, 0) is None
    assert "Toda" in table.provenance
    assert table.group(4, 3).factors == (0, 12)


def test_bundled_table_stable_range():
    # within the stable range k <= n - 2 the rows agree
    table = bundled_table()
    for k in range(0, 9):
        stable = [table.get(n, k) for n in range(k + 2, 13)]
        assert len(set(stable)) == 1, f"stem {k} not stable: {stable}"


def test_table_env_override(tmp_path, monkeypatch):
    path = tmp_path / "tiny.txt"
    path.write_text("# provenance: test fixture\npi 3 0 0\npi 3 1 2\n")
    monkeypatch.setenv("COHENEXP_TABLE", str(path))
    table = bundled_table()
    assert len(table) == 2
    assert table.provenance == "test fixture"


def test_table_parse_errors(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("pi 3 0 0\npi three 1 2\n")
    with pytest.raises(DataError, match="bad.txt:2"):
        load_table(bad)
    bad.write_text("pi 3 0 0\npi 3 0 0\n")
    with pytest.raises(DataError, match="duplicate"):
        load_table(bad)
    bad.write_text("pi 3 0 5\n")
    with pytest.raises(DataError, match="infinite cyclic"):
        load_table(bad)


def test_table_round_trip(tmp_path):
    table = HomotopyTable({(3, 0): (0,), (3, 3): (12,), (3, 4): ()}, provenance="rt")
    path = tmp_path / "rt.txt"
    save_table(table, path)
    back = load_table(path)
    assert back.entries == table.entries
    assert back.provenance == "rt"


def test_model_round_trip(tmp_path):
    model = hp_infty_model(2, 2, truncation=5)
    path = tmp_path / "hp.model"
    save_model(model, path)
    back = load_model(path)
    assert back.r == model.r and back.truncation == model.truncation
    assert back.profile == model.profile
    assert [(g.position, g.order) for g in back.generators] == [
        (g.position, g.order) for g in model.generators
    ]


def test_model_parse_errors(tmp_path):
    path = tmp_path / "m.model"
    path.write_text("gen 1 order=4\n")
    with pytest.raises(DataError, match="before model header"):
        load_model(path)
    path.write_text("model r=1 trunc=3 profile u2=0 u3=0\ngen 1 order=soon\n")
    with pytest.raises(DataError, match="bad order"):
        load_model(path)
    path.write_text("model r=1 trunc=3 profile u2=0 u3=2\ngen 1 order=4\n")
    with pytest.raises(DataError):
        load_model(path)


def test_model_infinite_order(tmp_path):
    path = tmp_path / "m.model"
    path.write_text("model r=1 trunc=2 profile u2=0 u3=0\ngen 1 order=inf\ngen 2 order=12\n")
    model = load_model(path)
    assert model.generator(1).order is INFINITE
    assert model.generator(2).order == 12


def test_sphere_builders():
    assert odd_sphere(3, 2, 1).profile.u2 == 1
    assert odd_sphere(5, 3, 1).profile.u2 == 2
    assert even_sphere(2, 3, 1).profile.u3 == 1
    assert even_sphere(4, 3, 1).profile.u3 == 3
    with pytest.raises(ValueError):
        odd_sphere(4, 3, 1)
    with pytest.raises(ValueError):
        even_sphere(5, 3, 1)
    with pytest.raises(ValueError):
        odd_sphere(5, 6, 1)
    m = odd_sphere(5, 3, 2, truncation=7)
    assert m.truncation == 7
    assert all(g.order == 9 for g in m.generators)


def test_concrete_h_space_r2():
    model = concrete_h_space(2, 5)
    groups = []
    for j in range(1, 6):
        gens = model.generators_at(j)
        groups.append(tuple(g.order for g in gens))
    assert groups == [(INFINITE,), (2,), (2,), (3,), (15,)]
    assert model.profile.u2 == 1 and model.profile.u3 == 1


def test_concrete_h_space_trunc1():
    model = concrete_h_space(2, 1)
    assert [g.order for g in model.generators] == [INFINITE]


def test_concrete_h_space_missing_entry():
    table = HomotopyTable({(3, 0): (0,)}, provenance="tiny")
    with pytest.raises(DataError, match="pi 3 2"):
        concrete_h_space(2, 2, table=table)
