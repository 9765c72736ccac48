import json

import pytest

import admissibility as adm


def test_group_construction():
    s3 = adm.group("symmetric:3")
    assert s3.order == 6
    assert not s3.is_abelian()
    assert s3.center_order() == 1
    assert adm.group("abelian:3,3,3").is_abelian()
    big = adm.group("paper_2_10")
    assert len(big) == 1024
    assert big.center_order() == 128


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        adm.group("nosuch:3")
    with pytest.raises(ValueError):
        adm.group("cyclic:5000")


def test_epimorphism_counts():
    assert adm.count_epimorphisms("free:2", "cyclic:2")["epimorphisms"] == 3
    counts = adm.count_epimorphisms("free:2", "symmetric:3")
    assert counts["epimorphisms"] == 18
    assert counts["automorphisms"] == 6
    assert counts["normal_subgroups"] == 3


def test_budget_refusal():
    with pytest.raises(adm.BudgetExceeded):
        adm.count_epimorphisms("free:3", "symmetric:4", budget=10)


def test_quotient_tests_on_the_order_1024_group():
    yes = adm.quotient_test("<a, b, c | a^2 b^4 [b, c]>", "paper_2_10", 2)
    assert yes["is_quotient"]
    assert len(yes["witness"]) == 3
    no = adm.quotient_test(adm.max_p_extension_presentation("Q2(i)"), "paper_2_10", 2)
    assert not no["is_quotient"]
    assert no["witness"] is None


def test_local_realizability():
    assert adm.local_realizable("abelian:3,3,3", "Qp(sqrtp):3")["is_quotient"]
    assert not adm.local_realizable("abelian:3,3,3", "Q3")["is_quotient"]


def test_sensitive_census():
    census = adm.sensitive_census()
    assert census["total"] == 29
    assert census["breakdown"] == "1 + 1 + (1 + 3 + (4 + 18)) + 1"


def test_liedahl():
    yes = adm.liedahl("metacyclic:5,25,25,6", "cyclotomic:5")
    assert yes["holds"]
    assert yes["witness"] is not None
    no = adm.liedahl("metacyclic:5,25,25,6", "cyclotomic:100")
    assert not no["holds"]
    assert no["presentations_scanned"] > 0
    with pytest.raises(adm.PreconditionFailed):
        adm.liedahl("symmetric:3", "Q")


def test_brauer():
    assert adm.brauer_index("nu@5=1/125, w@13=-1/125") == 125
    ext = "nu1@5 > pi1@5:125:1,125 ; nu2@5 > pi2@5:125:1,125"
    image = adm.brauer_image("pi1@5=1/125, pi2@5=-1/125", ext)
    assert image["in_image"]
    assert image["witness"] == "{nu1: 1/15625, nu2: 15624/15625}"
    restricted = adm.brauer_restrict("v@5=1/4, w@13=3/4", "v@5 > v1@5:2 ; w@13 > w1@13:1, w2@13:1")
    assert restricted == "{v1: 1/2, w1: 3/4, w2: 3/4}"
    blocked = adm.brauer_image("nu1@5=1/125, nu2@5=-1/125", "nu@5 > nu1@5:1, nu2@5:1")
    assert not blocked["in_image"]
    assert blocked["obstruction"]
    assert adm.brauer_max_order([8, 4, 4]) == 4


def test_preadmissibility_and_wildness():
    facts = {
        "facts": [
            {"place": "a", "p": 5, "subgroups": ["whole"]},
            {"place": "b", "p": 7, "subgroups": ["whole"]},
            {"place": "c", "p": 11, "subgroups": ["whole"]},
            {"place": "d", "p": 13, "subgroups": ["whole"]},
        ]
    }
    result = adm.preadmissible("symmetric:3", json.dumps(facts))
    assert result["preadmissible"]
    assert result["certificate"]
    assert adm.wildness("symmetric:3", json.dumps(facts)) == "non-wild-available"
    assert not adm.preadmissible("symmetric:3", json.dumps({"facts": facts["facts"][:1]}))["preadmissible"]


def test_diagram():
    d = adm.diagram()
    assert "5=>4" in d["base"]
    assert "5=>1" in d["closure"]
    assert d["acyclic"]
    assert d["consistent"]
