import pytest

import ncalg


def test_reduce():
    assert ncalg.reduce("racah", "C*B*A") == "-2*beta + 2*A*B - 2*A*D - 2*B*C + 2*B*D - 2*C*D + A*B*C"
    assert ncalg.reduce("bi", "Y*X") == "Z + kappa - X*Y"


def test_parse_error_position():
    with pytest.raises(ncalg.ParseError) as info:
        ncalg.reduce("racah", "A + Q")
    assert info.value.column == 5
    assert isinstance(info.value, ValueError)


def test_confluence():
    report = ncalg.confluence("racah")
    assert report["terminates"] and report["resolvable"]
    assert report["ambiguities"] == 20
    assert sorted(o["word"] for o in report["nontrivial"]) == ["C*B*A", "D*B*A", "D*C*A", "D*C*B"]


def test_maps():
    assert ncalg.apply_map("zeta", "A") == ncalg.reduce("bi", "1/16*(2*X - 3)*(2*X + 1)")
    assert ncalg.apply_map("sigma", "A*C") == ncalg.reduce("racah", "C*B")
    assert ncalg.apply_map("tau", "X", algebra="bi") == "Y"


def test_filtration():
    assert ncalg.is_filtration([4, 4, 6, 8, 9, 9])
    assert not ncalg.is_filtration([1, 1, 3, 0, 0, 0])
    assert ncalg.leading_form([4, 4, 6, 8, 9, 9], 8, "Z + kappa") == "kappa"


def test_casimir():
    assert ncalg.casimir_express("1") == "1"
    with pytest.raises(ncalg.NotInCentralizerImage) as info:
        ncalg.casimir_express("A")
    assert info.value.offending
    assert ncalg.zeta_rank(14)["full_rank"]


def test_verify():
    assert all(r["pass"] for r in ncalg.identities())
    results = ncalg.criteria([1, 2])
    assert [r["id"] for r in results] == [1, 2]
    assert all(r["pass"] for r in results)
