import pytest

from plocal.errors import GroupParseError
from plocal.presentation import EnumerationResult, Presentation, coset_enumeration


def test_cyclic_five_over_trivial():
    pres = Presentation(("x",), ((1, 1, 1, 1, 1),))
    res = coset_enumeration(pres, limit=100)
    assert res.closed and res.index == 5


def test_s3_over_c2():
    # <x, y | x^2, y^2, (xy)^3> over <x>
    pres = Presentation(("x", "y"), ((1, 1), (2, 2), (1, 2, 1, 2, 1, 2)))
    res = coset_enumeration(pres, subgroup_words=[(1,)], limit=100)
    assert res.closed and res.index == 3
    # over the trivial subgroup: the whole group S3
    res = coset_enumeration(pres, limit=100)
    assert res.closed and res.index == 6


def test_free_group_is_inconclusive():
    pres = Presentation(("x", "y"), ())
    res = coset_enumeration(pres, limit=1000)
    assert res.status == "inconclusive"
    assert res.index is None


def test_dihedral_over_rotation():
    # <r, s | r^4, s^2, srsr> over <r>
    pres = Presentation(("r", "s"), ((1,) * 4, (2, 2), (2, 1, 2, 1)))
    res = coset_enumeration(pres, subgroup_words=[(1,)], limit=100)
    assert res.closed and res.index == 2
    res = coset_enumeration(pres, limit=100)
    assert res.closed and res.index == 8


def test_validation():
    with pytest.raises(GroupParseError):
        Presentation(("x",), ((2,),))
    with pytest.raises(GroupParseError):
        coset_enumeration(Presentation(("x",), ()), limit=0)
