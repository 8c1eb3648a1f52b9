import pytest
from hypothesis import given, strategies as st

from polydendrite.errors import DegeneratePolygon, FieldMismatch, NotAContraction, SpecSyntaxError
from polydendrite.specfile import parse_spec, serialize

HEADER = "field 4\npolygon rat(0,0) rat(1,0) rat(1,1) rat(0,1)\n"


def test_vicsek_loads(vicsek):
    assert vicsek.m == 5 and vicsek.field.order == 4
    assert vicsek.group.order == 4 and not vicsek.group.dihedral


@pytest.mark.parametrize("name", ["vicsek", "vicsek_dihedral", "gasket", "vicsek_no_center"])
def test_round_trip(name, request):
    system = request.getfixturevalue(name)
    again = parse_spec(serialize(system))
    assert again == system
    assert again.base.vertices == system.base.vertices
    assert serialize(again) == serialize(system)


def test_not_a_contraction():
    with pytest.raises(NotAContraction):
        parse_spec(HEADER + "map direct a=poly(1) b=poly(0)\n")


def test_missing_polygon():
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec("field 4\nmap direct a=rat(1/3,0) b=rat(0,0)\n")
    assert info.value.line == 3


def test_error_position():
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec(HEADER + "map sideways a=rat(1/3,0) b=rat(0,0)\n")
    assert (info.value.line, info.value.col) == (3, 5)


def test_rat_needs_i():
    with pytest.raises(FieldMismatch):
        parse_spec("field 6\npolygon rat(0,0) rat(1,0) rat(0,1)\n")


def test_too_many_coefficients():
    with pytest.raises(FieldMismatch):
        parse_spec("field 4\npolygon poly(0,0,1) poly(1) poly(0,1)\nmap direct a=poly(1/2) b=poly(0)\n")


def test_degenerate_polygon():
    with pytest.raises(DegeneratePolygon):
        parse_spec("field 4\npolygon rat(0,0) rat(1,0) rat(2,0)\nmap direct a=poly(1/2) b=poly(0)\n")


def test_group_order_must_divide_field():
    with pytest.raises(FieldMismatch):
        parse_spec(HEADER + "map direct a=rat(1/3,0) b=rat(0,0)\ngroup cyclic 3 center=rat(1/2,1/2)\n")


def test_comments_and_blank_lines():
    text = "# header\n\n" + HEADER + "map direct a=rat(1/3,0) b=rat(0,0)   # corner\n"
    assert parse_spec(text).m == 1


@given(st.text(alphabet="fieldpolygonmaprat()=,/ 0123456789#\n", max_size=80))
def test_garbage_is_rejected_cleanly(text):
    from polydendrite.errors import DendriteError

    try:
        parse_spec(text)
    except DendriteError:
        pass
