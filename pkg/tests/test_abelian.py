import pytest

from foxpoly.abelian import abelian_image, analyze_abelianization, make_character
from foxpoly.errors import CharacterError
from foxpoly.oracles import smith_projection
from foxpoly.words import Presentation, parse_word


def ab_of(text):
    return analyze_abelianization(Presentation.parse(text))


def test_nice_relator_has_b1_two(example):
    ab = analyze_abelianization(example)
    assert ab.exponent_sums == (0, 0)
    assert ab.b1 == 2 and ab.torsion_order == 1
    assert ab.generator_images == ((1, 0), (0, 1))


@pytest.mark.parametrize("text, images, torsion", [
    ("x,y|yy", ((1,), (0,)), 2),
    ("x,y|x", ((0,), (1,)), 1),
    ("x,y|xyXYY", ((1,), (0,)), 1),
    ("x,y|xyXYYY", ((1,), (0,)), 2),
    ("x,y|xxYYYYY", ((5,), (2,)), 1),
])
def test_rank_one_projection(text, images, torsion):
    ab = ab_of(text)
    assert ab.b1 == 1
    assert ab.generator_images == images
    assert ab.torsion_order == torsion
    assert ab.project(ab.exponent_sums) == (0,)


@pytest.mark.parametrize("ex, ey", [(2, 0), (0, 3), (4, -6), (-3, 5), (1, 1)])
def test_projection_matches_row_reduction(ex, ey):
    row = ab_of("x,y|" + ("x" if ex > 0 else "X") * abs(ex) + ("y" if ey > 0 else "Y") * abs(ey)).projection[0]
    (want,) = smith_projection(ex, ey)
    assert row in (want, tuple(-c for c in want))


def test_abelian_image():
    ab = ab_of("a,b|AbaBAbaBBAbabABBab")
    assert abelian_image(parse_word("xyyX"), ab) == (0, 2)


def test_characters():
    p = Presentation.parse("x,y|yy")
    phi = make_character(p, 2, 0)
    assert phi.induced == (2,) and phi.divisor == 2
    assert phi.primitive().values == (1, 0) and phi.primitive().induced == (1,)
    assert phi((3,)) == 6
    with pytest.raises(CharacterError):
        make_character(p, 0, 1)
    with pytest.raises(CharacterError):
        make_character(p, 0, 0)
    q = Presentation.parse("x,y|xyXYY")
    assert make_character(q, -1, 0).induced == (-1,)
