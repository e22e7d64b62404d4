import pytest

from nanophrases import make_alphabet
from nanophrases.alphabet import InvolutiveAlphabet, PiElement

alpha0 = make_alphabet(["a", "b"], [("a", "b")])
mixed = make_alphabet(["a", "b", "c", "d", "e"], [("a", "b"), ("d", "e")])


def test_make_alphabet_tau():
    assert alpha0.tau("a") == "b"
    assert alpha0.tau("b") == "a"
    one = make_alphabet(["a"], [])
    assert one.tau("a") == "a"


def test_orbits_and_crs_order():
    # two-element orbits first, in declaration order of their representatives
    assert mixed.orbits.pairs == (("a", "b"), ("d", "e"))
    assert mixed.orbits.fixed == ("c",)
    assert mixed.crs == ("a", "d", "c")


def test_make_alphabet_rejects_bad_pairs():
    with pytest.raises(ValueError):
        make_alphabet(["a"], [("a", "q")])
    with pytest.raises(ValueError):
        make_alphabet(["a", "b", "c"], [("a", "b"), ("b", "c")])
    with pytest.raises(ValueError):
        make_alphabet(["a", "b"], [("a", "a")])
    with pytest.raises(ValueError):
        make_alphabet(["a", "a"], [])
    with pytest.raises(ValueError):
        make_alphabet(["a!"], [])


def test_restrict_keeps_declaration_order():
    sub = mixed.restrict({"d", "e", "c"})
    assert sub.symbols == ("c", "d", "e")
    assert sub.tau("d") == "e"
    with pytest.raises(ValueError):
        mixed.restrict({"a"})  # not tau-closed


def test_group_mixed_orders():
    g = mixed.group
    # paired symbols generate a free factor, fixed symbols an order-2 one
    a, b = g.embed("a"), g.embed("b")
    assert g.equal(g.mul(a, b), g.unit())
    assert g.mul(a, a).exps == (("a", 2),)
    c = g.embed("c")
    assert g.equal(g.mul(c, c), g.unit())
    assert not g.equal(a, g.unit())


def test_group_product_and_str():
    g = mixed.group
    x = g.product(["a", "a", "e", "c"])
    assert x.exps == (("a", 2), ("d", -1), ("c", 1))
    assert str(x) == "a^2 d^-1 c"
    assert str(g.unit()) == "1"


def test_pi_element_is_unit():
    g = alpha0.group
    assert g.product([]).is_unit()
    assert g.product(["a", "b"]).is_unit()
    assert not g.product(["a"]).is_unit()


def test_alphabet_equality_and_contains():
    assert alpha0 == make_alphabet(["a", "b"], [("a", "b")])
    assert "a" in alpha0
    assert "z" not in alpha0
    assert isinstance(alpha0, InvolutiveAlphabet)


def test_pi_element_frozen():
    e = PiElement((("a", 1),))
    with pytest.raises(AttributeError):
        e.exps = ()
