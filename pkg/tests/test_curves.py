import pytest

from ecbench.curves import BUILTIN_CURVES, load_curve, parse_config, read_config
from ecbench.errors import ConfigError

SAMPLE = """
# toy curve
model = weierstrass
p = 23
a = 1
b = 0x1
gx = 3
gy = 10
n = 28
h = 1
"""


def test_parse():
    cfg = parse_config(SAMPLE)
    assert cfg["model"] == "weierstrass"
    assert cfg["b"] == 1 and cfg["p"] == 23


@pytest.mark.parametrize("name", BUILTIN_CURVES)
def test_builtins_load(name):
    curve = load_curve(name)
    assert curve.on_curve(curve.generator)
    cfg = read_config(name)
    assert curve.order_n == cfg["n"]


def test_builtin_orders():
    assert load_curve("secp160r1").group_order == 0x0100000000000000000001F4C8F927AED3CA752257
    assert load_curve("sect163r2").field.m == 163
    ed = load_curve("edwards160")
    assert ed.field.p == 2**160 - 2**31 - 1 and ed.cofactor_h == 4 and ed.complete


def test_file_roundtrip(tmp_path):
    path = tmp_path / "toy.cfg"
    path.write_text(SAMPLE)
    assert load_curve(str(path)).generator.ints() == (3, 10)


@pytest.mark.parametrize("text,msg", [
    ("model = weierstrass\np = 23\n", "missing"),
    ("model = hyperelliptic\n", "model"),
    ("p 23\n", "expected"),
    (SAMPLE + "q = 1\n", "unknown"),
    (SAMPLE + "p = 29\n", "duplicate"),
    (SAMPLE.replace("a = 1", "a = one"), "integer"),
])
def test_bad_configs(text, msg):
    with pytest.raises(ConfigError, match=msg):
        parse_config(text)


def test_corrupted_b_fails_generator_check(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text(SAMPLE.replace("b = 0x1", "b = 2"))
    with pytest.raises(ConfigError, match="generator-on-curve"):
        load_curve(str(path))


def test_missing_file():
    with pytest.raises(ConfigError):
        load_curve("/nonexistent/curve.cfg")
