import io
import json
from importlib import resources

import jsonschema
import pytest
from hypothesis import given, strategies as st

from cutgroups.catalog import catalog_spec, emit_spec, normalize_spec, parse_spec, product_spec
from cutgroups.cli import run

SCHEMA = json.loads(resources.files("cutgroups").joinpath("schemas/output.schema.json").read_text())


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    doc = json.loads(out)  # exactly one document
    jsonschema.validate(doc, SCHEMA)
    return code, doc


def test_cut_check_s3():
    code, doc = call_json("cut", "check", "--catalog", "symmetric", "3")
    assert code == 0 and doc["outcome"] is True and doc["witness"] is None


def test_rank_c5():
    code, doc = call_json("rank", "--catalog", "cyclic", "5")
    assert code == 0 and doc["rank"] == 1


def test_families_metacyclic_negative():
    code, doc = call_json("families", "metacyclic", "--m", "0", "--n", "10", "--r", "-1")
    assert code == 1 and doc["outcome"] is False and doc["derivation"]


@pytest.mark.parametrize("argv,code", [
    (("families", "metacyclic", "--m", "7", "--n", "0", "--r", "3"), 0),
    (("families", "bs", "--m", "2", "--n", "3"), 0),
    (("families", "amalgam", "--preset", "sl2z"), 0),
    (("families", "amalgam", "--preset", "psl2z"), 0),
    (("families", "amalgam", "--indices", "1", "2"), 1),
    (("families", "amalgam", "--indices", "2", "3", "--rs-in-factor"), 0),
    (("families", "metacyclic", "--m", "7", "--n", "3", "--r", "2"), 1),
    (("families", "bs", "--m", "0", "--n", "3"), 1),
    (("group", "show", "--catalog", "quaternion", "8"), 0),
    (("group", "classes", "--catalog", "symmetric", "4", "--kind", "real"), 0),
    (("group", "normals", "--catalog", "dihedral", "4"), 0),
    (("rs", "element", "--catalog", "cyclic", "5", "--element", "1"), 1),
    (("rs", "subgroup", "--catalog", "cyclic", "8", "--gens", "2"), 0),
    (("rank-preserved", "--catalog", "quaternion", "8", "--gens", "1"), 0),
    (("ring", "bass", "--catalog", "cyclic", "5", "--g", "1", "--k", "2"), 0),
    (("ring", "star", "--catalog", "cyclic", "5", "--u", '[{"elem":1,"coeff":2}]'), 0),
    (("ring", "mul", "--catalog", "symmetric", "3", "--u", '[{"elem":1,"coeff":2}]',
      "--v", '[{"elem":1,"coeff":-1}]'), 0),
    (("ring", "theta", "--catalog", "cyclic", "3", "--u", '[{"elem":1,"coeff":1}]'), 0),
    (("ring", "theta", "--catalog", "cyclic", "3", "--u", '[{"elem":1,"coeff":2}]'), 1),
    (("ring", "delta-member", "--catalog", "quaternion", "8", "--gens", "1", "2",
      "--u", '[{"elem":0,"coeff":-1},{"elem":3,"coeff":1}]'), 0),
    (("verify", "pgroup", "--max-order", "16"), 0),
    (("cut", "check", "--catalog", "nosuch"), 2),
    (("cut", "check", "--catalog", "cyclic", "x"), 2),
    (("cut", "check"), 2),
    (("rs", "element", "--catalog", "cyclic", "5", "--element", "9"), 2),
])
def test_exit_codes_and_schema(argv, code):
    got, doc = call_json(*argv)
    assert got == code


def test_usage_errors_exit_2():
    assert call("bogus")[0] == 2
    assert call("verify", "nosuch")[0] == 2
    assert call("cut", "check", "--catalog", "cyclic", "3", "--format", "yaml")[0] == 2


def test_text_and_json_agree():
    for argv in (("cut", "check", "--catalog", "cyclic", "7"), ("cut", "check", "--catalog", "alternating", "4")):
        code_t, out, _ = call(*argv)
        code_j, doc = call_json(*argv)
        assert code_t == code_j
        assert ("outcome: true" in out) == (doc["outcome"] is True)


def test_ring_output_sorted():
    code, doc = call_json("ring", "bass", "--catalog", "cyclic", "5", "--g", "1", "--k", "2")
    assert [t["elem"] for t in doc] == sorted(t["elem"] for t in doc)
    assert [t["coeff"] for t in doc] == [-2, 1, 3, 1, -2]


def test_spec_file(tmp_path):
    spec = {"schema": 1, "kind": "semidirect",
            "a": {"kind": "catalog", "name": "cyclic", "params": [7]},
            "q": {"kind": "catalog", "name": "cyclic", "params": [3]},
            "action": [[[[0, 2, 4, 6, 1, 3, 5]]]]}
    # cyclic(7) is the 7-cycle a = (0 1 ... 6); a -> a^2 is the listed permutation
    path = tmp_path / "g.json"
    path.write_text(json.dumps(spec))
    code, doc = call_json("group", "show", "--spec", str(path))
    assert code == 0 and doc["order"] == 21 and not doc["abelian"]
    # the Frobenius group of order 21 is cut: a^j lies in the class of a or a^-1
    code, doc = call_json("cut", "check", "--spec", str(path))
    assert code == 0
    perm = {"schema": 1, "kind": "permutation", "degree": 3, "generators": [[[0, 1]], [[0, 1, 2]]]}
    code, doc = call_json("cut", "check", "--spec", json.dumps(perm))
    assert code == 0


def test_bad_spec_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"kind": "nope"}')
    assert call("cut", "check", "--spec", str(path))[0] == 2
    assert call("cut", "check", "--spec", str(tmp_path / "missing.json"))[0] == 2
    not_in_a = {"kind": "semidirect", "a": {"kind": "catalog", "name": "cyclic", "params": [7]},
                "q": {"kind": "catalog", "name": "cyclic", "params": [3]},
                "action": [[[[0, 1]]]]}
    assert call("cut", "check", "--spec", json.dumps(not_in_a))[0] == 2


def test_verify_deterministic_json():
    a = call("verify", "T3", "--max-order", "6", "--seed", "4", "--format", "json")
    b = call("verify", "T3", "--max-order", "6", "--seed", "4", "--format", "json")
    assert a == b and a[0] == 0


specs = st.recursive(
    st.one_of(
        st.integers(1, 12).map(lambda n: catalog_spec("cyclic", n)),
        st.integers(2, 6).map(lambda n: catalog_spec("dihedral", n)),
        st.sampled_from([catalog_spec("symmetric", 3), catalog_spec("quaternion", 8)]),
        st.integers(2, 5).flatmap(lambda d: st.permutations(list(range(d))).map(
            lambda p: normalize_spec({"kind": "permutation", "degree": d,
                                      "generators": [[list(c) for c in _cycles(p)]]}))),
    ),
    lambda inner: st.lists(inner, min_size=1, max_size=3).map(lambda fs: product_spec(*fs)),
    max_leaves=4,
)


def _cycles(images):
    from cutgroups.groups import Permutation
    return Permutation(images).cycles()


@given(specs)
def test_spec_round_trip(spec):
    assert parse_spec(emit_spec(spec)) == spec
    assert emit_spec(parse_spec(emit_spec(spec))) == emit_spec(spec)
