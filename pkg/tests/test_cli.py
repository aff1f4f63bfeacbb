import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from findual.cli import main, parse, run, serialize
from findual.errors import ParseError

DOC = """\
# two algebras and a space
algebra A
atoms 2

contact A 0-1

algebra D
atoms 3

space S
points 2
open 1

map h : D -> D
atoms-map 0 -> 1
atoms-map 1 -> 0
atoms-map 2 -> 2

map sq : A -> A
elem {} -> {}
elem {0} -> {}
elem {1} -> {}
elem {0,1} -> {0,1}

pair P : D
member 0 1 0 1 0 1 0 1
member 0 0 1 1 0 0 1 1
member 0 0 0 0 1 1 1 1

category One
object *
morphism id : * -> *
identity * = id
compose id id = id

functor S1 : One -> One^op
object * -> *
morphism id -> id

functor T1 : One^op -> One
object * -> *
morphism id -> id

adjunction Id : One One
left S1
right T1
unit * = id
counit * = id
"""


@pytest.fixture
def docfile(tmp_path):
    p = tmp_path / "doc.txt"
    p.write_text(DOC)
    return str(p)


def test_parse_examples():
    A = parse("algebra A\natoms 2\n").objects["A"]
    assert A.n_atoms == 2 and A.is_discrete
    T = parse("contact A 0-1\n").objects["A"]
    assert T.contact(0b01, 0b10)
    S = parse("space S\npoints 2\nopen 1\n").objects["S"]
    assert S.opens == {0, 0b10, 0b11}


def test_contact_block_installs_on_existing_algebra():
    doc = parse("algebra A\natoms 3\n\ncontact A 1-2\n")
    A = doc.objects["A"]
    assert A.n_atoms == 3 and A.contact(0b010, 0b100) and not A.contact(0b001, 0b110)


def test_roundtrip_of_full_document():
    doc = parse(DOC)
    text = serialize(doc)
    again = parse(text)
    assert again == doc
    assert serialize(again) == text


@pytest.mark.parametrize("text,line", [
    ("algebra A\natoms 2\nfoo 1\n", 3),
    ("algebra A\n", 1),
    ("space S\npoints 2\nopen 5\n", 1),
    ("widget W\n", 1),
    ("algebra A\natoms 2\n\nalgebra A\natoms 1\n", 4),
    ("map m : X -> Y\nelem {} -> {}\n", 1),
    ("algebra A\natoms 2\n\nmap m : A -> A\nelem {} -> {}\n", 4),
    ("algebra A\natoms x\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.line == line


def test_check_axioms(docfile):
    code, out = run("check-axioms", [docfile])
    assert code == 0, out
    assert "A\tcontact algebra (C1-C4)\tPASS" in out
    assert "# A: not normal, fails C6" in out
    assert "Id\ttriangular identities\tPASS" in out


def test_check_axioms_reports_failures(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("algebra A\natoms 2\ncontact 0-1\n\nmap i : A -> A\natoms-map 0 -> 0\natoms-map 1 -> 1\n")
    code, out = run("check-axioms", [str(p)])
    assert code == 1
    assert "i\tV4\tFAIL" in out


def test_clusters_and_dualize(docfile):
    code, out = run("clusters", [docfile])
    assert code == 0
    assert "# D cluster 2: {2} {0,2} {1,2} {0,1,2}" in out
    code, out = run("dualize", [docfile])
    assert code == 0
    dual = parse(out)
    assert dual.objects["D.dual"].n == 3
    assert dual.objects["A.dual"].n == 1
    assert dual.objects["S.rc"].n_atoms == 1


def test_missing_file_is_an_input_error():
    code, out = run("check-axioms", ["missing.txt"])
    assert code == 2 and "missing.txt" in out


def test_verify_devries_core():
    code, out = run("verify", ["devries-core", "--max-atoms", "2"])
    assert code == 0
    assert out.splitlines()[-1] == "devries core: 26 checks, 0 failed"


def test_verify_is_deterministic():
    a = run("verify", ["transform", "--seed", "3"])
    b = run("verify", ["transform", "--seed", "3"])
    assert a == b and a[0] == 0


def test_verify_bad_input():
    assert run("verify", ["nonsense"])[0] == 2
    assert run("verify", ["stone", "--max-atoms", "9"])[0] == 2
    assert run("verify", ["stone", "--max-atoms", "two"])[0] == 2


def test_survey_normal_two():
    code, out = run("survey-normal", ["2"])
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "2at[]\ty\ty\ty\ty\ty\ty\tnormal"
    assert lines[2].startswith("2at[0-1]") and lines[2].endswith("-")


def test_main_entry_point(capsys, docfile):
    assert main(["survey-normal", "1"]) == 0
    assert "1at[]" in capsys.readouterr().out
    assert main(["check-axioms", "missing.txt"]) == 2


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "findual.cli", "survey-normal", "2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "normal" in r.stdout


@st.composite
def documents(draw):
    lines = []
    for k in range(draw(st.integers(1, 3))):
        n = draw(st.integers(1, 4))
        pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=4))
        lines.append(f"algebra A{k}\natoms {n}")
        if pairs:
            lines[-1] += "\ncontact " + " ".join(f"{i}-{j}" for i, j in pairs)
        m = draw(st.integers(1, 3))
        opens = draw(st.lists(st.lists(st.integers(0, m - 1), max_size=m), max_size=3))
        block = f"space S{k}\npoints {m}"
        for o in opens:
            block += "\nopen " + " ".join(map(str, o))
        lines.append(block)
    return "\n\n".join(lines) + "\n"


@given(documents())
def test_parse_serialize_parse_is_parse(text):
    doc = parse(text)
    assert parse(serialize(doc)) == doc
    assert serialize(parse(serialize(doc))) == serialize(doc)
