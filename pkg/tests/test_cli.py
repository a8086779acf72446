import subprocess
import sys

import pytest

from ordlab.cli import run

GOLDEN_CORPUS = [
    "0", "1", "7", "w", "w+1", "w*2", "w*2+1", "w^2", "w^w", "w^(w+1)",
    "w^(w*2)", "e0", "e0+1", "e0*2", "e0+w+1", "phi(1,1)", "phi(2,0)",
    "phi(w,0)", "phi(1,w)", "w^(e0+1)", "phi(e0,0)", "phi(1,2)+w^w*3+w+5",
]


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- dispatch ---------------------------------------------------------------------

@pytest.mark.parametrize("argv, expected", [
    (("ord", "cmp", "w^w+1", "e0"), "LT"),
    (("ord", "cmp", "e0", "w^(phi(1,0))"), "EQ"),
    (("ord", "add", "w^w+w", "w^2"), "w^w+w^2"),
    (("ord", "mul", "w+1", "2"), "w*2+1"),
    (("ord", "normalize", "1+w+phi(0,phi(1,0))"), "e0"),
    (("ord", "phi", "1", "0"), "e0"),
    (("ord", "next-phi", "0", "w+1"), "w^2"),
    (("worm", "o", "1 0 1"), "w*2"),
    (("worm", "cmp", "0 1", "1"), "GT"),
    (("worm", "of-ordinal", "w^w"), "2"),
    (("worm", "to-theory", "1 1"), "(rfn 2 1 (rfn 2 1 EA+))"),
    (("theory", "pi-ordinal", "PA", "1"), "e0"),
    (("theory", "pi-ordinal", "PA+Con(PA)", "1"), "e0*2"),
    (("theory", "pi-ordinal", "(rfn 2 1 EA+)", "2"), "1"),
    (("theory", "pi-ordinal", "(rfn 2 1 EA+)", "1"), "w"),
    (("theory", "reduce", "1Con(EA+)", "1"), "(con w EA+)"),
    (("theory", "stage", "EA+", "1"), "(con 1 EA+)"),
    (("theory", "catalog", "PA+Con(PA)"), "(con 1 PA)"),
    (("dilator", "eval", "0", "0"), "e0"),
    (("notation", "descend", "x != 7"), None),  # checked separately
])
def test_success_outputs(capsys, argv, expected):
    code, out, err = invoke(capsys, *argv)
    assert code == 0
    assert err == ""
    if expected is not None:
        assert out == expected + "\n"


def test_descend_output(capsys):
    code, out, _ = invoke(capsys, "--fuel", "12", "notation", "descend", "x != 7")
    assert code == 0
    assert out == "7 8 9 10 11 12\n"
    code, out, _ = invoke(capsys, "notation", "descend", "true")
    assert code == 0 and out == "none\n"


def test_kreisel_and_audit_output(capsys):
    code, out, _ = invoke(capsys, "notation", "kreisel", "x != 7", "100")
    assert code == 0
    assert out == "predicate: x != 7\nwindow: 100\nascending: no\n"
    code, out, _ = invoke(capsys, "notation", "audit", "x != 7", "100")
    assert code == 0
    assert out == "window: 100\ncounterexamples: 1\ndescents: 93\nequivalent: yes\n"


def test_formula_modes(capsys):
    code, out, _ = invoke(capsys, "formula", "slowcon")
    assert code == 0 and out == "∀x(F_e0(x)↓ → Con(ISigma_x + φ))\n"
    code, out, _ = invoke(capsys, "--ascii", "formula", "slowcon")
    assert code == 0 and out == "forall x (F_e0(x)| -> Con(ISigma_x + phi))\n"
    code, out, _ = invoke(capsys, "--ascii", "formula", "slowcon", "--top")
    assert code == 0 and out == "forall x (F_e0(x)| -> Con(ISigma_x))\n"
    code, out, _ = invoke(capsys, "formula", "constar", "a", "PA")
    assert code == 0 and out == "PA ⊢ Con★(a,PA) ↔ ∀β ≺ a Con(PA+⌜Con★(β,PA)⌝)\n"


def test_enum_respects_max_nodes(capsys):
    code, out, _ = invoke(capsys, "--max-nodes", "2", "ord", "enum")
    assert code == 0
    assert out.splitlines() == ["0", "1", "2", "w", "e0"]


# --- round trip --------------------------------------------------------------------

@pytest.mark.parametrize("text", GOLDEN_CORPUS)
def test_normalize_round_trip(capsys, text):
    code, out, _ = invoke(capsys, "ord", "normalize", text)
    assert code == 0
    assert out == text + "\n"


# --- determinism --------------------------------------------------------------------

def test_byte_identical_reruns(capsys):
    invocations = [
        ("ord", "enum"),
        ("theory", "pi-ordinal", "PA+Con(PA)", "1"),
        ("formula", "svstar"),
        ("notation", "audit", "x != 7", "150"),
        ("worm", "of-ordinal", "w^w+w*2+3"),
    ]
    first = []
    for argv in invocations:
        code, out, err = invoke(capsys, *argv)
        assert code == 0
        first.append((out, err))
    for argv, previous in zip(invocations, first):
        code, out, err = invoke(capsys, *argv)
        assert code == 0
        assert (out, err) == previous


# --- error discipline ------------------------------------------------------------------

def test_domain_error_exit_1_and_empty_stdout(capsys):
    code, out, err = invoke(capsys, "ord", "cmp", "w^^", "0")
    assert code == 1
    assert out == ""
    assert err.startswith("error: parse:")
    assert len(err.strip().splitlines()) == 1

    code, out, err = invoke(capsys, "worm", "of-ordinal", "e0")
    assert code == 1 and out == "" and err.startswith("error: range:")

    code, out, err = invoke(capsys, "theory", "pi-ordinal", "PA", "2")
    assert code == 1 and out == "" and err.startswith("error: unsupported:")

    code, out, err = invoke(capsys, "theory", "catalog", "ZFC")
    assert code == 1 and out == "" and err.startswith("error: catalog:")


def test_usage_error_exit_2(capsys):
    assert invoke(capsys, "ord", "bogus")[0] == 2
    assert invoke(capsys, "nonsense")[0] == 2
    assert invoke(capsys, "ord", "cmp", "w")[0] == 2
    assert invoke(capsys, "--bogus-flag", "ord", "enum")[0] == 2


def test_unknown_catalog_vs_sexpr(capsys):
    code, out, err = invoke(capsys, "theory", "pi-ordinal", "ZFC", "1")
    assert code == 1 and out == ""


# --- real process -------------------------------------------------------------------

def _run_process(*argv):
    return subprocess.run(
        [sys.executable, "-m", "ordlab.cli", *argv],
        capture_output=True,
        timeout=60,
    )


def test_subprocess_success_and_utf8_bytes():
    proc = _run_process("theory", "pi-ordinal", "PA+Con(PA)", "1")
    assert proc.returncode == 0
    assert proc.stdout == b"e0*2\n"
    proc = _run_process("formula", "slowcon")
    assert proc.returncode == 0
    assert proc.stdout.decode("utf-8") == "∀x(F_e0(x)↓ → Con(ISigma_x + φ))\n"


def test_subprocess_error_discipline():
    proc = _run_process("ord", "cmp", "w^^", "0")
    assert proc.returncode == 1
    assert proc.stdout == b""
    assert proc.stderr.startswith(b"error: parse:")
    proc = _run_process("ord", "frobnicate")
    assert proc.returncode == 2
    assert proc.stdout == b""


def test_subprocess_byte_identical_reruns():
    first = _run_process("--max-nodes", "4", "ord", "enum")
    second = _run_process("--max-nodes", "4", "ord", "enum")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
