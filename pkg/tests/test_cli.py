import json
import subprocess
import sys

from cumulants import transforms
from cumulants.cli import main
from cumulants.transforms import WeightSpec


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_convert_wigner_free_cumulants(capsys):
    code, out, _ = run_cli(
        capsys, "convert", "--from", "moments", "--to", "free",
        "--seq", "0,1,0,2,0,5,0,14",
    )
    assert code == 0
    assert out == "0,1,0,0,0,0,0,0\n"


def test_convert_identity(capsys):
    code, out, _ = run_cli(
        capsys, "convert", "--from", "moments", "--to", "moments", "--seq", "1,2,3"
    )
    assert code == 0
    assert out == "1,2,3\n"


def test_convert_marchenko_pastur_symbolic(capsys):
    code, out, _ = run_cli(
        capsys, "convert", "--from", "free", "--to", "moments",
        "--dist", "marchenko_pastur", "--param", "lambda", "--order", "4",
    )
    assert code == 0
    assert out.strip().split(",")[-1] == "lambda^4+6*lambda^3+6*lambda^2+lambda"


def test_moments_command_with_rational_param(capsys):
    code, out, _ = run_cli(
        capsys, "moments", "--dist", "poisson", "--param", "lambda=1", "--order", "3"
    )
    assert code == 0
    assert out == "1,2,5\n"


def test_compound_poisson_inner_sequence(capsys):
    code, out, _ = run_cli(
        capsys, "moments", "--dist", "compound_poisson",
        "--param", "lambda=1", "--seq", "1,1,1", "--order", "3",
    )
    assert code == 0
    assert out == "1,2,5\n"


def test_table_text_output(capsys):
    code, out, _ = run_cli(capsys, "table", "wigner_catalan", "--max-order", "4")
    assert code == 0
    assert out.splitlines() == ["1\t0\t1", "2\t1\t2", "3\t0\t5", "4\t2\t14"]


def test_sequence_json_is_a_bare_scalar_array(capsys):
    code, out, _ = run_cli(
        capsys, "convert", "--from", "moments", "--to", "free",
        "--seq", "0,1,0,2", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == ["0", "1", "0", "0"]
    assert json.dumps(payload) + "\n" == out


def test_table_json_round_trips(capsys):
    code, out, _ = run_cli(
        capsys, "table", "marchenko_pastur", "--max-order", "3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert json.dumps(payload) + "\n" == out
    assert payload["rows"][2]["value"] == {"symbol": "lambda", "coeffs": ["0", "1", "3", "1"]}


def test_output_is_deterministic(capsys):
    args = ("table", "marchenko_pastur", "--max-order", "6", "--format", "json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert (code1, out1) == (code2, out2)


def test_bench_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "bench", "--orders", "4,5", "--reps", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "order\tterms\tmedian_ms"
    assert lines[1].startswith("4\t5\t")
    assert lines[2].startswith("5\t7\t")
    code, out, _ = run_cli(
        capsys, "bench", "--orders", "4", "--reps", "1", "--format", "json"
    )
    rows = json.loads(out)["rows"]
    assert rows[0]["order"] == 4 and rows[0]["terms"] == 5


def test_parallel_flag_does_not_change_output(capsys):
    args = ("convert", "--from", "moments", "--to", "free", "--seq", "1/2,3,-2/7,4,1,6")
    _, serial, _ = run_cli(capsys, *args)
    code, threaded, _ = run_cli(capsys, *args, "--parallel")
    assert code == 0
    assert threaded == serial


def test_bench_symbolic_input(capsys):
    code, out, _ = run_cli(
        capsys, "bench", "--orders", "5", "--reps", "1", "--input", "symbolic"
    )
    assert code == 0


def test_bench_rejects_empty_orders(capsys):
    code, _, err = run_cli(capsys, "bench", "--orders", ",")
    assert code == 2
    assert "error" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "convert", "--from", "moments", "--to", "free", "--seq", "1,zzz"
    )
    assert code == 2
    assert "error" in err


def test_semantic_error_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "convert", "--from", "moments", "--to", "free",
        "--seq", "1,2", "--order", "5",
    )
    assert code == 3


def test_exponential_symbolic_rate_is_semantic_error(capsys):
    code, _, err = run_cli(
        capsys, "moments", "--dist", "exponential", "--param", "lambda", "--order", "3"
    )
    assert code == 3


def test_convert_needs_an_input(capsys):
    code, _, err = run_cli(capsys, "convert", "--from", "moments", "--to", "free")
    assert code == 2


def test_selftest_passes(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--max-order", "4")
    assert code == 0
    assert "all suites passed" in out


def test_selftest_max_order_cap(capsys):
    code, _, err = run_cli(capsys, "selftest", "--max-order", "11")
    assert code == 2


def test_selftest_detects_injected_fault(capsys, monkeypatch):
    # flip one weight sign: the j = 1 classical weight becomes +1 instead of -1
    original = transforms.CLASSICAL_FROM_MOMENTS.rule
    broken = WeightSpec(lambda i, j: -original(i, j) if j == 1 else original(i, j))
    monkeypatch.setattr(transforms, "CLASSICAL_FROM_MOMENTS", broken)
    code, out, _ = run_cli(capsys, "selftest", "--max-order", "4")
    assert code == 1
    assert "FAIL" in out
    assert "round_trip" in out


def test_subprocess_exit_codes_and_bytes():
    base = [sys.executable, "-m", "cumulants"]
    ok = subprocess.run(
        base + ["convert", "--from", "moments", "--to", "free", "--seq", "0,1,0,2"],
        capture_output=True, text=True,
    )
    assert ok.returncode == 0
    assert ok.stdout == "0,1,0,0\n"
    usage = subprocess.run(base + ["convert", "--from", "bogus", "--to", "free",
                                   "--seq", "1"], capture_output=True, text=True)
    assert usage.returncode == 2
    semantic = subprocess.run(
        base + ["convert", "--from", "moments", "--to", "free", "--seq", "1",
                "--order", "3"],
        capture_output=True, text=True,
    )
    assert semantic.returncode == 3
    nothing = subprocess.run(base, capture_output=True, text=True)
    assert nothing.returncode == 2
