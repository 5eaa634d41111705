import pytest

from braidnf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_normal_form_prints_gbase(capsys):
    code, out, _ = run(capsys, "normal-form", "--strands", "2", "1")
    assert code == 0
    assert out == "(-1,0) (2,0) (-1,0) (2,1) (1,0) (-1,0)\n"


def test_normal_form_empty_word(capsys):
    code, out, _ = run(capsys, "normal-form", "--strands", "3", "")
    assert code == 0
    assert out == "(-1,0) (1,0) (-1,0) (2,0) (-1,0) (3,0) (-1,0)\n"


def test_normal_form_bad_index_exits_2(capsys):
    code, out, err = run(capsys, "normal-form", "--strands", "2", "5")
    assert code == 2
    assert out == ""
    assert "error" in err


def test_equal_true_exits_0(capsys):
    code, out, _ = run(capsys, "equal", "--strands", "3", "1 2 1", "2 1 2")
    assert (code, out) == (0, "true\n")


def test_equal_false_exits_1(capsys):
    code, out, _ = run(capsys, "equal", "--strands", "2", "1", "-1")
    assert (code, out) == (1, "false\n")


def test_identity_true(capsys):
    code, out, _ = run(capsys, "identity", "--strands", "2", "1 -1")
    assert (code, out) == (0, "true\n")


def test_oracle_equal_matches_solver(capsys):
    code, out, _ = run(capsys, "oracle-equal", "--strands", "4", "1 3", "3 1")
    assert (code, out) == (0, "true\n")
    code, out, _ = run(capsys, "oracle-equal", "--strands", "2", "1", "")
    assert (code, out) == (1, "false\n")


def test_identity_batch_file(tmp_path, capsys):
    path = tmp_path / "words.txt"
    path.write_text("1 -1\n\n1\n", encoding="utf-8")
    code, out, _ = run(capsys, "identity", "--strands", "2", "--file", str(path))
    assert code == 1
    assert out == "true\ntrue\nfalse\n"


def test_normal_form_batch_file(tmp_path, capsys):
    path = tmp_path / "words.txt"
    path.write_text("\n1\n", encoding="utf-8")
    code, out, _ = run(capsys, "normal-form", "--strands", "2", "--file", str(path))
    assert code == 0
    assert out.splitlines() == [
        "(-1,0) (1,0) (-1,0) (2,0) (-1,0)",
        "(-1,0) (2,0) (-1,0) (2,1) (1,0) (-1,0)",
    ]


def test_word_and_file_together_exit_2(capsys):
    code, _, err = run(capsys, "identity", "--strands", "2", "1", "--file", "x")
    assert code == 2
    assert "exactly one" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "normal-form", "--strands", "2", "--file", "/nonexistent")
    assert code == 2


def test_missing_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["equal", "1", "2"])
    assert excinfo.value.code == 2


def test_bench_header_and_determinism(capsys):
    code1, out1, _ = run(capsys, "bench", "--strands", "4", "--length", "8",
                         "--count", "2", "--seed", "7")
    code2, out2, _ = run(capsys, "bench", "--strands", "4", "--length", "8",
                         "--count", "2", "--seed", "7")
    assert code1 == code2 == 0
    lines1, lines2 = out1.splitlines(), out2.splitlines()
    assert lines1[0] == "n,word_length,seed,final_list_length,max_list_length,links_visited,time_ns"
    assert len(lines1) == 3
    # everything but the timing column is workload, and must reproduce exactly
    assert [l.rsplit(",", 1)[0] for l in lines1] == [l.rsplit(",", 1)[0] for l in lines2]


def test_bench_count_zero_prints_header_only(capsys):
    code, out, _ = run(capsys, "bench", "--strands", "3", "--length", "4",
                       "--count", "0", "--seed", "1")
    assert code == 0
    assert out.splitlines() == [
        "n,word_length,seed,final_list_length,max_list_length,links_visited,time_ns"
    ]


def test_bench_rejects_bad_flags(capsys):
    code, out, err = run(capsys, "bench", "--strands", "0", "--length", "4",
                         "--count", "1", "--seed", "1")
    assert (code, out) == (2, "")
    code, out, err = run(capsys, "bench", "--strands", "1", "--length", "4",
                         "--count", "1", "--seed", "1")
    assert (code, out) == (2, "")
    assert "1 strand" in err
