import pytest

from samples import LOUDS21_TEXT, TREE10_TEXT, del_borrow_sample
from succinct import dump, number_of_nodes
from succinct.cli import main, parse_script, ScriptError
from succinct.verify import ScriptRunner, VerifyError, random_script, random_tree
from succinct import SizeBounds, format_tree


@pytest.fixture
def tree_file(tmp_path):
    path = tmp_path / "tree.txt"
    path.write_text(TREE10_TEXT)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestLoudsBuild:
    def test_sample_tree_with_super_root(self, capsys, tree_file):
        code, out, _ = run(capsys, "louds-build", tree_file, "--super-root")
        assert code == 0
        assert out.strip() == LOUDS21_TEXT

    def test_sample_tree_bare(self, capsys, tree_file):
        code, out, _ = run(capsys, "louds-build", tree_file)
        assert code == 0
        assert out.strip() == LOUDS21_TEXT[2:]

    def test_single_node(self, capsys, tmp_path):
        path = tmp_path / "t.txt"
        path.write_text("(x)")
        code, out, _ = run(capsys, "louds-build", str(path))
        assert code == 0
        assert out.strip() == "0"

    def test_empty_file_is_an_error(self, capsys, tmp_path):
        path = tmp_path / "t.txt"
        path.write_text("  \n")
        code, _, err = run(capsys, "louds-build", str(path))
        assert code == 2
        assert "empty" in err

    def test_parse_error_reports_location(self, capsys, tmp_path):
        path = tmp_path / "t.txt"
        path.write_text("(a\n(b)")
        code, _, err = run(capsys, "louds-build", str(path))
        assert code == 2
        assert "line 2" in err

    def test_size_law_on_random_files(self, capsys, tmp_path):
        import random

        rng = random.Random(71)
        for k in range(10):
            t = random_tree(rng, 50)
            path = tmp_path / f"r{k}.txt"
            path.write_text(format_tree(t))
            code, out, _ = run(capsys, "louds-build", str(path))
            assert code == 0
            assert len(out.strip()) == 2 * number_of_nodes(t) - 1


class TestLoudsQuery:
    def test_children(self, capsys):
        code, out, _ = run(capsys, "louds-query", "children", LOUDS21_TEXT, "--pos", "17")
        assert (code, out.strip()) == (0, "1")

    def test_child(self, capsys):
        code, out, _ = run(
            capsys, "louds-query", "child", LOUDS21_TEXT, "--pos", "0", "--index", "0"
        )
        assert (code, out.strip()) == (0, "2")

    def test_parent(self, capsys):
        code, out, _ = run(capsys, "louds-query", "parent", LOUDS21_TEXT, "--pos", "17")
        assert (code, out.strip()) == (0, "10")

    def test_bits_from_file(self, capsys, tmp_path):
        path = tmp_path / "bits.txt"
        path.write_text(LOUDS21_TEXT)
        code, out, _ = run(
            capsys, "louds-query", "children", "--bits-file", str(path), "--pos", "2"
        )
        assert (code, out.strip()) == (0, "3")

    def test_invalid_position_is_rejected(self, capsys):
        code, _, err = run(capsys, "louds-query", "children", LOUDS21_TEXT, "--pos", "1")
        assert code == 2
        assert "position" in err

    def test_malformed_bits(self, capsys):
        code, _, err = run(capsys, "louds-query", "children", "10x", "--pos", "0")
        assert code == 2

    def test_verify_against_tree(self, capsys, tree_file):
        code, out, _ = run(
            capsys,
            "louds-query",
            "children",
            LOUDS21_TEXT,
            "--pos",
            "17",
            "--verify",
            tree_file,
            "--super-root",
            "--path",
            "0,2,1",
        )
        assert (code, out.strip()) == (0, "1")

    def test_verify_rejects_wrong_position(self, capsys, tree_file):
        code, _, err = run(
            capsys,
            "louds-query",
            "children",
            LOUDS21_TEXT,
            "--pos",
            "10",
            "--verify",
            tree_file,
            "--super-root",
            "--path",
            "0,2,1",
        )
        assert code == 1
        assert "oracle" in err

    def test_verify_child_and_parent(self, capsys, tree_file):
        code, out, _ = run(
            capsys,
            "louds-query",
            "child",
            LOUDS21_TEXT,
            "--pos",
            "10",
            "--index",
            "1",
            "--verify",
            tree_file,
            "--super-root",
            "--path",
            "0,2",
        )
        assert (code, out.strip()) == (0, "17")
        code, out, _ = run(
            capsys,
            "louds-query",
            "parent",
            LOUDS21_TEXT,
            "--pos",
            "17",
            "--verify",
            tree_file,
            "--super-root",
            "--path",
            "0,2,1",
        )
        assert (code, out.strip()) == (0, "10")


class TestDbvRun:
    def test_small_script(self, capsys, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text("insert 0 1\ninsert 1 0\nrank 2\n")
        code, out, _ = run(capsys, "dbv-run", str(path))
        assert (code, out.strip()) == (0, "1")

    def test_query_outputs_one_per_line(self, capsys, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text("insert 0 1\ninsert 1 0\nrank 2\nselect1 1\naccess 1\n")
        code, out, _ = run(capsys, "dbv-run", str(path))
        assert code == 0
        assert out.splitlines() == ["1", "1", "0"]

    def test_unknown_op_aborts_with_line_number(self, capsys, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text("insert 0 1\nfrobnicate 2\n")
        code, _, err = run(capsys, "dbv-run", str(path))
        assert code == 2
        assert "line 2" in err

    def test_invalid_index_aborts_with_line_number(self, capsys, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text("insert 0 1\ndelete 5\n")
        code, _, err = run(capsys, "dbv-run", str(path))
        assert code == 2
        assert "line 2" in err

    def test_init_bits(self, capsys, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text("rank 4\n")
        code, out, _ = run(capsys, "dbv-run", str(path), "--init", "1101", "--bounds", "8,32")
        assert (code, out.strip()) == (0, "3")

    def test_verified_random_script(self, capsys, tmp_path):
        import random

        ops = random_script(random.Random(5), 300)
        lines = [" ".join(str(part) for part in op) for op in ops]
        path = tmp_path / "s.txt"
        path.write_text("\n".join(lines))
        code, out, _ = run(capsys, "dbv-run", str(path), "--bounds", "8,32", "--verify")
        assert code == 0

    def test_verified_ten_thousand_op_script(self, capsys, tmp_path):
        import random

        ops = random_script(random.Random(99), 10000)
        lines = [" ".join(str(part) for part in op) for op in ops]
        path = tmp_path / "s.txt"
        path.write_text("\n".join(lines))
        code, _, _ = run(capsys, "dbv-run", str(path), "--bounds", "8,32", "--verify")
        assert code == 0

    def test_underflow_delete_scenario_via_dump(self, capsys, tmp_path):
        before, after = del_borrow_sample()
        init = tmp_path / "init.txt"
        init.write_text(dump(before))
        script = tmp_path / "s.txt"
        script.write_text("delete 1\n")
        code, out, _ = run(
            capsys,
            "dbv-run",
            str(script),
            "--init-tree",
            str(init),
            "--bounds",
            "3,8",
            "--verify",
            "--dump",
        )
        assert code == 0
        assert out.strip() == dump(after)

    def test_verify_catches_injected_divergence(self, capsys, tmp_path, monkeypatch):
        # make the tree-side rank lie; the oracle mirror must catch it
        import succinct.verify as verify_mod

        monkeypatch.setattr(verify_mod, "drank", lambda t, i: -1)
        path = tmp_path / "s.txt"
        path.write_text("insert 0 1\nrank 1\n")
        code, _, err = run(capsys, "dbv-run", str(path), "--verify", "--bounds", "8,32")
        assert code == 1
        assert "oracle" in err

    def test_unverified_run_does_not_check(self, capsys, tmp_path, monkeypatch):
        import succinct.verify as verify_mod

        monkeypatch.setattr(verify_mod, "drank", lambda t, i: -1)
        path = tmp_path / "s.txt"
        path.write_text("insert 0 1\nrank 1\n")
        code, out, _ = run(capsys, "dbv-run", str(path), "--bounds", "8,32")
        assert (code, out.strip()) == (0, "-1")


class TestVerifyCommand:
    def test_small_run_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--trees", "5", "--scripts", "2", "--ops", "80", "--seed", "3"
        )
        assert code == 0
        assert "ok" in out

    def test_mismatch_fails(self, capsys, monkeypatch):
        import succinct.verify as verify_mod

        monkeypatch.setattr(verify_mod, "drank", lambda t, i: -1)
        code, _, err = run(capsys, "verify", "--trees", "0", "--scripts", "1", "--ops", "50")
        assert code == 1


class TestScriptParsing:
    def test_comments_and_blanks_are_skipped(self):
        steps = parse_script("# header\n\ninsert 0 1  # trailing\n")
        assert steps == [(3, ("insert", 0, 1))]

    def test_bad_bit_value(self):
        with pytest.raises(ScriptError):
            parse_script("insert 0 2\n")

    def test_bad_arity(self):
        with pytest.raises(ScriptError):
            parse_script("rank\n")

    def test_negative_index(self):
        with pytest.raises(ScriptError):
            parse_script("delete -1\n")


class TestRunnerDivergenceDetection:
    def test_corrupted_mirror_is_detected(self):
        runner = ScriptRunner(SizeBounds(8, 32), verify=True)
        runner.step(("insert", 0, 1))
        runner.flat = [0]  # corrupt the oracle state
        with pytest.raises(VerifyError):
            runner.step(("insert", 1, 1))

    def test_bad_initial_tree_is_detected(self):
        from succinct import Leaf

        bad = Leaf([1] * 100)  # beyond the leaf upper bound
        with pytest.raises(VerifyError):
            ScriptRunner(SizeBounds(8, 32), verify=True, tree=bad)
