import json

import pytest
from click.testing import CliRunner

from lorentz_bridge.cli import cli, main


@pytest.fixture
def run():
    runner = CliRunner()

    def _run(*args, env=None):
        return runner.invoke(cli, list(args), env=env, catch_exceptions=False)

    return _run


def rows(text):
    return [line.split(",") for line in text.strip().splitlines()]


class TestBoost:
    def test_identity(self, run):
        r = run("boost", "--vector", "1,0,0,0", "--beta", "0")
        assert r.exit_code == 0
        assert r.output.strip() == "1,0,0,0"

    def test_example(self, run):
        r = run("boost", "--vector", "1,0,0,0", "--beta", "0.6")
        assert r.output.strip() == "1.25,-0.75,0,0"

    def test_axis_and_json(self, run):
        r = run("boost", "--vector", "1,0,0,0", "--beta", "0.6", "--axis", "y", "--format", "json")
        (rec,) = json.loads(r.output)
        assert rec == pytest.approx({"t": 1.25, "x": 0.0, "y": -0.75, "z": 0.0}, rel=1e-15)

    def test_precision(self, run):
        r = run("boost", "--vector", "1,0,0,0", "--beta", "0.5", "--precision", "3")
        assert r.output.strip() == "1.15,-0.577,0,0"

    def test_si_rescaling(self, run):
        # t in seconds and x in metres with c = 3
        r = run("boost", "--vector", "3,0,0,0", "--beta", "0.6", "--c", "3")
        assert r.output.strip() == "3.75,-6.75,0,0"

    @pytest.mark.parametrize("beta", ["1.0", "-1", "2"])
    def test_domain_error(self, run, beta):
        r = run("boost", "--vector", "1,0,0,0", "--beta", beta)
        assert r.exit_code == 3
        assert "--beta" in r.output

    @pytest.mark.parametrize("vec", ["1,0,0", "1,a,0,0", "1,nan,0,0"])
    def test_parse_error(self, run, vec):
        r = run("boost", "--vector", vec, "--beta", "0.1")
        assert r.exit_code == 2
        assert "--vector" in r.output

    def test_missing_flag(self, run):
        assert run("boost", "--beta", "0.1").exit_code == 2


class TestWave:
    def test_massive_wave(self, run):
        r = run("wave", "--omega", "2.5", "--k", "1.5,0,0")
        table = dict(rows(r.output))
        assert r.exit_code == 0
        assert table["omega0"] == "2"
        assert table["v_p"] == "1.66667"
        assert table["v_g"] == "0.6"
        assert table["v_rest_x"] == "0.6"

    def test_light(self, run):
        table = dict(rows(run("wave", "--omega", "1", "--k", "1,0,0").output))
        assert (table["omega0"], table["v_p"], table["v_g"]) == ("0", "1", "1")
        assert table["v_rest_x"] == "undefined"

    def test_superluminal_group_rejected(self, run):
        r = run("wave", "--omega", "1", "--k", "2,0,0")
        assert r.exit_code == 3
        assert "--k" in r.output and "v_p" in r.output


class TestDoppler:
    def test_single(self, run):
        r = run("doppler", "--beta-range", "0.6")
        assert rows(r.output) == [["beta", "factor"], ["0.6", "0.5"]]

    def test_rest(self, run):
        assert rows(run("doppler", "--beta-range", "0").output)[1] == ["0", "1"]

    def test_range_shape(self, run):
        out = rows(run("doppler", "--beta-range", "-0.9:0.9:0.3").output)
        assert len(out) == 1 + 7
        assert all(len(r) == 2 for r in out)

    @pytest.mark.parametrize("spec", ["-1.2:0.5:0.1", "0:1:0.25", "1"])
    def test_crossing_light_speed(self, run, spec):
        assert run("doppler", "--beta-range", spec).exit_code == 3

    def test_bad_range(self, run):
        assert run("doppler", "--beta-range", "0:x:1").exit_code == 2


class TestDispersion:
    def test_light_cone(self, run):
        out = rows(run("dispersion", "--omega0", "0", "--k-max", "2", "--points", "5").output)
        for k, omega, vp, vg in out[1:]:
            assert k == omega and vp == "1" and vg == "1"

    def test_massive_row(self, run):
        out = rows(run("dispersion", "--omega0", "2", "--k-max", "3", "--points", "2").output)
        assert out[0] == ["k", "omega", "v_p", "v_g"]
        assert out[1][:2] == ["1.5", "2.5"]

    def test_domain_errors(self, run):
        assert run("dispersion", "--omega0", "-1", "--k-max", "3", "--points", "3").exit_code == 3
        assert run("dispersion", "--omega0", "1", "--k-max", "0", "--points", "3").exit_code == 3
        assert run("dispersion", "--omega0", "1", "--k-max", "3", "--points", "1").exit_code == 2


class TestVerify:
    def test_theorem_a_passes(self, run):
        r = run("verify", "--suite", "theorem-a", "--samples", "1000", "--seed", "7")
        assert r.exit_code == 0
        report = json.loads(r.stdout)
        assert report["overall_pass"] is True
        assert report["config"]["sampling"]["seed"] == 7

    def test_exponent_control_fails(self):
        r = CliRunner().invoke(cli, ["verify", "--suite", "ashby-miller", "--exponent", "2"])
        assert r.exit_code == 1
        report = json.loads(r.stdout)
        assert report["overall_pass"] is False
        assert report["verdicts"][0]["witness"] is not None
        assert "ashby-miller" in r.stderr

    def test_same_seed_identical(self, run):
        args = ("verify", "--suite", "all", "--samples", "200", "--seed", "7")
        a = json.loads(run(*args).stdout)
        b = json.loads(run(*args).stdout)
        a.pop("wall_time"), b.pop("wall_time")
        assert a == b

    def test_seed_from_environment(self, run):
        r = run("verify", "--suite", "einstein", "--samples", "5", env={"LORENTZ_BRIDGE_SEED": "11"})
        assert json.loads(r.stdout)["config"]["sampling"]["seed"] == 11
        r = run("verify", "--suite", "einstein", "--samples", "5", env={"LORENTZ_BRIDGE_SEED": "x"})
        assert r.exit_code == 2

    def test_bad_flags(self, run):
        assert run("verify", "--suite", "nope").exit_code == 2
        assert run("verify", "--samples", "0").exit_code == 2
        assert run("verify", "--beta-max", "1").exit_code in (2, 3)

    def test_output_file(self, run, tmp_path):
        out = tmp_path / "report.json"
        r = run("verify", "--suite", "einstein", "--samples", "10", "--output", str(out))
        assert r.exit_code == 0
        assert json.loads(out.read_text())["overall_pass"] is True

    def test_plain_format(self, run):
        r = run("verify", "--suite", "lemma", "--samples", "10", "--format", "plain")
        assert r.exit_code == 0
        assert "lemma" in r.stdout and "PASS" in r.stdout


class TestConfig:
    def test_config_supplies_defaults(self, run, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# frame\nbeta = 0.6\nvector = 1,0,0,0\n")
        r = run("--config", str(cfg), "boost")
        assert r.output.strip() == "1.25,-0.75,0,0"

    def test_flags_win(self, run, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("beta = 0.6\nvector = 1,0,0,0\n")
        r = run("--config", str(cfg), "boost", "--beta", "0")
        assert r.output.strip() == "1,0,0,0"

    def test_unknown_key(self, run, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("warp = 9\n")
        assert run("--config", str(cfg), "boost").exit_code == 2


def test_main_returns_exit_codes(capsys):
    assert main(["boost", "--vector", "1,0,0,0", "--beta", "0.6"]) == 0
    assert main(["boost", "--vector", "1,0,0,0", "--beta", "1"]) == 3
    assert main(["boost", "--vector", "1,0", "--beta", "0.1"]) == 2
    assert main(["verify", "--suite", "ashby-miller", "--exponent", "2", "--samples", "5"]) == 1
    capsys.readouterr()
