import logging

import pytest

from draftvalue.cli import main
from draftvalue.config import parse_config_text
from draftvalue.core_model import Metric
from draftvalue.io import CSV_COLUMNS, DataError, load_draft_csv, write_draft_csv
from draftvalue.synth import SynthConfig, generate_synthetic_draft

from conftest import make_record

HEADER = ",".join(CSV_COLUMNS)


def write_csv(tmp_path, rows, name="draft.csv"):
    path = tmp_path / name
    path.write_text("\n".join([HEADER] + rows) + "\n", encoding="utf-8")
    return path


class TestIngest:
    def test_valid_file(self, tmp_path):
        path = write_csv(
            tmp_path,
            [
                "1998,1,T01,Alpha,C,NA_SKATER,1,100,1500.0,5.0",
                "1998,2,T02,Bravo,D,NA_SKATER,2,0,,",
                "1998,3,T03,Charlie,G,NA_GOALIE,1,50,,2.0",
            ],
        )
        classes = load_draft_csv(path)
        assert len(classes) == 1 and len(classes[0]) == 3
        by_sel = {r.selection: r for r in classes[0].records}
        assert by_sel[2].gvt7 == -30.0
        assert by_sel[3].toi7 == 1000.0

    def test_missing_header(self, tmp_path):
        path = tmp_path / "draft.csv"
        path.write_text("1998,1,T01,Alpha,C,NA_SKATER,1,100,1500.0,5.0\n")
        with pytest.raises(DataError):
            load_draft_csv(path)

    def test_duplicate_selection_names_line(self, tmp_path):
        path = write_csv(
            tmp_path,
            [
                "1998,1,T01,Alpha,C,NA_SKATER,1,100,1500.0,5.0",
                "1998,1,T02,Bravo,C,NA_SKATER,2,10,150.0,0.5",
            ],
        )
        with pytest.raises(DataError, match="line 3"):
            load_draft_csv(path)

    def test_unparseable_row_names_line(self, tmp_path):
        path = write_csv(tmp_path, ["1998,one,T01,Alpha,C,NA_SKATER,1,100,1500.0,5.0"])
        with pytest.raises(DataError, match="line 2"):
            load_draft_csv(path)

    def test_invalid_position_names_line(self, tmp_path):
        path = write_csv(tmp_path, ["1998,1,T01,Alpha,X,NA_SKATER,1,100,1500.0,5.0"])
        with pytest.raises(DataError, match="position"):
            load_draft_csv(path)

    def test_missing_slot_accepted(self, tmp_path, caplog):
        rows = [
            f"2002,{s},T01,P{s},C,NA_SKATER,{s},10,150.0,0.5"
            for s in range(121, 126)
            if s != 123
        ]
        path = write_csv(tmp_path, rows)
        with caplog.at_level(logging.INFO, logger="draftvalue"):
            classes = load_draft_csv(path)
        assert len(classes[0]) == 4
        assert any("123" in m for m in caplog.messages)

    def test_selection_past_210_dropped_with_warning(self, tmp_path, caplog):
        rows = [
            "1998,1,T01,Alpha,C,NA_SKATER,1,100,1500.0,5.0",
            "1998,211,T02,Omega,C,NA_SKATER,2,10,150.0,0.5",
        ]
        path = write_csv(tmp_path, rows)
        with caplog.at_level(logging.WARNING, logger="draftvalue"):
            classes = load_draft_csv(path)
        assert len(classes[0]) == 1
        assert any("211" in m for m in caplog.messages)

    def test_empty_file_errors(self, tmp_path):
        path = write_csv(tmp_path, [])
        with pytest.raises(DataError, match="no data rows"):
            load_draft_csv(path)

    def test_round_trip(self, tmp_path):
        classes = generate_synthetic_draft(SynthConfig(seed=6, years=2, picks_per_year=50))
        path = tmp_path / "out.csv"
        write_draft_csv(classes, path)
        reread = load_draft_csv(path)
        assert reread == classes


class TestConfigFile:
    def test_defaults(self):
        cfg = parse_config_text("")
        assert cfg.loess.span == 0.5
        assert cfg.band_edge == 90
        assert cfg.dollars.salary_per_game == 29300.0

    def test_overrides(self):
        text = """
        # analysis tweaks
        loess.span = 0.4
        cescin.na_skater = 1.25
        audit.band_edge = 60
        dollars.salary_per_game = 30000
        split.early = 1998-1999
        split.late = 2000,2002
        metrics = toi,gp
        by_position = true
        """
        cfg = parse_config_text(text)
        assert cfg.loess.span == 0.4
        assert cfg.factors == {"na_skater": 1.25}
        assert cfg.band_edge == 60
        assert cfg.dollars.salary_per_game == 30000.0
        assert cfg.split_early == (1998, 1999)
        assert cfg.split_late == (2000, 2002)
        assert cfg.metrics == (Metric.TOI, Metric.GP)
        assert cfg.by_position

    def test_unknown_key_rejected(self):
        with pytest.raises(ValueError, match="unknown key"):
            parse_config_text("loess.spam = 0.4")

    def test_malformed_line_rejected(self):
        with pytest.raises(ValueError, match="line 1"):
            parse_config_text("loess.span 0.4")


class TestCli:
    def test_synth_then_run(self, tmp_path, capsys):
        out = tmp_path / "synth"
        assert main(["synth", "--seed", "3", "--years", "2", "--out", str(out)]) == 0
        csv_path = out / "synthetic.csv"
        assert csv_path.exists()

        run_out = tmp_path / "run"
        assert main(["run", str(csv_path), "--out", str(run_out)]) == 0
        for name in ("audit.json", "gains.json", "chart.csv", "teams.csv", "cescin.json"):
            assert (run_out / name).exists()
        assert list((run_out / "curves").glob("expected_*.csv"))

    def test_ingest_check_reports_years(self, tmp_path, capsys):
        out = tmp_path / "s"
        main(["synth", "--seed", "1", "--years", "1", "--out", str(out)])
        capsys.readouterr()
        assert main(["ingest-check", str(out / "synthetic.csv"), "--out", str(out)]) == 0
        assert "year 1998: 210 records" in capsys.readouterr().out

    def test_chart_subcommand(self, tmp_path):
        out = tmp_path / "s"
        main(["synth", "--seed", "2", "--years", "1", "--out", str(out)])
        assert main(["chart", str(out / "synthetic.csv"), "--out", str(tmp_path / "c")]) == 0
        lines = (tmp_path / "c" / "chart.csv").read_text().strip().splitlines()
        assert lines[0] == "selection,value"
        assert len(lines) == 211
        assert lines[1].split(",") == ["1", "1000"]

    def test_reference_chart_output(self, capsys):
        assert main(["reference-chart"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "1,1000"
        assert lines[-1] == "210,25"

    def test_usage_error_exit_code(self, capsys):
        assert main(["no-such-command"]) == 1

    def test_missing_file_exit_code(self, tmp_path, capsys):
        assert main(["run", str(tmp_path / "nope.csv"), "--out", str(tmp_path)]) == 2

    def test_bad_data_exit_code(self, tmp_path, capsys):
        path = write_csv(
            tmp_path,
            [
                "1998,1,T01,Alpha,C,NA_SKATER,1,100,1500.0,5.0",
                "1998,1,T02,Bravo,C,NA_SKATER,2,10,150.0,0.5",
            ],
        )
        assert main(["run", str(path), "--out", str(tmp_path / "o")]) == 2

    def test_numeric_failure_exit_code(self, tmp_path, capsys):
        # two players cannot support a smoother: numeric stage failure
        path = write_csv(
            tmp_path,
            [
                "1998,1,T01,Alpha,C,NA_SKATER,1,100,1500.0,5.0",
                "1998,2,T02,Bravo,C,NA_SKATER,2,10,150.0,0.5",
            ],
        )
        assert main(["run", str(path), "--out", str(tmp_path / "o")]) == 3

    def test_metric_flag_restricts_outputs(self, tmp_path):
        out = tmp_path / "s"
        main(["synth", "--seed", "4", "--years", "1", "--out", str(out)])
        run_out = tmp_path / "m"
        assert (
            main(["surplus", str(out / "synthetic.csv"), "--metric", "gp", "--out", str(run_out)])
            == 0
        )
        gains = (run_out / "gains.json").read_text()
        assert '"gp"' in gains and '"toi"' not in gains

    def test_env_default_out_dir(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("DRAFTVAL_OUT", str(tmp_path / "envout"))
        monkeypatch.chdir(tmp_path)
        assert main(["synth", "--seed", "5", "--years", "1"]) == 0
        assert (tmp_path / "envout" / "synthetic.csv").exists()
