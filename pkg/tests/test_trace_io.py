import numpy as np
import pytest

from errors import TraceFormatError
from sim.trace import Trace
from tools.trace_io import read_trace, trace_columns, write_trace


def _trace(n=2, samples=5, seed=3):
    rng = np.random.default_rng(seed)
    strict = np.zeros((samples, n), dtype=bool)
    strict[2:, 0] = True
    return Trace(t=np.arange(samples) * 1e-5, I=rng.normal(12.0, 1.0, (samples, n)),
                 V=230.0 + rng.normal(0.0, 0.3, (samples, n)), u=rng.uniform(0.5, 0.7, (samples, n)),
                 eps_l=np.zeros((samples, n)), eps_h=rng.uniform(0.0, 1e-3, (samples, n)), strict=strict)


def test_column_order():
    assert trace_columns(2) == ["t", "I_1", "I_2", "V_1", "V_2", "u_1", "u_2", "eps_l_1", "eps_l_2",
                                "eps_h_1", "eps_h_2", "mode_1", "mode_2"]


def test_reread_is_exact(tmp_path):
    trace = _trace()
    back = read_trace(write_trace(trace, tmp_path / "run" / "trace.csv"))
    for name in ("t", "I", "V", "u", "eps_l", "eps_h", "strict"):
        assert np.array_equal(getattr(back, name), getattr(trace, name))
    assert back.B_l is None and back.latch_time is None


def test_mode_text(tmp_path):
    path = write_trace(_trace(), tmp_path / "trace.csv")
    rows = path.read_text().splitlines()
    assert rows[0].endswith("mode_1,mode_2")
    assert rows[1].endswith("relaxed,relaxed")
    assert rows[3].endswith("strict,relaxed")


@pytest.mark.parametrize("mutate, message", [
    (lambda rows: rows[:1], "no samples"),
    (lambda rows: [rows[0].replace("V_1", "volts_1")] + rows[1:], "header"),
    (lambda rows: [",".join(rows[0].split(",")[:-1])] + [",".join(r.split(",")[:-1]) for r in rows[1:]],
     "column count"),
    (lambda rows: rows[:1] + [rows[1].replace("relaxed", "hybrid", 1)] + rows[2:], "mode columns"),
    (lambda rows: rows[:1] + [rows[2], rows[1]] + rows[3:], "strictly increasing"),
    (lambda rows: rows[:1] + [rows[1].replace(rows[1].split(",")[1], "nan", 1)] + rows[2:], "non-finite"),
    (lambda rows: rows[:1] + [rows[1].replace(rows[1].split(",")[1], "abc", 1)] + rows[2:], "non-numeric"),
])
def test_malformed_files_rejected(tmp_path, mutate, message):
    path = write_trace(_trace(), tmp_path / "trace.csv")
    path.write_text("\n".join(mutate(path.read_text().splitlines())) + "\n")
    with pytest.raises(TraceFormatError, match=message):
        read_trace(path)


def test_empty_file(tmp_path):
    path = tmp_path / "trace.csv"
    path.write_text("")
    with pytest.raises(TraceFormatError, match="empty"):
        read_trace(path)
