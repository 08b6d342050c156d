import importlib.util
from pathlib import Path


def test_benchmark_quick_runs(tmp_path, capsys):
    path = Path(__file__).parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    bench = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(bench)
    out = tmp_path / "bench.json"
    assert bench.main(["--quick", "--repeat", "1", "--json", str(out)]) == 0
    assert "F3 n=5 I poly" in capsys.readouterr().out
    assert out.exists()
