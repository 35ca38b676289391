"""Agreement sweep harness: counting, determinism, and worker fan-out."""

import pytest

from gensplit import CLUSTER, COMPLETE, EDGELESS, co, sweep_pair
from gensplit.sweep import report_dict, report_lines, resolve_workers


class TestSweepPair:
    def test_exhaustive_counts(self):
        r = sweep_pair(EDGELESS, COMPLETE, max_order=4)
        # 1 + 1 + 2 + 8 + 64 labeled graphs
        assert r.exhaustive_graphs == 76
        assert r.random_graphs == 0
        assert r.agreements == 76
        assert r.clean
        assert r.members > 0
        assert r.tau == 1 and r.n == 2 and r.m == 2

    def test_random_battery_is_seeded(self):
        a = sweep_pair(EDGELESS, COMPLETE, 2, random_count=30, seed=5)
        b = sweep_pair(EDGELESS, COMPLETE, 2, random_count=30, seed=5)
        assert a.members == b.members
        assert a.agreements == b.agreements == a.total_graphs() == 34
        assert a.random_order_range == (10, 14)

    def test_workers_split_matches_serial(self):
        serial = sweep_pair(EDGELESS, COMPLETE, 4, workers=1)
        forked = sweep_pair(EDGELESS, COMPLETE, 4, workers=2)
        assert report_dict(serial)["agreements"] == report_dict(forked)["agreements"]
        assert serial.members == forked.members
        assert forked.clean

    def test_unbounded_pair_rejected(self):
        with pytest.raises(ValueError, match="unbounded"):
            sweep_pair(EDGELESS, co(CLUSTER), 3)
        with pytest.raises(ValueError, match="unbounded"):
            sweep_pair(CLUSTER, COMPLETE, 3)


class TestReporting:
    def test_lines_and_dict(self):
        r = sweep_pair(EDGELESS, COMPLETE, 3, random_count=4, seed=1)
        lines = report_lines(r)
        assert lines[0] == "pair: edgeless | complete"
        assert any("agreement: 16/16" in ln for ln in lines)
        assert any(ln.startswith("clean in") for ln in lines)

        d = report_dict(r)
        assert d["clean"] is True
        assert d["total_graphs"] == 16
        assert d["p_spec"] == "edgeless"
        assert d["disagreements"] == []


class TestResolveWorkers:
    def test_explicit_wins(self):
        assert resolve_workers(3) == 3

    def test_env_fallback(self, monkeypatch):
        monkeypatch.setenv("GENSPLIT_WORKERS", "4")
        assert resolve_workers(None) == 4
        monkeypatch.delenv("GENSPLIT_WORKERS")
        assert resolve_workers(None) == 1

    def test_rejects_nonpositive(self, monkeypatch):
        with pytest.raises(ValueError):
            resolve_workers(0)
        monkeypatch.setenv("GENSPLIT_WORKERS", "bogus")
        with pytest.raises(ValueError):
            resolve_workers(None)
