import queue
import threading

import numpy as np
import pytest

from ion_jcm.workers.grid import GridWorker, grid_chunks, run_on_grid


def test_grid_chunks_cover_range():
    chunks = grid_chunks(1000, 256)
    assert [(c.start, c.stop) for c in chunks] == [(0, 256), (256, 512), (512, 768), (768, 1000)]
    assert grid_chunks(0, 256) == []
    with pytest.raises(ValueError):
        grid_chunks(10, 0)


@pytest.mark.parametrize("threads", [1, 2, 8])
def test_every_point_evaluated_once(threads):
    hits = np.zeros(1000, dtype=int)
    lock = threading.Lock()

    def evaluate(chunk):
        with lock:
            hits[chunk] += 1

    run_on_grid(evaluate, 1000, threads=threads, chunk_size=64)
    assert np.all(hits == 1)


def test_worker_error_is_reraised():
    def evaluate(chunk):
        if chunk.start >= 128:
            raise RuntimeError("bad chunk")

    with pytest.raises(RuntimeError, match="bad chunk"):
        run_on_grid(evaluate, 512, threads=3, chunk_size=64)


def test_worker_keeps_first_failure():
    jobs = queue.Queue()
    jobs.put(slice(0, 4))
    jobs.put(slice(4, 8))

    def evaluate(chunk):
        raise ValueError(f"chunk {chunk.start}")

    worker = GridWorker(jobs, evaluate)
    worker.run()
    assert isinstance(worker.error, ValueError)
    assert str(worker.error) == "chunk 0"
    # Nothing is taken from the queue after a failure.
    assert jobs.qsize() == 1


def test_stopped_worker_takes_no_jobs():
    jobs = queue.Queue()
    jobs.put(slice(0, 4))
    seen = []
    worker = GridWorker(jobs, seen.append)
    worker.stop()
    worker.run()
    assert seen == []
    assert worker.running is False


def test_failure_stops_peer_workers():
    jobs = queue.Queue()
    for start in (0, 4, 8):
        jobs.put(slice(start, start + 4))
    seen = []

    def fail(chunk):
        raise RuntimeError("bad chunk")

    peer = GridWorker(jobs, seen.append)
    failing = GridWorker(jobs, fail, on_error=lambda error: peer.stop())
    failing.run()
    peer.run()
    assert seen == []
    assert jobs.qsize() == 2
    assert peer.running is False


def test_run_on_grid_stops_every_worker_after_failure(monkeypatch):
    stopped = set()
    original = GridWorker.stop

    def recording_stop(self):
        stopped.add(id(self))
        original(self)

    monkeypatch.setattr(GridWorker, "stop", recording_stop)

    def evaluate(chunk):
        raise RuntimeError("bad chunk")

    with pytest.raises(RuntimeError, match="bad chunk"):
        run_on_grid(evaluate, 512, threads=3, chunk_size=64)
    assert len(stopped) == 3
