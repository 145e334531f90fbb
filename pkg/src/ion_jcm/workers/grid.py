import queue
import sys
import threading
from typing import Callable, List, Optional

from ion_jcm.config import CHUNK_SIZE, THREADS


class GridWorker(threading.Thread):
    """Worker thread that evaluates chunks of a time grid.

    Pulls slices from a shared queue and hands each one to `evaluate`, which writes
    its results into preallocated arrays. Stops when the queue is drained, when
    `stop` is called, or on the first failure, which is kept on `error` for the
    coordinator to re-raise and reported through `on_error`.
    """

    def __init__(
        self,
        jobs: "queue.Queue[slice]",
        evaluate: Callable[[slice], None],
        on_error: Optional[Callable[[BaseException], None]] = None,
    ):
        super().__init__(daemon=True)
        self.jobs = jobs
        self.evaluate = evaluate
        self.on_error = on_error
        self.error: Optional[BaseException] = None
        self.running = True

    def run(self):
        while self.running:
            try:
                chunk = self.jobs.get_nowait()
            except queue.Empty:
                return
            try:
                self.evaluate(chunk)
            except Exception as e:
                print(f"[GridWorker] Chunk {chunk.start}:{chunk.stop} failed: {e}", file=sys.stderr, flush=True)
                self.error = e
                if self.on_error is not None:
                    self.on_error(e)
                return

    def stop(self):
        self.running = False


def grid_chunks(n_points: int, chunk_size: int = CHUNK_SIZE) -> List[slice]:
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be >= 1, got {chunk_size}")
    return [slice(start, min(start + chunk_size, n_points)) for start in range(0, n_points, chunk_size)]


def run_on_grid(
    evaluate: Callable[[slice], None],
    n_points: int,
    threads: Optional[int] = None,
    chunk_size: int = CHUNK_SIZE,
) -> None:
    """Runs `evaluate` over [0, n_points) in fixed chunks.

    Chunk boundaries do not depend on the thread count, so per-point results are
    identical for any number of workers.
    """
    threads = THREADS if threads is None else threads
    chunks = grid_chunks(n_points, chunk_size)

    if threads <= 1 or len(chunks) <= 1:
        for chunk in chunks:
            evaluate(chunk)
        return

    jobs: "queue.Queue[slice]" = queue.Queue()
    for chunk in chunks:
        jobs.put(chunk)

    def stop_all(_error: BaseException):
        # A failed grid is discarded; peers take no further chunks.
        for worker in workers:
            worker.stop()

    workers = [GridWorker(jobs, evaluate, on_error=stop_all) for _ in range(min(threads, len(chunks)))]
    for worker in workers:
        worker.start()
    for worker in workers:
        worker.join()

    for worker in workers:
        if worker.error is not None:
            raise worker.error
