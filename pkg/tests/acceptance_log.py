"""One result line per acceptance criterion, printed in the pytest summary."""
import contextlib
import time

RESULTS: list[str] = []


@contextlib.contextmanager
def criterion(number: int, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        line = f"criterion {number} FAIL ({time.perf_counter() - start:.1f}s) {title}: {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}"
        RESULTS.append(line)
        print(line)
        raise
    line = f"criterion {number} PASS ({time.perf_counter() - start:.1f}s) {title}"
    RESULTS.append(line)
    print(line)
