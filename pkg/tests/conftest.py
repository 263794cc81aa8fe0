import pytest

RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)


@pytest.fixture
def criterion(request):
    """Time a criterion body, record one PASS/FAIL line and enforce its limit."""
    import time

    class _Run:
        def __init__(self):
            self.number = self.title = None
            self.limit = None

        def __call__(self, number, title, limit):
            self.number, self.title, self.limit = number, title, limit
            self.start = time.perf_counter()
            return self

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            spent = time.perf_counter() - self.start
            ok = exc_type is None and spent < self.limit
            line = f"criterion {self.number} {'PASS' if ok else 'FAIL'}  {self.title}  ({spent:.1f}s, limit {self.limit}s)"
            if exc_type is not None:
                line += f"  [{exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}]"
            RESULTS.append(line)
            print(line)
            if exc_type is None and spent >= self.limit:
                raise AssertionError(f"criterion {self.number} took {spent:.1f}s, over {self.limit}s")
            return False

    return _Run()
