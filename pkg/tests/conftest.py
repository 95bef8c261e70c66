import pytest

from stronga.harness import CorpusSpec, generate_corpus


@pytest.fixture(scope="session")
def corpus64():
    return generate_corpus(CorpusSpec(max_size=64))


@pytest.fixture(scope="session")
def corpus256():
    return generate_corpus(CorpusSpec(max_size=256))


@pytest.fixture(scope="session")
def small16(corpus64):
    return [R for R in corpus64 if R.size <= 16]


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(capsys):
    """Record one PASS/FAIL line for an acceptance criterion."""
    state = {}

    def start(number: int, title: str):
        state["label"] = f"criterion {number:>2}: {title}"

    def done(detail: str = ""):
        state["detail"] = detail

    yield start, done
    line = f"{'PASS' if 'detail' in state else 'FAIL'} {state.get('label', '?')}"
    if state.get("detail"):
        line += f" ({state['detail']})"
    ACCEPTANCE_LINES.append(line)
    with capsys.disabled():
        print("\n" + line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
