import re
from pathlib import Path


def test_readme_kernel_snippet_executes():
    text = (Path(__file__).resolve().parents[1] / "README.md").read_text()
    match = re.search(r"## A taste of the kernel\n\n```python\n(.*?)```", text, re.S)
    assert match, "README kernel example is missing"
    exec(compile(match.group(1), "README-snippet", "exec"), {})
