from pathlib import Path
from typing import Iterable, Union


def write_text(path: Union[str, Path], content: str) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(content)


def print_written(paths: Iterable[Union[str, Path]]) -> None:
    print("✅ Wrote:")
    for p in paths:
        print(f"- {p}")
