"""Regenerate the stored reports under tests/golden.

Run from the repository root: python3 tests/make_golden.py
Only rerun after a deliberate change; the tests compare byte for byte.
"""

from pathlib import Path

from cocharlab.report import (compare_gradings, dumps_json, emit_comparison, emit_report,
                              engine_vs_oracle_report, generator_list_diff, published_audit)

GOLDEN = Path(__file__).parent / "golden"


def golden_files() -> dict[str, str]:
    return {
        "ut3_engine_vs_oracle.json": emit_report(engine_vs_oracle_report(3, 5), "json"),
        "generator_lists.json": dumps_json([generator_list_diff(m) for m in (3, 4, 5)]),
        "published_audit.json": dumps_json(published_audit()),
        "compare_phi_psi_m3_n4.json": emit_comparison(compare_gradings(3, 4), "json"),
    }


def main() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for name, text in golden_files().items():
        (GOLDEN / name).write_text(text)
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
