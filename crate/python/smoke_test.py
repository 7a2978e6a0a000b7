#!/usr/bin/env python3
"""Smoke test for the Python bindings.

Builds nothing itself: run `cargo build -p lassocause-py` first, then
`python3 python/smoke_test.py`. The script copies the built cdylib next to
itself under the importable module name.
"""

import json
import pathlib
import shutil
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / profile / f"liblassocause_py{ext}"
        for profile in ("release", "debug")
        for ext in (".so", ".dylib")
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("build the extension first: cargo build -p lassocause-py")
    staging = ROOT / "python" / "_build"
    staging.mkdir(exist_ok=True)
    target = staging / ("lassocause_py" + (".so" if built.suffix == ".so" else ".so"))
    if not target.exists() or built.stat().st_mtime > target.stat().st_mtime:
        shutil.copy2(built, target)
    sys.path.insert(0, str(staging))
    import lassocause_py

    return lassocause_py


def main():
    lc = load_module()

    # Formula front ends.
    assert lc.normalize_ltl("G (B2 -> F E2)") == "G (!B2 | F E2)"
    assert lc.normalize_eol("(B2 .[ !E2) .^w (!E2)") == "(B2 .[ !E2) .^w (!E2)"

    # Word-level evaluation mirrors the worked loop-unfolding examples.
    assert lc.eval_eol_on_word("a1 .^w (a2 . a3)", ["a1"], ["a2", "a3"])
    assert lc.eval_eol_on_word("a1 . a3 .^w (a3 . a2)", ["a1"], ["a2", "a3"])
    assert not lc.eval_eol_on_word("a1 .^w (a1)", ["a1"], ["a2", "a3"])
    assert not lc.eval_ltl_on_word(
        "G (B2 -> F E2)", ["E0", "B2"], ["B1", "E1", "B0", "E0"], ["E2"]
    )

    # End-to-end on the elevator model.
    model = lc.Model.from_file(str(ROOT / "models" / "elevator.model"))
    assert model.state_count() >= 9
    witness = model.check("G (B2 -> F E2)")
    assert witness is not None, "the response property must be violated"
    stem, loop = witness
    assert "B2" in stem + loop and "E2" not in loop

    report = json.loads(model.explain_json("G (B2 -> F E2)"))
    assert report["verdict"] == "violated"
    causes = [c["cause"] for c in report["classes"]]
    assert any("B2" in c and "!E2" in c for c in causes), causes
    covered = sum(len(c["members"]) for c in report["classes"])
    assert covered >= report["stats"]["bad"]

    # A tiny model the oracle suite can cross-check exhaustively.
    toy = lc.Model.from_text("init s0; s0 -a-> s1; s1 -b-> s0; s1 -c-> s1;")
    passed, details = toy.verify("F b")
    assert passed, details

    print("smoke test passed")


if __name__ == "__main__":
    main()
