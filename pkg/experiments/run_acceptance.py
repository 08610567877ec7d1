"""Run the desk-scale training experiments behind the slow acceptance checks.

Every stage shells out to the ``gmflow-pose`` CLI and skips work whose outputs
already exist, so the script can be interrupted and resumed. Results land in
``runs/acceptance`` (override with ``--root``).

    python3 experiments/run_acceptance.py            # everything, several CPU hours
    python3 experiments/run_acceptance.py --steps 50 --root runs/quick   # plumbing check
"""

from __future__ import annotations

import argparse
import subprocess
import sys
from pathlib import Path

SEEDS = (0, 1, 2)
VARIANTS = ("full", "no-gmc", "no-shape-constraint")


def cli(*args: str) -> None:
    cmd = [sys.executable, "-m", "gmflow_pose.cli", *args]
    print("+", " ".join(cmd), flush=True)
    subprocess.run(cmd, check=True)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--root", default="runs/acceptance")
    p.add_argument("--count", type=int, default=2000)
    p.add_argument("--resolution", type=int, default=128)
    p.add_argument("--steps", type=int, default=5000)
    p.add_argument("--seeds", type=int, nargs="+", default=list(SEEDS))
    p.add_argument("--variants", nargs="+", default=list(VARIANTS))
    args = p.parse_args(argv)
    root = Path(args.root)
    data = root / "data"
    if not (data / "manifest.json").is_file():
        cli("gen", "--count", str(args.count), "--resolution", str(args.resolution), "--occlusion-min", "0.0",
            "--occlusion-max", "0.6", "--rot-noise-deg", "15", "--trans-noise-frac", "0.05", "--seed", "0",
            "--out", str(data))

    # full model first so the headline run finishes early
    cli("ablate", "--data", str(data), "--steps", str(args.steps), "--seeds", *map(str, args.seeds),
        "--variants", *args.variants, "--out", str(root / "ablation"))

    for seed in args.seeds:
        run = root / "ablation" / f"full_seed{seed}"
        for n in (1, 2, 3, 4):
            report = run / f"report_test_iters{n}.json"
            if not report.is_file():
                cli("eval", "--data", str(data), "--weights", str(run / "weights.bin"), "--iters", str(n),
                    "--report", str(report))

    rerun = root / "rerun"
    if not (rerun / "weights.bin").is_file():
        cli("rerun", "--manifest", str(root / "ablation" / f"full_seed{args.seeds[0]}" / "run_manifest.json"),
            "--out", str(rerun))
    if not (rerun / "report_test_iters4.json").is_file():
        cli("eval", "--data", str(data), "--weights", str(rerun / "weights.bin"), "--iters", "4",
            "--report", str(rerun / "report_test_iters4.json"))
    print("done", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
