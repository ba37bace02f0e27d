"""Desk-scale experiment driver behind the stored results in ``results/``.

Stages (each skips cells that already finished):

  corridor      RNN+HN on memory-corridor, 3-LR screen with linear LR decay, then held-out evaluation
  grid_screen   RNN, RNN+HN, TI-Naive on grid over the full LR grid, seed 0, ~1M frames
  grid_show     RNN, RNN+HN on grid-show at each method's screened LR, seeds 0-2, ~1M frames
  grid          RNN, RNN+HN, TI-Naive on grid at the screened LR, seeds 0-2, 4,000,320 frames

Usage: python experiments/run_experiments.py [stage ...]
"""
import argparse
import json
import time
from dataclasses import replace
from pathlib import Path

from metahyper.analysis import cell_dir, corridor_final_room_accuracy, load_sweep, run_sweep, write_sweep
from metahyper.config import load_config
from metahyper.trainer import LR_GRID, load_run_agent

HERE = Path(__file__).resolve().parent
RESULTS = HERE.parent / "results"
GRID_METHODS = ("RNN", "RNN+HN", "TI-Naive")
SCREEN_FRAMES = 960 * 1042
FULL_FRAMES = 4_000_320
CORRIDOR_LRS = (3e-3, 1e-3, 3e-4)


def base(name, **over):
    cfg = load_config(HERE / "configs" / name)
    return replace(cfg, **over).validate()


def sweep(cfg, lrs, seeds, out):
    todo = [(lr, s) for lr in lrs for s in seeds if not (cell_dir(out, lr, s) / "summary.json").exists()]
    for lr, s in todo:
        t = time.time()
        run_sweep(cfg.setup(), [lr], [s], out, resamples=1000)
        print(f"  {cfg.method} {cfg.env} lr={lr:g} seed={s}: {time.time() - t:.0f}s", flush=True)
    res = load_sweep(out, cfg.method)
    write_sweep(res, out)
    return res


def screened_lr(method):
    res = json.loads((RESULTS / "grid_screen" / method / "sweep.json").read_text())
    return res["best_lr"]


def stage_corridor():
    cfg = base("corridor.json", method="RNN+HN")
    out = RESULTS / "corridor" / "RNN+HN"
    res = sweep(cfg, CORRIDOR_LRS, [0], out)
    agent, _ = load_run_agent(cell_dir(out, res.best_lr, 0))
    acc = corridor_final_room_accuracy(agent, 1000)
    (out / "eval.json").write_text(json.dumps({"best_lr": res.best_lr, "episodes": 1000,
                                               "final_room_accuracy": acc}, indent=1))
    print(f"corridor: best lr {res.best_lr:g}, held-out final-room accuracy {acc:.3f}")


def stage_grid_screen():
    for m in GRID_METHODS:
        cfg = base("grid.json", method=m, total_frames=SCREEN_FRAMES)
        res = sweep(cfg, LR_GRID, [0], RESULTS / "grid_screen" / m)
        print(f"grid screen {m}: best lr {res.best_lr:g}")


def stage_grid_show():
    for m in ("RNN", "RNN+HN"):
        cfg = base("grid.json", method=m, env="grid-show", total_frames=SCREEN_FRAMES)
        sweep(cfg, [screened_lr(m)], [0, 1, 2], RESULTS / "grid_show" / m)


def stage_grid():
    for m in GRID_METHODS:
        cfg = base("grid.json", method=m, total_frames=FULL_FRAMES)
        sweep(cfg, [screened_lr(m)], [0, 1, 2], RESULTS / "grid" / m)


STAGES = {"corridor": stage_corridor, "grid_screen": stage_grid_screen, "grid_show": stage_grid_show,
          "grid": stage_grid}

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("stages", nargs="*", default=list(STAGES), choices=list(STAGES))
    for name in ap.parse_args().stages:
        print(f"== {name}", flush=True)
        STAGES[name]()
