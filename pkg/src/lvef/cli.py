"""Command-line interface: estimate, evaluate, classify, augment, synth.

Exit codes: 0 success, 1 input/usage error, 2 processing failure.
Set ``LVEF_LOG`` (DEBUG/INFO/WARNING/ERROR) for log verbosity.
"""

import argparse
import csv
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

import numpy as np

from . import __version__
from .errors import LvefError, OutOfRange
from .metrics import classify_ef, confusion_and_scores, mae, rmse
from .pipeline import EstimateParams, run_estimate
from .stackio import read_mask_stack, write_mask_stack
from .synth import SynthConfig, beat_boundaries, generate_video

log = logging.getLogger("lvef")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="lvef",
        description="Geometric LV ejection-fraction estimation from "
                    "segmentation-mask videos")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    est = sub.add_parser("estimate", help="estimate EF from mask stack(s)")
    est.add_argument("stacks", nargs="+", metavar="STACK")
    est.add_argument("--median-window", type=int, default=5)
    est.add_argument("--min-prominence-frac", type=float, default=0.05)
    est.add_argument("--min-separation", type=int, default=None)
    est.add_argument("--out", help="report JSON path (single stack only)")
    est.add_argument("--out-dir", help="directory for per-stack reports")
    est.add_argument("--volumes-csv", help="per-frame volume CSV path")
    est.add_argument("--workers", type=int, default=1)
    est.add_argument("--json", action="store_true",
                     help="print report JSON on stdout")

    ev = sub.add_parser("evaluate", help="score predicted EF against truth")
    ev.add_argument("--pred", required=True)
    ev.add_argument("--truth", required=True)
    ev.add_argument("--json", action="store_true")

    cl = sub.add_parser("classify", help="classify a single EF value")
    cl.add_argument("--ef", type=float, required=True)
    cl.add_argument("--json", action="store_true")

    aug = sub.add_parser("augment", help="generate augmented mask stacks")
    aug.add_argument("stack", metavar="STACK")
    aug.add_argument("--seed", type=int, required=True)
    aug.add_argument("--count", type=int, default=1)
    aug.add_argument("--out-dir", required=True)

    sy = sub.add_parser("synth", help="generate a synthetic beating-LV video")
    sy.add_argument("--config", required=True, help="SynthConfig JSON path")
    sy.add_argument("--out", required=True, help="output LVM1 stack path")
    sy.add_argument("--truth", required=True, help="ground-truth JSON path")
    return parser


def _estimate_one(args_tuple):
    path, params = args_tuple
    masks, fps = read_mask_stack(path)
    report = run_estimate(masks, fps=fps, params=params,
                          video_id=os.path.splitext(os.path.basename(path))[0])
    return path, report


def _cmd_estimate(args):
    params = EstimateParams(median_window=args.median_window,
                            min_separation=args.min_separation,
                            min_prominence_frac=args.min_prominence_frac)
    if len(args.stacks) > 1 and args.out:
        print("--out needs a single stack; use --out-dir", file=sys.stderr)
        return 1
    jobs = [(p, params) for p in args.stacks]
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_estimate_one, jobs))
    else:
        results = [_estimate_one(j) for j in jobs]

    for path, report in results:  # input order, independent of workers
        if args.out_dir:
            os.makedirs(args.out_dir, exist_ok=True)
            out = os.path.join(args.out_dir, report.video_id + ".json")
            with open(out, "w") as fh:
                fh.write(report.to_json())
        elif args.out:
            with open(args.out, "w") as fh:
                fh.write(report.to_json())
        if args.volumes_csv and len(results) == 1:
            with open(args.volumes_csv, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["video_id", "frame", "volume_raw",
                                 "volume_filtered"])
                filt = report.volumes_filtered or [None] * len(report.volumes_raw)
                for i, (r, f) in enumerate(zip(report.volumes_raw, filt)):
                    writer.writerow([report.video_id, i, r, f])
        if args.json:
            print(report.to_json())
        else:
            ef = "n/a" if report.ef_mean is None else f"{report.ef_mean:.4f}"
            cls = report.ef_class or "n/a"
            print(f"{report.video_id}: ef_mean={ef} class={cls} "
                  f"cycles={len(report.cycles)} warnings={len(report.warnings)}")
    return 0


def _read_ef_map(path):
    table = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        value_col = next(c for c in ("ef_pred", "ef_true", "ef")
                         if c in reader.fieldnames)
        for row in reader:
            table[row["video_id"]] = float(row[value_col])
    return table


def _cmd_evaluate(args):
    pred = _read_ef_map(args.pred)
    truth = _read_ef_map(args.truth)
    common = sorted(set(pred) & set(truth))
    if not common:
        print("no overlapping video ids between files", file=sys.stderr)
        return 1
    p = [pred[k] for k in common]
    t = [truth[k] for k in common]
    matrix, scores = confusion_and_scores(
        [classify_ef(v) for v in t], [classify_ef(v) for v in p])
    result = {
        "n_videos": len(common),
        # EF is a fraction internally; MAE/RMSE are reported in
        # percentage points
        "mae_percent": 100.0 * mae(p, t),
        "rmse_percent": 100.0 * rmse(p, t),
        "confusion_matrix": matrix.counts.tolist(),
        "scores": asdict(scores),
    }
    if args.json:
        print(json.dumps(result, indent=2))
    else:
        print(f"videos: {result['n_videos']}")
        print(f"MAE:  {result['mae_percent']:.2f} percentage points")
        print(f"RMSE: {result['rmse_percent']:.2f} percentage points")
        print(f"micro-F1: {scores.micro_f1:.3f}  macro-F1: {scores.macro_f1:.3f}  "
              f"recall: {scores.macro_recall:.3f}  "
              f"precision: {scores.macro_precision:.3f}")
    return 0


def _cmd_classify(args):
    label = classify_ef(args.ef)
    if args.json:
        print(json.dumps({"ef": args.ef, "ef_class": label}))
    else:
        print(label)
    return 0


def _cmd_augment(args):
    from .augment import simulate_previous_mask
    masks, fps = read_mask_stack(args.stack)
    os.makedirs(args.out_dir, exist_ok=True)
    for rep in range(args.count):
        out_masks = []
        for i, mask in enumerate(masks):
            sub_seed = int(np.random.SeedSequence(
                [args.seed, rep, i]).generate_state(1)[0])
            out_masks.append(simulate_previous_mask(mask, sub_seed))
        out_path = os.path.join(args.out_dir, f"aug_{rep:03d}.lvm")
        write_mask_stack(out_path, out_masks, fps)
        print(out_path)
    return 0


def _cmd_synth(args):
    with open(args.config) as fh:
        config = SynthConfig(**json.load(fh))
    masks, volumes, truth_ef = generate_video(config)
    write_mask_stack(args.out, masks, config.fps)
    with open(args.truth, "w") as fh:
        json.dump({
            "truth_ef": truth_ef,
            "fps": config.fps,
            "volumes": volumes,
            "beat_boundaries": beat_boundaries(config),
        }, fh, indent=2)
    print(f"{args.out}: {len(masks)} frames, truth EF {truth_ef}")
    return 0


_COMMANDS = {
    "estimate": _cmd_estimate,
    "evaluate": _cmd_evaluate,
    "classify": _cmd_classify,
    "augment": _cmd_augment,
    "synth": _cmd_synth,
}


def main(argv=None):
    logging.basicConfig(level=os.environ.get("LVEF_LOG", "WARNING").upper())
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; the contract here is 1
        return 0 if exc.code == 0 else 1
    try:
        return _COMMANDS[args.command](args)
    except (OSError, ValueError, OutOfRange, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except LvefError as exc:
        kind = type(exc).__name__
        # file-format and argument problems are input errors
        from .errors import StackFormatError
        if isinstance(exc, StackFormatError):
            print(f"input error: {kind}: {exc}", file=sys.stderr)
            return 1
        print(f"processing error: {kind}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
