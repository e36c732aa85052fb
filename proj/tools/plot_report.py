#!/usr/bin/env python3
"""Render figures from cdasim CSV outputs.

Reads the aggregate report CSV (--report) and the pooled histogram CSV
(--hist) written by `cdasim simulate --format csv --out ... --hist-out ...`
and produces two PNGs: per-scenario price histograms and metric bar charts
with 95% confidence intervals.
"""

import argparse
import csv
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

METRICS = ["mean_price", "volatility", "volume", "txn_probability"]


def read_report(path):
    rows = defaultdict(dict)
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            rows[row["scenario"]][row["metric"]] = row
    return rows


def read_hist(path):
    bins = defaultdict(list)
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            bins[row["scenario"]].append(
                (float(row["bin_lo"]), float(row["bin_hi"]), int(row["count"]))
            )
    return bins


def plot_histograms(bins, out_path):
    fig, axes = plt.subplots(1, len(bins), figsize=(6 * len(bins), 4), squeeze=False)
    for ax, (scenario, rows) in zip(axes[0], sorted(bins.items())):
        lows = [lo for lo, _, _ in rows]
        widths = [hi - lo for lo, hi, _ in rows]
        counts = [c for _, _, c in rows]
        ax.bar(lows, counts, width=widths, align="edge", edgecolor="black", linewidth=0.3)
        ax.set_title(f"transaction prices: {scenario}")
        ax.set_xlabel("price")
        ax.set_ylabel("count")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    print(f"wrote {out_path}")


def plot_metrics(report, out_path):
    scenarios = sorted(report)
    fig, axes = plt.subplots(1, len(METRICS), figsize=(4 * len(METRICS), 4))
    for ax, metric in zip(axes, METRICS):
        means, errs = [], []
        for scenario in scenarios:
            row = report[scenario][metric]
            mean = float(row["mean"])
            hi = float(row["ci95_hi"]) if row["ci95_hi"] else mean
            means.append(mean)
            errs.append(hi - mean)
        ax.bar(scenarios, means, yerr=errs, capsize=6)
        ax.set_title(metric)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    print(f"wrote {out_path}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--report", required=True, help="aggregate CSV from --format csv")
    parser.add_argument("--hist", help="histogram CSV from --hist-out")
    parser.add_argument("--prefix", default="figures", help="output file prefix")
    args = parser.parse_args()

    report = read_report(args.report)
    plot_metrics(report, f"{args.prefix}_metrics.png")
    if args.hist:
        plot_histograms(read_hist(args.hist), f"{args.prefix}_histogram.png")


if __name__ == "__main__":
    main()
