"""Figure rendering for scan and witness reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_scan_plot(rows, path, title=""):
    """Two panels: log10|H_n| against n, and the normalized slope against n."""
    ns = [r["n"] for r in rows]
    logs = [float(r["log10_abs"]) for r in rows]
    slope_pts = [(r["n"], float(r["slope"])) for r in rows if r["slope"] is not None]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6.4, 6.4), sharex=True)
    ax1.plot(ns, logs, "o-", ms=3.5, lw=1.0, color="#1f77b4")
    ax1.set_ylabel(r"$\log_{10}|H_n|$")
    ax1.grid(alpha=0.3)
    if slope_pts:
        ax2.plot([p[0] for p in slope_pts], [p[1] for p in slope_pts],
                 "s-", ms=3.5, lw=1.0, color="#d62728")
    ax2.axhline(-0.5, color="gray", lw=0.8, ls="--", label="proved bound slope")
    ax2.set_xlabel("n")
    ax2.set_ylabel(r"$\log|H_n| \,/\, (n^2 \log n)$")
    ax2.grid(alpha=0.3)
    ax2.legend(loc="best", fontsize=8)
    if title:
        ax1.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_witness_plot(rows, path, title=""):
    """Witness base C_n against n; growth mirrors super-exponential denominators."""
    ns = [r["n"] for r in rows]
    cs = [float(r["C_n"]) for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(ns, cs, "o-", ms=4, lw=1.0, color="#2ca02c")
    ax.axhline(1.0, color="gray", lw=0.8, ls="--", label="trivial witness level")
    ax.set_xlabel("n")
    ax.set_ylabel(r"$C_n$")
    ax.grid(alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
