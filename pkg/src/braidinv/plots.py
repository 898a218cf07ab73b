"""
Matplotlib renderings of the computed invariants.

These are report figures, not knot diagrams: a membership staircase for one
formal semigroup, a coefficient profile for one Alexander polynomial, and a
family overview raster (semigroup membership by twist parameter, with genus
and braid-index bounds alongside).  All functions write a file and return
its path.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .alexander import FormalSemigroup
from .laurent import LaurentPoly1

__all__ = ["semigroup_figure", "alexander_figure", "family_figure"]


def _members_upto(semigroup: FormalSemigroup, limit: int) -> list[int]:
    return [s for s in range(limit) if s in semigroup]


def semigroup_figure(semigroup: FormalSemigroup, title: str, path: str | Path) -> Path:
    """Membership staircase of a formal semigroup, gaps highlighted."""
    limit = semigroup.threshold + 4
    members = _members_upto(semigroup, limit)
    gaps = [s for s in range(limit) if s not in semigroup]
    counts = []
    running = 0
    for s in range(limit):
        running += s in semigroup
        counts.append(running)

    fig, (top, bottom) = plt.subplots(
        2, 1, figsize=(8, 4), sharex=True, gridspec_kw={"height_ratios": [1, 3]}
    )
    top.scatter(members, [0] * len(members), marker="s", s=36, color="tab:blue", label="member")
    top.scatter(gaps, [0] * len(gaps), marker="x", s=36, color="tab:red", label="gap")
    top.axvline(semigroup.threshold - 0.5, color="gray", linestyle=":")
    top.set_yticks([])
    top.legend(loc="upper left", fontsize=8, ncol=2)

    bottom.step(range(limit), counts, where="post", color="tab:blue")
    bottom.axvline(semigroup.threshold - 0.5, color="gray", linestyle=":", label="threshold 2g")
    bottom.set_xlabel("s")
    bottom.set_ylabel("members <= s")
    bottom.legend(loc="upper left", fontsize=8)
    fig.suptitle(title)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def alexander_figure(delta: LaurentPoly1, title: str, path: str | Path) -> Path:
    """Coefficient profile of an Alexander polynomial."""
    exps = [e for e, _ in delta.items()]
    coeffs = [c for _, c in delta.items()]
    fig, ax = plt.subplots(figsize=(8, 3))
    ax.stem(exps, coeffs, basefmt="gray")
    ax.axhline(0, color="gray", linewidth=0.5)
    ax.set_xlabel("exponent of t")
    ax.set_ylabel("coefficient")
    ax.set_title(title)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def family_figure(
    rows: list[tuple[int, FormalSemigroup, int, int | None]],
    title: str,
    path: str | Path,
) -> Path:
    """Overview of a family sweep.

    ``rows`` holds (n, semigroup, genus, mfw_lower-or-None) per member.  The
    top panel rasters semigroup membership against the twist parameter; the
    bottom tracks genus and, when available, the braid-index lower bound.
    """
    if not rows:
        raise ValueError("no rows to plot")
    limit = max(semigroup.threshold for _, semigroup, _, _ in rows) + 3

    fig, (top, bottom) = plt.subplots(
        2, 1, figsize=(9, 6), gridspec_kw={"height_ratios": [2, 1]}
    )
    for n, semigroup, _, _ in rows:
        members = _members_upto(semigroup, limit)
        top.scatter(members, [n] * len(members), marker="s", s=22, color="tab:blue")
        top.scatter(
            [semigroup.threshold - 0.5], [n], marker="|", s=120, color="gray"
        )
    top.set_xlabel("s")
    top.set_ylabel("member n")
    top.set_yticks([n for n, _, _, _ in rows])
    top.set_title("formal semigroup membership (bar = threshold 2g)")

    ns = [n for n, _, _, _ in rows]
    bottom.plot(ns, [g for _, _, g, _ in rows], "o-", color="tab:blue", label="genus")
    bounds = [(n, m) for n, _, _, m in rows if m is not None]
    if bounds:
        bottom.plot(
            [n for n, _ in bounds],
            [m for _, m in bounds],
            "s--",
            color="tab:red",
            label="braid-index lower bound",
        )
    bottom.set_xlabel("n")
    bottom.legend(fontsize=8)
    fig.suptitle(title)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
