"""Human-readable tables, TSV output and figures for experiment reports."""

from __future__ import annotations

import csv
import io
import json
import os

from .isomorphism import AGREE_ISO, AGREE_NONISO, ANOMALY


def dumps(obj):
    """Canonical JSON used for every machine-readable output."""
    return json.dumps(obj, indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def format_table(headers, rows):
    rows = [[str(c) for c in r] for r in rows]
    widths = [len(h) for h in headers]
    for r in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]
    line = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    out = [line.rstrip(), "  ".join("-" * w for w in widths)]
    for r in rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(out) + "\n"


def _pair_rows(data):
    rows = []
    for p in data["pairs"]:
        ident = p["identities"]
        iso = p["iso"]
        detail = ""
        if iso["verdict"] == "NotIso":
            if iso.get("reason") == "InvariantMismatch":
                detail = "invariant " + iso["invariant"]["name"]
            else:
                detail = "identity " + iso["separating"]["polynomial"]
        elif iso["verdict"] == "Found":
            detail = f"witness after {iso['nodes']} nodes"
        else:
            detail = iso.get("reason", "")
        sig = ""
        if ident["verdict"] == "Separating":
            sig = " ".join(ident["signature"]["degrees"])
        rows.append([p["group"], p["a"], p["b"], ident["verdict"], sig, iso["verdict"],
                     p["class"], detail])
    return rows


PAIR_HEADERS = ["group", "a", "b", "identities", "signature", "iso", "class", "detail"]


def experiment_table(data):
    """Aligned table of an experiment report given as its JSON dict."""
    out = format_table(PAIR_HEADERS, _pair_rows(data))
    c = data["counts"]
    out += (f"\n{len(data['pairs'])} pairs: {c[AGREE_ISO]} {AGREE_ISO}, "
            f"{c[AGREE_NONISO]} {AGREE_NONISO}, {c[ANOMALY]} {ANOMALY}\n")
    if data["skipped_pairs"]:
        out += f"{len(data['skipped_pairs'])} pairs skipped (different grading group)\n"
    return out


def experiment_tsv(data):
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(PAIR_HEADERS)
    w.writerows(_pair_rows(data))
    return buf.getvalue()


def invariants_tsv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(["name", "group", "dim", "dim_mult", "dim_gamma", "dim_over_gamma"])
    w.writerows(rows)
    return buf.getvalue()


def invariant_rows(report):
    from .isomorphism import invariant_fingerprint

    cap = report.config["cap"]
    rows = []
    for name, A in sorted(zip(report.names, report.algebras), key=lambda t: t[0]):
        fp = invariant_fingerprint(A, cap)
        rows.append([name, str(A.group), A.dim, fp.dim_mult, fp.dim_gamma, fp.dim_over_gamma])
    return rows


# figures ------------------------------------------------------------------

CLASS_CODES = {None: 0, AGREE_ISO: 1, AGREE_NONISO: 2, ANOMALY: 3}
CLASS_COLORS = ["#f2f2f2", "#4c9a5b", "#7ea6d8", "#d1495b"]


def plot_pair_classes(data, path):
    """Heatmap of pair classes, one panel per grading group."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.colors import ListedColormap
    from matplotlib.patches import Patch

    groups = {}
    for e in data["catalogue"]:
        groups.setdefault(e["group"], []).append(e["name"])
    cls = {(p["a"], p["b"]): p["class"] for p in data["pairs"]}
    keys = sorted(groups)
    fig, axes = plt.subplots(1, len(keys), figsize=(4.2 * len(keys), 4.4), squeeze=False)
    cmap = ListedColormap(CLASS_COLORS)
    for ax, key in zip(axes[0], keys):
        names = sorted(groups[key])
        grid = [[CLASS_CODES[cls.get((a, b)) or cls.get((b, a))] for b in names] for a in names]
        ax.imshow(grid, cmap=cmap, vmin=0, vmax=3)
        ax.set_xticks(range(len(names)))
        ax.set_yticks(range(len(names)))
        ax.set_xticklabels(names, rotation=60, ha="right", fontsize=7)
        ax.set_yticklabels(names, fontsize=7)
        ax.set_title(f"graded by {key}", fontsize=9)
    handles = [Patch(color=CLASS_COLORS[v], label=k) for k, v in CLASS_CODES.items() if k]
    fig.legend(handles=handles, loc="lower center", ncol=3, fontsize=8, frameon=False)
    fig.tight_layout(rect=(0, 0.06, 1, 1))
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_invariants(rows, path):
    """Grouped bars of dim U, dim M(U) and dim Gamma(U) per algebra (log scale)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [r[0] for r in rows]
    series = [("dim U", [r[2] for r in rows]), ("dim M(U)", [r[3] for r in rows]),
              ("dim Gamma(U)", [r[4] for r in rows])]
    fig, ax = plt.subplots(figsize=(max(6, 0.5 * len(names) + 2), 4))
    width = 0.27
    for t, (label, vals) in enumerate(series):
        ax.bar([i + (t - 1) * width for i in range(len(names))], vals, width, label=label)
    ax.set_yscale("log")
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("dimension over the base field")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def write_experiment(report, out_dir, figures=True):
    """Write report.json, pairs.tsv, invariants.tsv and figures; return the paths."""
    os.makedirs(out_dir, exist_ok=True)
    data = report.to_json()
    paths = []

    def put(name, text):
        p = os.path.join(out_dir, name)
        with open(p, "w", encoding="utf-8") as fh:
            fh.write(text)
        paths.append(p)

    put("report.json", dumps(data))
    put("pairs.tsv", experiment_tsv(data))
    rows = invariant_rows(report)
    put("invariants.tsv", invariants_tsv(rows))
    if figures:
        paths.append(plot_pair_classes(data, os.path.join(out_dir, "pair_classes.png")))
        paths.append(plot_invariants(rows, os.path.join(out_dir, "invariants.png")))
    return paths
