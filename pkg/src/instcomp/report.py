"""Measure reports and their JSON/CSV serializations.

Rationals are written as {"num": int, "den": int} in JSON and as "num/den"
in CSV; never as decimals. JSON is emitted with sorted keys and a fixed
indent, so parsing and re-emitting a report reproduces it byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import measures
from .algorithms import gt_tree, ind_tree, naive_full_tree, omb_tree, NAIVE_CAP
from .boolfn import TruthTable
from .errors import CapExceededError
from .families import FamilySpec
from .instc import instc_exact, instc_wrt

ALL_MEASURES = ("dt", "cmin", "cmax", "deg", "instc", "trees")


def rational_json(r: Fraction | None):
    if r is None:
        return None
    return {"num": r.numerator, "den": r.denominator}


def rational_text(r: Fraction | None) -> str:
    return "" if r is None else f"{r.numerator}/{r.denominator}"


@dataclass
class MeasureReport:
    descriptor: dict
    n: int
    dt: int | None = None
    cmin: int | None = None
    cmax: int | None = None
    degree: int | None = None
    instc: Fraction | None = None
    trees: list[tuple[str, Fraction]] = field(default_factory=list)
    timing_ms: dict[str, float] = field(default_factory=dict)

    @property
    def instc_upper(self) -> Fraction | None:
        if self.dt is None or not self.cmin:
            return None
        return Fraction(self.dt, self.cmin)

    def consistent(self) -> bool:
        """instc <= dt/cmin whenever both are known (integer cross-multiplication)."""
        if self.instc is None or self.instc_upper is None:
            return True
        return self.instc.numerator * self.cmin <= self.dt * self.instc.denominator

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "function": self.descriptor,
            "n": self.n,
            "dt": self.dt,
            "cmin": self.cmin,
            "cmax": self.cmax,
            "degree": self.degree,
            "instc": rational_json(self.instc),
            "instc_upper": rational_json(self.instc_upper),
            "trees": [{"name": name, "instc_wrt": rational_json(r)} for name, r in self.trees],
        }
        if timings:
            out["timing_ms"] = self.timing_ms
        return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


CSV_FIELDS = ("function", "n", "dt", "cmin", "cmax", "degree", "instc", "instc_upper", "trees")


def reports_csv(reports: list[MeasureReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in reports:
        label = r.descriptor.get("label") or json.dumps(r.descriptor, sort_keys=True)
        writer.writerow([
            label,
            r.n,
            "" if r.dt is None else r.dt,
            "" if r.cmin is None else r.cmin,
            "" if r.cmax is None else r.cmax,
            "" if r.degree is None else r.degree,
            rational_text(r.instc),
            rational_text(r.instc_upper),
            ";".join(f"{name}={rational_text(v)}" for name, v in r.trees),
        ])
    return buf.getvalue()


def known_trees(f: TruthTable, spec: FamilySpec | None):
    """The explicit algorithms that apply to f, by name."""
    out = []
    if spec is not None:
        if spec.family == "gt":
            out.append(("gt_tree", gt_tree(spec.n)))
        elif spec.family == "omb" and spec.n % 2 == 1:
            out.append(("omb_tree", omb_tree(spec.n)))
        elif spec.family == "ind" and spec.m <= 3:
            out.append(("ind_tree", ind_tree(spec.m)))
    if f.n <= NAIVE_CAP:
        out.append(("naive", naive_full_tree(f)))
    return out


def _timed(timings: dict, key: str, fn):
    start = time.perf_counter()
    value = fn()
    timings[key] = round((time.perf_counter() - start) * 1000.0, 3)
    return value


def _within(n: int, cap: int) -> bool:
    return n <= cap


def build_report(f: TruthTable, descriptor: dict, requested=ALL_MEASURES, spec: FamilySpec | None = None,
                 slow: bool = False) -> MeasureReport:
    """Compute the requested measures. A requested measure beyond its cap raises.

    dt and cmin are also computed unrequested when within caps, so that the
    dt/cmin upper bound is always present.
    """
    requested = tuple(requested)
    unknown = set(requested) - set(ALL_MEASURES)
    if unknown:
        raise ValueError(f"unknown measures: {', '.join(sorted(unknown))}")
    cap = measures.lattice_cap(slow)
    for name in ("dt", "instc", "trees"):
        if name in requested and f.n > cap:
            raise CapExceededError(name, f.n, cap)
    if "cmin" in requested and f.n > measures.CERT_CAP:
        raise CapExceededError("cmin", f.n, measures.CERT_CAP)
    if "cmax" in requested and f.n > measures.CERT_CAP:
        raise CapExceededError("cmax", f.n, measures.CERT_CAP)
    if "deg" in requested and f.n > measures.DEGREE_CAP:
        raise CapExceededError("deg", f.n, measures.DEGREE_CAP)

    rep = MeasureReport(descriptor=descriptor, n=f.n)
    t = rep.timing_ms
    if "dt" in requested or _within(f.n, cap):
        rep.dt = _timed(t, "dt", lambda: measures.dt(f, slow=slow))
    if "cmin" in requested or _within(f.n, cap):
        rep.cmin = _timed(t, "cmin", lambda: measures.cmin(f, slow=slow))
    if "cmax" in requested:
        rep.cmax = _timed(t, "cmax", lambda: measures.certificate_complexity_max(f, slow=slow))
    if "deg" in requested:
        rep.degree = _timed(t, "deg", lambda: measures.degree(f))
    if "instc" in requested:
        rep.instc = _timed(t, "instc", lambda: instc_exact(f, slow=slow).value)
    if "trees" in requested:
        for name, tree in known_trees(f, spec):
            rep.trees.append((name, _timed(t, f"tree:{name}", lambda tree=tree: instc_wrt(f, tree, slow=slow))))
    return rep


# -- gap report -------------------------------------------------------------

GAP_FIELDS = ("function", "n", "dt", "cmin", "cmax", "instc", "dt/cmin", "dt/cmax")


def gap_row(label: str, f: TruthTable, slow: bool = False) -> list:
    d = measures.dt(f, slow=slow)
    certs = measures.certificate_complexities(f, slow)
    c_min, c_max = int(certs.min()), int(certs.max())
    value = instc_exact(f, slow=slow).value
    return [
        label,
        f.n,
        d,
        c_min,
        c_max,
        rational_text(value),
        rational_text(Fraction(d, c_min)) if c_min else "",
        rational_text(Fraction(d, c_max)) if c_max else "",
    ]


def gap_csv(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(GAP_FIELDS)
    writer.writerows(rows)
    return buf.getvalue()
