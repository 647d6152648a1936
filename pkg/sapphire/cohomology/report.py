# -*- coding: utf-8 -*-
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence
from collections import namedtuple

from .group import GroupParams
from .homology import CohomologyGroup
from .products import ProductTable
from .verify import CheckResult

GroupRecord = namedtuple("GroupRecord", ["kind", "degree", "module", "invariants", "generators"])


class ReportView(object):
    """Aligned plain text table over a sequence of result records

    Each column is named by an attribute path of the records; ``"module.label"``
    reads ``rec.module.label``. Cells are produced by the formatter registered
    for the column (``str`` if none) and padded to the widest cell.

    Args:
        columns: Attribute paths in display order
        headings: Title per column path, defaults to the path itself. A title
            of ``None`` or ``""`` leaves the cell blank; the title row is
            omitted when every title is blank.
        fmt: Formatter per column path
        separator: Padding between neighbouring columns
    """
    def __init__(self,
                 columns: Iterable[str],
                 headings: Optional[Dict[str, str]] = None,
                 fmt: Optional[Dict[str, Callable]] = None,
                 separator: str = "  ") -> None:
        columns = list(columns)
        headings = headings or dict()
        fmt = fmt or dict()
        self.separator = separator
        self._paths = [tuple(col.split(".")) for col in columns]
        self._formatters = [fmt.get(col, str) for col in columns]
        self._titles = tuple(headings.get(col, col) or "" for col in columns)

    def __call__(self, recs: Iterable[Any]) -> str:
        lines = list(self.header) + list(self.rows(recs))
        if not lines:
            return ""
        widths = [max(len(line[i]) for line in lines) for i in range(len(self._paths))]
        return "\n".join(
            self.separator.join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
            for line in lines)

    @property
    def header(self) -> Iterator[tuple]:
        """Title row, nothing if all titles are blank"""
        if any(self._titles):
            yield self._titles

    @property
    def columns(self) -> list:
        return [".".join(path) for path in self._paths]

    def rows(self, recs: Iterable[Any]) -> Iterator[tuple]:
        for rec in recs:
            yield tuple(fmt(self._getattr(rec, path))
                        for path, fmt in zip(self._paths, self._formatters))

    @staticmethod
    def _getattr(obj: Any, attrs: Iterable[str], *args) -> Any:
        """Resolve an attribute path; a ``None`` on the way ends the lookup

        A default passed in *args* replaces missing attributes.
        """
        for attr in attrs:
            if obj is None:
                break
            obj = getattr(obj, attr, *args)
        return obj


def group_records(groups: Sequence, render: bool = True) -> List[GroupRecord]:
    """Turn computed groups into records

    Args:
        groups: :class:`CohomologyGroup` or :class:`HomologyGroup` instances
        render: Write generator representatives with basis names
    """
    records = []
    for group in groups:
        reps = group.representatives
        texts = [group.render(rep) if render else str(rep) for rep in reps]
        kind = "H^" if isinstance(group, CohomologyGroup) else "H_"
        records.append(GroupRecord(kind, group.degree, group.module, group.invariants, texts))
    return records


GROUP_VIEW = ReportView(
    columns=["module.label", "kind", "degree", "invariants", "generators"],
    headings={"module.label": "coefficients", "kind": "", "degree": "k",
              "invariants": "group", "generators": "generators"},
    fmt={"generators": lambda gens: ", ".join(gens) if gens else "-"})

PRODUCT_VIEW = ReportView(
    columns=["bidegree", "left", "right", "result"],
    headings={"bidegree": "(p,q)", "left": "left", "right": "right", "result": "coordinates"},
    fmt={"bidegree": lambda b: f"({b[0]},{b[1]})",
         "result": lambda r: "(" + ", ".join(map(str, r)) + ")"})

CHECK_VIEW = ReportView(
    columns=["name", "params", "passed", "detail"],
    headings={"name": "check", "params": "params", "passed": "status", "detail": "detail"},
    fmt={"params": lambda p: "-" if p is None else "(" + ",".join(map(str, p)) + ")",
         "passed": lambda ok: "ok" if ok else "FAIL"})


def compute_text(params: GroupParams, groups: Sequence) -> str:
    return f"params {params}\n" + GROUP_VIEW(group_records(groups))


def compute_document(params: GroupParams, groups: Sequence) -> dict:
    results = []
    for rec in group_records(groups):
        results.append({"coefficients": rec.module.label,
                        "kind": "cohomology" if rec.kind == "H^" else "homology",
                        "degree": rec.degree,
                        "group": rec.invariants.as_dict(),
                        "generators": rec.generators})
    return {"params": list(params), "results": results}


def _generator_lines(groups: Sequence[CohomologyGroup]) -> List[str]:
    lines = []
    for group in groups:
        for index, rep in enumerate(group.representatives):
            lines.append(f"H{group.degree}:{index} over {group.module} = [{group.render(rep)}]")
    return lines


def products_text(table: ProductTable, generators: Sequence[CohomologyGroup]) -> str:
    header = f"params {table.params}  {table.left} x {table.right}"
    lines = [header] + _generator_lines(generators)
    if table.entries:
        lines.append(PRODUCT_VIEW(table.entries))
    else:
        lines.append("no products")
    return "\n".join(lines)


def products_document(table: ProductTable) -> dict:
    return {"params": list(table.params),
            "results": {"left": table.left.label,
                        "right": table.right.label,
                        "products": [entry.as_dict() for entry in table.entries]}}


def verify_text(results: Sequence[CheckResult]) -> str:
    failed = sum(1 for r in results if not r.passed)
    summary = f"{len(results) - failed} passed, {failed} failed"
    return CHECK_VIEW(results) + "\n" + summary


def verify_document(results: Sequence[CheckResult]) -> dict:
    return {"params": None, "results": [r.as_dict() for r in results]}
