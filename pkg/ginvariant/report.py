"""
Serialized form of a FieldReport: the JSON document printed by `analyze`
and the CSV rows written by `survey`.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ginvariant.config.settings import settings
from ginvariant.ginv import FieldReport

logger = logging.getLogger(__name__)

SURVEY_COLUMNS = [
    "d",
    "discriminant",
    "class_number",
    "g_d",
    "g_source",
    "primes",
    "max_C",
    "elapsed_ms",
    "error",
]


@dataclass
class ReportDocument:
    d: int
    discriminant: int
    class_number: int
    pythagoras: int
    g: int
    g_source: str
    classes: List[Dict[str, Any]]
    s_description: List[Dict[str, Any]]
    notes: List[str] = field(default_factory=list)
    elapsed_ms: Optional[int] = None
    schema_version: str = settings.SCHEMA_VERSION

    @classmethod
    def from_field_report(cls, report: FieldReport, elapsed_ms: Optional[int] = None) -> "ReportDocument":
        classes = []
        for rep in report.class_reps:
            entry: Dict[str, Any] = {
                "form": list(rep.form.as_tuple()),
                "principal": rep.is_principal,
                "prime": None,
                "case": None,
                "n": None,
                "C": None,
                "E": None,
                "F": None,
                "g_p": None,
            }
            pr = None if rep.is_principal else report.prime_reports.get(rep.p)
            if pr is not None:
                pc = pr.prime_case
                entry.update(
                    prime=pc.p,
                    case=pc.case.code,
                    n=pc.n,
                    C=pc.C,
                    E=list(pr.E),
                    F=list(pr.F),
                    g_p=pr.g,
                )
            classes.append(entry)

        return cls(
            d=report.fp.d,
            discriminant=report.fp.discriminant,
            class_number=report.class_number,
            pythagoras=report.pythagoras,
            g=report.g_d,
            g_source=report.g_source,
            classes=classes,
            s_description=[
                {"class_index": ex.class_index, "excluded_r": list(ex.excluded_r)}
                for ex in report.s_d_description
            ],
            notes=list(report.notes),
            elapsed_ms=elapsed_ms,
        )

    @property
    def primes(self) -> List[int]:
        return sorted({c["prime"] for c in self.classes if c.get("prime") is not None})

    @property
    def max_C(self) -> Optional[int]:
        bounds = [c["C"] for c in self.classes if c.get("C") is not None]
        return max(bounds) if bounds else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "d": self.d,
            "discriminant": self.discriminant,
            "class_number": self.class_number,
            "pythagoras": self.pythagoras,
            "g": self.g,
            "g_source": self.g_source,
            "classes": self.classes,
            "s_description": self.s_description,
            "notes": self.notes,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReportDocument":
        return cls(
            d=data["d"],
            discriminant=data["discriminant"],
            class_number=data["class_number"],
            pythagoras=data["pythagoras"],
            g=data["g"],
            g_source=data["g_source"],
            classes=data.get("classes", []),
            s_description=data.get("s_description", []),
            notes=data.get("notes", []),
            elapsed_ms=data.get("elapsed_ms"),
            schema_version=data.get("schema_version", settings.SCHEMA_VERSION),
        )

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            logger.error(f"Failed to parse report JSON: {e}")
            raise ValueError(f"not a report document: {e}") from e
        return cls.from_dict(data)


def _cell(value: Any) -> Any:
    return "" if value is None else value


def survey_row(doc: ReportDocument) -> Dict[str, Any]:
    """One survey CSV row; absent values become empty cells."""
    return {
        "d": doc.d,
        "discriminant": doc.discriminant,
        "class_number": doc.class_number,
        "g_d": doc.g,
        "g_source": doc.g_source,
        "primes": ";".join(str(p) for p in doc.primes),
        "max_C": _cell(doc.max_C),
        "elapsed_ms": _cell(doc.elapsed_ms),
        "error": "",
    }


def error_row(d: int, discriminant: Optional[int], message: str, elapsed_ms: Optional[int] = None) -> Dict[str, Any]:
    row: Dict[str, Any] = {column: "" for column in SURVEY_COLUMNS}
    row.update(d=d, discriminant=_cell(discriminant), elapsed_ms=_cell(elapsed_ms), error=message)
    return row
