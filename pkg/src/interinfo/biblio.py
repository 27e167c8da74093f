"""ISI tagged-record ingestion and document-by-feature matrices.

Handles the plain-text export format of the major citation indexes:
two-letter field tags in columns 1-2, field values from column 4,
continuation lines starting with three spaces, "ER" closing a record,
"EF" closing the file. Records become DocRecord objects from which
binary incidence matrices (documents x title words / authors / cited
references) are built and juxtaposed side by side.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import CaseAlignmentError, EmptyFeatureError, MalformedRecordError
from .factors import DataMatrix

FEATURE_KINDS = ("title_word", "author", "reference")

# Function words excluded from title vocabularies by default. A plain
# English list; callers studying other corpora should supply their own.
DEFAULT_STOPWORDS = frozenset(
    """
    a about above after again against all also among an and any are as at
    be because been before being below between both but by can could did
    do does doing down during each few for from further had has have
    having here how if in into is it its itself more most no nor not of
    off on once only or other our out over own same should so some such
    than that the their them then there these they this those through to
    too under until up very was we were what when where which while who
    whom why will with would
    """.split()
)

_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)


@dataclass(frozen=True)
class DocRecord:
    """One bibliographic record: authors, title, cited references, year."""

    id: str
    authors: tuple[str, ...] = ()
    title: str = ""
    references: tuple[str, ...] = ()
    year: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "authors", tuple(self.authors))
        object.__setattr__(self, "references", tuple(self.references))


@dataclass(frozen=True)
class FeatureSpec:
    """What to extract from records and how to threshold it.

    `min_occurrence` counts documents, not raw mentions: a feature kept
    at threshold t appears in at least t distinct documents. `stopwords`
    applies to title words only. `titles_only` reduces each cited
    reference to its third comma-separated field, the journal or book
    title slot of the conventional citation string.
    """

    kind: str
    min_occurrence: int = 1
    stopwords: frozenset[str] = DEFAULT_STOPWORDS
    titles_only: bool = False

    def __post_init__(self):
        if self.kind not in FEATURE_KINDS:
            raise ValueError(f"kind must be one of {FEATURE_KINDS}, got {self.kind!r}")
        if self.min_occurrence < 1:
            raise ValueError(f"min_occurrence must be >= 1, got {self.min_occurrence}")
        object.__setattr__(self, "stopwords", frozenset(w.lower() for w in self.stopwords))


def parse_records(text: str) -> list[DocRecord]:
    """Parse an ISI tagged export into records.

    AU and CR contribute one value per line (continuations included);
    TI continuation lines are joined with single spaces; PY is parsed
    as an integer when possible. A record left open at EF or at end of
    input raises MalformedRecordError with the offending line number.
    """
    records: list[DocRecord] = []
    fields: dict[str, list[str]] | None = None
    open_line = 0
    current_tag = ""

    def close(ordinal: int) -> DocRecord:
        assert fields is not None
        ut = fields.get("UT", [])
        doc_id = ut[0].strip() if ut and ut[0].strip() else str(ordinal + 1)
        year = None
        if fields.get("PY"):
            try:
                year = int(fields["PY"][0].strip())
            except ValueError:
                year = None
        return DocRecord(
            id=doc_id,
            authors=tuple(v for v in fields.get("AU", []) if v),
            title=" ".join(fields.get("TI", [])),
            references=tuple(v for v in fields.get("CR", []) if v),
            year=year,
        )

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        tag = line[:2]
        if tag == "EF":
            if fields is not None:
                raise MalformedRecordError("record not closed with ER before EF", line_number)
            break
        if not line.strip():
            continue
        if line.startswith("   "):
            if fields is None or not current_tag:
                raise MalformedRecordError("continuation line outside a record", line_number)
            fields.setdefault(current_tag, []).append(line[3:].strip())
            continue
        if tag == "ER":
            if fields is None:
                raise MalformedRecordError("ER with no open record", line_number)
            records.append(close(len(records)))
            fields = None
            current_tag = ""
            continue
        if tag in ("FN", "VR") and fields is None:
            continue
        if fields is None:
            fields = {}
            open_line = line_number
        current_tag = tag
        fields.setdefault(tag, []).append(line[3:].strip())
    if fields is not None:
        raise MalformedRecordError(
            f"record opened at line {open_line} never closed with ER",
            open_line,
        )
    return records


def write_records(records: list[DocRecord]) -> str:
    """Canonical tagged-format writer; parse(write(parse(x))) is exact."""
    lines: list[str] = []
    for rec in records:
        lines.append(f"UT {rec.id}")
        for i, author in enumerate(rec.authors):
            lines.append(f"AU {author}" if i == 0 else f"   {author}")
        if rec.title:
            lines.append(f"TI {rec.title}")
        for i, ref in enumerate(rec.references):
            lines.append(f"CR {ref}" if i == 0 else f"   {ref}")
        if rec.year is not None:
            lines.append(f"PY {rec.year}")
        lines.append("ER")
        lines.append("")
    lines.append("EF")
    return "\n".join(lines) + "\n"


def _normalize(value: str) -> str:
    return " ".join(value.casefold().split())


def _doc_features(doc: DocRecord, spec: FeatureSpec) -> set[str]:
    if spec.kind == "title_word":
        words = {w.lower() for w in _WORD_RE.findall(doc.title)}
        return words - spec.stopwords
    if spec.kind == "author":
        return {_normalize(a) for a in doc.authors if a.strip()}
    refs = set()
    for ref in doc.references:
        if spec.titles_only:
            parts = [p.strip() for p in ref.split(",")]
            if len(parts) >= 3 and parts[2]:
                refs.add(_normalize(parts[2]))
        elif ref.strip():
            refs.add(_normalize(ref))
    return refs


def extract_features(docs: list[DocRecord], spec: FeatureSpec) -> DataMatrix:
    """Binary documents-by-features incidence matrix.

    Features are kept when their document frequency reaches
    `spec.min_occurrence`; columns are sorted lexicographically so the
    matrix is identical for identical corpora.
    """
    if not docs:
        raise EmptyFeatureError("no documents to extract features from")
    per_doc = [_doc_features(d, spec) for d in docs]
    frequency: dict[str, int] = {}
    for features in per_doc:
        for f in features:
            frequency[f] = frequency.get(f, 0) + 1
    kept = sorted(f for f, n in frequency.items() if n >= spec.min_occurrence)
    if not kept:
        raise EmptyFeatureError(
            f"no {spec.kind} features survive min_occurrence={spec.min_occurrence}"
        )
    column = {f: j for j, f in enumerate(kept)}
    values = np.zeros((len(docs), len(kept)))
    for i, features in enumerate(per_doc):
        for f in features:
            j = column.get(f)
            if j is not None:
                values[i, j] = 1.0
    return DataMatrix(
        case_labels=tuple(d.id for d in docs),
        variable_labels=tuple(kept),
        values=values,
        kind=spec.kind,
    )


def juxtapose(matrices: list[DataMatrix]) -> DataMatrix:
    """Concatenate feature blocks over the same cases, left to right.

    Variable labels are prefixed with each block's kind (or an ordinal
    fallback) so the combined labels stay unique.
    """
    if not matrices:
        raise CaseAlignmentError("nothing to juxtapose")
    cases = matrices[0].case_labels
    for m in matrices[1:]:
        if m.case_labels != cases:
            for a, b in zip(cases, m.case_labels):
                if a != b:
                    raise CaseAlignmentError(f"case mismatch: {a!r} vs {b!r}")
            raise CaseAlignmentError(
                f"case counts differ: {len(cases)} vs {len(m.case_labels)}"
            )
    labels: list[str] = []
    for i, m in enumerate(matrices):
        prefix = m.kind if m.kind else f"m{i}"
        labels.extend(f"{prefix}:{v}" for v in m.variable_labels)
    values = np.hstack([m.values for m in matrices])
    return DataMatrix(cases, tuple(labels), values)


def load_stopwords(text: str) -> frozenset[str]:
    """Stopword file format: whitespace-separated words, '#' comments."""
    words = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        words.extend(w.lower() for w in line.split())
    return frozenset(words)
