"""Generate the synthetic tagged-record corpus used by the test suite.

Two loose topical communities with overlapping vocabularies, authors,
and cited references, so that factor extraction has real structure to
find. The output is deterministic for a fixed seed; the checked-in
fixture at tests/data/synthetic20.txt came from the defaults.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

from interinfo.biblio import DocRecord, write_records

WORDS_A = [
    "entropy", "redundancy", "information", "measure", "uncertainty",
    "probability", "interaction", "configuration", "dimension", "expected",
]
WORDS_B = [
    "citation", "journal", "indicator", "mapping", "network",
    "coupling", "cocitation", "visualization", "field", "scholarly",
]
WORDS_SHARED = ["analysis", "model", "dynamics", "structure", "systems"]
FILLER = ["the", "of", "a", "in", "and", "for", "on", "with"]

AUTHORS_A = [
    "Veld, H", "Okafor, C", "Brandt, S", "Ishikawa, M",
    "Laurent, P", "Dossey, R",
]
AUTHORS_B = [
    "Marek, J", "Quiroga, L", "Tan, W", "Ferreira, A",
    "Nowak, E", "Lindqvist, O",
]

JOURNALS_A = ["J INFORM SCI", "ENTROPY", "SYST RES", "KYBERNETES"]
JOURNALS_B = ["SCIENTOMETRICS", "J DOC", "INFORM PROCESS MANAG", "RES POLICY"]


def _references(rng, journals, n_pool):
    pool = []
    for i in range(n_pool):
        author = rng.choice(["SHANNON C", "THEIL H", "GARNER W", "SMALL H",
                             "PRICE D", "KESSLER M", "ASHBY W", "MCGILL W"])
        year = int(rng.integers(1948, 1995))
        journal = journals[int(rng.integers(0, len(journals)))]
        volume = int(rng.integers(1, 60))
        page = int(rng.integers(1, 400))
        pool.append(f"{author}, {year}, {journal}, V{volume}, P{page}")
    return pool


def make_corpus(n_docs: int, seed: int) -> list[DocRecord]:
    rng = np.random.default_rng(seed)
    refs_a = _references(rng, JOURNALS_A, 8)
    refs_b = _references(rng, JOURNALS_B, 8)
    records = []
    for i in range(n_docs):
        community = i % 2
        words = WORDS_A if community == 0 else WORDS_B
        authors = AUTHORS_A if community == 0 else AUTHORS_B
        refs = refs_a if community == 0 else refs_b
        other_refs = refs_b if community == 0 else refs_a

        n_words = int(rng.integers(4, 7))
        picked = list(rng.choice(words, size=n_words, replace=False))
        picked += list(rng.choice(WORDS_SHARED, size=int(rng.integers(1, 3)), replace=False))
        rng.shuffle(picked)
        title_parts = []
        for j, w in enumerate(picked):
            if j > 0 and rng.random() < 0.55:
                title_parts.append(str(rng.choice(FILLER)))
            title_parts.append(w)
        title = " ".join(title_parts).capitalize()

        n_authors = int(rng.integers(1, 4))
        doc_authors = list(rng.choice(authors, size=n_authors, replace=False))
        if rng.random() < 0.2:
            cross = AUTHORS_B if community == 0 else AUTHORS_A
            doc_authors.append(str(rng.choice(cross)))

        n_refs = int(rng.integers(2, 6))
        doc_refs = list(rng.choice(refs, size=n_refs, replace=False))
        if rng.random() < 0.3:
            doc_refs.append(str(rng.choice(other_refs)))

        records.append(
            DocRecord(
                id=f"ISI:{i + 1:012d}",
                authors=tuple(str(a) for a in doc_authors),
                title=title,
                references=tuple(str(r) for r in doc_refs),
                year=int(rng.integers(2005, 2010)),
            )
        )
    return records


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=20)
    parser.add_argument("--seed", type=int, default=20100101)
    parser.add_argument(
        "-o",
        "--output",
        default=str(Path(__file__).resolve().parents[1] / "tests" / "data" / "synthetic20.txt"),
    )
    args = parser.parse_args()
    records = make_corpus(args.docs, args.seed)
    text = "FN Synthetic Citation Export\nVR 1.0\n" + write_records(records)
    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    print(f"wrote {out} ({len(records)} records)")


if __name__ == "__main__":
    main()
