"""Batch pipeline: ingest rated reviews, correct and stem tokens, emit
rating-partitioned n-gram lexicon files.

Reviews are assigned round-robin to a fixed number of shards and each
shard accumulates its own n-gram tables. Corrections are pure functions of
the shared read-only resources, and merged tables do not depend on merge
order, so the emitted files are byte-identical for any worker count.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import BinaryIO, Iterable, Sequence

from .corrector import (
    DEFAULT_AMBIGUITY_MAP,
    AmbiguityMap,
    CorrectionResult,
    CorrectorConfig,
    Method,
    correct_word,
)
from .errors import ParseError
from .ngrams import NgramTable, extract_ngrams, verify_partition
from .resources import Dictionary, LexiconResources
from .similarity import best_matches
from .tokenizer import RawReview, remove_stopwords, tokenize

__all__ = [
    "JobConfig",
    "PipelineReport",
    "ingest_jsonl",
    "run_pipeline",
    "correct_text",
    "bench_compare",
    "round_score",
]

DEFAULT_CLASSES = frozenset(range(6))


def round_score(value: float) -> float:
    """Round to two decimals, halves away from zero (0.875 -> 0.88)."""
    return float(Decimal(str(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class JobConfig:
    """Everything a batch run needs besides the input bytes."""

    inputs: tuple[str, ...]
    out_dir: str
    gram_sizes: tuple[int, ...] = (1, 2, 3)
    classes: frozenset[int] = DEFAULT_CLASSES
    workers: int = 1
    min_count: int = 1
    corrector: CorrectorConfig = field(default_factory=CorrectorConfig)
    dictionary_path: str | None = None
    stopwords_path: str | None = None
    abbreviations_path: str | None = None
    suffixes_path: str | None = None
    skip_bad_lines: bool = False

    def __post_init__(self) -> None:
        if not self.inputs:
            raise ValueError("at least one input path is required")
        if not self.gram_sizes or any(n not in (1, 2, 3) for n in self.gram_sizes):
            raise ValueError(f"gram sizes must be a non-empty subset of (1, 2, 3), got {self.gram_sizes!r}")
        if len(set(self.gram_sizes)) != len(self.gram_sizes):
            raise ValueError("duplicate gram sizes")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.min_count < 1:
            raise ValueError("min_count must be at least 1")
        if not self.classes:
            raise ValueError("the class set must not be empty")


@dataclass
class PipelineReport:
    """What a batch run did, for logging and assertions."""

    reviews_ingested: int = 0
    reviews_skipped: int = 0
    reviews_by_class: dict[int, int] = field(default_factory=dict)
    tokens_seen: int = 0
    tokens_kept: int = 0
    corrections: dict[str, int] = field(default_factory=dict)
    files_emitted: list[str] = field(default_factory=list)
    phase_seconds: dict[str, float] = field(default_factory=dict)

    def summary(self) -> str:
        lines = [
            f"reviews ingested: {self.reviews_ingested}"
            + (f" (skipped {self.reviews_skipped})" if self.reviews_skipped else ""),
            "reviews by class: "
            + (
                ", ".join(f"{c}: {n}" for c, n in sorted(self.reviews_by_class.items()))
                or "none"
            ),
            f"tokens seen: {self.tokens_seen}, kept after stopwords: {self.tokens_kept}",
            "corrections: "
            + (", ".join(f"{m}: {n}" for m, n in sorted(self.corrections.items())) or "none"),
            f"files emitted: {len(self.files_emitted)}",
        ]
        lines += [f"  {name}" for name in self.files_emitted]
        lines.append(
            "phase seconds: "
            + ", ".join(f"{phase}: {secs:.3f}" for phase, secs in self.phase_seconds.items())
        )
        return "\n".join(lines)


def ingest_jsonl(
    source: BinaryIO,
    classes: frozenset[int] = DEFAULT_CLASSES,
    skip_bad_lines: bool = False,
    name: str | None = None,
) -> tuple[list[RawReview], int]:
    """Read one {"text": ..., "rating": ...} JSON object per line.

    Blank lines are skipped silently. A malformed line raises ParseError
    with its line number unless skip_bad_lines is set, in which case it is
    counted instead. Returns (reviews, skipped_count).
    """
    reviews: list[RawReview] = []
    skipped = 0
    data = source.read().decode("utf-8", errors="replace")
    for lineno, line in enumerate(data.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            reviews.append(_parse_review(line, classes))
        except ParseError as exc:
            if skip_bad_lines:
                skipped += 1
                continue
            raise ParseError(exc.message, lineno, name) from None
    return reviews, skipped


def _parse_review(line: str, classes: frozenset[int]) -> RawReview:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}")
    if not isinstance(obj, dict):
        raise ParseError(f"expected a JSON object, got {type(obj).__name__}")
    text = obj.get("text")
    rating = obj.get("rating")
    if not isinstance(text, str) or not text.strip():
        raise ParseError("field 'text' must be a non-empty string")
    if isinstance(rating, bool) or not isinstance(rating, int):
        raise ParseError("field 'rating' must be an integer")
    if rating not in classes:
        raise ParseError(f"rating {rating} outside the configured classes {sorted(classes)}")
    return RawReview(text, rating)


@dataclass
class _ShardResult:
    tables: dict[int, NgramTable]
    tokens_seen: int = 0
    tokens_kept: int = 0
    methods: Counter = field(default_factory=Counter)
    reviews_by_class: Counter = field(default_factory=Counter)


def _process_shard(
    shard: Sequence[RawReview],
    resources: LexiconResources,
    config: JobConfig,
    ambiguity: AmbiguityMap,
) -> _ShardResult:
    result = _ShardResult({n: NgramTable(n, config.classes) for n in config.gram_sizes})
    # Corrections are pure, so repeated words resolve from a shard-local cache.
    cache: dict[str, CorrectionResult] = {}
    for review in shard:
        result.reviews_by_class[review.rating] += 1
        tokens = tokenize(review.text)
        result.tokens_seen += len(tokens)
        kept = remove_stopwords(tokens, resources.stopwords)
        result.tokens_kept += len(kept)
        stems: list[str] = []
        for token in kept:
            correction = cache.get(token.surface)
            if correction is None:
                correction = correct_word(token.surface, resources, config.corrector, ambiguity)
                cache[token.surface] = correction
            result.methods[correction.method.value] += 1
            # Abbreviations may expand to several words; each one is stemmed.
            for piece in correction.corrected.split():
                stems.append(resources.stemmer.stem(piece))
        for n in config.gram_sizes:
            result.tables[n].accumulate(review.rating, extract_ngrams(stems, n))
    return result


def run_pipeline(config: JobConfig, resources: LexiconResources | None = None) -> PipelineReport:
    """Run the full batch job and write lexicon files into config.out_dir.

    The emitted bytes are a function of the inputs, the resources and the
    config minus its worker count; worker count only changes wall time.
    """
    report = PipelineReport()
    t0 = time.perf_counter()
    if resources is None:
        resources = LexiconResources.from_paths(
            dictionary=config.dictionary_path,
            stopwords=config.stopwords_path,
            abbreviations=config.abbreviations_path,
            suffixes=config.suffixes_path,
        )
    ambiguity = DEFAULT_AMBIGUITY_MAP

    reviews: list[RawReview] = []
    for path in config.inputs:
        with open(path, "rb") as stream:
            loaded, skipped = ingest_jsonl(stream, config.classes, config.skip_bad_lines, path)
        reviews.extend(loaded)
        report.reviews_skipped += skipped
    report.reviews_ingested = len(reviews)
    t1 = time.perf_counter()
    report.phase_seconds["ingest"] = t1 - t0

    shards: list[list[RawReview]] = [[] for _ in range(config.workers)]
    for index, review in enumerate(reviews):
        shards[index % config.workers].append(review)

    if config.workers == 1:
        shard_results = [_process_shard(shards[0], resources, config, ambiguity)]
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            futures = [
                pool.submit(_process_shard, shard, resources, config, ambiguity)
                for shard in shards
            ]
            shard_results = [future.result() for future in futures]
    t2 = time.perf_counter()
    report.phase_seconds["map"] = t2 - t1

    tables = {n: NgramTable(n, config.classes) for n in config.gram_sizes}
    for shard_result in shard_results:
        for n in config.gram_sizes:
            tables[n] = tables[n].merge(shard_result.tables[n])
        report.tokens_seen += shard_result.tokens_seen
        report.tokens_kept += shard_result.tokens_kept
        for method, count in shard_result.methods.items():
            report.corrections[method] = report.corrections.get(method, 0) + count
        for rating, count in shard_result.reviews_by_class.items():
            report.reviews_by_class[rating] = report.reviews_by_class.get(rating, 0) + count
    t3 = time.perf_counter()
    report.phase_seconds["merge"] = t3 - t2

    report.files_emitted = _emit(tables, Path(config.out_dir), config.min_count)
    report.phase_seconds["emit"] = time.perf_counter() - t3
    return report


def _emit(tables: dict[int, NgramTable], out_dir: Path, min_count: int) -> list[str]:
    """Write gram, exclusive and shared TSV files; return emitted names."""
    out_dir.mkdir(parents=True, exist_ok=True)
    emitted: list[str] = []
    for n in sorted(tables):
        table = tables[n].filtered(min_count)
        verify_partition(table)
        present = table.classes()
        for rating in present:
            rows = sorted(table.counts(rating).items(), key=lambda r: (-r[1], " ".join(r[0])))
            emitted.append(
                _write_rows(out_dir, f"grams_n{n}_class{rating}.tsv", rows, with_count=True)
            )
            emitted.append(
                _write_rows(
                    out_dir,
                    f"exclusive_n{n}_class{rating}.tsv",
                    table.exclusive(rating),
                    with_count=True,
                )
            )
        if len(present) >= 2:
            lo, hi = present[0], present[-1]
            shared_rows = [(key, None) for key in table.shared((lo, hi))]
            emitted.append(
                _write_rows(
                    out_dir,
                    f"shared_n{n}_classes{lo}-{hi}.tsv",
                    shared_rows,
                    with_count=False,
                )
            )
    return sorted(emitted)


def _write_rows(out_dir: Path, name: str, rows, with_count: bool) -> str:
    lines = []
    for key, count in rows:
        term = " ".join(key)
        lines.append(f"{term}\t{count}\n" if with_count else f"{term}\n")
    (out_dir / name).write_bytes("".join(lines).encode("utf-8"))
    return name


def correct_text(
    line: str,
    resources: LexiconResources,
    config: CorrectorConfig | None = None,
    ambiguity: AmbiguityMap = DEFAULT_AMBIGUITY_MAP,
) -> tuple[str, list[CorrectionResult]]:
    """Correct one line token by token, preserving order.

    Returns the corrected line and the per-token results. An empty line
    yields an empty line and an empty trace. Stopwords are kept and pass
    through as known words; this is the spot-check path, not the lexicon
    build, which drops them instead.
    """
    if config is None:
        config = CorrectorConfig()
    results = []
    for token in tokenize(line):
        if token.surface in resources.stopwords:
            results.append(
                CorrectionResult(
                    original=token.surface,
                    corrected=token.surface,
                    method=Method.EXACT,
                    confidence=1.0,
                    trace=(Method.EXACT.value,),
                )
            )
        else:
            results.append(correct_word(token.surface, resources, config, ambiguity))
    corrected = " ".join(result.corrected for result in results)
    return corrected, results


def bench_compare(
    word_pairs: Iterable[tuple[str, Sequence[str]]],
    threshold: float = 0.6,
    corrector: CorrectorConfig | None = None,
    ambiguity: AmbiguityMap = DEFAULT_AMBIGUITY_MAP,
) -> str:
    """Compare plain similarity ranking against the correction cascade.

    For every (test word, candidate dictionary) pair three blocks are
    produced: edit-distance similarity at the threshold, gestalt
    similarity at the threshold, and the correction cascade's answer. The
    threshold does not affect the cascade, which uses its own config.
    """
    if corrector is None:
        corrector = CorrectorConfig()
    lines: list[str] = []
    for word, candidates in word_pairs:
        candidate_list = list(candidates)
        if not candidate_list:
            raise ValueError(f"empty candidate dictionary for {word!r}")
        dictionary = Dictionary()
        for candidate in candidate_list:
            dictionary.add(candidate)
        resources = LexiconResources(
            dictionary=dictionary,
            stopwords=frozenset(),
            abbreviations={},
            stemmer=_IdentityStemmer(),
        )
        lines.append(f"== {word}")
        for metric in ("levenshtein", "gestalt"):
            lines.append(f"  {metric} similarity (threshold {round_score(threshold):.2f})")
            matches = best_matches(word, dictionary, metric, threshold)  # type: ignore[arg-type]
            if matches:
                width = max(len(m.candidate) for m in matches)
                lines += [
                    f"    {m.candidate:<{width}}  {round_score(m.score):.2f}" for m in matches
                ]
            else:
                lines.append("    (no candidate at threshold)")
        result = correct_word(word, resources, corrector, ambiguity)
        lines.append("  correction cascade")
        lines.append(
            f"    {result.corrected}  {round_score(result.confidence):.2f}  {result.method.value}"
        )
    lines.append(
        "note: levenshtein similarity here is 1 - distance/max(|a|,|b|), so a "
        "single-edit pair of 3-letter words scores 0.67; scores of 0.33 "
        "sometimes quoted for such pairs are not derivable from this formula."
    )
    return "\n".join(lines) + "\n"


class _IdentityStemmer:
    def stem(self, word: str) -> str:
        return word
