"""Census files and manifests.

One graph per line, tab-separated: canonical key (hex), compact graph
form, the exact factor certifying the smallest eigenvalue, the isolating
rational interval, and a float approximation.  A JSON manifest records the
predicate parameters, derived counts, and any discrepancies against the
expected source counts.  Files are written deterministically so repeated
runs are byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .enumeration import (
    ClassificationResult,
    HoffmanCensus,
    HoffmanCensusMember,
    LambdaDescriptor,
    SignedCensus,
    lambda_descriptor,
)
from .iso import CanonicalKey, canonical_key
from .model import ParseError, from_text, to_text
from .spectral import b_matrix, signed_adjacency

TOOL_NAME = "golden-spectra"
TOOL_VERSION = "0.1.0"


def _lam_fields(lam: LambdaDescriptor) -> list:
    lo, hi = lam.interval
    return [str(lam.factor), f"{lo}..{hi}", f"{lam.approx:.12f}",
            f"mult={lam.multiplicity}"]


def _signed_lines(census: SignedCensus) -> list:
    lines = []
    for n in sorted(census.by_n):
        for m in census.by_n[n]:
            lines.append("\t".join(
                [m.key.hex(), to_text(m.graph), *_lam_fields(m.lam)]))
    return lines


def write_signed_census(census: SignedCensus, path) -> None:
    Path(path).write_text("\n".join(_signed_lines(census)) + "\n", encoding="utf-8")


def write_named_signed(members, path) -> None:
    """Named exceptional members: (name, SignedCensusMember) pairs."""
    lines = []
    for name, m in members:
        lines.append("\t".join(
            [m.key.hex(), name, to_text(m.graph), *_lam_fields(m.lam)]))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_hoffman_census(census: HoffmanCensus, path) -> None:
    lines = []
    for m in census.members:
        lines.append("\t".join(
            [m.key.hex(), m.name, m.special_name, to_text(m.graph),
             *_lam_fields(m.lam)]))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_hoffman_census(path) -> HoffmanCensus:
    """Reparse a census file; every graph is revalidated and its canonical
    key recomputed and checked against the stored one."""
    members = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) < 4:
            raise ParseError(f"census line {lineno}: expected tab-separated fields")
        key_hex, name, special, text = fields[:4]
        graph = from_text(text)
        key = canonical_key(graph)
        if key.hex() != key_hex:
            raise ParseError(
                f"census line {lineno}: stored key does not match the graph")
        members.append(HoffmanCensusMember(
            name, graph, key, special, lambda_descriptor(b_matrix(graph).entries)))
    return HoffmanCensus(tuple(members))


def classification_manifest(result: ClassificationResult) -> dict:
    census = result.signed_census
    return {
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "threshold": census.threshold_name,
        "forbidden": list(census.forbidden),
        "connected": census.connected,
        "max_n": census.max_n,
        "census_counts_per_n": {str(n): len(census.by_n[n])
                                for n in sorted(census.by_n)},
        "exceptional_realizable": [name for name, _ in result.exceptional],
        "exceptional_unrealizable": [to_text(m.graph) for m in result.unrealizable],
        "reducible_realizations": [to_text(g) for g, _, _ in result.reducible],
        "irreducible_count": len(result.irreducible.members),
        "discrepancies": list(result.discrepancies),
    }


def write_manifest(result: ClassificationResult, path) -> None:
    payload = json.dumps(classification_manifest(result), indent=2, sort_keys=True)
    Path(path).write_text(payload + "\n", encoding="utf-8")
