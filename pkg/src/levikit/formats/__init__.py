"""
File formats for levikit.
"""

from .codec import (
    canonical_json,
    content_sha256,
    dump_algebra,
    dump_certificate,
    dump_family,
    dump_grading,
    dump_split,
    format_rational,
    parse_algebra,
    parse_certificate,
    parse_family,
    parse_grading,
    parse_rational,
    parse_split,
    read_algebra,
    read_certificate,
    write_algebra,
    write_certificate,
    write_family,
    write_grading,
    write_split,
)

__all__ = [
    "canonical_json",
    "content_sha256",
    "dump_algebra",
    "dump_certificate",
    "dump_family",
    "dump_grading",
    "dump_split",
    "format_rational",
    "parse_algebra",
    "parse_certificate",
    "parse_family",
    "parse_grading",
    "parse_rational",
    "parse_split",
    "read_algebra",
    "read_certificate",
    "write_algebra",
    "write_certificate",
    "write_family",
    "write_grading",
    "write_split",
]
