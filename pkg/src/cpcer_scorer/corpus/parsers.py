"""Transcript file parsers.

Three formats are understood, all UTF-8:

* TSV, one segment per LF-terminated line::

      session<TAB>speaker<TAB>start_ms<TAB>end_ms<TAB>text

  ``#`` lines are comments and a leading header line equal to
  ``TSV_HEADER`` is skipped.
* JSON, an array of ``{"session", "speaker", "start_ms", "end_ms", "text"}``
  objects.
* Session text, one session per line, speakers separated by ``$``::

      S1 你好$我很好

  Speakers are numbered ``1``, ``2``, ... in line order and carry no times.
"""

import codecs
import json
import re
from typing import Any, Callable, Dict, List, Set

from pydantic import ValidationError

from ..models import InputFormat, ParseError, Segment

TSV_HEADER = "session\tspeaker\tstart\tend\ttext"
JSON_KEYS = ("session", "speaker", "start_ms", "end_ms", "text")
SPEAKER_SEPARATOR = "$"

_UINT_RE = re.compile(r"[0-9]+")

Parser = Callable[..., List[Segment]]


def _describe(error: ValidationError) -> str:
    return "; ".join(item["msg"].removeprefix("Value error, ") for item in error.errors())


def _error_path(error: ValidationError, base: str) -> str:
    loc = error.errors()[0]["loc"] if error.errors() else ()
    return base + "".join(f".{part}" for part in loc)


def _lines(data: bytes, source: str) -> List[str]:
    """Decode LF-separated lines; the last line may lack its LF."""
    if data.startswith(codecs.BOM_UTF8):
        raise ParseError("UTF-8 byte order mark is not allowed", source, "line 1")
    raw_lines = data.split(b"\n")
    if raw_lines and raw_lines[-1] == b"":
        raw_lines.pop()
    lines = []
    for lineno, raw in enumerate(raw_lines, 1):
        try:
            lines.append(raw.decode("utf-8"))
        except UnicodeDecodeError as e:
            raise ParseError(
                f"invalid UTF-8 at column {e.start + 1}", source, f"line {lineno}"
            ) from e
    return lines


def parse_segments_tsv(data: bytes, source: str = "<bytes>") -> List[Segment]:
    """Parse the 5-field TSV transcript format, in file order."""
    segments: List[Segment] = []
    header_allowed = True
    for lineno, line in enumerate(_lines(data, source), 1):
        location = f"line {lineno}"
        if "\r" in line:
            raise ParseError("carriage return found; lines must end with LF only", source, location)
        if line.startswith("#"):
            continue
        if header_allowed and line == TSV_HEADER:
            header_allowed = False
            continue
        header_allowed = False

        fields = line.split("\t")
        if len(fields) != 5:
            raise ParseError(
                f"expected 5 tab-separated fields, got {len(fields)}", source, location
            )
        session_id, speaker_id, start, end, text = fields
        for name, value in (("start", start), ("end", end)):
            if not _UINT_RE.fullmatch(value):
                raise ParseError(
                    f"{name} {value!r} is not a non-negative base-10 integer", source, location
                )
        try:
            start_ms, end_ms = int(start), int(end)
        except ValueError as e:
            raise ParseError("start or end has too many digits", source, location) from e
        try:
            segments.append(
                Segment(
                    session_id=session_id,
                    speaker_id=speaker_id,
                    start=start_ms,
                    end=end_ms,
                    text=text,
                )
            )
        except ValidationError as e:
            raise ParseError(_describe(e), source, location) from e
    return segments


def parse_segments_json(data: bytes, source: str = "<bytes>") -> List[Segment]:
    """Parse a JSON array of segment objects, in array order."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"invalid UTF-8: {e.reason}", source, f"byte {e.start}") from e
    if not text.strip():
        return []
    try:
        payload: Any = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, source, f"line {e.lineno} column {e.colno}") from e
    except RecursionError as e:
        raise ParseError("arrays or objects nested too deeply", source, "$") from e
    except ValueError as e:
        raise ParseError(f"unreadable number: {e}", source, "$") from e

    if not isinstance(payload, list):
        raise ParseError("top-level value must be an array", source, "$")

    segments: List[Segment] = []
    for index, item in enumerate(payload):
        path = f"$[{index}]"
        if not isinstance(item, dict):
            raise ParseError("expected an object", source, path)
        missing = [key for key in JSON_KEYS if key not in item]
        if missing:
            raise ParseError(f"missing keys: {', '.join(missing)}", source, path)
        try:
            segments.append(Segment.model_validate(item))
        except ValidationError as e:
            raise ParseError(_describe(e), source, _error_path(e, path)) from e
    return segments


def parse_segments_text(data: bytes, source: str = "<bytes>") -> List[Segment]:
    """Parse one-session-per-line text with ``$``-separated speakers."""
    segments: List[Segment] = []
    seen: Set[str] = set()
    for lineno, line in enumerate(_lines(data, source), 1):
        location = f"line {lineno}"
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise ParseError("expected '<session> <transcript>'", source, location)
        session_id, transcript = parts
        if session_id in seen:
            raise ParseError(f"session {session_id!r} appears twice", source, location)
        seen.add(session_id)
        for position, chunk in enumerate(transcript.split(SPEAKER_SEPARATOR), 1):
            try:
                segments.append(
                    Segment(
                        session_id=session_id,
                        speaker_id=str(position),
                        start=0,
                        end=0,
                        text=chunk.strip(),
                    )
                )
            except ValidationError as e:
                raise ParseError(_describe(e), source, location) from e
    return segments


def write_segments_tsv(segments: List[Segment], header: bool = True) -> bytes:
    """Serialize segments in the TSV format ``parse_segments_tsv`` reads."""
    lines = [TSV_HEADER] if header else []
    for seg in segments:
        if any(ch in seg.text for ch in "\t\r\n"):
            raise ValueError(
                f"segment text of {seg.session_id}/{seg.speaker_id} contains a tab or line break"
            )
        lines.append(f"{seg.session_id}\t{seg.speaker_id}\t{seg.start}\t{seg.end}\t{seg.text}")
    return "".join(f"{line}\n" for line in lines).encode("utf-8")


PARSERS: Dict[InputFormat, Parser] = {
    InputFormat.TSV: parse_segments_tsv,
    InputFormat.JSON: parse_segments_json,
    InputFormat.TEXT: parse_segments_text,
}
