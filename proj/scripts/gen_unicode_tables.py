#!/usr/bin/env python3
"""Regenerates core/src/unicode_tables.inc.

Emits sorted, inclusive codepoint ranges for the Unicode general categories
the tokenizer and lexers classify against: L* (letters), N* (numbers), and
the White_Space property. Run from the repo root after a Unicode data update:

    python3 scripts/gen_unicode_tables.py
"""
import sys
import unicodedata
from pathlib import Path

MAX_CP = 0x110000


def ranges_for(predicate):
    out = []
    start = None
    for cp in range(MAX_CP):
        if predicate(cp):
            if start is None:
                start = cp
        elif start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


# White_Space is a property, not a general category; PropList.txt summarized.
WHITESPACE = sorted(
    list(range(0x09, 0x0E)) + [0x20, 0x85, 0xA0, 0x1680]
    + list(range(0x2000, 0x200B)) + [0x2028, 0x2029, 0x202F, 0x205F, 0x3000]
)


def main():
    letters = ranges_for(lambda cp: unicodedata.category(chr(cp)).startswith("L"))
    numbers = ranges_for(lambda cp: unicodedata.category(chr(cp)).startswith("N"))
    ws = []
    start = prev = None
    for cp in WHITESPACE:
        if start is None:
            start = prev = cp
        elif cp == prev + 1:
            prev = cp
        else:
            ws.append((start, prev))
            start = prev = cp
    ws.append((start, prev))

    out = Path(__file__).resolve().parent.parent / "core" / "src" / "unicode_tables.inc"
    with open(out, "w") as f:
        f.write("// Generated by scripts/gen_unicode_tables.py (Unicode data from the\n")
        f.write("// running Python's unicodedata, version %s). Do not edit.\n"
                % unicodedata.unidata_version)
        for name, table in (("kLetterRanges", letters),
                            ("kNumberRanges", numbers),
                            ("kWhitespaceRanges", ws)):
            f.write("inline constexpr CodepointRange %s[] = {\n" % name)
            for lo, hi in table:
                f.write("    {0x%X, 0x%X},\n" % (lo, hi))
            f.write("};\n")
    print("wrote %s (%d letter ranges, %d number ranges)"
          % (out, len(letters), len(numbers)))


if __name__ == "__main__":
    sys.exit(main())
