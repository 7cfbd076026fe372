import re
import unicodedata


ESCAPE_PATTERN = re.compile(r"([\\(),])")
UNESCAPE_PATTERN = re.compile(r"\\(.)")

PAIR_OPEN, PAIR_CLOSE, PAIR_SEPARATOR = "(", ")", ","


def normalize_label(label: str) -> str:
    return unicodedata.normalize("NFC", label)


def escape_component(label: str) -> str:
    return ESCAPE_PATTERN.sub(r"\\\1", label)


def unescape_component(label: str) -> str:
    return UNESCAPE_PATTERN.sub(r"\1", label)


def encode_pair(left: str, right: str) -> str:
    """
    Serialize a pair label as ``(left,right)``.
    Backslashes, parentheses and commas inside the components are escaped,
    so pairs of pairs decode unambiguously.

    :param left: label of the first variable
    :param right: label of the second variable
    :return: the pair label
    """
    return (
        f"{PAIR_OPEN}{escape_component(left)}{PAIR_SEPARATOR}"
        f"{escape_component(right)}{PAIR_CLOSE}"
    )


def decode_pair(label: str) -> tuple[str, str]:
    if not (label.startswith(PAIR_OPEN) and label.endswith(PAIR_CLOSE)):
        raise ValueError(f"Not a pair label: {label!r}")

    body = label[1:-1]
    escaped = False
    for position, char in enumerate(body):
        if escaped:
            escaped = False
        elif char == "\\":
            escaped = True
        elif char == PAIR_SEPARATOR:
            return (
                unescape_component(body[:position]),
                unescape_component(body[position + 1 :]),
            )

    raise ValueError(f"Pair label without separator: {label!r}")
