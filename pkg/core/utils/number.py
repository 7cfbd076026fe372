from core.settings import Config


def format_full(number: float) -> str:
    return format(number, f".{Config.FULL_PRECISION}g")


def format_value(number: float, full: bool = False) -> str:
    if full:
        return format_full(number)

    formatted = f"{number:.{Config.DISPLAY_PRECISION}f}"
    # avoid printing "-0.0000" for clamped round-off
    if formatted.startswith("-") and float(formatted) == 0:
        return formatted[1:]
    return formatted
