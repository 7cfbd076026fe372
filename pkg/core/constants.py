IDENTITY_TOLERANCE = 1e-9
CLAMP_TOLERANCE = 1e-12

NA_LABEL = "<NA>"
IDENTITY_NAME = "Φ"
IDENTITY_LABEL = "φ"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
