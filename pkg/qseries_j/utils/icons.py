"""Cross-platform status icons for the qseries-j console output."""

import sys

# Uses symbols on Unix systems, text brackets on Windows for console compatibility
ICONS = {
    "check": "✓" if sys.platform != "win32" else "[OK]",
    "error": "✗" if sys.platform != "win32" else "[FAIL]",
    "warning": "⚠️" if sys.platform != "win32" else "[WARNING]",
}
