"""Validate a hypalg installation."""
import sys
from pathlib import Path

from dotenv import load_dotenv


def check_files():
    """Check the package layout is complete."""
    required_files = [
        "hypalg/config.py",
        "hypalg/cli.py",
        "hypalg/main.py",
        "hypalg/services/algebra/quaternion.py",
        "hypalg/services/algebra/octonion.py",
        "hypalg/services/bridge/matrix_bridge.py",
        "hypalg/services/groups/group_lab.py",
        "hypalg/services/verification.py",
    ]

    missing = [f for f in required_files if not Path(f).exists()]
    if missing:
        print(" Missing files:")
        for f in missing:
            print(f"   - {f}")
        return False

    print(" All required files present")
    return True


def check_imports():
    """Check the numeric stack and the entry points import."""
    try:
        import numpy  # noqa: F401
        import scipy.linalg  # noqa: F401

        from hypalg.cli import run  # noqa: F401
        from hypalg.main import app  # noqa: F401
        print(" All imports successful")
        return True
    except ImportError as e:
        print(f" Import error: {e}")
        return False


def check_products():
    """Multiply a few units and compare against the table."""
    try:
        from hypalg.services.workbench import AlgebraWorkbench

        bench = AlgebraWorkbench()
        checks = [
            (bench.multiply(["e1", "e2"]).product, "e3"),
            (bench.multiply(["e5", "e6", "e3"], octonion=True).product, "1"),
            (bench.multiply(["e1", "e2", "e4"], octonion=True, group_left=False).product, "-e7"),
        ]
        for got, expected in checks:
            if got != expected:
                print(f" Product mismatch: got {got}, expected {expected}")
                return False
        print(" Unit products agree with the multiplication tables")
        return True
    except Exception as e:
        print(f" Product check error: {e}")
        return False


def check_env():
    """Check environment overrides parse."""
    load_dotenv()
    try:
        from hypalg.config import Settings

        settings = Settings.from_env()
    except ValueError as e:
        print(f" Invalid HYPALG_* setting: {e}")
        return False

    print(f" Settings loaded (seed {settings.HYPALG_SEED})")
    return True


if __name__ == "__main__":
    print("--- hypalg Installation Validation ---")
    results = [
        check_files(),
        check_imports(),
        check_products(),
        check_env(),
    ]

    if all(results):
        print("\n Installation looks solid!")
    else:
        print("\n  Some checks failed. Please review the output above.")
        sys.exit(1)
