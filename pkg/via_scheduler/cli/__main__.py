"""Allow running as python -m via_scheduler.cli"""
from . import main

if __name__ == "__main__":
    main()
