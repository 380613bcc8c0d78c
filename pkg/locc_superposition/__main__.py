"""Allow ``python -m locc_superposition``"""

from .cli import main

if __name__ == "__main__":
    main()
