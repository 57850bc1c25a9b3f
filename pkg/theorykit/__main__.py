"""`python -m theorykit`."""

from theorykit.cli import main

if __name__ == "__main__":
    main()
