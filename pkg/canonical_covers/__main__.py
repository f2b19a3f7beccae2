"""Entry point for running canonical-covers as a module."""

from .cli import main

if __name__ == "__main__":
    main()
