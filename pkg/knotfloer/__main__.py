"""Entry point for running knotfloer as a module: python -m knotfloer"""

from .cli import main

if __name__ == "__main__":
    main()
