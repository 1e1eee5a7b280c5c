"""scaleflat: exact flatness checking for second-order PDE systems
under lifted scale transformations, with a numeric model-space module."""

__version__ = "0.1.0"
