"""Figure-rendering front end for eitcool CSV outputs."""

from .render import Dataset, PlotSpec, RenderError, load_spec, read_dataset, render

__version__ = "0.1.0"
