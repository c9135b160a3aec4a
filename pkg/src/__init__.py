"""gradedSpectrumWorkbench - Graded pseudo weakly prime spectra of finite graded modules"""

__version__ = "0.1.0"
