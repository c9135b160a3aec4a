"""Test suite for gradedSpectrumWorkbench."""
