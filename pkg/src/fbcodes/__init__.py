"""Coding workbench for the AWGN channel with (noisy) output feedback.

Implements the Deepcode family of RNN feedback codes (trained from scratch
on a built-in reverse-mode autodiff engine), the classical
Schalkwijk-Kailath and Chance-Love feedback baselines, feedforward
convolutional/turbo baselines, and a deterministic Monte Carlo
evaluation harness.
"""

__version__ = "0.1.0"
