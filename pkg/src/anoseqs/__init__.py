"""Desk-scale safe-RL laboratory.

Two-phase pipeline: train a source agent to collect safe state sequences,
fit a transformer autoencoder to those sequences, then train a risk-averse
TD3 policy in a target environment by penalizing anomalous state windows.
"""

__version__ = "0.1.0"
