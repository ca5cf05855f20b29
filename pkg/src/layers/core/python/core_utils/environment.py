# -*- coding: utf-8 -*-
"""
Process level settings read from the environment.
"""
import os

ENVIRONMENT = os.environ.get("ENVIRONMENT")
DEVELOPER = os.environ.get("DEVELOPER")
LOG_LEVEL = os.environ.get("LOG_LEVEL", "2")
DEFAULT_SEED = int(os.environ.get("BFT_GAME_SEED", "20240101"))
WORKERS = max(1, int(os.environ.get("BFT_GAME_WORKERS", "1")))
EXACT_BOUND = int(os.environ.get("BFT_GAME_EXACT_BOUND", "12"))
DEFAULT_TRIALS = int(os.environ.get("BFT_GAME_TRIALS", "10000"))
