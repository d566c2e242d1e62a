"""qarena: tabular Q-learning agents, weakened snapshots, and tournaments
for three solved board games (Tic-Tac-Toe, Nine Men's Morris, Mancala)."""

__version__ = "0.1.0"
