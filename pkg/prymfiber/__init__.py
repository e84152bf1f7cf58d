"""prymfiber - combinatorics of Prym and spin curve fibers over stable curves."""
