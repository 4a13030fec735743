"""Cut-ring mode spectrum and mode-sum oracles."""
