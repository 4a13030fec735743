"""Structure function, Green functions and point-split densities of the cut ring."""
