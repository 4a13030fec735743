"""Total-energy landscape: branches, exact minimisation and E(L) checks."""
