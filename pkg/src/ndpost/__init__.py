"""Natural-deduction workbench: checking, raa postponement, Glivenko embeddings."""
