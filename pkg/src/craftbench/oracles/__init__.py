from craftbench.oracles.brute import sat_bf, x3c_bf
from craftbench.oracles.budget import BudgetExceeded
from craftbench.oracles.decomposition import Shape, mspd_exact
from craftbench.oracles.embedding import EmbeddingWitness, Relation, embed_bf, verify_embedding
from craftbench.oracles.intervalize import intervalize_exact

__all__ = ["BudgetExceeded", "EmbeddingWitness", "Relation", "Shape", "embed_bf",
           "intervalize_exact", "mspd_exact", "sat_bf", "verify_embedding", "x3c_bf"]
