from craftbench.reductions.icg5 import Icg5Map, build_icg5_witness, ovc_to_icg5
from craftbench.reductions.mspd import MspdMap, build_mspd_witness, ovc_to_mspd
from craftbench.reductions.sat_sc import (
    DecodeError,
    SatScMap,
    complement_to_ovc,
    decode_assignment,
    encode_assignment,
    sat_to_sc,
)
from craftbench.reductions.subgraph import (
    PreconditionError,
    SubgraphMap,
    Variant,
    decode_perm_from_embedding,
    encode_embedding,
    sc_to_subgraph,
)
from craftbench.reductions.x3c import X3cMap, build_icg_witness_x3c, x3c_to_icg

__all__ = [
    "DecodeError", "Icg5Map", "MspdMap", "PreconditionError", "SatScMap", "SubgraphMap",
    "Variant", "X3cMap", "build_icg5_witness", "build_icg_witness_x3c", "build_mspd_witness",
    "complement_to_ovc", "decode_assignment", "decode_perm_from_embedding", "encode_assignment",
    "encode_embedding", "ovc_to_icg5", "ovc_to_mspd", "sat_to_sc", "sc_to_subgraph", "x3c_to_icg",
]
