from .algebra import (
    BlockConstructionError,
    Module,
    ModuleMap,
    PathAlgebra,
    direct_sum,
    dual_module,
    hom_dim,
    rank_one_algebra,
    wall_algebra,
)
from .catalog import CATALOG_NAMES, Catalog, build_catalog
from .functors import (
    Adjunction,
    ChainComplex,
    ChainMap,
    Functor,
    FunctorComplex,
    Nat,
    RankOneBlock,
    build_rank_one,
    right_transpose,
    transpose,
)

__all__ = [
    "BlockConstructionError",
    "Module",
    "ModuleMap",
    "PathAlgebra",
    "direct_sum",
    "dual_module",
    "hom_dim",
    "rank_one_algebra",
    "wall_algebra",
    "CATALOG_NAMES",
    "Catalog",
    "build_catalog",
    "Adjunction",
    "ChainComplex",
    "ChainMap",
    "Functor",
    "FunctorComplex",
    "Nat",
    "RankOneBlock",
    "build_rank_one",
    "right_transpose",
    "transpose",
]
