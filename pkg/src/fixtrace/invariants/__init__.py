from .geometric import (FixedPointReport, GeomCheck, check_vertex_fixed_points, fixed_point_indices,
                        geomcheck, geometric_reidemeister)
from .index import (EmbeddingData, IndexResult, default_epsilon, fixed_point_index, index_with_diagnostic,
                    realized_map, retraction)
from .lefschetz import homology_traces, lefschetz_chain, lefschetz_homological
from .reidemeister import (AbelianClassSet, BoundedClassSet, FiniteClassSet, LiftedSelfMap,
                           ReidemeisterClassSet, TraceValue, lift_self_map, nielsen_lower_bound,
                           raw_reidemeister_trace, reidemeister_classes, reidemeister_trace)
