"""Colocal-type monomial algebras and their lattices of subobject-closed
subcategories, computed two independent ways."""

from .analysis import (AnalysisReport, MainTheoremResult, PartitionReport,
                       RouteDisagreement, TauReport, TauSets,
                       VerificationError, analyze, brute_force_lattice,
                       check_union_property, structural_lattice,
                       structural_size, tau_by_paths, tau_sets,
                       verify_main_theorem, verify_partition_M,
                       verify_tau_equivalences)
from .lattice import (DownsetLattice, FiniteLattice, FinitePoset,
                      LatticeError, ProductLattice, TableLattice,
                      are_isomorphic, downset_lattice, is_distributive,
                      is_frame, join_irreducibles, to_dot)
from .quiver import (Arrow, ConditionReport, PreconditionError, QuiverAlgebra,
                     QuiverError, QuiverSyntaxError, check_admissible,
                     check_C1, check_C2, check_C3, ext1_matrix,
                     has_kronecker_subquiver, is_colocal_by_conditions,
                     is_colocal_type_structural, is_string_algebra,
                     load_quiver, parse_quiver_spec, path_profiles,
                     vertex_path_profile)
from .strings import (InfiniteStringsError, StringWord, canonical_string,
                      detect_bands, enumerate_strings, is_submodule,
                      parse_string, string_module, submodule_poset)
from .young import Partition, YoungLattice, partitions_in_box, young_box_lattice

__version__ = "0.1.0"
