"""Cyclic-group-extended oscillator algebras: truncated Fock representations,
spectra, and bosonized supersymmetry variants."""

__version__ = "0.1.0"

from .algebra import (
    AlgebraParams,
    FockConditionViolated,
    KappaParams,
    NotRealResult,
    alpha_to_kappa,
    energy,
    kappa_params,
    kappa_to_alpha,
    level_energies,
    new_params,
    solve_structure_function,
    structure_function,
)
from .fock import (
    DegreeTooLarge,
    FockRep,
    RelationEntry,
    RelationReport,
    WitnessEntry,
    build,
    check_defining_relations,
    h0,
    h0_closed,
    interior,
    restricted_norm,
)
from .ossqm import (
    ConstraintViolated,
    Mu2Infeasible,
    NotSupported,
    OssqmParams,
    OssqmSpectrum,
    build_ossqm,
    ossqm_spectral_check,
    verify_ossqm,
)
from .pseudossqm import (
    InadmissibleParams,
    PseudoParams,
    build_pseudo_type1,
    build_pseudo_type2,
    coincidence_with_pssqm,
    equal_spacing_condition,
    find_ground_transition,
    spectrum_gaps,
    verify_pseudo,
)
from .pssqm import (
    PssqmSolution,
    SearchInconclusive,
    build_pssqm,
    charge_direction_count,
    r_offset,
    search_ansatz,
    verify_bd_cubic,
    verify_pssqm,
)
from .runner import RunConfig, RunResult, UsageError, run
from .spectra import (
    DegeneracyClass,
    FoldAbove,
    Level,
    Mixed,
    Nondegenerate,
    Pattern,
    ScanPoint,
    SpectrumReport,
    classify_degeneracy,
    group_classes,
    level_class_multiplicities,
    scan_grid,
    spectrum,
)
from .ssqm import build_ssqm, verify_sqm2
from .susy import (
    GroundState,
    SusyModel,
    WrongLambda,
    anticommutator,
    commutator,
    distinct_interior_energies,
    ground_state_analysis,
    hamiltonian_from_coeffs,
    interior_eigenvalues,
    level_classes,
)

__all__ = [name for name in dir() if not name.startswith("_")]
