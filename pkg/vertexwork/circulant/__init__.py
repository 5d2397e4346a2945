from .core import (
    CirculantUnitary,
    SymmetryClasses,
    anti_diagonal,
    assemble_matrix,
    dft_matrix,
    eigenvalues_from_generator,
    generator_from_eigenvalues,
    is_unitary,
    mirror_symmetry_residual,
    permutation_residual,
    rotation_commutator_residual,
    rotation_generator,
    symmetry_classify,
    time_reversal_residual,
    unitarity_defect,
)
from .family import (
    CouplingParams,
    closed_form_generator,
    coupling_matrix,
    delta_coupling_matrix,
    delta_generator,
    gamma,
    interpolated_eigenvalues,
    interpolated_generator,
    summed_generator,
)
