"""Collective optimization of variational quantum eigensolver families.

A snake (active contour) couples the parameter vectors of many related
Hamiltonians so they are optimized together; the package also provides
the dense statevector simulator, coupled-cluster style ansatzes with
shift-rule gradients, brute-force oracles, classical benchmark families,
and the plain gradient-descent baseline.
"""

from .ansatz import Ansatz, AnsatzGate, builtin, energy_at, gradient, gradient_fd, load_ansatz, prepare
from .objectives import (
    ObjectiveFamily,
    QuadraticFamily,
    STFamily,
    VQEFamily,
    st_gradient,
    st_minima,
    st_value,
)
from .optimizers import (
    RunResult,
    SnakeConfig,
    SnakeState,
    StiffnessMatrix,
    build_A,
    gd_run,
    gd_step,
    internal_energy,
    snake_run,
    snake_step,
)
from .oracle import DenseHermitian, dense_matrix, grid_local_minima, grid_scan_min, ground_energy
from .pauli import (
    Hamiltonian,
    HamiltonianFamily,
    PauliString,
    h2_point,
    load_family,
    parse_pauli_string,
    save_family,
    synth_h2_family,
)
from .statevector import (
    StateVector,
    apply_circuit,
    apply_gate,
    apply_pauli,
    apply_pauli_exponential,
    basis_state,
    energy,
    expectation,
    pauli_exponential_circuit,
)

__version__ = "0.1.0"
