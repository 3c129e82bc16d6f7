import json

import numpy as np
import pytest

from chemgen import qubit
from chemgen.cli import main as cli_main
from chemgen.generate import (
    PRESETS,
    MoleculeSpec,
    TemplateError,
    check_template,
    generate,
    template_words,
)
from chemgen.scf import rhf


def test_presets_match_published_grids():
    assert PRESETS["h2"].points == 54 and PRESETS["h2"].grid_min == 0.25
    assert PRESETS["lih"].points == 50 and PRESETS["lih"].grid_max == 5.0
    assert PRESETS["hehp"].points == 30 and PRESETS["hehp"].n_qubits == 4


def test_template_sets():
    assert template_words("H2") == {"II", "ZI", "IZ", "ZZ", "XX", "YY"}
    lih = template_words("LiH")
    assert "XXI" in lih and "YIY" in lih and "ZZI" in lih and "XYZ" not in lih
    hehp = template_words("HeH+")
    assert {"XZXI", "IYZY", "XXYY", "ZYZY"} <= hehp
    assert "XXXX" not in hehp


def test_check_template_lists_unexpected_terms():
    with pytest.raises(TemplateError, match="XYI"):
        check_template("LiH", {"III": 1.0, "XYI": 0.2})


def test_h2_point_matches_full_diagonalization():
    spec = MoleculeSpec("H2", "STO-3G", "bravyi_kitaev", 2, 1.4, 1.5, 2)
    doc = generate(spec, None)
    terms = {t["pauli"]: t["coeff"] for t in doc["points"][0]["terms"]}
    op = {w: complex(c) for w, c in terms.items()}
    ground = np.linalg.eigvalsh(qubit.dense(op, 2))[0]
    # tapered two-qubit ground state equals the full configuration
    # interaction energy of the four-spin-orbital problem
    assert abs(ground - (-1.1372758726823964)) < 1e-9
    vecs = np.linalg.eigh(qubit.dense(op, 2).real)[1]
    g = vecs[:, 0]
    assert abs(g[0]) < 1e-8 and abs(g[3]) < 1e-8
    assert abs(g[1]) > abs(g[2])


def test_hehp_reference_diagonal_is_scf_energy():
    spec = MoleculeSpec("HeH+", "STO-3G", "jordan_wigner", 4, 1.4632, 1.5, 2)
    doc = generate(spec, None)
    terms = {t["pauli"]: complex(t["coeff"]) for t in doc["points"][0]["terms"]}
    mat = qubit.dense(terms, 4).real
    scf = rhf([("He", (0, 0, 0)), ("H", (0, 0, 1.4632))], "STO-3G", charge=1)
    hf = int("0011", 2)
    assert abs(mat[hf, hf] - scf.energy) < 1e-10


def test_lih_pair_energy_upper_bounds_scf_correlation():
    spec = MoleculeSpec("LiH", "STO-6G", "paired", 3, 3.0, 3.2, 2)
    doc = generate(spec, None)
    terms = {t["pauli"]: complex(t["coeff"]) for t in doc["points"][0]["terms"]}
    mat = qubit.dense(terms, 3).real
    scf = rhf([("Li", (0, 0, 0)), ("H", (0, 0, 3.0))], "STO-6G")
    one_pair = [i for i in range(8) if bin(i).count("1") == 1]
    block = mat[np.ix_(one_pair, one_pair)]
    pair_ground = np.linalg.eigvalsh(block)[0]
    assert pair_ground <= scf.energy + 1e-10  # doubly-occupied CI includes the SCF determinant
    hf = int("001", 2)
    assert abs(mat[hf, hf] - scf.energy) < 1e-10


def test_generated_files_are_sorted_and_loadable_json(tmp_path):
    spec = MoleculeSpec("H2", "STO-3G", "bravyi_kitaev", 2, 0.5, 1.5, 5)
    path = tmp_path / "h2_small.json"
    generate(spec, path)
    doc = json.loads(path.read_text())
    lams = [p["lambda"] for p in doc["points"]]
    assert lams == sorted(lams) and len(lams) == 5
    assert doc["n_qubits"] == 2 and doc["parameter_name"] == "bond_length_au"


def test_cli_generate_and_overrides(tmp_path):
    out = tmp_path / "hehp.json"
    code = cli_main(["--molecule", "hehp", "--out", str(out), "--points", "5",
                     "--grid-min", "1.0", "--grid-max", "2.0"])
    assert code == 0
    doc = json.loads(out.read_text())
    assert len(doc["points"]) == 5
    for point in doc["points"]:
        check_template("HeH+", {t["pauli"]: t["coeff"] for t in point["terms"]})
