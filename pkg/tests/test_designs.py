from __future__ import division, absolute_import, print_function

import os

import pytest

from dswitch.designs import (IncidenceStructure, DesignParams, validate, closure,
                             DifferenceSet, cyclic_plane, line_orbit, oval_companion,
                             singer_identity, gram_profile, gram_witness, all_subsets,
                             affine_plane, parallel_classes, load_design, save_design)
from dswitch.errors import (NotADesign, NotADifferenceSet, NotPlanar, ShapeMismatch,
                            FormatError, IndexOutOfRange)


def test_printed_designs(fano, ag22, gm6, wqh6, ah6):
    assert validate(fano) == DesignParams(3, 1)
    assert validate(ag22) == DesignParams(3, 1)
    assert validate(gm6) == DesignParams(10, 4)
    assert validate(wqh6) == DesignParams(4, 1)
    assert validate(ah6) == DesignParams(7, 3)
    assert validate(fano).to_json() == {'r': 3, 'lambda': 1}


def test_demo_files_match_printed_designs(design_file, fano, ag22, gm6, wqh6, ah6):
    for name, D in (('fano', fano), ('ag22', ag22), ('gm6', gm6),
                    ('wqh6', wqh6), ('ah6', ah6)):
        assert load_design(design_file(name)) == D


def test_not_a_design_names_the_pair():
    D = IncidenceStructure.from_sets(3, [[0, 1]])
    with pytest.raises(NotADesign) as e:
        validate(D)
    assert e.value.witness['pair'] == [0, 2]
    with pytest.raises(NotADesign):
        validate(IncidenceStructure.from_sets(1, [[0]]))


def test_unequal_replication_is_rejected():
    D = IncidenceStructure.from_sets(3, [[0, 1, 2], [0]])
    with pytest.raises(NotADesign) as e:
        validate(D)
    assert e.value.witness['point'] == 1


def test_closure(fano):
    D = closure(fano, add_empty_full=True)
    assert D.b == 9
    assert validate(D) == DesignParams(4, 2)
    D = closure(fano, add_complements=True)
    assert D.b == 14
    assert validate(D) == DesignParams(7, 3)
    assert D.blocks[7][0] == fano.full_mask & ~fano.blocks[0][0]


def test_multiplicities_count():
    rows = [[2, 1, 0], [2, 0, 1], [0, 1, 1]]
    D = IncidenceStructure.from_incidence(rows)
    assert D.mults == (2, 1, 1)
    assert not D.is_simple
    with pytest.raises(FormatError):
        IncidenceStructure.from_incidence([[2, 1], [1, 0]])


def test_json_formats(tmp_path):
    D = IncidenceStructure.from_json({'v': 3, 'blocks': [[0, 1], {'points': [2], 'mult': 2}]})
    assert D.blocks == ((0b011, 1), (0b100, 2))
    filename = os.path.join(str(tmp_path), 'd.json')
    save_design(D, filename)
    assert load_design(filename) == D
    with pytest.raises(FormatError):
        IncidenceStructure.from_json({'v': 3, 'blocks': [[0, 3]]})
    with pytest.raises(FormatError):
        IncidenceStructure.from_json({'v': 3, 'blocks': [[1, 1]]})
    with pytest.raises(FormatError):
        IncidenceStructure.from_json({'blocks': []})


@pytest.mark.parametrize('data', [
    {'v': 3, 'blocks': [{'points': [0, 1], 'mult': True}]},
    {'v': 3, 'blocks': [{'points': [0, 1], 'mult': 0}]},
    {'v': 3, 'blocks': [[False, 1]]},
    {'v': True, 'blocks': []},
])
def test_json_rejects_booleans_and_bad_multiplicities(data):
    with pytest.raises(FormatError):
        IncidenceStructure.from_json(data)


def test_permute_blocks_pairs_by_index(fano):
    pi = [1, 2, 3, 4, 5, 6, 0]
    D = fano.permute_blocks(pi)
    assert D.blocks[0] == fano.blocks[1]
    assert gram_witness(fano, fano) is None
    with pytest.raises(ShapeMismatch):
        fano.permute_blocks([0, 1])


def test_difference_sets():
    ds = DifferenceSet(7, [1, 2, 4])
    assert ds.k == 3 and ds.lambda_ == 1
    with pytest.raises(NotADifferenceSet):
        DifferenceSet(7, [0, 1, 2])
    biplane = DifferenceSet(11, [1, 3, 4, 5, 9])
    assert biplane.lambda_ == 2
    with pytest.raises(NotPlanar):
        cyclic_plane(biplane)


@pytest.mark.parametrize('modulus,residues,q', [
    (7, [1, 2, 4], 2),
    (13, [0, 1, 3, 9], 3),
])
def test_cyclic_planes(modulus, residues, q):
    P = cyclic_plane(DifferenceSet(modulus, residues))
    assert validate(P) == DesignParams(q + 1, 1)
    assert singer_identity(P)
    L = line_orbit(P, 0)
    O = oval_companion(P, 0)
    assert gram_profile(L, O)
    assert L != O
    assert validate(O) == DesignParams(q + 1, 1)


def test_cyclic_plane_checks_shape():
    P = cyclic_plane(DifferenceSet(7, [1, 2, 4]))
    with pytest.raises(IndexOutOfRange):
        line_orbit(P, 7)
    with pytest.raises(NotPlanar):
        singer_identity(IncidenceStructure.from_sets(3, [[0], [1]]))


def test_affine_plane_of_order_three():
    D = affine_plane(3)
    assert D.b == 12
    assert validate(D) == DesignParams(4, 1)
    classes = parallel_classes(D)
    assert len(classes) == 4
    assert all(len(c) == 3 for c in classes)
    with pytest.raises(ShapeMismatch):
        affine_plane(4)


def test_all_subsets():
    D = all_subsets(6, 3)
    assert D.b == 20
    assert validate(D) == DesignParams(10, 4)
