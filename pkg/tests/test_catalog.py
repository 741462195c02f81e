from __future__ import division, absolute_import, print_function

from fractions import Fraction

import pytest

from dswitch.catalog import (make, list_ids, normalize_id, expected_level, consistency_check,
                             resolve_scheme, counting_identities, gm64_design, gm_design,
                             wqh_design, ah_design, gm_matrix, wqh_matrix, ah_matrix,
                             cube_matrix)
from dswitch.core import RatMatrix, is_regular_orthogonal, is_decomposable
from dswitch.graph import Graph
from dswitch.designs import validate, DesignParams
from dswitch.errors import UnknownId, SourceMissing, FormatError, ShapeMismatch
from dswitch.helper import parse_cycles
from dswitch.switching import derive_R_perm, save_scheme, conjugate_ac

FAST_SOURCES = ['GM(4)', 'GM(6)', 'WQH(3)', 'AH(6)', 'Fano(1)', 'Fano(2)', 'Fano(3)',
                'Fano(4)', 'New7', 'New8', 'WQH(2)', 'AH(8)', 'GM(4+4)']

LEVELS = {
    'GM(4)': 2, 'GM(6)': 3, 'GM(8)': 4, 'GM(4+4)': 2, 'GM(6+4)': 6,
    'WQH(2)': 2, 'WQH(3)': 3, 'WQH(4)': 4, 'WQH(3+3)': 3,
    'AH(6)': 2, 'AH(8)': 2, 'Fano': 2, 'Cube': 2,
    'New7': 4, 'New8': 3, 'Level5Circulant': 5, 'Prop51': 5,
}


def test_normalize_id():
    assert normalize_id('GM(4,4)') == 'GM(4+4)'
    assert normalize_id(' WQH( 3 + 3 ) ') == 'WQH(3+3)'
    assert normalize_id('Level5') == 'Level5Circulant'
    assert normalize_id('AH(06)') == 'AH(6)'
    assert make('GM(4,4)') is make('GM(4+4)')


def test_unknown_ids():
    for entry_id in ('GM(5)', 'WQH(1)', 'AH(5)', 'Fano(5)', 'AG32(15)', 'Petersen', ''):
        with pytest.raises(UnknownId):
            make(entry_id)


@pytest.mark.parametrize('entry_id,expected', sorted(LEVELS.items()))
def test_levels(entry_id, expected):
    entry = make(entry_id)
    assert is_regular_orthogonal(entry.scheme.R)
    assert entry.level == expected
    assert expected_level(entry_id) == expected


def test_every_listed_id_is_regular_orthogonal():
    for entry_id in list_ids():
        entry = make(entry_id)
        assert is_regular_orthogonal(entry.scheme.R), entry_id
        assert entry.to_json()['id'] == entry_id


@pytest.mark.parametrize('entry_id', list_ids())
def test_every_scheme_fixes_empty_and_complete_graphs(entry_id):
    scheme = make(entry_id).scheme
    R, v = scheme.R, scheme.v
    assert R @ R.T == RatMatrix.identity(v)
    assert R @ RatMatrix.ones(v) == RatMatrix.ones(v)
    assert conjugate_ac(scheme, Graph(v)) == Graph(v)
    assert conjugate_ac(scheme, Graph.complete(v)) == Graph.complete(v)


def test_affine_space_levels():
    assert make('AG32(1)').level == 1
    for i in (2, 3, 4, 5, 8, 9):
        assert make(f'AG32({i})').level == 2
    for i in (6, 7, 10, 11, 12, 13, 14):
        assert make(f'AG32({i})').level == 4


@pytest.mark.parametrize('entry_id', FAST_SOURCES)
def test_sources_reproduce_matrices(entry_id):
    assert consistency_check(make(entry_id))


@pytest.mark.slow
@pytest.mark.parametrize('i', range(1, 15))
def test_affine_space_sources(i):
    assert consistency_check(make(f'AG32({i})'))


def test_entries_without_source():
    for entry_id in ('Fano', 'Cube', 'Prop51', 'Level5Circulant'):
        with pytest.raises(SourceMissing):
            consistency_check(make(entry_id))


def test_matrix_families():
    assert gm_matrix(4)[0, 0] == Fraction(-1, 2)
    assert wqh_matrix(3).rows == 6
    assert ah_matrix(3).rows == 6
    assert cube_matrix().rows == 8
    assert not is_decomposable(cube_matrix())
    assert is_decomposable(make('GM(4+4)').scheme.R)
    assert make('WQH(3)').scheme.is_involution()


def test_family_designs():
    D, pi = gm_design([4])
    assert validate(D) == DesignParams(4, 2)
    assert derive_R_perm(D, pi).R == gm_matrix(4)
    D, pi = wqh_design(3)
    assert derive_R_perm(D, pi).R == wqh_matrix(3)
    D, pi = ah_design(3)
    assert derive_R_perm(D, pi).level == 2
    with pytest.raises(ShapeMismatch):
        gm_design([3])


def test_gm64_weighting():
    D = gm64_design()
    assert validate(D) == DesignParams(408, 204)
    assert sum(D.mults) == 816


@pytest.mark.parametrize('c', [2, 3, 4, 5, 6])
def test_counting_identities(c):
    res = counting_identities(c)
    assert res['ok'], res
    assert res['c'] == c
    assert res['wqh_lattice']['count'] == res['wqh_lattice']['formula']


def test_counting_identities_need_two_points():
    with pytest.raises(ShapeMismatch):
        counting_identities(1)


def test_resolve_scheme(tmp_path):
    assert resolve_scheme('GM(4)').R == gm_matrix(4)
    filename = str(tmp_path / 'gm6.json')
    save_scheme(make('GM(6)').scheme, filename)
    assert resolve_scheme(filename).R == gm_matrix(6)
    with pytest.raises(FormatError):
        resolve_scheme('')
    with pytest.raises(UnknownId):
        resolve_scheme(str(tmp_path / 'missing.json'))


def test_entry_json_carries_source():
    res = make('GM(4)').to_json()
    assert res['level'] == 2
    assert res['source']['perm'] == '(1 6)(2 5)(3 4)'
    assert make('Cube').to_json()['source'] is None
    D, perm = make('Fano(2)').source
    assert derive_R_perm(D, parse_cycles(perm, D.b)).level == 2
