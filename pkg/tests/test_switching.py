from __future__ import division, absolute_import, print_function

import os

import pytest

from dswitch.catalog import make, plant_site, gm_matrix, prop51_ac, new8_irreducible_ac
from dswitch.catalog import data
from dswitch.core import RatMatrix
from dswitch.designs import IncidenceStructure, closure
from dswitch.errors import (ParamMismatch, GramMismatch, RLambdaDegenerate,
                            IntersectionNotPreserved, NotRegularOrthogonal, SiteInvalid,
                            SizeMismatch, SizeTooLarge, FormatError, SourceMissing,
                            InvariantViolation)
from dswitch.graph import Graph
from dswitch.helper import parse_cycles, mask_to_points
from dswitch.switching import (SwitchingScheme, SwitchSite, compatible_vectors, derive_R,
                               derive_R_perm, verify_site, apply_switch, conjugate_ac,
                               conjugated, cospectral, r_cospectral, compatible_ac,
                               design_realizable, equivalent, r_automorphisms,
                               load_scheme, save_scheme)

PROPERTY_IDS = ['GM(4)', 'GM(6)', 'GM(4+4)', 'WQH(3)', 'WQH(4)', 'AH(6)',
                'Fano', 'Cube', 'New7', 'New8', 'Prop51']

INVOLUTIONS = ['GM(4)', 'GM(6)', 'GM(4+4)', 'WQH(3)', 'WQH(4)']


def star_and_square():
    star = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    square = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    return star, square


def test_permuted_ag22_gives_gm4(ag22):
    scheme = derive_R_perm(ag22, parse_cycles(data.AG22_PERM, ag22.b))
    assert scheme.R == gm_matrix(4)
    assert scheme.level == 2
    assert scheme.is_involution()
    assert scheme.provenance['kind'] == 'permuted-design'
    assert scheme.provenance['perm'] == data.AG22_PERM


def test_derive_from_two_designs(ag22):
    pi = parse_cycles(data.AG22_PERM, ag22.b)
    scheme = derive_R(ag22, ag22.permute_blocks(pi))
    assert scheme.R == gm_matrix(4)
    # every block is sent to its partner
    for (m1, _), (m2, _) in zip(scheme.design.blocks, scheme.partner.blocks):
        assert scheme.image(m1) == m2


def test_identity_permutation_gives_identity(fano):
    scheme = derive_R_perm(fano, list(range(fano.b)))
    assert scheme.is_identity
    assert scheme.level == 1


def test_gm4_compatible_vectors():
    scheme = make('GM(4)').scheme
    vectors = compatible_vectors(scheme)
    assert len(vectors) == 8
    full = 0b1111
    for chi, image in vectors:
        size = len(mask_to_points(chi))
        assert size in (0, 2, 4)
        if size == 2:
            assert image == full & ~chi
        else:
            assert image == chi
    assert scheme.block_table == dict(vectors)


def test_compatible_vectors_are_closed_under_complement():
    scheme = make('Fano(2)').scheme
    table = scheme.block_table
    full = (1 << scheme.v) - 1
    for chi, image in table.items():
        assert table[full & ~chi] == full & ~image
    with pytest.raises(SizeTooLarge):
        compatible_vectors(scheme, max_v=6)


def test_parameter_mismatch(fano):
    with pytest.raises(ParamMismatch):
        derive_R(fano, closure(fano, add_empty_full=True))


def test_gram_mismatch(ag22):
    with pytest.raises(GramMismatch) as e:
        derive_R(ag22, ag22.permute_blocks([1, 0, 2, 3, 4, 5]))
    assert len(e.value.witness) == 2


def test_intersection_not_preserved(gm6):
    with pytest.raises(IntersectionNotPreserved):
        derive_R_perm(gm6, parse_cycles('(1 2)', gm6.b))


def test_degenerate_design():
    D = IncidenceStructure.from_sets(3, [[0, 1, 2]])
    with pytest.raises(RLambdaDegenerate):
        derive_R_perm(D, [0])


def test_scheme_needs_regular_orthogonal_matrix():
    with pytest.raises(NotRegularOrthogonal):
        SwitchingScheme(RatMatrix.ones(3))


def test_scheme_json(tmp_path, fano):
    scheme = derive_R_perm(fano, parse_cycles('(6 7)', fano.b))
    filename = os.path.join(str(tmp_path), 's.json')
    save_scheme(scheme, filename)
    loaded = load_scheme(filename)
    assert loaded.R == scheme.R
    assert loaded.design == fano
    with pytest.raises(FormatError):
        SwitchingScheme.from_json({'v': 2})


def test_equivalent_and_automorphisms():
    R = make('GM(4+4)').scheme.R
    sigma = [4, 5, 6, 7, 0, 1, 2, 3]
    assert equivalent(R, R.permuted(sigma)) is not None
    assert equivalent(R, make('GM(8)').scheme.R) is None
    assert len(r_automorphisms(make('GM(4)').scheme.R)) == 24


def test_verify_site_reports_bad_neighbourhood():
    scheme = make('GM(4)').scheme
    graph = Graph.from_edges(5, [(4, 0)])
    report = verify_site(SwitchSite(graph, [0, 1, 2, 3]), scheme)
    assert report.size_ok and report.ac_ok
    assert not report.ok
    assert report.witness == {'reason': 'neighbourhood', 'vertex': 4, 'chi': [0]}
    with pytest.raises(SiteInvalid):
        apply_switch(SwitchSite(graph, [0, 1, 2, 3]), scheme)


def test_verify_site_reports_size():
    scheme = make('GM(4)').scheme
    report = verify_site(SwitchSite(Graph(5), [0, 1, 2]), scheme)
    assert not report.ok
    assert report.witness['reason'] == 'size'
    assert report.to_json()['ok'] is False


def test_site_members_are_checked():
    with pytest.raises(SiteInvalid):
        SwitchSite(Graph(3), [0, 0])
    with pytest.raises(SiteInvalid):
        SwitchSite(Graph(3), [0, 3])


def test_strict_site_only_accepts_design_blocks(fano):
    scheme = derive_R_perm(fano, parse_cycles('(6 7)', fano.b))
    line = fano.masks[0]
    outside = [p for p in range(7) if not line >> p & 1]
    graph = Graph.from_edges(8, [(7, p) for p in outside])
    site = SwitchSite(graph, range(7))
    assert verify_site(site, scheme).ok
    assert not verify_site(site, scheme, strict=True).ok


def test_strict_site_needs_a_source_design():
    scheme = make('GM(4)').scheme
    site = SwitchSite(Graph(5), range(4))
    assert verify_site(site, scheme).ok
    with pytest.raises(SourceMissing):
        verify_site(site, scheme, strict=True)


def test_conjugate_ac_of_empty_and_complete():
    scheme = make('Prop51').scheme
    assert conjugate_ac(scheme, Graph(6)) == Graph(6)
    assert conjugate_ac(scheme, Graph.complete(6)) == Graph.complete(6)


def test_cospectral_pair_with_different_complements():
    star, square = star_and_square()
    assert cospectral(star, square)
    assert not r_cospectral(star, square)
    with pytest.raises(SizeMismatch):
        cospectral(star, Graph(4))


def test_gm4_switch_and_back():
    entry = make('GM(4)')
    site = plant_site(16, entry, seed=7, moving=True)
    switched = apply_switch(site, entry.scheme)
    assert switched != site.graph
    assert r_cospectral(site.graph, switched)
    back = apply_switch(SwitchSite(switched, site.members), entry.scheme)
    assert back == site.graph


def test_switch_is_checked_against_conjugation(monkeypatch):
    entry = make('GM(4)')
    site = plant_site(12, entry, seed=3, moving=True)
    calls = []

    def unchanged(graph, members, R):
        calls.append(tuple(members))
        return graph.to_matrix()

    monkeypatch.setattr('dswitch.switching.site.conjugated', unchanged)
    with pytest.raises(InvariantViolation):
        apply_switch(site, entry.scheme)
    assert calls == [site.members]


def _check_planted(entry_id, seeds, n_extra=8):
    entry = make(entry_id)
    scheme = entry.scheme
    for seed in seeds:
        site = plant_site(scheme.v + n_extra, entry, seed=seed, moving=True)
        switched = apply_switch(site, scheme)
        assert switched.edge_count == site.graph.edge_count
        assert r_cospectral(site.graph, switched), (entry_id, seed)
        assert conjugated(site.graph, site.members, scheme.R) == switched.to_matrix()
        if entry_id in INVOLUTIONS:
            back = apply_switch(SwitchSite(switched, site.members), scheme)
            assert back == site.graph


@pytest.mark.parametrize('entry_id', PROPERTY_IDS)
def test_planted_sites_switch_to_cospectral_graphs(entry_id):
    _check_planted(entry_id, range(3))


@pytest.mark.slow
@pytest.mark.parametrize('entry_id', PROPERTY_IDS)
def test_planted_sites_many_trials(entry_id):
    v = make(entry_id).scheme.v
    _check_planted(entry_id, range(200), n_extra=30 - v)


def test_plant_site_needs_room():
    with pytest.raises(SizeMismatch):
        plant_site(3, make('GM(4)'))


def test_level5_method_has_three_switching_sets():
    scheme = make('Prop51').scheme
    reps = compatible_ac(scheme, up_to_symmetry=True)
    assert len(reps) == 3
    for ac in prop51_ac():
        assert conjugate_ac(scheme, ac) is not None


def test_compatible_ac_is_sorted_and_closed():
    scheme = make('GM(4)').scheme
    graphs = compatible_ac(scheme)
    assert graphs
    assert Graph(4) in graphs
    assert Graph.complete(4) in graphs
    for g in graphs:
        assert g.complement() in graphs
        assert conjugate_ac(scheme, g) is not None
    limited = compatible_ac(scheme, limit=2)
    assert len(limited) == 4
    for g in limited:
        assert g.complement() in limited
    with pytest.raises(SizeTooLarge):
        compatible_ac(scheme, max_v=3)


@pytest.mark.slow
def test_eight_point_method_switching_sets():
    scheme = make('New8').scheme
    reps = compatible_ac(scheme, up_to_symmetry=True)
    assert len(reps) == 72
    for ac in new8_irreducible_ac():
        assert conjugate_ac(scheme, ac) is not None


@pytest.mark.slow
def test_level5_circulant_switching_sets():
    reps = compatible_ac(make('Level5Circulant').scheme, up_to_symmetry=True)
    assert len(reps) == 98


@pytest.mark.slow
def test_compatible_ac_does_not_depend_on_threads():
    scheme = make('Cube').scheme
    assert compatible_ac(scheme, threads=2) == compatible_ac(scheme)


def test_gm4_is_design_realizable():
    res = design_realizable(make('GM(4)').scheme)
    assert res.feasible
    assert (res.to_json()['r'], res.to_json()['lambda']) == (4, 2)
    assert all(b['mult'] == 1 for b in res.to_json()['blocks'])


def test_wqh6_needs_double_half_blocks():
    res = design_realizable(make('WQH(3)').scheme).to_json()
    assert res['feasible']
    assert res['lambda'] == 6
    assert {b['mult'] for b in res['blocks']} == {1, 2}
    doubled = [b['points'] for b in res['blocks'] if b['mult'] == 2]
    assert len(doubled) == 2
    assert all(len(points) == 3 for points in doubled)


@pytest.mark.parametrize('entry_id', ['AH(6)', 'Fano(2)', 'Fano(3)', 'Fano(4)'])
def test_methods_with_source_designs_are_realizable(entry_id):
    res = design_realizable(make(entry_id).scheme)
    assert res.feasible
    assert all(m >= 1 for m in res.multiplicities)


def test_level5_method_is_not_design_realizable():
    res = design_realizable(make('Prop51').scheme)
    assert not res.feasible
    assert res.to_json()['certificate']
