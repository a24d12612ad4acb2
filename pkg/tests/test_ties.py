import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from penney_perms.errors import MembershipError, UnsupportedError
from penney_perms.perm_core import Permutation
from penney_perms.ties import (
    Certificate,
    CertificateKind,
    apply_tie_bijection,
    cluster_shapes,
    em_positions,
    inclusion_exclusion_check,
    invert_tie_bijection,
    iotarho_partner,
    is_end_member,
    is_tight_cluster,
    known_certificate,
    mark_blocks,
    marked_bijection,
    no_overlap_j,
    one_k_pair,
    rearrange_tail,
    rhorho_pair,
    skip_two_pair,
    theorem_certificate,
    tie_scan,
    verify_bijection,
)

P = Permutation.parse


def pair(a, b):
    return frozenset({P(a), P(b)})


def test_families():
    assert iotarho_partner(4, 2) == P("1342")
    assert iotarho_partner(3, 2) == P("132")
    assert rhorho_pair(5, 2, 3) == (P("13452"), P("12453"))
    assert skip_two_pair(5) == (P("13524"), P("13425"))
    assert one_k_pair(4) == (P("1423"), P("1324"))
    assert one_k_pair(6, alpha=(3, 2)) == (P("163245"), P("152346"))


@pytest.mark.parametrize(
    "sigma, tau, label",
    [
        ("123", "321", "Complement"),
        ("123", "132", "Iotarho(i=2)"),
        ("4213", "4321", "Iotarho(i=2)"),
        ("4312", "4321", "Iotarho(i=3)"),
        ("1423", "1432", "NoOverlap(j=2)"),
        ("1432", "1342", "NoOverlap(j=1)"),
        ("1423", "1324", "OneKPattern"),
        ("24513", "24531", "NoOverlap(j=2)"),
    ],
)
def test_theorem_certificates(sigma, tau, label):
    certificate = theorem_certificate(P(sigma), P(tau))
    assert certificate is not None
    assert str(certificate) == label


def test_iotarho_certificate_on_complements():
    certificate = theorem_certificate(P("4321"), P("4213"))
    assert certificate.kind == CertificateKind.IOTARHO
    assert certificate.complemented
    assert certificate.iota_first


def test_no_theorem_for_untied_pairs():
    assert theorem_certificate(P("123"), P("231")) is None
    assert theorem_certificate(P("123"), P("1234")) is None
    assert no_overlap_j(P("123"), P("213")) is None


def test_marked_pairs_are_known():
    assert theorem_certificate(P("2134"), P("3241")) is None
    assert known_certificate(P("2134"), P("3241")) == CertificateKind.MARKED_BIJECTION
    assert known_certificate(P("2314"), P("3421")) == CertificateKind.MARKED_BIJECTION
    assert known_certificate(P("1234"), P("4123")) is None


def test_iotarho_bijection_example():
    certificate = theorem_certificate(P("123"), P("132"))
    image = apply_tie_bijection(certificate, P("2134"))
    assert image == P("2143")
    assert invert_tie_bijection(certificate, image) == P("2134")


def test_bijection_rejects_non_members():
    certificate = theorem_certificate(P("123"), P("132"))
    with pytest.raises(MembershipError):
        apply_tie_bijection(certificate, P("1324"))


def test_marked_certificate_has_no_direct_bijection():
    certificate = Certificate(CertificateKind.MARKED_BIJECTION, P("2134"), P("3241"))
    with pytest.raises(UnsupportedError):
        apply_tie_bijection(certificate, P("2134"))
    with pytest.raises(UnsupportedError):
        verify_bijection(P("2134"), P("3241"), 6)


def test_end_membership_and_tail_rearrangement():
    assert is_end_member(P("2134"), P("123"), P("132"))
    assert not is_end_member(P("1234"), P("123"), P("132"))
    assert rearrange_tail((2, 1, 3, 4), P("132")) == (2, 1, 4, 3)


@pytest.mark.parametrize(
    "sigma, tau, n",
    [
        ("123", "132", 7),
        ("132", "123", 7),
        ("321", "312", 7),
        ("213", "231", 7),
        ("1423", "1432", 8),
        ("1432", "1342", 8),
        ("1423", "1324", 8),
        ("1342", "1234", 8),
        ("4213", "4321", 8),
    ],
)
def test_verify_bijection(shared_counter, sigma, tau, n):
    report = verify_bijection(P(sigma), P(tau), n, counter=shared_counter)
    assert report.ok
    assert report.source_size == report.target_size
    assert report.to_json()["kind"] == report.kind.value


def test_em_positions():
    assert em_positions(P("123"), P("321"), (1, 2, 3, 4, 5)) == (1, 2, 3)
    assert em_positions(P("123"), P("321"), (2, 1, 4, 3)) == ()


def test_mark_blocks():
    assert mark_blocks([12, 3, 7, 5, 10]) == [(3, 5, 7), (10, 12)]
    assert mark_blocks([]) == []


def test_cluster_shapes():
    assert cluster_shapes(1) == {
        "alpha1": P("3241"),
        "alpha2": P("2134"),
        "alpha1_prime": P("2314"),
        "alpha2_prime": P("3421"),
    }
    shapes = cluster_shapes(2)
    assert shapes["alpha1"] == P("435261")
    assert shapes["alpha2"] == P("324156")
    assert shapes["alpha1_prime"] == P("342516")
    assert shapes["alpha2_prime"] == P("453621")


@pytest.mark.parametrize("t", [1, 2, 3])
def test_clusters_map_to_clusters(t):
    shapes = cluster_shapes(t)
    marks = tuple(range(1, 2 * t, 2))
    forward, backward = (P("2134"), P("3241")), (P("2314"), P("3421"))
    assert is_tight_cluster(shapes["alpha1"], marks, *forward)
    assert is_tight_cluster(shapes["alpha1_prime"], marks, *backward)
    assert marked_bijection(shapes["alpha1"], marks) == shapes["alpha2_prime"]
    assert marked_bijection(shapes["alpha2"], marks) == shapes["alpha1_prime"]


def test_marked_bijection_example():
    pi = P("7,8,6,5,9,2,11,1,12,13,10,14,4,15,3")
    marks = {3, 5, 7, 10, 12}
    image = marked_bijection(pi, marks)
    assert image == P("7,8,6,9,5,11,2,12,1,13,14,10,15,4,3")
    assert marked_bijection(image, marks, direction="backward") == pi


def test_marked_bijection_rejects_bad_marks():
    with pytest.raises(MembershipError):
        marked_bijection(P("2134"), {2})
    with pytest.raises(MembershipError):
        marked_bijection(P("1234"), {1})


def test_inclusion_exclusion_examples():
    report = inclusion_exclusion_check(4, 2, 4)
    assert report.sigma_count == 1 and report.tau_count == 1
    assert report.holds
    empty = inclusion_exclusion_check(4, 1, 1)
    assert empty.sigma_count == 0 and empty.tau_count == 0


def test_inclusion_exclusion_all_endpoints():
    n = 7
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            assert inclusion_exclusion_check(n, a, b).holds


def test_length_three_ties(shared_counter):
    found = tie_scan(3, 10, shared_counter)
    assert {tie.pair for tie in found} == {
        pair("123", "132"),
        pair("321", "312"),
        pair("123", "321"),
        pair("132", "312"),
        pair("213", "231"),
    }
    assert all(tie.kind != CertificateKind.COUNTS_ONLY for tie in found)
    assert found[0].to_json()["N"] == 10


LENGTH_FOUR_TIES = {
    CertificateKind.ONE_K_PATTERN: [("1423", "1324"), ("4132", "4231")],
    CertificateKind.NO_OVERLAP: [
        ("1423", "1432"),
        ("1324", "1342"),
        ("2143", "2134"),
        ("2431", "2413"),
        ("4132", "4123"),
        ("4231", "4213"),
        ("3412", "3421"),
        ("3124", "3142"),
        ("1432", "1342"),
        ("1342", "1243"),
        ("2341", "2431"),
        ("4123", "4213"),
        ("4213", "4312"),
        ("3214", "3124"),
    ],
    CertificateKind.IOTARHO: [
        ("1342", "1234"),
        ("1234", "1243"),
        ("4213", "4321"),
        ("4312", "4321"),
    ],
    CertificateKind.MARKED_BIJECTION: [("2134", "3241"), ("3421", "2314")],
}


@pytest.mark.slow
def test_length_four_ties(shared_counter):
    found = {tie.pair: tie.kind for tie in tie_scan(4, 11, shared_counter)}
    for kind, pairs in LENGTH_FOUR_TIES.items():
        for a, b in pairs:
            assert found[pair(a, b)] == kind
    complements = [tie for tie, kind in found.items() if kind == CertificateKind.COMPLEMENT]
    assert len(complements) == 12
    assert len(found) == 12 + sum(len(pairs) for pairs in LENGTH_FOUR_TIES.values())


@hypothesis_settings(max_examples=1000, deadline=None)
@given(st.permutations(range(1, 12)), st.data())
def test_marked_bijection_round_trip(entries, data):
    pi = Permutation(tuple(entries))
    positions = sorted(em_positions(P("2134"), P("3241"), entries))
    marks = sorted(data.draw(st.sets(st.sampled_from(positions)))) if positions else []
    image = marked_bijection(pi, marks)
    assert set(marks) <= set(em_positions(P("2314"), P("3421"), image.entries))
    assert marked_bijection(image, marks, direction="backward") == pi
