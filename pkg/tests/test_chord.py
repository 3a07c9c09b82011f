import pytest

from ribbonpd import (
    ChordDiagram,
    bouquet_bn,
    canonical_form,
    components_all_odd_complete,
    enumerate_diagrams,
    from_one_vertex,
    interlacement,
    is_isomorphic,
    is_join_prime,
    parse_word,
    to_ribbon_graph,
    tree_path,
)
from ribbonpd.chord import _normalize, parse_words, word_to_text


# -- independent dedup oracle -------------------------------------------------
# Matchings generated by a different recursion, deduplicated by pairwise
# rotation comparison rather than by canonical form.


def _oracle_matchings(positions):
    if not positions:
        yield ()
        return
    first, rest = positions[0], positions[1:]
    for i, p in enumerate(rest):
        for sub in _oracle_matchings(rest[:i] + rest[i + 1 :]):
            yield ((first, p),) + sub


def _oracle_word(matching, size):
    word = [None] * size
    for label, (a, b) in enumerate(matching):
        word[a] = word[b] = label
    return _normalize(word)


def _rotation_equivalent(w1, w2):
    return any(_normalize(w2[k:] + w2[:k]) == w1 for k in range(len(w2)))


def oracle_classes(n):
    reps = []
    for matching in _oracle_matchings(tuple(range(2 * n))):
        w = _oracle_word(matching, 2 * n)
        if not any(_rotation_equivalent(rep, w) for rep in reps):
            reps.append(w)
    return reps


class TestParseWord:
    def test_b2(self):
        assert parse_word("ABAB").word == (0, 1, 0, 1)

    def test_non_interlaced(self):
        assert parse_word("AABB").word == (0, 0, 1, 1)

    def test_odd_length_rejected(self):
        with pytest.raises(ValueError, match="odd length"):
            parse_word("ABA")

    def test_wrong_multiplicity(self):
        with pytest.raises(ValueError, match="occurs"):
            parse_word("ABAC")

    def test_normalization(self):
        assert parse_word("ZAZA").word == (0, 1, 0, 1)

    def test_bracketed_labels(self):
        word = tuple(range(27)) + tuple(range(27))
        text = word_to_text(word)
        assert "[26]" in text
        assert parse_word(text).word == word


class TestRibbonGraphRoundTrip:
    def test_to_ribbon_graph_matches_bouquet(self):
        assert is_isomorphic(to_ribbon_graph(parse_word("ABCABC")), bouquet_bn(3))

    def test_round_trip(self):
        for w in ("ABAB", "AABB", "BABCAC", "ABCDABDC"):
            d = parse_word(w)
            assert from_one_vertex(to_ribbon_graph(d)) == d

    def test_from_one_vertex_rejects_multi_vertex(self):
        with pytest.raises(ValueError, match="2 vertices"):
            from_one_vertex(tree_path(2))


class TestInterlacement:
    def test_k2(self):
        g = interlacement(parse_word("ABAB"))
        assert g.adjacency[0][1] and g.adjacency[1][0]

    def test_isolated(self):
        g = interlacement(parse_word("AABB"))
        assert not any(any(row) for row in g.adjacency)

    def test_path_on_three(self):
        # A is the middle chord: interlaced with both B and C, which do not interlace
        g = interlacement(parse_word("BABCAC"))
        b, a, c = 0, 1, 2
        assert g.adjacency[a][b] and g.adjacency[a][c]
        assert not g.adjacency[b][c]

    def test_invariant_under_rotation_and_relabeling(self, rng):
        for d in enumerate_diagrams(4):
            w = d.word
            k = rng.randrange(len(w))
            rotated = ChordDiagram(_normalize(w[k:] + w[:k]))
            edges = lambda g: sum(row.count(True) for row in g.adjacency)
            assert edges(interlacement(d)) == edges(interlacement(rotated))


class TestJoinPrime:
    def test_fixtures(self):
        assert is_join_prime(parse_word("ABCABC"))
        assert not is_join_prime(parse_word("AABB"))
        assert is_join_prime(parse_word("BABCAC"))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_join_prime(ChordDiagram(()))

    def test_split_word_characterization(self):
        # a non-join-prime word splits, after some rotation, into two
        # contiguous blocks each closed under the chord pairing
        def splits(word):
            size = len(word)
            for k in range(size):
                w = word[k:] + word[:k]
                for cut in range(1, size):
                    left = w[:cut]
                    counts = {}
                    for c in left:
                        counts[c] = counts.get(c, 0) + 1
                    if all(v == 2 for v in counts.values()):
                        return True
            return False

        for n in range(1, 6):
            for d in enumerate_diagrams(n):
                assert is_join_prime(d) == (not splits(d.word))


class TestClassifier:
    def test_fixtures(self):
        assert components_all_odd_complete(parse_word("ABCABC"))  # K_3
        assert not components_all_odd_complete(parse_word("ABAB"))  # K_2, even
        assert components_all_odd_complete(parse_word("AABB"))  # two K_1's


class TestCanonicalForm:
    def test_rotation(self):
        assert canonical_form(parse_word("BABA")).text == "ABAB"

    def test_idempotent(self, rng):
        for n in range(1, 6):
            pool = list(enumerate_diagrams(n))
            for d in rng.sample(pool, min(5, len(pool))):
                c = canonical_form(d)
                assert canonical_form(c) == c

    def test_rotated_words_agree(self):
        assert canonical_form(parse_word("ABCABC")) == canonical_form(parse_word("BCABCA"))

    def test_reflection_flag(self):
        d = parse_word("ABCCBA")
        assert canonical_form(d, use_reflection=True) == canonical_form(d, use_reflection=False)


class TestEnumerate:
    def test_small_counts(self):
        assert [d.text for d in enumerate_diagrams(1)] == ["AA"]
        assert [d.text for d in enumerate_diagrams(2)] == ["AABB", "ABAB"]

    def test_counts_match_oracle(self):
        for n in range(1, 6):
            assert len(list(enumerate_diagrams(n))) == len(oracle_classes(n))

    def test_oracle_classes_covered(self):
        for n in range(1, 5):
            enumerated = {d.word for d in enumerate_diagrams(n)}
            for rep in oracle_classes(n):
                assert canonical_form(ChordDiagram(rep)).word in enumerated

    def test_emits_canonical_fixed_points_no_duplicates(self):
        for n in range(1, 6):
            words = [d.word for d in enumerate_diagrams(n)]
            assert len(set(words)) == len(words)
            assert words == sorted(words)
            for w in words:
                assert canonical_form(ChordDiagram(w)).word == w

    def test_reflection_dedup_not_finer_than_rotation(self):
        for n in range(1, 6):
            assert len(list(enumerate_diagrams(n, use_reflection=True))) <= len(
                list(enumerate_diagrams(n))
            )

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            list(enumerate_diagrams(0))


class TestWordFiles:
    def test_text_lines_and_comments(self):
        text = "# header\nABAB\n\nAABB  # trailing\n"
        assert [d.text for d in parse_words(text)] == ["ABAB", "AABB"]

    def test_line_number_in_errors(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_words("ABAB\nABA\n")

    def test_json_array(self):
        assert [d.text for d in parse_words('["ABAB", "AABB"]')] == ["ABAB", "AABB"]
