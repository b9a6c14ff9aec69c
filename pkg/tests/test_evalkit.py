import random
from collections import Counter

import pytest

from graphsum import (
    EmptyReferenceError,
    GraphsumError,
    SummarySpec,
    System,
    baseline_lead,
    baseline_random,
    build_document,
    compare_systems,
    eval_tokens,
    rouge_n,
    rouge_su,
    standard_systems,
)
from graphsum.evalkit import ngram_counts, skip_bigram_counts

from oracles import rouge_n_oracle, rouge_su_oracle


class TestRougeN:
    def test_perfect_match(self):
        tokens = "the quick brown fox".split()
        score = rouge_n(tokens, [tokens], 2)
        assert score == (1.0, 1.0, 1.0)

    def test_disjoint(self):
        score = rouge_n("a b c".split(), ["x y z".split()], 2)
        assert score == (0.0, 0.0, 0.0)

    def test_cat_sat_versus_cat_ran(self):
        score = rouge_n("the cat sat".split(), ["the cat ran".split()], 2)
        assert score.recall == 0.5
        assert score.precision == 0.5
        assert score.f1 == 0.5

    def test_pooled_multi_reference(self):
        score = rouge_n(["a", "b"], [["a", "b"], ["c", "d"]], 1)
        # matches 2 + 0 over 4 reference grams; 2 candidate grams x 2 refs
        assert score.recall == 0.5
        assert score.precision == 0.5

    def test_clipping_caps_repeats(self):
        score = rouge_n(["a", "a", "a"], [["a", "a"]], 1)
        assert score.recall == 1.0
        assert score.precision == pytest.approx(2 / 3)

    def test_empty_reference_rejected(self):
        with pytest.raises(EmptyReferenceError):
            rouge_n(["a", "b"], [["a"]], 2)  # one-token reference has no bigrams

    def test_empty_candidate_scores_zero(self):
        score = rouge_n([], [["a", "b"]], 1)
        assert score == (0.0, 0.0, 0.0)

    def test_gram_order_validated(self):
        with pytest.raises(ValueError):
            rouge_n(["a"], [["a"]], 0)

    def test_recall_never_drops_when_candidate_grows(self):
        rng = random.Random(5)
        vocab = ["w0", "w1", "w2", "w3"]
        for _ in range(30):
            cand = [rng.choice(vocab) for _ in range(rng.randint(2, 10))]
            ref = [rng.choice(vocab) for _ in range(rng.randint(2, 10))]
            before = rouge_n(cand, [ref], 2).recall
            after = rouge_n(cand + [rng.choice(vocab)], [ref], 2).recall
            assert after >= before

    def test_matches_enumeration_oracle(self):
        rng = random.Random(11)
        vocab = ["u", "v", "w", "x"]
        for _ in range(40):
            cand = [rng.choice(vocab) for _ in range(rng.randint(0, 12))]
            refs = [
                [rng.choice(vocab) for _ in range(rng.randint(2, 12))]
                for _ in range(rng.randint(1, 3))
            ]
            for n in (1, 2):
                expected = rouge_n_oracle(cand, refs, n)
                got = rouge_n(cand, refs, n)
                assert got == pytest.approx(expected, abs=1e-12)

    def test_components_bounded_by_clipping(self):
        # Clipped matches never exceed either side's gram count, so every
        # component stays inside [0, 1] no matter how repetitive the text.
        rng = random.Random(29)
        for _ in range(30):
            cand = [rng.choice(["a", "b"]) for _ in range(rng.randint(0, 15))]
            ref = [rng.choice(["a", "b"]) for _ in range(rng.randint(2, 15))]
            for score in (rouge_n(cand, [ref], 1), rouge_su(cand, [ref], 4)):
                assert 0.0 <= score.recall <= 1.0
                assert 0.0 <= score.precision <= 1.0
                assert 0.0 <= score.f1 <= 1.0


class TestRougeSu:
    def test_two_token_identity(self):
        score = rouge_su(["a", "b"], [["a", "b"]], 4)
        assert score.recall == 1.0

    def test_zero_skip_equals_adjacent_bigrams(self):
        tokens = "a b c".split()
        pairs = {g: c for g, c in skip_bigram_counts(tokens, 0).items() if len(g) == 2}
        assert pairs == dict(ngram_counts(tokens, 2))

    def test_transposition_hand_case(self):
        score = rouge_su("a b c".split(), ["a c b".split()], 4)
        # grams: 3 skip pairs + 3 unigrams each; (b, c) finds no mate
        assert score.recall == pytest.approx(5 / 6, abs=1e-12)
        assert score.precision == pytest.approx(5 / 6, abs=1e-12)

    def test_single_token_reference_still_has_unigrams(self):
        score = rouge_su(["a"], [["a"]], 4)
        assert score.recall == 1.0

    def test_matches_enumeration_oracle(self):
        rng = random.Random(19)
        vocab = ["p", "q", "r", "s", "t"]
        for _ in range(40):
            cand = [rng.choice(vocab) for _ in range(rng.randint(0, 12))]
            refs = [
                [rng.choice(vocab) for _ in range(rng.randint(1, 12))]
                for _ in range(rng.randint(1, 3))
            ]
            for max_skip in (0, 2, 4):
                expected = rouge_su_oracle(cand, refs, max_skip)
                got = rouge_su(cand, refs, max_skip)
                assert got == pytest.approx(expected, abs=1e-12)

    def test_negative_skip_rejected(self):
        with pytest.raises(ValueError):
            rouge_su(["a"], [["a"]], -1)


class TestJackknife:
    def test_single_reference_equals_pooled(self):
        cand = "a b c d".split()
        ref = "a b x d".split()
        assert rouge_n(cand, [ref], 2, jackknife=True) == rouge_n(cand, [ref], 2)

    def test_identical_references_collapse(self):
        cand = "a b c".split()
        ref = "a b d".split()
        pooled_single = rouge_n(cand, [ref], 2)
        jack = rouge_n(cand, [ref, ref], 2, jackknife=True)
        assert jack == pooled_single

    def test_components_stay_in_unit_interval(self):
        cand = "a b c d e".split()
        refs = [["a", "b"], ["c", "d", "e"], ["a", "e"]]
        score = rouge_su(cand, refs, 4, jackknife=True)
        assert all(0.0 <= v <= 1.0 for v in score)


class TestEvalTokens:
    def test_default_is_plain_tokenize(self):
        assert eval_tokens("The cat, the CAT!") == ["the", "cat", "the", "cat"]

    def test_optional_stemming(self):
        assert eval_tokens("caresses", stem=True) == ["caress"]

    def test_optional_stopword_removal(self):
        got = eval_tokens("the cat sat", stopwords=frozenset({"the"}))
        assert got == ["cat", "sat"]


class TestBaselines:
    def test_random_exhaustive_draw(self, theme_doc):
        doc = build_document("One. Two. Three.")
        summary = baseline_random(doc, 3, seed=42)
        assert summary.selected == (0, 1, 2)

    def test_random_deterministic(self, theme_doc):
        first = baseline_random(theme_doc, 3, seed=7)
        second = baseline_random(theme_doc, 3, seed=7)
        assert first.selected == second.selected
        assert first.text == second.text

    def test_random_clamps_k(self, theme_doc):
        summary = baseline_random(theme_doc, 99, seed=0)
        assert summary.selected == tuple(range(len(theme_doc)))

    def test_random_uniformity_monte_carlo(self):
        doc = build_document(" ".join(f"Word{i} speaks." for i in range(10)))
        assert len(doc) == 10
        hits = Counter()
        runs = 10_000
        for seed in range(runs):
            hits.update(baseline_random(doc, 3, seed).selected)
        for index in range(10):
            assert abs(hits[index] / runs - 0.3) < 0.02

    def test_lead_first_sentence(self, theme_doc):
        summary = baseline_lead(theme_doc, 1)
        assert summary.selected == (0,)
        assert summary.text == theme_doc.sentences[0].surface

    def test_lead_whole_document(self, theme_doc):
        summary = baseline_lead(theme_doc, 99)
        assert summary.selected == tuple(range(len(theme_doc)))

    def test_lead_two_of_five(self):
        doc = build_document("A one. B two. C three. D four. E five.")
        assert baseline_lead(doc, 2).selected == (0, 1)

    def test_k_validated(self, theme_doc):
        with pytest.raises(ValueError):
            baseline_lead(theme_doc, 0)
        with pytest.raises(ValueError):
            baseline_random(theme_doc, 0, seed=1)


class TestCompareSystems:
    def test_lead_scores_one_against_itself(self, theme_doc):
        spec = SummarySpec(sentence_count=2)
        reference = baseline_lead(theme_doc, 2).text
        rows = compare_systems(theme_doc, [reference], standard_systems(["lead"]), spec)
        assert rows[0]["system"] == "lead"
        assert rows[0]["rouge2"].recall == 1.0
        assert rows[0]["su4"].recall == 1.0

    def test_graph_system_beats_random_on_planted_theme(self, theme_doc):
        spec = SummarySpec(sentence_count=3)
        reference = "Honey bees store golden honey in waxy hive cells. " \
            "Worker bees fill hive cells with golden honey wax. " \
            "The hive cells hold honey that worker bees store."
        systems = standard_systems(["reg", "random", "lead"], seed=1)
        rows = compare_systems(theme_doc, [reference], systems, spec)
        by_name = {row["system"]: row for row in rows}
        assert by_name["reg"]["rouge2"].recall >= by_name["random"]["rouge2"].recall
        assert by_name["reg"]["rouge2"].recall == 1.0

    def test_empty_candidate_yields_zero_row_with_warning(self):
        doc = build_document("...")
        spec = SummarySpec(sentence_count=1)
        rows = compare_systems(doc, ["some reference text"], standard_systems(["lead"]), spec)
        assert rows[0]["rouge2"] == (0.0, 0.0, 0.0)
        assert "empty-candidate" in rows[0]["warnings"]

    def test_failing_system_becomes_warning_row(self, theme_doc):
        class Boom(GraphsumError):
            pass

        def explode(doc, spec):
            raise Boom("synthetic failure")

        systems = [System("boom", explode), *standard_systems(["lead"])]
        rows = compare_systems(theme_doc, ["Honey bees."], systems, SummarySpec(sentence_count=1))
        assert rows[0]["system"] == "boom"
        assert rows[0]["rouge2"] == (0.0, 0.0, 0.0)
        assert any("synthetic failure" in w for w in rows[0]["warnings"])
        assert rows[1]["system"] == "lead"

    def test_row_order_follows_input_order(self, theme_doc):
        systems = standard_systems(["lead", "random", "reg"], seed=3)
        rows = compare_systems(
            theme_doc, ["Honey bees store things."], systems, SummarySpec(sentence_count=1)
        )
        assert [r["system"] for r in rows] == ["lead", "random", "reg"]

    def test_unknown_system_rejected(self):
        with pytest.raises(ValueError):
            standard_systems(["pagerank"])
