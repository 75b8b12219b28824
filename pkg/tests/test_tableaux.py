import pytest

from gogmagog.tableaux import (
    Ssyt,
    complement_reverse,
    reading_word,
    rsk_insertion_tableau,
    schutzenberger_via_words,
    tableau_to_triangle,
    triangle_to_tableau,
    validate_ssyt,
)

from conftest import gt_triangles, random_gt, tri

GT5 = tri((1, 2, 2, 3, 6), (1, 2, 2, 5), (2, 2, 4), (2, 4), (3,))
TABLEAU5 = Ssyt(((1, 1, 1, 2, 4, 5), (2, 2, 5), (3, 3), (4, 5), (5,)), 5)
WORD5 = (5, 4, 5, 3, 3, 2, 2, 5, 1, 1, 1, 2, 4, 5)
WORD5_IMAGE = (1, 2, 4, 5, 5, 5, 1, 4, 4, 3, 3, 1, 2, 1)


def brute_longest_nondecreasing(word):
    best = [1] * len(word) if word else []
    for i in range(len(word)):
        for j in range(i):
            if word[j] <= word[i]:
                best[i] = max(best[i], best[j] + 1)
    return max(best, default=0)


class TestTriangleTableau:
    def test_generic_size5_triangle(self):
        tab = triangle_to_tableau(GT5)
        assert tab == TABLEAU5
        assert validate_ssyt(tab) == []

    def test_pinned_staircase_size2(self):
        assert triangle_to_tableau(tri((1, 2), (1,))).rows == ((1, 2), (2,))

    def test_single_cell(self):
        assert triangle_to_tableau(tri((4,))).rows == ((1, 1, 1, 1),)

    def test_round_trip_size5(self):
        assert tableau_to_triangle(TABLEAU5) == GT5

    def test_round_trip_exhaustive(self):
        for n, bound in ((2, 4), (3, 5), (4, 5)):
            for t in gt_triangles(n, bound):
                assert tableau_to_triangle(triangle_to_tableau(t)) == t

    def test_letters_above_bound_rejected(self):
        with pytest.raises(ValueError):
            tableau_to_triangle(Ssyt(((1, 3),), 2))


class TestWords:
    def test_size5_reading_word(self):
        assert reading_word(TABLEAU5) == WORD5

    def test_single_row(self):
        assert reading_word(Ssyt(((1, 1, 2),), 3)) == (1, 1, 2)

    def test_single_column_reads_top_down(self):
        col = Ssyt(tuple((i,) for i in range(1, 5)), 4)
        assert reading_word(col) == (4, 3, 2, 1)

    def test_size5_complement_reverse(self):
        assert complement_reverse(WORD5, 5) == WORD5_IMAGE

    def test_empty_word(self):
        assert complement_reverse((), 3) == ()

    def test_involution(self):
        assert complement_reverse(WORD5_IMAGE, 5) == WORD5

    def test_reading_word_runs_are_tableau_rows(self):
        # maximal nondecreasing runs of the reading word recover the rows
        for t in gt_triangles(4, 5):
            tab = triangle_to_tableau(t)
            word = reading_word(tab)
            runs, run = [], []
            for x in word:
                if run and x < run[-1]:
                    runs.append(tuple(run))
                    run = []
                run.append(x)
            runs.append(tuple(run))
            assert tuple(runs) == tuple(reversed(tab.rows))


class TestRsk:
    def test_two_letters(self):
        assert rsk_insertion_tableau((2, 1), 2).rows == ((1,), (2,))

    def test_nondecreasing_word_is_one_row(self):
        assert rsk_insertion_tableau((1, 1, 2), 2).rows == ((1, 1, 2),)

    def test_result_is_semistandard(self, rng):
        for _ in range(200):
            n = rng.randint(1, 6)
            word = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 12)))
            assert validate_ssyt(rsk_insertion_tableau(word, n)) == []

    def test_bottom_row_is_longest_nondecreasing_subsequence(self, rng):
        for _ in range(1000):
            n = rng.randint(1, 7)
            word = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 14)))
            tab = rsk_insertion_tableau(word, n)
            got = len(tab.rows[0]) if tab.rows else 0
            assert got == brute_longest_nondecreasing(word)


class TestWordOracle:
    def test_size2(self):
        assert schutzenberger_via_words(tri((1, 2), (2,))) == tri((1, 2), (1,))
        assert schutzenberger_via_words(tri((1, 1), (1,))) == tri((1, 1), (1,))

    def test_involution_exhaustive(self):
        for t in gt_triangles(3, 4):
            assert schutzenberger_via_words(schutzenberger_via_words(t)) == t

    def test_involution_random_larger(self, rng):
        for _ in range(50):
            t = random_gt(rng, 6, 8)
            assert schutzenberger_via_words(schutzenberger_via_words(t)) == t
