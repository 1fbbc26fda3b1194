#include <stdexcept>
#include <numeric>

#include "doctest.h"
#include "euclidsail/mat2.hpp"

using namespace euclidsail;

TEST_CASE("determinant") {
    CHECK(det(Mat2(1, 0, 0, 1)) == 1);
    CHECK(det(Mat2(6, 5, 5, 6)) == 11);
    CHECK(det(Mat2(3, 1, 1, 1)) == 2);
    CHECK(det(Mat2(1, 2, 1, 1)) == -1);
    // entries up to 2^62 are supported; the product is caught, not wrapped
    int64_t big = int64_t(1) << 62;
    CHECK_THROWS_AS(det(Mat2(big, 0, 0, big)), std::overflow_error);
    CHECK(det(Mat2(big, 1, 1, 1)) == big - 1);
}

TEST_CASE("membership in P") {
    CHECK(in_P(Mat2(1, 0, 0, 1)));
    CHECK_FALSE(in_P(Mat2(2, 0, 1, 0)));
    CHECK_FALSE(in_P(Mat2(1, 2, 1, 1)));
    CHECK_THROWS_AS(Mat2(-1, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("elementary reductions report all four images") {
    auto moves = elementary_reductions(Mat2(3, 1, 1, 1));
    REQUIRE(moves.size() == 4);
    CHECK(moves[0].kind == ReductionKind::LeftE);
    CHECK(moves[0].in_p);
    CHECK(moves[0].mat() == Mat2(2, 0, 1, 1));
    CHECK_FALSE(moves[1].in_p);  // LeftEt goes negative
    CHECK_FALSE(moves[2].in_p);  // RightE goes negative
    CHECK(moves[3].kind == ReductionKind::RightEt);
    CHECK(moves[3].in_p);
    CHECK(moves[3].mat() == Mat2(2, 1, 0, 1));

    for (const MoveImage& img : elementary_reductions(Mat2(1, 0, 0, 1))) CHECK_FALSE(img.in_p);
    for (const MoveImage& img : elementary_reductions(Mat2(2, 0, 0, 1))) CHECK_FALSE(img.in_p);
}

TEST_CASE("Euclid-reduced predicate") {
    CHECK(is_euclid_reduced(Mat2(6, 5, 5, 6)));
    CHECK(is_euclid_reduced(Mat2(1, 0, 0, 1)));
    CHECK_FALSE(is_euclid_reduced(Mat2(3, 1, 1, 1)));
    CHECK_THROWS_AS(is_euclid_reduced(Mat2(2, 0, 1, 0)), std::invalid_argument);
}

TEST_CASE("predicate coincides with blocked moves, exhaustively to 30") {
    for (int64_t a = 0; a <= 30; ++a)
        for (int64_t b = 0; b <= 30; ++b)
            for (int64_t c = 0; c <= 30; ++c)
                for (int64_t d = 0; d <= 30; ++d) {
                    Mat2 m(a, b, c, d);
                    if (det(m) <= 0) continue;
                    bool blocked = true;
                    for (const MoveImage& img : elementary_reductions(m))
                        if (img.in_p) blocked = false;
                    if (is_euclid_reduced(m) != blocked) {
                        CAPTURE(a); CAPTURE(b); CAPTURE(c); CAPTURE(d);
                        REQUIRE(is_euclid_reduced(m) == blocked);
                    }
                }
}

TEST_CASE("reduce follows the fixed strategy order") {
    ReductionTrace t = reduce(Mat2(3, 1, 1, 1));
    REQUIRE(t.steps.size() == 2);
    CHECK(t.steps[0].kind == ReductionKind::LeftE);
    CHECK(t.steps[0].after == Mat2(2, 0, 1, 1));
    CHECK(t.steps[1].kind == ReductionKind::RightEt);
    CHECK(t.result == Mat2(2, 0, 0, 1));

    CHECK(reduce(Mat2(1, 0, 0, 1)).steps.empty());
    CHECK(reduce(Mat2(6, 5, 5, 6)).steps.empty());
    CHECK_THROWS_AS(reduce(Mat2(2, 0, 1, 0)), std::invalid_argument);
}

TEST_CASE("reduce preserves determinant and the trace replays") {
    for (int64_t a = 0; a <= 12; ++a)
        for (int64_t b = 0; b <= 12; ++b)
            for (int64_t c = 0; c <= 12; ++c)
                for (int64_t d = 0; d <= 12; ++d) {
                    Mat2 m(a, b, c, d);
                    if (det(m) <= 0) continue;
                    ReductionTrace t = reduce(m);
                    REQUIRE(det(t.result) == det(m));
                    REQUIRE(is_euclid_reduced(t.result));
                    REQUIRE(int64_t(t.steps.size()) <= a + b + c + d);
                    Mat2 cur = m;
                    for (const ReductionStep& st : t.steps) {
                        bool found = false;
                        for (const MoveImage& img : elementary_reductions(cur))
                            if (img.kind == st.kind && img.in_p && img.mat() == st.after) {
                                found = true;
                                break;
                            }
                        REQUIRE(found);
                        cur = st.after;
                    }
                    REQUIRE(cur == t.result);
                }
}

TEST_CASE("all normal forms") {
    CHECK(all_normal_forms(Mat2(1, 0, 0, 1)) == std::set<Mat2>{Mat2(1, 0, 0, 1)});
    CHECK(all_normal_forms(Mat2(2, 0, 0, 1)) == std::set<Mat2>{Mat2(2, 0, 0, 1)});
    auto forms = all_normal_forms(Mat2(3, 1, 1, 1));
    CHECK(forms.count(Mat2(2, 0, 0, 1)) == 1);
    for (const Mat2& f : forms) {
        CHECK(det(f) == 2);
        CHECK(is_euclid_reduced(f));
    }
    // The strategy result is always among the reachable normal forms.
    for (int64_t a = 1; a <= 8; ++a)
        for (int64_t b = 0; b <= 8; ++b)
            for (int64_t c = 0; c <= 8; ++c)
                for (int64_t d = 1; d <= 8; ++d) {
                    Mat2 m(a, b, c, d);
                    if (det(m) <= 0) continue;
                    REQUIRE(all_normal_forms(m).count(reduce(m).result) == 1);
                }
}

TEST_CASE("general reducedness") {
    // 3x3 family member at x = 0
    CHECK(is_general_reduced(MatGeneral(3, 3, {4, 2, 1, 0, 1, 3, 1, 1, 2})));
    // 2x3 family member at n = 6
    CHECK(is_general_reduced(MatGeneral(2, 3, {6, 3, 2, 1, 2, 3})));
    CHECK_FALSE(is_general_reduced(Mat2(2, 0, 1, 0)));
    // the four det-0 shapes with three zeros are reduced
    CHECK(is_general_reduced(Mat2(5, 0, 0, 0)));
    CHECK(is_general_reduced(Mat2(0, 5, 0, 0)));
    CHECK(is_general_reduced(Mat2(0, 0, 5, 0)));
    CHECK(is_general_reduced(Mat2(0, 0, 0, 5)));
}

static MatGeneral family3x3(int64_t x) {
    return MatGeneral(3, 3, {4 + x, 2 + x, 1 + x, x, 1 + x, 3 + x, 1 + x, 1 + x, 2 + x});
}

static int64_t det3(const MatGeneral& m) {
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

TEST_CASE("3x3 family: determinant 1 and reduced for small x") {
    for (int64_t x = 0; x <= 100; ++x) {
        REQUIRE(det3(family3x3(x)) == 1);
        REQUIRE(is_general_reduced(family3x3(x)));
    }
}

TEST_CASE("det-0 classification") {
    Det0Class c1 = classify_det0(Mat2(0, 0, 5, 0));
    CHECK(c1.terminal == Mat2(0, 0, 5, 0));
    CHECK(c1.value == 5);
    CHECK(c1.row == 2);
    CHECK(c1.col == 1);
    CHECK_FALSE(c1.degenerate);

    Det0Class c2 = classify_det0(Mat2(2, 0, 1, 0));
    CHECK(c2.terminal == Mat2(0, 0, 1, 0));
    CHECK(c2.value == 1);

    Det0Class c3 = classify_det0(Mat2(0, 0, 0, 0));
    CHECK(c3.degenerate);
    CHECK(c3.value == 0);

    CHECK_THROWS_AS(classify_det0(Mat2(1, 0, 0, 1)), std::invalid_argument);
}

TEST_CASE("det-0 terminal value is the gcd of the entries") {
    for (int64_t a = 0; a <= 12; ++a)
        for (int64_t b = 0; b <= 12; ++b)
            for (int64_t c = 0; c <= 12; ++c)
                for (int64_t d = 0; d <= 12; ++d) {
                    Mat2 m(a, b, c, d);
                    if (det(m) != 0) continue;
                    Det0Class cls = classify_det0(m);
                    int64_t g = std::gcd(std::gcd(a, b), std::gcd(c, d));
                    if (g == 0)
                        REQUIRE(cls.degenerate);
                    else
                        REQUIRE(cls.value == g);
                }
}

TEST_CASE("determinant preserved by every move staying in P") {
    for (int64_t a = 0; a <= 10; ++a)
        for (int64_t b = 0; b <= 10; ++b)
            for (int64_t c = 0; c <= 10; ++c)
                for (int64_t d = 0; d <= 10; ++d) {
                    Mat2 m(a, b, c, d);
                    if (det(m) <= 0) continue;
                    for (const MoveImage& img : elementary_reductions(m))
                        if (img.in_p) REQUIRE(det(img.mat()) == det(m));
                }
}
