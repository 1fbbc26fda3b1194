#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace euclidsail {

// 2x2 matrix with non-negative integer entries, stored row-major:
// rows (a, b) and (c, d).
struct Mat2 {
    int64_t a, b, c, d;

    Mat2(int64_t a_, int64_t b_, int64_t c_, int64_t d_);

    friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

int64_t det(const Mat2& m);

// Membership in the reduction system's ambient set: non-negative entries
// (guaranteed by the type) and strictly positive determinant.
bool in_P(const Mat2& m);

// The four elementary reductions, subtracting one row/column from the other.
enum class ReductionKind { LeftE, LeftEt, RightE, RightEt };

const char* reduction_kind_name(ReductionKind k);

// Image of one elementary reduction. Entries are reported raw (possibly
// negative) so callers can reason about blocked moves; `mat()` is only
// valid when all entries are non-negative.
struct MoveImage {
    ReductionKind kind;
    int64_t a, b, c, d;
    bool nonnegative;
    bool in_p;  // nonnegative and det > 0

    Mat2 mat() const;
};

// All four images in fixed order LeftE, LeftEt, RightE, RightEt.
std::vector<MoveImage> elementary_reductions(const Mat2& m);

// min(diagonal) > max(antidiagonal); equivalent to "no elementary
// reduction stays in P". Requires in_P(m).
bool is_euclid_reduced(const Mat2& m);

struct ReductionStep {
    ReductionKind kind;
    Mat2 after;
};

struct ReductionTrace {
    Mat2 start;
    std::vector<ReductionStep> steps;
    Mat2 result;
};

// Applies the first P-preserving move in the fixed order LeftE, LeftEt,
// RightE, RightEt until the matrix is Euclid-reduced. Deterministic and
// replayable; each step strictly decreases the entry sum.
ReductionTrace reduce(const Mat2& m);

// Every Euclid-reduced matrix reachable from m by elementary reductions
// staying in P, found by exhaustive search. The reduction system is not
// assumed confluent; this is the experimental probe.
std::set<Mat2> all_normal_forms(const Mat2& m);

// Rectangular matrix of non-negative integers, for the larger-size and
// determinant-zero variants.
struct MatGeneral {
    int rows, cols;
    std::vector<int64_t> entries;  // row-major

    MatGeneral(int rows_, int cols_, std::vector<int64_t> entries_);

    int64_t at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
    int64_t& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
};

// True iff every single subtraction of one row from another or one column
// from another produces a negative entry. Subtracting an all-zero
// row/column is a no-op, not a reduction, so it does not disqualify.
bool is_general_reduced(const MatGeneral& m);

bool is_general_reduced(const Mat2& m);

// Terminal matrix of the determinant-zero reduction: rows first
// (iteratedly subtracting the smaller row from the larger), then columns.
// Ends with at most one non-zero entry, which equals the gcd of the
// original entries.
struct Det0Class {
    Mat2 terminal;
    int64_t value;   // the unique non-zero entry (0 for the zero matrix)
    int row, col;    // 1-indexed position of that entry (0,0 when degenerate)
    bool degenerate; // true iff the matrix is zero
};

Det0Class classify_det0(const Mat2& m);

}  // namespace euclidsail
