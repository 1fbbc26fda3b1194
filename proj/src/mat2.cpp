#include "euclidsail/mat2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "euclidsail/ints.hpp"

namespace euclidsail {

Mat2::Mat2(int64_t a_, int64_t b_, int64_t c_, int64_t d_) : a(a_), b(b_), c(c_), d(d_) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("Mat2 entries must be non-negative");
}

int64_t det(const Mat2& m) { return det2(m.a, m.b, m.c, m.d); }

bool in_P(const Mat2& m) { return det(m) > 0; }

const char* reduction_kind_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::LeftE: return "LeftE";
        case ReductionKind::LeftEt: return "LeftEt";
        case ReductionKind::RightE: return "RightE";
        case ReductionKind::RightEt: return "RightEt";
    }
    return "?";
}

Mat2 MoveImage::mat() const {
    if (!nonnegative)
        throw std::logic_error("elementary reduction image has a negative entry");
    return Mat2(a, b, c, d);
}

static MoveImage make_image(ReductionKind kind, int64_t a, int64_t b, int64_t c, int64_t d) {
    MoveImage img{kind, a, b, c, d, false, false};
    img.nonnegative = a >= 0 && b >= 0 && c >= 0 && d >= 0;
    img.in_p = img.nonnegative && det2(a, b, c, d) > 0;
    return img;
}

std::vector<MoveImage> elementary_reductions(const Mat2& m) {
    std::vector<MoveImage> out;
    out.reserve(4);
    // E*M: row1 <- row1 - row2
    out.push_back(make_image(ReductionKind::LeftE, m.a - m.c, m.b - m.d, m.c, m.d));
    // E^t*M: row2 <- row2 - row1
    out.push_back(make_image(ReductionKind::LeftEt, m.a, m.b, m.c - m.a, m.d - m.b));
    // M*E: col2 <- col2 - col1
    out.push_back(make_image(ReductionKind::RightE, m.a, m.b - m.a, m.c, m.d - m.c));
    // M*E^t: col1 <- col1 - col2
    out.push_back(make_image(ReductionKind::RightEt, m.a - m.b, m.b, m.c - m.d, m.d));
    return out;
}

bool is_euclid_reduced(const Mat2& m) {
    if (!in_P(m))
        throw std::invalid_argument("is_euclid_reduced requires a matrix in P");
    return std::min(m.a, m.d) > std::max(m.b, m.c);
}

ReductionTrace reduce(const Mat2& m) {
    if (!in_P(m))
        throw std::invalid_argument("reduce requires a matrix in P");
    ReductionTrace trace{m, {}, m};
    Mat2 cur = m;
    while (!is_euclid_reduced(cur)) {
        bool moved = false;
        for (const MoveImage& img : elementary_reductions(cur)) {
            if (!img.in_p) continue;
            cur = img.mat();
            trace.steps.push_back({img.kind, cur});
            moved = true;
            break;
        }
        if (!moved)
            throw std::logic_error("matrix not Euclid-reduced but no move stays in P");
    }
    trace.result = cur;
    return trace;
}

std::set<Mat2> all_normal_forms(const Mat2& m) {
    if (!in_P(m))
        throw std::invalid_argument("all_normal_forms requires a matrix in P");
    std::set<Mat2> visited;
    std::set<Mat2> normal;
    std::vector<Mat2> stack{m};
    visited.insert(m);
    while (!stack.empty()) {
        Mat2 cur = stack.back();
        stack.pop_back();
        bool any = false;
        for (const MoveImage& img : elementary_reductions(cur)) {
            if (!img.in_p) continue;
            any = true;
            Mat2 next = img.mat();
            if (visited.insert(next).second) stack.push_back(next);
        }
        if (!any) normal.insert(cur);
    }
    return normal;
}

MatGeneral::MatGeneral(int rows_, int cols_, std::vector<int64_t> entries_)
    : rows(rows_), cols(cols_), entries(std::move(entries_)) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("MatGeneral needs at least one row and column");
    if (entries.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("MatGeneral entry count does not match shape");
    for (int64_t e : entries)
        if (e < 0) throw std::invalid_argument("MatGeneral entries must be non-negative");
}

bool is_general_reduced(const MatGeneral& m) {
    // Rows: for every ordered pair (i, j), i != j, with row j non-zero,
    // row_i - row_j must have a negative entry.
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.rows; ++j) {
            if (i == j) continue;
            bool subtrahend_zero = true;
            bool has_negative = false;
            for (int k = 0; k < m.cols; ++k) {
                if (m.at(j, k) != 0) subtrahend_zero = false;
                if (m.at(i, k) - m.at(j, k) < 0) has_negative = true;
            }
            if (!subtrahend_zero && !has_negative) return false;
        }
    }
    for (int i = 0; i < m.cols; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (i == j) continue;
            bool subtrahend_zero = true;
            bool has_negative = false;
            for (int k = 0; k < m.rows; ++k) {
                if (m.at(k, j) != 0) subtrahend_zero = false;
                if (m.at(k, i) - m.at(k, j) < 0) has_negative = true;
            }
            if (!subtrahend_zero && !has_negative) return false;
        }
    }
    return true;
}

bool is_general_reduced(const Mat2& m) {
    return is_general_reduced(MatGeneral(2, 2, {m.a, m.b, m.c, m.d}));
}

Det0Class classify_det0(const Mat2& m) {
    if (det(m) != 0)
        throw std::invalid_argument("classify_det0 requires determinant zero");
    int64_t a = m.a, b = m.b, c = m.c, d = m.d;
    // Row phase: subtract the smaller row from the larger until a row is zero.
    // Rows of a determinant-zero non-negative matrix are proportional, so
    // they are always componentwise comparable; ties reduce row 1.
    while ((a != 0 || b != 0) && (c != 0 || d != 0)) {
        if (a >= c && b >= d) {
            a -= c;
            b -= d;
        } else if (c >= a && d >= b) {
            c -= a;
            d -= b;
        } else {
            throw std::logic_error("det-0 rows are not proportional");
        }
    }
    // Column phase on the remaining non-zero row.
    while ((a != 0 || c != 0) && (b != 0 || d != 0)) {
        if (a >= b && c >= d) {
            a -= b;
            c -= d;
        } else if (b >= a && d >= c) {
            b -= a;
            d -= c;
        } else {
            throw std::logic_error("det-0 columns are not proportional");
        }
    }
    Mat2 terminal(a, b, c, d);
    Det0Class out{terminal, 0, 0, 0, false};
    int nonzero = 0;
    if (a != 0) { out.value = a; out.row = 1; out.col = 1; ++nonzero; }
    if (b != 0) { out.value = b; out.row = 1; out.col = 2; ++nonzero; }
    if (c != 0) { out.value = c; out.row = 2; out.col = 1; ++nonzero; }
    if (d != 0) { out.value = d; out.row = 2; out.col = 2; ++nonzero; }
    if (nonzero > 1)
        throw std::logic_error("det-0 reduction did not reach a single entry");
    out.degenerate = nonzero == 0;
    return out;
}

}  // namespace euclidsail
