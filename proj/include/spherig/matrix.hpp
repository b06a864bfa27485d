#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spherig/rational.hpp"

namespace spherig {

// Dense exact-rational matrix with optional row/column labels. Problem
// sizes stay in the low hundreds of columns, so no sparsity machinery.
struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> a;  // row major
    std::vector<std::string> row_labels;  // empty or size rows
    std::vector<std::string> col_labels;  // empty or size cols

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

    Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    RationalMatrix transposed() const;
};

// Exact rank over Q. Rows are scaled to integers, then eliminated with
// fraction-free (Bareiss) pivoting; deterministic for a given matrix.
std::size_t rank(const RationalMatrix& m);

// Basis of the right null space; size() == cols - rank(m) and every
// returned v satisfies M v = 0 exactly.
std::vector<RatVec> kernel_basis(const RationalMatrix& m);

// Reduced row echelon form (in place), returns pivot column per pivot row.
std::vector<std::size_t> rref_inplace(RationalMatrix& m);

RatVec matvec(const RationalMatrix& m, const RatVec& v);

bool is_zero_vec(const RatVec& v);

// Rank of the span of a vector family (rows of an ad hoc matrix).
std::size_t span_rank(const std::vector<RatVec>& vecs);

// Reduces v against an RREF'd basis matrix; the remainder is zero iff
// v lies in the span.
RatVec reduce_against_rref(const RationalMatrix& rrefm,
                           const std::vector<std::size_t>& pivots, RatVec v);

RationalMatrix from_rows(const std::vector<RatVec>& vecs);

// Scales to integer entries with content 1 and positive leading entry;
// used to print witnesses deterministically.
RatVec primitive_integer_form(const RatVec& v);

// Debug/CLI dump as array of arrays of "num/den" strings.
std::string matrix_to_json_string(const RationalMatrix& m);

}  // namespace spherig
