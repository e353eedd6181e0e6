#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "derham/polynomial.hpp"

namespace derham {

struct SparseEntry {
    std::uint32_t col;
    Integer value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by column, no zero values.
using SparseRow = std::vector<SparseEntry>;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

struct EliminationStats {
    std::size_t rows_in = 0;
    std::size_t rows_distinct = 0;
    /// Rows passed to the exact elimination.
    std::size_t rows_used = 0;
    std::size_t rank = 0;
    std::size_t fill_peak = 0;
};

/// Divides by the gcd of the entries and makes the first entry positive.
void make_primitive(SparseRow& row);

/// Exact right kernel of an integer matrix given as sparse rows.
///
/// Fraction-free sparse elimination: every row stays integral and primitive,
/// pivots are taken from the shortest remaining row at its least-occupied column.
/// Overdetermined systems are first cut down to a row basis found modulo a
/// 31-bit prime; the resulting kernel is checked exactly against every row and
/// the full system is eliminated if the check fails.
/// The kernel is returned as the rows of a matrix in reduced row echelon form.
std::vector<RationalVector> integer_nullspace(std::vector<SparseRow> rows, std::size_t ncols,
                                              EliminationStats* stats = nullptr);

/// In-place reduced row echelon form over Q; returns the pivot column of each
/// nonzero row. Zero rows are removed.
std::vector<std::size_t> reduce_to_rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

}  // namespace derham
