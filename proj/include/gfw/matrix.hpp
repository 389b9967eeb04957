#ifndef GFW_MATRIX_HPP
#define GFW_MATRIX_HPP

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gfw/rational.hpp"

namespace gfw {

/// Sparse matrix over the rationals. Only nonzero entries are stored, keyed
/// by (row, col); iteration order is therefore independent of insertion order.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(long rows, long cols) : rows_(rows), cols_(cols) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    void set(long r, long c, Rat v);
    void add(long r, long c, const Rat& v);
    const Rat& at(long r, long c) const;

    const std::map<std::pair<long, long>, Rat>& entries() const { return entries_; }

private:
    long rows_ = 0;
    long cols_ = 0;
    std::map<std::pair<long, long>, Rat> entries_;
};

/// Rank over the rationals (fraction-free elimination on denominator-cleared rows).
long rank(const SparseMatrix& m);

/// Basis of { v : m v = 0 }. One vector per free column, in ascending column
/// order, normalized so the free coordinate is 1. size == cols - rank.
std::vector<std::vector<Rat>> kernel_basis(const SparseMatrix& m);

/// Some x with m x = b, or nullopt when b is outside the column span. The
/// solution is the canonical one with all free variables set to zero.
/// Throws std::invalid_argument when b has the wrong length.
std::optional<std::vector<Rat>> solve(const SparseMatrix& m, std::span<const Rat> b);

/// Row-reduces the given vectors (each of length width) to a canonical
/// reduced echelon basis of their span; zero rows are dropped.
std::vector<std::vector<Rat>> echelon_span(std::vector<std::vector<Rat>> vectors, long width);

}  // namespace gfw

#endif
