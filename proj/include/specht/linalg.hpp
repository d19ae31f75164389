#pragma once

#include <map>
#include <vector>
#include <optional>

#include "specht/laurent.hpp"
#include "specht/rational.hpp"

namespace specht {

using SparseVec = std::map<int, Rat>;

// Sparse matrix over exact rationals.
class SparseMatrix {
public:
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat at(int r, int c) const;
    void set(int r, int c, const Rat& v);
    const std::map<std::pair<int, int>, Rat>& entries() const { return e_; }
    SparseMatrix transpose() const;
    bool operator==(const SparseMatrix& o) const;

private:
    int rows_, cols_;
    std::map<std::pair<int, int>, Rat> e_;
};

struct RowReduction {
    SparseMatrix reduced;          // reduced row echelon form
    int rank = 0;
    std::vector<int> pivot_cols;
};

RowReduction row_reduce(const SparseMatrix& m);

struct LinearSolution {
    bool consistent = false;
    std::vector<Rat> particular;                 // one solution, if consistent
    std::vector<std::vector<Rat>> nullspace;     // basis of ker
};

LinearSolution solve(const SparseMatrix& m, const std::vector<Rat>& b);

// Incremental echelon span of sparse row vectors; rows kept fully reduced
// with monic pivots.
class EchelonSpan {
public:
    // Reduces v against the span; returns true (and absorbs the remainder)
    // if v was independent.
    bool insert(SparseVec v);
    // Remainder of v after reduction (empty iff v lies in the span).
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseVec>& rows() const { return rows_; }

private:
    std::map<int, SparseVec> rows_;  // pivot column -> row
};

// Graded vector space given by labelled basis elements with degrees.
class GradedSpace {
public:
    void add_label(const std::string& label, int degree);
    int dimension() const { return static_cast<int>(degrees_.size()); }
    Laurent graded_dimension() const;
    const std::vector<std::pair<std::string, int>>& labels() const { return degrees_; }

private:
    std::vector<std::pair<std::string, int>> degrees_;
};

}  // namespace specht
