#include "specht/linalg.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace specht {

Rat SparseMatrix::at(int r, int c) const {
    auto it = e_.find({r, c});
    return it == e_.end() ? Rat(0) : it->second;
}

void SparseMatrix::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index");
    if (v == 0) e_.erase({r, c});
    else e_[{r, c}] = v;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (auto& [rc, v] : e_) t.set(rc.second, rc.first, v);
    return t;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

RowReduction row_reduce(const SparseMatrix& m) {
    // Dense row workspace; desk-scale matrices only.
    std::vector<std::map<int, Rat>> rows(m.rows());
    for (auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;

    RowReduction out{SparseMatrix(m.rows(), m.cols()), 0, {}};
    int next_row = 0;
    for (int col = 0; col < m.cols() && next_row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = next_row; r < m.rows(); ++r) {
            auto it = rows[r].find(col);
            if (it != rows[r].end() && it->second != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[next_row]);
        Rat inv = Rat(1) / rows[next_row][col];
        for (auto& [c, v] : rows[next_row]) v *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == next_row) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end() || it->second == 0) continue;
            Rat f = it->second;
            for (auto& [c, v] : rows[next_row]) {
                Rat nv = (rows[r].count(c) ? rows[r][c] : Rat(0)) - f * v;
                if (nv == 0) rows[r].erase(c);
                else rows[r][c] = nv;
            }
        }
        out.pivot_cols.push_back(col);
        ++next_row;
    }
    out.rank = next_row;
    for (int r = 0; r < m.rows(); ++r)
        for (auto& [c, v] : rows[r])
            if (v != 0) out.reduced.set(r, c, v);
    return out;
}

LinearSolution solve(const SparseMatrix& m, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("rhs dimension mismatch");
    SparseMatrix aug(m.rows(), m.cols() + 1);
    for (auto& [rc, v] : m.entries()) aug.set(rc.first, rc.second, v);
    for (int r = 0; r < m.rows(); ++r)
        if (b[r] != 0) aug.set(r, m.cols(), b[r]);
    RowReduction rr = row_reduce(aug);

    LinearSolution sol;
    for (int c : rr.pivot_cols)
        if (c == m.cols()) return sol;  // inconsistent
    sol.consistent = true;
    sol.particular.assign(m.cols(), Rat(0));
    std::set<int> pivots(rr.pivot_cols.begin(), rr.pivot_cols.end());
    for (int r = 0; r < static_cast<int>(rr.pivot_cols.size()); ++r)
        sol.particular[rr.pivot_cols[r]] = rr.reduced.at(r, m.cols());
    for (int c = 0; c < m.cols(); ++c) {
        if (pivots.count(c)) continue;
        std::vector<Rat> vec(m.cols(), Rat(0));
        vec[c] = 1;
        for (int r = 0; r < static_cast<int>(rr.pivot_cols.size()); ++r)
            vec[rr.pivot_cols[r]] = -rr.reduced.at(r, c);
        sol.nullspace.push_back(std::move(vec));
    }
    return sol;
}

bool EchelonSpan::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    auto [pc, pv] = *v.begin();
    Rat inv = Rat(1) / pv;
    for (auto& [c, x] : v) x *= inv;
    // back-substitute into existing rows
    for (auto& [p, row] : rows_) {
        auto it = row.find(pc);
        if (it == row.end()) continue;
        Rat f = it->second;
        for (auto& [c, x] : v) {
            auto jt = row.find(c);
            Rat nv = (jt == row.end() ? Rat(0) : jt->second) - f * x;
            if (nv == 0) row.erase(c);
            else row[c] = nv;
        }
    }
    rows_[pc] = std::move(v);
    return true;
}

SparseVec EchelonSpan::reduce(SparseVec v) const {
    // Rows are mutually reduced and monic with the pivot as smallest
    // coordinate, so one ascending pass suffices.
    for (auto& [p, row] : rows_) {
        auto it = v.find(p);
        if (it == v.end()) continue;
        Rat f = it->second;
        for (auto& [c, x] : row) {
            auto kt = v.find(c);
            Rat nv = (kt == v.end() ? Rat(0) : kt->second) - f * x;
            if (nv == 0) {
                if (kt != v.end()) v.erase(kt);
            } else {
                v[c] = nv;
            }
        }
    }
    return v;
}

void GradedSpace::add_label(const std::string& label, int degree) {
    for (auto& [l, d] : degrees_)
        if (l == label) throw std::invalid_argument("duplicate basis label");
    degrees_.emplace_back(label, degree);
}

Laurent GradedSpace::graded_dimension() const {
    Laurent p;
    for (auto& [l, d] : degrees_) p += Laurent::q_power(d);
    return p;
}

}  // namespace specht
