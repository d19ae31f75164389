#include <doctest.h>

#include <random>

#include <stdexcept>

#include "specht/laurent.hpp"
#include "specht/linalg.hpp"

using namespace specht;

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(0) == Laurent(0));
    CHECK(quantum_integer(1) == Laurent(1));
    CHECK(quantum_integer(2) == Laurent::q_power(1) + Laurent::q_power(-1));
    CHECK(quantum_integer(3) == Laurent::q_power(2) + Laurent(1) + Laurent::q_power(-2));
    CHECK_THROWS_AS(quantum_integer(-1), std::invalid_argument);

    // (q - q^-1) [n]_q = q^n - q^-n
    Laurent q = Laurent::q_power(1), qi = Laurent::q_power(-1);
    for (int n = 0; n <= 20; ++n) {
        Laurent lhs = (q - qi) * quantum_integer(n);
        Laurent rhs = Laurent::q_power(n) - Laurent::q_power(-n);
        CHECK(lhs == rhs);
    }
    // scaled variant and negative arguments
    CHECK(quantum_integer_scaled(2, 2) == Laurent::q_power(2) + Laurent::q_power(-2));
    CHECK(quantum_integer_scaled(-3, 1) == -quantum_integer(3));
}

TEST_CASE("laurent ring basics") {
    Laurent p = Laurent::q_power(2, 3) + Laurent::q_power(-1) + Laurent(5);
    CHECK(p.coeff(2) == 3);
    CHECK(p.coeff(0) == 5);
    CHECK(p.at_one() == 9);
    CHECK(p.bar().coeff(-2) == 3);
    CHECK((p - p).is_zero());
    CHECK(p * Laurent(1) == p);
    CHECK((Laurent(2) * Laurent::q_power(3)).coeff(3) == 2);
    CHECK(p.to_string() == "q^-1+5+3*q^2");
}

namespace {

Rat det_minor(const SparseMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.empty()) return Rat(1);
    Rat acc(0);
    int sign = 1;
    for (size_t k = 0; k < rows.size(); ++k) {
        std::vector<int> r2(rows.begin() + 1, rows.end());
        std::vector<int> c2;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) c2.push_back(cols[j]);
        Rat piv = m.at(rows[0], cols[k]);
        if (piv != 0) acc += Rat(sign) * piv * det_minor(m, r2, c2);
        sign = -sign;
    }
    return acc;
}

// Largest k with a nonzero k x k minor.
int rank_by_minors(const SparseMatrix& m) {
    int best = 0;
    std::vector<int> rows, cols;
    // enumerate subsets (matrices are 6x6 at most here)
    for (unsigned rmask = 0; rmask < (1u << m.rows()); ++rmask) {
        rows.clear();
        for (int r = 0; r < m.rows(); ++r)
            if (rmask & (1u << r)) rows.push_back(r);
        if (static_cast<int>(rows.size()) <= best) continue;
        for (unsigned cmask = 0; cmask < (1u << m.cols()); ++cmask) {
            cols.clear();
            for (int c = 0; c < m.cols(); ++c)
                if (cmask & (1u << c)) cols.push_back(c);
            if (cols.size() != rows.size()) continue;
            if (det_minor(m, rows, cols) != 0) {
                best = static_cast<int>(rows.size());
                break;
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("row reduction") {
    SparseMatrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.set(i, i, Rat(1));
    auto rr = row_reduce(id);
    CHECK(rr.rank == 4);
    CHECK(rr.reduced == id);

    SparseMatrix zero(3, 5);
    CHECK(row_reduce(zero).rank == 0);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 6; ++trial) {
        SparseMatrix m(6, 6);
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) m.set(r, c, Rat(dist(rng)));
        auto red = row_reduce(m);
        CHECK(red.rank == rank_by_minors(m));
        CHECK(red.rank == row_reduce(m.transpose()).rank);
        CHECK(row_reduce(red.reduced).reduced == red.reduced);  // idempotent
    }
}

TEST_CASE("linear solve") {
    // x + y = 3, x - y = 1
    SparseMatrix m(2, 2);
    m.set(0, 0, Rat(1));
    m.set(0, 1, Rat(1));
    m.set(1, 0, Rat(1));
    m.set(1, 1, Rat(-1));
    auto sol = solve(m, {Rat(3), Rat(1)});
    REQUIRE(sol.consistent);
    CHECK(sol.particular[0] == Rat(2));
    CHECK(sol.particular[1] == Rat(1));
    CHECK(sol.nullspace.empty());

    // inconsistent
    SparseMatrix m2(2, 1);
    m2.set(0, 0, Rat(1));
    m2.set(1, 0, Rat(1));
    CHECK_FALSE(solve(m2, {Rat(0), Rat(1)}).consistent);

    // nullspace of a rank-1 2x3 system
    SparseMatrix m3(1, 3);
    m3.set(0, 0, Rat(1));
    m3.set(0, 1, Rat(2));
    m3.set(0, 2, Rat(-1));
    auto sol3 = solve(m3, {Rat(0)});
    REQUIRE(sol3.consistent);
    CHECK(sol3.nullspace.size() == 2);
    for (auto& v : sol3.nullspace) {
        Rat dot = v[0] + Rat(2) * v[1] - v[2];
        CHECK(dot == 0);
    }
}

TEST_CASE("echelon span") {
    EchelonSpan span;
    SparseVec a{{0, Rat(1)}, {2, Rat(2)}};
    SparseVec b{{2, Rat(1)}};
    SparseVec c{{0, Rat(3)}, {2, Rat(1)}};
    CHECK(span.insert(a));
    CHECK(span.insert(b));
    CHECK_FALSE(span.insert(c));  // dependent on a, b
    CHECK(span.rank() == 2);
    CHECK(span.contains(SparseVec{{0, Rat(5)}}));
    CHECK_FALSE(span.contains(SparseVec{{1, Rat(1)}}));
}

TEST_CASE("graded space") {
    GradedSpace s;
    CHECK(s.graded_dimension().is_zero());
    s.add_label("a", 1);
    s.add_label("b", -1);
    CHECK(s.graded_dimension() == quantum_integer(2));
    CHECK_THROWS_AS(s.add_label("a", 0), std::invalid_argument);
}
