#pragma once

#include <optional>
#include <tuple>
#include <vector>
#include <iosfwd>

#include "specht/cartan.hpp"
#include "specht/perm.hpp"

namespace specht {

// Node of a Young diagram: 1-based row, column, component.
struct Node {
    int row = 0, col = 0, comp = 0;
    bool operator==(const Node& o) const {
        return row == o.row && col == o.col && comp == o.comp;
    }
    bool operator!=(const Node& o) const { return !(*this == o); }
    bool operator<(const Node& o) const {
        return std::tie(comp, row, col) < std::tie(o.comp, o.row, o.col);
    }
    // "below": later component, or same component and larger row.
    bool below(const Node& o) const {
        return comp > o.comp || (comp == o.comp && row > o.row);
    }
    bool above(const Node& o) const { return o.below(*this); }
};

std::ostream& operator<<(std::ostream& os, const Node& a);

using Multicharge = std::vector<int>;

// l-multipartition (components weakly decreasing).  The same class also
// carries multicompositions for dominance comparisons of shapes of
// row-strict tableaux; `is_partition_valued` distinguishes them.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<std::vector<int>> comps, bool require_partitions = true);

    static Multipartition empty(int level);

    int level() const { return static_cast<int>(comps_.size()); }
    int size() const;
    const std::vector<std::vector<int>>& components() const { return comps_; }
    int row_length(int comp, int row) const;     // 0 if beyond
    int rows(int comp) const { return static_cast<int>(comps_[comp - 1].size()); }
    bool contains(const Node& a) const;
    bool is_partition_valued() const;

    std::vector<Node> nodes() const;             // reading order
    std::vector<Node> addable_nodes() const;     // top to bottom
    std::vector<Node> removable_nodes() const;   // top to bottom
    Multipartition with_node(const Node& a) const;
    Multipartition without_node(const Node& a) const;

    bool operator==(const Multipartition& o) const;
    bool operator<(const Multipartition& o) const;

private:
    std::vector<std::vector<int>> comps_;
};

std::ostream& operator<<(std::ostream& os, const Multipartition& mp);

// Dominance on multicompositions of equal total size.
bool dominates(const Multipartition& a, const Multipartition& b);

// Bijective filling of a Young diagram by 1..n, stored in reading order.
class Tableau {
public:
    Tableau() = default;
    Tableau(Multipartition shape, std::vector<int> entries);

    static Tableau initial(const Multipartition& shape);   // row reading filling

    const Multipartition& shape() const { return shape_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int entry(const Node& a) const;
    Node node_of(int entry) const;
    const std::vector<int>& entries() const { return entries_; }

    bool is_row_strict() const;
    bool is_column_strict() const;
    bool is_standard() const { return is_row_strict() && is_column_strict(); }

    // w with w . initial = this ("w permutes letters").
    Perm permutation() const { return Perm(entries_); }
    Tableau acted_by(const Perm& w) const;           // w . this

    // Shape of the entries <= m (a multicomposition for row-strict tableaux).
    Multipartition restricted_shape(int m) const;

    bool operator==(const Tableau& o) const {
        return shape_ == o.shape_ && entries_ == o.entries_;
    }
    bool operator<(const Tableau& o) const;

private:
    Multipartition shape_;
    std::vector<int> entries_;
    std::vector<Node> node_by_entry_;
};

std::ostream& operator<<(std::ostream& os, const Tableau& t);

int residue_of_node(const CartanType& ct, const Multicharge& kappa, const Node& a);
RootVector content(const CartanType& ct, const Multicharge& kappa, const Multipartition& mp);
DominantWeight weight_of_multicharge(const CartanType& ct, const Multicharge& kappa);
std::vector<int> residue_word(const CartanType& ct, const Multicharge& kappa, const Tableau& t);

std::vector<Node> addable_nodes(const CartanType& ct, const Multicharge& kappa,
                                const Multipartition& mp, int i);
std::vector<Node> removable_nodes(const CartanType& ct, const Multicharge& kappa,
                                  const Multipartition& mp, int i);

struct DStats {
    int d_i = 0;       // all addable minus all removable i-nodes
    int d_below = 0;   // d_{res A} * (addable - removable strictly below A)
    int d_above = 0;   // d_{res A} * (addable - removable strictly above A)
};
// A must be an addable or removable node of mp.
DStats d_statistics(const CartanType& ct, const Multicharge& kappa,
                    const Multipartition& mp, const Node& a);

int degree(const CartanType& ct, const Multicharge& kappa, const Tableau& t);

// t dominates s (reversal of the Bruhat order on their permutations).
bool tableau_dominates(const Tableau& t, const Tableau& s);

bool is_garnir_node(const Multipartition& mp, const Node& a);
std::vector<Node> garnir_nodes(const Multipartition& mp);
std::vector<Node> garnir_belt(const Multipartition& mp, const Node& a);
Tableau garnir_tableau(const Multipartition& mp, const Node& a);
Perm garnir_word(const Multipartition& mp, const Node& a);

Tableau generalized_garnir(const Multipartition& mp, const Node& a, const Node& b);

// For row-strict non-standard t: a Garnir node A and w with t = w . G^A,
// lengths additive.
std::pair<Node, Perm> straighten_witness(const CartanType&, const Tableau& t);

std::vector<Tableau> standard_tableaux(const Multipartition& mp);
std::vector<Tableau> row_strict_tableaux(const Multipartition& mp);

// Affine-type brick data of a Garnir belt.
struct BrickDecomposition {
    Node garnir_node;
    std::vector<std::vector<Node>> bricks;   // entry order: row r+1 then row r
    int row_r_bricks = 0;                    // count in the belt's first row
    int row_r1_bricks = 0;                   // count in the belt's second row
    int first_entry = 0;                     // smallest Garnir-tableau entry of brick 1
    Tableau dominant_tableau;                // bricks reordered along row r then r+1
    std::vector<Perm> brick_transpositions;  // w_1 .. w_{k-1}
};

BrickDecomposition brick_decomposition(const CartanType& ct, const Multicharge& kappa,
                                       const Multipartition& mp, const Node& a);

// All multipartitions of n with the given number of components.
std::vector<Multipartition> multipartitions(int level, int n);
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace specht
