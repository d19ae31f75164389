#include "specht/tableau.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace specht {

std::ostream& operator<<(std::ostream& os, const Node& a) {
    return os << "(" << a.row << "," << a.col << "," << a.comp << ")";
}

Multipartition::Multipartition(std::vector<std::vector<int>> comps, bool require_partitions)
    : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("level must be >= 1");
    for (auto& p : comps_) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        for (size_t j = 0; j < p.size(); ++j) {
            if (p[j] < 0) throw std::invalid_argument("negative part");
            if (require_partitions && j + 1 < p.size() && p[j] < p[j + 1])
                throw std::invalid_argument("component not weakly decreasing");
        }
    }
}

Multipartition Multipartition::empty(int level) {
    return Multipartition(std::vector<std::vector<int>>(level), false);
}

int Multipartition::size() const {
    int n = 0;
    for (auto& p : comps_)
        for (int x : p) n += x;
    return n;
}

int Multipartition::row_length(int comp, int row) const {
    if (comp < 1 || comp > level() || row < 1) return 0;
    const auto& p = comps_[comp - 1];
    return row <= static_cast<int>(p.size()) ? p[row - 1] : 0;
}

bool Multipartition::contains(const Node& a) const {
    return a.comp >= 1 && a.comp <= level() && a.row >= 1 && a.col >= 1 &&
           a.col <= row_length(a.comp, a.row);
}

bool Multipartition::is_partition_valued() const {
    for (auto& p : comps_)
        for (size_t j = 0; j + 1 < p.size(); ++j)
            if (p[j] < p[j + 1]) return false;
    return true;
}

std::vector<Node> Multipartition::nodes() const {
    std::vector<Node> out;
    for (int t = 1; t <= level(); ++t)
        for (int r = 1; r <= rows(t); ++r)
            for (int c = 1; c <= row_length(t, r); ++c) out.push_back({r, c, t});
    return out;
}

std::vector<Node> Multipartition::addable_nodes() const {
    std::vector<Node> out;
    for (int t = 1; t <= level(); ++t) {
        const int nr = rows(t);
        for (int r = 1; r <= nr; ++r) {
            int len = row_length(t, r);
            if (r == 1 || row_length(t, r - 1) > len) out.push_back({r, len + 1, t});
        }
        out.push_back({nr + 1, 1, t});
    }
    return out;
}

std::vector<Node> Multipartition::removable_nodes() const {
    std::vector<Node> out;
    for (int t = 1; t <= level(); ++t)
        for (int r = 1; r <= rows(t); ++r) {
            int len = row_length(t, r);
            if (len > 0 && len > row_length(t, r + 1)) out.push_back({r, len, t});
        }
    return out;
}

Multipartition Multipartition::with_node(const Node& a) const {
    auto comps = comps_;
    auto& p = comps[a.comp - 1];
    if (a.row == static_cast<int>(p.size()) + 1) {
        if (a.col != 1) throw std::invalid_argument("node not addable");
        p.push_back(1);
    } else if (a.row >= 1 && a.row <= static_cast<int>(p.size()) &&
               a.col == p[a.row - 1] + 1) {
        p[a.row - 1] += 1;
    } else {
        throw std::invalid_argument("node not addable");
    }
    return Multipartition(std::move(comps));
}

Multipartition Multipartition::without_node(const Node& a) const {
    auto comps = comps_;
    if (a.comp < 1 || a.comp > level()) throw std::invalid_argument("bad component");
    auto& p = comps[a.comp - 1];
    if (a.row < 1 || a.row > static_cast<int>(p.size()) || a.col != p[a.row - 1])
        throw std::invalid_argument("node not removable");
    p[a.row - 1] -= 1;
    return Multipartition(std::move(comps));
}

bool Multipartition::operator==(const Multipartition& o) const {
    return comps_ == o.comps_;
}

bool Multipartition::operator<(const Multipartition& o) const {
    return comps_ < o.comps_;
}

std::ostream& operator<<(std::ostream& os, const Multipartition& mp) {
    os << '[';
    for (int t = 1; t <= mp.level(); ++t) {
        if (t > 1) os << ',';
        os << '[';
        const auto& p = mp.components()[t - 1];
        for (size_t j = 0; j < p.size(); ++j) {
            if (j) os << ',';
            os << p[j];
        }
        os << ']';
    }
    return os << ']';
}

bool dominates(const Multipartition& a, const Multipartition& b) {
    if (a.level() != b.level()) throw std::invalid_argument("level mismatch");
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
    long long pa = 0, pb = 0;
    for (int t = 1; t <= a.level(); ++t) {
        int rows = std::max(a.rows(t), b.rows(t));
        long long ra = pa, rb = pb;
        for (int r = 1; r <= rows; ++r) {
            ra += a.row_length(t, r);
            rb += b.row_length(t, r);
            if (ra < rb) return false;
        }
        pa = ra;
        pb = rb;
    }
    return true;
}

Tableau::Tableau(Multipartition shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    const int n = shape_.size();
    if (static_cast<int>(entries_.size()) != n)
        throw std::invalid_argument("entry count mismatch");
    node_by_entry_.assign(n + 1, Node{});
    auto ns = shape_.nodes();
    std::vector<char> seen(n + 1, 0);
    for (int k = 0; k < n; ++k) {
        int e = entries_[k];
        if (e < 1 || e > n || seen[e]) throw std::invalid_argument("not a bijection");
        seen[e] = 1;
        node_by_entry_[e] = ns[k];
    }
}

Tableau Tableau::initial(const Multipartition& shape) {
    std::vector<int> entries(shape.size());
    for (int k = 0; k < shape.size(); ++k) entries[k] = k + 1;
    return Tableau(shape, std::move(entries));
}

int Tableau::entry(const Node& a) const {
    auto ns = shape_.nodes();
    for (size_t k = 0; k < ns.size(); ++k)
        if (ns[k] == a) return entries_[k];
    throw std::out_of_range("node not in diagram");
}

Node Tableau::node_of(int entry) const {
    if (entry < 1 || entry > size()) throw std::out_of_range("entry out of range");
    return node_by_entry_[entry];
}

bool Tableau::is_row_strict() const {
    int k = 0;
    for (int t = 1; t <= shape_.level(); ++t)
        for (int r = 1; r <= shape_.rows(t); ++r) {
            int len = shape_.row_length(t, r);
            for (int c = 1; c < len; ++c)
                if (entries_[k + c - 1] > entries_[k + c]) return false;
            k += len;
        }
    return true;
}

bool Tableau::is_column_strict() const {
    for (int t = 1; t <= shape_.level(); ++t)
        for (int r = 1; r + 1 <= shape_.rows(t); ++r)
            for (int c = 1; c <= shape_.row_length(t, r + 1); ++c)
                if (entry({r, c, t}) > entry({r + 1, c, t})) return false;
    return true;
}

Tableau Tableau::acted_by(const Perm& w) const {
    if (w.size() != size()) throw std::invalid_argument("size mismatch");
    std::vector<int> out(entries_.size());
    for (size_t k = 0; k < entries_.size(); ++k) out[k] = w(entries_[k]);
    return Tableau(shape_, std::move(out));
}

Multipartition Tableau::restricted_shape(int m) const {
    std::vector<std::vector<int>> comps(shape_.level());
    for (int t = 1; t <= shape_.level(); ++t) {
        comps[t - 1].assign(shape_.rows(t), 0);
        for (int r = 1; r <= shape_.rows(t); ++r) {
            int cnt = 0;
            for (int c = 1; c <= shape_.row_length(t, r); ++c)
                if (entry({r, c, t}) <= m) ++cnt;
            comps[t - 1][r - 1] = cnt;
        }
    }
    return Multipartition(std::move(comps), false);
}

bool Tableau::operator<(const Tableau& o) const {
    return entries_ < o.entries_;
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) {
    os << t.shape() << ':';
    os << '[';
    for (size_t k = 0; k < t.entries().size(); ++k) {
        if (k) os << ',';
        os << t.entries()[k];
    }
    return os << ']';
}

int residue_of_node(const CartanType& ct, const Multicharge& kappa, const Node& a) {
    if (a.comp < 1 || a.comp > static_cast<int>(kappa.size()))
        throw std::out_of_range("component exceeds multicharge level");
    return ct.residue(static_cast<long long>(kappa[a.comp - 1]) + a.col - a.row);
}

RootVector content(const CartanType& ct, const Multicharge& kappa, const Multipartition& mp) {
    if (mp.level() != static_cast<int>(kappa.size()))
        throw std::invalid_argument("level mismatch");
    RootVector beta;
    for (const Node& a : mp.nodes()) beta.add(residue_of_node(ct, kappa, a));
    return beta;
}

DominantWeight weight_of_multicharge(const CartanType& ct, const Multicharge& kappa) {
    DominantWeight w;
    for (int k : kappa) w.add(ct.residue(k));
    return w;
}

std::vector<int> residue_word(const CartanType& ct, const Multicharge& kappa, const Tableau& t) {
    std::vector<int> nu(t.size());
    for (int e = 1; e <= t.size(); ++e) nu[e - 1] = residue_of_node(ct, kappa, t.node_of(e));
    return nu;
}

std::vector<Node> addable_nodes(const CartanType& ct, const Multicharge& kappa,
                                const Multipartition& mp, int i) {
    std::vector<Node> out;
    for (const Node& a : mp.addable_nodes())
        if (residue_of_node(ct, kappa, a) == i) out.push_back(a);
    return out;
}

std::vector<Node> removable_nodes(const CartanType& ct, const Multicharge& kappa,
                                  const Multipartition& mp, int i) {
    std::vector<Node> out;
    for (const Node& a : mp.removable_nodes())
        if (residue_of_node(ct, kappa, a) == i) out.push_back(a);
    return out;
}

DStats d_statistics(const CartanType& ct, const Multicharge& kappa,
                    const Multipartition& mp, const Node& a) {
    const int i = residue_of_node(ct, kappa, a);
    auto add = addable_nodes(ct, kappa, mp, i);
    auto rem = removable_nodes(ct, kappa, mp, i);
    bool ok = std::find(add.begin(), add.end(), a) != add.end() ||
              std::find(rem.begin(), rem.end(), a) != rem.end();
    if (!ok) throw std::invalid_argument("node neither addable nor removable");
    DStats s;
    s.d_i = static_cast<int>(add.size()) - static_cast<int>(rem.size());
    int below = 0, above = 0;
    for (const Node& x : add) {
        if (x.below(a)) ++below;
        if (x.above(a)) ++above;
    }
    for (const Node& x : rem) {
        if (x.below(a)) --below;
        if (x.above(a)) --above;
    }
    const int d = ct.symmetrizer(i);
    s.d_below = d * below;
    s.d_above = d * above;
    return s;
}

int degree(const CartanType& ct, const Multicharge& kappa, const Tableau& t) {
    if (!t.is_standard()) throw std::invalid_argument("tableau not standard");
    int deg = 0;
    Multipartition shape = t.shape();
    for (int m = t.size(); m >= 1; --m) {
        Node a = t.node_of(m);
        deg += d_statistics(ct, kappa, shape, a).d_below;
        shape = shape.without_node(a);
    }
    return deg;
}

bool tableau_dominates(const Tableau& t, const Tableau& s) {
    if (!(t.shape() == s.shape())) throw std::invalid_argument("shape mismatch");
    return bruhat_leq(t.permutation(), s.permutation());
}

bool is_garnir_node(const Multipartition& mp, const Node& a) {
    return mp.contains(a) && mp.contains({a.row + 1, a.col, a.comp});
}

std::vector<Node> garnir_nodes(const Multipartition& mp) {
    std::vector<Node> out;
    for (const Node& a : mp.nodes())
        if (is_garnir_node(mp, a)) out.push_back(a);
    return out;
}

std::vector<Node> garnir_belt(const Multipartition& mp, const Node& a) {
    if (!is_garnir_node(mp, a)) throw std::invalid_argument("not a Garnir node");
    std::vector<Node> belt;
    for (int col = a.col; col <= mp.row_length(a.comp, a.row); ++col)
        belt.push_back({a.row, col, a.comp});
    for (int col = 1; col <= a.col; ++col) belt.push_back({a.row + 1, col, a.comp});
    return belt;
}

Tableau garnir_tableau(const Multipartition& mp, const Node& a) {
    if (!is_garnir_node(mp, a)) throw std::invalid_argument("not a Garnir node");
    Tableau ini = Tableau::initial(mp);
    const int u = ini.entry(a);
    std::vector<int> entries = ini.entries();
    auto ns = mp.nodes();
    int next = u;
    // second belt row first, bottom left to top right
    for (int col = 1; col <= a.col; ++col) {
        Node x{a.row + 1, col, a.comp};
        for (size_t k = 0; k < ns.size(); ++k)
            if (ns[k] == x) entries[k] = next;
        ++next;
    }
    for (int col = a.col; col <= mp.row_length(a.comp, a.row); ++col) {
        Node x{a.row, col, a.comp};
        for (size_t k = 0; k < ns.size(); ++k)
            if (ns[k] == x) entries[k] = next;
        ++next;
    }
    return Tableau(mp, std::move(entries));
}

Perm garnir_word(const Multipartition& mp, const Node& a) {
    if (!is_garnir_node(mp, a)) throw std::invalid_argument("not a Garnir node");
    int off = 0;
    for (int t = 1; t < a.comp; ++t)
        for (int r = 1; r <= mp.rows(t); ++r) off += mp.row_length(t, r);
    for (int r = 1; r < a.row; ++r) off += mp.row_length(a.comp, r);
    off += a.col - 1;
    return block_transposition(mp.size(), off,
                               mp.row_length(a.comp, a.row) - a.col + 1, a.col);
}

namespace {

// Fill the given nodes with consecutive entries starting at `next`.
void fill_run(std::vector<int>& entries, const std::vector<Node>& order,
              const std::vector<Node>& ns, int& next) {
    for (const Node& x : order) {
        for (size_t k = 0; k < ns.size(); ++k)
            if (ns[k] == x) entries[k] = next;
        ++next;
    }
}

}  // namespace

Tableau generalized_garnir(const Multipartition& mp, const Node& a0, const Node& b0) {
    if (!is_garnir_node(mp, a0) || !is_garnir_node(mp, b0))
        throw std::invalid_argument("not a Garnir node");
    if (a0 == b0) throw std::invalid_argument("nodes must be distinct");
    Node a = a0, b = b0;

    // Same row: orient so a.col < b.col.
    if (a.comp == b.comp && a.row == b.row && a.col > b.col) std::swap(a, b);
    // Adjacent rows: orient so b is the upper node.
    if (a.comp == b.comp && b.row + 1 == a.row && b.col >= a.col) {
        // case (3) with roles already correct
    } else if (a.comp == b.comp && a.row + 1 == b.row && a.col >= b.col) {
        std::swap(a, b);
    }

    auto belt_a = garnir_belt(mp, a);
    auto belt_b = garnir_belt(mp, b);
    bool disjoint = true;
    for (const Node& x : belt_a)
        for (const Node& y : belt_b)
            if (x == y) disjoint = false;

    Tableau ini = Tableau::initial(mp);
    auto ns = mp.nodes();

    if (disjoint) {
        Tableau ga = garnir_tableau(mp, a);
        std::vector<int> entries = ga.entries();
        Tableau gb = garnir_tableau(mp, b);
        for (const Node& x : belt_b) {
            for (size_t k = 0; k < ns.size(); ++k)
                if (ns[k] == x) entries[k] = gb.entry(x);
        }
        return Tableau(mp, std::move(entries));
    }

    std::vector<int> entries = ini.entries();
    if (a.row == b.row) {
        // overlapping same-row belts: a.col < b.col
        const int r = a.row, t = a.comp, c = a.col, cp = b.col;
        int next = ini.entry(a);
        std::vector<Node> run1, run2;
        for (int col = 1; col <= c; ++col) run1.push_back({r + 1, col, t});
        for (int col = c; col < cp; ++col) run1.push_back({r, col, t});
        for (int col = c + 1; col <= cp; ++col) run2.push_back({r + 1, col, t});
        for (int col = cp; col <= mp.row_length(t, r); ++col) run2.push_back({r, col, t});
        fill_run(entries, run1, ns, next);
        fill_run(entries, run2, ns, next);
        return Tableau(mp, std::move(entries));
    }

    // Three-row case: a = (r,c,t), b = (r-1,c',t) with c' >= c.
    const int r = a.row, t = a.comp, c = a.col, cp = b.col;
    int next = ini.entry({r - 1, 1, t});
    std::vector<Node> pre, belt, post;
    for (int col = 1; col < cp; ++col) pre.push_back({r - 1, col, t});
    for (int col = 1; col < c; ++col) pre.push_back({r, col, t});
    for (int col = 1; col <= c; ++col) belt.push_back({r + 1, col, t});
    for (int col = c; col <= cp; ++col) belt.push_back({r, col, t});
    for (int col = cp; col <= mp.row_length(t, r - 1); ++col) belt.push_back({r - 1, col, t});
    for (int col = cp + 1; col <= mp.row_length(t, r); ++col) post.push_back({r, col, t});
    for (int col = c + 1; col <= mp.row_length(t, r + 1); ++col) post.push_back({r + 1, col, t});
    fill_run(entries, pre, ns, next);
    fill_run(entries, belt, ns, next);
    fill_run(entries, post, ns, next);
    return Tableau(mp, std::move(entries));
}

std::pair<Node, Perm> straighten_witness(const CartanType&, const Tableau& t) {
    if (!t.is_row_strict() || t.is_standard())
        throw std::invalid_argument("tableau must be row-strict and non-standard");
    const Multipartition& mp = t.shape();
    for (const Node& a : mp.nodes()) {
        if (!is_garnir_node(mp, a)) continue;
        if (t.entry(a) > t.entry({a.row + 1, a.col, a.comp})) {
            Perm wg = garnir_tableau(mp, a).permutation();
            Perm wt = t.permutation();
            Perm w = wt * wg.inverse();
            if (wt.length() != w.length() + wg.length())
                throw std::logic_error("straightening length defect");
            return {a, w};
        }
    }
    throw std::logic_error("no column descent in a non-standard tableau");
}

namespace {

void sort_tableaux(std::vector<Tableau>& ts) {
    std::sort(ts.begin(), ts.end(), [](const Tableau& x, const Tableau& y) {
        int lx = x.permutation().length(), ly = y.permutation().length();
        if (lx != ly) return lx < ly;
        return x.entries() < y.entries();
    });
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Multipartition& mp) {
    std::vector<Tableau> out;
    const int n = mp.size();
    std::vector<std::pair<Node, int>> assignment;
    std::function<void(const Multipartition&, int)> rec = [&](const Multipartition& shape, int m) {
        if (m == 0) {
            std::vector<int> entries(n);
            Tableau ini = Tableau::initial(mp);
            auto ns = mp.nodes();
            for (auto& [node, e] : assignment)
                for (size_t k = 0; k < ns.size(); ++k)
                    if (ns[k] == node) entries[k] = e;
            out.emplace_back(mp, std::move(entries));
            return;
        }
        for (const Node& b : shape.removable_nodes()) {
            assignment.emplace_back(b, m);
            rec(shape.without_node(b), m - 1);
            assignment.pop_back();
        }
    };
    rec(mp, n);
    sort_tableaux(out);
    return out;
}

std::vector<Tableau> row_strict_tableaux(const Multipartition& mp) {
    // Choose the entry set of each row in reading order; each row is filled
    // increasingly.
    std::vector<int> row_sizes;
    for (int t = 1; t <= mp.level(); ++t)
        for (int r = 1; r <= mp.rows(t); ++r) row_sizes.push_back(mp.row_length(t, r));
    const int n = mp.size();
    std::vector<Tableau> out;
    std::vector<int> entries;
    std::vector<int> remaining(n);
    for (int k = 0; k < n; ++k) remaining[k] = k + 1;

    std::function<void(size_t, std::vector<int>&)> rec = [&](size_t row, std::vector<int>& rem) {
        if (row == row_sizes.size()) {
            out.emplace_back(mp, entries);
            return;
        }
        int sz = row_sizes[row];
        std::vector<int> idx(sz);
        for (int k = 0; k < sz; ++k) idx[k] = k;
        for (;;) {
            std::vector<int> rest;
            std::vector<char> used(rem.size(), 0);
            for (int k : idx) {
                entries.push_back(rem[k]);
                used[k] = 1;
            }
            for (size_t k = 0; k < rem.size(); ++k)
                if (!used[k]) rest.push_back(rem[k]);
            rec(row + 1, rest);
            entries.resize(entries.size() - sz);
            // next combination
            int i = sz - 1;
            while (i >= 0 && idx[i] == static_cast<int>(rem.size()) - (sz - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    rec(0, remaining);
    sort_tableaux(out);
    return out;
}

BrickDecomposition brick_decomposition(const CartanType& ct, const Multicharge& kappa,
                                       const Multipartition& mp, const Node& a) {
    if (!ct.is_affine()) throw std::invalid_argument("bricks are defined in affine type only");
    if (!is_garnir_node(mp, a)) throw std::invalid_argument("not a Garnir node");
    (void)kappa;
    const int ell = ct.rank();
    const int w = 2 * ell;
    const int r = a.row, c = a.col, comp = a.comp;
    const int row_r_len = mp.row_length(comp, r);

    BrickDecomposition bd;
    bd.garnir_node = a;
    Tableau ga = garnir_tableau(mp, a);
    const int u = Tableau::initial(mp).entry(a);

    // Bricks in the belt's second row (row r+1): start columns congruent to
    // c+1 mod 2l, fully inside columns 1..c; they tile a suffix ending at c.
    std::vector<int> starts_r1;
    for (int e = c; e - w + 1 >= 1; e -= w) starts_r1.push_back(e - w + 1);
    std::reverse(starts_r1.begin(), starts_r1.end());
    // Bricks in the belt's first row (row r): start at c, c+2l, ...
    std::vector<int> starts_r;
    for (int bcol = c; bcol + w - 1 <= row_r_len; bcol += w) starts_r.push_back(bcol);

    for (int bcol : starts_r1) {
        std::vector<Node> brick;
        for (int col = bcol; col < bcol + w; ++col) brick.push_back({r + 1, col, comp});
        bd.bricks.push_back(std::move(brick));
    }
    for (int bcol : starts_r) {
        std::vector<Node> brick;
        for (int col = bcol; col < bcol + w; ++col) brick.push_back({r, col, comp});
        bd.bricks.push_back(std::move(brick));
    }
    bd.row_r_bricks = static_cast<int>(starts_r.size());
    bd.row_r1_bricks = static_cast<int>(starts_r1.size());

    const int k = static_cast<int>(bd.bricks.size());
    if (k > 0) {
        int d = ga.entry(bd.bricks.front().front());
        bd.first_entry = d;
        // entries of the bricks are consecutive: d .. d + 2lk - 1
        // dominant rearrangement: row r bricks first, then row r+1 bricks
        std::vector<int> entries = ga.entries();
        auto ns = mp.nodes();
        int next = d;
        auto assign = [&](const std::vector<Node>& brick) {
            for (const Node& x : brick) {
                for (size_t j = 0; j < ns.size(); ++j)
                    if (ns[j] == x) entries[j] = next;
                ++next;
            }
        };
        for (int bidx = bd.row_r1_bricks; bidx < k; ++bidx) assign(bd.bricks[bidx]);
        for (int bidx = 0; bidx < bd.row_r1_bricks; ++bidx) assign(bd.bricks[bidx]);
        bd.dominant_tableau = Tableau(mp, std::move(entries));
        for (int j = 1; j < k; ++j)
            bd.brick_transpositions.push_back(
                block_transposition(mp.size(), d + 2 * (j - 1) * ell - 1, w, w));
    } else {
        bd.first_entry = 0;
        bd.dominant_tableau = ga;
    }

    // Residue alignment of each brick's first node.
    for (auto& brick : bd.bricks) {
        const Node& f = brick.front();
        long long lhs = static_cast<long long>(kappa[comp - 1]) + f.col - f.row;
        long long rhs = static_cast<long long>(kappa[comp - 1]) + c - r;
        if (((lhs - rhs) % w + w) % w != 0) throw std::logic_error("brick misaligned");
    }
    return bd;
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

std::vector<Multipartition> multipartitions(int level, int n) {
    std::vector<Multipartition> out;
    std::vector<std::vector<int>> chosen(level);
    std::function<void(int, int)> rec = [&](int comp, int rest) {
        if (comp == level) {
            out.push_back(Multipartition(chosen));
            return;
        }
        int lo = (comp == level - 1) ? rest : 0;
        for (int take = lo; take <= rest; ++take) {
            for (auto& p : partitions_of(take)) {
                chosen[comp] = p;
                rec(comp + 1, rest - take);
            }
        }
    };
    rec(0, n);
    return out;
}

}  // namespace specht
