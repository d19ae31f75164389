#include "specht/fock.hpp"

#include <functional>
#include <sstream>

#include "specht/spechtmod.hpp"

namespace specht {

FockVector fock_basis_vector(const Multipartition& mp) {
    FockVector v;
    v[mp] = Laurent(1);
    return v;
}

namespace {

void fock_add(FockVector& out, const Multipartition& mp, const Laurent& c) {
    Laurent& cur = out[mp];
    cur += c;
    if (cur.is_zero()) out.erase(mp);
}

}  // namespace

FockVector apply_f(const CartanType& ct, const Multicharge& kappa, int i, const FockVector& v) {
    ct.check_index(i);
    FockVector out;
    for (auto& [mp, c] : v)
        for (const Node& a : addable_nodes(ct, kappa, mp, i)) {
            int da = d_statistics(ct, kappa, mp, a).d_above;
            fock_add(out, mp.with_node(a), Laurent::q_power(-da) * c);
        }
    return out;
}

FockVector apply_e(const CartanType& ct, const Multicharge& kappa, int i, const FockVector& v) {
    ct.check_index(i);
    FockVector out;
    for (auto& [mp, c] : v)
        for (const Node& a : removable_nodes(ct, kappa, mp, i)) {
            int da = d_statistics(ct, kappa, mp, a).d_below;
            fock_add(out, mp.without_node(a), Laurent::q_power(da) * c);
        }
    return out;
}

FockVector apply_k(const CartanType& ct, const Multicharge& kappa, int i, const FockVector& v) {
    ct.check_index(i);
    FockVector out;
    const int d = ct.symmetrizer(i);
    for (auto& [mp, c] : v) {
        int di = static_cast<int>(addable_nodes(ct, kappa, mp, i).size()) -
                 static_cast<int>(removable_nodes(ct, kappa, mp, i).size());
        fock_add(out, mp, Laurent::q_power(d * di) * c);
    }
    return out;
}

Laurent k_statistic(const CartanType& ct, const Multicharge& kappa, const Multipartition& mp) {
    Laurent out;
    for (const Tableau& t : standard_tableaux(mp)) out += Laurent::q_power(degree(ct, kappa, t));
    return out;
}

Laurent k_statistic(const CartanType& ct, const Multicharge& kappa, const Multipartition& mp,
                    const std::vector<int>& nu) {
    Laurent out;
    for (const Tableau& t : standard_tableaux(mp))
        if (residue_word(ct, kappa, t) == nu) out += Laurent::q_power(degree(ct, kappa, t));
    return out;
}

Laurent dim_formula_rhs(const CartanType& ct, const Multicharge& kappa, const RootVector& beta,
                        const std::vector<int>& nu, const std::vector<int>& nu_prime) {
    auto content_of_word = [&](const std::vector<int>& w) {
        RootVector b;
        for (int i : w) b.add(i);
        return b;
    };
    if (!(content_of_word(nu) == beta) || !(content_of_word(nu_prime) == beta))
        throw std::invalid_argument("residue word content does not match beta");
    Laurent out;
    const int n = beta.height();
    for (const Multipartition& mp : multipartitions(static_cast<int>(kappa.size()), n)) {
        if (!(content(ct, kappa, mp) == beta)) continue;
        out += k_statistic(ct, kappa, mp, nu) * k_statistic(ct, kappa, mp, nu_prime);
    }
    return out;
}

CommutatorReport commutator_check(const CartanType& ct, const Multicharge& kappa, int n_max) {
    CommutatorReport rep;
    // Relevant indices: residues that can occur up to size n_max plus one step.
    std::vector<int> indices;
    {
        std::map<int, bool> seen;
        for (int n = 0; n <= n_max + 1; ++n)
            for (const Multipartition& mp : multipartitions(static_cast<int>(kappa.size()), n))
                for (const Node& a : mp.addable_nodes()) seen[residue_of_node(ct, kappa, a)] = true;
        for (auto& [i, b] : seen) indices.push_back(i);
    }
    for (int n = 0; n <= n_max && rep.pass; ++n) {
        for (const Multipartition& mp : multipartitions(static_cast<int>(kappa.size()), n)) {
            FockVector v = fock_basis_vector(mp);
            for (int i : indices) {
                for (int j : indices) {
                    FockVector lhs = apply_e(ct, kappa, i, apply_f(ct, kappa, j, v));
                    FockVector sub = apply_f(ct, kappa, j, apply_e(ct, kappa, i, v));
                    for (auto& [m, c] : sub) fock_add(lhs, m, -c);
                    FockVector rhs;
                    if (i == j) {
                        int di = static_cast<int>(addable_nodes(ct, kappa, mp, i).size()) -
                                 static_cast<int>(removable_nodes(ct, kappa, mp, i).size());
                        Laurent coeff = quantum_integer_scaled(di, ct.symmetrizer(i));
                        if (!coeff.is_zero()) rhs[mp] = coeff;
                    }
                    if (lhs != rhs) {
                        rep.pass = false;
                        std::ostringstream os;
                        os << "commutator defect at i=" << i << " j=" << j << " shape " << mp;
                        rep.witness = os.str();
                        return rep;
                    }
                }
            }
        }
    }
    return rep;
}

CategorificationReport categorification_check(const CartanType& ct, const Multicharge& kappa,
                                              int n_max) {
    if (ct.is_affine())
        throw std::invalid_argument("categorification comparison runs in infinite type");
    CategorificationReport rep;
    DominantWeight lam = weight_of_multicharge(ct, kappa);
    std::map<Multipartition, Character> cache;
    auto module_char = [&](const Multipartition& m) -> const Character& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        SpechtModule sub(ct, kappa, m);
        return cache.emplace(m, sub.graded_character()).first->second;
    };
    for (int n = 0; n <= n_max && rep.pass; ++n) {
        for (const Multipartition& mp : multipartitions(static_cast<int>(kappa.size()), n)) {
            RootVector beta = content(ct, kappa, mp);
            std::map<int, bool> indices;
            for (const Node& a : mp.addable_nodes()) indices[residue_of_node(ct, kappa, a)] = true;
            for (auto& [i, unused] : indices) {
                const int shift =
                    (weight_pairing(ct, i, lam, beta) - 1) * ct.bilinear(i, i) / 2;
                // combinatorial side: tableau statistics only
                Character fock_side;
                for (const Node& b : addable_nodes(ct, kappa, mp, i)) {
                    int db = d_statistics(ct, kappa, mp, b).d_above;
                    Multipartition big = mp.with_node(b);
                    for (const Tableau& t : standard_tableaux(big)) {
                        fock_side[residue_word(ct, kappa, t)] +=
                            Laurent::q_power(degree(ct, kappa, t) - db + shift);
                    }
                }
                // module side: Specht characters from the quotient construction
                Character module_side;
                for (const Node& b : addable_nodes(ct, kappa, mp, i)) {
                    int db = d_statistics(ct, kappa, mp, b).d_above;
                    for (auto& [nu, poly] : module_char(mp.with_node(b)))
                        module_side[nu] += Laurent::q_power(-db + shift) * poly;
                }
                if (fock_side != module_side) {
                    rep.pass = false;
                    std::ostringstream os;
                    os << "induction character defect at i=" << i << " shape " << mp;
                    rep.witness = os.str();
                    return rep;
                }
            }
        }
    }
    return rep;
}

}  // namespace specht
