#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coh1/liealg.hpp"

namespace coh1 {

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// One restricted root: its raw values on the orthonormal basis of a, its
/// root space, and (once positivity is installed) integer coordinates in the
/// simple-root basis.
struct Root {
    Eigen::VectorXd eval;      ///< alpha(A_1..A_r) for the orthonormal a-basis
    Subspace space;
    int mult = 0;
    bool positive = false;
    Eigen::VectorXi scoords;   ///< coordinates in the simple basis (exact integers)
    Eigen::VectorXd h_alpha;   ///< H_alpha in g-coordinates (set by dual_basis)
};

struct RestrictedRootDatum {
    LieAlgebraPtr g;
    CartanSplit split;
    Subspace a;                ///< orthonormal basis A_1..A_r
    Subspace g0, k0;
    std::vector<Root> roots;
    std::vector<int> simple_idx;              ///< ordered indices into roots
    std::vector<Eigen::VectorXd> h_dual;      ///< H^1..H^r in g-coordinates
    std::string type_label = "other";
    bool positivity_chosen = false;

    int rank() const { return a.dim(); }
    const Root& simple(int i) const { return roots[simple_idx[i]]; }
    int n_roots() const { return static_cast<int>(roots.size()); }

    /// Index of the root with the given integer simple-coordinates, or -1.
    int find_root(const Eigen::VectorXi& scoords) const;
    /// Index of -roots[i].
    int negative_of(int i) const;
    /// Root space by simple coordinates (throws when absent).
    const Subspace& root_space(const Eigen::VectorXi& scoords) const;
    /// Convenience for rank 2.
    const Subspace& root_space(int m1, int m2) const;
    int find_root(int m1, int m2) const;

    std::vector<int> positive_roots() const;

    /// k_alpha = {X + theta X : X in g_alpha}.
    Subspace k_alpha(int root_index) const;
    /// p_alpha = {X - theta X : X in g_alpha}.
    Subspace p_alpha(int root_index) const;

    /// Image of a subspace under theta.
    Subspace theta_image(const Subspace& s) const;
};

/// Simultaneous eigenspace decomposition of ad over a maximal abelian
/// a in p. Verifies that a is abelian and maximal (Z_p(a) = a), that the
/// decomposition is theta-symmetric, and that dimensions add up. Positivity
/// is not chosen yet.
RestrictedRootDatum restricted_root_datum(LieAlgebraPtr g, const CartanSplit& split,
                                          const Subspace& a);

/// Installs positives (alpha(regular) > 0), extracts indecomposable simple
/// roots (ordered by evaluation against the regular element), snaps every
/// root to integer simple-coordinates, and labels the type. Throws when the
/// regular vector lies on a wall or snapping fails.
RestrictedRootDatum choose_positivity(const RestrictedRootDatum& d,
                                      const Eigen::VectorXd& regular_in_g);

/// Reorders the simple roots by the given permutation (new_simple[i] =
/// old_simple[perm[i]]) and recomputes integer coordinates and duals.
RestrictedRootDatum reorder_simples(const RestrictedRootDatum& d, const std::vector<int>& perm);

/// Computes H_alpha for every root and the dual basis H^1..H^r with
/// <H^i, H_alpha_j> = delta_ij. Returns the duals.
std::vector<Eigen::VectorXd> dual_basis(RestrictedRootDatum& d);

/// Permutations of the simple roots preserving Cartan integers and all root
/// multiplicities.
std::vector<std::vector<int>> dynkin_automorphisms(const RestrictedRootDatum& d);

}  // namespace coh1
