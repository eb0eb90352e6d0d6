"""
Rooted non-metric trees and the parametrization metric
======================================================

Finite rational tree skeletons stand in for the tree of normalized
valuations: partial order, meets, set infima, tangent classes, and the
reciprocal-difference metric d_Psi are all exact.
"""

from fractions import Fraction

from valtree import (
    INF,
    PathParam,
    RootedTree,
    TangentRef,
    build_star,
    chain_infimum,
    class_member,
    fi_infimum,
    star_witness,
    t_dpsi,
    t_inf_set,
    t_leq,
    t_meet,
    t_tangent_equiv,
)
from valtree.tree import FI_X, FI_Y, fi_no_infimum_schedule

# -- a small tree with one infinite end ----------------------------------------

tree = RootedTree({(0,): Fraction(3, 2), (0, 0): 1, (0, 1): INF, (1,): Fraction(1, 2)})
psi = PathParam(tree)
root = tree.root_point()
fork = tree.node_point((0,))

print("Psi at the root:", psi.psi(root))
print("Psi at the fork:", psi.psi(fork))
print("Psi far out on the infinite edge:", psi.psi(tree.point((0, 1), 100)))

# -- order, meets, infima -------------------------------------------------------

p = tree.node_point((0, 0))
q = tree.point((0, 1), 2)
print("\nmeet of the two upper branches:", t_meet(p, q) == fork)
print("root below everything:", all(t_leq(root, x) for x in tree.grid_points(2)))
print("infimum of a point set:", psi.psi(t_inf_set([p, q, root], p, psi)))

# a descending chain Psi = 2 + 1/n has its exact limit point at Psi = 2
spine = RootedTree({(0,): Fraction(5, 2)})
spine_psi = PathParam(spine)
limit = chain_infimum(spine, spine_psi, spine.node_point((0,)), Fraction(2), 1)
print("chain {Psi = 2 + 1/n} converges to Psi =", spine_psi.psi(limit))

# -- the metric -----------------------------------------------------------------

print("\nd(root, fork) =", t_dpsi(psi, root, fork))
print("the infinite end stays at finite distance:",
      t_dpsi(psi, fork, tree.point((0, 1), INF)))

# -- tangent classes and metric balls --------------------------------------------

tau = tree.point((0,), 1)
sigma = tree.node_point((0, 0))
print("\nsame direction at tau:", t_tangent_equiv(tau, sigma, tree.point((0, 1), 3)))
print("root points the other way:", not t_tangent_equiv(tau, sigma, root))

# -- uncountable branching defeats countable neighborhood bases -------------------

star = build_star(1000)
center = star.root_point()
refs = [TangentRef(star.point((b,), Fraction(1, 2)), center) for b in (3, 141, 592)]
alpha = star_witness(star, refs)
print("\nwitness on a fresh branch:", alpha.path[0] not in (3, 141, 592))
print("yet inside every listed neighborhood:",
      all(class_member(ref, alpha) for ref in refs))

# -- why the tree axioms matter: a poset with no infimum --------------------------

print("\nforked interval, infimum of {X, Y}:", fi_infimum([FI_X, FI_Y]))
print("lower bounds ascend forever:", fi_no_infimum_schedule(5))
