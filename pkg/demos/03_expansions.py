"""Direct systems of knot groups along whole expansions, and the homology side."""
from flowknots import (cech_h1, dyadic_expansion, fixture_embedding, knot_group_system, stable_knot_group,
                       sturmian_embedding, unknotted_certificate)
from flowknots.expansion import duality_report, embedding_independence_check, map_is_isomorphism

# Dyadic solenoid: Z -x2-> Z -x2-> ... has limit Z[1/2], which is not finitely generated.
ks = knot_group_system(fixture_embedding("dyadic_unknotted", 5))
print("dyadic verdict:", unknotted_certificate(ks))
print("dyadic H1 of the limit:", cech_h1(dyadic_expansion(5)).group_name())
print("dyadic stable knot group:", stable_knot_group(ks))

# The trefoil stage is caught by finite quotients.
print("dyadic trefoil verdict:", unknotted_certificate(knot_group_system(fixture_embedding("dyadic_trefoil", 1))))

# Homology cannot tell the two dyadic embeddings apart.
print("same abelianized systems:",
      embedding_independence_check(fixture_embedding("dyadic_unknotted", 1), fixture_embedding("dyadic_trefoil", 1)))

# Sturmian expansions: every bonding is an automorphism of F2, so the knot group is F2.
e = sturmian_embedding((1, 3, 2), 4)
ks = knot_group_system(e)
print("\nSturmian (1,3,2):", unknotted_certificate(ks))
print("  maps are isomorphisms:", [map_is_isomorphism(ks, k) for k in range(1, ks.depth + 1)])
print("  stable knot group:", stable_knot_group(ks))
print("  Cech H1:", cech_h1(e.base))
print("  duality per stage:", duality_report(e))
