"""Knot groups of single embedding stages, read off wedge diagrams."""
from flowknots import (builtin_fixture, count_homs, duality_check, inclusion_morphism,
                       wirtinger)
from flowknots.diagram import CROSSING_CONVENTION, FIXTURES, abelianized_inclusion
from flowknots.fpgroup import GroupPresentation, abelianize, is_free_automorphism, simplified_map, tietze_reduce

print("crossing convention:", CROSSING_CONVENTION)

for name in FIXTURES:
    stage = builtin_fixture(name)
    p = wirtinger(stage.diagram)
    q = tietze_reduce(p).presentation
    outer = GroupPresentation.free(len(stage.traces))
    f = simplified_map(inclusion_morphism(stage, outer))
    print(f"\n{name}")
    print("  Wirtinger:  ", p)
    print("  simplified: ", q, "  H1 =", abelianize(q), "  homs to S3:", count_homs(q, "s3"))
    print("  inclusion:  ", f.format())
    if f.target.is_free and f.target.rank == f.source.rank:
        print("  automorphism of the free group:", is_free_automorphism(f))
    print("  abelianized inclusion", abelianized_inclusion(stage).tolist(),
          "matches transposed transition matrix:", duality_check(stage))

# The trefoil stage has 12 maps to S3; a free group with H1 = Z has only 6, so it is knotted.
