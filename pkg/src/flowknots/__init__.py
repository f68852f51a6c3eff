"""Knot groups, duality checks and genus certificates for one-dimensional minimal sets."""
from .diagram import (CROSSING_CONVENTION, Crossing, DiagramError, EmbeddingStage, Wedge, WedgeDiagram,
                      abelianized_inclusion, builtin_fixture, canonical_stage, duality_check,
                      inclusion_morphism, sturmian_stage, wirtinger)
from .expansion import (CechH1, EmbeddedExpansion, ExpansionError, FlowExpansion, KnotGroupSystem, Verdict,
                        cech_h1, dyadic_expansion, embedding_independence_check, fixture_embedding,
                        knot_group_system, stable_knot_group, sturmian_embedding, sturmian_expansion,
                        unknotted_certificate, unknotted_embedding)
from .fpgroup import (AbelianDescriptor, DirectSystem, GroupMorphism, GroupPresentation, GroupWord,
                      SupernaturalDescriptor, abelianize, colimit_rank1, count_homs, free_reduce,
                      is_free_automorphism, nielsen_reduce, stable_image_rank, tietze_simplify)
from .symbolic import (FIBONACCI, THUE_MORSE, InvalidInput, SigmaEmbedding, SturmianParams, Substitution,
                       apply_substitution, compose, density_witness, sigma_w, sturmian_substitution,
                       tails_equivalent, transition_matrix)
from .template import (LorenzBraid, TemplateWord, distinct_knot_certificate, first_stage_loops,
                       genus_lower_bound, lorenz_braid)

__version__ = "0.1.0"
