"""Distinct knot types for one minimal set via Lorenz-template genus bounds."""
from flowknots import FIBONACCI, SturmianParams, distinct_knot_certificate, first_stage_loops, lorenz_braid
from flowknots.template import ORDER_CONVENTION, word_genus

print(ORDER_CONVENTION)
for w in ("0", "01", "001", "00101", "0010011"):
    b = lorenz_braid(w)
    print(f"  {w:>8}: {b.strands} strands, {b.crossings} crossings, genus >= {word_genus(w)}")

loops = first_stage_loops(FIBONACCI)
print("Fibonacci first-stage loops:", loops.zero, loops.one)

# Each row is a sigma_w copy of the same minimal set; distinct genus bounds mean distinct knots.
cert = distinct_knot_certificate(FIBONACCI, 10, max_seed_len=40)
print(f"\nFibonacci, 10 copies (complete={cert.complete}):")
for r in cert.rows:
    d = r.as_dict()
    print(f"  w={d['w']:>6} mu={d['mu']} strands={d['strands']:>3} crossings={d['crossings']:>4} genus>={d['genusLB']}")

cert = distinct_knot_certificate(SturmianParams((2, 1, 1)), 5)
print("\nSturmian (2,1,1):", [r.genus for r in cert.rows])
