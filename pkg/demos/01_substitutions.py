"""Substitutions, transition matrices, Sturmian words and the sigma_w re-embedding."""
from flowknots import (FIBONACCI, SturmianParams, compose, density_witness, sigma_w,
                       sturmian_substitution, tails_equivalent, transition_matrix)
from flowknots.symbolic import fixed_point_prefix, word_str

# A substitution acts letter by letter; its matrix counts letters in images.
print("Fibonacci:", FIBONACCI)
print("  0 ->", word_str(FIBONACCI(b"\x00")))
print("  matrix\n", transition_matrix(FIBONACCI))

# Sturmian maps 0 -> 0^(n+1) 1, 1 -> 0^n 1 are unimodular, so composites are too.
s1, s3 = sturmian_substitution(1), sturmian_substitution(3)
print("sigma_1 o sigma_3:", compose(s1, s3))
print("  matrix\n", transition_matrix(compose(s1, s3)))

# A continued-fraction prefix; the last entry repeats forever.
p = SturmianParams((1, 2, 2))
print("Sturmian word for", p.cf, ":", word_str(p.word(50)))
print("same tail as (4, 2)?", tails_equivalent(p, SturmianParams((4, 2))))
print("same tail as (1, 2, 1)?", tails_equivalent(p, SturmianParams((1, 2, 1))))

# sigma_w pads p^i(w) with 0^mu on both sides: uniform return time 2*mu + |w|.
e = sigma_w("0110")
print(f"sigma_w for w=0110: mu={e.mu}, return time {e.return_time}")
for i, im in enumerate(e.substitution.images):
    print(f"  {i} -> {word_str(im)}")

# Finite-scale density: a seed w whose image of a Fibonacci orbit hits the cylinder [11011].
orbit = fixed_point_prefix(FIBONACCI, 200)
hit = density_witness("11011", orbit, 6)
print("cylinder 11011 reached with w =", word_str(hit.w))
