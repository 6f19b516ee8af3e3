"""Reference forms written out term by term.

Each string is in the ``[+-][c] d<indices>`` notation understood by
:func:`spin9forms.exterior.parse_form`; a primed digit ``3'`` is the 16-dim
index 11.  These are independent transcriptions used to check the forms the
package derives from octonion multiplication.
"""

from __future__ import annotations

from .exterior import KForm, parse_form

# Spin(7) 4-form on R^8; listed half, the rest is its Hodge star.
SPIN7_HALF = "d1234 +d1256 +d1357 +d1368 -d1278 -d1467 +d1458"

# Kaehler forms of the right multiplications R_i ... R_h on O = R^8.
PHI7 = {
    "i": "-d12 +d34 +d56 -d78",
    "j": "-d13 -d24 +d57 +d68",
    "k": "-d14 +d23 +d58 -d67",
    "e": "-d15 -d26 -d37 -d48",
    "f": "-d16 +d25 -d38 +d47",
    "g": "-d17 +d28 +d35 -d46",
    "h": "-d18 -d27 +d36 +d45",
}

# The 21 complementary forms, keyed by (number of primes, unit).
PHI21 = {
    (1, "i"): "d12 +d34 +d56 +d78",
    (2, "i"): "-d12 -d34 +d56 +d78",
    (3, "i"): "-d12 +d34 -d56 +d78",
    (1, "j"): "d13 +d24 +d57 +d68",
    (2, "j"): "-d13 +d24 -d57 +d68",
    (3, "j"): "-d13 +d24 +d57 -d68",
    (1, "k"): "d14 +d23 +d58 +d67",
    (2, "k"): "-d14 -d23 +d58 +d67",
    (3, "k"): "-d14 +d23 -d58 +d67",
    (1, "e"): "-d15 -d26 +d37 +d48",
    (2, "e"): "-d15 +d26 -d37 +d48",
    (3, "e"): "-d15 +d26 +d37 -d48",
    (1, "f"): "d16 +d25 +d38 +d47",
    (2, "f"): "-d16 -d25 +d38 +d47",
    (3, "f"): "-d16 +d25 +d38 -d47",
    (1, "g"): "d17 +d28 +d35 +d46",
    (2, "g"): "-d17 -d28 +d35 +d46",
    (3, "g"): "-d17 +d28 -d35 +d46",
    (1, "h"): "d18 +d27 +d36 +d45",
    (2, "h"): "-d18 +d27 -d36 +d45",
    (3, "h"): "-d18 +d27 +d36 -d45",
}

# The explicitly listed relations between the 21 forms and the Kaehler
# forms of the products R_a R_b: (primes, unit) -> (sign, (a, b)).
PHI21_VS_RAB = {
    (1, "i"): (-1, ("g", "h")),
    (2, "i"): (-1, ("e", "f")),
    (3, "i"): (-1, ("j", "k")),
    (1, "h"): (-1, ("i", "g")),
    (2, "h"): (-1, ("k", "e")),
    (3, "h"): (1, ("j", "f")),
}

# Sum of squares of the 21 forms (the middle expression of the identity).
PHI21_SQUARES_PARTS = (
    "6 d1234 +6 d5678",
    "d15 +d26 +d37 +d48",  # enters as -3 * (this)^2
    "d1278 -d1368 +d1467 +d2358 -d2457 +d3456",  # enters as -6 * (this)
)

# Kaehler forms of J_ab = I_a I_b for the quaternionic Hopf structure on R^8.
THETA = {
    (1, 2): "-d12 +d34 +d56 -d78",
    (1, 3): "-d13 -d24 +d57 +d68",
    (1, 4): "-d14 +d23 +d58 -d67",
    (2, 3): "-d14 +d23 -d58 +d67",
    (2, 4): "d13 +d24 +d57 +d68",
    (3, 4): "-d12 +d34 -d56 +d78",
    (1, 5): "-d15 -d26 -d37 -d48",
    (2, 5): "-d16 +d25 +d38 -d47",
    (3, 5): "-d17 -d28 +d35 +d46",
    (4, 5): "-d18 +d27 -d36 +d45",
}

# Sum of squares of the theta forms; half listed, plus its star.
THETA_SQUARES_HALF = "-12 d1234 -4 d1256 -4 d1357 +4 d1368 -4 d1278 -4 d1467 -4 d1458"

# Kaehler forms of left multiplication by i, j, k on H^2 = R^8.
LEFT_KAHLER_H = {
    "i": "-d12 -d34 -d56 -d78",
    "j": "-d13 +d24 -d57 +d68",
    "k": "-d14 -d23 -d58 -d67",
}

# Raw quaternionic line integral in units of pi^2/60.
OMEGA_RAW_H_OVER_PI2_60 = (
    "3 d1234 -d1256 +d1278 -d1357 -d1368 -d1458 +d1467"
    " +d2358 -d2367 -d2457 -d2468 +d3456 -d3478 +3 d5678"
)

# Kaehler forms psi_ab of the Spin(9) structure on R^16.  For a < b <= 8 the
# form is (unprimed part) +/- (same with primes); value is (unprimed, sign).
PSI_28 = {
    (1, 2): ("-d12 +d34 +d56 -d78", -1),
    (1, 3): ("-d13 -d24 +d57 +d68", -1),
    (1, 4): ("-d14 +d23 +d58 -d67", -1),
    (1, 5): ("-d15 -d26 -d37 -d48", -1),
    (1, 6): ("-d16 +d25 -d38 +d47", -1),
    (1, 7): ("-d17 +d28 +d35 -d46", -1),
    (1, 8): ("-d18 -d27 +d36 +d45", -1),
    (2, 3): ("-d14 +d23 -d58 +d67", 1),
    (2, 4): ("d13 +d24 +d57 +d68", 1),
    (2, 5): ("-d16 +d25 +d38 -d47", 1),
    (2, 6): ("d15 +d26 -d37 -d48", 1),
    (2, 7): ("d18 +d27 +d36 +d45", 1),
    (2, 8): ("-d17 +d28 -d35 +d46", 1),
    (3, 4): ("-d12 +d34 -d56 +d78", 1),
    (3, 5): ("-d17 -d28 +d35 +d46", 1),
    (3, 6): ("-d18 +d27 +d36 -d45", 1),
    (3, 7): ("d15 -d26 +d37 -d48", 1),
    (3, 8): ("d16 +d25 +d38 +d47", 1),
    (4, 5): ("-d18 +d27 -d36 +d45", 1),
    (4, 6): ("d17 +d28 +d35 +d46", 1),
    (4, 7): ("-d16 -d25 +d38 +d47", 1),
    (4, 8): ("d15 -d26 -d37 +d48", 1),
    (5, 6): ("-d12 -d34 +d56 +d78", 1),
    (5, 7): ("-d13 +d24 +d57 -d68", 1),
    (5, 8): ("-d14 -d23 +d58 +d67", 1),
    (6, 7): ("d14 +d23 +d58 +d67", 1),
    (6, 8): ("-d13 +d24 -d57 +d68", 1),
    (7, 8): ("d12 +d34 +d56 +d78", 1),
}

PSI_8 = {
    (1, 9): "-d11' -d22' -d33' -d44' -d55' -d66' -d77' -d88'",
    (2, 9): "-d12' +d21' +d34' -d43' +d56' -d65' -d78' +d87'",
    (3, 9): "-d13' -d24' +d31' +d42' +d57' +d68' -d75' -d86'",
    (4, 9): "-d14' +d23' -d32' +d41' +d58' -d67' +d76' -d85'",
    (5, 9): "-d15' -d26' -d37' -d48' +d51' +d62' +d73' +d84'",
    (6, 9): "-d16' +d25' -d38' +d47' -d52' +d61' -d74' +d83'",
    (7, 9): "-d17' +d28' +d35' -d46' -d53' +d64' +d71' -d82'",
    (8, 9): "-d18' -d27' +d36' +d45' -d54' -d63' +d72' +d81'",
}

# Quarter sums of squares of the psi forms, grouped by the four index pairs
# they share.  Diagonal terms d_{ab a'b'} are the ones whose total is -psi_19^2 / 2.
PSI_GROUPED_SQUARES = {
    ((1, 2), (3, 4), (5, 6), (7, 8)): (
        "+d121'2' +d123'4' +d125'6' -d127'8' +d341'2' +d343'4' -d345'6' +d347'8'"
        " +d561'2' -d563'4' +d565'6' +d567'8' -d781'2' +d783'4' +d785'6' +d787'8'"
    ),
    ((1, 3), (2, 4), (5, 7), (6, 8)): (
        "+d131'3' -d132'4' +d135'7' +d136'8' -d241'3' +d242'4' +d245'7' +d246'8'"
        " +d571'3' +d572'4' +d575'7' -d576'8' +d681'3' +d682'4' -d685'7' +d686'8'"
    ),
    ((1, 4), (2, 3), (5, 8), (6, 7)): (
        "+d141'4' +d142'3' +d145'8' -d146'7' +d231'4' +d232'3' -d235'8' +d236'7'"
        " +d581'4' -d582'3' +d585'8' +d586'7' -d671'4' +d672'3' +d675'8' +d676'7'"
    ),
    ((1, 5), (2, 6), (3, 7), (4, 8)): (
        "+d151'5' -d152'6' -d153'7' -d154'8' -d261'5' +d262'6' -d263'7' -d264'8'"
        " -d371'5' -d372'6' +d373'7' -d374'8' -d481'5' -d482'6' -d483'7' +d484'8'"
    ),
    ((1, 6), (2, 5), (3, 8), (4, 7)): (
        "+d161'6' +d162'5' -d163'8' +d164'7' +d251'6' +d252'5' +d253'8' -d254'7'"
        " -d381'6' +d382'5' +d383'8' +d384'7' +d471'6' -d472'5' +d473'8' +d474'7'"
    ),
    ((1, 7), (2, 8), (3, 5), (4, 6)): (
        "+d171'7' +d172'8' +d173'5' -d174'6' +d281'7' +d282'8' -d283'5' +d284'6'"
        " +d351'7' -d352'8' +d353'5' +d354'6' -d461'7' +d462'8' +d463'5' +d464'6'"
    ),
    ((1, 8), (2, 7), (3, 6), (4, 5)): (
        "+d181'8' -d182'7' +d183'6' +d184'5' -d271'8' +d272'7' +d273'6' +d274'5'"
        " +d361'8' +d362'7' +d363'6' -d364'5' +d451'8' +d452'7' -d453'6' +d454'5'"
    ),
}


def form(text: str, dim: int) -> KForm:
    return parse_form(text, dim)


def spin7_reference() -> KForm:
    return parse_form(SPIN7_HALF, 8).plus_star()


def theta_squares_reference() -> KForm:
    return parse_form(THETA_SQUARES_HALF, 8).plus_star()


def primed(a: KForm) -> KForm:
    """Shift an R^8 form to the primed coordinates 9..16 of R^16."""
    return KForm(16, a.grade, {m << 8: c for m, c in a.terms.items()}, check=False)


def unprimed(a: KForm) -> KForm:
    """Embed an R^8 form into the unprimed coordinates of R^16."""
    return KForm(16, a.grade, dict(a.terms), check=False)


def psi_reference() -> dict:
    """All 36 psi forms keyed by (a, b), a < b."""
    out = {}
    for ab, (text, sign) in PSI_28.items():
        base = parse_form(text, 8)
        out[ab] = unprimed(base) + primed(base) * sign
    for ab, text in PSI_8.items():
        out[ab] = parse_form(text, 16)
    return out
