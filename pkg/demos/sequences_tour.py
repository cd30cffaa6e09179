"""
Revolving digit words
=====================

Listing, validating and counting digit words under the three rotation rules.
"""

from revdragon import alphabet
from revdragon.alphabet import angle_from_fraction, format_word
from revdragon.sequences import (
    Condition,
    FirstDigitPolicy,
    RevolvingSequence,
    compute_bss,
    enumerate_words,
    validate,
)
from revdragon.verify import closed_form_count, count_check

# a quarter turn: digits are 0 and the four units 1, i, -1, -i
quarter = angle_from_fraction(1, 4)
print("units:", [str(alphabet.digit_value(k, quarter)) for k in range(quarter.order)])

# every length-3 word whose nonzero digits keep turning by one step
for w in enumerate_words(Condition.GRC, quarter, 3, FirstDigitPolicy.MUST_BE_ONE):
    print("  grc", format_word(w.digits))

# the ternary rule also lets a nonzero digit repeat
third = angle_from_fraction(1, 3)
words = list(enumerate_words(Condition.TRC, third, 2, FirstDigitPolicy.MUST_BE_ONE))
print("trc length 2:", [format_word(w.digits) for w in words])

# validation: 1, 0, i, -1 turns correctly; 1, 1 does not
print(validate(RevolvingSequence(quarter, (0, None, 1, 2)), Condition.GRC))
print(validate(RevolvingSequence(quarter, (0, 0)), Condition.GRC))

# which positions hold the same digit as the next nonzero one
s = RevolvingSequence(quarter, (0, None, 0, 1, 1, 2))
print("bss of", format_word(s.digits), "->", compute_bss(s))

# counts grow like 2**n (grc, src) and (3**n + 1)/2 (trc); brute force agrees
for c in Condition:
    report = count_check(c, range(0, 9), third)
    print(c.value, report.extras["enumerated"], "closed form ok:", report.extras["closed_form_holds"])
print("closed form, trc n=12:", closed_form_count(Condition.TRC, 3, 12, FirstDigitPolicy.MUST_BE_ONE))
