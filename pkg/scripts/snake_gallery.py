#!/usr/bin/env python3
"""Draw the snake graphs of a few rationals side by side with their data.

Example:
    python scripts/snake_gallery.py 27/10 19/7 972/421
"""

import argparse
import sys
from fractions import Fraction

from twobridge.cfrac import even_cf_for_link, positive_cf
from twobridge.snake import count_matchings, render_ascii, snake_from_positive


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("fractions", nargs="*", default=["27/10", "19/7", "45/16"],
                        help="rationals p/q > 1")
    args = parser.parse_args()

    for text in args.fractions:
        num, den = (text.split("/") + ["1"])[:2]
        r = Fraction(int(num), int(den))
        cf = positive_cf(r)
        g = snake_from_positive(cf)
        print(f"{r} = {list(cf.entries)}   even: {list(even_cf_for_link(r).entries)}")
        print(render_ascii(g))
        print(f"tiles: {g.d}   steps: {g.step_word() or '-'}   "
              f"matchings: {count_matchings(g)}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
