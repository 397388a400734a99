#!/usr/bin/env python3
"""Walk through one concatenation and its two length transforms.

Builds [[100,26,>=24;24]]_2 from the [[4,2,2;0]]_2 block and a maximal
[[25,13,12;12]]_4 outer code, then lengthens and expurgates it, printing the
net rate and the EA Singleton classification at each step.
"""

from eaqec.concat import concatenate, expurgate, extend
from eaqec.eaqecc import ea_singleton_defect, parse_params


def show(title, code):
    defect = ea_singleton_defect(code)
    maximal = "yes" if code.is_maximal else "no"
    print(
        f"{title:<22} {code.render():<22} net={code.net:<3} "
        f"hbar_e={defect.value:<3} class={defect.label} maximal={maximal}"
    )


def main() -> int:
    inner = parse_params("4,2,2,0,2")
    outer = parse_params("25,13,12,12,4")
    print(f"inner  {inner.render()}   outer {outer.render()}")
    print()

    code = concatenate(inner, outer)
    show("concatenated", code)
    show("extended (+2)", extend(code, 2))
    # each replaced block trades one position for one entangled pair
    show("expurgated (-3)", expurgate(code, 3))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
