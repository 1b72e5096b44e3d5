"""Ranks of End(pt/G) and Hom(pt/1, X/G) over the catalog.

For each group the rank of the double Burnside ring is set next to the
number of subgroup classes of G x G; the two must agree.
"""

import argparse
import time
from dataclasses import dataclass

from spancat.burnside import double_burnside_table, hom_rank
from spancat.catalog import UP_TO_8, by_name
from spancat.category import coset_object, one_point
from spancat.groups import conjugacy_classes_of_subgroups, direct_product, trivial_group


@dataclass
class SurveyConfig:
    groups: tuple[str, ...] = ("C1", "C2", "C3", "C4", "V4", "C5", "S3")
    check_tables: bool = True


def main(cfg: SurveyConfig) -> None:
    print(f"{'G':>9} {'rank End(pt/G)':>15} {'classes in GxG':>15} {'assoc+unit':>11} {'secs':>6}")
    for name in cfg.groups:
        G = by_name(name)
        t = time.perf_counter()
        table = double_burnside_table(G)
        ok = table.is_associative() and table.identity_is_unit() if cfg.check_tables else None
        classes = len(conjugacy_classes_of_subgroups(direct_product(G, G)))
        print(f"{name:>9} {len(table.basis):>15} {classes:>15} {str(ok):>11} {time.perf_counter() - t:6.1f}")
    print()
    pt1 = one_point(trivial_group())
    print("rank Hom(pt/1, (G/S)/G) against subgroup classes of S")
    for name in UP_TO_8:
        G = by_name(name)
        row = []
        for S in conjugacy_classes_of_subgroups(G):
            r = hom_rank(pt1, coset_object(G, S))
            row.append(f"|S|={S.order}:{r}/{len(conjugacy_classes_of_subgroups(S.as_group()))}")
        print(f"{name:>9}  " + "  ".join(row))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("groups", nargs="*", default=list(SurveyConfig.groups))
    p.add_argument("--no-tables", action="store_true", help="skip the associativity check")
    a = p.parse_args()
    main(SurveyConfig(tuple(a.groups), not a.no_tables))
