"""Published reference values: b(n, d) for n <= 25, d <= 5, and b(n, k, d) for n <= 7."""

from __future__ import annotations

_BND = """
1 1 0 0 0 0 0
2 1 0 0 0 0 0
3 1 2 0 0 0 0
4 1 8 0 0 0 0
5 1 22 22 0 0 0
6 1 52 172 0 0 0
7 1 114 856 604 0 0
8 1 240 3488 7296 0 0
9 1 494 12746 54746 31238 0
10 1 1004 43628 330068 518324 0
11 1 2026 143244 1756878 5300418 2620708
12 1 4072 457536 8641800 43235304 55717312
13 1 8166 1434318 40298572 309074508 728888188
14 1 16356 4438540 180969752 2026885824 7589067592
15 1 32738 13611136 790697160 12512691028 69028576454
16 1 65504 41473216 3385019968 73898171456 573754927712
17 1 131038 125797010 14270283414 422060869866 4470473831914
18 1 262108 380341580 59457742524 2349012559564 33181419358420
19 1 524250 1147318004 245507935018 12811010885886 237191391335758
20 1 1048536 3455325600 1006678811272 68751877461032 1645761138814040
21 1 2097110 10394291094 4105447763032 364232722279840 11148787030131978
22 1 4194260 31242645420 16672235476128 1909625025412472 74065171862108524
23 1 8388562 93853769320 67482738851220 9927594128105024 484210423704506108
24 1 16777168 281825553760 272439143364672 51256011278005824 3123806527720851840
25 1 33554382 846030314842 1097660274098482 263144690491841262 19930831004237505532
"""

#: ``BND[n][d]`` for 1 <= n <= 25, 0 <= d <= 5.
BND: dict[int, list[int]] = {}
for _line in _BND.strip().splitlines():
    _n, *_row = map(int, _line.split())
    BND[_n] = _row

#: ``BNDK[n][k-1][d]`` for 1 <= n <= 7, 0 <= d <= (n-1)//2.
BNDK: dict[int, list[list[int]]] = {
    1: [[1]],
    2: [[0], [1]],
    3: [[0, 1], [0, 1], [1, 0]],
    4: [[0, 1], [0, 2], [0, 3], [1, 2]],
    5: [[0, 1, 8], [0, 2, 7], [0, 4, 5], [0, 7, 2], [1, 8, 0]],
    6: [[0, 1, 22], [0, 2, 29], [0, 4, 34], [0, 8, 35], [0, 15, 30], [1, 22, 22]],
    7: [[0, 1, 52, 172], [0, 2, 73, 150], [0, 4, 100, 121], [0, 8, 130, 87],
        [0, 16, 157, 52], [0, 31, 172, 22], [1, 52, 172, 0]],
}

#: Printed "Row Sum" column, indexed by k-1.
BNDK_ROW_SUMS: dict[int, list[int]] = {
    1: [1], 2: [0, 1], 3: [1, 1, 1], 4: [1, 2, 3, 3], 5: [9, 9, 9, 9, 9],
    6: [23, 31, 38, 43, 45, 45], 7: [225] * 7,
}

#: Printed "Col Sum" row, indexed by d, then the grand total.
BNDK_COL_SUMS: dict[int, tuple[list[int], int]] = {
    1: ([1], 1), 2: ([1], 1), 3: ([1, 2], 3), 4: ([1, 8], 9), 5: ([1, 22, 22], 45),
    6: ([1, 52, 172], 225), 7: ([1, 114, 856, 604], 1575),
}
