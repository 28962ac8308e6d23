"""Published counts the census is checked against.

Values at n = 10 come from random sampling and were never confirmed; they are kept
apart in ``UNVERIFIED`` and only ever printed for comparison.
"""

SPHERICAL = {
    "OO": (1, 3, 9, 37, 182, 1143, 7553, 54559, 412306),
    "UO": (1, 2, 6, 21, 99, 588, 3829, 27404, 206543),
    "OU": (1, 2, 6, 21, 97, 579, 3812, 27328, 206410),
    "UU": (1, 2, 6, 19, 76, 376, 2194, 14614, 106421),
    "UOc": (2, 3, 12, 37, 198, 1143, 7658, 54559, 413086),
}

KINK_FREE_SPHERICAL = {
    "OO": (0, 0, 1, 1, 2, 9, 29, 133, 594),
    "UO": (0, 0, 1, 1, 2, 6, 19, 74, 320),
    "OU": (0, 0, 1, 1, 2, 5, 18, 70, 313),
    "UU": (0, 0, 1, 1, 2, 5, 16, 52, 205),
    "UOc": (0, 0, 2, 1, 4, 9, 38, 133, 640),
}

PRIME_SPHERICAL = {
    "OO": (0, 0, 1, 1, 2, 6, 17, 73, 290, 1274),
    "UO": (0, 0, 1, 1, 2, 4, 12, 41, 161),
    "OU": (0, 0, 1, 1, 2, 3, 11, 38, 156, 638),
    "UU": (0, 0, 1, 1, 2, 3, 10, 27, 101, 364),
    "UOc": (0, 0, 2, 1, 4, 6, 24, 73, 322, 1274),
}

# rows: n = 1.., columns: g = 0..
GENERAL_BY_GENUS = {
    "OO": (
        (1,), (3, 1), (9, 11, 2), (37, 113, 68), (182, 1102, 1528, 216),
        (1143, 11114, 28947, 14336),
        (7553, 112846, 491767, 554096, 69264),
        (54559, 1160532, 7798139, 16354210, 7066668),
        (412306, 12038974, 117668914, 407921820, 397094352, 45043200),
    ),
    "UO": (
        (1,), (2, 1), (6, 6, 1), (21, 64, 36), (99, 559, 772, 108),
        (588, 5656, 14544, 7222),
        (3829, 56528, 246092, 277114, 34680),
        (27404, 581511, 3900698, 8180123, 3534038),
        (206543, 6020787, 58838383, 203964446, 198551464, 22521600),
    ),
    "OU": (
        (1,), (2, 1), (6, 6, 2), (21, 62, 37), (97, 559, 788, 112),
        (579, 5614, 14558, 7223),
        (3812, 56526, 246331, 277407, 34748),
        (27328, 580860, 3900740, 8179658, 3534594),
        (206410, 6020736, 58842028, 203974134, 198559566, 22524176),
    ),
    "UU": (
        (1,), (2, 1), (6, 5, 1), (19, 45, 22), (76, 335, 427, 56),
        (376, 3101, 7557, 3681),
        (2194, 29415, 124919, 139438, 17398),
        (14614, 295859, 1961246, 4098975, 1768704),
        (106421, 3031458, 29479410, 102054037, 99304511, 11262088),
    ),
}  # fmt: skip

BICOLOURABLE_BY_GENUS = {
    "OOc": (
        (2,), (6,), (18, 2), (74, 32, 2), (364, 340, 72), (2286, 3780, 1630, 76),
        (15106, 40612, 31510, 4944),
        (109118, 436368, 549334, 188356, 7872),
        (824612, 4675012, 8883620, 5508120, 752776),
    ),
    "OOb": (
        (1,), (3,), (9, 1), (37, 16, 1), (182, 170, 36), (1143, 1890, 815, 38),
        (7553, 20306, 15755, 2472),
        (54559, 218184, 274667, 94178, 3936),
        (412306, 2337506, 4441810, 2754060, 376388),
    ),
    "UOc": (
        (2,), (3,), (12, 2), (37, 16, 1), (198, 186, 36), (1143, 1890, 815, 38),
        (7658, 20516, 15812, 2484),
        (54559, 218184, 274667, 94178, 3936),
        (413086, 2340106, 4443518, 2754988, 376516),
    ),
    "UOb": (
        (1,), (2,), (6, 1), (21, 8, 1), (99, 93, 18), (588, 945, 421, 19),
        (3829, 10258, 7906, 1242),
        (27404, 109092, 137585, 47089, 2012),
        (206543, 1170053, 2221759, 1377494, 188258),
    ),
    "OUc": (
        (1,), (4,), (9, 1), (42, 16, 2), (182, 170, 36), (1158, 1890, 834, 38),
        (7553, 20306, 15755, 2472),
        (54656, 218184, 274922, 94178, 3988),
        (412306, 2337506, 4441810, 2754060, 376388),
    ),
    "OUb": (
        (1,), (2,), (6, 1), (21, 8, 1), (97, 93, 20), (579, 945, 417, 19),
        (3812, 10256, 7948, 1260),
        (27328, 109092, 137461, 47089, 1994),
        (206410, 1170002, 2222562, 1378256, 188502),
    ),
    "UUc": (
        (1,), (2,), (6, 1), (21, 8, 1), (99, 93, 18), (579, 945, 417, 19),
        (3829, 10258, 7906, 1242),
        (27328, 109092, 137461, 47089, 1994),
        (206543, 1170053, 2221759, 1377494, 188258),
    ),
    "UUb": (
        (1,), (2,), (6, 1), (19, 6, 1), (76, 63, 13), (376, 539, 242, 11),
        (2194, 5508, 4183, 663),
        (14614, 56067, 70118, 23907, 1036),
        (106421, 592457, 1119180, 692749, 94719),
    ),
}  # fmt: skip

TOTALS = {
    "OO": (1, 4, 22, 218, 3028, 55540, 1235526, 32434108, 980179566, 33522177088),
    "UO": (1, 3, 13, 121, 1538, 28010, 618243, 16223774, 490103223, 16761330464),
    "OU": (1, 3, 14, 120, 1556, 27974, 618824, 16223180, 490127050, 16761331644),
    "UU": (1, 3, 12, 86, 894, 14715, 313364, 8139398, 245237925, 8382002270),
}

# all-genus OO totals for n = 1..20
OO_TOTALS_TO_20 = (
    1, 4, 22, 218, 3028, 55540, 1235526, 32434108, 980179566, 33522177088,
    1279935820810, 53970628896500, 2490952020480012, 124903451391713412,
    6761440164391403896, 393008709559373134184, 24412776311194951680016,
    1613955767240361647220648, 113146793787569865523200018,
    8384177419658944198600637096,
)  # fmt: skip

# 𝒞_σ-orbits on every fixed-point-free involution of 4n points, n = 1..9
X_ORBITS_ALL = (2, 10, 54, 491, 6430, 119475, 2775582, 76733201, 2439149685)

UNIVERSE_ORBITS = {
    "X": (1, 3, 13, 121, 1538, 28010),
    "Y": (2, 3, 14, 54, 420, 3886, 46470, 645524, 10328214),
    "Z": (1, 4, 22, 218, 3028, 55540, 1235526, 32434108, 980179566),
}

# rows: n = 1.., columns: g = 0..
LONG_CURVES = (
    (2,), (8,), (42, 6), (260, 116, 8), (1796, 1700, 344),
    (13396, 22528, 9700, 456),
    (105706, 284284, 220570, 34560),
    (870772, 3488904, 4392820, 1506576, 62848),
    (7420836, 42074568, 79951716, 49572528, 6774912),
)  # fmt: skip

Z_PRIME_BY_GENUS = (
    (1,), (4, 2), (42, 66, 12), (780, 2652, 1608),
    (21552, 132240, 183168, 25920),
    (803760, 7984320, 20815440, 10313280),
)  # fmt: skip

# five-plets (x, y, z, v, w) per n, rows by genus
PROFILES_Y_SM = {
    2: ((1, 0, 0, 1, 0),),
    3: ((0, 0, 0, 6, 0), (0, 0, 0, 1, 0)),
    4: ((5, 0, 0, 12, 2), (0, 0, 0, 4, 2), (1, 0, 0, 0, 0)),
    5: ((0, 0, 0, 53, 23), (0, 0, 0, 33, 30), (0, 0, 0, 8, 5)),
    6: ((9, 12, 3, 152, 200), (0, 0, 0, 133, 406), (7, 10, 6, 50, 169), (0, 0, 0, 3, 8)),
    7: ((0, 0, 0, 559, 1635), (0, 0, 0, 758, 4750), (0, 0, 0, 460, 3723), (0, 0, 0, 84, 579)),
}

PROFILES_U_CYCLIC_SR = {
    1: ((0, 0, 1, 0, 0),),
    2: ((0, 0, 0, 1, 1),),
    3: ((0, 0, 3, 0, 3), (0, 0, 1, 0, 0)),
    4: ((0, 0, 0, 5, 16), (0, 0, 0, 0, 8), (0, 0, 0, 1, 0)),
    5: ((0, 0, 16, 0, 83), (0, 0, 16, 0, 77), (0, 0, 0, 0, 18)),
    6: ((0, 0, 0, 33, 555), (0, 0, 0, 0, 945), (0, 0, 0, 27, 394), (0, 0, 0, 0, 19)),
    7: ((0, 0, 105, 0, 3724), (0, 0, 210, 0, 10048), (0, 0, 57, 0, 7849), (0, 0, 12, 0, 1230)),
}

PROFILES_U_CYCLIC_SM = {
    1: ((0, 0, 0, 1, 0),),
    2: ((0, 0, 1, 0, 1),),
    3: ((0, 0, 0, 3, 3), (0, 0, 0, 1, 0)),
    4: ((0, 0, 5, 0, 16), (0, 0, 0, 0, 8), (0, 0, 1, 0, 0)),
    5: ((0, 0, 0, 12, 85), (0, 0, 0, 16, 77), (0, 0, 0, 4, 16)),
    6: ((0, 0, 15, 0, 564), (0, 0, 0, 0, 945), (0, 0, 19, 0, 398), (0, 0, 0, 0, 19)),
    7: ((0, 0, 0, 71, 3741), (0, 0, 0, 206, 10050), (0, 0, 0, 141, 7807), (0, 0, 0, 48, 1212)),
}

PROFILES_Z_RM = {
    1: ((1, 0, 0, 0, 0),),
    2: ((1, 0, 0, 1, 0), (1, 0, 0, 0, 0)),
    3: ((3, 0, 0, 3, 0), (1, 0, 0, 3, 1), (0, 0, 1, 0, 0)),
    4: ((5, 0, 0, 12, 2), (7, 4, 2, 17, 15), (2, 1, 2, 4, 13)),
    5: ((10, 3, 1, 42, 20), (10, 3, 3, 98, 221), (4, 6, 22, 56, 339), (0, 0, 4, 0, 52)),
    6: (
        (9, 12, 3, 152, 200), (34, 82, 40, 472, 2473),
        (25, 58, 72, 473, 6929), (12, 48, 49, 79, 3493),
    ),
}  # fmt: skip

PRIME_UU_9_RM = (14, 9, 4, 23, 51)

UNVERIFIED = {
    "OO": 3251240,
    "UO": 1626638,
    "OU": 1625916,
    "UU": 823832,
    "UOc": 3251240,
}
