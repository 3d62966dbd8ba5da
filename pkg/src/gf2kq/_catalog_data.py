"""Static irreducible-polynomial tables. Regenerate with tools/gen_catalog.py."""

# degree -> least irreducible polynomial, int-encoded (bit i = coeff of x^i)
GENERIC = {
    2: 0x7,
    3: 0xb,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11b,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201b,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002b,
    17: 0x20009,
    18: 0x40009,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x100001b,
    25: 0x2000009,
    26: 0x400001b,
    27: 0x8000027,
    28: 0x10000003,
    29: 0x20000005,
    30: 0x40000003,
    31: 0x80000009,
    32: 0x10000008d,
    33: 0x20000004b,
    34: 0x40000001b,
    35: 0x800000005,
    36: 0x1000000035,
    37: 0x200000003f,
    38: 0x4000000063,
    39: 0x8000000011,
    40: 0x10000000039,
    41: 0x20000000009,
    42: 0x40000000027,
    43: 0x80000000059,
    44: 0x100000000021,
    45: 0x20000000001b,
    46: 0x400000000003,
    47: 0x800000000021,
    48: 0x100000000002d,
    49: 0x2000000000071,
    50: 0x400000000001d,
    51: 0x800000000004b,
    52: 0x10000000000009,
    53: 0x20000000000047,
    54: 0x4000000000007d,
    55: 0x80000000000047,
    56: 0x100000000000095,
    57: 0x200000000000011,
    58: 0x400000000000063,
    59: 0x80000000000007b,
    60: 0x1000000000000003,
    61: 0x2000000000000027,
    62: 0x4000000000000069,
    63: 0x8000000000000003,
    64: 0x1000000000000001b,
    65: 0x2000000000000001b,
    66: 0x40000000000000009,
    67: 0x80000000000000027,
    68: 0x1000000000000000a3,
    69: 0x200000000000000065,
    70: 0x40000000000000002b,
    71: 0x80000000000000002b,
    72: 0x100000000000000005f,
    73: 0x200000000000000001d,
    74: 0x4000000000000000047,
    75: 0x800000000000000004b,
    76: 0x10000000000000000035,
    77: 0x20000000000000000065,
    78: 0x4000000000000000005f,
    79: 0x8000000000000000001d,
    80: 0x1000000000000000000af,
    81: 0x200000000000000000011,
    82: 0x4000000000000000000d7,
    83: 0x800000000000000000095,
    84: 0x1000000000000000000021,
    85: 0x2000000000000000000107,
    86: 0x4000000000000000000065,
    87: 0x80000000000000000000a3,
    88: 0x1000000000000000000003f,
    89: 0x20000000000000000000069,
    90: 0x4000000000000000000002d,
    91: 0x800000000000000000000ed,
    92: 0x100000000000000000000065,
    93: 0x200000000000000000000005,
    94: 0x400000000000000000000063,
    95: 0x800000000000000000000077,
    96: 0x100000000000000000000006f,
    97: 0x2000000000000000000000041,
    98: 0x4000000000000000000000099,
    99: 0x800000000000000000000004b,
    100: 0x10000000000000000000000065,
    101: 0x200000000000000000000000c3,
    102: 0x40000000000000000000000069,
    103: 0x800000000000000000000000bd,
    104: 0x10000000000000000000000001b,
    105: 0x200000000000000000000000011,
    106: 0x400000000000000000000000063,
    107: 0x8000000000000000000000000af,
    108: 0x1000000000000000000000000053,
    109: 0x2000000000000000000000000035,
    110: 0x4000000000000000000000000053,
    111: 0x8000000000000000000000000095,
    112: 0x10000000000000000000000000039,
    113: 0x2000000000000000000000000002d,
    114: 0x4000000000000000000000000002d,
    115: 0x800000000000000000000000000af,
    116: 0x100000000000000000000000000017,
    117: 0x200000000000000000000000000027,
    118: 0x400000000000000000000000000065,
    119: 0x800000000000000000000000000101,
    120: 0x100000000000000000000000000001b,
    121: 0x2000000000000000000000000000123,
    122: 0x4000000000000000000000000000047,
    123: 0x8000000000000000000000000000005,
    124: 0x1000000000000000000000000000007d,
    125: 0x200000000000000000000000000000af,
    126: 0x40000000000000000000000000000095,
    127: 0x80000000000000000000000000000003,
    128: 0x100000000000000000000000000000087,
    129: 0x200000000000000000000000000000021,
    130: 0x400000000000000000000000000000009,
    131: 0x8000000000000000000000000000000f3,
    132: 0x1000000000000000000000000000000077,
    133: 0x200000000000000000000000000000006f,
    134: 0x40000000000000000000000000000000a3,
    135: 0x8000000000000000000000000000000059,
    136: 0x1000000000000000000000000000000002d,
    137: 0x2000000000000000000000000000000013d,
    138: 0x4000000000000000000000000000000016d,
    139: 0x800000000000000000000000000000000af,
    140: 0x100000000000000000000000000000000053,
    141: 0x2000000000000000000000000000000001ab,
    142: 0x4000000000000000000000000000000000f3,
    143: 0x80000000000000000000000000000000002d,
    144: 0x1000000000000000000000000000000000095,
    145: 0x2000000000000000000000000000000000063,
    146: 0x400000000000000000000000000000000002d,
    147: 0x800000000000000000000000000000000003f,
    148: 0x100000000000000000000000000000000000a9,
    149: 0x200000000000000000000000000000000002fb,
    150: 0x40000000000000000000000000000000000035,
    151: 0x80000000000000000000000000000000000009,
    152: 0x10000000000000000000000000000000000004d,
    153: 0x200000000000000000000000000000000000003,
    154: 0x4000000000000000000000000000000000000e1,
    155: 0x8000000000000000000000000000000000000b1,
    156: 0x1000000000000000000000000000000000000069,
    157: 0x2000000000000000000000000000000000000065,
    158: 0x4000000000000000000000000000000000000137,
    159: 0x800000000000000000000000000000000000007b,
    160: 0x1000000000000000000000000000000000000002d,
    161: 0x2000000000000000000000000000000000000004d,
    162: 0x400000000000000000000000000000000000000e7,
    163: 0x800000000000000000000000000000000000000c9,
    164: 0x1000000000000000000000000000000000000001ef,
    165: 0x20000000000000000000000000000000000000025b,
    166: 0x400000000000000000000000000000000000000063,
    167: 0x800000000000000000000000000000000000000041,
    168: 0x100000000000000000000000000000000000000005f,
    169: 0x2000000000000000000000000000000000000000161,
    170: 0x400000000000000000000000000000000000000004d,
    171: 0x800000000000000000000000000000000000000003f,
    172: 0x10000000000000000000000000000000000000000003,
    173: 0x20000000000000000000000000000000000000000125,
    174: 0x4000000000000000000000000000000000000000007d,
    175: 0x80000000000000000000000000000000000000000041,
    176: 0x1000000000000000000000000000000000000000000bd,
    177: 0x20000000000000000000000000000000000000000002d,
    178: 0x400000000000000000000000000000000000000000185,
    179: 0x800000000000000000000000000000000000000000017,
    180: 0x1000000000000000000000000000000000000000000009,
    181: 0x20000000000000000000000000000000000000000000c3,
    182: 0x40000000000000000000000000000000000000000000f3,
    183: 0x8000000000000000000000000000000000000000000191,
    184: 0x1000000000000000000000000000000000000000000015d,
    185: 0x2000000000000000000000000000000000000000000010b,
    186: 0x4000000000000000000000000000000000000000000019d,
    187: 0x800000000000000000000000000000000000000000000e1,
    188: 0x100000000000000000000000000000000000000000000065,
    189: 0x200000000000000000000000000000000000000000000065,
    190: 0x4000000000000000000000000000000000000000000001c1,
    191: 0x8000000000000000000000000000000000000000000000bb,
    192: 0x1000000000000000000000000000000000000000000000087,
    193: 0x20000000000000000000000000000000000000000000001f7,
    194: 0x400000000000000000000000000000000000000000000001d,
    195: 0x80000000000000000000000000000000000000000000000b7,
    196: 0x10000000000000000000000000000000000000000000000009,
    197: 0x200000000000000000000000000000000000000000000001ef,
    198: 0x40000000000000000000000000000000000000000000000069,
    199: 0x800000000000000000000000000000000000000000000000ed,
    200: 0x10000000000000000000000000000000000000000000000002d,
    201: 0x20000000000000000000000000000000000000000000000004d,
    202: 0x4000000000000000000000000000000000000000000000000d1,
    203: 0x800000000000000000000000000000000000000000000000183,
    204: 0x1000000000000000000000000000000000000000000000000035,
    205: 0x2000000000000000000000000000000000000000000000000225,
    206: 0x40000000000000000000000000000000000000000000000000af,
    207: 0x8000000000000000000000000000000000000000000000000243,
    208: 0x100000000000000000000000000000000000000000000000001cd,
    209: 0x2000000000000000000000000000000000000000000000000002d,
    210: 0x40000000000000000000000000000000000000000000000000081,
    211: 0x8000000000000000000000000000000000000000000000000026b,
    212: 0x100000000000000000000000000000000000000000000000000099,
    213: 0x200000000000000000000000000000000000000000000000000065,
    214: 0x40000000000000000000000000000000000000000000000000002b,
    215: 0x800000000000000000000000000000000000000000000000000069,
    216: 0x100000000000000000000000000000000000000000000000000008b,
    217: 0x2000000000000000000000000000000000000000000000000000071,
    218: 0x40000000000000000000000000000000000000000000000000000f5,
    219: 0x80000000000000000000000000000000000000000000000000000f5,
    220: 0x10000000000000000000000000000000000000000000000000000081,
    221: 0x20000000000000000000000000000000000000000000000000000137,
    222: 0x40000000000000000000000000000000000000000000000000000035,
    223: 0x80000000000000000000000000000000000000000000000000000035,
    224: 0x1000000000000000000000000000000000000000000000000000001b5,
    225: 0x20000000000000000000000000000000000000000000000000000016d,
    226: 0x4000000000000000000000000000000000000000000000000000000f5,
    227: 0x80000000000000000000000000000000000000000000000000000007b,
    228: 0x1000000000000000000000000000000000000000000000000000000107,
    229: 0x2000000000000000000000000000000000000000000000000000000267,
    230: 0x40000000000000000000000000000000000000000000000000000000bd,
    231: 0x8000000000000000000000000000000000000000000000000000000095,
    232: 0x100000000000000000000000000000000000000000000000000000000f5,
    233: 0x200000000000000000000000000000000000000000000000000000000bd,
    234: 0x400000000000000000000000000000000000000000000000000000001cb,
    235: 0x800000000000000000000000000000000000000000000000000000001cd,
    236: 0x100000000000000000000000000000000000000000000000000000000021,
    237: 0x200000000000000000000000000000000000000000000000000000000093,
    238: 0x400000000000000000000000000000000000000000000000000000000027,
    239: 0x80000000000000000000000000000000000000000000000000000000003f,
    240: 0x1000000000000000000000000000000000000000000000000000000000129,
    241: 0x2000000000000000000000000000000000000000000000000000000000179,
    242: 0x4000000000000000000000000000000000000000000000000000000000173,
    243: 0x8000000000000000000000000000000000000000000000000000000000123,
    244: 0x10000000000000000000000000000000000000000000000000000000000167,
    245: 0x20000000000000000000000000000000000000000000000000000000000053,
    246: 0x400000000000000000000000000000000000000000000000000000000001a7,
    247: 0x80000000000000000000000000000000000000000000000000000000000215,
    248: 0x10000000000000000000000000000000000000000000000000000000000013d,
    249: 0x200000000000000000000000000000000000000000000000000000000000093,
    250: 0x40000000000000000000000000000000000000000000000000000000000006f,
    251: 0x800000000000000000000000000000000000000000000000000000000000095,
    252: 0x100000000000000000000000000000000000000000000000000000000000007d,
    253: 0x200000000000000000000000000000000000000000000000000000000000003f,
    254: 0x4000000000000000000000000000000000000000000000000000000000000087,
    255: 0x800000000000000000000000000000000000000000000000000000000000002d,
    256: 0x10000000000000000000000000000000000000000000000000000000000000425,
    257: 0x200000000000000000000000000000000000000000000000000000000000000bd,
    258: 0x40000000000000000000000000000000000000000000000000000000000000251,
    259: 0x800000000000000000000000000000000000000000000000000000000000001fb,
    260: 0x100000000000000000000000000000000000000000000000000000000000000069,
    261: 0x2000000000000000000000000000000000000000000000000000000000000000d1,
    262: 0x400000000000000000000000000000000000000000000000000000000000000311,
    263: 0x80000000000000000000000000000000000000000000000000000000000000027f,
    264: 0x1000000000000000000000000000000000000000000000000000000000000000245,
    265: 0x200000000000000000000000000000000000000000000000000000000000000002d,
    266: 0x400000000000000000000000000000000000000000000000000000000000000004d,
    267: 0x8000000000000000000000000000000000000000000000000000000000000000149,
    268: 0x10000000000000000000000000000000000000000000000000000000000000000387,
    269: 0x200000000000000000000000000000000000000000000000000000000000000000c3,
    270: 0x40000000000000000000000000000000000000000000000000000000000000000035,
    271: 0x8000000000000000000000000000000000000000000000000000000000000000011f,
    272: 0x1000000000000000000000000000000000000000000000000000000000000000001e3,
    273: 0x200000000000000000000000000000000000000000000000000000000000000000087,
    274: 0x4000000000000000000000000000000000000000000000000000000000000000000ed,
    275: 0x80000000000000000000000000000000000000000000000000000000000000000013b,
    276: 0x100000000000000000000000000000000000000000000000000000000000000000004b,
    277: 0x20000000000000000000000000000000000000000000000000000000000000000000b7,
    278: 0x4000000000000000000000000000000000000000000000000000000000000000000021,
    279: 0x8000000000000000000000000000000000000000000000000000000000000000000021,
    280: 0x10000000000000000000000000000000000000000000000000000000000000000000225,
    281: 0x20000000000000000000000000000000000000000000000000000000000000000000213,
    282: 0x4000000000000000000000000000000000000000000000000000000000000000000004d,
    283: 0x80000000000000000000000000000000000000000000000000000000000000000000167,
    284: 0x100000000000000000000000000000000000000000000000000000000000000000000161,
    285: 0x2000000000000000000000000000000000000000000000000000000000000000000000af,
    286: 0x4000000000000000000000000000000000000000000000000000000000000000000001fb,
    287: 0x800000000000000000000000000000000000000000000000000000000000000000000065,
    288: 0x10000000000000000000000000000000000000000000000000000000000000000000001d5,
    289: 0x20000000000000000000000000000000000000000000000000000000000000000000000f5,
    290: 0x400000000000000000000000000000000000000000000000000000000000000000000002d,
    291: 0x800000000000000000000000000000000000000000000000000000000000000000000007b,
    292: 0x1000000000000000000000000000000000000000000000000000000000000000000000008b,
    293: 0x2000000000000000000000000000000000000000000000000000000000000000000000025b,
    294: 0x400000000000000000000000000000000000000000000000000000000000000000000000f9,
    295: 0x80000000000000000000000000000000000000000000000000000000000000000000000035,
    296: 0x10000000000000000000000000000000000000000000000000000000000000000000000008d,
    297: 0x200000000000000000000000000000000000000000000000000000000000000000000000021,
    298: 0x40000000000000000000000000000000000000000000000000000000000000000000000013b,
    299: 0x8000000000000000000000000000000000000000000000000000000000000000000000000af,
    300: 0x1000000000000000000000000000000000000000000000000000000000000000000000000021,
    301: 0x2000000000000000000000000000000000000000000000000000000000000000000000000167,
    302: 0x400000000000000000000000000000000000000000000000000000000000000000000000003f,
    303: 0x8000000000000000000000000000000000000000000000000000000000000000000000000003,
    304: 0x1000000000000000000000000000000000000000000000000000000000000000000000000003f,
    305: 0x200000000000000000000000000000000000000000000000000000000000000000000000000c5,
    306: 0x4000000000000000000000000000000000000000000000000000000000000000000000000008b,
    307: 0x80000000000000000000000000000000000000000000000000000000000000000000000000115,
    308: 0x100000000000000000000000000000000000000000000000000000000000000000000000000387,
    309: 0x200000000000000000000000000000000000000000000000000000000000000000000000000173,
    310: 0x400000000000000000000000000000000000000000000000000000000000000000000000000123,
    311: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000a9,
    312: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000291,
    313: 0x200000000000000000000000000000000000000000000000000000000000000000000000000008b,
    314: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000167,
    315: 0x800000000000000000000000000000000000000000000000000000000000000000000000000007b,
    316: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000016b,
    317: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000095,
    318: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000161,
    319: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000012f,
    320: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000001b,
    321: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000a5,
    322: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000002f7,
    323: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000007b,
    324: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000000017,
    325: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000157,
    326: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000040b,
    327: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000ed,
    328: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000000010b,
    329: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000013d,
    330: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000006f,
    331: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000f5,
    332: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000047,
    333: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000005,
    334: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000027,
    335: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000333,
    336: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000000000093,
    337: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000e7,
    338: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000001b,
    339: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000af,
    340: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000002cb,
    341: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000011f,
    342: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000015d,
    343: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000003db,
    344: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000087,
    345: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000115,
    346: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000e7,
    347: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000f5,
    348: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000000000000191,
    349: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000065,
    350: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000065,
    351: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000149,
    352: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000bd,
    353: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000000291,
    354: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000032b,
    355: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000063,
    356: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000000000000000e7,
    357: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000001f1,
    358: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000016b,
    359: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000000000167,
    360: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000002d,
    361: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000000093,
    362: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000019b,
    363: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000000129,
    364: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000201,
    365: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000000000261,
    366: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000161,
    367: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000000000000bb,
    368: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000008d,
    369: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000000005eb,
    370: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000002d,
    371: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000010d,
    372: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000016d,
    373: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000185,
    374: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000161,
    375: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000017,
    376: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001a1,
    377: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000010b,
    378: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000251,
    379: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000032b,
    380: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000563,
    381: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000027,
    382: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000223,
    383: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000223,
    384: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001df,
    385: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000041,
    386: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000395,
    387: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000183,
    388: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000099,
    389: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000cf,
    390: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000013b,
    391: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000047,
    392: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000019b,
    393: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000081,
    394: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000185,
    395: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001f7,
    396: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000007d,
    397: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001e3,
    398: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000c5,
    399: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000257,
    400: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000002d,
    401: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000bb,
    402: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000003f,
    403: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000321,
    404: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000007b,
    405: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000355,
    406: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000010d,
    407: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001a7,
    408: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000002d,
    409: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000a9,
    410: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000419,
    411: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000016d,
    412: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000a5,
    413: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000d7,
    414: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000013b,
    415: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000215,
    416: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000225,
    417: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000013b,
    418: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000077,
    419: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000027f,
    420: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000081,
    421: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000035,
    422: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000bb,
    423: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000021f,
    424: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001ad,
    425: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000007b,
    426: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000273,
    427: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000167,
    428: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000015b,
    429: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000023d,
    430: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000013d,
    431: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000002b,
    432: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000eb,
    433: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000036f,
    434: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000e7,
    435: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000046b,
    436: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000071,
    437: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000047,
    438: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000019d,
    439: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000010d,
    440: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001b,
    441: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000081,
    442: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000a5,
    443: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000018f,
    444: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000002bf,
    445: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000d1,
    446: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000006a3,
    447: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000019d,
    448: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000bd,
    449: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000027f,
    450: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001d5,
    451: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000335,
    452: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000071,
    453: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000007f1,
    454: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000143,
    455: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000002f1,
    456: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000cf,
    457: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000026d,
    458: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000021f,
    459: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000db,
    460: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000223,
    461: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000c3,
    462: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000261,
    463: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000595,
    464: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000257,
    465: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000010d,
    466: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000003c9,
    467: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000843,
    468: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000055f,
    469: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000007d,
    470: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000013d,
    471: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000003,
    472: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000003f,
    473: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000149,
    474: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000002b9,
    475: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000311,
    476: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000009f,
    477: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000179,
    478: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000053,
    479: 0x8000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001fd,
    480: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000dd,
    481: 0x2000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000297,
    482: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000261,
    483: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000db,
    484: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000005d7,
    485: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001ad,
    486: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000f9,
    487: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000215,
    488: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000001b,
    489: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000261,
    490: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000002a1,
    491: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000007b,
    492: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000053,
    493: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000024f,
    494: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000053f,
    495: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000b1,
    496: 0x10000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000197,
    497: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000006a3,
    498: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000077,
    499: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000002cd,
    500: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000167,
    501: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000035,
    502: 0x400000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000131,
    503: 0x800000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000009,
    504: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000005f,
    505: 0x200000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000031d,
    506: 0x4000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000317,
    507: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000f5,
    508: 0x1000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000009f,
    509: 0x20000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000189,
    510: 0x40000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000053,
    511: 0x80000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000401,
    512: 0x100000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000125,
}

# degree -> least k with x^n + x^k + 1 irreducible, 1 < k < n
TRINOMIAL_K = {
    3: 2,
    4: 3,
    5: 2,
    6: 3,
    7: 3,
    9: 4,
    10: 3,
    11: 2,
    12: 3,
    14: 5,
    15: 4,
    17: 3,
    18: 3,
    20: 3,
    21: 2,
    22: 21,
    23: 5,
    25: 3,
    28: 3,
    29: 2,
    30: 9,
    31: 3,
    33: 10,
    34: 7,
    35: 2,
    36: 9,
    39: 4,
    41: 3,
    42: 7,
    44: 5,
    46: 45,
    47: 5,
    49: 9,
    52: 3,
    54: 9,
    55: 7,
    57: 4,
    58: 19,
    60: 9,
    62: 29,
    63: 5,
    65: 18,
    66: 3,
    68: 9,
    71: 6,
    73: 25,
    74: 35,
    76: 21,
    79: 9,
    81: 4,
    84: 5,
    86: 21,
    87: 13,
    89: 38,
    90: 27,
    92: 21,
    93: 2,
    94: 21,
    95: 11,
    97: 6,
    98: 11,
    100: 15,
    102: 29,
    103: 9,
    105: 4,
    106: 15,
    108: 17,
    110: 33,
    111: 10,
    113: 9,
    118: 33,
    119: 8,
    121: 18,
    123: 2,
    124: 19,
    126: 21,
    127: 7,
    129: 5,
    130: 3,
    132: 17,
    134: 57,
    135: 11,
    137: 21,
    140: 15,
    142: 21,
    145: 52,
    146: 71,
    147: 14,
    148: 27,
    150: 53,
    151: 3,
    153: 8,
    154: 15,
    155: 62,
    156: 9,
    159: 31,
    161: 18,
    162: 27,
    166: 37,
    167: 6,
    169: 34,
    170: 11,
    172: 7,
    174: 13,
    175: 6,
    177: 8,
    178: 31,
    180: 3,
    182: 81,
    183: 56,
    185: 24,
    186: 11,
    191: 9,
    193: 15,
    194: 87,
    196: 3,
    198: 9,
    199: 34,
    201: 14,
    202: 55,
    204: 27,
    207: 43,
    209: 6,
    210: 7,
    212: 105,
    214: 73,
    215: 23,
    217: 45,
    218: 11,
    220: 7,
    223: 33,
    225: 32,
    228: 113,
    231: 26,
    233: 74,
    234: 31,
    236: 5,
    238: 73,
    239: 36,
    241: 70,
    242: 95,
    244: 111,
    247: 82,
    249: 35,
    250: 103,
    252: 15,
    253: 46,
    255: 52,
    257: 12,
    258: 71,
    260: 15,
    263: 93,
    265: 42,
    266: 47,
    268: 25,
    270: 53,
    271: 58,
    273: 23,
    274: 67,
    276: 63,
    278: 5,
    279: 5,
    281: 93,
    282: 35,
    284: 53,
    286: 69,
    287: 71,
    289: 21,
    292: 37,
    294: 33,
    295: 48,
    297: 5,
    300: 5,
    302: 41,
    303: 302,
    305: 102,
    308: 15,
    310: 93,
    313: 79,
    314: 15,
    316: 63,
    318: 45,
    319: 36,
    321: 31,
    322: 67,
    324: 51,
    327: 34,
    329: 50,
    330: 99,
    332: 89,
    333: 2,
    337: 55,
    340: 45,
    342: 125,
    343: 75,
    345: 22,
    346: 63,
    348: 103,
    350: 53,
    351: 34,
    353: 69,
    354: 99,
    358: 57,
    359: 68,
    362: 63,
    364: 9,
    366: 29,
    367: 21,
    369: 91,
    370: 139,
    372: 111,
    375: 16,
    377: 41,
    378: 43,
    380: 47,
    382: 81,
    383: 90,
    385: 6,
    386: 83,
    388: 159,
    390: 9,
    391: 28,
    393: 7,
    394: 135,
    396: 25,
    399: 26,
    401: 152,
    402: 171,
    404: 65,
    406: 141,
    407: 71,
    409: 87,
    412: 147,
    414: 13,
    415: 102,
    417: 107,
    418: 199,
    420: 7,
    422: 149,
    423: 25,
    425: 12,
    426: 63,
    428: 105,
    431: 120,
    433: 33,
    436: 165,
    438: 65,
    439: 49,
    441: 7,
    444: 81,
    446: 105,
    447: 73,
    449: 134,
    450: 47,
    455: 38,
    457: 16,
    458: 203,
    460: 19,
    462: 73,
    463: 93,
    465: 31,
    468: 27,
    470: 9,
    471: 119,
    473: 200,
    474: 191,
    476: 9,
    478: 121,
    479: 104,
    481: 138,
    484: 105,
    486: 81,
    487: 94,
    489: 83,
    490: 219,
    492: 7,
    494: 17,
    495: 76,
    497: 78,
    498: 155,
    500: 27,
    503: 3,
    505: 156,
    506: 23,
    508: 9,
    510: 69,
    511: 10,
}

# degree -> (terms, k) with sum_i x^(i*k) irreducible, 0 < k < terms
EQUALLY_SPACED = {
    2: (2, 1),
    4: (4, 1),
    10: (10, 1),
    12: (12, 1),
    18: (18, 1),
    28: (28, 1),
    36: (36, 1),
    52: (52, 1),
    58: (58, 1),
    60: (60, 1),
    66: (66, 1),
    82: (82, 1),
    100: (100, 1),
    106: (106, 1),
    130: (130, 1),
    138: (138, 1),
    148: (148, 1),
    162: (162, 1),
    172: (172, 1),
    178: (178, 1),
    180: (180, 1),
    196: (196, 1),
    210: (210, 1),
    226: (226, 1),
    268: (268, 1),
    292: (292, 1),
    316: (316, 1),
    346: (346, 1),
    348: (348, 1),
    372: (372, 1),
    378: (378, 1),
    388: (388, 1),
    418: (418, 1),
    420: (420, 1),
    442: (442, 1),
    460: (460, 1),
    466: (466, 1),
    490: (490, 1),
    508: (508, 1),
}
