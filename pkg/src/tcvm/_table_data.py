"""Critical-value table for the truncated weighted statistic.

Columns: n, then the upper critical values at significance levels
0.15, 0.1, 0.075, 0.05, 0.025, 0.01, 0.001, then a_n and C_n.
Quantiles were estimated from 50,000 null replications; a_n and C_n are
deterministic.  The a_n entries for n = 15 and n = 16 are recomputed values
(the published table transposes them; see the n-consistency test).
"""

CRITICAL_VALUE_ROWS = """\
10,0.7547,0.8525,0.92590,1.0203,1.1917,1.4128,1.9025,1.2816,28.5798
11,0.7909,0.8961,0.9714,1.0754,1.2470,1.4733,2.0513,1.3352,34.3184
12,0.8179,0.9254,0.9996,1.1050,1.2860,1.5043,2.0086,1.3830,40.4855
13,0.8489,0.9597,1.0410,1.1456,1.3263,1.5679,2.1420,1.4261,47.0700
14,0.8728,0.9840,1.0632,1.1723,1.3571,1.5931,2.1457,1.4652,54.0622
15,0.8879,1.00573,1.08548,1.2007,1.3975,1.6664,2.2531,1.5011,61.4534
16,0.9132,1.0305,1.1154,1.2308,1.4238,1.6776,2.2766,1.5341,69.2355
17,0.9300,1.0491,1.1289,1.2381,1.4288,1.6714,2.2844,1.5647,77.4015
18,0.9522,1.0769,1.1624,1.2814,1.4854,1.7259,2.4215,1.5932,85.9446
19,0.9691,1.0945,1.1823,1.3062,1.5030,1.7649,2.4001,1.6199,94.8590
20,0.9857,1.1091,1.1963,1.312,1.5213,1.7918,2.4935,1.6448,104.1389
21,1.0076,1.1320,1.2174,1.3381,1.5482,1.8287,2.4845,1.6684,113.7793
22,1.0142,1.1414,1.2330,1.3607,1.5687,1.8671,2.5638,1.6906,123.7752
23,1.0287,1.1549,1.2454,1.3729,1.5899,1.8607,2.5877,1.7117,134.1223
24,1.0434,1.1731,1.2664,1.3940,1.6186,1.9087,2.5657,1.7317,144.8161
25,1.0538,1.1876,1.2837,1.4213,1.6322,1.9017,2.5965,1.7507,155.8529
26,1.0587,1.1905,1.2856,1.4124,1.6442,1.9479,2.6597,1.7688,167.2289
27,1.0745,1.2076,1.3000,1.4348,1.6762,1.9522,2.7323,1.7862,178.9405
28,1.0847,1.2190,1.3199,1.4525,1.6863,1.9890,2.6675,1.8027,190.9843
29,1.0942,1.2286,1.3213,1.4607,1.6994,2.0166,2.7327,1.8186,203.3574
30,1.1102,1.2441,1.3391,1.4708,1.6967,1.9752,2.6952,1.8339,216.0565
31,1.1192,1.2600,1.3598,1.5001,1.7279,2.0439,2.7540,1.8486,229.0789
32,1.1226,1.2671,1.3668,1.5062,1.7311,2.0420,2.7798,1.8627,242.4218
33,1.1363,1.2760,1.3730,1.5112,1.7519,2.0624,2.9159,1.8764,256.0826
34,1.1408,1.2788,1.3781,1.5166,1.7584,2.0704,2.8223,1.8895,270.0589
35,1.1518,1.2886,1.3852,1.5342,1.7691,2.1021,2.8338,1.9022,284.3482
36,1.1603,1.3033,1.4066,1.5445,1.7852,2.1074,2.9445,1.9145,298.9482
37,1.1666,1.3092,1.4067,1.5474,1.7937,2.1235,2.8274,1.9264,313.8568
38,1.1730,1.3191,1.4193,1.5632,1.8161,2.1436,2.9951,1.9379,329.0718
39,1.1908,1.3345,1.4365,1.5804,1.8254,2.1241,2.9245,1.9491,344.5912
40,1.1970,1.3367,1.4392,1.5841,1.8324,2.1714,2.9444,1.9600,360.4130
41,1.2026,1.3437,1.4469,1.5920,1.8416,2.1833,3.0389,1.9705,376.5354
42,1.2111,1.3603,1.4613,1.6042,1.8393,2.1652,2.9808,1.9808,392.9565
43,1.2015,1.3467,1.4528,1.6031,1.8512,2.1814,2.9263,1.9907,409.6745
44,1.2213,1.3708,1.4767,1.6147,1.8585,2.1950,3.0911,2.0004,426.6878
45,1.2285,1.3771,1.4843,1.6341,1.8750,2.1900,3.0056,2.0099,443.9947
46,1.2350,1.3875,1.4955,1.6477,1.9053,2.2467,3.0391,2.0191,461.5935
47,1.2342,1.3844,1.4903,1.6384,1.8839,2.2215,3.0267,2.0281,479.4828
48,1.2469,1.4040,1.5141,1.6680,1.9346,2.2634,3.0625,2.0368,497.6611
49,1.2535,1.4063,1.5159,1.6730,1.9293,2.2552,3.0640,2.0454,516.1269
50,1.2629,1.4271,1.5304,1.6897,1.9490,2.2770,3.1309,2.0537,534.8787
51,1.2645,1.4220,1.5301,1.6947,1.9627,2.3063,3.2487,2.0619,553.9153
52,1.2708,1.4243,1.5399,1.6938,1.9521,2.3066,3.1432,2.0699,573.2352
53,1.2801,1.4340,1.5445,1.7008,1.9603,2.3068,3.1140,2.0777,592.8372
54,1.2772,1.4313,1.5422,1.6962,1.9627,2.3047,3.1660,2.0854,612.7200
55,1.2854,1.4378,1.5531,1.7133,1.9860,2.3389,3.2503,2.0928,632.8823
56,1.2902,1.4408,1.5486,1.7107,1.9917,2.3399,3.2057,2.1002,653.3230
57,1.2936,1.4500,1.5653,1.7184,1.9894,2.3707,3.2309,2.1073,674.0410
58,1.2986,1.4590,1.5700,1.7210,1.9798,2.3287,3.2403,2.1144,695.0349
59,1.3175,1.4762,1.5872,1.7379,2.0025,2.3765,3.3164,2.1213,716.3038
60,1.3056,1.4609,1.5736,1.7346,2.0055,2.3570,3.2960,2.1280,737.8466
61,1.3125,1.4747,1.5869,1.7424,2.0206,2.3778,3.3615,2.1347,759.6622
62,1.3120,1.4715,1.5852,1.7434,2.0084,2.3791,3.3989,2.1412,781.7495
63,1.3282,1.4904,1.5979,1.7568,2.0256,2.3538,3.2608,2.1476,804.1076
64,1.3275,1.4875,1.6038,1.7623,2.0344,2.4059,3.3059,2.1539,826.7354
65,1.3259,1.4876,1.6038,1.7701,2.0566,2.4492,3.4750,2.1600,849.6320
66,1.3280,1.4886,1.6081,1.7691,2.0498,2.4100,3.2162,2.1661,872.7964
67,1.3444,1.5083,1.6218,1.7782,2.0520,2.4257,3.4441,2.1721,896.2277
68,1.3521,1.5184,1.6297,1.7866,2.0490,2.4221,3.4079,2.1779,919.9251
69,1.3492,1.5077,1.6262,1.7902,2.0887,2.4654,3.4971,2.1837,943.8875
70,1.3507,1.5173,1.6381,1.8052,2.0929,2.4834,3.3568,2.1893,968.1142
71,1.3485,1.5160,1.6333,1.7975,2.0825,2.4569,3.4083,2.1949,992.6042
72,1.3643,1.5318,1.6550,1.8260,2.1092,2.4882,3.3969,2.2004,1017.3568
73,1.3668,1.5324,1.6465,1.8064,2.0829,2.4538,3.3884,2.2058,1042.3711
74,1.3643,1.5258,1.6434,1.8053,2.0907,2.4632,3.4550,2.2111,1067.6463
75,1.3698,1.5353,1.6487,1.8207,2.1057,2.5039,3.3958,2.2164,1093.1817
76,1.3619,1.5231,1.6324,1.8007,2.0775,2.4609,3.4476,2.2215,1118.9764
77,1.3931,1.5646,1.6840,1.8451,2.1306,2.5129,3.5805,2.2266,1145.0297
78,1.3896,1.5560,1.6807,1.8527,2.1487,2.5420,3.4796,2.2316,1171.3408
79,1.3930,1.5669,1.6900,1.8486,2.1391,2.5279,3.4635,2.2365,1197.9091
80,1.3873,1.5528,1.6711,1.8431,2.1262,2.5284,3.4714,2.2414,1224.7337
81,1.3923,1.5573,1.6734,1.8414,2.1218,2.4825,3.4870,2.2462,1251.8140
82,1.3857,1.5559,1.6767,1.8532,2.1422,2.4974,3.4783,2.2509,1279.1492
83,1.3860,1.5579,1.6799,1.8568,2.1377,2.5472,3.4902,2.2556,1306.7388
84,1.4178,1.5832,1.7032,1.8737,2.1635,2.5825,3.5271,2.2602,1334.5820
85,1.4066,1.5793,1.7007,1.8776,2.1598,2.5435,3.4956,2.2647,1362.6781
86,1.4097,1.5776,1.6929,1.8562,2.1554,2.5406,3.5896,2.2692,1391.0266
87,1.4173,1.5900,1.7129,1.8834,2.1823,2.6082,3.6324,2.2736,1419.6267
88,1.4149,1.5912,1.7170,1.8921,2.1844,2.6253,3.6058,2.2780,1448.4778
89,1.4159,1.5853,1.7026,1.8711,2.1765,2.5753,3.5992,2.2823,1477.5794
90,1.4191,1.5880,1.7085,1.8794,2.1779,2.5629,3.5503,2.2865,1506.9307
91,1.4419,1.6148,1.7353,1.9100,2.2180,2.6173,3.6562,2.2907,1536.5313
92,1.4381,1.6061,1.7302,1.9133,2.2286,2.6358,3.7350,2.2949,1566.3805
93,1.4378,1.6117,1.7277,1.8948,2.2087,2.5941,3.6177,2.2990,1596.4777
94,1.4356,1.6133,1.7393,1.9103,2.2107,2.5887,3.6782,2.3030,1626.8223
95,1.4363,1.6112,1.7321,1.9039,2.2049,2.6048,3.6679,2.3070,1657.4138
96,1.4375,1.6138,1.7321,1.9096,2.2107,2.6169,3.6031,2.3110,1688.2517
97,1.4355,1.6057,1.7274,1.9046,2.2146,2.6168,3.6890,2.3149,1719.3353
98,1.4445,1.6137,1.7390,1.9171,2.2214,2.6184,3.6037,2.3188,1750.6642
99,1.4338,1.6128,1.7343,1.9024,2.2065,2.6307,3.6025,2.3226,1782.2377
100,1.4568,1.6358,1.7637,1.9396,2.2606,2.6495,3.6210,2.3263,1814.0555
101,1.4648,1.6426,1.7661,1.9444,2.2449,2.6978,3.7069,2.3301,1846.1168
102,1.4579,1.6328,1.7594,1.9336,2.2381,2.6473,3.7758,2.3338,1878.4214
103,1.4656,1.6398,1.7669,1.9521,2.2556,2.6575,3.6712,2.3374,1910.9685
104,1.4652,1.6465,1.7742,1.9433,2.2514,2.6530,3.7589,2.3410,1943.7578
105,1.4668,1.6380,1.7589,1.9397,2.2514,2.6561,3.6646,2.3446,1976.7887
106,1.4653,1.6402,1.7629,1.9431,2.2407,2.6590,3.7376,2.3481,2010.0608
107,1.4624,1.6360,1.7586,1.9389,2.2620,2.6619,3.7710,2.3516,2043.5736
108,1.4611,1.6334,1.7577,1.9301,2.2403,2.6498,3.8194,2.3551,2077.3266
109,1.4634,1.6421,1.7680,1.9488,2.2502,2.6373,3.7118,2.3585,2111.3193
110,1.4654,1.6381,1.7622,1.9379,2.2344,2.6400,3.6154,2.3619,2145.5513
111,1.4671,1.6525,1.7806,1.9570,2.2594,2.6291,3.7433,2.3652,2180.0221
112,1.4914,1.6740,1.7934,1.9840,2.2849,2.7172,3.7062,2.3686,2214.7313
113,1.4973,1.6782,1.8027,1.9823,2.3010,2.7150,3.7486,2.3719,2249.6784
114,1.4936,1.6668,1.7955,1.9757,2.2761,2.7000,3.7684,2.3751,2284.8629
115,1.4859,1.6651,1.7934,1.9717,2.2655,2.6743,3.7925,2.3783,2320.2846
116,1.4931,1.6768,1.8051,1.9844,2.2938,2.7092,3.7641,2.3815,2355.9428
117,1.4982,1.6737,1.8047,1.9934,2.2950,2.7069,3.8541,2.3847,2391.8373
118,1.4916,1.6766,1.8010,1.9803,2.2962,2.7081,3.7584,2.3878,2427.9675
119,1.4936,1.6765,1.8043,1.9907,2.2986,2.7223,3.8190,2.3909,2464.3331
120,1.4914,1.6709,1.7969,1.9796,2.2913,2.6762,3.6763,2.3940,2500.9337
121,1.4992,1.6804,1.8054,1.9775,2.2979,2.7028,3.8052,2.3970,2537.7688
122,1.5008,1.6747,1.7973,1.9802,2.2697,2.6783,3.7898,2.4000,2574.8381
123,1.4952,1.6757,1.8048,1.9860,2.2866,2.7052,3.7794,2.4030,2612.1411
124,1.4959,1.6759,1.8052,1.9868,2.2933,2.7154,3.6734,2.4060,2649.6775
125,1.5318,1.7153,1.8474,2.0254,2.3491,2.7653,3.9034,2.4089,2687.4469
126,1.5294,1.7087,1.8409,2.0284,2.3443,2.7871,3.8894,2.4118,2725.4489
127,1.5381,1.7214,1.8481,2.0238,2.3321,2.7497,3.8923,2.4147,2763.6831
128,1.5309,1.7123,1.8400,2.0182,2.3288,2.7619,3.8255,2.4176,2802.1492
129,1.5409,1.7260,1.8572,2.0429,2.3626,2.7835,3.7827,2.4204,2840.8467
130,1.5261,1.7104,1.8356,2.0192,2.3348,2.7624,3.9036,2.4232,2879.7754
131,1.5235,1.7010,1.8275,2.0085,2.3269,2.7192,3.8243,2.4260,2918.9348
132,1.5336,1.7112,1.8436,2.0235,2.3412,2.7569,3.7583,2.4287,2958.3246
133,1.5288,1.7149,1.8497,2.0347,2.3422,2.7812,3.7633,2.4315,2997.9444
134,1.5335,1.7190,1.8476,2.0265,2.3437,2.8052,3.8702,2.4342,3037.7939
135,1.5384,1.7142,1.8415,2.0223,2.3308,2.7512,3.8024,2.4369,3077.8728
136,1.5266,1.7098,1.8395,2.0177,2.3359,2.7451,3.8569,2.4395,3118.1807
137,1.5298,1.7110,1.8388,2.0191,2.3386,2.7836,3.8683,2.4422,3158.7172
138,1.5304,1.7133,1.8412,2.0182,2.3396,2.7247,3.7756,2.4448,3199.4820
139,1.5280,1.7143,1.8458,2.0307,2.3437,2.8075,3.8780,2.4474,3240.4748
140,1.5367,1.7242,1.8548,2.0318,2.3468,2.7696,3.8377,2.4500,3281.6953
141,1.5285,1.7122,1.8489,2.0288,2.3198,2.7296,3.9228,2.4526,3323.1431
142,1.5277,1.7122,1.8403,2.0260,2.3461,2.7479,3.8630,2.4551,3364.8179
143,1.5703,1.7560,1.8874,2.0776,2.4052,2.8404,3.9334,2.4576,3406.7194
144,1.5686,1.7593,1.8872,2.0716,2.3878,2.8007,4.1252,2.4601,3448.8472
145,1.5750,1.7631,1.8959,2.0823,2.3833,2.8230,4.0015,2.4626,3491.2011
146,1.5679,1.7588,1.8976,2.0884,2.4081,2.8252,3.8971,2.4651,3533.7808
147,1.5641,1.7590,1.8962,2.0794,2.4078,2.8128,3.9899,2.4675,3576.5858
148,1.5628,1.7477,1.8827,2.0588,2.3786,2.8044,4.0139,2.4699,3619.6160
149,1.5781,1.7605,1.8931,2.0821,2.4324,2.8661,4.0380,2.4723,3662.8710
150,1.5693,1.7627,1.8942,2.0844,2.4212,2.8560,3.9064,2.4747,3706.3505
151,1.5664,1.7507,1.8861,2.0802,2.4117,2.8842,4.0000,2.4771,3750.0543
152,1.5685,1.7542,1.8842,2.0725,2.4020,2.8504,3.9861,2.4795,3793.9820
153,1.5670,1.7486,1.8777,2.0670,2.3894,2.8398,3.9350,2.4818,3838.1333
154,1.5736,1.7672,1.8997,2.0929,2.4096,2.8565,3.9442,2.4841,3882.5079
155,1.5720,1.7637,1.8945,2.0866,2.4006,2.8125,3.8631,2.4864,3927.1056
156,1.5713,1.7670,1.8988,2.0980,2.4320,2.8729,3.9977,2.4887,3971.9261
157,1.5689,1.7527,1.8830,2.0711,2.3973,2.8370,3.8880,2.4910,4016.9691
158,1.5723,1.7604,1.8990,2.0775,2.4074,2.8411,3.9726,2.4932,4062.2343
159,1.5728,1.7598,1.8960,2.0764,2.3939,2.8315,4.0027,2.4955,4107.7214
160,1.5662,1.7526,1.8812,2.0655,2.4023,2.8322,4.0344,2.4977,4153.4301
161,1.5673,1.7568,1.8910,2.0793,2.4079,2.8703,3.9389,2.4999,4199.3603
162,1.5670,1.7538,1.8878,2.0758,2.4150,2.8757,4.0885,2.5021,4245.5115
163,1.5731,1.7620,1.8952,2.0779,2.3952,2.8549,3.9610,2.5043,4291.8836
164,1.5638,1.7507,1.8851,2.0779,2.4150,2.8065,3.8816,2.5064,4338.4763
165,1.5700,1.7558,1.8872,2.0719,2.3851,2.8230,3.9072,2.5086,4385.2894
166,1.5566,1.7460,1.8801,2.0689,2.3815,2.8411,3.9225,2.5107,4432.3224
167,1.6161,1.8091,1.9469,2.1541,2.4844,2.9439,4.0744,2.5128,4479.5753
168,1.6217,1.8117,1.9473,2.1437,2.4647,2.9140,4.0022,2.5150,4527.0477
169,1.6170,1.8016,1.9385,2.1341,2.4764,2.9199,4.0265,2.5170,4574.7394
170,1.6114,1.8041,1.9389,2.1331,2.4608,2.9014,4.1730,2.5191,4622.6501
171,1.6161,1.8114,1.9454,2.1368,2.4676,2.9217,4.0926,2.5212,4670.7796
172,1.6106,1.7986,1.9399,2.1326,2.4624,2.8999,4.1438,2.5232,4719.1276
173,1.6192,1.8214,1.9553,2.1474,2.4929,2.9706,4.0761,2.5253,4767.6939
174,1.6157,1.8069,1.9431,2.1289,2.4482,2.8809,4.0472,2.5273,4816.4782
175,1.6082,1.8052,1.9447,2.1369,2.4672,2.9281,3.9707,2.5293,4865.4804
176,1.6173,1.8097,1.9474,2.1422,2.4750,2.9213,4.0997,2.5313,4914.7001
177,1.6078,1.7979,1.9427,2.1378,2.4589,2.9142,4.0648,2.5333,4964.1371
178,1.6102,1.8069,1.9417,2.1439,2.4849,2.9138,3.9984,2.5353,5013.7912
179,1.6150,1.8043,1.9347,2.1237,2.4533,2.9027,4.0803,2.5372,5063.6621
180,1.6133,1.8025,1.9414,2.1374,2.4735,2.9096,3.9865,2.5392,5113.7496
181,1.6080,1.7933,1.9204,2.1121,2.4501,2.8787,4.0807,2.5411,5164.0535
182,1.6149,1.8081,1.9445,2.1443,2.4809,2.9197,4.0438,2.5430,5214.5735
183,1.6136,1.8006,1.9423,2.1373,2.4674,2.8889,4.2658,2.5450,5265.3095
184,1.6041,1.7966,1.9325,2.1395,2.4730,2.9267,4.1624,2.5469,5316.2611
185,1.6135,1.8104,1.9452,2.1380,2.4619,2.8934,4.3550,2.5488,5367.4282
186,1.6122,1.8053,1.9433,2.1357,2.4744,2.9524,4.0716,2.5506,5418.8106
187,1.6162,1.8079,1.9412,2.1267,2.4492,2.9129,4.0421,2.5525,5470.4079
188,1.6070,1.7985,1.9401,2.1441,2.4866,2.9596,4.0490,2.5544,5522.2200
189,1.6244,1.8170,1.9510,2.1456,2.4839,2.9188,4.0255,2.5562,5574.2468
190,1.6234,1.8161,1.9584,2.1561,2.4949,2.9272,4.0296,2.5580,5626.4878
191,1.6099,1.8018,1.9372,2.1328,2.4302,2.8630,4.0091,2.5599,5678.9431
192,1.6190,1.8098,1.9478,2.1408,2.4843,2.9319,4.1542,2.5617,5731.6122
193,1.6219,1.8135,1.9520,2.1423,2.4679,2.9339,4.1218,2.5635,5784.4951
194,1.6181,1.8069,1.9465,2.1347,2.4615,2.8779,4.0501,2.5653,5837.5914
195,1.6056,1.8000,1.9323,2.1229,2.4512,2.8756,4.1073,2.5671,5890.9011
196,1.6090,1.8070,1.9426,2.1445,2.4596,2.9005,4.1082,2.5688,5944.4238
197,1.6227,1.8158,1.9551,2.1444,2.4778,2.9440,4.1214,2.5706,5998.1594
198,1.6224,1.8160,1.9520,2.1429,2.4777,2.9228,4.1046,2.5724,6052.1077
199,1.6171,1.8062,1.9428,2.1411,2.4806,2.9012,4.0380,2.5741,6106.2685
200,1.6534,1.8537,1.9956,2.1848,2.5180,2.9667,4.2543,2.5758,6160.6415
250,1.6854,1.8946,2.0403,2.2348,2.5882,3.0200,4.4252,2.6521,9145.8
500,1.8803,2.1020,2.2570,2.4775,2.8403,3.3546,4.6692,2.8782,31419.2
750,1.9601,2.1819,2.3448,2.5749,2.9473,3.4903,4.8916,3.0038,65019.6
1000,2.0218,2.2488,2.4066,2.6323,3.0151,3.5407,4.9433,3.0902,109204
10000,2.7769,3.0512,3.2332,3.4776,3.8861,4.4679,5.6259,3.7190,7439183
"""
