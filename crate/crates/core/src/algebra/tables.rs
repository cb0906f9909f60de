//! Built-in primitive polynomials.
//!
//! Each entry `(p, n, c)` encodes the monic polynomial
//! `x^n + c[n-1] x^(n-1) + ... + c[1] x + c[0]` over GF(p). For `n >= 2` the
//! entry is the least primitive polynomial of degree `n` when the tail
//! coefficients are read as the base-p number `c[0] + c[1] p + ...`. For
//! `n = 1` the entry is `x - g` with `g` the least primitive root mod `p`
//! (and `g = 1` for GF(2)).

pub(super) static PRIMITIVE_POLYNOMIALS: &[(u32, u32, &[u32])] = &[
    // GF(2): least primitive root 1
    (2, 1, &[1]),
    // GF(3): least primitive root 2
    (3, 1, &[1]),
    // GF(5): least primitive root 2
    (5, 1, &[3]),
    // GF(7): least primitive root 3
    (7, 1, &[4]),
    // GF(11): least primitive root 2
    (11, 1, &[9]),
    // GF(13): least primitive root 2
    (13, 1, &[11]),
    // GF(17): least primitive root 3
    (17, 1, &[14]),
    // GF(19): least primitive root 2
    (19, 1, &[17]),
    // GF(23): least primitive root 5
    (23, 1, &[18]),
    // GF(29): least primitive root 2
    (29, 1, &[27]),
    // GF(31): least primitive root 3
    (31, 1, &[28]),
    // GF(37): least primitive root 2
    (37, 1, &[35]),
    // GF(41): least primitive root 6
    (41, 1, &[35]),
    // GF(43): least primitive root 3
    (43, 1, &[40]),
    // GF(47): least primitive root 5
    (47, 1, &[42]),
    // GF(53): least primitive root 2
    (53, 1, &[51]),
    // GF(59): least primitive root 2
    (59, 1, &[57]),
    // GF(61): least primitive root 2
    (61, 1, &[59]),
    // GF(67): least primitive root 2
    (67, 1, &[65]),
    // GF(71): least primitive root 7
    (71, 1, &[64]),
    // GF(73): least primitive root 5
    (73, 1, &[68]),
    // GF(79): least primitive root 3
    (79, 1, &[76]),
    // GF(83): least primitive root 2
    (83, 1, &[81]),
    // GF(89): least primitive root 3
    (89, 1, &[86]),
    // GF(97): least primitive root 5
    (97, 1, &[92]),
    // GF(101): least primitive root 2
    (101, 1, &[99]),
    // GF(103): least primitive root 5
    (103, 1, &[98]),
    // GF(107): least primitive root 2
    (107, 1, &[105]),
    // GF(109): least primitive root 6
    (109, 1, &[103]),
    // GF(113): least primitive root 3
    (113, 1, &[110]),
    // GF(127): least primitive root 3
    (127, 1, &[124]),
    // GF(131): least primitive root 2
    (131, 1, &[129]),
    // GF(137): least primitive root 3
    (137, 1, &[134]),
    // GF(139): least primitive root 2
    (139, 1, &[137]),
    // GF(149): least primitive root 2
    (149, 1, &[147]),
    // GF(151): least primitive root 6
    (151, 1, &[145]),
    // GF(157): least primitive root 5
    (157, 1, &[152]),
    // GF(163): least primitive root 2
    (163, 1, &[161]),
    // GF(167): least primitive root 5
    (167, 1, &[162]),
    // GF(173): least primitive root 2
    (173, 1, &[171]),
    // GF(179): least primitive root 2
    (179, 1, &[177]),
    // GF(181): least primitive root 2
    (181, 1, &[179]),
    // GF(191): least primitive root 19
    (191, 1, &[172]),
    // GF(193): least primitive root 5
    (193, 1, &[188]),
    // GF(197): least primitive root 2
    (197, 1, &[195]),
    // GF(199): least primitive root 3
    (199, 1, &[196]),
    // GF(211): least primitive root 2
    (211, 1, &[209]),
    // GF(223): least primitive root 3
    (223, 1, &[220]),
    // GF(227): least primitive root 2
    (227, 1, &[225]),
    // GF(229): least primitive root 6
    (229, 1, &[223]),
    // GF(233): least primitive root 3
    (233, 1, &[230]),
    // GF(239): least primitive root 7
    (239, 1, &[232]),
    // GF(241): least primitive root 7
    (241, 1, &[234]),
    // GF(251): least primitive root 6
    (251, 1, &[245]),
    // GF(257): least primitive root 3
    (257, 1, &[254]),
    // GF(263): least primitive root 5
    (263, 1, &[258]),
    // GF(269): least primitive root 2
    (269, 1, &[267]),
    // GF(271): least primitive root 6
    (271, 1, &[265]),
    // GF(277): least primitive root 5
    (277, 1, &[272]),
    // GF(281): least primitive root 3
    (281, 1, &[278]),
    // GF(283): least primitive root 3
    (283, 1, &[280]),
    // GF(293): least primitive root 2
    (293, 1, &[291]),
    // GF(307): least primitive root 5
    (307, 1, &[302]),
    // GF(311): least primitive root 17
    (311, 1, &[294]),
    // GF(313): least primitive root 10
    (313, 1, &[303]),
    // GF(317): least primitive root 2
    (317, 1, &[315]),
    // GF(331): least primitive root 3
    (331, 1, &[328]),
    // GF(337): least primitive root 10
    (337, 1, &[327]),
    // GF(347): least primitive root 2
    (347, 1, &[345]),
    // GF(349): least primitive root 2
    (349, 1, &[347]),
    // GF(353): least primitive root 3
    (353, 1, &[350]),
    // GF(359): least primitive root 7
    (359, 1, &[352]),
    // GF(367): least primitive root 6
    (367, 1, &[361]),
    // GF(373): least primitive root 2
    (373, 1, &[371]),
    // GF(379): least primitive root 2
    (379, 1, &[377]),
    // GF(383): least primitive root 5
    (383, 1, &[378]),
    // GF(389): least primitive root 2
    (389, 1, &[387]),
    // GF(397): least primitive root 5
    (397, 1, &[392]),
    // GF(401): least primitive root 3
    (401, 1, &[398]),
    // GF(409): least primitive root 21
    (409, 1, &[388]),
    // GF(419): least primitive root 2
    (419, 1, &[417]),
    // GF(421): least primitive root 2
    (421, 1, &[419]),
    // GF(431): least primitive root 7
    (431, 1, &[424]),
    // GF(433): least primitive root 5
    (433, 1, &[428]),
    // GF(439): least primitive root 15
    (439, 1, &[424]),
    // GF(443): least primitive root 2
    (443, 1, &[441]),
    // GF(449): least primitive root 3
    (449, 1, &[446]),
    // GF(457): least primitive root 13
    (457, 1, &[444]),
    // GF(461): least primitive root 2
    (461, 1, &[459]),
    // GF(463): least primitive root 3
    (463, 1, &[460]),
    // GF(467): least primitive root 2
    (467, 1, &[465]),
    // GF(479): least primitive root 13
    (479, 1, &[466]),
    // GF(487): least primitive root 3
    (487, 1, &[484]),
    // GF(491): least primitive root 2
    (491, 1, &[489]),
    // GF(499): least primitive root 7
    (499, 1, &[492]),
    // GF(503): least primitive root 5
    (503, 1, &[498]),
    // GF(509): least primitive root 2
    (509, 1, &[507]),
    // GF(521): least primitive root 3
    (521, 1, &[518]),
    // GF(523): least primitive root 2
    (523, 1, &[521]),
    // GF(541): least primitive root 2
    (541, 1, &[539]),
    // GF(547): least primitive root 2
    (547, 1, &[545]),
    // GF(557): least primitive root 2
    (557, 1, &[555]),
    // GF(563): least primitive root 2
    (563, 1, &[561]),
    // GF(569): least primitive root 3
    (569, 1, &[566]),
    // GF(571): least primitive root 3
    (571, 1, &[568]),
    // GF(577): least primitive root 5
    (577, 1, &[572]),
    // GF(587): least primitive root 2
    (587, 1, &[585]),
    // GF(593): least primitive root 3
    (593, 1, &[590]),
    // GF(599): least primitive root 7
    (599, 1, &[592]),
    // GF(601): least primitive root 7
    (601, 1, &[594]),
    // GF(607): least primitive root 3
    (607, 1, &[604]),
    // GF(613): least primitive root 2
    (613, 1, &[611]),
    // GF(617): least primitive root 3
    (617, 1, &[614]),
    // GF(619): least primitive root 2
    (619, 1, &[617]),
    // GF(631): least primitive root 3
    (631, 1, &[628]),
    // GF(641): least primitive root 3
    (641, 1, &[638]),
    // GF(643): least primitive root 11
    (643, 1, &[632]),
    // GF(647): least primitive root 5
    (647, 1, &[642]),
    // GF(653): least primitive root 2
    (653, 1, &[651]),
    // GF(659): least primitive root 2
    (659, 1, &[657]),
    // GF(661): least primitive root 2
    (661, 1, &[659]),
    // GF(673): least primitive root 5
    (673, 1, &[668]),
    // GF(677): least primitive root 2
    (677, 1, &[675]),
    // GF(683): least primitive root 5
    (683, 1, &[678]),
    // GF(691): least primitive root 3
    (691, 1, &[688]),
    // GF(701): least primitive root 2
    (701, 1, &[699]),
    // GF(709): least primitive root 2
    (709, 1, &[707]),
    // GF(719): least primitive root 11
    (719, 1, &[708]),
    // GF(727): least primitive root 5
    (727, 1, &[722]),
    // GF(733): least primitive root 6
    (733, 1, &[727]),
    // GF(739): least primitive root 3
    (739, 1, &[736]),
    // GF(743): least primitive root 5
    (743, 1, &[738]),
    // GF(751): least primitive root 3
    (751, 1, &[748]),
    // GF(757): least primitive root 2
    (757, 1, &[755]),
    // GF(761): least primitive root 6
    (761, 1, &[755]),
    // GF(769): least primitive root 11
    (769, 1, &[758]),
    // GF(773): least primitive root 2
    (773, 1, &[771]),
    // GF(787): least primitive root 2
    (787, 1, &[785]),
    // GF(797): least primitive root 2
    (797, 1, &[795]),
    // GF(809): least primitive root 3
    (809, 1, &[806]),
    // GF(811): least primitive root 3
    (811, 1, &[808]),
    // GF(821): least primitive root 2
    (821, 1, &[819]),
    // GF(823): least primitive root 3
    (823, 1, &[820]),
    // GF(827): least primitive root 2
    (827, 1, &[825]),
    // GF(829): least primitive root 2
    (829, 1, &[827]),
    // GF(839): least primitive root 11
    (839, 1, &[828]),
    // GF(853): least primitive root 2
    (853, 1, &[851]),
    // GF(857): least primitive root 3
    (857, 1, &[854]),
    // GF(859): least primitive root 2
    (859, 1, &[857]),
    // GF(863): least primitive root 5
    (863, 1, &[858]),
    // GF(877): least primitive root 2
    (877, 1, &[875]),
    // GF(881): least primitive root 3
    (881, 1, &[878]),
    // GF(883): least primitive root 2
    (883, 1, &[881]),
    // GF(887): least primitive root 5
    (887, 1, &[882]),
    // GF(907): least primitive root 2
    (907, 1, &[905]),
    // GF(911): least primitive root 17
    (911, 1, &[894]),
    // GF(919): least primitive root 7
    (919, 1, &[912]),
    // GF(929): least primitive root 3
    (929, 1, &[926]),
    // GF(937): least primitive root 5
    (937, 1, &[932]),
    // GF(941): least primitive root 2
    (941, 1, &[939]),
    // GF(947): least primitive root 2
    (947, 1, &[945]),
    // GF(953): least primitive root 3
    (953, 1, &[950]),
    // GF(967): least primitive root 5
    (967, 1, &[962]),
    // GF(971): least primitive root 6
    (971, 1, &[965]),
    // GF(977): least primitive root 3
    (977, 1, &[974]),
    // GF(983): least primitive root 5
    (983, 1, &[978]),
    // GF(991): least primitive root 6
    (991, 1, &[985]),
    // GF(997): least primitive root 7
    (997, 1, &[990]),
    // GF(2^2) = GF(4): x^2 + x + 1
    (2, 2, &[1, 1]),
    // GF(2^3) = GF(8): x^3 + x + 1
    (2, 3, &[1, 1, 0]),
    // GF(3^2) = GF(9): x^2 + x + 2
    (3, 2, &[2, 1]),
    // GF(2^4) = GF(16): x^4 + x + 1
    (2, 4, &[1, 1, 0, 0]),
    // GF(5^2) = GF(25): x^2 + x + 2
    (5, 2, &[2, 1]),
    // GF(3^3) = GF(27): x^3 + 2x + 1
    (3, 3, &[1, 2, 0]),
    // GF(2^5) = GF(32): x^5 + x^2 + 1
    (2, 5, &[1, 0, 1, 0, 0]),
    // GF(7^2) = GF(49): x^2 + x + 3
    (7, 2, &[3, 1]),
    // GF(2^6) = GF(64): x^6 + x + 1
    (2, 6, &[1, 1, 0, 0, 0, 0]),
    // GF(3^4) = GF(81): x^4 + x + 2
    (3, 4, &[2, 1, 0, 0]),
    // GF(11^2) = GF(121): x^2 + x + 7
    (11, 2, &[7, 1]),
    // GF(5^3) = GF(125): x^3 + 3x + 2
    (5, 3, &[2, 3, 0]),
    // GF(2^7) = GF(128): x^7 + x + 1
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    // GF(13^2) = GF(169): x^2 + x + 2
    (13, 2, &[2, 1]),
    // GF(3^5) = GF(243): x^5 + 2x + 1
    (3, 5, &[1, 2, 0, 0, 0]),
    // GF(2^8) = GF(256): x^8 + x^4 + x^3 + x^2 + 1
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0]),
    // GF(17^2) = GF(289): x^2 + x + 3
    (17, 2, &[3, 1]),
    // GF(7^3) = GF(343): x^3 + 3x + 2
    (7, 3, &[2, 3, 0]),
    // GF(19^2) = GF(361): x^2 + x + 2
    (19, 2, &[2, 1]),
    // GF(2^9) = GF(512): x^9 + x^4 + 1
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0]),
    // GF(23^2) = GF(529): x^2 + x + 7
    (23, 2, &[7, 1]),
    // GF(5^4) = GF(625): x^4 + x^2 + 2x + 2
    (5, 4, &[2, 2, 1, 0]),
    // GF(3^6) = GF(729): x^6 + x + 2
    (3, 6, &[2, 1, 0, 0, 0, 0]),
    // GF(29^2) = GF(841): x^2 + x + 3
    (29, 2, &[3, 1]),
    // GF(31^2) = GF(961): x^2 + x + 12
    (31, 2, &[12, 1]),
    // GF(2^10) = GF(1024): x^10 + x^3 + 1
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    // GF(11^3) = GF(1331): x^3 + x + 4
    (11, 3, &[4, 1, 0]),
    // GF(37^2) = GF(1369): x^2 + x + 5
    (37, 2, &[5, 1]),
    // GF(41^2) = GF(1681): x^2 + x + 12
    (41, 2, &[12, 1]),
    // GF(43^2) = GF(1849): x^2 + x + 3
    (43, 2, &[3, 1]),
    // GF(2^11) = GF(2048): x^11 + x^2 + 1
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    // GF(3^7) = GF(2187): x^7 + x^2 + 2x + 1
    (3, 7, &[1, 2, 1, 0, 0, 0, 0]),
    // GF(13^3) = GF(2197): x^3 + x + 6
    (13, 3, &[6, 1, 0]),
    // GF(47^2) = GF(2209): x^2 + x + 13
    (47, 2, &[13, 1]),
    // GF(7^4) = GF(2401): x^4 + x^2 + 3x + 5
    (7, 4, &[5, 3, 1, 0]),
    // GF(53^2) = GF(2809): x^2 + x + 5
    (53, 2, &[5, 1]),
    // GF(5^5) = GF(3125): x^5 + 4x + 2
    (5, 5, &[2, 4, 0, 0, 0]),
    // GF(59^2) = GF(3481): x^2 + x + 2
    (59, 2, &[2, 1]),
    // GF(61^2) = GF(3721): x^2 + x + 2
    (61, 2, &[2, 1]),
    // GF(2^12) = GF(4096): x^12 + x^6 + x^4 + x + 1
    (2, 12, &[1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0]),
    // GF(67^2) = GF(4489): x^2 + x + 12
    (67, 2, &[12, 1]),
    // GF(17^3) = GF(4913): x^3 + x + 3
    (17, 3, &[3, 1, 0]),
    // GF(71^2) = GF(5041): x^2 + x + 11
    (71, 2, &[11, 1]),
    // GF(73^2) = GF(5329): x^2 + x + 11
    (73, 2, &[11, 1]),
    // GF(79^2) = GF(6241): x^2 + x + 3
    (79, 2, &[3, 1]),
    // GF(3^8) = GF(6561): x^8 + x^3 + 2
    (3, 8, &[2, 0, 0, 1, 0, 0, 0, 0]),
    // GF(19^3) = GF(6859): x^3 + x + 4
    (19, 3, &[4, 1, 0]),
    // GF(83^2) = GF(6889): x^2 + x + 2
    (83, 2, &[2, 1]),
    // GF(89^2) = GF(7921): x^2 + x + 6
    (89, 2, &[6, 1]),
    // GF(2^13) = GF(8192): x^13 + x^4 + x^3 + x + 1
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    // GF(97^2) = GF(9409): x^2 + x + 5
    (97, 2, &[5, 1]),
    // GF(101^2) = GF(10201): x^2 + x + 3
    (101, 2, &[3, 1]),
    // GF(103^2) = GF(10609): x^2 + x + 5
    (103, 2, &[5, 1]),
    // GF(107^2) = GF(11449): x^2 + x + 5
    (107, 2, &[5, 1]),
    // GF(109^2) = GF(11881): x^2 + x + 6
    (109, 2, &[6, 1]),
    // GF(23^3) = GF(12167): x^3 + x + 3
    (23, 3, &[3, 1, 0]),
    // GF(113^2) = GF(12769): x^2 + x + 10
    (113, 2, &[10, 1]),
    // GF(11^4) = GF(14641): x^4 + x + 2
    (11, 4, &[2, 1, 0, 0]),
    // GF(5^6) = GF(15625): x^6 + x + 2
    (5, 6, &[2, 1, 0, 0, 0, 0]),
    // GF(127^2) = GF(16129): x^2 + x + 3
    (127, 2, &[3, 1]),
    // GF(2^14) = GF(16384): x^14 + x^5 + x^3 + x + 1
    (2, 14, &[1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    // GF(7^5) = GF(16807): x^5 + x + 4
    (7, 5, &[4, 1, 0, 0, 0]),
    // GF(131^2) = GF(17161): x^2 + x + 14
    (131, 2, &[14, 1]),
    // GF(137^2) = GF(18769): x^2 + x + 6
    (137, 2, &[6, 1]),
    // GF(139^2) = GF(19321): x^2 + x + 2
    (139, 2, &[2, 1]),
    // GF(3^9) = GF(19683): x^9 + 2x^3 + x^2 + 1
    (3, 9, &[1, 0, 1, 2, 0, 0, 0, 0, 0]),
    // GF(149^2) = GF(22201): x^2 + x + 3
    (149, 2, &[3, 1]),
    // GF(151^2) = GF(22801): x^2 + x + 12
    (151, 2, &[12, 1]),
    // GF(29^3) = GF(24389): x^3 + x + 11
    (29, 3, &[11, 1, 0]),
    // GF(157^2) = GF(24649): x^2 + x + 6
    (157, 2, &[6, 1]),
    // GF(163^2) = GF(26569): x^2 + x + 11
    (163, 2, &[11, 1]),
    // GF(167^2) = GF(27889): x^2 + x + 5
    (167, 2, &[5, 1]),
    // GF(13^4) = GF(28561): x^4 + x^2 + x + 2
    (13, 4, &[2, 1, 1, 0]),
    // GF(31^3) = GF(29791): x^3 + x + 14
    (31, 3, &[14, 1, 0]),
    // GF(173^2) = GF(29929): x^2 + x + 5
    (173, 2, &[5, 1]),
    // GF(179^2) = GF(32041): x^2 + x + 7
    (179, 2, &[7, 1]),
    // GF(181^2) = GF(32761): x^2 + x + 18
    (181, 2, &[18, 1]),
    // GF(2^15) = GF(32768): x^15 + x + 1
    (2, 15, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    // GF(191^2) = GF(36481): x^2 + x + 19
    (191, 2, &[19, 1]),
    // GF(193^2) = GF(37249): x^2 + x + 5
    (193, 2, &[5, 1]),
    // GF(197^2) = GF(38809): x^2 + x + 3
    (197, 2, &[3, 1]),
    // GF(199^2) = GF(39601): x^2 + x + 6
    (199, 2, &[6, 1]),
    // GF(211^2) = GF(44521): x^2 + x + 3
    (211, 2, &[3, 1]),
    // GF(223^2) = GF(49729): x^2 + x + 5
    (223, 2, &[5, 1]),
    // GF(37^3) = GF(50653): x^3 + x + 13
    (37, 3, &[13, 1, 0]),
    // GF(227^2) = GF(51529): x^2 + x + 5
    (227, 2, &[5, 1]),
    // GF(229^2) = GF(52441): x^2 + x + 6
    (229, 2, &[6, 1]),
    // GF(233^2) = GF(54289): x^2 + x + 3
    (233, 2, &[3, 1]),
    // GF(239^2) = GF(57121): x^2 + x + 13
    (239, 2, &[13, 1]),
    // GF(241^2) = GF(58081): x^2 + x + 13
    (241, 2, &[13, 1]),
    // GF(3^10) = GF(59049): x^10 + x^3 + x + 2
    (3, 10, &[2, 1, 0, 1, 0, 0, 0, 0, 0, 0]),
    // GF(251^2) = GF(63001): x^2 + x + 19
    (251, 2, &[19, 1]),
    // GF(2^16) = GF(65536): x^16 + x^5 + x^3 + x^2 + 1
    (2, 16, &[1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
];
