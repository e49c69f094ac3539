// Generated tables; node and weight values are exact to double precision.

// Gauss-Legendre nodes on [-1, 1] with weights.
const GL1: [(f64, f64); 1] = [
    (0.0, 2.0),
];
const GL2: [(f64, f64); 2] = [
    (-0.5773502691896257, 1.0),
    (0.5773502691896257, 1.0),
];
const GL3: [(f64, f64); 3] = [
    (-0.7745966692414834, 0.5555555555555556),
    (0.0, 0.8888888888888888),
    (0.7745966692414834, 0.5555555555555556),
];
const GL4: [(f64, f64); 4] = [
    (-0.8611363115940526, 0.34785484513745385),
    (-0.33998104358485626, 0.6521451548625461),
    (0.33998104358485626, 0.6521451548625461),
    (0.8611363115940526, 0.34785484513745385),
];
const GL5: [(f64, f64); 5] = [
    (-0.906179845938664, 0.23692688505618908),
    (-0.5384693101056831, 0.47862867049936647),
    (0.0, 0.5688888888888889),
    (0.5384693101056831, 0.47862867049936647),
    (0.906179845938664, 0.23692688505618908),
];
const GL6: [(f64, f64); 6] = [
    (-0.932469514203152, 0.17132449237917036),
    (-0.6612093864662645, 0.3607615730481386),
    (-0.2386191860831969, 0.46791393457269104),
    (0.2386191860831969, 0.46791393457269104),
    (0.6612093864662645, 0.3607615730481386),
    (0.932469514203152, 0.17132449237917036),
];
const GL7: [(f64, f64); 7] = [
    (-0.9491079123427585, 0.1294849661688697),
    (-0.7415311855993945, 0.27970539148927664),
    (-0.4058451513773972, 0.3818300505051189),
    (0.0, 0.4179591836734694),
    (0.4058451513773972, 0.3818300505051189),
    (0.7415311855993945, 0.27970539148927664),
    (0.9491079123427585, 0.1294849661688697),
];
const GL8: [(f64, f64); 8] = [
    (-0.9602898564975363, 0.10122853629037626),
    (-0.7966664774136267, 0.22238103445337448),
    (-0.525532409916329, 0.31370664587788727),
    (-0.1834346424956498, 0.362683783378362),
    (0.1834346424956498, 0.362683783378362),
    (0.525532409916329, 0.31370664587788727),
    (0.7966664774136267, 0.22238103445337448),
    (0.9602898564975363, 0.10122853629037626),
];
const GL9: [(f64, f64); 9] = [
    (-0.9681602395076261, 0.08127438836157441),
    (-0.8360311073266358, 0.1806481606948574),
    (-0.6133714327005904, 0.26061069640293544),
    (-0.3242534234038089, 0.31234707704000286),
    (4.118046071574423e-84, 0.3302393550012598),
    (0.3242534234038089, 0.31234707704000286),
    (0.6133714327005904, 0.26061069640293544),
    (0.8360311073266358, 0.1806481606948574),
    (0.9681602395076261, 0.08127438836157441),
];
const GL10: [(f64, f64); 10] = [
    (-0.9739065285171717, 0.06667134430868814),
    (-0.8650633666889845, 0.1494513491505806),
    (-0.6794095682990244, 0.21908636251598204),
    (-0.4333953941292472, 0.26926671930999635),
    (-0.14887433898163122, 0.29552422471475287),
    (0.14887433898163122, 0.29552422471475287),
    (0.4333953941292472, 0.26926671930999635),
    (0.6794095682990244, 0.21908636251598204),
    (0.8650633666889845, 0.1494513491505806),
    (0.9739065285171717, 0.06667134430868814),
];
const GL11: [(f64, f64); 11] = [
    (-0.978228658146057, 0.05566856711617366),
    (-0.8870625997680953, 0.1255803694649046),
    (-0.7301520055740494, 0.18629021092773426),
    (-0.5190961292068118, 0.23319376459199048),
    (-0.26954315595234496, 0.26280454451024665),
    (0.0, 0.2729250867779006),
    (0.26954315595234496, 0.26280454451024665),
    (0.5190961292068118, 0.23319376459199048),
    (0.7301520055740494, 0.18629021092773426),
    (0.8870625997680953, 0.1255803694649046),
    (0.978228658146057, 0.05566856711617366),
];
const GL12: [(f64, f64); 12] = [
    (-0.9815606342467192, 0.04717533638651183),
    (-0.9041172563704749, 0.10693932599531843),
    (-0.7699026741943047, 0.16007832854334622),
    (-0.5873179542866175, 0.20316742672306592),
    (-0.3678314989981802, 0.2334925365383548),
    (-0.1252334085114689, 0.24914704581340277),
    (0.1252334085114689, 0.24914704581340277),
    (0.3678314989981802, 0.2334925365383548),
    (0.5873179542866175, 0.20316742672306592),
    (0.7699026741943047, 0.16007832854334622),
    (0.9041172563704749, 0.10693932599531843),
    (0.9815606342467192, 0.04717533638651183),
];
const GL13: [(f64, f64); 13] = [
    (-0.9841830547185881, 0.04048400476531588),
    (-0.9175983992229779, 0.09212149983772845),
    (-0.8015780907333099, 0.13887351021978725),
    (-0.6423493394403402, 0.17814598076194574),
    (-0.44849275103644687, 0.2078160475368885),
    (-0.2304583159551348, 0.22628318026289723),
    (0.0, 0.2325515532308739),
    (0.2304583159551348, 0.22628318026289723),
    (0.44849275103644687, 0.2078160475368885),
    (0.6423493394403402, 0.17814598076194574),
    (0.8015780907333099, 0.13887351021978725),
    (0.9175983992229779, 0.09212149983772845),
    (0.9841830547185881, 0.04048400476531588),
];
const GL14: [(f64, f64); 14] = [
    (-0.9862838086968123, 0.03511946033175186),
    (-0.9284348836635735, 0.08015808715976021),
    (-0.827201315069765, 0.12151857068790319),
    (-0.6872929048116855, 0.15720316715819355),
    (-0.5152486363581541, 0.18553839747793782),
    (-0.31911236892788974, 0.2051984637212956),
    (-0.10805494870734367, 0.2152638534631578),
    (0.10805494870734367, 0.2152638534631578),
    (0.31911236892788974, 0.2051984637212956),
    (0.5152486363581541, 0.18553839747793782),
    (0.6872929048116855, 0.15720316715819355),
    (0.827201315069765, 0.12151857068790319),
    (0.9284348836635735, 0.08015808715976021),
    (0.9862838086968123, 0.03511946033175186),
];
const GL15: [(f64, f64); 15] = [
    (-0.9879925180204854, 0.03075324199611727),
    (-0.937273392400706, 0.07036604748810812),
    (-0.8482065834104272, 0.10715922046717194),
    (-0.7244177313601701, 0.13957067792615432),
    (-0.5709721726085388, 0.16626920581699392),
    (-0.3941513470775634, 0.1861610000155622),
    (-0.20119409399743451, 0.19843148532711158),
    (0.0, 0.2025782419255613),
    (0.20119409399743451, 0.19843148532711158),
    (0.3941513470775634, 0.1861610000155622),
    (0.5709721726085388, 0.16626920581699392),
    (0.7244177313601701, 0.13957067792615432),
    (0.8482065834104272, 0.10715922046717194),
    (0.937273392400706, 0.07036604748810812),
    (0.9879925180204854, 0.03075324199611727),
];
const GL16: [(f64, f64); 16] = [
    (-0.9894009349916499, 0.027152459411754096),
    (-0.9445750230732326, 0.062253523938647894),
    (-0.8656312023878318, 0.09515851168249279),
    (-0.755404408355003, 0.12462897125553388),
    (-0.6178762444026438, 0.14959598881657674),
    (-0.45801677765722737, 0.16915651939500254),
    (-0.2816035507792589, 0.18260341504492358),
    (-0.09501250983763744, 0.1894506104550685),
    (0.09501250983763744, 0.1894506104550685),
    (0.2816035507792589, 0.18260341504492358),
    (0.45801677765722737, 0.16915651939500254),
    (0.6178762444026438, 0.14959598881657674),
    (0.755404408355003, 0.12462897125553388),
    (0.8656312023878318, 0.09515851168249279),
    (0.9445750230732326, 0.062253523938647894),
    (0.9894009349916499, 0.027152459411754096),
];

pub(super) static GAUSS_LEGENDRE: [&[(f64, f64)]; 16] = [&GL1, &GL2, &GL3, &GL4, &GL5, &GL6, &GL7, &GL8, &GL9, &GL10, &GL11, &GL12, &GL13, &GL14, &GL15, &GL16];

// Symmetric rules on the reference triangle (0,0), (1,0), (0,1); weights sum to 1/2.
const T1: [(f64, f64, f64); 1] = [
    (0.3333333333333333, 0.3333333333333333, 0.5),
];
const T2: [(f64, f64, f64); 3] = [
    (0.16666666666666666, 0.16666666666666666, 0.16666666666666666),
    (0.16666666666666666, 0.6666666666666666, 0.16666666666666666),
    (0.6666666666666666, 0.16666666666666666, 0.16666666666666666),
];
const T4: [(f64, f64, f64); 6] = [
    (0.4459484909159649, 0.4459484909159649, 0.11169079483900574),
    (0.4459484909159649, 0.10810301816807023, 0.11169079483900574),
    (0.10810301816807023, 0.4459484909159649, 0.11169079483900574),
    (0.09157621350977074, 0.09157621350977074, 0.054975871827660935),
    (0.09157621350977074, 0.8168475729804585, 0.054975871827660935),
    (0.8168475729804585, 0.09157621350977074, 0.054975871827660935),
];
const T5: [(f64, f64, f64); 7] = [
    (0.3333333333333333, 0.3333333333333333, 0.1125),
    (0.10128650732345634, 0.10128650732345634, 0.06296959027241357),
    (0.10128650732345634, 0.7974269853530873, 0.06296959027241357),
    (0.7974269853530873, 0.10128650732345634, 0.06296959027241357),
    (0.4701420641051151, 0.4701420641051151, 0.0661970763942531),
    (0.4701420641051151, 0.05971587178976982, 0.0661970763942531),
    (0.05971587178976982, 0.4701420641051151, 0.0661970763942531),
];
const T6: [(f64, f64, f64); 12] = [
    (0.06308901449150223, 0.06308901449150223, 0.02542245318510341),
    (0.06308901449150223, 0.8738219710169955, 0.02542245318510341),
    (0.8738219710169955, 0.06308901449150223, 0.02542245318510341),
    (0.24928674517091043, 0.24928674517091043, 0.058393137863189684),
    (0.24928674517091043, 0.5014265096581791, 0.058393137863189684),
    (0.5014265096581791, 0.24928674517091043, 0.058393137863189684),
    (0.6365024991213987, 0.053145049844816945, 0.041425537809186785),
    (0.053145049844816945, 0.6365024991213987, 0.041425537809186785),
    (0.6365024991213987, 0.3103524510337844, 0.041425537809186785),
    (0.3103524510337844, 0.6365024991213987, 0.041425537809186785),
    (0.053145049844816945, 0.3103524510337844, 0.041425537809186785),
    (0.3103524510337844, 0.053145049844816945, 0.041425537809186785),
];
const T7: [(f64, f64, f64); 15] = [
    (0.40826735403063613, 0.40826735403063613, 0.026565454548509886),
    (0.40826735403063613, 0.1834652919387278, 0.026565454548509886),
    (0.1834652919387278, 0.40826735403063613, 0.026565454548509886),
    (0.22457733512242642, 0.22457733512242642, 0.0467429446927481),
    (0.22457733512242642, 0.5508453297551472, 0.0467429446927481),
    (0.5508453297551472, 0.22457733512242642, 0.0467429446927481),
    (0.06406935558047623, 0.06406935558047623, 0.025873293689138713),
    (0.06406935558047623, 0.8718612888390476, 0.025873293689138713),
    (0.8718612888390476, 0.06406935558047623, 0.025873293689138713),
    (0.042177833456464676, 0.6451286142430063, 0.03374248686813498),
    (0.6451286142430063, 0.042177833456464676, 0.03374248686813498),
    (0.042177833456464676, 0.31269355230052903, 0.03374248686813498),
    (0.31269355230052903, 0.042177833456464676, 0.03374248686813498),
    (0.6451286142430063, 0.31269355230052903, 0.03374248686813498),
    (0.31269355230052903, 0.6451286142430063, 0.03374248686813498),
];
const T8: [(f64, f64, f64); 16] = [
    (0.3333333333333333, 0.3333333333333333, 0.07215780383889359),
    (0.05054722831703098, 0.05054722831703098, 0.01622924881159904),
    (0.05054722831703098, 0.8989055433659381, 0.01622924881159904),
    (0.8989055433659381, 0.05054722831703098, 0.01622924881159904),
    (0.1705693077517602, 0.1705693077517602, 0.05160868526735912),
    (0.1705693077517602, 0.6588613844964796, 0.05160868526735912),
    (0.6588613844964796, 0.1705693077517602, 0.05160868526735912),
    (0.4592925882927232, 0.4592925882927232, 0.04754581713364231),
    (0.4592925882927232, 0.0814148234145537, 0.04754581713364231),
    (0.0814148234145537, 0.4592925882927232, 0.04754581713364231),
    (0.7284923929554042, 0.008394777409957605, 0.013615157087217496),
    (0.008394777409957605, 0.7284923929554042, 0.013615157087217496),
    (0.7284923929554042, 0.2631128296346381, 0.013615157087217496),
    (0.2631128296346381, 0.7284923929554042, 0.013615157087217496),
    (0.008394777409957605, 0.2631128296346381, 0.013615157087217496),
    (0.2631128296346381, 0.008394777409957605, 0.013615157087217496),
];
const T9: [(f64, f64, f64); 19] = [
    (0.3333333333333333, 0.3333333333333333, 0.04856789814139942),
    (0.18820353561903272, 0.18820353561903272, 0.039823869463605124),
    (0.18820353561903272, 0.6235929287619345, 0.039823869463605124),
    (0.6235929287619345, 0.18820353561903272, 0.039823869463605124),
    (0.4896825191987376, 0.4896825191987376, 0.015667350113569536),
    (0.4896825191987376, 0.020634961602524746, 0.015667350113569536),
    (0.020634961602524746, 0.4896825191987376, 0.015667350113569536),
    (0.43708959149293664, 0.43708959149293664, 0.03891377050238714),
    (0.43708959149293664, 0.12582081701412673, 0.03891377050238714),
    (0.12582081701412673, 0.43708959149293664, 0.03891377050238714),
    (0.04472951339445271, 0.04472951339445271, 0.012788837829349016),
    (0.04472951339445271, 0.9105409732110946, 0.012788837829349016),
    (0.9105409732110946, 0.04472951339445271, 0.012788837829349016),
    (0.741198598784498, 0.2219629891607657, 0.021641769688644688),
    (0.2219629891607657, 0.741198598784498, 0.021641769688644688),
    (0.741198598784498, 0.036838412054736286, 0.021641769688644688),
    (0.036838412054736286, 0.741198598784498, 0.021641769688644688),
    (0.2219629891607657, 0.036838412054736286, 0.021641769688644688),
    (0.036838412054736286, 0.2219629891607657, 0.021641769688644688),
];
const T10: [(f64, f64, f64); 36] = [
    (0.03277536661445988, 0.02931642715978494, 0.006194265352658861),
    (0.16442924159482744, 0.02931642715978494, 0.013043394330082867),
    (0.36952992437237664, 0.02931642715978494, 0.016917505680012716),
    (0.6011536484678384, 0.02931642715978494, 0.016917505680012716),
    (0.8062543312453876, 0.02931642715978494, 0.013043394330082867),
    (0.9379082062257551, 0.02931642715978494, 0.006194265352658861),
    (0.028765333012559118, 0.1480785996684843, 0.011610874766997507),
    (0.14431148695041665, 0.1480785996684843, 0.02444926225805782),
    (0.324318304588776, 0.1480785996684843, 0.03171111159070401),
    (0.5276030957427397, 0.1480785996684843, 0.03171111159070401),
    (0.707609913381099, 0.1480785996684843, 0.02444926225805782),
    (0.8231560673189565, 0.1480785996684843, 0.011610874766997507),
    (0.022386872978030627, 0.3369846902811543, 0.012060606404265088),
    (0.1123116817809537, 0.3369846902811543, 0.025396271589047635),
    (0.252403568076518, 0.3369846902811543, 0.03293939890078668),
    (0.4106117416423277, 0.3369846902811543, 0.03293939890078668),
    (0.550703627937892, 0.3369846902811543, 0.025396271589047635),
    (0.640628436740815, 0.3369846902811543, 0.012060606404265088),
    (0.014901563366671153, 0.5586715187715502, 0.008451535796943108),
    (0.07475897346264909, 0.5586715187715502, 0.017796575997026262),
    (0.16800951912119183, 0.5586715187715502, 0.02308246365135823),
    (0.273318962107258, 0.5586715187715502, 0.02308246365135823),
    (0.3665695077658007, 0.5586715187715502, 0.017796575997026262),
    (0.42642691786177866, 0.5586715187715502, 0.008451535796943108),
    (0.007791874701286429, 0.7692338620300545, 0.003765298212691668),
    (0.039090700732824245, 0.7692338620300545, 0.00792866733379648),
    (0.08785045497599718, 0.7692338620300545, 0.01028361722876633),
    (0.1429156829939483, 0.7692338620300545, 0.01028361722876633),
    (0.19167543723712124, 0.7692338620300545, 0.00792866733379648),
    (0.22297426326865907, 0.7692338620300545, 0.003765298212691668),
    (0.002466697152670245, 0.926945671319741, 0.0007485425612363173),
    (0.012375060417440052, 0.926945671319741, 0.0015762217540235878),
    (0.027811082115360607, 0.926945671319741, 0.002044386591544859),
    (0.04524324656489836, 0.926945671319741, 0.002044386591544859),
    (0.06067926826281891, 0.926945671319741, 0.0015762217540235878),
    (0.07058763152758872, 0.926945671319741, 0.0007485425612363173),
];
const T11: [(f64, f64, f64); 36] = [
    (0.03277536661445988, 0.02931642715978494, 0.006194265352658861),
    (0.16442924159482744, 0.02931642715978494, 0.013043394330082867),
    (0.36952992437237664, 0.02931642715978494, 0.016917505680012716),
    (0.6011536484678384, 0.02931642715978494, 0.016917505680012716),
    (0.8062543312453876, 0.02931642715978494, 0.013043394330082867),
    (0.9379082062257551, 0.02931642715978494, 0.006194265352658861),
    (0.028765333012559118, 0.1480785996684843, 0.011610874766997507),
    (0.14431148695041665, 0.1480785996684843, 0.02444926225805782),
    (0.324318304588776, 0.1480785996684843, 0.03171111159070401),
    (0.5276030957427397, 0.1480785996684843, 0.03171111159070401),
    (0.707609913381099, 0.1480785996684843, 0.02444926225805782),
    (0.8231560673189565, 0.1480785996684843, 0.011610874766997507),
    (0.022386872978030627, 0.3369846902811543, 0.012060606404265088),
    (0.1123116817809537, 0.3369846902811543, 0.025396271589047635),
    (0.252403568076518, 0.3369846902811543, 0.03293939890078668),
    (0.4106117416423277, 0.3369846902811543, 0.03293939890078668),
    (0.550703627937892, 0.3369846902811543, 0.025396271589047635),
    (0.640628436740815, 0.3369846902811543, 0.012060606404265088),
    (0.014901563366671153, 0.5586715187715502, 0.008451535796943108),
    (0.07475897346264909, 0.5586715187715502, 0.017796575997026262),
    (0.16800951912119183, 0.5586715187715502, 0.02308246365135823),
    (0.273318962107258, 0.5586715187715502, 0.02308246365135823),
    (0.3665695077658007, 0.5586715187715502, 0.017796575997026262),
    (0.42642691786177866, 0.5586715187715502, 0.008451535796943108),
    (0.007791874701286429, 0.7692338620300545, 0.003765298212691668),
    (0.039090700732824245, 0.7692338620300545, 0.00792866733379648),
    (0.08785045497599718, 0.7692338620300545, 0.01028361722876633),
    (0.1429156829939483, 0.7692338620300545, 0.01028361722876633),
    (0.19167543723712124, 0.7692338620300545, 0.00792866733379648),
    (0.22297426326865907, 0.7692338620300545, 0.003765298212691668),
    (0.002466697152670245, 0.926945671319741, 0.0007485425612363173),
    (0.012375060417440052, 0.926945671319741, 0.0015762217540235878),
    (0.027811082115360607, 0.926945671319741, 0.002044386591544859),
    (0.04524324656489836, 0.926945671319741, 0.002044386591544859),
    (0.06067926826281891, 0.926945671319741, 0.0015762217540235878),
    (0.07058763152758872, 0.926945671319741, 0.0007485425612363173),
];
const T12: [(f64, f64, f64); 49] = [
    (0.02487403237606083, 0.0224793864387125, 0.0036234660797257816),
    (0.12632929701966925, 0.0224793864387125, 0.007827186648495067),
    (0.2903993060879903, 0.0224793864387125, 0.010685010601314927),
    (0.48876030678064375, 0.0224793864387125, 0.011696036764419309),
    (0.6871213074732971, 0.0224793864387125, 0.010685010601314927),
    (0.8511913165416183, 0.0224793864387125, 0.007827186648495067),
    (0.9526465811852267, 0.0224793864387125, 0.0036234660797257816),
    (0.02252791561566371, 0.11467905316090415, 0.007154643779096141),
    (0.11441392774676132, 0.11467905316090415, 0.015455017662734034),
    (0.2630088665758012, 0.11467905316090415, 0.02109787781815239),
    (0.44266047341954795, 0.11467905316090415, 0.023094179670909248),
    (0.6223120802632947, 0.11467905316090415, 0.02109787781815239),
    (0.7709070190923346, 0.11467905316090415, 0.015455017662734034),
    (0.8627930312234322, 0.11467905316090415, 0.007154643779096141),
    (0.01868274434884279, 0.2657898227845895, 0.008247603013529602),
    (0.09488521701286282, 0.2657898227845895, 0.017815960400675818),
    (0.2181172683502983, 0.2657898227845895, 0.02432083637489714),
    (0.36710508860770524, 0.2657898227845895, 0.02662209772138338),
    (0.5160929088651122, 0.2657898227845895, 0.02432083637489714),
    (0.6393249602025477, 0.2657898227845895, 0.017815960400675818),
    (0.7155274328665677, 0.2657898227845895, 0.008247603013529602),
    (0.013922895156596128, 0.45284637366944464, 0.0069355427537340945),
    (0.0707110745463253, 0.45284637366944464, 0.01498172921938943),
    (0.16254699001286968, 0.45284637366944464, 0.02045178462250983),
    (0.2735768131652777, 0.45284637366944464, 0.022386952504607083),
    (0.3846066363176857, 0.45284637366944464, 0.02045178462250983),
    (0.4764425517842301, 0.45284637366944464, 0.01498172921938943),
    (0.5332307311739592, 0.45284637366944464, 0.0069355427537340945),
    (0.008972904006716732, 0.6473752828868303, 0.004297910087982438),
    (0.04557124628029494, 0.6473752828868303, 0.009284078756888558),
    (0.10475684270848173, 0.6473752828868303, 0.012673836002092813),
    (0.17631235855658484, 0.6473752828868303, 0.013873046771563943),
    (0.2478678744046879, 0.6473752828868303, 0.012673836002092813),
    (0.3070534708328747, 0.6473752828868303, 0.009284078756888558),
    (0.34365181310645293, 0.6473752828868303, 0.004297910087982438),
    (0.004586412541637897, 0.8197593082631076, 0.0017744850714380535),
    (0.0232932989499898, 0.8197593082631076, 0.0038331325734846846),
    (0.05354544045728326, 0.8197593082631076, 0.005232667115687632),
    (0.0901203458684462, 0.8197593082631076, 0.005727787200652742),
    (0.12669525127960912, 0.8197593082631076, 0.005232667115687632),
    (0.1569473927869026, 0.8197593082631076, 0.0038331325734846846),
    (0.1756542791952545, 0.8197593082631076, 0.0017744850714380535),
    (0.0014316595813329523, 0.9437374394630779, 0.0003375907567113745),
    (0.0072710586585602805, 0.9437374394630779, 0.000729242610651564),
    (0.0167143365694675, 0.9437374394630779, 0.0009955000916249642),
    (0.028131280268461067, 0.9437374394630779, 0.0010896952848315847),
    (0.03954822396745463, 0.9437374394630779, 0.0009955000916249642),
    (0.048991501878361855, 0.9437374394630779, 0.000729242610651564),
    (0.05483090095558918, 0.9437374394630779, 0.0003375907567113745),
];

pub(super) type Table = &'static [(f64, f64, f64)];

pub(super) static TRIANGLE: [(usize, Table); 12] = [
    (1, &T1),
    (2, &T2),
    (4, &T4),
    (4, &T4),
    (5, &T5),
    (6, &T6),
    (7, &T7),
    (8, &T8),
    (9, &T9),
    (10, &T10),
    (11, &T11),
    (12, &T12),
];
