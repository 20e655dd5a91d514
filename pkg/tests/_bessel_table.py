"""Frozen Bessel oracle table (50 abscissae per family).

Generated by scripts/gen_bessel_table.py from the extended-precision series
oracle in tests/oracles.py. Do not edit by hand; regenerate instead.
"""

# (x, (J0, J1, J2))
J_TABLE = [
    (1e-06, (0.99999999999975, 4.999999999999375e-07, 1.2499999999998957e-13)),
    (1.5102394620676751e-06, (0.9999999999994298, 7.551197310336223e-07, 2.851029040982534e-13)),
    (2.2808232327864653e-06, (0.9999999999986995, 1.140411616392491e-06, 6.502693274020308e-13)),
    (3.444589252154887e-06, (0.9999999999970337, 1.7222946260748891e-06, 1.4831493895061542e-12)),
    (5.202154619218503e-06, (0.9999999999932344, 2.6010773096004525e-06, 3.382801585274422e-12)),
    (7.856499193721423e-06, (0.9999999999845689, 3.928249596830403e-06, 7.715572447578484e-12)),
    (1.1865195116060963e-05, (0.9999999999648043, 5.932597557926081e-06, 1.759785689256816e-11)),
    (1.791928588940795e-05, (0.9999999999197248, 8.959642944344358e-06, 4.013760084721784e-11)),
    (2.7062412682256402e-05, (0.9999999998169065, 1.3531206339889463e-05, 9.154677251750682e-11)),
    (4.0870723571504335e-05, (0.9999999995823959, 2.0435361781485222e-05, 2.088020056282245e-10)),
    (6.172457958094536e-05, (0.999999999047519, 3.086228977577481e-05, 4.762404654043538e-10)),
    (9.321889586268051e-05, (0.9999999978275593, 4.6609447880712126e-05, 1.086220317445576e-09)),
    (0.00014078285514219726, (0.9999999950450469, 7.039142739670552e-05, 2.4774765336566855e-09)),
    (0.0002126158234183036, (0.9999999886986279, 0.00010630791110843917, 5.650686024693573e-09)),
    (0.00032110080678633495, (0.9999999742235681, 0.0001605504013239592, 1.2888215904116994e-08)),
    (0.0004849391097104915, (0.9999999412085159, 0.0002424695477276732, 2.9395741939777398e-08)),
    (0.0007323741801847507, (0.9999998659070195, 0.00036618706554081596, 6.704648947833934e-08)),
    (0.0011060603879144736, (0.9999996941576279, 0.0005530301093872015, 1.529211821242616e-07)),
    (0.0016704160452583204, (0.9999993024276805, 0.0008352077313201444, 3.4878613943084454e-07)),
    (0.0025227282296201416, (0.9999984089612027, 0.0012613631113703157, 7.955192931643026e-07)),
    (0.0038099237244444647, (0.9999963711235956, 0.0019049584057856106, 1.8144376534669513e-06)),
    (0.005753897156123882, (0.9999917231840056, 0.002876936672066726, 4.13840514275704e-06)),
    (0.008689762545857266, (0.9999811220958186, 0.00434484026173794, 9.438937241624776e-06)),
    (0.013123622312751321, (0.99995694309783, 0.006561669890238273, 2.1528373838174922e-05)),
    (0.01981981230198889, (0.9999017961711686, 0.009909419551648493, 4.910151256956428e-05)),
    (0.029932662669238056, (0.9997760214690705, 0.014964655234880213, 0.00011198717504274614)),
    (0.045205488367843265, (0.9994891812022791, 0.022596970984830746, 0.0002553985246819204)),
    (0.0682711124351583, (0.9988351032016212, 0.03411567208669569, 0.0005823918362005829)),
    (0.10310572811883523, (0.9973440675252953, 0.0514843884308808, 0.0013276720611244855)),
    (0.15571433937028598, (0.9939474411133695, 0.07762143305185676, 0.0030247499611384203)),
    (0.2351659401268041, (0.9862219596772626, 0.11677200426105211, 0.006881073849508639)),
    (0.3551568829137445, (0.9687136277135774, 0.1747932297562472, 0.015601970070844748)),
    (0.5, (0.9384698072408129, 0.2422684576748739, 0.03060402345868264)),
    (0.5363719398012857, (0.9293592519692204, 0.2586564248607211, 0.035107401362972086)),
    (0.8100500698336891, (0.8425610558070925, 0.372699794422675, 0.07762846901868461)),
    (1.0, (0.7651976865579666, 0.4400505857449335, 0.11490348493190047)),
    (1.2233695817135157, (0.6594188409682481, 0.5041689737991455, 0.1648111894907076)),
    (1.8475810189969768, (0.31230546847540314, 0.5818568318069388, 0.3175525196985823)),
    (2.0, (0.22389077914123567, 0.5767248077568734, 0.35283402861563773)),
    (2.790289764256447, (-0.1810420748024015, 0.4129155205002638, 0.47700812520311825)),
    (4.214005712583597, (-0.37458160792140616, -0.1434375790652057, 0.30650501341804254)),
    (5.0, (-0.1775967713143383, -0.32757913759146523, 0.046565116277752214)),
    (6.364157720522374, (0.2366268388525832, -0.19128686715360277, -0.2967406435550543)),
    (9.61140213235555, (-0.21055504127694916, 0.13696889115408395, 0.23905637526920734)),
    (10.0, (-0.24593576445134835, 0.04347274616886144, 0.2546303136851206)),
    (14.515518786084781, (0.08453426530414736, 0.19455719922231376, -0.057727479809325785)),
    (21.921909283129914, (-0.11112588802081926, 0.12666620375028212, 0.12268201683371956)),
    (25.0, (0.09626678327595811, -0.1253502495802899, -0.1062948032423813)),
    (33.107332483250495, (0.08594998212872007, 0.11011904815076799, -0.07929773684701524)),
    (49.99999999999999, (0.05581232766925112, -0.09751182812517555, -0.05971280079425814)),
]

# (x, (K0, K1, K2))
K_TABLE = [
    (1e-06, (13.93144207362642, 999999.9999927843, 1999999999999.5002)),
    (1.5597220403946627e-06, (13.486934447480047, 641139.8788273536, 822120688472.9812)),
    (2.43273284329289e-06, (13.042426821340564, 411060.344220268, 337941213207.55536)),
    (3.794387034075895e-06, (12.597919195217282, 263547.17927430867, 138914231432.58502)),
    (5.918189086835895e-06, (12.153411569132064, 168970.6065665854, 57102131791.76641)),
    (9.230729957961108e-06, (11.70890394313616, 108333.79418898554, 23472421950.680763)),
    (1.4397372964363238e-05, (11.264396317349545, 69457.11563185444, 9648581846.82239)),
    (2.245589993629958e-05, (10.819888692052638, 44531.72662786012, 3966149375.056709)),
    (3.5024962067543485e-05, (10.375381067899776, 28551.065705678302, 1630326727.1106813)),
    (5.462920530073459e-05, (9.930873446415033, 18305.226644434897, 670162665.3700054)),
    (8.520637555680068e-05, (9.486365831141281, 11736.210550139362, 275477295.62713623)),
    (0.00013289826193808705, (9.041858230296441, 7524.552248862105, 113237791.67542718)),
    (0.00020728434827497748, (8.59735066289716, 4824.289980791999, 46547565.33223963)),
    (0.00032330596663332543, (8.152843172833077, 3093.043899518772, 19133857.9343829)),
    (0.000504267441949099, (7.708335861103591, 1983.0726181801604, 7865169.93461472)),
    (0.0007865170434614451, (7.263828959370671, 1271.425211857784, 3233059.166333877)),
    (0.0012267479678328627, (6.819322997044159, 815.1588743239059, 1328982.1193822944)),
    (0.0019133858434382787, (6.374819178930455, 522.6271632158173, 546291.5530106063)),
    (0.0029843500717898113, (5.930320233827803, 335.07173778277416, 224558.49937043295)),
    (0.0046547565832239625, (5.485832308347239, 214.82007394204535, 92306.7995964998)),
    (0.00726012643552656, (5.0413691591186875, 137.71853268172038, 37943.370378916086)),
    (0.011323779217542716, (4.596961342012849, 88.28088218359808, 15596.720489648533)),
    (0.0176619480261644, (4.1526761126739915, 56.577810114002695, 6410.898979542891)),
    (0.027547729612713623, (3.7086598734427683, 36.242668490391665, 2634.9722158846225)),
    (0.04296680103978216, (3.2652269493140684, 23.192912937570146, 1082.8388687522613)),
    (0.06701626658700041, (2.8230404561362414, 14.810468639375896, 444.81927192775873)),
    (0.10452674806070894, (2.3834676352266277, 9.416452717350925, 182.5565408830783)),
    (0.16303267276106778, (1.9492419003355432, 5.9348143868363525, 74.75445678550287)),
    (0.254285653009888, (1.5255984146464285, 3.6773580497827068, 30.448646225288826)),
    (0.3966149375556717, (1.1219611932943911, 2.206799080106234, 12.250130463502334)),
    (0.5, (0.9244190712276659, 1.656441120003301, 7.5501835512408695)),
    (0.6186090596553327, (0.7537778269963954, 1.2496118284902193, 4.793847428261075)),
    (0.9648581847322392, (0.4428247149562602, 0.6392785285953685, 1.7679490466170351)),
    (1.0, (0.42102443824070834, 0.6019072301972346, 1.6248388986351774)),
    (1.5049105765820583, (0.21244822293930898, 0.275437811529499, 0.578500287182317)),
    (2.0, (0.11389387274953344, 0.13986588181652243, 0.2537597545660559)),
    (2.3472421951180764, (0.07478429756105873, 0.08947285152435533, 0.15102087145227958)),
    (3.661045385870013, (0.016333071178192493, 0.018441354554328042, 0.026407436617912727)),
    (5.0, (0.0036910983340425942, 0.004044613445452165, 0.00530894371222346)),
    (5.7102131792266295, (0.0017022536995598965, 0.0018456913276972673, 0.0023487063869698055)),
    (8.906345350991852, (5.6162462410306106e-05, 5.923541850142068e-05, 6.946430871583343e-05)),
    (10.0, (1.778006231616765e-05, 1.8648773453825585e-05, 2.150981700693277e-05)),
    (13.891423143308531, (3.089878211028481e-07, 3.1992219549121525e-07, 3.5504821278349766e-07)),
    (21.66675884906682, (1.0422186573083775e-10, 1.0660042071927009e-10, 1.1406186270148399e-10)),
    (25.0, (3.4641615622131143e-12, 3.5327780731999337e-12, 3.746783808069109e-12)),
    (33.794121320805615, (4.523302341727853e-16, 4.589745660637083e-16, 4.794932168529201e-16)),
    (52.70943585983159, (2.2114558464914962e-24, 2.232335981415595e-24, 2.2961593135273404e-24)),
    (82.21206884734814, (2.7270176143952835e-37, 2.743553045382541e-37, 2.7937609304034667e-37)),
    (128.2279757676523, (2.2643550218432732e-57, 2.2731673512842e-57, 2.2998101140363082e-57)),
    (200.00000000000003, (1.2256819797764985e-88, 1.2287423734729508e-88, 1.2379694035112281e-88)),
]
