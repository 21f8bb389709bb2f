"""Maclaurin coefficient tables for the turning-point (Airy-type) expansions.

Generated by tools/gen_uniform_tables.py; do not edit by hand.
All series are in eta = 2**(-1/3) * zeta except ZETA_FROM_U, which maps
u = 1 - x/a to zeta itself.  One coefficient per line, ascending powers,
20 significant digits.
"""

ETA_RADIUS = 1.2

ZETA_FROM_U = (
    0.0,
    1.2599210498948731648,
    0.37797631496846194943,
    0.23038556340934823584,
    0.16590960364964869484,
    0.12931387086451008907,
    0.10568046188858133991,
    0.089169979522681869784,
    0.077000149006188024557,
    0.067670556612510618198,
    0.060299425132433090388,
    0.054334491580577288070,
    0.049412387042235346733,
    0.045284391486465493480,
    0.041774638317746030155,
    0.038755339428219429698,
    0.036131460014187497883,
    0.033830892459954931252,
    0.031797959672738536850,
    0.029989003878782158489,
    0.028369320751977910316,
    0.026910984153200042561,
    0.025591274114662718320,
    0.024391521867005306409,
    0.023296248530009948816,
    0.022292514054144630302,
    0.021369418983957309899,
    0.020517718843420687296,
    0.019729522574087348278,
    0.018998054438346887027,
    0.018317464360428322900,
    0.017682675605721463486,
    0.017089261509692559359,
    0.016533345003088904786,
    0.016011516170592879476,
    0.015520764182884864024,
    0.015058420765995334602,
    0.014622112993018208413,
    0.014209723655621913472,
    0.013819357834888730604,
    0.013449314570691239500,
    0.013098062746388260966,
    0.012764220476032806115,
    0.012446537415614128075,
    0.012143879526390914548,
    0.011855215903354162062,
    0.011579607350020874159,
    0.011316196435719329255,
    0.011064198816062633577,
    0.010822895633569090232,
    0.010591626845047666024,
    0.010369785346732530477,
    0.010156811788250956189,
    0.0099521899831569554094,
    0.0097554428376048180184,
    0.0095661287302877309933,
    0.0093838382864401959396,
    0.0092081914968318015673,
    0.0090388351395331235064,
    0.0088754404680305460951,
    0.0087177011341836377442,
    0.0085653313187019689973,
    0.0084180640453874700141,
    0.0082756496584420452653,
    0.0081378544447595790242,
    0.0080044593853741559679,
    0.0078752590221784152503,
    0.0077500604277042811260,
    0.0076286822672120503713,
    0.0075109539435958437316,
    0.0073967148167114083997,
    0.0072858134896895285692,
    0.0071781071556346004645,
    0.0070734609988399941607,
    0.0069717476452938833052,
    0.0068728466578133961693,
    0.0067766440716415775139,
    0.0066830319667796086062,
    0.0065919080737136098212,
    0.0065031754095376764852,
    0.0064167419417781978388,
    0.0063325202774938343808,
    0.0062504273754649766374,
    0.0061703842794997136361,
)

PHI = (
    1.2599210498948731648,
    0.25198420997897463295,
    0.032397969854439595665,
    -0.0071195538692472197882,
    -0.0049600528258631933162,
    -0.00065633849241134094848,
    0.00046724692038392757846,
    0.00026758554023387070450,
    0.000027096237413810520794,
    -0.000033222909355040848729,
    -0.000017707810193907879072,
    -1.4480636731396924754e-6,
    2.4853721641330267486e-6,
    1.2779685440370355243e-6,
    8.8627018250623144047e-8,
    -1.9214360170692741051e-7,
    -9.6735053153465890885e-8,
    -5.8836330401859520815e-9,
    1.5203135269051113575e-8,
    7.5480328813746549579e-9,
    4.1188106131395015632e-10,
    -1.2238665222501605726e-9,
    -6.0156107665460627079e-10,
    -2.9923526399823688295e-11,
    9.9841937248122938236e-11,
    4.8700464426291958514e-11,
    2.2343573256976872101e-12,
    -8.2313300661934492726e-12,
    -3.9906124612303826982e-12,
    -1.7039418186541509088e-13,
    6.8444081160898232562e-13,
    3.3016128615357112135e-13,
    1.3214222027458621715e-14,
    -5.7314337879688282404e-14,
    -2.7530835015634307876e-14,
    -1.0388815121187269024e-15,
    4.8279025354226864202e-15,
    2.3106951635495016804e-15,
    8.2608840394312039282e-17,
    -4.0873067764323624410e-16,
    -1.9500890777341453744e-16,
    -6.6321928297661469705e-18,
    3.4753205358788735181e-17,
    1.6535188111470940249e-17,
    5.3685663417490150014e-19,
    -2.9661016016431333082e-18,
    -1.4077679413937699212e-18,
    -4.3767494178021102629e-20,
    2.5398629277603870461e-19,
    1.2028095262426537934e-19,
    3.5904531253913682676e-21,
    -2.1812320034585331389e-20,
    -1.0309152376193980434e-20,
    -2.9616381953605542549e-22,
    1.8781147772793985697e-21,
    8.8604692040100556064e-22,
    2.4549027831006759926e-23,
    -1.6208916402945897094e-22,
    -7.6343105723941735688e-23,
    -2.0437729868592000930e-24,
    1.4018373379073518712e-23,
    6.5925490196469446513e-24,
    1.7081940988986470778e-25,
    -1.2146952132443399274e-24,
    -5.7044547811983143134e-25,
    -1.4327992023240288792e-26,
    1.0543599104974965347e-25,
    4.9450620848554471033e-26,
    1.2056925409110195512e-27,
    -9.1663764972422223787e-27,
    -4.2939438202382044421e-27,
    -1.0175807357321354685e-28,
    7.9806286688606230343e-28,
    3.7342804794717140156e-28,
    8.6114335029021600059e-30,
    -6.9575640181254440582e-29,
    -3.2521443805440920823e-29,
    -7.3057086268442334624e-31,
    6.0731471362628347232e-30,
    2.8359435595252821991e-30,
    6.2122147488540063917e-32,
    -5.3072254380297066552e-31,
    -2.4759855678267776287e-31,
    -4.5740851353964173741e-33,
)

CHI = (
    0.15874010519681994748,
    0.0090708631541039969986,
    -0.019351174728755193597,
    -0.0079645581702874460227,
    0.00069936163613446592111,
    0.0018400674042254346230,
    0.00061864943158262243053,
    -0.00010905068251632673938,
    -0.00017162196970363572688,
    -0.000052265216419116350493,
    0.000011928139205409849534,
    0.000015809757429148839539,
    4.5494697522500238270e-6,
    -1.1877153833351318355e-6,
    -1.4455126617504341574e-6,
    -4.0115647534840422274e-7,
    1.1375981531677862076e-7,
    1.3157025348667632505e-7,
    3.5602172398634144154e-8,
    -1.0684306313783826606e-8,
    -1.1942032898800110770e-8,
    -3.1713576013260519059e-9,
    9.9222481603653276023e-10,
    1.0819623771946721220e-9,
    2.8316127110307305485e-10,
    -9.1493771791180381806e-11,
    -9.7906713274005124911e-11,
    -2.5323410031142411409e-11,
    8.3964242711957605450e-12,
    8.8518658701860342084e-12,
    2.2673449411184894318e-12,
    -7.6792944179872015911e-13,
    -7.9979605765496264495e-13,
    -2.0318673367267923171e-13,
    7.0058015434845852465e-14,
    7.2229208251605899631e-14,
    1.8220912809731239287e-14,
    -6.3791533697285286363e-15,
    -6.5205210728942657884e-15,
    -1.6348621444838450073e-15,
    5.7998698027230356580e-16,
    5.8846571887274780760e-16,
    1.4675186790135310446e-16,
    -5.2668923731619631968e-17,
    -5.3095075779950613382e-17,
    -1.3177828853036329724e-17,
    4.7782503491156576268e-18,
    4.7896114388165606486e-18,
    1.1836840014164197090e-18,
    -4.3314715938730128129e-19,
    -4.3199004939264918578e-19,
    -1.0635035505443105497e-19,
    3.9238404390961527710e-20,
    3.8957042533335066172e-20,
    9.5573406602993561509e-21,
    -3.5525608719474498881e-21,
    -3.5127402480416624340e-21,
    -8.5904709479267677361e-22,
    3.2148596115983562298e-22,
    3.1670959408045546465e-22,
    7.7226773899675813085e-23,
    -2.9080502720300814058e-23,
    -2.8552063252622204908e-23,
    -6.9435396191860104841e-24,
    2.6295719717954594285e-24,
    2.5738296431202417654e-24,
    6.2437946934426930864e-25,
    -2.3770110096956337516e-25,
    -2.3200226960843725380e-25,
    -5.6151934487884978199e-26,
    2.1481112745336709237e-26,
    2.0911166427721048978e-26,
    5.0503785485458514588e-27,
    -1.9407771757197699468e-27,
    -1.8846938038568616474e-27,
    -4.5427799627821510902e-28,
    1.7530716564467565990e-28,
    1.6985657664173522533e-28,
    4.0865246885982525384e-29,
    -1.5832110387883421161e-29,
    -1.5307529305185375193e-29,
    -3.6763582734137803694e-30,
    1.4671807691205329229e-30,
    -1.0849839713889853205e-30,
)

A0 = (
    1.0000000000000000000,
)

B0 = (
    0.017998872141355330925,
    0.011199298221287761465,
    0.0025806175122151019924,
    -0.00072856973043981920737,
    -0.00076114463606963946811,
    -0.00018554677707954858056,
    0.000067079483680680358508,
    0.000065598558097562845475,
    0.000015536276095647217556,
    -6.1810879140448589651e-6,
    -5.8362453286683945467e-6,
    -1.3571548565117293027e-6,
    5.6393612356286745139e-7,
    5.2319307503492993233e-7,
    1.2039577876984633264e-7,
    -5.1160344178534734583e-8,
    -4.7012280650337294340e-8,
    -1.0750491358153280584e-8,
    4.6277117443250960176e-9,
    4.2282452271573352925e-9,
    9.6297115157305439240e-10,
    -4.1795027767027749698e-10,
    -3.8045446929561359736e-10,
    -8.6405309553522826093e-11,
    3.7713960154030502891e-11,
    3.4241754062690591119e-11,
    7.7608856533891904451e-12,
    -3.4013360246648396533e-12,
    -3.0823362839702271728e-12,
    -6.9753826232369742167e-13,
    3.0665420570140536793e-13,
    2.7749321868050076452e-13,
    6.2721971998558145791e-14,
    -2.7640632654214511157e-14,
    -2.4983848000116687699e-14,
    -5.6417014577381580877e-15,
    2.4910133960705139064e-15,
    2.2495304720107596863e-15,
    5.0757778397246558331e-16,
    -2.2446683885313615682e-16,
    -2.0255541842660363095e-16,
    -4.5674344740018263143e-17,
    2.0225031147690056096e-17,
    1.8239415681435552102e-17,
    4.1105672562688355567e-18,
    -1.8222000828376773620e-18,
    -1.6424413802082938945e-18,
    -3.6998000071532481779e-19,
    1.6416449481105607524e-19,
    1.4790347607786035261e-19,
    3.3303695694350613114e-20,
    -1.4789158898535608986e-20,
    -1.3319092819088681733e-20,
    -2.9980386414724507180e-21,
    1.3322703586012142105e-21,
    1.1994366015187098450e-21,
    2.6990268274641187277e-22,
    -1.2001309906331905634e-22,
    -1.0801529669995555659e-22,
    -2.4299543328236570022e-23,
    1.0810716230204565126e-23,
    9.7274205213525796550e-24,
    2.1877948733305805778e-24,
    -9.7380388921578540164e-25,
    -8.7601975485844501923e-25,
    -1.9698355829506351059e-25,
    8.7716462926503945501e-26,
    7.8892067384718298010e-26,
    1.7736424259033495070e-26,
    -7.9010421254491948766e-27,
    -7.1048604185018326271e-27,
    -1.5970300623979808690e-27,
    7.1167579481763579187e-28,
    6.3985293517475886397e-28,
    1.4380354009250407742e-28,
    -6.4102548909584500901e-29,
    -5.7624460888998718816e-29,
    -1.2948942574428746955e-29,
    5.7738340698368339795e-30,
    5.1896183001587891823e-30,
    1.1660206699899851083e-30,
    2.0036813798689639344e-30,
    -2.7422477650293005515e-31,
    -1.0855778054083985399e-30,
)

C0 = (
    1.0000000000000000000,
)

D0 = (
    -0.15874010519681994748,
    -0.031748021039363989495,
    0.0052409431557045315992,
    0.0047131838449202990465,
    0.00021857870356289582644,
    -0.00088108525522672331801,
    -0.00038487514139994759484,
    0.000024535829010957931207,
    0.000088972965513764512981,
    0.000032690735129231887258,
    -4.1404564312539392905e-6,
    -8.4565490872089067815e-6,
    -2.8395617805638399016e-6,
    4.7720039046215895503e-7,
    7.8633069335469808258e-7,
    2.4946729935778855018e-7,
    -4.9301820766376075573e-8,
    -7.2338491491750930596e-8,
    -2.2057402039783901953e-8,
    4.8537548742629167806e-9,
    6.6147777329870544127e-9,
    1.9580899770176541737e-9,
    -4.6564046339034297243e-10,
    -6.0261978280254585228e-10,
    -1.7429740277390706134e-10,
    4.3977159518220858146e-11,
    5.4764806545097956761e-11,
    1.5545306830610243872e-11,
    -4.1110094159547815628e-12,
    -4.9683655031572036788e-12,
    -1.3885018013097711264e-12,
    3.8156935299672710763e-13,
    4.5017651023631849107e-13,
    1.2416200086077901660e-13,
    -3.5233000521389390878e-14,
    -4.0751532248884955215e-14,
    -1.1112814385904342744e-14,
    3.2406731564491732362e-15,
    3.6862902788279598524e-15,
    9.9535420999794304459e-16,
    -2.9717648499787695169e-16,
    -3.3326188342680602305e-16,
    -8.9205799523248916653e-17,
    2.7186981253865464935e-17,
    3.0114852025127319118e-17,
    7.9988386398546102737e-18,
    -2.4824221076282863132e-18,
    -2.7202649706737424507e-18,
    -7.1753841047506174007e-19,
    2.2631285672949405316e-19,
    2.4564334652953011292e-19,
    6.4390327809825463561e-20,
    -2.0605231784456437245e-20,
    -2.2176037125061588317e-20,
    -5.7800486675099868105e-21,
    1.8740054029947889152e-21,
    2.0015448257738709055e-21,
    5.1899102337737465800e-22,
    -1.7027893138684125832e-22,
    -1.8061884805754123114e-22,
    -4.6611267757598033222e-23,
    1.5459853777425933033e-23,
    1.6296281376590728263e-23,
    4.1870908054247243566e-24,
    -1.4026559533029963297e-24,
    -1.4701139138503402998e-24,
    -3.7619573776512493864e-25,
    1.2718528290613780546e-25,
    1.3260449324070589519e-25,
    3.3805440214062599256e-26,
    -1.1526423455377139460e-26,
    -1.1959603229885692078e-26,
    -3.0382467556157126007e-27,
    1.0441218611283659254e-27,
    1.0785296219931632401e-27,
    2.7309688906626788573e-28,
    -9.4543014921574498558e-29,
    -9.7254305378841903274e-29,
    -2.4550601562579836722e-29,
    8.5575353046958088676e-30,
    8.7690199678956665081e-30,
    2.2072642866808749052e-30,
    -3.9916611168998461432e-30,
    1.4304855397077439008e-30,
)

A1 = (
    -0.0044444444444444444444,
    -0.0018441558441558441558,
    0.0011213675213675213675,
    0.0013457752124418791085,
    0.00038806265629795041560,
    -0.00018306867237817991325,
    -0.00019954608878067328114,
    -0.000052561912340415872934,
    0.000024606196524591578520,
    0.000025192467809245413617,
    6.3331573765332422308e-6,
    -2.9574857338302017063e-6,
    -2.9252559205648380298e-6,
    -7.1597026105020092682e-7,
    3.3315107203909490766e-7,
    3.2276704756923098702e-7,
    7.7677293816641987431e-8,
    -3.6009542379211197983e-8,
    -3.4417244490342264280e-8,
    -8.1881943563987717963e-9,
    3.7831484851520378561e-9,
    3.5815756791529319130e-9,
    8.4503426596952333621e-10,
    -3.8930888220138742567e-10,
    -3.6597303200155096801e-10,
    -8.5805666691434061222e-11,
    3.9435385643099138701e-11,
    3.6870278519088964872e-11,
    8.6020614872978472039e-12,
    -3.9453498644295932468e-12,
    -3.6727882785876701944e-12,
    -8.5349274770198017986e-13,
    3.9077551537763399024e-13,
    3.6249896250857170200e-13,
    8.3964421577848385849e-14,
    -3.8386052140600156067e-14,
    -3.5504375367673996777e-14,
    -8.2013737420426532208e-15,
    3.7445649950160659824e-15,
    3.4549179064121244968e-15,
    7.9622868365083037397e-16,
    -3.6312781796511050527e-16,
    -3.3433317454381196468e-16,
    -7.6898234723774912529e-17,
    3.5035077320003744404e-17,
    3.2198136342234601292e-17,
    7.3929551824385023746e-18,
    -3.3652570737691936613e-18,
    -3.0878354871053687113e-18,
    -7.0792064912837779822e-19,
    3.2198750836723771640e-19,
    2.9502973189836895110e-19,
    6.7548518237436333855e-20,
    -3.0701473002153105968e-20,
    -2.8096065485153173006e-20,
    -6.4250883259184750552e-21,
    2.9183752187447529606e-21,
    2.6677472084744228388e-21,
    6.0941871357585401903e-22,
    -2.7664452477663720814e-22,
    -2.5263402794837895569e-22,
    -5.7656255088297799116e-23,
    2.6158886522384756385e-23,
    2.3866962236432945282e-23,
    5.4422020101948737718e-24,
    -2.4679336265563833094e-24,
    -2.2498606696580596266e-24,
    -5.1261367719972073270e-25,
    2.3235504889903835814e-25,
    2.1166540898422419413e-25,
    4.8191586087272020855e-26,
    -2.1834908625717998154e-26,
    -1.9877062105641722389e-26,
    -4.5225805870480111907e-27,
    2.0483215990486501015e-27,
    1.8634858100425395234e-27,
    4.2373654678816595192e-28,
    -1.9184541088571724631e-28,
    -1.7443264797236472361e-28,
    -3.9641822760672755158e-29,
    -6.3183500924373972160e-29,
    1.0019044561350753683e-29,
    3.6059556617360420303e-29,
    -7.4165327798899553853e-32,
)

B1 = (
    -0.0014928295321342917205,
    -0.0017564094190927786568,
    -0.00060653866301391552873,
    0.00033818429605719909616,
    0.00043085608119886891000,
    0.00013034490982847141762,
    -0.000068264941306137524258,
    -0.000078142632235252087359,
    -0.000021732200365086332137,
    0.000011017601357948748460,
    0.000011869318348378736534,
    3.1434048868651395601e-6,
    -1.5603600706964465138e-6,
    -1.6195802720628667167e-6,
    -4.1573751742777720264e-7,
    2.0328084119483586857e-7,
    2.0582362502240562839e-7,
    5.1710346853014432455e-8,
    -2.5000828112929094453e-8,
    -2.4870188164764444620e-8,
    -6.1511800090284393688e-9,
    2.9481471510416390752e-9,
    2.8942489886110500462e-9,
    7.0736050452384815102e-10,
    -3.3668839656060494353e-10,
    -3.2716186093957192635e-10,
    -7.9213748637186001478e-11,
    3.7493103567094771574e-11,
    3.6135232574999586010e-11,
    8.6833776854962671789e-12,
    -4.0909542383823027261e-12,
    -3.9165170246589521027e-12,
    -9.3531307362750997673e-13,
    4.3893406806729111867e-13,
    4.1788622372970255836e-13,
    9.9277955298919397699e-14,
    -4.6435650219415625683e-14,
    -4.4001564585456442276e-14,
    -1.0407364946268134352e-14,
    4.8539384092285396672e-15,
    4.5810239352332133734e-15,
    1.0793992901733634451e-15,
    -5.0216947484996050691e-16,
    -4.7228613177574401750e-16,
    -1.1091443457987533997e-16,
    5.1487497838564058757e-17,
    4.8276292008654282925e-17,
    1.1304640383614086338e-17,
    -5.2375043104099920970e-18,
    -4.8976823209750868268e-18,
    -1.1439301248711278684e-18,
    5.2906846255119061614e-19,
    4.9356322955793487475e-19,
    1.1501642555489304824e-19,
    -5.3112142908761316939e-20,
    -4.9442376787998660237e-20,
    -1.1498144410980716309e-20,
    5.3021121269820441110e-21,
    4.9263168693609220668e-21,
    1.1435364944208360579e-21,
    -5.2664121006146333484e-22,
    -4.8846800637875619403e-22,
    -1.1319796121462566675e-22,
    5.2071014072792993113e-23,
    4.8220770135148166343e-23,
    1.1157753860127166504e-23,
    -5.1270736037742308022e-24,
    -4.7411578320594846670e-24,
    -1.0955296413741015868e-24,
    5.0290941231765822498e-25,
    4.6444445178776700236e-25,
    1.0718165922868551555e-25,
    -4.9157759147243893452e-26,
    -4.5343112190377763690e-26,
    -1.0451748818233469848e-26,
    4.7895633033126147247e-27,
    4.4129715752361317655e-27,
    1.0161051441916788317e-27,
    1.5919751923065171726e-27,
    -2.6687554609562247948e-28,
    -9.3941240092393648730e-28,
    2.9199153614237251955e-30,
    9.2421203418549527730e-31,
    2.3365518936430346182e-31,
)

C1 = (
    0.0073015873015873015873,
    0.0041933621933621933622,
    -0.00045049553620982192411,
    -0.0015230258277877325496,
    -0.00060226087430569223286,
    0.00013451620208785084305,
    0.00022795733591039799009,
    0.000075966238030331096343,
    -0.000020892929314570250350,
    -0.000028898998433704243800,
    -8.8208528891595235025e-6,
    2.6869975414032648586e-6,
    3.3642200803839120791e-6,
    9.7359671346031902917e-7,
    -3.1517332472448456875e-7,
    -3.7190265872638016761e-7,
    -1.0384222477076960875e-7,
    3.5015068727403209114e-8,
    3.9717123525775888458e-8,
    1.0806814347431836842e-8,
    -3.7535480699503368473e-9,
    -4.1384055502160021242e-9,
    -1.1041419184317910839e-9,
    3.9231815145262557691e-10,
    4.2333913733956525213e-10,
    1.1121205930373340488e-10,
    -4.0238069734861618862e-11,
    -4.2690998507221052238e-11,
    -1.1074824918450174207e-11,
    4.0670819945220963520e-12,
    4.2562598413128860101e-12,
    1.0926790475252425521e-12,
    -4.0631145083053512165e-13,
    -4.2040869506727702876e-13,
    -1.0697964836703506828e-13,
    4.0206377630135037242e-14,
    4.1204660341507367494e-14,
    1.0406031669982764056e-14,
    -3.9471681299378487639e-15,
    -4.0121179751968199849e-15,
    -1.0065924845021186262e-15,
    3.8491481323200145336e-16,
    3.8847489771036299504e-16,
    9.6902062262445122047e-17,
    -3.7320759894559068906e-17,
    -3.7431830470557594581e-17,
    -9.2893952734031388266e-18,
    3.6006224364149374520e-18,
    3.5914790147094196985e-18,
    8.8722555735233536479e-19,
    -3.4587355039039713911e-19,
    -3.4330335642444516192e-19,
    -8.4460435983977326530e-20,
    3.3097340181743252680e-20,
    3.2706717283042296750e-20,
    8.0167245318727065523e-21,
    -3.1563906609383921094e-21,
    -3.1067262036446356045e-21,
    -7.5891594355843345861e-22,
    3.0010054713125167232e-22,
    2.9431067392862300193e-22,
    7.1672674705815156582e-23,
    -2.8454706743585114434e-23,
    -2.7813607338905661388e-23,
    -6.7541664031559941892e-24,
    2.6913276938106681603e-24,
    2.6227260672088567316e-24,
    6.3522941992241406602e-25,
    -2.5398171606525516527e-25,
    -2.4681770843998137780e-25,
    -5.9635141462602041662e-26,
    2.3919226726921197510e-26,
    2.3184645535218506805e-26,
    5.5892056268615050683e-27,
    -2.2484089990354687203e-27,
    -2.1741503262525691876e-27,
    -5.2303423959380759851e-28,
    2.1098553612485985720e-28,
    2.0356373499450814319e-28,
    4.8875599777855635469e-29,
    6.1358354085024733876e-29,
    -1.2345893786352203754e-29,
    -3.6748622401243464858e-29,
    8.1013943065856264159e-32,
)

D1 = (
    0.0021692190421556780701,
    0.00043384380843113561402,
    -0.0012387734165915196034,
    -0.00076271619697333711067,
    0.00023673471105423135051,
    0.00047741598195949141270,
    0.00018472784055258955628,
    -0.000062877639093075094110,
    -0.000094657965322544602881,
    -0.000031559227245824566692,
    0.000011295489431508897259,
    0.000014943775552445671679,
    4.5973300989919440440e-6,
    -1.6965275886759847333e-6,
    -2.0838903784926849421e-6,
    -6.0918301385818864800e-7,
    2.2952886495437789224e-7,
    2.6857363656809015792e-7,
    7.5770662054425219399e-8,
    -2.8991035711029263586e-8,
    -3.2774303931381394267e-8,
    -9.0063225369552178289e-9,
    3.4875818984340954138e-9,
    3.8422251659384488046e-9,
    1.0345827042129398943e-9,
    -4.0455410802646101645e-10,
    -4.3680571099302377318e-10,
    -1.1572236533442219399e-10,
    4.5620817601991348008e-11,
    4.8466570560577861630e-11,
    1.2670523930970518488e-11,
    -5.0298058884895290953e-12,
    -5.2728060926666076269e-12,
    -1.3632240585580127918e-12,
    5.4441483885642708148e-13,
    5.6437130235533041469e-13,
    1.4454089354724827563e-13,
    -5.8028077684258968211e-14,
    -5.9584945299529949066e-14,
    -1.5136752088814563005e-14,
    6.1052646937470604047e-15,
    6.2177427431024939402e-15,
    1.5683927242244267889e-15,
    -6.3523781958404356787e-16,
    -6.4231673330218590771e-16,
    -1.6101542452088796745e-16,
    6.5460496018767217411e-17,
    6.5773010099256347998e-17,
    1.6397113418992773790e-17,
    -6.6889449472449645335e-18,
    -6.6832588238811957587e-18,
    -1.6579225254397327168e-18,
    6.7842674928162156916e-19,
    6.7445429464022214834e-19,
    1.6657116256421218982e-19,
    -6.8355728973527366144e-20,
    -6.7648857616567729390e-20,
    -1.6640347181484434755e-20,
    6.8466205043265132967e-21,
    6.7481251013860979205e-21,
    1.6538541673121657857e-21,
    -6.8212550505267989261e-22,
    -6.6981063389108308484e-22,
    -1.6361185702293949064e-22,
    6.7633138734636699824e-23,
    6.6186068258395285102e-23,
    1.6117475737740376934e-23,
    -6.6765553814207285894e-24,
    -6.5132788222781407245e-24,
    -1.5816206954213680954e-24,
    6.5646051564264921605e-25,
    6.3856076489691771383e-25,
    1.5465694142988797842e-25,
    -6.4309165918566762575e-26,
    -6.2388822885710410835e-26,
    -1.5073719147223283388e-26,
    6.2787434295649404307e-27,
    6.0761760929763048937e-27,
    1.4647499633271323781e-27,
    1.9480474180455725797e-27,
    -3.7638167317907417522e-28,
    -1.1865750446258697253e-27,
    2.6907831630443399438e-31,
    5.3970872993495672573e-30,
)

A2 = (
    0.00069373554135458897364,
    0.00046448349036584330702,
    -0.00042838130171535112459,
    -0.00070267028687711331139,
    -0.00026325800467788119397,
    0.00016638536662887030927,
    0.00022120876878185832967,
    0.000070203456153296606501,
    -0.000040004217825406136723,
    -0.000047863249664539618098,
    -0.000013946007414736309232,
    7.5361865912737267784e-6,
    8.4785021610676613716e-6,
    2.3453552284539115650e-6,
    -1.2259432947108826614e-6,
    -1.3250823434010269717e-6,
    -3.5399547765699974379e-7,
    1.8082917193766738074e-7,
    1.9003835152336560658e-7,
    4.9515867475358855905e-8,
    -2.4869767946004882102e-8,
    -2.5598724715674631421e-8,
    -6.5457721413558916633e-9,
    3.2453209140211550320e-9,
    3.2874264272719363576e-9,
    8.2839746277357582869e-10,
    -4.0651666859301634363e-10,
    -4.0659602875917599689e-10,
    -1.0126288355703817607e-10,
    4.9280142216707073586e-11,
    4.8783758512271347193e-11,
    1.2033407229066790273e-11,
    -5.8158533103417439913e-12,
    -5.7082467720234607326e-12,
    -1.3968026579577663202e-12,
    6.7117496080060189633e-13,
    6.5402930092817125409e-13,
    1.5895796000639053217e-13,
    -7.6002356028811533579e-14,
    -7.3606892782429163576e-14,
    -1.7785919891034500214e-14,
    8.4675488870446368777e-15,
    8.1572442581038265217e-15,
    1.9611484893154022253e-15,
    -9.3017527712116074968e-16,
    -8.9194806960745678718e-16,
    -2.1349579011426407363e-16,
    1.0092767803414856333e-16,
    9.6386409378531863903e-17,
    2.2981255085478061150e-17,
    -1.0832337294376926691e-17,
    -1.0307637705210746695e-17,
    -2.4491381124425039160e-18,
    1.1513945402714283425e-18,
    1.0920966012972005309e-18,
    2.5868411518746935689e-19,
    -1.2132702561782161067e-19,
    -1.1474588858006788780e-19,
    -2.7104106097077979773e-20,
    1.2685209916155638993e-20,
    1.1965806620424832724e-20,
    2.8193218173082436114e-21,
    -1.3169411874686093218e-21,
    -1.2393117903356841771e-21,
    -2.9133167943454526340e-22,
    1.3584443789646024212e-22,
    1.2756077726256905960e-22,
    2.9923713687928194774e-23,
    -1.3930480062187050161e-23,
    -1.3055157512447290101e-23,
    -3.0566630044979675501e-24,
    1.4208586589286579858e-24,
    1.3291610119228041788e-24,
    3.1065400072216290093e-25,
    -1.4420580352480341674e-25,
    -1.3467342201255691831e-25,
    -3.1424925745833666602e-26,
    -4.9111798538770208040e-26,
    8.5256059771773174799e-27,
    2.9862507484356342625e-26,
    -1.1006292175556820839e-28,
    -4.5875507853437843857e-29,
    -1.1766237169027924953e-29,
    1.4626050958126402551e-30,
)

B2 = (
    0.00055221307672129279006,
    0.00089586516310476929281,
    0.00040139048548426692099,
    -0.00030298700178165608074,
    -0.00046906432801030013604,
    -0.00017043607951731621617,
    0.00010950848699422760234,
    0.00014599344660313224309,
    0.000046931629826349242828,
    -0.000027697284777293624190,
    -0.000033847144431957566128,
    -0.000010108424209603268441,
    5.6630384446414850350e-6,
    6.5434059747114941770e-6,
    1.8611001796907079661e-6,
    -1.0065249504769540441e-6,
    -1.1185682003410787183e-6,
    -3.0730307232845194191e-7,
    1.6201291973845365713e-7,
    1.7496619498247958923e-7,
    4.6839128570814001092e-8,
    -2.4221804770463283551e-8,
    -2.5591105991597972610e-8,
    -6.7146322152540278767e-9,
    3.4201571102551880381e-9,
    3.5514317313139122004e-9,
    9.1701796217029285482e-10,
    -4.6143098931038694049e-10,
    -4.7246311661923473911e-10,
    -1.2040966205139487590e-10,
    5.9983555801386979395e-11,
    6.0709237589479600830e-11,
    1.5304641625806263596e-11,
    -7.5603688945727823624e-12,
    -7.5776016912825638976e-12,
    -1.8928178618948014265e-12,
    9.2837710836324826869e-13,
    9.2279657679754015613e-13,
    2.2870048967300520973e-13,
    -1.1148340894341941909e-13,
    -1.1002258680009492271e-13,
    -2.7082365547204337753e-14,
    1.3131195667075568409e-14,
    1.2878557630906435370e-14,
    3.1512904121458970690e-15,
    -1.5207707172437221211e-15,
    -1.4833598040909890962e-15,
    -3.6106948842207987472e-16,
    1.7352329824867333414e-16,
    1.6843511025314066796e-16,
    4.0808928583800020705e-17,
    -1.9539328778842865322e-17,
    -1.8884465641660564844e-17,
    -4.5563828631115017436e-18,
    2.1743402782881025406e-18,
    2.0933213054162625039e-18,
    5.0318375059229704516e-19,
    -2.3940202045950126946e-19,
    -2.2967534214226164714e-19,
    -5.5021998308765516285e-20,
    2.6106745178634659999e-20,
    2.4966595764592609060e-20,
    5.9627588768420841541e-21,
    -2.8221741848515851148e-21,
    -2.6911220936029389282e-21,
    -6.4092061258195514003e-22,
    3.0265829412999510274e-22,
    2.8784083458938603200e-22,
    6.8376747679724545220e-23,
    -3.2221732687767601023e-23,
    -3.0569833151199993477e-23,
    -7.2447638180441699045e-24,
    3.4074356355986645230e-24,
    3.2255162023536850349e-24,
    7.6275491300153412223e-25,
    1.1965986545684407807e-24,
    -2.1317930426383191400e-25,
    -7.4845189083202632796e-25,
    3.0300718720601240105e-27,
    1.4194689104289250811e-27,
    3.7221154953476361799e-28,
    -5.9430033915190937174e-29,
    -2.4813394488948079401e-29,
    -7.3721395880837794588e-30,
)

C2 = (
    -0.00093729945539469348993,
    -0.00079069048971569979973,
    0.00029354370372577234269,
    0.00075927240094010983263,
    0.00035016010883062755128,
    -0.00013979567431377532461,
    -0.00023820891203300346392,
    -0.000088568278290203814788,
    0.000035818251710733149261,
    0.000051490034647181545349,
    0.000017124985942424723279,
    -6.9762838320567034770e-6,
    -9.1179611830258519698e-6,
    -2.8306924017373647853e-6,
    1.1592168649513684523e-6,
    1.4249476192665376763e-6,
    4.2205280462311232903e-7,
    -1.7357534127673965054e-7,
    -2.0437694477935402904e-7,
    -5.8492854695656420305e-8,
    2.4144529944784394490e-8,
    2.7534195182762655404e-8,
    7.6764908114256108474e-9,
    -3.1790211362654228194e-9,
    -3.5366160664365814011e-9,
    -9.6578147373376892385e-10,
    4.0112747797212176303e-10,
    4.3750142459057819770e-10,
    1.1747949744271742033e-10,
    -4.8923810269248094197e-11,
    -5.2502304443721789399e-11,
    -1.3902696750618053098e-11,
    5.8037776681939102784e-12,
    6.1445833968389621889e-12,
    1.6080431482998321109e-12,
    -6.7278335348634458992e-13,
    -7.0416090530962148279e-13,
    -1.8243083768279997342e-13,
    7.6482999631668081277e-14,
    7.9263966445885229671e-14,
    2.0356737022794459263e-14,
    -8.5505971550041422434e-15,
    -8.7857852722204910379e-15,
    -2.2391935257922140910e-15,
    9.4219720078695441589e-16,
    9.6084533425992883580e-16,
    2.4323768575830509033e-16,
    -1.0251557557271256256e-16,
    -1.0384927221838526824e-16,
    -2.6131794536538000333e-17,
    1.1030358643306205501e-17,
    1.1107530452695782302e-17,
    2.7799841467392058044e-18,
    -1.1751183731209205414e-18,
    -1.1770290678136555519e-18,
    -2.9315730408347463090e-19,
    1.2408538888302558293e-19,
    1.2368817918706173186e-19,
    3.0670944643845984088e-20,
    -1.2998496645532790215e-20,
    -1.2900164957909547459e-20,
    -3.1860269407234179028e-21,
    1.3518549756668138740e-21,
    1.3362678206869037134e-21,
    3.2881419135202546828e-22,
    -1.3967457628676179139e-22,
    -1.3755845466812505298e-22,
    -3.3734665408923207307e-23,
    1.4345091359806335190e-23,
    1.4080145416650238764e-23,
    3.4422475285224803389e-24,
    -1.4652281824254193857e-24,
    -1.4336902364224971540e-24,
    -3.4949166959755216033e-25,
    1.4890674029559600017e-25,
    1.4528148763670138615e-25,
    3.5320587500221006865e-26,
    4.8618106598582069859e-26,
    -9.2707400422365768974e-27,
    -3.0206895359205054498e-26,
    -9.1919204779867626499e-30,
    1.2012884609417221173e-28,
    5.9548147257989010311e-29,
    2.3518557765275337409e-30,
)

D2 = (
    -0.00047878444342770064445,
    -0.000095756888685540128890,
    0.00062162257639658313521,
    0.00046001308691808063851,
    -0.00023547308195164001856,
    -0.00050509185484420653332,
    -0.00022360667499874051374,
    0.00010507923305385799604,
    0.00017119266824431831536,
    0.000063512439447099745365,
    -0.000028899018948773144301,
    -0.000041169859144642908483,
    -0.000013836332379143822863,
    6.1894523194784672804e-6,
    8.1236690046390580841e-6,
    2.5600642447988419408e-6,
    -1.1336030766744082636e-6,
    -1.4070614206242105393e-6,
    -4.2366557207283327207e-7,
    1.8638479029386633168e-7,
    2.2211974332907557389e-7,
    6.4637284822104155512e-8,
    -2.8313572357855969570e-8,
    -3.2709191183502477906e-8,
    -9.2688602448767554892e-9,
    4.0481758325372374466e-9,
    4.5631006717969342990e-9,
    1.2657710531085459453e-9,
    -5.5170056164674173084e-10,
    -6.0959114947228956612e-10,
    -1.6615932999965431284e-10,
    7.2319756943657517663e-11,
    7.8597433825401316826e-11,
    2.1111748325997818603e-11,
    -9.1797086093234772787e-12,
    -9.8383456267451634819e-12,
    -2.6098857160254376935e-12,
    1.1340543809696102429e-12,
    1.2010053204506851085e-12,
    3.1519457848396132759e-13,
    -1.3689815805366331681e-13,
    -1.4349024711152795110e-13,
    -3.7307201257647429062e-14,
    1.6199113481766365091e-14,
    1.6826431537082441118e-14,
    4.3389968117586870516e-15,
    -1.8837469799716531976e-15,
    -1.9411559151456415412e-15,
    -4.9692395277662478296e-16,
    2.1572448775847603289e-16,
    2.2072796249461291612e-16,
    5.6138108502814416846e-17,
    -2.4371110179875416026e-17,
    -2.4778498809708736238e-17,
    -6.2651642798512357222e-18,
    2.7200842599193913773e-18,
    2.7497724508620645161e-18,
    6.9160048378551351965e-19,
    -3.0030063067430269857e-19,
    -3.0200839038944608406e-19,
    -7.5594192575316255697e-20,
    3.2828786876291970536e-20,
    3.2860000163682845157e-20,
    8.1889776312703271190e-21,
    -3.5569074937693878494e-21,
    -3.5449528200321805063e-21,
    -8.7988089085131981521e-22,
    3.8225368503470998756e-22,
    3.7946173395386427872e-22,
    9.3836529414544360181e-23,
    -4.0774722482800026253e-23,
    -4.0329291576886598435e-23,
    -9.9388919056308327207e-24,
    4.3196949265822748114e-24,
    4.2580939772269977095e-24,
    1.0460563924693331937e-24,
    1.4782872471860633022e-24,
    -2.8117013476785112028e-25,
    -9.3965776856165989941e-25,
    -5.7606527667479259660e-28,
    3.4469727737931897597e-27,
    1.7928529439526048166e-27,
    9.8190444917742395176e-29,
    -2.2998953682031221825e-28,
)

A3 = (
    -0.00035421197145774384077,
    -0.00031232252789031883278,
    0.00037164422375022963016,
    0.00075392691559777321409,
    0.00034083000594447369044,
    -0.00026349681720695925477,
    -0.00040892757266484300840,
    -0.00015011087595634596426,
    0.000099640152055380553635,
    0.00013524929557512825360,
    0.000044431170872729014425,
    -0.000027132050719141159821,
    -0.000033967969697718593322,
    -0.000010407088652730428271,
    6.0246390654144118640e-6,
    7.1439196078468864487e-6,
    2.0860099803254892112e-6,
    -1.1633426642485275335e-6,
    -1.3266411352055974078e-6,
    -3.7397399891638989745e-7,
    2.0287712537441608400e-7,
    2.2463764130164302510e-7,
    6.1642063326132940237e-8,
    -3.2735144487843876527e-8,
    -3.5420920083151068245e-8,
    -9.5152146995673084664e-9,
    4.9681366690037877237e-9,
    5.2771718001830238927e-9,
    1.3934087132187746359e-9,
    -7.1755092154671808306e-10,
    -7.5068866513353525973e-10,
    -1.9541265823326347023e-10,
    9.9480762039637469167e-11,
    1.0276108841870925265e-10,
    2.6431593194224369903e-11,
    -1.3325899109801184646e-11,
    -1.3617742471582919986e-11,
    -3.4671226148395522414e-12,
    1.7335445549270324553e-12,
    1.7551825243715128965e-12,
    4.4296056084303675738e-13,
    -2.1989053520994391963e-13,
    -2.2085230245769016234e-13,
    -5.5311454806833543764e-14,
    2.7284982643835800227e-14,
    2.7211881838029790389e-14,
    6.7693140658600281754e-15,
    -3.3207954965166867451e-15,
    -3.2913394149572218249e-15,
    -8.1388951749494898098e-16,
    3.9730086580164500282e-16,
    3.9160041328556922488e-16,
    9.6321318488716931149e-17,
    -4.6812115209673432618e-17,
    -4.5911973570199470188e-17,
    -1.1239024142213474372e-17,
    5.4404836202851047622e-18,
    5.3120600508007580981e-18,
    1.2947659939669727482e-18,
    -6.2450668781421919254e-19,
    -6.0730072643380275819e-19,
    -1.4744563488733258025e-19,
    7.0885284701437998574e-20,
    6.8678801252261790589e-20,
    1.6615048615724348394e-20,
    -7.9639242133506735558e-21,
    -7.6900967031914998034e-21,
    -1.8543565851785658547e-21,
    8.8639577930765772902e-22,
    8.5327977209587838701e-22,
    2.0514034844499329495e-22,
    -9.7811321212741877734e-23,
    -9.3889839645576055263e-23,
    -2.2510155413317732258e-23,
    -3.5566046637726806959e-23,
    6.4782813079829211006e-24,
    2.2883016484759084359e-23,
    -9.8697930760374381455e-26,
    -4.9670610787931344131e-26,
    -1.3344518513164700578e-26,
    2.3169916426368102645e-27,
    1.3557097824973567704e-27,
    4.2155405532432525365e-28,
    -3.5320097357000348423e-29,
)

B3 = (
    -0.00047461779655995980754,
    -0.00095572913429464297452,
    -0.00051697760483243603420,
    0.00047766924505036278019,
    0.00086316960233949642095,
    0.00036264440777123499722,
    -0.00027176631052893076337,
    -0.00041084311835756857004,
    -0.00014883661659213049103,
    0.000099376610993207154965,
    0.00013507384691366091573,
    0.000044659101704560835434,
    -0.000027736505755798453075,
    -0.000035143435947234010569,
    -0.000010921037507700214618,
    6.4536905127128195817e-6,
    7.7794610507291777061e-6,
    2.3114746085651797345e-6,
    -1.3171961754626900034e-6,
    -1.5297160814654128612e-6,
    -4.3932590852655409388e-7,
    2.4349785175508843600e-7,
    2.7472420043915645019e-7,
    7.6823005230601293860e-8,
    -4.1656749344325010973e-8,
    -4.5925460487136507111e-8,
    -1.2569456422287198811e-8,
    6.6958258481699968056e-9,
    7.2438588861454789248e-9,
    1.9478364752755505426e-9,
    -1.0225100448041468164e-9,
    -1.0889355186924470345e-9,
    -2.8850400937946247146e-10,
    1.4959161997993074331e-10,
    1.5720415031106623022e-10,
    4.1128887690109788784e-11,
    -2.1102326068717372559e-11,
    -2.1924830617341852528e-11,
    -5.6743477519926253540e-12,
    2.8850415367749656005e-12,
    2.9680307877342484777e-12,
    7.6095459680215626561e-13,
    -3.8384135020314316537e-13,
    -3.9148537628383319482e-13,
    -9.9544568997250828501e-14,
    4.9863211622431745545e-14,
    5.0470037170851975332e-14,
    1.2739770644924032815e-14,
    -6.3421463378238384235e-15,
    -6.3759894905959901233e-15,
    -1.5989982858638810441e-15,
    7.9162900340880381906e-16,
    7.9104490050313521432e-16,
    1.9722712952116812475e-16,
    -9.7158894905718878373e-17,
    -9.6559208064175430049e-17,
    -2.3948252727095205032e-17,
    1.1744641389705311999e-17,
    1.1614713032088362099e-17,
    2.8669337594341228847e-18,
    -1.4002726475079004985e-18,
    -1.3785864356230634415e-18,
    -3.3881125565420286812e-19,
    1.6486827884528143637e-19,
    1.6165189015989347683e-19,
    3.9571364143370310418e-20,
    -1.9190233409189385427e-20,
    -1.8745396325414222852e-20,
    -4.5720721856099410692e-21,
    2.2103010542569526778e-21,
    2.1516274048385892264e-21,
    5.2303259241100325954e-22,
    8.3389392004183043590e-22,
    -1.5490276479361385668e-22,
    -5.5167334023095015675e-22,
    2.4911303889975600486e-24,
    1.3185044018654225923e-24,
    3.6308403634430281341e-25,
    -6.4931801320108568595e-26,
    -4.4699439341087068294e-26,
    -1.4510216213650761736e-26,
    1.4284781942093601552e-27,
    1.0551328454754464511e-27,
    4.0378899356953874851e-28,
)

C3 = (
    0.00044449504159914047066,
    0.00047206393050169569507,
    -0.00028864153783641740989,
    -0.00080144890669832811646,
    -0.00042727004923891657862,
    0.00023100388518378941305,
    0.00043179624030948302536,
    0.00018010947364823413394,
    -0.000091027153483979890398,
    -0.00014246009148720917399,
    -0.000052120896292622283969,
    0.000025355332189872839652,
    0.000035736024511957621205,
    0.000012033636772306129645,
    -5.7146736823856149345e-6,
    -7.5108343077851238963e-6,
    -2.3875067747599069870e-6,
    1.1154401541930393111e-6,
    1.3942514149458251912e-6,
    4.2472974614754196232e-7,
    -1.9613684707441552677e-7,
    -2.3603425919373037611e-7,
    -6.9582333430543474278e-8,
    3.1857054353586807872e-8,
    3.7213388031989502122e-8,
    1.0687686588566507199e-8,
    -4.8611842075829897584e-9,
    -5.5438861041577401469e-9,
    -1.5586420321447079313e-9,
    7.0531756706641462839e-10,
    7.8861374838299227875e-10,
    2.1781859805719118035e-10,
    -9.8167989224768626159e-11,
    -1.0795346371593566380e-10,
    -2.9373192347532653804e-11,
    1.3194817324381943258e-11,
    1.4306210771726067653e-11,
    3.8428233023211541592e-12,
    -1.7216294242451890391e-12,
    -1.8439922060759428585e-12,
    -4.8981905475414903666e-13,
    2.1895944764738151526e-13,
    2.3203844138770237225e-13,
    6.1036135717989294825e-14,
    -2.7234097342025872175e-14,
    -2.8591733202557394889e-14,
    -7.4560932303420047068e-15,
    3.3217168375602500058e-15,
    3.4584402350648226040e-15,
    8.9496420656355778069e-16,
    -3.9818550052778814329e-16,
    -4.1150735773353736782e-16,
    -1.0575560694882925465e-16,
    4.6999814708716322181e-17,
    4.8248962295264845748e-17,
    1.2322766307651806128e-17,
    -5.4712145744623017408e-18,
    -5.5828105898781302508e-18,
    -1.4178154568966636704e-18,
    6.2897914193138151267e-19,
    6.3829540345484275564e-19,
    1.6126978631240610546e-19,
    -7.1492330297584472003e-20,
    -7.2188585227593504347e-20,
    -1.8153231451429121285e-20,
    8.0425110162489574523e-21,
    8.0836091076592821851e-21,
    2.0240020057991281928e-21,
    -8.9622108069242551287e-22,
    -8.9699971079161310713e-22,
    -2.2369922727487473903e-22,
    9.9006875043697736252e-23,
    9.8706646202379682989e-23,
    2.4525322156630371457e-23,
    3.5423725303620332677e-23,
    -6.7580818265535909742e-24,
    -2.3065891976949623497e-23,
    -1.8861424571292540466e-26,
    8.0698935331920593197e-26,
    4.3500075302997676873e-26,
    2.7986144380430503111e-27,
    -5.3655970477064257350e-27,
    -3.1322619208398226328e-27,
    -3.1758912101520265723e-28,
)

D3 = (
    0.00030411820027440495964,
    0.000060823640054880991927,
    -0.00065404954010910357823,
    -0.00056263137475312629788,
    0.00038787208009105927552,
    0.00091702606941585590342,
    0.00045753566451173950831,
    -0.00026617443061210476603,
    -0.00047491456475520269371,
    -0.00019460398289219234775,
    0.00010482190465092878487,
    0.00016187285592975980921,
    0.000059220488916761492043,
    -0.000030480779763360814654,
    -0.000042969866603426771312,
    -0.000014580184796076883839,
    7.2825350396812317782e-6,
    9.6346829336955755379e-6,
    3.0970016193856748773e-6,
    -1.5144547632190486559e-6,
    -1.9114931862230302830e-6,
    -5.8979192119746281899e-7,
    2.8392466046292855034e-7,
    3.4555411944108711344e-7,
    1.0324814590443520446e-7,
    -4.9109969501393569369e-8,
    -5.8059229485598273724e-8,
    -1.6903005605015064398e-8,
    7.9642724190686551233e-9,
    9.1946432382760668419e-9,
    2.6201162851079723592e-9,
    -1.2251852442415465709e-9,
    -1.3867272002517927263e-9,
    -3.8811021753754120399e-10,
    1.8035762383723824169e-10,
    2.0074157844784092586e-10,
    5.5326153579237960864e-11,
    -2.5577939983032195352e-11,
    -2.8061537019666572467e-11,
    -7.6321024184721099483e-12,
    3.5131063888099352573e-12,
    3.8063000681698697317e-12,
    1.0233134065404602023e-12,
    -4.6929973884450578647e-13,
    -5.0291685545193049651e-13,
    -1.3383645051941905263e-13,
    6.1184010518215532255e-14,
    6.4933456609187008657e-14,
    1.7124433299461620453e-14,
    -7.8070504353417454390e-15,
    -8.2141260834414075729e-15,
    -2.1487951708041742056e-15,
    9.7729556637018230229e-16,
    1.0203075093571766155e-15,
    2.6497408339829322409e-16,
    -1.2026017617854563092e-16,
    -1.2467721044391231444e-16,
    -3.2166175765416572670e-17,
    1.4571777286282850658e-17,
    1.5011375539915941239e-17,
    3.8497498388089009966e-18,
    -1.7411295647274398484e-18,
    -1.7833074416755598132e-18,
    -4.5484477364213300926e-19,
    2.0541154979659589493e-19,
    2.0927629410749688374e-19,
    5.3110306080638589175e-20,
    -2.3953569629900325693e-20,
    -2.4285778102405273829e-20,
    -6.1348724737267099763e-21,
    2.7636592367253054020e-21,
    2.7894418325053987345e-21,
    7.0164660096632710239e-22,
    1.0338070742153185308e-21,
    -1.9847813603930297822e-22,
    -6.9057862163929594329e-22,
    -6.7079051284217592135e-25,
    2.3505358475799255783e-24,
    1.3038027047813032906e-24,
    9.2059417528580373822e-26,
    -1.5720583161978690557e-25,
    -9.4919494104899721968e-26,
    -1.0507946873043913876e-26,
    1.1443153318839124078e-26,
)
