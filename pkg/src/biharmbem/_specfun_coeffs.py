"""Chebyshev coefficient tables for the real Bessel family.

Generated by scripts/gen_specfun_coeffs.py -- do not edit by hand.
"""

# fmt: off
J0_SMALL = (
    0.1577279714748901,
    -0.008723442352852414,
    0.26517861320333674,
    -0.3700949938726499,
    0.15806710233209734,
    -0.03489376941140909,
    0.004819180069467497,
    -0.00046062616620608075,
    3.246032882094891e-05,
    -1.7619469076661919e-06,
    7.60816359014521e-08,
    -2.6792534887021034e-09,
    7.848692475933526e-11,
    -1.943839283496886e-12,
    4.116134726774025e-14,
    -6.722143704771835e-16,
    2.036182701655894e-17,
    -1.095130963615457e-17,
    -6.181069133929183e-17,
    5.687614939929225e-17,
    -1.1478413913127862e-16,
    -2.897908482100048e-17,
    5.0463984995836004e-18,
    -8.104318443036977e-18,
    -9.875945007808228e-17,
    4.1818292226487676e-18,
    -6.121438493180733e-17,
    1.986338474728947e-17,
    -7.775003917487176e-17,
)

J1_SMALL = (
    0.0810448463256581,
    -0.14897514506765216,
    0.16099926235720965,
    -0.08268049176681791,
    0.022213639654966016,
    -0.0036469406007693128,
    0.00040503377283543314,
    -3.255554866846718e-05,
    1.985877404944454e-06,
    -9.52198475222113e-08,
    3.6871337368619662e-09,
    -1.1780264861705792e-10,
    3.160156312734402e-12,
    -7.215651350840792e-14,
    1.3594196651062432e-15,
    5.792725133983881e-17,
    1.0140846827109033e-17,
    3.634159526769008e-17,
    -2.152713808195268e-17,
    7.100459735972667e-17,
    -3.3584102929847734e-17,
    6.695920519276809e-18,
    2.3723384464328166e-17,
    -2.4421514159772376e-18,
    -1.43544760660121e-17,
    -1.0597518391574556e-17,
    9.1717408042063e-18,
    4.300906566629942e-17,
    -2.057365508862514e-17,
)

Y0_SMALL = (
    0.03645469809116044,
    -0.27832370940758244,
    0.2960499990207149,
    0.09825508408187866,
    -0.10755155280627787,
    0.031799074084414444,
    -0.005161397105810702,
    0.0005498525320040498,
    -4.1996983149507785e-05,
    2.4290361108987425e-06,
    -1.1049969782724833e-07,
    4.066517446693768e-09,
    -1.2374147959249922e-10,
    3.168610562555162e-12,
    -6.934928730423372e-14,
    1.3838639580237366e-15,
    -7.252833242398624e-18,
    6.746216395970105e-17,
    1.2188086869805454e-17,
    6.415157952487757e-17,
    -6.6189534972933015e-18,
    -3.669831488607531e-17,
    3.803888260328809e-17,
    -3.80366672309344e-17,
    5.747980271549217e-17,
    3.159149518233164e-17,
    4.225810145359586e-17,
    -2.0752860801017114e-17,
    -9.718244683748357e-18,
)

Y1_SMALL = (
    0.038300769852423776,
    -0.08182561412732825,
    -0.024867707612196446,
    0.04796745275274701,
    -0.01852588451089801,
    0.003680607687823521,
    -0.00046272540602933693,
    4.069400269583066e-05,
    -2.6617695125299504e-06,
    1.3506026911593352e-07,
    -5.483524083234817e-09,
    1.8245087614582418e-10,
    -5.070661020749177e-12,
    1.1956112036357624e-13,
    -2.4167797206769455e-15,
    4.067278504317632e-17,
    -2.566114549332961e-19,
    2.0603889318185967e-17,
    1.8668740140943265e-17,
    2.5279431541546406e-18,
    1.4855251794385846e-17,
    5.380434717649421e-18,
    8.749651441066375e-18,
    1.0608731801319308e-17,
    2.7675003036942943e-17,
    1.713271064808251e-17,
    2.951984833666859e-17,
    2.0717992543670626e-17,
    2.752286540296341e-17,
)

P0_LARGE = (
    0.9994603493475187,
    -0.0005365220468132166,
    3.075184787514156e-06,
    -5.170594538372026e-08,
    1.6306464549051499e-09,
    -7.86409199803317e-11,
    5.168254209978973e-12,
    -4.304661899658613e-13,
    4.3259896272710777e-14,
    -5.072999435922259e-15,
    6.687366813954217e-16,
    -1.0843649956106376e-16,
    1.1776554613636041e-17,
    -9.914280900400667e-18,
    -6.219124704285475e-18,
    -1.2956779661060138e-17,
    -6.269201857576713e-18,
    -7.373177069087027e-18,
    -3.1357384448449427e-18,
)

Q0_LARGE = (
    -0.12444683684269608,
    0.0005470815954089313,
    -5.931598728848858e-06,
    1.4377965798420046e-07,
    -5.81753274990337e-09,
    3.37609752420768e-10,
    -2.5653979505309498e-11,
    2.4049160403275157e-12,
    -2.6690617433099525e-13,
    3.404150523888873e-14,
    -4.880069277790604e-15,
    7.723539391706376e-16,
    -1.33550900852255e-16,
    2.4690010926887933e-17,
    -5.048395638701135e-18,
    1.194107363287191e-18,
    -5.164132658440373e-19,
    -7.776805475553307e-19,
    -1.0315452873435457e-20,
)

P1_LARGE = (
    1.0009030408600135,
    0.0008989898330859151,
    -3.987284300511455e-06,
    6.17763395743152e-08,
    -1.8718907780013724e-09,
    8.816895952171976e-11,
    -5.70489124625103e-12,
    4.698965940950049e-13,
    -4.687226383570875e-14,
    5.4255655123366316e-15,
    -7.51614252557214e-16,
    8.430973901421844e-17,
    -4.2982783222628614e-17,
    -2.1844554085634995e-17,
    -2.262110231008389e-17,
    -1.8746226067664245e-17,
    -1.9366087346153372e-17,
    -3.095253218240366e-17,
    -2.1606412259599508e-17,
)

Q1_LARGE = (
    0.3742222965562826,
    -0.000770217883932567,
    7.310892206363411e-06,
    -1.6767825107378373e-07,
    6.5833546612248085e-09,
    -3.749090974494779e-10,
    2.8121748476256773e-11,
    -2.6114525289621887e-12,
    2.877409823960005e-13,
    -3.649128840597557e-14,
    5.2046586108577915e-15,
    -8.243768442288551e-16,
    1.3883169459008968e-16,
    -2.7671808567579018e-17,
    4.730724654539525e-18,
    -2.9478052956986417e-18,
    -1.7793052733214994e-18,
    -2.0464165364563456e-18,
    2.1146021055886005e-18,
)

K0_SMALL = (
    -0.2676636966169514,
    0.3442898999246284,
    0.035979936515361514,
    0.0012646154114468902,
    2.2862121031140082e-05,
    2.5347910790655184e-07,
    1.904516441376987e-09,
    1.0349669093093715e-11,
    4.266037794473566e-14,
    1.7412488966774805e-16,
    1.0676417139975229e-17,
    -3.0168928069702626e-17,
    -1.4969794924170788e-17,
    3.712134679565847e-17,
    -4.5960925137336245e-17,
    2.3759052448424078e-17,
    3.095758231800632e-17,
    -4.5398253295563464e-17,
    -6.622196157827184e-17,
    -8.266278440013061e-17,
    -6.08971721663479e-17,
)

K1_SMALL = (
    -0.06409034516866258,
    -0.10916919599320107,
    -0.006636878452817733,
    -0.00016822792382065326,
    -2.38955918079348e-06,
    -2.1853569027279904e-08,
    -1.3982273013499934e-10,
    -6.618436996397195e-13,
    -2.441515439466754e-15,
    -2.4350495230506042e-17,
    -1.1538906054445252e-17,
    1.6019979923503973e-17,
    6.430912071242408e-19,
    -1.1696264976245238e-17,
    -4.477777159546158e-18,
    -1.6019979923503973e-17,
    -1.729752840210325e-17,
    9.579652780155625e-19,
    9.603982752353195e-18,
    7.932958855608272e-18,
    5.763959573794639e-18,
)

K0_LARGE = (
    1.2201515410329777,
    -0.03144810131196452,
    0.0015698838857300364,
    -0.00012849549581627558,
    1.3949813718875635e-05,
    -1.8317555227236382e-06,
    2.7668136393663684e-07,
    -4.6604898961021334e-08,
    8.574034009220358e-09,
    -1.6975345157118e-09,
    3.5773973992742827e-10,
    -7.957488940609538e-11,
    1.8559486044584494e-11,
    -4.514595661623765e-12,
    1.1403366573831894e-12,
    -2.980044382071848e-13,
    8.032350737556624e-14,
    -2.226855636400332e-14,
    6.337187565684856e-15,
    -1.8517354329152805e-15,
    5.556200871967413e-16,
    -1.6930830796654394e-16,
    4.7166661031519864e-17,
    -1.908929495870197e-17,
    4.370783766786417e-18,
    -2.0392979186021546e-18,
    3.598370044733997e-18,
    -3.328857038300426e-18,
    6.208644261554427e-18,
)

K1_LARGE = (
    1.3603130952422213,
    0.10392373657681728,
    -0.0028578168596227306,
    0.00019521551847135184,
    -1.9361979741679234e-05,
    2.4064849478614514e-06,
    -3.501960602970035e-07,
    5.7410841211383527e-08,
    -1.0345762463085486e-08,
    2.0150497746217443e-09,
    -4.1903551833961466e-10,
    9.218315024978578e-11,
    -2.1299688897848156e-11,
    5.1396172302977985e-12,
    -1.2891906287066315e-12,
    3.348167125064481e-13,
    -8.97682925773683e-14,
    2.4746363557417617e-14,
    -7.031438033753093e-15,
    2.0330780468885557e-15,
    -6.187924885497696e-16,
    1.79714004414931e-16,
    -6.892814708220336e-17,
    -3.6399516965011674e-18,
    -4.190368263470048e-17,
    -1.6177829222294205e-17,
    -1.5820880136672394e-17,
    -1.6707179996290336e-17,
    -1.2366761357752678e-17,
)

I0_LARGE = (
    0.40036165849059063,
    0.0014310620272585655,
    1.1867852124172574e-05,
    1.8831871202204045e-07,
    4.5494807358737785e-09,
    1.5096220520134405e-10,
    6.499217717937371e-12,
    3.5067297685617437e-13,
    2.3217846539437723e-14,
    1.8695411577317715e-15,
    1.8787518294597737e-16,
    2.7053234734497375e-17,
    8.751028527508774e-18,
    9.354606854628593e-18,
    6.458273386070892e-18,
    6.448380817341283e-18,
    4.855804480751254e-18,
    6.104015746551566e-18,
    6.039570632613724e-18,
    6.778756840202564e-18,
    6.086145493114028e-18,
)

I1_LARGE = (
    0.3947301632932976,
    -0.004231350807281437,
    -1.9487766173356857e-05,
    -2.5965080870017056e-07,
    -5.758145088500726e-09,
    -1.8154280232540513e-10,
    -7.553111709529342e-12,
    -3.9762520648718193e-13,
    -2.5837653697352264e-14,
    -2.0488100624158264e-15,
    -2.00298515635973e-16,
    -2.973574117262908e-17,
    -8.97797201024011e-18,
    -5.897457252888242e-18,
    -5.926755470854117e-18,
    -5.768960510859124e-18,
    -5.526138244524207e-18,
    -6.933940825146769e-18,
    -4.273837507086155e-18,
    -7.529525961469756e-18,
    -4.0168440230279185e-18,
)

# fmt: on
