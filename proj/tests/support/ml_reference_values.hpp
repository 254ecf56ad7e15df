#pragma once

// E_{alpha,beta}(z) reference values. Computed once with mpmath at 40 digits:
// Talbot inversion of the Laplace transform s^(alpha-beta)/(s^alpha - z) at t = 1,
// cross-checked against 400-digit Taylor summation for |z| <= 3 and against
// exp(x^2) erfc(x) for alpha = 1/2.

#include <array>

namespace fracfem::test {

struct MlReference {
  double alpha;
  double beta;
  double z;
  double value;
};

inline constexpr std::array kMlReference = {
        MlReference{0.05, 1.0, -0.001, 0.9989738332010581152},
        MlReference{0.05, 1.0, -0.5, 0.66037435858918413858},
        MlReference{0.05, 1.0, -1, 0.49278415120025198007},
        MlReference{0.05, 1.0, -2, 0.32679785032647428789},
        MlReference{0.05, 1.0, -3, 0.24443463564564761265},
        MlReference{0.05, 1.0, -5, 0.1625064566493486901},
        MlReference{0.05, 1.0, -10, 0.088413247385113022776},
        MlReference{0.05, 1.0, -30, 0.031309371072551648528},
        MlReference{0.05, 1.0, -100, 0.0096023707669509429959},
        MlReference{0.05, 1.0, -1000, 0.00096857094511309726067},
        MlReference{0.05, 1.0, -100000, 9.6949646810526595304e-6},
        MlReference{0.05, 1.0, -100000000, 9.6950581644479986696e-9},
        MlReference{0.05, 0.05, -0.001, 0.051255890110074606563},
        MlReference{0.05, 0.05, -0.5, 0.022448221972544413973},
        MlReference{0.05, 0.05, -1, 0.012510261113665815453},
        MlReference{0.05, 0.05, -2, 0.0055051315603768900756},
        MlReference{0.05, 0.05, -3, 0.0030805340042361256735},
        MlReference{0.05, 0.05, -5, 0.0013617819046503493367},
        MlReference{0.05, 0.05, -10, 0.00040312369481004559525},
        MlReference{0.05, 0.05, -30, 0.000050555248895198107142},
        MlReference{0.05, 0.05, -100, 4.7552826142246878116e-6},
        MlReference{0.05, 0.05, -1000, 4.8381848079886172638e-8},
        MlReference{0.05, 0.05, -100000, 4.8474355524891607825e-12},
        MlReference{0.05, 0.05, -100000000, 4.8475290354350641881e-18},
        MlReference{0.1, 1.0, -0.001, 0.99894995100519270522},
        MlReference{0.1, 1.0, -0.5, 0.6543244602880019291},
        MlReference{0.1, 1.0, -1, 0.48556446431108210239},
        MlReference{0.1, 1.0, -2, 0.32001533595972739937},
        MlReference{0.1, 1.0, -3, 0.2385593497825385582},
        MlReference{0.1, 1.0, -5, 0.15804238235845182842},
        MlReference{0.1, 1.0, -10, 0.08569695701065468541},
        MlReference{0.1, 1.0, -30, 0.030265975870874652001},
        MlReference{0.1, 1.0, -100, 0.0092726572313118583365},
        MlReference{0.1, 1.0, -1000, 0.00093492055360589073893},
        MlReference{0.1, 1.0, -100000, 9.3577013161971817339e-6},
        MlReference{0.1, 1.0, -100000000, 9.3577871232350265797e-9},
        MlReference{0.1, 0.1, -0.001, 0.10489620954945799733},
        MlReference{0.1, 0.1, -0.5, 0.045397940282298665648},
        MlReference{0.1, 0.1, -1, 0.025082402118662145322},
        MlReference{0.1, 0.1, -2, 0.010921416524860290869},
        MlReference{0.1, 0.1, -3, 0.0060745407799221391676},
        MlReference{0.1, 0.1, -5, 0.002667757872528246124},
        MlReference{0.1, 0.1, -10, 0.00078467401305859583875},
        MlReference{0.1, 0.1, -30, 0.000097887565462365510376},
        MlReference{0.1, 0.1, -100, 9.1882843740495686118e-6},
        MlReference{0.1, 0.1, -1000, 9.340631553407733935e-8},
        MlReference{0.1, 0.1, -100000, 9.35761542403600549e-12},
        MlReference{0.1, 0.1, -100000000, 9.357787037341326198e-18},
        MlReference{0.3, 1.0, -0.001, 0.99888687562755948596},
        MlReference{0.3, 1.0, -0.5, 0.63264900594359902138},
        MlReference{0.3, 1.0, -1, 0.45659440832969066901},
        MlReference{0.3, 1.0, -2, 0.29023222616787535326},
        MlReference{0.3, 1.0, -3, 0.21180263319643578039},
        MlReference{0.3, 1.0, -5, 0.13708086902027063758},
        MlReference{0.3, 1.0, -10, 0.072649729072772085356},
        MlReference{0.3, 1.0, -30, 0.025182617502927663063},
        MlReference{0.3, 1.0, -100, 0.0076588562222866413892},
        MlReference{0.3, 1.0, -1000, 0.00076993246495257768237},
        MlReference{0.3, 1.0, -100000, 7.7037867563508559658e-6},
        MlReference{0.3, 1.0, -100000000, 7.7038317935832401741e-9},
        MlReference{0.3, 0.3, -0.001, 0.33360218228247227888},
        MlReference{0.3, 0.3, -0.5, 0.14375650014722127361},
        MlReference{0.3, 0.3, -1, 0.077316799030089675954},
        MlReference{0.3, 0.3, -2, 0.032062399218847496015},
        MlReference{0.3, 0.3, -3, 0.017243316421744134765},
        MlReference{0.3, 0.3, -5, 0.0072751008031549118806},
        MlReference{0.3, 0.3, -10, 0.0020517863032276150783},
        MlReference{0.3, 0.3, -30, 0.00024690078959965228185},
        MlReference{0.3, 0.3, -100, 0.000022841967214289510715},
        MlReference{0.3, 0.3, -1000, 2.3084455544850575938e-7},
        MlReference{0.3, 0.3, -100000, 2.3111225022423507238e-11},
        MlReference{0.3, 0.3, -100000000, 2.3111495245502461395e-17},
        MlReference{0.5, 1.0, -0.001, 0.99887262008115140863},
        MlReference{0.5, 1.0, -0.5, 0.61569034419292587487},
        MlReference{0.5, 1.0, -1, 0.42758357615580700441},
        MlReference{0.5, 1.0, -2, 0.25539567631050574387},
        MlReference{0.5, 1.0, -3, 0.17900115118138995042},
        MlReference{0.5, 1.0, -5, 0.11070463773306862637},
        MlReference{0.5, 1.0, -10, 0.056140992743822585858},
        MlReference{0.5, 1.0, -30, 0.018795888861416751497},
        MlReference{0.5, 1.0, -100, 0.0056416137829894329036},
        MlReference{0.5, 1.0, -1000, 0.0005641893014533876542},
        MlReference{0.5, 1.0, -100000, 5.6418958351954680777e-6},
        MlReference{0.5, 1.0, -100000000, 5.6418958354775625874e-9},
        MlReference{0.5, 0.5, -0.001, 0.56319071092767513554},
        MlReference{0.5, 0.5, -0.5, 0.25634441145129334951},
        MlReference{0.5, 0.5, -1, 0.13660600739194928254},
        MlReference{0.5, 0.5, -2, 0.053398230926744799218},
        MlReference{0.5, 0.5, -3, 0.02718613000358643569},
        MlReference{0.5, 0.5, -5, 0.010666394882413155097},
        MlReference{0.5, 0.5, -10, 0.0027796561095304283729},
        MlReference{0.5, 0.5, -30, 0.00031291770525374203432},
        MlReference{0.5, 0.5, -100, 0.000028205248812996592434},
        MlReference{0.5, 0.5, -1000, 2.8209436863274833442e-7},
        MlReference{0.5, 0.5, -100000, 2.8209479173156392472e-11},
        MlReference{0.5, 0.5, -100000000, 2.8209479177387810116e-17},
        MlReference{0.7, 1.0, -0.001, 0.99890025718286446054},
        MlReference{0.7, 1.0, -0.5, 0.60514759205956427126},
        MlReference{0.7, 1.0, -1, 0.39961197811559938437},
        MlReference{0.7, 1.0, -2, 0.21378672701529726519},
        MlReference{0.7, 1.0, -3, 0.13789710966502707183},
        MlReference{0.7, 1.0, -5, 0.077569357764769801692},
        MlReference{0.7, 1.0, -10, 0.036173265542309153332},
        MlReference{0.7, 1.0, -30, 0.011444251527526971691},
        MlReference{0.7, 1.0, -100, 0.0033696874163059937557},
        MlReference{0.7, 1.0, -1000, 0.00033454145717409954579},
        MlReference{0.7, 1.0, -100000, 3.3427543859437357452e-6},
        MlReference{0.7, 1.0, -100000000, 3.3427275525021045404e-9},
        MlReference{0.7, 0.7, -0.001, 0.76925707835149316755},
        MlReference{0.7, 0.7, -0.5, 0.38661080082252713365},
        MlReference{0.7, 0.7, -1, 0.2103933463890237074},
        MlReference{0.7, 0.7, -2, 0.077358224338521227992},
        MlReference{0.7, 0.7, -3, 0.035901729730841233827},
        MlReference{0.7, 0.7, -5, 0.012201124167156127016},
        MlReference{0.7, 0.7, -10, 0.0027247024931022995986},
        MlReference{0.7, 0.7, -30, 0.0002741428200864544974},
        MlReference{0.7, 0.7, -100, 0.000023777205523569578793},
        MlReference{0.7, 0.7, -1000, 2.3436718486240696723e-7},
        MlReference{0.7, 0.7, -100000, 2.3399468724439467354e-11},
        MlReference{0.7, 0.7, -100000000, 2.3399093055536125508e-17},
        MlReference{0.9, 1.0, -0.001, 0.99896084210999752737},
        MlReference{0.9, 1.0, -0.5, 0.60340549869586096762},
        MlReference{0.9, 1.0, -1, 0.37606602142464188118},
        MlReference{0.9, 1.0, -2, 0.16352830001693004885},
        MlReference{0.9, 1.0, -3, 0.08388835403377326904},
        MlReference{0.9, 1.0, -5, 0.034431324804098423905},
        MlReference{0.9, 1.0, -10, 0.012820606051102102705},
        MlReference{0.9, 1.0, -30, 0.0037137076984598529581},
        MlReference{0.9, 1.0, -100, 0.001068972418287089285},
        MlReference{0.9, 1.0, -1000, 0.00010528835943209591488},
        MlReference{0.9, 1.0, -100000, 1.0511544325003105693e-6},
        MlReference{0.9, 1.0, -100000000, 1.0511370235377689422e-9},
        MlReference{0.9, 0.9, -0.001, 0.93470569675072222593},
        MlReference{0.9, 0.9, -0.5, 0.53190235156843732495},
        MlReference{0.9, 0.9, -1, 0.30814879777662194201},
        MlReference{0.9, 0.9, -2, 0.1105980242932084808},
        MlReference{0.9, 0.9, -3, 0.0441512717830377251},
        MlReference{0.9, 0.9, -5, 0.010212790452992133754},
        MlReference{0.9, 0.9, -10, 0.0014346523622941288355},
        MlReference{0.9, 0.9, -30, 0.00011825044794307209151},
        MlReference{0.9, 0.9, -100, 9.7850635889096929541e-6},
        MlReference{0.9, 0.9, -1000, 9.4917076469339176804e-8},
        MlReference{0.9, 0.9, -100000, 9.4605467335798537171e-12},
        MlReference{0.9, 0.9, -100000000, 9.4602333686738442721e-18},
        MlReference{0.95, 1.0, -0.001, 0.99898001459028864059},
        MlReference{0.95, 1.0, -0.5, 0.60461402734213172754},
        MlReference{0.95, 1.0, -1, 0.37157362003067881032},
        MlReference{0.95, 1.0, -2, 0.14962506184111459529},
        MlReference{0.95, 1.0, -3, 0.067532022214071890132},
        MlReference{0.95, 1.0, -5, 0.021268437291731109074},
        MlReference{0.95, 1.0, -10, 0.0065071353122560575398},
        MlReference{0.95, 1.0, -30, 0.0018277746789235501102},
        MlReference{0.95, 1.0, -100, 0.00052333064394704048564},
        MlReference{0.95, 1.0, -1000, 0.000051455699278570080142},
        MlReference{0.95, 1.0, -100000, 5.1361789312170440789e-7},
        MlReference{0.95, 1.0, -100000000, 5.1360844209607151235e-10},
        MlReference{0.95, 0.95, -0.001, 0.9684666430861407648},
        MlReference{0.95, 0.95, -0.5, 0.56928324669753816136},
        MlReference{0.95, 0.95, -1, 0.33712250268371991166},
        MlReference{0.95, 0.95, -2, 0.1220131765462609838},
        MlReference{0.95, 0.95, -3, 0.046673470882574238209},
        MlReference{0.95, 0.95, -5, 0.0087528567620237399214},
        MlReference{0.95, 0.95, -10, 0.00082191087848318474863},
        MlReference{0.95, 0.95, -30, 0.000061928901157317391824},
        MlReference{0.95, 0.95, -100, 5.066582023680215275e-6},
        MlReference{0.95, 0.95, -1000, 4.897326937059608442e-8},
        MlReference{0.95, 0.95, -100000, 4.8794598616737106242e-12},
        MlReference{0.95, 0.95, -100000000, 4.8792802897848981931e-18},
        MlReference{0.999, 1.0, -0.001, 0.99900007820493659061},
        MlReference{0.999, 1.0, -0.5, 0.60648529133691131558},
        MlReference{0.999, 1.0, -1, 0.36794468034194146967},
        MlReference{0.999, 1.0, -2, 0.13562392299454344287},
        MlReference{0.999, 1.0, -3, 0.050156199194891236237},
        MlReference{0.999, 1.0, -5, 0.0070439569266840405896},
        MlReference{0.999, 1.0, -10, 0.00017584834590871150439},
        MlReference{0.999, 1.0, -30, 0.000035830164124046603036},
        MlReference{0.999, 1.0, -100, 0.000010211830300787619001},
        MlReference{0.999, 1.0, -1000, 1.0025808660865953127e-6},
        MlReference{0.999, 1.0, -100000, 1.0005965433334286291e-8},
        MlReference{0.999, 1.0, -100000000, 1.0005765797279845497e-11},
        MlReference{0.999, 0.999, -0.001, 0.9984217850821690047},
        MlReference{0.999, 0.999, -0.5, 0.60578914109663759921},
        MlReference{0.999, 0.999, -1, 0.36724764916903786158},
        MlReference{0.999, 0.999, -2, 0.13504774903857241912},
        MlReference{0.999, 0.999, -3, 0.049716804248493058455},
        MlReference{0.999, 0.999, -5, 0.0067842453147721392145},
        MlReference{0.999, 0.999, -10, 0.000062786560858997956872},
        MlReference{0.999, 0.999, -30, 1.2856687177175941635e-6},
        MlReference{0.999, 0.999, -100, 1.0413970381449227646e-7},
        MlReference{0.999, 0.999, -1000, 1.0035866126776674452e-9},
        MlReference{0.999, 0.999, -100000, 9.996159109927243923e-14},
        MlReference{0.999, 0.999, -100000000, 9.9957602311126484792e-20},
};

}  // namespace fracfem::test
