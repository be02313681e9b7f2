//! Generated by `cargo run --release --example gen_moment_tables`. Do not edit.
//! 50000 replications per cell, seed 0x11c52002; Gaussian random walks from zero.

/// (T̃, p, deterministic code, mu*, sigma*)
pub(super) const LLC_TABLE: &[(u16, u8, u8, f64, f64)] = &[
    (6, 0, 0, 0.04216496762597226, 1.5678279861030486),
    (7, 0, 0, 0.033711186060803665, 1.4339108119673631),
    (8, 0, 0, 0.025328388497693262, 1.2913427029397155),
    (9, 0, 0, 0.01672888760079307, 1.2276872065522786),
    (10, 0, 0, 0.022131637060457496, 1.1791504012826415),
    (11, 0, 0, 0.012139821679779395, 1.1517336947502232),
    (12, 0, 0, 0.013038175996302517, 1.1500119463380414),
    (13, 0, 0, 0.011136566672233781, 1.1182163936360168),
    (14, 0, 0, 0.012304018532501614, 1.1122878968051282),
    (15, 0, 0, 0.010484694876736301, 1.1019210415215928),
    (16, 0, 0, 0.013101460227086678, 1.1032443214209497),
    (17, 0, 0, 0.0046585862666626236, 1.0737337342032982),
    (18, 0, 0, 0.009770093384310643, 1.0801645734395906),
    (19, 0, 0, 0.006001916359354347, 1.061937099145508),
    (20, 0, 0, 0.006702463044236974, 1.0680341972621332),
    (21, 0, 0, 0.002842921814955521, 1.0614055481588032),
    (22, 0, 0, 0.0069511483150026514, 1.059329170305492),
    (23, 0, 0, 0.0034986080069600656, 1.0420299889646094),
    (24, 0, 0, 0.0048817293080117745, 1.0576497550545512),
    (25, 0, 0, 0.012269003708563975, 1.0469246463085817),
    (26, 0, 0, 0.007687524630793821, 1.0507337315006462),
    (27, 0, 0, 0.010969611638954102, 1.0535296998384625),
    (28, 0, 0, 0.00876698436069108, 1.0528075892342663),
    (29, 0, 0, 0.004307468191719176, 1.0307245478851184),
    (30, 0, 0, 0.006987499490473573, 1.0451286058059461),
    (35, 0, 0, 0.0029045650600059343, 1.0381755576166176),
    (40, 0, 0, 0.0018264148309053245, 1.0290826183119213),
    (45, 0, 0, 0.000564152233964716, 1.0269087642126582),
    (50, 0, 0, 0.0016352860740474777, 1.0207461477305968),
    (55, 0, 0, 0.005835700954440293, 1.0210734139426931),
    (60, 0, 0, 0.0028568501746153085, 1.0222561586987748),
    (65, 0, 0, 0.004531437730865627, 1.0264744392514478),
    (70, 0, 0, -0.003730832155810859, 1.009496791174016),
    (75, 0, 0, 0.0077776357291507526, 1.0237648611966128),
    (80, 0, 0, 0.0017097184978318092, 1.02157845910242),
    (85, 0, 0, -0.0016373685348673602, 1.012231103444026),
    (90, 0, 0, 0.00870411080827705, 1.0100987381575333),
    (95, 0, 0, 0.0020659220644592855, 1.0173564047675867),
    (100, 0, 0, 0.0029582096567547216, 1.0151406381117682),
    (125, 0, 0, -0.0006146191902158721, 1.0113664482153717),
    (150, 0, 0, 0.0034160905411946677, 1.0194821629669872),
    (200, 0, 0, 0.005690582126318454, 1.0213651833835142),
    (250, 0, 0, 0.004263184077985131, 1.0063069456255724),
    (6, 1, 0, -0.1481246451907433, 1.9301709464828007),
    (7, 1, 0, -0.11469336719167922, 1.5912037946868565),
    (8, 1, 0, -0.11136821979463828, 1.2713057336963767),
    (9, 1, 0, -0.09649024110431294, 1.1946202961975296),
    (10, 1, 0, -0.08373138017817662, 1.138080235816457),
    (11, 1, 0, -0.07358295480899592, 1.082163739157798),
    (12, 1, 0, -0.07075486353851014, 1.0577299201927732),
    (13, 1, 0, -0.06220292333760778, 1.050184539485964),
    (14, 1, 0, -0.06439213528854855, 1.0247392262286852),
    (15, 1, 0, -0.05936195039881962, 1.00490284676583),
    (16, 1, 0, -0.0593530322144028, 1.0090737676650585),
    (17, 1, 0, -0.05076370913544623, 0.9970938563860597),
    (18, 1, 0, -0.051099136375680115, 1.002356194237621),
    (19, 1, 0, -0.043189377226945304, 1.0017767904001722),
    (20, 1, 0, -0.04449174755553116, 0.986997632306422),
    (21, 1, 0, -0.04627577526881094, 0.98010687743543),
    (22, 1, 0, -0.03554382409188333, 0.989261435534761),
    (23, 1, 0, -0.04559789741724464, 0.980734402861332),
    (24, 1, 0, -0.03478064674726695, 0.9861993281394722),
    (25, 1, 0, -0.03726262641041841, 0.985751568752273),
    (26, 1, 0, -0.03685617454489312, 0.9794543079936976),
    (27, 1, 0, -0.03248509447985395, 0.9850917673223522),
    (28, 1, 0, -0.03531531561611933, 0.9831533882946072),
    (29, 1, 0, -0.03447041434720221, 0.9789128626306313),
    (30, 1, 0, -0.030780991761284748, 0.984027884835482),
    (35, 1, 0, -0.022854426073831438, 0.9889405707119399),
    (40, 1, 0, -0.026967370611842012, 0.9885604387728721),
    (45, 1, 0, -0.020967233829632424, 0.9860496461637067),
    (50, 1, 0, -0.02123431221792618, 0.972968350212345),
    (55, 1, 0, -0.012033663417325919, 0.9896177837035756),
    (60, 1, 0, -0.01737796394353411, 0.9805707007778999),
    (65, 1, 0, -0.012111127624803222, 0.9793925340651893),
    (70, 1, 0, -0.015124863407966668, 0.9849620126764278),
    (75, 1, 0, -0.010510121335979594, 0.9992321619251281),
    (80, 1, 0, -0.012554507308095214, 0.9886061242231275),
    (85, 1, 0, -0.004747337378861294, 1.004855374315676),
    (90, 1, 0, -0.01376527931568323, 0.9847279525362442),
    (95, 1, 0, -0.010466074505718051, 0.9886539726028083),
    (100, 1, 0, -0.009710843005148118, 0.9869340639656675),
    (125, 1, 0, -0.007091291374134117, 0.9994422045197189),
    (150, 1, 0, 0.0001004210908625273, 1.0083647242278935),
    (200, 1, 0, -0.0017274191297271034, 1.0050171721327361),
    (250, 1, 0, -0.0030164771837634034, 0.9934144787569402),
    (6, 2, 0, -0.03949228154630182, 6.443556225303401),
    (7, 2, 0, -0.06817777379763934, 2.1130066407934143),
    (8, 2, 0, -0.05129729130153291, 1.6691585671651348),
    (9, 2, 0, -0.04777005383594958, 1.4062920389076317),
    (10, 2, 0, -0.05077867468887927, 1.2422965661152394),
    (11, 2, 0, -0.05256482819815302, 1.1763823924794727),
    (12, 2, 0, -0.0503485040104368, 1.1304206196894337),
    (13, 2, 0, -0.04744994741507147, 1.0921010326960316),
    (14, 2, 0, -0.04551579693583797, 1.0726164204873516),
    (15, 2, 0, -0.04520835762671447, 1.0488706640870566),
    (16, 2, 0, -0.040702144700913774, 1.0282654057526754),
    (17, 2, 0, -0.0398723374850113, 1.0208278536149407),
    (18, 2, 0, -0.03098953694891521, 1.00480834214783),
    (19, 2, 0, -0.033904204674541985, 1.0040560773946825),
    (20, 2, 0, -0.034990244571082185, 0.9939405910173167),
    (21, 2, 0, -0.0337641634203469, 0.9845034985936731),
    (22, 2, 0, -0.039589587300560294, 0.9895006761246271),
    (23, 2, 0, -0.035530355066182094, 0.9772508051803603),
    (24, 2, 0, -0.037563053333093406, 0.9625734441099646),
    (25, 2, 0, -0.03367228038693677, 0.9755413196062933),
    (26, 2, 0, -0.025827495024000082, 0.9819098339553787),
    (27, 2, 0, -0.031070600036234373, 0.9584962131312488),
    (28, 2, 0, -0.028873009274373716, 0.9702421036069909),
    (29, 2, 0, -0.02809769113597894, 0.9723593849766758),
    (30, 2, 0, -0.021590385993129183, 0.9684847484617031),
    (35, 2, 0, -0.027754982415161392, 0.9583966122907195),
    (40, 2, 0, -0.017736986234699558, 0.9670882842778364),
    (45, 2, 0, -0.01661763965707933, 0.9674129346759022),
    (50, 2, 0, -0.019709381552333177, 0.9604264669519482),
    (55, 2, 0, -0.01273465997520776, 0.968957412330378),
    (60, 2, 0, -0.009736880505868325, 0.9689896781160023),
    (65, 2, 0, -0.011327142878883095, 0.9752817865246659),
    (70, 2, 0, -0.011780474727300067, 0.9628392353570489),
    (75, 2, 0, -0.01480535540915446, 0.968078966614025),
    (80, 2, 0, -0.011519308552305391, 0.969502793251721),
    (85, 2, 0, -0.01263419301436728, 0.9712398721278942),
    (90, 2, 0, -0.009472760856913284, 0.9712690736715502),
    (95, 2, 0, -0.009090488799654949, 0.967713908136659),
    (100, 2, 0, -0.011856313801562244, 0.9708281913783843),
    (125, 2, 0, -0.006645818915943221, 0.9813331635144291),
    (150, 2, 0, -0.008399207964369557, 0.983122608614775),
    (200, 2, 0, 0.0012034678333432826, 0.9908037130456726),
    (250, 2, 0, -0.005267918059807069, 0.981601108845938),
    (6, 3, 0, -0.03805167291099635, 37.438328137614114),
    (7, 3, 0, -0.20202491330285102, 5.955837823419096),
    (8, 3, 0, -0.15097282268664847, 2.6867321014304184),
    (9, 3, 0, -0.13535285645886774, 1.9192407523230017),
    (10, 3, 0, -0.11106495666945046, 1.454508177373101),
    (11, 3, 0, -0.10290560644729245, 1.3346591324140147),
    (12, 3, 0, -0.10530964512423298, 1.2238759934079002),
    (13, 3, 0, -0.09670363680775566, 1.160880633631488),
    (14, 3, 0, -0.09180825039661188, 1.1077589730856552),
    (15, 3, 0, -0.0884878949991376, 1.0788138184299572),
    (16, 3, 0, -0.08127026170881212, 1.0513133257807001),
    (17, 3, 0, -0.08074054784442371, 1.027728372863538),
    (18, 3, 0, -0.0814714498426234, 1.015009120382946),
    (19, 3, 0, -0.07530118620288291, 1.0029224432009065),
    (20, 3, 0, -0.07321658027923311, 0.9909753352356123),
    (21, 3, 0, -0.07054277378768127, 0.985734689124554),
    (22, 3, 0, -0.07122166899831388, 0.979072406677061),
    (23, 3, 0, -0.06346636079677348, 0.9751632108305682),
    (24, 3, 0, -0.06135827286120416, 0.9639634591580145),
    (25, 3, 0, -0.060872182063680585, 0.9656518228083945),
    (26, 3, 0, -0.05686940135180457, 0.963559040406382),
    (27, 3, 0, -0.052909492234731584, 0.9629425311250959),
    (28, 3, 0, -0.052964349867695666, 0.9514986136235527),
    (29, 3, 0, -0.05389865538446648, 0.943478721160111),
    (30, 3, 0, -0.04633542323482715, 0.9581109508195714),
    (35, 3, 0, -0.04771375318770125, 0.9435723381128971),
    (40, 3, 0, -0.045973156200018524, 0.9388440465136849),
    (45, 3, 0, -0.03928256584304766, 0.9398987843915351),
    (50, 3, 0, -0.035135802198301286, 0.9491621587164759),
    (55, 3, 0, -0.03280608796504193, 0.9425409525971525),
    (60, 3, 0, -0.03265107209478675, 0.9418786370189792),
    (65, 3, 0, -0.024809895177446195, 0.9484989274319037),
    (70, 3, 0, -0.026568938676736282, 0.9445769427943224),
    (75, 3, 0, -0.02978878389184195, 0.9501769616255639),
    (80, 3, 0, -0.021462617365691383, 0.9554064842723048),
    (85, 3, 0, -0.021224087312107134, 0.9536639985581673),
    (90, 3, 0, -0.019618055114122526, 0.958851198807749),
    (95, 3, 0, -0.01638252037180732, 0.9529230333604369),
    (100, 3, 0, -0.01904216871673832, 0.9488641829696953),
    (125, 3, 0, -0.009337186612964512, 0.9697369827780068),
    (150, 3, 0, -0.006372318944966642, 0.9809766827342453),
    (200, 3, 0, -0.00812042901526226, 0.9833009806829414),
    (250, 3, 0, -0.010592658955821491, 0.973656384306193),
    (6, 0, 1, -0.7815435532707004, 3.525021551616246),
    (7, 0, 1, -0.7001804961828336, 2.0209041366384852),
    (8, 0, 1, -0.668006716882595, 1.62006666628706),
    (9, 0, 1, -0.6414966968163035, 1.3914764574391718),
    (10, 0, 1, -0.6271286447250509, 1.2736739622310793),
    (11, 0, 1, -0.6146237469026417, 1.2122291903404145),
    (12, 0, 1, -0.6008250866927521, 1.148721209213838),
    (13, 0, 1, -0.5934986044442098, 1.11905652038521),
    (14, 0, 1, -0.5912278069051594, 1.073528914870671),
    (15, 0, 1, -0.5838342668139154, 1.0548539063820437),
    (16, 0, 1, -0.5786821136484884, 1.0352369134434567),
    (17, 0, 1, -0.5743569199707954, 1.0055450435420428),
    (18, 0, 1, -0.5723607795520064, 0.9924946396131953),
    (19, 0, 1, -0.5619269050261748, 0.9769685901321625),
    (20, 0, 1, -0.5604372269132167, 0.9562679920619146),
    (21, 0, 1, -0.5604492222411424, 0.9498443872413745),
    (22, 0, 1, -0.5599928235453836, 0.9487361175372717),
    (23, 0, 1, -0.5567883378530459, 0.9372752296761138),
    (24, 0, 1, -0.5516250417490097, 0.9269315275568263),
    (25, 0, 1, -0.5512340156930735, 0.9211365194020752),
    (26, 0, 1, -0.5528405985573667, 0.9080762389480513),
    (27, 0, 1, -0.5488160188995377, 0.8990239481609142),
    (28, 0, 1, -0.5464445662459098, 0.9019060034370519),
    (29, 0, 1, -0.5470422495119566, 0.8989151051371639),
    (30, 0, 1, -0.5425310773143951, 0.8863318189794892),
    (35, 0, 1, -0.5388287956151468, 0.8628411573824166),
    (40, 0, 1, -0.5371943610633823, 0.8460893338131947),
    (45, 0, 1, -0.5281523534862866, 0.8364843981626542),
    (50, 0, 1, -0.5265918012257309, 0.8285634972990634),
    (55, 0, 1, -0.5277732513980002, 0.824976291660044),
    (60, 0, 1, -0.5255075557538537, 0.8168986849987071),
    (65, 0, 1, -0.5267700496826283, 0.8021492257905029),
    (70, 0, 1, -0.5243436673850893, 0.8012719529741846),
    (75, 0, 1, -0.5218759620125106, 0.7947133121262993),
    (80, 0, 1, -0.5218829430957818, 0.7903576999066595),
    (85, 0, 1, -0.5213048518141812, 0.7879540150967761),
    (90, 0, 1, -0.5213257136332969, 0.7802645984157637),
    (95, 0, 1, -0.5154088768242989, 0.7821161693416374),
    (100, 0, 1, -0.5183189199569745, 0.7732868459126191),
    (125, 0, 1, -0.5139838942899494, 0.7682503925411169),
    (150, 0, 1, -0.512700617280971, 0.7596003421441284),
    (200, 0, 1, -0.5101934436013903, 0.7451766325009404),
    (250, 0, 1, -0.5090254927542273, 0.7395027217857973),
    (6, 1, 1, -0.8301239788504686, 8.108186299882654),
    (7, 1, 1, -0.6784998215751091, 4.179814332839694),
    (8, 1, 1, -0.6098902129811812, 2.459232511266335),
    (9, 1, 1, -0.5864751349050917, 1.8355841302512115),
    (10, 1, 1, -0.5681051460962424, 1.609245648213507),
    (11, 1, 1, -0.5607912733478639, 1.4164666419965033),
    (12, 1, 1, -0.5597301095158849, 1.3304346160242098),
    (13, 1, 1, -0.5471210978091909, 1.2390239457534842),
    (14, 1, 1, -0.5503542237237349, 1.1899063028076349),
    (15, 1, 1, -0.5489537691446615, 1.1577443967446401),
    (16, 1, 1, -0.5410408916560454, 1.1026971864531),
    (17, 1, 1, -0.5393509956070698, 1.0833959001003703),
    (18, 1, 1, -0.5390415993673144, 1.0510627072048748),
    (19, 1, 1, -0.5360627673472096, 1.0268211447116935),
    (20, 1, 1, -0.5344980788802537, 1.015895817691496),
    (21, 1, 1, -0.5348926160144122, 1.0113333531370103),
    (22, 1, 1, -0.5310875299021753, 0.976229326782067),
    (23, 1, 1, -0.5340571757698978, 0.9752096692176601),
    (24, 1, 1, -0.5322324782515769, 0.9534738855641137),
    (25, 1, 1, -0.5313086237226876, 0.9462970826557948),
    (26, 1, 1, -0.5319286435228838, 0.9327206650610315),
    (27, 1, 1, -0.5270174838301627, 0.9326674207664148),
    (28, 1, 1, -0.5264668473166103, 0.9118588785940761),
    (29, 1, 1, -0.5271838655788329, 0.9301661702161507),
    (30, 1, 1, -0.5300564537099455, 0.9085676193478582),
    (35, 1, 1, -0.5280864145688439, 0.8841084358848894),
    (40, 1, 1, -0.5222281758891006, 0.859972702865298),
    (45, 1, 1, -0.520345510059542, 0.837682927223289),
    (50, 1, 1, -0.5189175466551551, 0.8318267576710753),
    (55, 1, 1, -0.5173500469506327, 0.8259184631117906),
    (60, 1, 1, -0.5155650947519346, 0.8188512188530934),
    (65, 1, 1, -0.5184489309056688, 0.8029899638946282),
    (70, 1, 1, -0.5167798785425629, 0.8063807162438634),
    (75, 1, 1, -0.5180917720955298, 0.7891445276797392),
    (80, 1, 1, -0.5126991806127877, 0.7921671586621898),
    (85, 1, 1, -0.5124471832108145, 0.7884715024239803),
    (90, 1, 1, -0.5093175734985356, 0.7887363661830965),
    (95, 1, 1, -0.5132270423261568, 0.7810366739127698),
    (100, 1, 1, -0.5119506194455322, 0.7822509851486937),
    (125, 1, 1, -0.5100126601475862, 0.7723452737181166),
    (150, 1, 1, -0.5088365704080391, 0.7610530486905644),
    (200, 1, 1, -0.5056469085310182, 0.7526463153907408),
    (250, 1, 1, -0.5079718276178664, 0.7444929964144134),
    (6, 2, 1, -6.262936525892809, 709.3395908059807),
    (7, 2, 1, -0.568260934262378, 11.687688961424756),
    (8, 2, 1, -0.4792297190049296, 4.306582046542394),
    (9, 2, 1, -0.4599036324423209, 2.205581740713203),
    (10, 2, 1, -0.46625002445035163, 1.9869111848342493),
    (11, 2, 1, -0.45823641106691637, 1.5994913278218292),
    (12, 2, 1, -0.46231752753752076, 1.490751789636254),
    (13, 2, 1, -0.4640969293391889, 1.3830351661243188),
    (14, 2, 1, -0.46732027943825794, 1.3267298728619301),
    (15, 2, 1, -0.4735438187353219, 1.2896299995593443),
    (16, 2, 1, -0.47242645921540344, 1.212269199630123),
    (17, 2, 1, -0.47729773169621426, 1.171745265860296),
    (18, 2, 1, -0.476181180568498, 1.1388009988965344),
    (19, 2, 1, -0.48005227134732514, 1.1022010087446443),
    (20, 2, 1, -0.4809293027156153, 1.08482323183595),
    (21, 2, 1, -0.4808321180583866, 1.0746665528808244),
    (22, 2, 1, -0.4825469728410264, 1.0574807467755687),
    (23, 2, 1, -0.48182145035462753, 1.0366868425722544),
    (24, 2, 1, -0.48311226109474076, 1.0252062900932564),
    (25, 2, 1, -0.4862757297920237, 1.0071434918235038),
    (26, 2, 1, -0.4856703410271767, 1.0021994430733354),
    (27, 2, 1, -0.48880929409439156, 0.9759058233131209),
    (28, 2, 1, -0.4901947626744227, 0.9660886912837036),
    (29, 2, 1, -0.49145013623355466, 0.9501873975449218),
    (30, 2, 1, -0.48940362710363305, 0.9558719323114772),
    (35, 2, 1, -0.4954686887438975, 0.9056732592608494),
    (40, 2, 1, -0.4974983307934289, 0.8798688576264456),
    (45, 2, 1, -0.4967334323333441, 0.876081583221281),
    (50, 2, 1, -0.49965026589242884, 0.8568097856744449),
    (55, 2, 1, -0.4985176208039679, 0.8431444487563017),
    (60, 2, 1, -0.49813756891918126, 0.831798686167667),
    (65, 2, 1, -0.5015228930716872, 0.8281054518321406),
    (70, 2, 1, -0.5008408207733926, 0.8078928177840716),
    (75, 2, 1, -0.5015256751343611, 0.8002574260481387),
    (80, 2, 1, -0.5016624919540186, 0.8037793662805095),
    (85, 2, 1, -0.4993132122801258, 0.7991091604836087),
    (90, 2, 1, -0.5016957201718952, 0.78828744777051),
    (95, 2, 1, -0.5004776328500892, 0.7907719858787802),
    (100, 2, 1, -0.5009811642573774, 0.7929142186080194),
    (125, 2, 1, -0.5024588782629298, 0.7731543057998674),
    (150, 2, 1, -0.4994007035420197, 0.7654206424471118),
    (200, 2, 1, -0.500865591813732, 0.7462114032328341),
    (250, 2, 1, -0.5040181493968261, 0.7440165611793479),
    (6, 3, 1, -42972.48917568646, 1860.651984923969),
    (7, 3, 1, -1.1488185215180842, 57.36918203994873),
    (8, 3, 1, -0.515952961028904, 12.90415223362866),
    (9, 3, 1, -0.42640762083584133, 4.08890754458171),
    (10, 3, 1, -0.41103036897175943, 2.3331253634303186),
    (11, 3, 1, -0.4171579635551539, 2.039543616790928),
    (12, 3, 1, -0.41784511083726006, 1.86665019126546),
    (13, 3, 1, -0.42136951684611557, 1.61507656267655),
    (14, 3, 1, -0.42810604316639095, 1.5067026940423838),
    (15, 3, 1, -0.4327138792358171, 1.3990889629572256),
    (16, 3, 1, -0.43229070528814845, 1.3262179989606495),
    (17, 3, 1, -0.44214927540990706, 1.2965582963290672),
    (18, 3, 1, -0.44563290643671494, 1.2387408982373147),
    (19, 3, 1, -0.4448146470712979, 1.219911680079716),
    (20, 3, 1, -0.4501833089160753, 1.181016000002205),
    (21, 3, 1, -0.4531014340986762, 1.1478566787358246),
    (22, 3, 1, -0.456433655136608, 1.1060278217384387),
    (23, 3, 1, -0.4578139473751402, 1.0951137146853995),
    (24, 3, 1, -0.4582703136282169, 1.0749588539017148),
    (25, 3, 1, -0.4619171672917443, 1.0592449131304265),
    (26, 3, 1, -0.46576227308680496, 1.0333859986354113),
    (27, 3, 1, -0.46754165793551455, 1.0412820525105717),
    (28, 3, 1, -0.469429924755884, 1.012150676737993),
    (29, 3, 1, -0.4705054157087988, 0.9996768600413494),
    (30, 3, 1, -0.47194745579764846, 0.9842977710437683),
    (35, 3, 1, -0.4749311314136917, 0.9377093508151638),
    (40, 3, 1, -0.4819616309925786, 0.9098393144216675),
    (45, 3, 1, -0.4819914893255285, 0.8935550275541051),
    (50, 3, 1, -0.4885753212548453, 0.8736799352468358),
    (55, 3, 1, -0.48760699399589374, 0.858011345755434),
    (60, 3, 1, -0.48989901951744885, 0.8379557775882382),
    (65, 3, 1, -0.4930819314779957, 0.8324614683901973),
    (70, 3, 1, -0.4929385128048576, 0.8148003732451992),
    (75, 3, 1, -0.4933513582384389, 0.813448212117691),
    (80, 3, 1, -0.4957342648273924, 0.8156314289303682),
    (85, 3, 1, -0.49698059260990446, 0.8007829661931424),
    (90, 3, 1, -0.4970940668169973, 0.8056079576862586),
    (95, 3, 1, -0.49514932864218225, 0.797345491905618),
    (100, 3, 1, -0.500268656530746, 0.786781366157469),
    (125, 3, 1, -0.49703208152095407, 0.7737559463954211),
    (150, 3, 1, -0.49942781404637393, 0.7588295499707559),
    (200, 3, 1, -0.4989752183116502, 0.7577066277318523),
    (250, 3, 1, -0.49859742414663377, 0.7480715384193781),
    (6, 0, 2, -1.7239022358679579, 7.318125743472833),
    (7, 0, 2, -1.3614192322740482, 8.54886035663644),
    (8, 0, 2, -1.1452584985350391, 2.489248293161081),
    (9, 0, 2, -1.035823370285809, 1.8901793080452338),
    (10, 0, 2, -1.0132602550678758, 1.7041323158696327),
    (11, 0, 2, -0.9482239602690383, 1.5339966846486845),
    (12, 0, 2, -0.895873750119476, 1.4123716941054478),
    (13, 0, 2, -0.8601837651052734, 1.366223379203411),
    (14, 0, 2, -0.8258188959971962, 1.286140198199667),
    (15, 0, 2, -0.8353344001696671, 1.2563045167750084),
    (16, 0, 2, -0.8083281858636271, 1.2094628521767061),
    (17, 0, 2, -0.7820095051289478, 1.1778410520963338),
    (18, 0, 2, -0.7662125327698655, 1.1463650348664782),
    (19, 0, 2, -0.7527766829292183, 1.1134900681572886),
    (20, 0, 2, -0.7350604705862896, 1.0831680059978055),
    (21, 0, 2, -0.7218757323074052, 1.062739515275968),
    (22, 0, 2, -0.73268505848518, 1.0520443450823407),
    (23, 0, 2, -0.7179333579774716, 1.0328595411174466),
    (24, 0, 2, -0.7092244212413507, 1.0133769706964673),
    (25, 0, 2, -0.7008368458409441, 1.008363679313081),
    (26, 0, 2, -0.6899531476556668, 0.9863803706995127),
    (27, 0, 2, -0.6788873633139736, 0.9781024241410995),
    (28, 0, 2, -0.6731556208709516, 0.955076238449429),
    (29, 0, 2, -0.6679699764734383, 0.9443794883567397),
    (30, 0, 2, -0.6753298248618078, 0.9448782200296088),
    (35, 0, 2, -0.6427241907530505, 0.8953991706388582),
    (40, 0, 2, -0.6366816126494365, 0.8744465090249555),
    (45, 0, 2, -0.6207667453583032, 0.8352133051127922),
    (50, 0, 2, -0.6063706603679763, 0.8109251244715325),
    (55, 0, 2, -0.6027497302867667, 0.7951684345385849),
    (60, 0, 2, -0.5937453486081329, 0.7741441319204807),
    (65, 0, 2, -0.5840149331571535, 0.7551060463972149),
    (70, 0, 2, -0.5854200332267178, 0.7492004896768241),
    (75, 0, 2, -0.5785068707204466, 0.7405393498846449),
    (80, 0, 2, -0.5734676685384262, 0.7270992113863659),
    (85, 0, 2, -0.573782275063166, 0.7232827759640054),
    (90, 0, 2, -0.5696092509119461, 0.7120776167648931),
    (95, 0, 2, -0.5632815978517008, 0.7023213401040147),
    (100, 0, 2, -0.561439337630045, 0.6920526109447759),
    (125, 0, 2, -0.5547584541193434, 0.6650101296615092),
    (150, 0, 2, -0.546017811774464, 0.6540936965851875),
    (200, 0, 2, -0.5369193417515777, 0.6180520715449266),
    (250, 0, 2, -0.5312386819555209, 0.6065805523826429),
    (6, 1, 2, -3.950566280267468, 116.59084803282926),
    (7, 1, 2, -1.2472820787052974, 18.05535908698629),
    (8, 1, 2, -0.9421775619597823, 5.070177895796948),
    (9, 1, 2, -0.8856879444854452, 2.877809096973879),
    (10, 1, 2, -0.8225754423878627, 2.4281216131195316),
    (11, 1, 2, -0.7783954230619274, 1.9450006191354885),
    (12, 1, 2, -0.7492033097561158, 1.7318070732439306),
    (13, 1, 2, -0.7236222858977509, 1.592507836934325),
    (14, 1, 2, -0.7319353624088369, 1.5083652788692483),
    (15, 1, 2, -0.7152145261749829, 1.4329765211271526),
    (16, 1, 2, -0.7027097738237845, 1.3547856810910412),
    (17, 1, 2, -0.689411509749341, 1.301006978602762),
    (18, 1, 2, -0.6768687393466185, 1.2652517130940364),
    (19, 1, 2, -0.6671124534223866, 1.2160845339295148),
    (20, 1, 2, -0.6559730408405078, 1.1688935090003574),
    (21, 1, 2, -0.6668701254263542, 1.1619142175205395),
    (22, 1, 2, -0.6585340688113094, 1.1304373704412496),
    (23, 1, 2, -0.6500089398669463, 1.0964449086045343),
    (24, 1, 2, -0.6451739982851102, 1.0789027315322202),
    (25, 1, 2, -0.6395819563935511, 1.045266431709002),
    (26, 1, 2, -0.632966815007497, 1.0347765719625768),
    (27, 1, 2, -0.6280626682096457, 1.0084588422832015),
    (28, 1, 2, -0.6211554009226903, 0.9940255767376637),
    (29, 1, 2, -0.6306106816823803, 0.9930109929402353),
    (30, 1, 2, -0.6263513261947291, 0.9789046237497581),
    (35, 1, 2, -0.6079466408078542, 0.9177462695260914),
    (40, 1, 2, -0.6000098420034796, 0.8824656449460776),
    (45, 1, 2, -0.5909006110096311, 0.8390974094573199),
    (50, 1, 2, -0.5814492762612399, 0.8036950864205904),
    (55, 1, 2, -0.5803832004009085, 0.7911008165807002),
    (60, 1, 2, -0.5721287171851549, 0.7746766758359672),
    (65, 1, 2, -0.5738944866625898, 0.7679791823313118),
    (70, 1, 2, -0.5674951567625826, 0.7437111397806971),
    (75, 1, 2, -0.5633377645401364, 0.7261898875493962),
    (80, 1, 2, -0.5588466803044118, 0.7118984651136091),
    (85, 1, 2, -0.5572255768317711, 0.7248325629518486),
    (90, 1, 2, -0.5555640117251837, 0.7012096356740218),
    (95, 1, 2, -0.5536906977183869, 0.6892020886046893),
    (100, 1, 2, -0.5499108619709429, 0.6823544897684675),
    (125, 1, 2, -0.5455848795639752, 0.6623783344076123),
    (150, 1, 2, -0.5390990813495231, 0.6476025595222407),
    (200, 1, 2, -0.5313095658548124, 0.6113685831028117),
    (250, 1, 2, -0.528106794477025, 0.5991509490078155),
    (6, 2, 2, -949.4561704998466, 212.31180372932974),
    (7, 2, 2, -1.3091214426417526, 40.116253220202424),
    (8, 2, 2, -0.7184060849675215, 19.73784556479833),
    (9, 2, 2, -0.6020481048075197, 5.957296786340644),
    (10, 2, 2, -0.57167920587435, 2.803095889924149),
    (11, 2, 2, -0.555042027820009, 2.3615867504907144),
    (12, 2, 2, -0.5459847638412045, 2.0582346608174125),
    (13, 2, 2, -0.5643765440056244, 1.830958940371567),
    (14, 2, 2, -0.5636792049998718, 1.6927591780914937),
    (15, 2, 2, -0.5602905370656337, 1.581206261657366),
    (16, 2, 2, -0.556479413848884, 1.4831500027546753),
    (17, 2, 2, -0.553629916251972, 1.3887669568173615),
    (18, 2, 2, -0.551719189985962, 1.340667948763995),
    (19, 2, 2, -0.5491115972364091, 1.27690916792535),
    (20, 2, 2, -0.5635370868835122, 1.268767137423852),
    (21, 2, 2, -0.5621847987345723, 1.2256252982444968),
    (22, 2, 2, -0.5586656576893253, 1.184806898007169),
    (23, 2, 2, -0.5568481489292859, 1.160939078423524),
    (24, 2, 2, -0.5577602215976416, 1.113225836715947),
    (25, 2, 2, -0.554993245113038, 1.0995075495047852),
    (26, 2, 2, -0.5517385545570274, 1.073961723176615),
    (27, 2, 2, -0.5521563579252223, 1.046980131868458),
    (28, 2, 2, -0.5600571744101009, 1.0551100885672253),
    (29, 2, 2, -0.5612576955144045, 1.0257028425002725),
    (30, 2, 2, -0.5581369996558359, 1.0156926398239783),
    (35, 2, 2, -0.5525239244499233, 0.9327285245189616),
    (40, 2, 2, -0.5533971874967992, 0.9010118690222464),
    (45, 2, 2, -0.5470858420017674, 0.8524638078993988),
    (50, 2, 2, -0.5519897333526554, 0.8364307257907365),
    (55, 2, 2, -0.5478809328963145, 0.8064502125996782),
    (60, 2, 2, -0.5437373108260605, 0.775733429892277),
    (65, 2, 2, -0.5444950442963332, 0.767809737659831),
    (70, 2, 2, -0.5415421260426467, 0.7448056516921104),
    (75, 2, 2, -0.5383505548812875, 0.7396352413477133),
    (80, 2, 2, -0.5402456615086298, 0.7327195251444512),
    (85, 2, 2, -0.5397296401464438, 0.7131085257847711),
    (90, 2, 2, -0.5353366590822662, 0.7038138253759971),
    (95, 2, 2, -0.5340571927117793, 0.7008284983434891),
    (100, 2, 2, -0.5359610581080699, 0.6941305642787385),
    (125, 2, 2, -0.5330075816767382, 0.6627301023389502),
    (150, 2, 2, -0.5289576960389549, 0.6404484751074027),
    (200, 2, 2, -0.522877161336872, 0.6162642489289615),
    (250, 2, 2, -0.520919683528007, 0.6016926596945431),
    (7, 3, 2, -19638.00338577802, 592.4443865463094),
    (8, 3, 2, -1.6498278631330108, 81.89120754062124),
    (9, 3, 2, -0.5546760472157435, 12.619344488662573),
    (10, 3, 2, -0.47383476738124175, 4.902095755894439),
    (11, 3, 2, -0.4585641139444081, 3.2579216196640672),
    (12, 3, 2, -0.47212532905346255, 2.7242670979081693),
    (13, 3, 2, -0.4661593542605123, 2.275145913807443),
    (14, 3, 2, -0.47195104358503376, 2.0244071853023273),
    (15, 3, 2, -0.4745672177282041, 1.8457876447174126),
    (16, 3, 2, -0.47398256242322057, 1.709580187228663),
    (17, 3, 2, -0.4789812224882441, 1.5916548556537269),
    (18, 3, 2, -0.4808303143236726, 1.496468945216167),
    (19, 3, 2, -0.49535993993934685, 1.4604869951355173),
    (20, 3, 2, -0.49761307225492557, 1.404288111472476),
    (21, 3, 2, -0.49937176834178715, 1.3534452305169016),
    (22, 3, 2, -0.49816769422726837, 1.2992788881245372),
    (23, 3, 2, -0.5002964581593345, 1.2590891913578677),
    (24, 3, 2, -0.5006932942934368, 1.211322462783662),
    (25, 3, 2, -0.5030299848393686, 1.1811328457544303),
    (26, 3, 2, -0.5048886781587748, 1.1498294693097373),
    (27, 3, 2, -0.5151395561336246, 1.1473083915690694),
    (28, 3, 2, -0.5140444463312172, 1.1212531131703993),
    (29, 3, 2, -0.5161126858139785, 1.0970233845924309),
    (30, 3, 2, -0.5139807875553422, 1.0808225726264113),
    (35, 3, 2, -0.516022349436992, 0.9755367220822715),
    (40, 3, 2, -0.5227643372338581, 0.9300560464443816),
    (45, 3, 2, -0.5208517619431691, 0.8772838011703715),
    (50, 3, 2, -0.5257028260060495, 0.8609839596430103),
    (55, 3, 2, -0.524595999333287, 0.8175865557151125),
    (60, 3, 2, -0.5209091123017109, 0.7878432668434451),
    (65, 3, 2, -0.5262926271486849, 0.7744297238162395),
    (70, 3, 2, -0.5250965524886985, 0.7560432708896289),
    (75, 3, 2, -0.5218225668559389, 0.7461230793778681),
    (80, 3, 2, -0.5266740288346603, 0.7331318130153052),
    (85, 3, 2, -0.5238556383340416, 0.7256700128841079),
    (90, 3, 2, -0.5220107436709747, 0.7161095080145409),
    (95, 3, 2, -0.5233006054862084, 0.7022698325814024),
    (100, 3, 2, -0.5243365039671981, 0.7023191430000031),
    (125, 3, 2, -0.5232189304767697, 0.6596445190241899),
    (150, 3, 2, -0.5219004351452119, 0.6339309635146495),
    (200, 3, 2, -0.517985226068676, 0.6140060935667944),
    (250, 3, 2, -0.5153241854638543, 0.5975011174122147),
];
