//! Generated by `cargo run --release --example gen_moment_tables`. Do not edit.
//! 50000 replications per cell, seed 0x11c52002; Gaussian random walks from zero.

/// (T, p, deterministic code, mean, variance)
pub(super) const IPS_TABLE: &[(u16, u8, u8, f64, f64)] = &[
    (6, 0, 0, -0.31493340851678064, 1.5138628782396222),
    (7, 0, 0, -0.3305791692008784, 1.349885190179389),
    (8, 0, 0, -0.33717990211201354, 1.2147855877062135),
    (9, 0, 0, -0.35562867526810393, 1.19796069513873),
    (10, 0, 0, -0.36228453667941934, 1.1616098475230965),
    (11, 0, 0, -0.36826050891776396, 1.121153385957291),
    (12, 0, 0, -0.3637076073897237, 1.115150600327222),
    (13, 0, 0, -0.3777942572806113, 1.0906642176452626),
    (14, 0, 0, -0.38695187473181103, 1.0821000860027559),
    (15, 0, 0, -0.38764743066797375, 1.0567407194329066),
    (16, 0, 0, -0.3748415346007389, 1.0550321692148599),
    (17, 0, 0, -0.38571854135178996, 1.056395938001377),
    (18, 0, 0, -0.39877376924989316, 1.041211608963204),
    (19, 0, 0, -0.3881063703939082, 1.0480441985939402),
    (20, 0, 0, -0.39510706323057193, 1.0317570106922154),
    (21, 0, 0, -0.39884886794885926, 1.034139883322676),
    (22, 0, 0, -0.39076574112397494, 1.0226748683019906),
    (23, 0, 0, -0.39462805484016056, 1.016903575084707),
    (24, 0, 0, -0.39942001810883937, 1.0246372183278958),
    (25, 0, 0, -0.3971602802130309, 1.014999373472205),
    (26, 0, 0, -0.3949224159670502, 1.0047962533212456),
    (27, 0, 0, -0.39422749733087925, 1.0189771480222811),
    (28, 0, 0, -0.3991756436790593, 1.0078510577635489),
    (29, 0, 0, -0.4005483382970605, 1.004077511951468),
    (30, 0, 0, -0.4032842157882321, 1.0221433282236045),
    (35, 0, 0, -0.4090863348140254, 0.9839058330251589),
    (40, 0, 0, -0.407223317482071, 0.9896077268535232),
    (45, 0, 0, -0.4105647149267801, 0.9956881880035469),
    (50, 0, 0, -0.4176192128374263, 0.9764291852846992),
    (55, 0, 0, -0.40559604843631847, 0.9760412282323866),
    (60, 0, 0, -0.4124542291815911, 0.9799545690911736),
    (65, 0, 0, -0.4102311046129496, 0.9746177233021281),
    (70, 0, 0, -0.4122975068672731, 0.9773157684049312),
    (75, 0, 0, -0.4205931405141951, 0.9845651814717169),
    (80, 0, 0, -0.4214009934767231, 0.968035493069374),
    (85, 0, 0, -0.41604947576685003, 0.9770185892280325),
    (90, 0, 0, -0.4169169769398593, 0.9657897451649345),
    (95, 0, 0, -0.41525464489624764, 0.9773701269224545),
    (100, 0, 0, -0.41460935661593556, 0.980030341227241),
    (125, 0, 0, -0.4196133786012876, 0.9715668143058847),
    (150, 0, 0, -0.4203102886789359, 0.9720484438791519),
    (200, 0, 0, -0.42447455760697017, 0.9697711742377384),
    (250, 0, 0, -0.4184717947086238, 0.9702109704395538),
    (6, 1, 0, -0.4835732442071324, 6.6289301973454595),
    (7, 1, 0, -0.39789906817089477, 2.118319427271792),
    (8, 1, 0, -0.38239213539937233, 1.4756231101091908),
    (9, 1, 0, -0.3866841038721592, 1.3191749622275515),
    (10, 1, 0, -0.3864963215780202, 1.2249314517318253),
    (11, 1, 0, -0.3844544500429688, 1.1740322847401963),
    (12, 1, 0, -0.38850405092826773, 1.1320277778663022),
    (13, 1, 0, -0.39064958501577507, 1.1040962737276159),
    (14, 1, 0, -0.3950965044789139, 1.093723229361611),
    (15, 1, 0, -0.3881172010780263, 1.0819330213081444),
    (16, 1, 0, -0.3965763063627229, 1.0705507342091583),
    (17, 1, 0, -0.39814039563320497, 1.0543559918023087),
    (18, 1, 0, -0.395659233183456, 1.0465347819370026),
    (19, 1, 0, -0.40496099220005344, 1.0411735716621977),
    (20, 1, 0, -0.4016642459544764, 1.0285927982366785),
    (21, 1, 0, -0.40710897178266553, 1.0394925736470517),
    (22, 1, 0, -0.4038939698863261, 1.015206625900736),
    (23, 1, 0, -0.40698094398928913, 1.0264446147124922),
    (24, 1, 0, -0.4021934059334233, 1.0142037640649255),
    (25, 1, 0, -0.40551896116621416, 1.0131155815357977),
    (26, 1, 0, -0.4025858044677892, 1.026603929359175),
    (27, 1, 0, -0.39950115819404103, 1.00964942052958),
    (28, 1, 0, -0.40399500451535986, 1.0041190900214525),
    (29, 1, 0, -0.39323185855244497, 1.0105093841929167),
    (30, 1, 0, -0.40799077602482653, 1.0129553736417796),
    (35, 1, 0, -0.41723804169376466, 1.0101208764993865),
    (40, 1, 0, -0.4104117151347428, 0.9987029759780135),
    (45, 1, 0, -0.4013408001298699, 0.9873520108232925),
    (50, 1, 0, -0.4124165472925082, 0.992139040879014),
    (55, 1, 0, -0.4183557897664579, 0.984912916326296),
    (60, 1, 0, -0.4224814440607183, 0.9767479210488281),
    (65, 1, 0, -0.4180635688869675, 0.9668479548579031),
    (70, 1, 0, -0.415903317593881, 0.980355431824986),
    (75, 1, 0, -0.4166961381201961, 0.9784539306593191),
    (80, 1, 0, -0.4244706804725471, 0.9737979803273574),
    (85, 1, 0, -0.42104454075380665, 0.9700174470323629),
    (90, 1, 0, -0.4122822445170333, 0.9803265714571653),
    (95, 1, 0, -0.4114472176157891, 0.9783296919939759),
    (100, 1, 0, -0.41544899104843536, 0.9740166971178288),
    (125, 1, 0, -0.41282992398671114, 0.9678209996529427),
    (150, 1, 0, -0.4178866553110748, 0.9697614478084962),
    (200, 1, 0, -0.4130807107134684, 0.9711140049177629),
    (250, 1, 0, -0.4172987948117609, 0.9571692928938995),
    (8, 2, 0, -0.21756446130140622, 6.084094763415029),
    (9, 2, 0, -0.24102989277502818, 2.0245602773042894),
    (10, 2, 0, -0.24714144203616123, 1.484233301246776),
    (11, 2, 0, -0.26477273246428923, 1.330869328979722),
    (12, 2, 0, -0.2691065776232971, 1.2341963868908763),
    (13, 2, 0, -0.28183223553385783, 1.184604436898607),
    (14, 2, 0, -0.29129764496715277, 1.1431135939656905),
    (15, 2, 0, -0.30076448842261927, 1.1139987300294458),
    (16, 2, 0, -0.30508451271527737, 1.0981638367585045),
    (17, 2, 0, -0.3137561993300622, 1.086545821609317),
    (18, 2, 0, -0.31119596547772044, 1.073030091324881),
    (19, 2, 0, -0.3210625269038907, 1.050848452048343),
    (20, 2, 0, -0.32935015513778454, 1.050199948918784),
    (21, 2, 0, -0.3368654688726284, 1.0407735568132335),
    (22, 2, 0, -0.324339710978887, 1.0561617900060452),
    (23, 2, 0, -0.3371145831969744, 1.0210802623751878),
    (24, 2, 0, -0.33999497155996045, 1.0247276651676147),
    (25, 2, 0, -0.34605749135006003, 1.0216462596274114),
    (26, 2, 0, -0.35198389735483526, 1.0203677622750589),
    (27, 2, 0, -0.35615650880901334, 1.014253290181429),
    (28, 2, 0, -0.3572670865170152, 1.0184158485946475),
    (29, 2, 0, -0.3511468315417997, 1.0209820222788726),
    (30, 2, 0, -0.3544553306196386, 1.0049142444948425),
    (35, 2, 0, -0.36085309112835895, 1.0111829686429814),
    (40, 2, 0, -0.3658446845174095, 1.0018082049612025),
    (45, 2, 0, -0.3749478291507026, 0.99187817328693),
    (50, 2, 0, -0.37522844399588745, 0.9887531331262978),
    (55, 2, 0, -0.3897179608795418, 0.9906703407537347),
    (60, 2, 0, -0.38945686294449305, 0.9815893933515594),
    (65, 2, 0, -0.38640004306159326, 0.9675329757296023),
    (70, 2, 0, -0.3916517683339015, 0.984787990884141),
    (75, 2, 0, -0.38966975799219167, 0.9828253399492075),
    (80, 2, 0, -0.39816525894379656, 0.9721241487648085),
    (85, 2, 0, -0.4012104966909536, 0.9728061358105812),
    (90, 2, 0, -0.404973071955311, 0.9681500784063686),
    (95, 2, 0, -0.40563404726625785, 0.9694843572758995),
    (100, 2, 0, -0.401516844461174, 0.9772360646359206),
    (125, 2, 0, -0.4077718493180691, 0.9719347420035958),
    (150, 2, 0, -0.4129632993877712, 0.9760493605074289),
    (200, 2, 0, -0.4144057126232555, 0.9651010677975218),
    (250, 2, 0, -0.4146442993513502, 0.9681727730036143),
    (10, 3, 0, -0.3770725591431426, 14.019012222224587),
    (11, 3, 0, -0.32385680719245497, 2.0357156058926122),
    (12, 3, 0, -0.3128848910217077, 1.5355399173653437),
    (13, 3, 0, -0.319933635030736, 1.3276543271629748),
    (14, 3, 0, -0.31432162725965623, 1.2676681289503937),
    (15, 3, 0, -0.3239333457980344, 1.197211856986088),
    (16, 3, 0, -0.33389699171683956, 1.1497915663727314),
    (17, 3, 0, -0.33638737338014185, 1.098913621626411),
    (18, 3, 0, -0.3317407159842659, 1.0983009765584122),
    (19, 3, 0, -0.3453900891970794, 1.0716764911117524),
    (20, 3, 0, -0.341809525292734, 1.0667810476805388),
    (21, 3, 0, -0.3450659776693525, 1.0487734495379013),
    (22, 3, 0, -0.35168336694784075, 1.0565418038980259),
    (23, 3, 0, -0.3435790007099209, 1.0322649559878976),
    (24, 3, 0, -0.34232117251346417, 1.0326728859411718),
    (25, 3, 0, -0.35669772636962765, 1.027248450886391),
    (26, 3, 0, -0.3541784277977815, 1.0314548772725352),
    (27, 3, 0, -0.35937063889439513, 1.0244634748818455),
    (28, 3, 0, -0.36999407736497497, 1.028848215573796),
    (29, 3, 0, -0.36293352224609327, 1.002605022734899),
    (30, 3, 0, -0.36195596969824323, 1.00905405716588),
    (35, 3, 0, -0.36683890287627763, 1.0069928637596277),
    (40, 3, 0, -0.3879507858486765, 0.9810761623451473),
    (45, 3, 0, -0.38945469942011257, 0.9914558939334954),
    (50, 3, 0, -0.383269749734604, 0.9886746761735817),
    (55, 3, 0, -0.3915324813896227, 0.9854077763388168),
    (60, 3, 0, -0.3918571076446986, 0.9840554385517609),
    (65, 3, 0, -0.39338395819164546, 0.9879183642152232),
    (70, 3, 0, -0.39506682835834633, 0.9870671017521111),
    (75, 3, 0, -0.39490817855591775, 0.9868521974890517),
    (80, 3, 0, -0.4051134281233089, 0.9847340628566873),
    (85, 3, 0, -0.4003985266621273, 0.9814370541791196),
    (90, 3, 0, -0.4040177986073538, 0.979653056839981),
    (95, 3, 0, -0.39920960047848764, 0.9745296220239045),
    (100, 3, 0, -0.4036186582766553, 0.9710037854996928),
    (125, 3, 0, -0.4041379348607283, 0.9690837727804816),
    (150, 3, 0, -0.40658117930382437, 0.9613352675818204),
    (200, 3, 0, -0.41174522699627997, 0.9656338416494337),
    (250, 3, 0, -0.41667449096046394, 0.9530379756836197),
    (6, 0, 1, -1.5675414965893206, 2.6273440544676885),
    (7, 0, 1, -1.5263343858242207, 1.768923941381051),
    (8, 0, 1, -1.5100823062425381, 1.4359091012346203),
    (9, 0, 1, -1.512805441594212, 1.2576640749807175),
    (10, 0, 1, -1.5090265753437377, 1.1518949126005862),
    (11, 0, 1, -1.5075603711071508, 1.0904694890886042),
    (12, 0, 1, -1.5151835664539914, 1.0243709665955745),
    (13, 0, 1, -1.5087049592787403, 0.9873303812899379),
    (14, 0, 1, -1.5123492245191834, 0.9529649659611484),
    (15, 0, 1, -1.5157320575099322, 0.9380396761732759),
    (16, 0, 1, -1.514364988628391, 0.9246409220260039),
    (17, 0, 1, -1.5175267927846992, 0.9023072638695352),
    (18, 0, 1, -1.5198306807547304, 0.8868585508005293),
    (19, 0, 1, -1.520462195261077, 0.8731365448325674),
    (20, 0, 1, -1.5179299582132466, 0.8603926740173007),
    (21, 0, 1, -1.5200872533941252, 0.8473485226223437),
    (22, 0, 1, -1.5170884510991935, 0.844004723317023),
    (23, 0, 1, -1.520912933189752, 0.8391269805994558),
    (24, 0, 1, -1.5108174647662131, 0.8411603541168091),
    (25, 0, 1, -1.521306483460804, 0.8228693490536163),
    (26, 0, 1, -1.5228057693187467, 0.8205006736200088),
    (27, 0, 1, -1.524534853458223, 0.8169313702254717),
    (28, 0, 1, -1.523376298778574, 0.8006975835878687),
    (29, 0, 1, -1.5151092954890641, 0.7990687684505725),
    (30, 0, 1, -1.5217342186618366, 0.7978241362751857),
    (35, 0, 1, -1.530013986004458, 0.7819613440482308),
    (40, 0, 1, -1.5315081462718447, 0.7799223849111162),
    (45, 0, 1, -1.5234294448165744, 0.7726459895728441),
    (50, 0, 1, -1.5223847814369915, 0.7531108751352863),
    (55, 0, 1, -1.5272276448346211, 0.748637568095116),
    (60, 0, 1, -1.530420739469061, 0.7564522465509174),
    (65, 0, 1, -1.525276772630865, 0.7438025774889133),
    (70, 0, 1, -1.5280178291018027, 0.746858028903895),
    (75, 0, 1, -1.5319021589157267, 0.74058370847889),
    (80, 0, 1, -1.535328603329574, 0.733886989211336),
    (85, 0, 1, -1.5295931116391825, 0.7353060632702184),
    (90, 0, 1, -1.5293660748672515, 0.7369154893638613),
    (95, 0, 1, -1.5293945916638334, 0.7325351631960692),
    (100, 0, 1, -1.5259952282628932, 0.7328286597907564),
    (125, 0, 1, -1.5253529773224679, 0.7225237373232807),
    (150, 0, 1, -1.5272414325652448, 0.7187287450858675),
    (200, 0, 1, -1.5389133472785754, 0.7140989294621963),
    (250, 0, 1, -1.5298653003677518, 0.7139225489260391),
    (6, 1, 1, -13.916733309408201, 2800354.092116083),
    (7, 1, 1, -1.807145457710743, 31.880663228691816),
    (8, 1, 1, -1.5661256121455511, 3.154254996014997),
    (9, 1, 1, -1.502275114417055, 1.948262009128058),
    (10, 1, 1, -1.4891893604057946, 1.5555906911358912),
    (11, 1, 1, -1.489356802584338, 1.383332578171126),
    (12, 1, 1, -1.4930330828729395, 1.2646478690885343),
    (13, 1, 1, -1.4886123096458717, 1.1715309735094706),
    (14, 1, 1, -1.4949959009206106, 1.119750142601583),
    (15, 1, 1, -1.4927862620330365, 1.066027299847908),
    (16, 1, 1, -1.500718654799262, 1.027099519033748),
    (17, 1, 1, -1.4973595976308816, 1.003226493900056),
    (18, 1, 1, -1.4962373943931653, 0.9763105233409114),
    (19, 1, 1, -1.508598595773966, 0.9560039904197053),
    (20, 1, 1, -1.5172774418519772, 0.9423389157031128),
    (21, 1, 1, -1.4996395889319547, 0.9284565732476352),
    (22, 1, 1, -1.5098190345207412, 0.921307089520803),
    (23, 1, 1, -1.5139288991401012, 0.9051216998626788),
    (24, 1, 1, -1.513422704452174, 0.8919286665463889),
    (25, 1, 1, -1.5131211401782205, 0.8838229373220325),
    (26, 1, 1, -1.5081844881392317, 0.8720713514876683),
    (27, 1, 1, -1.5120864943904875, 0.8739765867190014),
    (28, 1, 1, -1.5154363556380162, 0.8476697518851989),
    (29, 1, 1, -1.5128810580083378, 0.8521487824803887),
    (30, 1, 1, -1.5189629346197293, 0.8497746861113349),
    (35, 1, 1, -1.512465833414111, 0.8224725389280656),
    (40, 1, 1, -1.5257697940699382, 0.8030691080056891),
    (45, 1, 1, -1.5187260446351392, 0.7948131910222457),
    (50, 1, 1, -1.5235430859899937, 0.7717901212351412),
    (55, 1, 1, -1.519692910422521, 0.7809428582650527),
    (60, 1, 1, -1.5216554894061944, 0.7645129709082836),
    (65, 1, 1, -1.5172277807687042, 0.7626565880712615),
    (70, 1, 1, -1.5289106355662374, 0.7629815734591999),
    (75, 1, 1, -1.530149486610951, 0.7602541097725724),
    (80, 1, 1, -1.52415208976715, 0.7505130974228633),
    (85, 1, 1, -1.5236784540905013, 0.7542044465568204),
    (90, 1, 1, -1.5258662074870182, 0.7483862811516925),
    (95, 1, 1, -1.5328569267631826, 0.7372810964889497),
    (100, 1, 1, -1.5301551203554444, 0.7412693002820364),
    (125, 1, 1, -1.521241144123992, 0.7329698616853556),
    (150, 1, 1, -1.5297248441466276, 0.7269636495515239),
    (200, 1, 1, -1.5325130380489058, 0.7362044833590996),
    (250, 1, 1, -1.5285593053210258, 0.7163175470493918),
    (8, 2, 1, -5.304298823990812, 17517.41607419878),
    (9, 2, 1, -1.4595705633269422, 17.323550034804022),
    (10, 2, 1, -1.312289653004575, 2.7506078488947865),
    (11, 2, 1, -1.3039629197851508, 1.9776416844875748),
    (12, 2, 1, -1.3072131467940773, 1.5838253769953599),
    (13, 2, 1, -1.3267103773354139, 1.4013980544346838),
    (14, 2, 1, -1.3340217729191994, 1.3104409624424063),
    (15, 2, 1, -1.364079363876094, 1.223961868246843),
    (16, 2, 1, -1.3648525565398073, 1.1565571190416744),
    (17, 2, 1, -1.3774134085143195, 1.1151736986410743),
    (18, 2, 1, -1.3835111187649936, 1.082284245853325),
    (19, 2, 1, -1.3927999924661638, 1.0465295266299055),
    (20, 2, 1, -1.4072324831965362, 1.0218795104163365),
    (21, 2, 1, -1.4040610675504888, 0.9985073304681369),
    (22, 2, 1, -1.4256837954917194, 0.9881307058055522),
    (23, 2, 1, -1.4263976871141122, 0.9701682666340313),
    (24, 2, 1, -1.4384783490323212, 0.9503490119254291),
    (25, 2, 1, -1.4296968837471524, 0.9477863120887516),
    (26, 2, 1, -1.4408232548469535, 0.9208442589076871),
    (27, 2, 1, -1.4434750957730453, 0.9164634021273267),
    (28, 2, 1, -1.4410456113460992, 0.9208086451469212),
    (29, 2, 1, -1.447557320888263, 0.9061710637369033),
    (30, 2, 1, -1.4451840354952803, 0.884559707424641),
    (35, 2, 1, -1.465635102197153, 0.8548702082300139),
    (40, 2, 1, -1.473630997840692, 0.8366899576501015),
    (45, 2, 1, -1.4842371226499964, 0.8079230753694843),
    (50, 2, 1, -1.483094087895323, 0.8029301200603786),
    (55, 2, 1, -1.4932009194810052, 0.7953644007907879),
    (60, 2, 1, -1.4896445451449183, 0.7970070391033346),
    (65, 2, 1, -1.50139338557527, 0.7811284033991716),
    (70, 2, 1, -1.5044581235456627, 0.776179887092947),
    (75, 2, 1, -1.4983540218861402, 0.7755556668078738),
    (80, 2, 1, -1.5001580464364574, 0.7755934187460688),
    (85, 2, 1, -1.5028402118249578, 0.7633148312666729),
    (90, 2, 1, -1.5128957951974344, 0.7583367074985525),
    (95, 2, 1, -1.507020656827476, 0.7622600760673341),
    (100, 2, 1, -1.512125041344326, 0.750495111143363),
    (125, 2, 1, -1.5153111475394745, 0.7485321327801793),
    (150, 2, 1, -1.519408881858348, 0.7432167887817083),
    (200, 2, 1, -1.526718866195933, 0.7276173080195032),
    (250, 2, 1, -1.5260751715020788, 0.7238028633681092),
    (10, 3, 1, -7.956787739924911, 91422.71221359768),
    (11, 3, 1, -1.484917537488371, 9.939271077395606),
    (12, 3, 1, -1.318994276388521, 3.0099869489034203),
    (13, 3, 1, -1.3086235728857938, 2.151761943707081),
    (14, 3, 1, -1.3068228164876028, 1.7271939810339385),
    (15, 3, 1, -1.3286548139103251, 1.5392276189978826),
    (16, 3, 1, -1.322217069032935, 1.3938057767556191),
    (17, 3, 1, -1.3435185646850494, 1.300583968139717),
    (18, 3, 1, -1.3554728127371924, 1.2402176577605406),
    (19, 3, 1, -1.3646783956162198, 1.2120289149443026),
    (20, 3, 1, -1.3753459360596598, 1.1476474367681606),
    (21, 3, 1, -1.3793769382962602, 1.122750019635926),
    (22, 3, 1, -1.3918783791797946, 1.0747239839329705),
    (23, 3, 1, -1.4022502741753717, 1.0539183582808946),
    (24, 3, 1, -1.4081294560920274, 1.032566368367843),
    (25, 3, 1, -1.4172587880811074, 1.008113160853129),
    (26, 3, 1, -1.4221592869777968, 0.981243898317669),
    (27, 3, 1, -1.4231365137875354, 0.9853574354917388),
    (28, 3, 1, -1.4313925646620185, 0.9790198516399558),
    (29, 3, 1, -1.4257865414271536, 0.9525285610456787),
    (30, 3, 1, -1.433336646646367, 0.9508693861579902),
    (35, 3, 1, -1.455836794941499, 0.8917690086628399),
    (40, 3, 1, -1.4639635398640698, 0.8724128333413346),
    (45, 3, 1, -1.477775349452111, 0.8509152328745266),
    (50, 3, 1, -1.4864504372942957, 0.8355080273690167),
    (55, 3, 1, -1.4763582042412082, 0.8230554024479283),
    (60, 3, 1, -1.4957399993401321, 0.8044638902322571),
    (65, 3, 1, -1.4881207890804393, 0.7973487325160133),
    (70, 3, 1, -1.4942386071663738, 0.7970548845890276),
    (75, 3, 1, -1.4954943150667053, 0.7790011202495106),
    (80, 3, 1, -1.4960330958318309, 0.782713145826379),
    (85, 3, 1, -1.5084800843314785, 0.7726589716264395),
    (90, 3, 1, -1.505492282911838, 0.7692277447132363),
    (95, 3, 1, -1.5049044649457957, 0.761621553546325),
    (100, 3, 1, -1.5079617197384345, 0.7614780750529739),
    (125, 3, 1, -1.517589431559957, 0.7591704184245951),
    (150, 3, 1, -1.5211116701134533, 0.7398984348413785),
    (200, 3, 1, -1.518481905063574, 0.7324704206067347),
    (250, 3, 1, -1.5264371825787242, 0.731537717102321),
    (6, 0, 2, -2.5012296742614297, 20.770944673884447),
    (7, 0, 2, -2.2365461503773987, 3.012311244835926),
    (8, 0, 2, -2.179250376114, 1.8653928447431105),
    (9, 0, 2, -2.167598201733249, 1.458988282695715),
    (10, 0, 2, -2.1663829527147347, 1.2696693661543448),
    (11, 0, 2, -2.1574363927008067, 1.1191762542263946),
    (12, 0, 2, -2.162863620846607, 1.0439968149920165),
    (13, 0, 2, -2.162740538329093, 0.995109059203234),
    (14, 0, 2, -2.161779670132049, 0.9370252080801135),
    (15, 0, 2, -2.168247370132643, 0.9039770195443909),
    (16, 0, 2, -2.1593631759127834, 0.8530441864603668),
    (17, 0, 2, -2.170641925697166, 0.8370516260049069),
    (18, 0, 2, -2.1667841245514303, 0.8148453720595239),
    (19, 0, 2, -2.1716859463677647, 0.7977963608829145),
    (20, 0, 2, -2.174673168007501, 0.7832291255251242),
    (21, 0, 2, -2.173067616701016, 0.7677708199065345),
    (22, 0, 2, -2.1640009723311975, 0.7614876539388077),
    (23, 0, 2, -2.169145160238376, 0.7491021508146726),
    (24, 0, 2, -2.166239181649135, 0.7324894949950994),
    (25, 0, 2, -2.169544822382295, 0.733017677881295),
    (26, 0, 2, -2.1755201537140514, 0.7254966554290684),
    (27, 0, 2, -2.1745760974905295, 0.7207474365093455),
    (28, 0, 2, -2.1749067408956604, 0.7068879851668483),
    (29, 0, 2, -2.1721759620066026, 0.7010784872543621),
    (30, 0, 2, -2.170199874898956, 0.7059975104743492),
    (35, 0, 2, -2.1741081768650723, 0.671523774905145),
    (40, 0, 2, -2.180910394433077, 0.6672394206010974),
    (45, 0, 2, -2.1828046182769247, 0.6463601964081804),
    (50, 0, 2, -2.1714939847966868, 0.6290272146821467),
    (55, 0, 2, -2.182723171864231, 0.6326830165332318),
    (60, 0, 2, -2.1755446455557035, 0.6201357836551961),
    (65, 0, 2, -2.1730499191792623, 0.6143011864367964),
    (70, 0, 2, -2.176411487118592, 0.6153140287270267),
    (75, 0, 2, -2.1750333699100244, 0.6154497520904431),
    (80, 0, 2, -2.175195674422485, 0.60153291256952),
    (85, 0, 2, -2.1797520843983054, 0.6073142600272207),
    (90, 0, 2, -2.1796466789622375, 0.6115739444387518),
    (95, 0, 2, -2.1787001730290703, 0.5986421226191091),
    (100, 0, 2, -2.1763082465223214, 0.592502121718704),
    (125, 0, 2, -2.17914463357423, 0.5969739640739904),
    (150, 0, 2, -2.1741220238844083, 0.5858266715901687),
    (200, 0, 2, -2.1818955406397835, 0.5765800563816342),
    (250, 0, 2, -2.173205188237731, 0.5742731297063987),
    (7, 1, 2, -16.32143962487438, 1627998.4447985),
    (8, 1, 2, -2.639524911341133, 22.857046771420308),
    (9, 1, 2, -2.2822109023698216, 4.25765401844983),
    (10, 1, 2, -2.2058718900972227, 2.618906378730189),
    (11, 1, 2, -2.1779817991134016, 1.7227454093389303),
    (12, 1, 2, -2.1715760796352295, 1.4400671888567973),
    (13, 1, 2, -2.1565654055257344, 1.2964441079152862),
    (14, 1, 2, -2.1668133480111735, 1.1866162368536444),
    (15, 1, 2, -2.1656942325129096, 1.0812826631697625),
    (16, 1, 2, -2.1675747948633775, 1.030081027783825),
    (17, 1, 2, -2.16551235666449, 0.9713600503184588),
    (18, 1, 2, -2.16380641189216, 0.9401630806497008),
    (19, 1, 2, -2.1696245832123835, 0.9234859884165563),
    (20, 1, 2, -2.1655913100084363, 0.8686547430967207),
    (21, 1, 2, -2.1663382877873154, 0.8624484858663934),
    (22, 1, 2, -2.173618536244939, 0.8556117329399762),
    (23, 1, 2, -2.1693071685294973, 0.8221529951832763),
    (24, 1, 2, -2.1695881562163137, 0.8132134088491481),
    (25, 1, 2, -2.174653045949907, 0.8023578179487855),
    (26, 1, 2, -2.177025265963957, 0.7880031358947931),
    (27, 1, 2, -2.1751459177597545, 0.7760139602430883),
    (28, 1, 2, -2.1751269341530426, 0.7479459180188699),
    (29, 1, 2, -2.1723698944246093, 0.7555754734160605),
    (30, 1, 2, -2.1731093000812454, 0.7379406490248384),
    (35, 1, 2, -2.173062023684905, 0.7071298563565436),
    (40, 1, 2, -2.178346676187543, 0.686475247385155),
    (45, 1, 2, -2.172085961716067, 0.6658502950773575),
    (50, 1, 2, -2.178420106672556, 0.6609814384960071),
    (55, 1, 2, -2.1707355240738715, 0.6507381859244435),
    (60, 1, 2, -2.1822871675182167, 0.640556338612439),
    (65, 1, 2, -2.1839735731770684, 0.6236282174838899),
    (70, 1, 2, -2.171369720721781, 0.6301625119696517),
    (75, 1, 2, -2.1847567834758004, 0.6197536079951961),
    (80, 1, 2, -2.1759737099563154, 0.6193900008795503),
    (85, 1, 2, -2.172341467335897, 0.6120503700165423),
    (90, 1, 2, -2.1822785655420427, 0.6128772704340444),
    (95, 1, 2, -2.1787451829625324, 0.6099230311136998),
    (100, 1, 2, -2.1771462632843037, 0.606565033729963),
    (125, 1, 2, -2.1799404234583295, 0.6034558455095305),
    (150, 1, 2, -2.1804330941944436, 0.5907155945934383),
    (200, 1, 2, -2.1822553093372496, 0.5835238752604409),
    (250, 1, 2, -2.1776709229718496, 0.5811793905684448),
    (9, 2, 2, -7.472492065566717, 45414.59553144364),
    (10, 2, 2, -2.1135577312570217, 12.045287095677386),
    (11, 2, 2, -1.9192506086825039, 3.554979379177109),
    (12, 2, 2, -1.9045276566301559, 2.0877387749637766),
    (13, 2, 2, -1.9118484968017138, 1.718872029121942),
    (14, 2, 2, -1.9239827872841206, 1.4381531202921876),
    (15, 2, 2, -1.9469390547116414, 1.276774859219298),
    (16, 2, 2, -1.9574880975450608, 1.1822560151374684),
    (17, 2, 2, -1.9946426283693168, 1.0945892220372049),
    (18, 2, 2, -1.998125635675641, 1.028876117345032),
    (19, 2, 2, -2.015100958218628, 1.0115087010255235),
    (20, 2, 2, -2.0217374368818195, 0.9728015276132318),
    (21, 2, 2, -2.036044185745316, 0.9392895814455334),
    (22, 2, 2, -2.0410283690428326, 0.8952052057338167),
    (23, 2, 2, -2.04507110268271, 0.8852531565499956),
    (24, 2, 2, -2.056657929982242, 0.8574368577357285),
    (25, 2, 2, -2.0571864587849356, 0.8419374776958113),
    (26, 2, 2, -2.0700443828764397, 0.8225337172890367),
    (27, 2, 2, -2.0681756129501165, 0.8129155715938827),
    (28, 2, 2, -2.068698627435852, 0.8020391363796021),
    (29, 2, 2, -2.088458828324526, 0.7847238400010388),
    (30, 2, 2, -2.0809398197127935, 0.7798080809988625),
    (35, 2, 2, -2.1017318424673297, 0.7360854841969456),
    (40, 2, 2, -2.108621703321384, 0.7052738914902184),
    (45, 2, 2, -2.119959768651517, 0.6970605380740839),
    (50, 2, 2, -2.1264907865793212, 0.6715067430387848),
    (55, 2, 2, -2.133963195690536, 0.6633231530594939),
    (60, 2, 2, -2.1352007332477236, 0.6599186920703323),
    (65, 2, 2, -2.140450808151317, 0.6420032662888266),
    (70, 2, 2, -2.147246026105623, 0.631752225930168),
    (75, 2, 2, -2.144571621786179, 0.6351982630765316),
    (80, 2, 2, -2.1482337948881636, 0.6272981571187819),
    (85, 2, 2, -2.1491215076377888, 0.6229493282624459),
    (90, 2, 2, -2.158413207054502, 0.6180573488772471),
    (95, 2, 2, -2.159177319394781, 0.6178707176427363),
    (100, 2, 2, -2.1578255560314057, 0.6111258656675815),
    (125, 2, 2, -2.162946501426193, 0.5953412906225444),
    (150, 2, 2, -2.1631849177591795, 0.5949494167030422),
    (200, 2, 2, -2.170445372531609, 0.5824220525161461),
    (250, 2, 2, -2.169878995048017, 0.5840955664200995),
    (11, 3, 2, -7.6943447200547554, 54911.24323767804),
    (12, 3, 2, -2.2064939439677267, 18.72277767159617),
    (13, 3, 2, -1.9798106371352233, 4.595601716678882),
    (14, 3, 2, -1.915001413505172, 2.4472753105004537),
    (15, 3, 2, -1.9241152242860584, 1.9064979830865039),
    (16, 3, 2, -1.9318931361257319, 1.62747435661629),
    (17, 3, 2, -1.948500707795101, 1.4718947852659354),
    (18, 3, 2, -1.9605172682973946, 1.2954017924888581),
    (19, 3, 2, -1.9761116355596486, 1.224735145865852),
    (20, 3, 2, -1.9927247036279525, 1.1458962387387417),
    (21, 3, 2, -2.010502556199531, 1.0955448634748064),
    (22, 3, 2, -2.0114901615178593, 1.0671174209881422),
    (23, 3, 2, -2.020983675026522, 1.0249549917697498),
    (24, 3, 2, -2.027488008866322, 0.9881397411376234),
    (25, 3, 2, -2.042198880690121, 0.9475225466745592),
    (26, 3, 2, -2.053928875131681, 0.9287005192023482),
    (27, 3, 2, -2.051023674754551, 0.8969137277189937),
    (28, 3, 2, -2.057537467555846, 0.8911569510288563),
    (29, 3, 2, -2.073056239661291, 0.8669772104187058),
    (30, 3, 2, -2.070091059894555, 0.8503428571332455),
    (35, 3, 2, -2.09438638557629, 0.7939271173752),
    (40, 3, 2, -2.102787846901814, 0.7445637858463114),
    (45, 3, 2, -2.1202067641823263, 0.7192357904000014),
    (50, 3, 2, -2.1213174605902547, 0.7030845812904759),
    (55, 3, 2, -2.122380902791141, 0.6875322011756423),
    (60, 3, 2, -2.1387431023921724, 0.6733418296695438),
    (65, 3, 2, -2.142917468325318, 0.6632072939930787),
    (70, 3, 2, -2.148238823347003, 0.6470285828575881),
    (75, 3, 2, -2.1476927616959873, 0.6405759414622507),
    (80, 3, 2, -2.151538919464912, 0.6410336320722032),
    (85, 3, 2, -2.1524356450213653, 0.6398596942904443),
    (90, 3, 2, -2.1515252722924134, 0.6321268415143296),
    (95, 3, 2, -2.157775995689519, 0.6271850684225015),
    (100, 3, 2, -2.1585478407169076, 0.6181008948050616),
    (125, 3, 2, -2.163438007185516, 0.6048565144068825),
    (150, 3, 2, -2.1681477642622946, 0.5978352760567739),
    (200, 3, 2, -2.170839657461791, 0.5946299661399388),
    (250, 3, 2, -2.174916530244532, 0.5875864309182438),
];
