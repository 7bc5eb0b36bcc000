// Generated coefficient tables. Regenerate rather than edit by hand.

pub const ORDER4_NORM: [f64; 4] = [0.3541666666666667, 1.2291666666666667, 0.8958333333333334, 1.0208333333333333];

pub const ORDER4_D1_BOUNDARY: [[f64; 6]; 4] = [
        [-1.411764705882353, 1.7352941176470589, -0.23529411764705882, -0.08823529411764706, 0.0, 0.0],
        [-0.5, 0.0, 0.5, 0.0, 0.0, 0.0],
        [0.09302325581395349, -0.686046511627907, 0.0, 0.686046511627907, -0.09302325581395349, 0.0],
        [0.030612244897959183, 0.0, -0.6020408163265306, 0.0, 0.6530612244897959, -0.08163265306122448],
    ];

pub const ORDER4_G_BOUNDARY: [[[f64; 8]; 8]; 6] = [
    [
        [3.8399929864441074, -0.9179867374105516, -0.07225333108560388, -0.053062097130428615, -0.04142937964300105, -0.034110866832092496, 0.0, 0.0],
        [-8.691671795636214, 0.1559325977465479, 0.3174398265478057, 0.15600218921665052, 0.12940316617495784, 0.10298670749252532, 0.0, 0.0],
        [7.968053239906161, 0.693544962554949, -0.17420289316447493, -0.12106352422215598, -0.14633324802006045, -0.11187504664779986, 0.0, 0.0],
        [-3.8011176338716677, 0.09010748819667566, -0.07126167481972338, 0.09015134984732219, 0.07687454344044513, 0.05881356330917203, 0.0, 0.0],
        [0.6765625042315362, -0.029940685638690973, -0.008066503983272997, -0.08757510412498808, -0.025215109305534913, -0.02339448248458317, 0.0, 0.0],
        [0.008180698926080162, 0.008342374551069866, 0.008344576505269442, 0.01554718641359998, 0.006700027353193578, 0.007580125162778195, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    [
        [0.7498572792234631, 0.04492973155409008, 0.09146571273411352, 0.04494978333361116, 0.03728565805041158, 0.029674136057168315, 0.0, 0.0],
        [-1.01148490141394, -0.14695799685661096, -0.4900610016442433, -0.14702340803165218, -0.12207708158006905, -0.09621388650347247, 0.0, 0.0],
        [0.28901407055463973, 0.17508163195330392, 0.1751768102993855, 0.17515936211366356, 0.14565519333526236, 0.11356302633511968, 0.0, 0.0],
        [-0.046705595414909845, -0.0927942302611472, 0.2501784516261677, -0.09283547148718978, -0.07735967102948872, -0.06014712055620717, 0.0, 0.0],
        [0.023022188704345276, 0.023526894318375947, -0.02297189124408641, 0.02353757209194154, 0.01963379812140852, 0.016090027835103746, 0.0, 0.0],
        [-0.003703041653598131, -0.0037860307080117544, -0.0037880817713369618, -0.003787838020374302, -0.0031378968975247297, -0.0029661831677121014, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    [
        [-0.19867662608361092, 0.27419219449846827, -0.06887091125107149, -0.047862323529689575, -0.05785267944979134, -0.04422966960494414, 0.0, 0.0],
        [0.3965541898307847, 0.24022828570337046, 0.24035887924799407, 0.2403349387140965, 0.1998524745762903, 0.15581903613423398, 0.0, 0.0],
        [-0.3219511665627103, -0.6494970604438598, -0.30662979566104576, -0.7196285824866996, -0.26157803281137204, -0.2003064246549987, 0.0, 0.0],
        [0.1546899703767415, 0.1663623128243492, 0.16644522400588882, 0.16642958303055583, 0.21065767338126487, 0.1083017532090336, 0.0, 0.0],
        [-0.02938332578438973, -0.03006104799503498, -0.03008202176525867, 0.4179519325631422, -0.05370449357066415, -0.01781202896528678, 0.0, 0.0],
        [-0.0012330417768153276, -0.001224684587293229, -0.0012213745765069345, -0.05722554829140549, -0.03737494212572764, -0.001772666118037939, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    [
        [-0.012632648486088903, 0.03126178161925483, -0.024723438202761173, 0.031276998926621974, 0.02667075996913403, 0.020404705637876008, 0.0, 0.0],
        [-0.056237349581217996, -0.11173182827362622, 0.30123527848865095, -0.11178148607641217, -0.09314735899469051, -0.07242204311869843, 0.0, 0.0],
        [0.13574834135101804, 0.1459914173764697, 0.14606417616843304, 0.14605045041456943, 0.18486285623253856, 0.09504031404058047, 0.0, 0.0],
        [-0.08124954374567384, -0.08020109868020048, -0.49326777659326665, -0.08023242405145545, -0.5889426266657111, -0.09545206631892292, 0.0, 0.0],
        [0.012754459295650722, 0.013046350229222414, 0.06905991806696685, 0.013054446531741218, 0.20947109627710223, 0.17508048786274275, 0.0, 0.0],
        [0.001616741166311987, 0.0016333777288797598, 0.001631842071977021, 0.0016320142549349906, 0.2610852731816267, -0.12265139810357782, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    [
        [-0.010384113084664233, -0.01060399283036972, -0.00285688682740919, -0.03101618271093328, -0.008930351212376944, -0.008285545879956537, 0.0, 0.0],
        [0.028298106949091063, 0.02891847426633709, -0.028236282987522888, 0.028931599029678127, 0.024133210190897973, 0.019777325880648355, 0.0, 0.0],
        [-0.026322562681849133, -0.026929688828885495, -0.02694847783137756, 0.37441527292114823, -0.04811027549038668, -0.015956609281402752, 0.0, 0.0],
        [0.01302017719764345, 0.013318149192331223, 0.07049866636002865, 0.013326414167819165, 0.2138350774495418, 0.17872799802654984, 0.0, 0.0],
        [-0.008344528722782544, -0.008501164811505695, -0.016255666472120428, -0.4438774629964626, -0.46022041312963086, -0.8472677423317024, -0.04166666666666663, 0.0],
        [0.0037329203425613966, 0.0037982230120925894, 0.0037986477584014077, 0.05822035958875035, 0.40429275219195465, 0.5063379069191969, 0.16666666666666663, 0.0],
        [0.0, 0.0, 0.0, 0.0, -0.12500000000000006, 0.16666666666666657, -0.12499999999999986, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    [
        [0.0028973308696533893, 0.0029545909868372447, 0.0029553708456162616, 0.0055062951881499934, 0.0023729263542560677, 0.0026846276618172713, 0.0, 0.0],
        [-0.004551655365881036, -0.004653662745264444, -0.004656183843935016, -0.004655884233376741, -0.0038569982698741833, -0.003645933476979459, 0.0, 0.0],
        [-0.0011045999250637235, -0.001097113276116849, -0.0010941480581208014, -0.05126455367771742, -0.033481718987631, -0.0015880133974089726, 0.0, 0.0],
        [0.001650423273943485, 0.0016674064315647542, 0.001665838781809875, 0.0016660145519127956, 0.266524549706244, -0.12520663556406908, 0.0, 0.0],
        [0.003732920342561397, 0.0037982230120925894, 0.0037986477584014086, 0.05822035958875035, 0.40429275219195465, 0.5063379069191968, 0.16666666666666663, 0.0],
        [-0.0026244191952135097, -0.002669444409113293, -0.0026695254837717257, -0.009472231417718979, -0.8025181776616161, -0.7535819521425567, -0.8333333333333335, -0.041666666666666616],
        [0.0, 0.0, 0.0, 0.0, 0.16666666666666663, 0.49999999999999994, 0.5000000000000002, 0.1666666666666666],
        [0.0, 0.0, 0.0, 0.0, 0.0, -0.12499999999999992, 0.16666666666666669, -0.12499999999999983],
    ],
];

pub const ORDER4_G_INTERIOR: [(i32, i32, f64); 19] = [
    (-2, -2, -0.125),
    (-2, -1, 0.16666666666666666),
    (-2, 0, -0.125),
    (-1, -2, 0.16666666666666666),
    (-1, -1, 0.5),
    (-1, 0, 0.5),
    (-1, 1, 0.16666666666666666),
    (0, -2, -0.041666666666666664),
    (0, -1, -0.8333333333333334),
    (0, 0, -0.75),
    (0, 1, -0.8333333333333334),
    (0, 2, -0.041666666666666664),
    (1, -1, 0.16666666666666666),
    (1, 0, 0.5),
    (1, 1, 0.5),
    (1, 2, 0.16666666666666666),
    (2, 0, -0.125),
    (2, 1, 0.16666666666666666),
    (2, 2, -0.125),
];

pub const ORDER6_NORM: [f64; 6] = [0.3159490740740741, 1.3903935185185186, 0.6275462962962963, 1.2405092592592593, 0.9116898148148148, 1.0139120370370371];

pub const ORDER6_D1_BOUNDARY: [[f64; 9]; 6] = [
        [-1.5825335189391163, 2.060177790802745, -0.2487093071531492, -0.2896036339658583, -0.0027083791242337655, 0.06337704837961267, 0.0, 0.0, 0.0],
        [-0.46814894974888316, 0.0, 0.3481561641554982, 0.1370210050223369, 0.022234246233247316, -0.039262465662199285, 0.0, 0.0, 0.0],
        [0.12521701709086439, -0.7713758760604943, 0.0, 0.8760850854543218, -0.2927517521209886, 0.06282552563629656, 0.0, 0.0, 0.0],
        [0.07376002985631648, -0.15357653791130185, -0.44319213783666106, 0.0, 0.5885177582882378, -0.078944454811221, 0.013435342414629596, 0.0, 0.0],
        [0.0009385976048410985, -0.033908848546400916, 0.2015107274343024, -0.8007786382294444, 0.0, 0.7784867335279929, -0.1645296432652025, 0.01828107147391139, 0.0],
        [-0.01974916858823619, 0.05384123650144974, -0.03888495696445286, 0.09658759693462098, -0.7, 0.0, 0.7397091390607521, -0.1479418278121504, 0.016437980868016712],
    ];

pub const ORDER6_G_BOUNDARY: [[[f64; 9]; 9]; 6] = [
    [
        [4.070162568544818, -0.9857922491154063, -0.05207846215167076, -0.039702265224165215, -0.03319260616822173, -0.037999419329501447, 0.0, 0.0, 0.0],
        [-9.338082373392334, 0.06831510075692053, 0.2589255370488789, 0.10202037855255616, 0.10599803185369003, 0.11250215906769538, 0.0, 0.0, 0.0],
        [9.04721637314424, 0.6572249946478192, -0.05895046356470091, 0.08547568268671393, -0.09251746225325054, -0.09114012576896838, 0.0, 0.0, 0.0],
        [-4.693379729300864, 0.26573463485947485, -0.2341439421995895, -0.03712121618503931, -0.025155553118053158, 0.01009014038555222, 0.0, 0.0, 0.0],
        [0.8291605089533769, 0.09237879808419716, 0.11853874480926957, -0.10215116981360312, 0.07254277554643937, -0.07014849146708604, 0.0, 0.0, 0.0],
        [0.08492265205076514, -0.09786127923300544, -0.032291413942187194, -0.008521410016462744, -0.02767518586060398, 0.07669573711230826, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    [
        [0.7549240603607429, 0.015523729463601236, 0.05883750362407638, 0.023182821058250876, 0.024086691696845342, 0.025564671091567032, 0.0, 0.0, 0.0],
        [-1.0095378863932878, -0.0497475985835077, -0.3174055430038841, -0.062376016592387395, -0.07863537548308659, -0.07622829975259933, 0.0, 0.0, 0.0],
        [0.15607771499863957, 0.04375309969801847, 0.04296083482302602, -0.027997812553738288, 0.07738029266943502, 0.062353976648792275, 0.0, 0.0, 0.0],
        [0.14642384362635238, 0.011988997770978315, 0.31678530692471724, 0.020889819099525225, -0.012312665194863195, -0.00497007517755013, 0.0, 0.0, 0.0],
        [-0.029400638730304143, -0.03386554761998751, -0.13517462857885623, 0.03878275551812253, -0.03564175040370591, 0.0392305296234847, 0.0, 0.0, 0.0],
        [-0.01848709386214301, 0.012347319270897182, 0.03399652621092072, 0.0075184334702271954, 0.025122806715375312, -0.04595080243369448, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    [
        [-0.22554569247341458, 0.33089132983947195, -0.02967963397988206, 0.043034215897859045, -0.04657952203226177, -0.045886078075272924, 0.0, 0.0, 0.0],
        [0.34580626895585703, 0.09693950325936848, 0.09518415874751229, -0.06203204024493878, 0.17144401620028082, 0.13815166386609026, 0.0, 0.0, 0.0],
        [-0.10863478496771994, -0.35404251517005164, -0.08394029519122864, -0.47424235981694235, -0.2687728031653366, -0.11468771659039813, 0.0, 0.0, 0.0],
        [-0.056952911006726004, -0.1286072062290453, -0.02248772711256706, 0.05044953376038692, 0.38982540867743654, 0.005426710145530277, 0.0, 0.0, 0.0],
        [0.0590965463693924, 0.04850317179390627, 0.06445787470818128, 0.47870000796619167, -0.13345911037768943, -0.052792061244158965, 0.0, 0.0, 0.0],
        [-0.013769426877388904, 0.006315716506350233, -0.02353437717201583, -0.03590935756255649, -0.11245798930242948, 0.06978748189820945, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    [
        [-0.12054375676856703, 0.06768076191821183, -0.059634832376977, -0.00945451538924429, -0.006406944290134492, 0.0025698885262624015, 0.0, 0.0, 0.0],
        [0.16411547242800628, 0.01343756579798121, 0.35506082217639745, 0.023413826911979536, -0.013800340267390531, -0.005570583421152238, 0.0, 0.0, 0.0],
        [-0.02881122256750032, -0.06505955142506846, -0.011376045568607822, 0.025521307338012483, 0.19720408339700143, 0.002745253070448323, 0.0, 0.0, 0.0],
        [-0.024741733533290317, -0.02473647700524368, -0.3919081279911385, -0.14713319068695938, -0.7188466312074903, -0.01983035773072202, -0.004478447471542661, 0.0, 0.0],
        [0.008413999043575262, 0.006074073414010614, 0.1390674037040568, 0.1959511897516724, 0.3246463228340283, 0.09964928849267285, 0.02015301362194283, 0.0, 0.0],
        [0.0015672413977761398, 0.0026036273001084844, -0.031209219943730895, -0.11293007901894848, 0.23735652315593006, -0.05941047531556509, -0.04030602724388763, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.02463146109348772, -0.020153013621944153, -0.020153013621944132, 0.024631461093487822, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    [
        [0.013132202277634699, 0.03201417329062351, 0.04107998801324668, -0.035400820535378165, 0.025139935087808832, -0.02431018814356372, 0.0, 0.0, 0.0],
        [-0.04483812023195934, -0.05164743221517201, -0.20615117597026786, 0.0591465332028953, -0.05435627111841045, 0.05982942139988851, 0.0, 0.0, 0.0],
        [0.040678110246901815, 0.033386339655523664, 0.044368490119050266, 0.3295050708636145, -0.09186432607183347, -0.036338524319643274, 0.0, 0.0, 0.0],
        [0.011448678652918584, 0.00826481133062914, 0.18922488674623342, 0.2666249653114669, 0.44173661141743237, 0.1355898278614279, 0.027421607210864955, 0.0, 0.0],
        [-0.03217881611171991, -0.03626093067385789, -0.09386120746908211, -0.8354117495407575, -0.6410754906564947, -0.7842014890649835, -0.13710803605432917, -0.006093690491303356, 0.0],
        [0.011757945166224151, 0.014243038612253605, 0.02533901856081959, 0.27037921511989316, 0.478855494115396, 0.3477932729473364, 0.3290592865304, 0.02742160721086596, 0.0],
        [0.0, 0.0, 0.0, -0.054843214421734135, -0.1919512504760692, 0.3290592865304054, -0.19195125047607026, -0.05484321442173371, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.033515297702170585, -0.027421607210867744, -0.027421607210866512, 0.03351529770217155, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    [
        [0.02646307796262399, -0.030494933911355705, -0.010062453115155202, -0.0026553897243145165, -0.008623972325092637, 0.02389945699518038, 0.0, 0.0, 0.0],
        [-0.025351642492856777, 0.016932073057839756, 0.04661997093351642, 0.010310146032948955, 0.03445129986436417, -0.06301305787949726, 0.0, 0.0, 0.0],
        [-0.0085223890469627, 0.003909022042582475, -0.014566264814350109, -0.022225581231499435, -0.06960425766509581, 0.04319395982421549, 0.0, 0.0, 0.0],
        [0.0019175011188516985, 0.003185506883697031, -0.038184107595363996, -0.1381686019640065, 0.29040286924787767, -0.07268800648754899, -0.0493139426040487, 0.0, 0.0],
        [0.010572513649728048, 0.012807060928828294, 0.02278434843994154, 0.24311968647969207, 0.4305774670837394, 0.3127288887247058, 0.29588365562429636, 0.024656971302024062, 0.0],
        [-0.005079061191384265, -0.006338729001591854, -0.006591493848588647, -0.11503723089484545, -0.9237731192260437, -0.5208272524553367, -0.9369649094769483, -0.1232848565101228, -0.005479326956005479],
        [0.0, 0.0, 0.0, 0.024656971302024887, 0.29588365562430075, 0.41916851213442624, 0.41916851213442596, 0.29588365562429986, 0.024656971302024846],
        [0.0, 0.0, 0.0, 0.0, -0.049313942604049914, -0.1725987991141756, 0.2958836556243001, -0.17259879911417708, -0.04931394260405005],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.030136298258030634, -0.024656971302025675, -0.02465697130202491, 0.03013629825803078],
    ],
];

pub const ORDER6_G_INTERIOR: [(i32, i32, f64); 37] = [
    (-3, -3, 0.030555555555555555),
    (-3, -2, -0.025),
    (-3, -1, -0.025),
    (-3, 0, 0.030555555555555555),
    (-2, -3, -0.05),
    (-2, -2, -0.175),
    (-2, -1, 0.3),
    (-2, 0, -0.175),
    (-2, 1, -0.05),
    (-1, -3, 0.025),
    (-1, -2, 0.3),
    (-1, -1, 0.425),
    (-1, 0, 0.425),
    (-1, 1, 0.3),
    (-1, 2, 0.025),
    (0, -3, -0.005555555555555556),
    (0, -2, -0.125),
    (0, -1, -0.95),
    (0, 0, -0.5611111111111111),
    (0, 1, -0.95),
    (0, 2, -0.125),
    (0, 3, -0.005555555555555556),
    (1, -2, 0.025),
    (1, -1, 0.3),
    (1, 0, 0.425),
    (1, 1, 0.425),
    (1, 2, 0.3),
    (1, 3, 0.025),
    (2, -1, -0.05),
    (2, 0, -0.175),
    (2, 1, 0.3),
    (2, 2, -0.175),
    (2, 3, -0.05),
    (3, 0, 0.030555555555555555),
    (3, 1, -0.025),
    (3, 2, -0.025),
    (3, 3, 0.030555555555555555),
];

pub const OP2_EVEN: [f64; 5] = [-0.0078125, 0.03125, 0.953125, 0.03125, -0.0078125];

pub const OP2_ODD: [f64; 4] = [-0.0625, 0.5625, 0.5625, -0.0625];

pub const OP2_BOUNDARY: [[f64; 4]; 4] = [
    [1.0, 0.0, 0.0, 0.0],
    [0.375, 0.75, -0.125, 0.0],
    [0.14825581395348839, 0.5552325581395349, 0.44476744186046513, -0.14825581395348839],
    [-0.22704081632653061, 1.0561224489795917, 0.06887755102040816, 0.10204081632653061],
];

pub const OP3_EVEN: [f64; 7] = [0.0021484375, -0.012890625, 0.0322265625, 0.95703125, 0.0322265625, -0.012890625, 0.0021484375];

pub const OP3_ODD: [f64; 6] = [0.01171875, -0.09765625, 0.5859375, 0.5859375, -0.09765625, 0.01171875];

pub const OP3_BOUNDARY: [[f64; 7]; 7] = [
    [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.36799388342531536, 0.7155244662987308, 0.02046330055191245, -0.15947553370128426, 0.05549388342532394, 0.0, 0.0],
    [-0.09807500302469752, 1.3923000120988087, -0.5884500181482397, 0.3923000120988428, -0.09807500302471361, 0.0, 0.0],
    [0.029322218206011726, 0.3222533345773668, 0.6052644796303832, 0.33246437158452613, -0.4163466113997236, 0.12704220740143649, 0.0],
    [-0.12852048009141348, 0.3030431191995159, 1.0730323241160726, -0.7521508866311926, 0.7156347245731606, -0.21103880116614412, 0.0],
    [-0.2871871536241344, 0.905495336807224, -0.4376098109875367, 0.6267289483606258, 0.37332595713313865, -0.1807532776893171, 0.0],
    [0.23781821006223672, -0.6958056387361117, 0.40718889182208545, 1.572936618828015, -0.7711599709890025, 0.24687345151275542, 0.0021484375],
];
