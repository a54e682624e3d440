//! Reference quantiles: `(p, Φ⁻¹(p), φ(Φ⁻¹(p)))`, evaluated in 50-digit
//! arithmetic for 401 log-spaced `p` in [1e-10, 0.5] and their
//! floating-point complements `1 - p`.

pub const INV_NORM_TABLE: &[(f64, f64, f64)] = &[
    (9.999999999999996e-11, -6.361340902404057, 6.511587997075508e-10),
    (0.9999999999, 6.361340889697422, 6.511588523415216e-10),
    (1.0574197678064254e-10, -6.352761156905912, 6.876606152090632e-10),
    (0.999999999894258, 6.352761165697381, 6.876605768031496e-10),
    (1.1181365653477951e-10, -6.344170323402363, 7.262062290609664e-10),
    (0.9999999998881863, 6.344170305639244, 7.262063108987902e-10),
    (1.1823397073059398e-10, -6.335568359383951, 7.669099312195513e-10),
    (0.999999999881766, 6.335568349691837, 7.669099783116998e-10),
    (1.250229378767769e-10, -6.326955222071003, 8.098923937976382e-10),
    (0.999999999874977, 6.326955155293777, 8.098927359744279e-10),
    (1.3220172594013861e-10, -6.318330868411228, 8.552810269007109e-10),
    (0.9999999998677983, 6.318330905713306, 8.552808253222224e-10),
    (1.3979271834723012e-10, -6.309695255077292, 9.032103542682588e-10),
    (0.9999999998602073, 6.309695238915251, 9.032104463754504e-10),
    (1.4781958377575716e-10, -6.30104833846437, 9.538224098204428e-10),
    (0.9999999998521805, 6.301048390240332, 9.538220986427579e-10),
    (1.5630734995340363e-10, -6.292390074687656, 1.0072671562712902e-09),
    (0.9999999998436927, 6.292390123847562, 1.0072668446900656e-09),
    (1.652824816941658e-10, -6.283720419579861, 1.0637029270339104e-09),
    (0.9999999998347175, 6.283720445249192, 1.063702755459815e-09),
    (1.7477296341551463e-10, -6.275039328688668, 1.1232968927111569e-09),
    (0.999999999825227, 6.275039319380786, 1.123296958319921e-09),
    (1.848083863936751e-10, -6.266346757274166, 1.1862255535368224e-09),
    (0.9999999998151916, 6.266346753548699, 1.1862255812293328e-09),
    (1.9542004102908013e-10, -6.257642660306256, 1.2526752592080565e-09),
    (0.99999999980458, 6.257642682278824, 1.2526750869696204e-09),
    (2.0664101440969214e-10, -6.248926992462015, 1.322842757629576e-09),
    (0.999999999793359, 6.248926974920413, 1.3228429026345668e-09),
    (2.1850629347638094e-10, -6.240199708123046, 1.396935774174313e-09),
    (0.9999999997814937, 6.240199686168444, 1.3969359655560582e-09),
    (2.3105287411203746e-10, -6.231460761372781, 1.4751736231541522e-09),
    (0.9999999997689472, 6.23146078210763, 1.4751734325493452e-09),
    (2.44319876494558e-10, -6.222710105993767, 1.5577878532880938e-09),
    (0.9999999997556801, 6.222710092415571, 1.5577879849105312e-09),
    (2.5834866707337105e-10, -6.2139476954649036, 1.6450229290541628e-09),
    (0.9999999997416513, 6.213947690168748, 1.6450229831919266e-09),
    (2.731829875498236e-10, -6.2051734829586715, 1.7371369499157605e-09),
    (0.999999999726817, 6.205173457513543, 1.7371372241948332e-09),
    (2.888690912636002e-10, -6.196387421338301, 1.8344024095234418e-09),
    (0.999999999711131, 6.196387449393259, 1.834402090632074e-09),
    (3.054558874104094e-10, -6.187589463154928, 1.937106997109178e-09),
    (0.9999999996945441, 6.187589465529957, 1.937106968642027e-09),
    (3.2299509354062085e-10, -6.178779560644707, 2.0455544434130222e-09),
    (0.9999999996770049, 6.178779569644796, 2.045554329660635e-09),
    (3.4154139681433806e-10, -6.169957665725892, 2.1600654136114346e-09),
    (0.9999999996584586, 6.169957687048176, 2.1600651294384556e-09),
    (3.6115262451570095e-10, -6.161123729995883, 2.2809784498531474e-09),
    (0.9999999996388473, 6.161123712979065, 2.280978688997155e-09),
    (3.818899243580738e-10, -6.152277704728238, 2.408650966152521e-09),
    (0.99999999961811, 6.152277688230171, 2.4086512106322648e-09),
    (4.038179551423279e-10, -6.143419540869643, 2.5434602985425585e-09),
    (0.999999999596182, 6.143419531467805, 2.543460445451403e-09),
    (4.270050883626661e-10, -6.134549189036855, 2.685804813549953e-09),
    (0.9999999995729949, 6.134549185468291, 2.6858048723463226e-09),
    (4.515236213886127e-10, -6.125666599513604, 2.8361050782240805e-09),
    (0.9999999995484764, 6.125666608363329, 2.8361049244774895e-09),
    (4.774500028878633e-10, -6.116771722247454, 2.9948050951303563e-09),
    (0.99999999952255, 6.116771733746615, 2.9948048844825205e-09),
    (5.048650711928617e-10, -6.107864506846634, 3.1623736059068777e-09),
    (0.999999999495135, 6.107864517132823, 3.1623734072255653e-09),
    (5.338543063543325e-10, -6.098944902576823, 3.339305467182152e-09),
    (0.9999999994661457, 6.098944906245146, 3.3393053924722287e-09),
    (5.645080966676587e-10, -6.090012858357902, 3.526123102861451e-09),
    (0.9999999994354919, 6.0900128554486335, 3.5261231653354794e-09),
    (5.969220205031631e-10, -6.081068322760658, 3.7233780370109535e-09),
    (0.9999999994030779, 6.081068310184017, 3.72337832177272e-09),
    (6.311971443189972e-10, -6.072111244003459, 3.931652511801989e-09),
    (0.9999999993688029, 6.072111256651427, 3.931652209851607e-09),
    (6.674403377858731e-10, -6.06314156994888, 4.151561195224544e-09),
    (0.9999999993325597, 6.06314157297314, 4.151561119099374e-09),
    (7.057646070061804e-10, -6.054159248100291, 4.383752983538947e-09),
    (0.9999999992942354, 6.054159259300618, 4.383752686282985e-09),
    (7.462894468664686e-10, -6.045164225598401, 4.628912903709025e-09),
    (0.9999999992537105, 6.045164219593555, 4.62891307173985e-09),
    (7.8914121362193e-10, -6.036156449217759, 4.887764121349454e-09),
    (0.9999999992108588, 6.03615645265264, 4.887764020009105e-09),
    (8.344535188745822e-10, -6.027135865363218, 5.161070060025208e-09),
    (0.9999999991655465, 6.027135867800967, 5.161069984195429e-09),
    (8.823676461736157e-10, -6.018102420066346, 5.44963663806354e-09),
    (0.9999999991176324, 6.018102424243152, 5.449636501079034e-09),
    (9.330329915368072e-10, -6.009056058981795, 5.754314629378108e-09),
    (0.999999999066967, 6.009056060255551, 5.754314585334183e-09),
    (9.866075292665856e-10, -5.999996727383632, 6.076002155164074e-09),
    (0.9999999990133924, 5.999996720117335, 6.076002420064136e-09),
    (1.0432583045131444e-09, -5.99092437016161, 6.415647313700803e-09),
    (0.9999999989567417, 5.990924377480091, 6.415647032410182e-09),
    (1.1031619541204147e-09, -5.981838931817411, 6.77425095589802e-09),
    (0.999999998896838, 5.98183892413123, 6.774251267361163e-09),
    (1.166505257378896e-09, -5.97274035646082, 7.152869614642201e-09),
    (0.9999999988334948, 5.972740360883084, 7.152869425713198e-09),
    (1.233485718402567e-09, -5.96362858780587, 7.552618596443951e-09),
    (0.9999999987665142, 5.963628582565806, 7.552618832461725e-09),
    (1.3043121819457848e-09, -5.954503569166923, 7.974675244356102e-09),
    (0.9999999986956878, 5.95450356517374, 7.974675433973348e-09),
    (1.3792054845802045e-09, -5.9453652434547175, 8.420282381625638e-09),
    (0.9999999986207945, 5.945365238350045, 8.420282637173984e-09),
    (1.4583991432621488e-09, -5.936213553172346, 8.890751946064825e-09),
    (0.9999999985416008, 5.936213549130248, 8.890752159396214e-09),
    (1.5421400834373517e-09, -5.927048440411198, 9.38746882567635e-09),
    (0.9999999984578599, 5.9270484405323405, 9.38746881893602e-09),
    (1.6306894089533065e-09, -5.9178698468468465, 9.911894906647664e-09),
    (0.9999999983693106, 5.917869851652467, 9.911894624762867e-09),
    (1.7243232161798092e-09, -5.90867771373487, 1.046557334544178e-08),
    (0.9999999982756768, 5.908677711482799, 1.0465573484704687e-08),
    (1.8233334548760833e-09, -5.899471981906645, 1.1050133077357104e-08),
    (0.9999999981766665, 5.899471979253235, 1.1050133250332728e-08),
    (1.928028838488756e-09, -5.890252591765056, 1.1667293574610678e-08),
    (0.9999999980719712, 5.890252590976729, 1.1667293628787074e-08),
    (2.038735806718873e-09, -5.881019483280172, 1.2318869867716356e-08),
    (0.9999999979612642, 5.88101948002573, 1.2318870103492546e-08),
    (2.1557995433593173e-09, -5.871772595984856, 1.3006777844688443e-08),
    (0.9999999978442005, 5.871772596328991, 1.3006777818405874e-08),
    (2.279585052576208e-09, -5.862511868970322, 1.3733039843399855e-08),
    (0.9999999977204149, 5.862511867245799, 1.3733039982241315e-08),
    (2.4104782969901416e-09, -5.853237240881628, 1.4499790553267394e-08),
    (0.9999999975895217, 5.853237243333487, 1.4499790345176358e-08),
    (2.5488874011057443e-09, -5.843948649913118, 1.530928324332555e-08),
    (0.9999999974511126, 5.843948647735052, 1.5309283438189797e-08),
    (2.6952439238419603e-09, -5.834646033803799, 1.6163896334689417e-08),
    (0.9999999973047561, 5.834646034230847, 1.6163896294414284e-08),
    (2.8500042041306455e-09, -5.825329329832656, 1.706614033639499e-08),
    (0.9999999971499958, 5.82532932816372, 1.706614050231377e-08),
    (3.0136507837791645e-09, -5.815998474813913, 1.8018665164650413e-08),
    (0.9999999969863492, 5.81599847539128, 1.8018665104144385e-08),
    (3.1866939120334173e-09, -5.8066534050922165, 1.902426786663157e-08),
    (0.9999999968133061, 5.8066534052646945, 1.902426784757837e-08),
    (3.3696731365325386e-09, -5.7972940565377735, 2.0085900771116617e-08),
    (0.9999999966303269, 5.797294058550272, 2.0085900536773497e-08),
    (3.563158985615788e-09, -5.787920364541413, 2.1206680089478337e-08),
    (0.999999996436841, 5.787920364330757, 2.120668011533468e-08),
    (3.767754747227226e-09, -5.778532264009578, 2.2389894991845866e-08),
    (0.9999999962322452, 5.778532262776237, 2.2389895151416368e-08),
    (3.984098349964572e-09, -5.769129689359264, 2.3639017184607353e-08),
    (0.9999999960159016, 5.769129687896826, 2.363901738404963e-08),
    (4.212864352137502e-09, -5.75971257451288, 2.495771101686398e-08),
    (0.9999999957871356, 5.759712572968826, 2.495771123882076e-08),
    (4.454766045037206e-09, -5.750280852893039, 2.6349844144959658e-08),
    (0.999999995545234, 5.750280854582209, 2.634984388901839e-08),
    (4.7105576769751915e-09, -5.740834457417283, 2.7819498785809034e-08),
    (0.9999999952894423, 5.740834455810845, 2.781949904236875e-08),
    (4.981036805025902e-09, -5.731373320492736, 2.937098359143205e-08),
    (0.9999999950189632, 5.731373320485428, 2.9370983592662193e-08),
    (5.26704678180575e-09, -5.721897374010681, 3.1008846178879654e-08),
    (0.9999999947329532, 5.721897373465634, 3.100884627558712e-08),
    (5.569479385042618e-09, -5.712406549341068, 3.273788635161215e-08),
    (0.9999999944305206, 5.712406547870119, 3.273788662669761e-08),
    (5.889277598134441e-09, -5.702900777326939, 3.4563170050364676e-08),
    (0.9999999941107224, 5.702900776661636, 3.456317018150294e-08),
    (6.227438550366905e-09, -5.693379988278788, 3.649004407362275e-08),
    (0.9999999937725614, 5.693379987882681, 3.649004415591476e-08),
    (6.585016625957758e-09, -5.6838441119688285, 3.852415161002709e-08),
    (0.9999999934149834, 5.683844111524395, 3.852415170734269e-08),
    (6.9631267516217065e-09, -5.6742930776252, 4.067144862734584e-08),
    (0.9999999930368733, 5.674293077865073, 4.0671448571987523e-08),
    (7.362947872906563e-09, -5.664726813926074, 4.293822116509779e-08),
    (0.9999999926370521, 5.664726812875122, 4.293822142072448e-08),
    (7.785726630139674e-09, -5.655145248993701, 4.5331103580486555e-08),
    (0.9999999922142734, 5.655145249240112, 4.5331103517318114e-08),
    (8.232781245446601e-09, -5.64554831038835, 4.7857097800028175e-08),
    (0.9999999917672188, 5.6455483106167, 4.7857097738332644e-08),
    (8.705505632961241e-09, -5.635935925102183, 5.052359363211586e-08),
    (0.9999999912944944, 5.635935924771144, 5.052359372637851e-08),
    (9.205373745043408e-09, -5.626308019553036, 5.333839019879422e-08),
    (0.9999999907946262, 5.6263080185871654, 5.333839048865025e-08),
    (9.733944168055168e-09, -5.616664519578109, 5.630971854819943e-08),
    (0.9999999902660558, 5.616664518900254, 5.630971876258643e-08),
    (1.029286498202561e-08, -5.607005350427575, 5.944626551248469e-08),
    (0.999999989707135, 5.607005350045183, 5.9446265639941654e-08),
    (1.088387889935645e-08, -5.597330436758091, 6.275719887959423e-08),
    (0.9999999891161211, 5.597330436600599, 6.275719893491714e-08),
    (1.1508828698590755e-08, -5.587639702626227, 6.625219395098513e-08),
    (0.9999999884911713, 5.587639703090223, 6.625219377921669e-08),
    (1.2169662970187765e-08, -5.577933071481785, 6.99414615613406e-08),
    (0.9999999878303371, 5.577933071855647, 6.99414614154863e-08),
    (1.2868442192218404e-08, -5.568210466161043, 7.383577764046661e-08),
    (0.9999999871315578, 5.568210466045905, 7.38357776878036e-08),
    (1.3607345154925999e-08, -5.558471808879883, 7.794651440195074e-08),
    (0.9999999863926549, 5.558471809077087, 7.794651431650947e-08),
    (1.4388675754183794e-08, -5.548717021226836, 8.22856732477777e-08),
    (0.9999999856113242, 5.54871702059242, 8.22856735374393e-08),
    (1.5214870175030924e-08, -5.53894602415602, 8.68659194829643e-08),
    (0.9999999847851299, 5.538946024541389, 8.686591929754595e-08),
    (1.6088504487686168e-08, -5.529158737979967, 9.17006189394193e-08),
    (0.9999999839114955, 5.529158737533682, 9.170061916569792e-08),
    (1.701230267972175e-08, -5.519355082362367, 9.680387661362836e-08),
    (0.9999999829876973, 5.51935508238326, 9.680387660246494e-08),
    (1.7989145149444008e-08, -5.509534976310686, 1.0219057742849766e-07),
    (0.9999999820108548, 5.509534976075474, 1.021905775609269e-07),
    (1.9022077686961172e-08, -5.499698338168689, 1.0787642923568006e-07),
    (0.9999999809779223, 5.499698338133308, 1.0787642925667095e-07),
    (2.0114320970942277e-08, -5.489845085608848, 1.1387800818106874e-07),
    (0.999999979885679, 5.489845085471474, 1.1387800826695126e-07),
    (2.1269280610677777e-08, -5.479975135624638, 1.2021280656282232e-07),
    (0.9999999787307194, 5.479975136054434, 1.202128062796891e-07),
    (2.249055776475253e-08, -5.470088404522728, 1.268992833183348e-07),
    (0.9999999775094423, 5.470088404642927, 1.2689928323489867e-07),
    (2.3781960369441713e-08, -5.460184807915036, 1.3395691728400557e-07),
    (0.9999999762180396, 5.460184807679589, 1.339569174562184e-07),
    (2.5147515011836675e-08, -5.450264260710698, 1.4140626337947422e-07),
    (0.999999974852485, 5.450264261082224, 1.4140626309313854e-07),
    (2.6591479484724947e-08, -5.440326677107887, 1.4926901187628091e-07),
    (0.9999999734085205, 5.440326677254615, 1.4926901175712733e-07),
    (2.811835606236719e-08, -5.430371970585525, 1.5756805091958002e-07),
    (0.9999999718816439, 5.430371970423112, 1.5756805105854935e-07),
    (2.9732905538566717e-08, -5.4204000538948724, 1.663275324807392e-07),
    (0.9999999702670944, 5.420400053633391, 1.6632753271648108e-07),
    (3.1440162070801725e-08, -5.410410839050982, 1.7557294192831717e-07),
    (0.999999968559838, 5.410410839286884, 1.7557294170422812e-07),
    (3.324544887670355e-08, -5.400404237324034, 1.8533117141510882e-07),
    (0.9999999667545512, 5.40040423753117, 1.8533117120779472e-07),
    (3.515439483182427e-08, -5.390380159230534, 1.9563059728970685e-07),
    (0.9999999648456052, 5.390380159190852, 1.9563059733155176e-07),
    (3.717295202044304e-08, -5.380338514524373, 2.0650116175233668e-07),
    (0.999999962827048, 5.380338514381931, 2.0650116191059698e-07),
    (3.930741429413628e-08, -5.370279212187769, 2.1797445898668222e-07),
    (0.9999999606925857, 5.370279212053273, 2.1797445914412045e-07),
    (4.156443689597657e-08, -5.360202160422045, 2.3008382601199405e-07),
    (0.9999999584355631, 5.36020216043805, 2.3008382599225504e-07),
    (4.395105721154838e-08, -5.3501072666382905, 2.428644385130392e-07),
    (0.9999999560489428, 5.350107266529006, 2.42864438655038e-07),
    (4.6474716711482595e-08, -5.339994437447861, 2.563534119194341e-07),
    (0.9999999535252833, 5.339994437330047, 2.5635341208071253e-07),
    (4.9143284153925166e-08, -5.329863578652743, 2.705899080206282e-07),
    (0.9999999508567159, 5.329863578819635, 2.7058990777993483e-07),
    (5.196508011928894e-08, -5.319714595235757, 2.856152474183625e-07),
    (0.9999999480349199, 5.319714595205832, 2.856152474638302e-07),
    (5.4948902953780823e-08, -5.309547391350627, 3.0147302813473503e-07),
    (0.999999945051097, 5.309547391252716, 3.014730282914598e-07),
    (5.810405620260474e-08, -5.299361870311875, 3.1820925071133697e-07),
    (0.9999999418959438, 5.299361870216114, 3.182092508728206e-07),
    (6.144037761836983e-08, -5.289157934584575, 3.3587245015301576e-07),
    (0.9999999385596224, 5.289157934748259, 3.358724498622355e-07),
    (6.496826983515574e-08, -5.278935485773932, 3.545138350890347e-07),
    (0.9999999350317301, 5.2789354856615125, 3.5451383529942176e-07),
    (6.869873280387584e-08, -5.268694424614703, 3.7418743454455986e-07),
    (0.9999999313012672, 5.268694424588808, 3.741874345956131e-07),
    (7.264339809007008e-08, -5.258434650960461, 3.9495025273667306e-07),
    (0.9999999273566019, 5.25843465099946, 3.949502526556806e-07),
    (7.681456514107167e-08, -5.248156063772665, 4.168624323315524e-07),
    (0.9999999231854348, 5.248156063743879, 4.168624323945299e-07),
    (8.122523963562358e-08, -5.237858561109581, 4.3998742662303566e-07),
    (0.9999999187747604, 5.237858561087413, 4.3998742667412376e-07),
    (8.588917403552237e-08, -5.22754204011501, 4.643921811177162e-07),
    (0.999999914110826, 5.2275420402018105, 4.6439218090699617e-07),
    (9.082091046572776e-08, -5.21720639700684, 4.901473250379162e-07),
    (0.9999999091790895, 5.217206397020838, 4.901473250021192e-07),
    (9.603582605663804e-08, -5.20685152706542, 5.173273732815245e-07),
    (0.9999999039641739, 5.206851527040909, 5.173273733475491e-07),
    (1.0155018088990885e-07, -5.196477324621738, 5.460109394068024e-07),
    (0.9999998984498191, 5.196477324546586, 5.460109396200339e-07),
    (1.0738116869730796e-07, -5.18608368304541, 5.762809602409183e-07),
    (0.9999998926188313, 5.186083682980603, 5.762809604346024e-07),
    (1.1354697047069002e-07, -5.175670494732476, 6.082249327433344e-07),
    (0.9999998864530295, 5.175670494696278, 6.082249328572825e-07),
    (1.2006681115024013e-07, -5.165237651092995, 6.419351637891516e-07),
    (0.9999998799331888, 5.165237651077701, 6.419351638398622e-07),
    (1.269610195677449e-07, -5.154785042538441, 6.775090335734551e-07),
    (0.9999998730389804, 5.15478504251087, 6.77509033669745e-07),
    (1.342510918317919e-07, -5.144312558468886, 7.150492733754602e-07),
    (0.9999998657489082, 5.1443125585147635, 7.150492732067014e-07),
    (1.419597583525328e-07, -5.133820087259974, 7.546642584610825e-07),
    (0.9999998580402416, 5.133820087206446, 7.546642586684686e-07),
    (1.5011105471499155e-07, -5.123307516249686, 7.964683169444907e-07),
    (0.9999998498889453, 5.123307516271606, 7.964683168550432e-07),
    (1.5873039662190432e-07, -5.1127747317248735, 8.405820554734084e-07),
    (0.9999998412696034, 5.1127747317456835, 8.40582055383973e-07),
    (1.6784465913975592e-07, -5.102221618907578, 8.87132702649423e-07),
    (0.9999998321553408, 5.102221618872019, 8.87132702810374e-07),
    (1.774822604951094e-07, -5.0916480619411155, 9.362544711436582e-07),
    (0.9999998225177396, 5.091648061995817, 9.362544708828938e-07),
    (1.8767325068249817e-07, -5.081053943875934, 9.880889395197321e-07),
    (0.9999998123267493, 5.081053943840228, 9.88088939698997e-07),
    (1.984494051601647e-07, -5.070439146655223, 1.0427854548303824e-06),
    (0.9999998015505949, 5.070439146683163, 1.042785454682653e-06),
    (2.098443239257847e-07, -5.059803551100292, 1.1005015571113843e-06),
    (0.9999997901556761, 5.059803551107954, 1.1005015570687165e-06),
    (2.2189353628110003e-07, -5.049147036895688, 1.161403426956788e-06),
    (0.9999997781064637, 5.0491470368596465, 1.1614034271681403e-06),
    (2.3463461161210751e-07, -5.038469482574073, 1.2256663574229773e-06),
    (0.9999997653653884, 5.038469482560397, 1.2256663575074348e-06),
    (2.4810727653022567e-07, -5.027770765500833, 1.2934752515760973e-06),
    (0.9999997518927235, 5.027770765523052, 1.2934752514315998e-06),
    (2.623535387396759e-07, -5.017050761858424, 1.3650251470677827e-06),
    (0.9999997376464612, 5.017050761827083, 1.3650251472824128e-06),
    (2.774178180173022e-07, -5.006309346630455, 1.4405217691984542e-06),
    (0.999999722582182, 5.006309346607127, 1.4405217693666893e-06),
    (2.93347084713221e-07, -4.995546393585491, 1.520182114005581e-06),
    (0.9999997066529153, 4.995546393571569, 1.5201821141113096e-06),
    (3.1019100620414717e-07, -4.984761775260575, 1.604235062996666e-06),
    (0.9999996898089938, 4.984761775254301, 1.6042350630468319e-06),
    (3.280021017560309e-07, -4.973955362944464, 1.6929220312333736e-06),
    (0.9999996719978983, 4.973955362976624, 1.6929220309625646e-06),
    (3.468359062788818e-07, -4.963127026660571, 1.7864976505646283e-06),
    (0.9999996531640937, 4.9631270266327645, 1.7864976508111752e-06),
    (3.667511434843465e-07, -4.952276635149612, 1.885230489902456e-06),
    (0.9999996332488565, 4.952276635165372, 1.885230489755319e-06),
    (3.878099089859588e-07, -4.941404055851941, 1.989403814535747e-06),
    (0.999999612190091, 4.941404055863075, 1.9894038144263003e-06),
    (4.100778639129644e-07, -4.930509154889577, 2.099316386583598e-06),
    (0.9999995899221361, 4.930509154901351, 2.0993163864617307e-06),
    (4.3362443964140193e-07, -4.919591797047911, 2.215283308802092e-06),
    (0.9999995663755603, 4.919591797026637, 2.215283309033939e-06),
    (4.585230542808027e-07, -4.908651845757086, 2.3376369140766088e-06),
    (0.9999995414769457, 4.908651845747569, 2.3376369141858155e-06),
    (4.848513415914996e-07, -4.897689163073045, 2.4667277030559874e-06),
    (0.9999995151486584, 4.897689163056982, 2.466727703250039e-06),
    (5.126913930463185e-07, -4.886703609658239, 2.602925332515938e-06),
    (0.999999487308607, 4.886703609673549, 2.6029253323212115e-06),
    (5.42130013791391e-07, -4.875695044761991, 2.746619657176834e-06),
    (0.9999994578699862, 4.875695044769855, 2.746619657071527e-06),
    (5.732589933041882e-07, -4.864663326200491, 2.8982218278462343e-06),
    (0.9999994267410067, 4.864663326210568, 2.898221827704162e-06),
    (6.061753915926601e-07, -4.853608310336446, 3.0581654489090335e-06),
    (0.9999993938246085, 4.853608310350812, 3.058165448695787e-06),
    (6.409818418278798e-07, -4.842529852058344, 3.22690779834917e-06),
    (0.9999993590181582, 4.842529852058846, 3.2269077983413277e-06),
    (6.777868703537731e-07, -4.831427804759348, 3.4049311136557923e-06),
    (0.9999993222131296, 4.831427804743819, 3.4049311139112595e-06),
    (7.167052350717308e-07, -4.820302020315799, 3.592743947145036e-06),
    (0.999999283294765, 4.820302020322197, 3.592743947034225e-06),
    (7.578582832551993e-07, -4.8091523490653145, 3.7908825944160683e-06),
    (0.9999992421417168, 4.809152349069283, 3.7908825943437117e-06),
    (8.013743299098894e-07, -4.797978639784495, 3.999912599857156e-06),
    (0.9999991986256701, 4.797978639788185, 3.999912599786353e-06),
    (8.473890578593454e-07, -4.786780739666207, 4.220430343325335e-06),
    (0.9999991526109422, 4.786780739677423, 4.220430343098747e-06),
    (8.960459408033365e-07, -4.7755584942964395, 4.4530647123416606e-06),
    (0.9999991039540592, 4.775558494301862, 4.453064712226341e-06),
    (9.474966906681544e-07, -4.764311747630734, 4.6984788643739045e-06),
    (0.9999990525033093, 4.764311747632052, 4.6984788643444125e-06),
    (1.0019017306436767e-06, -4.753040341970166, 4.957372084020688e-06),
    (0.9999989980982693, 4.753040341960703, 4.957372084243674e-06),
    (1.0594306953820947e-06, -4.741744117936869, 5.230481740165325e-06),
    (0.9999989405693046, 4.741744117934648, 5.2304817402204255e-06),
    (1.1202629599179348e-06, -4.730422914449102, 5.5185853484357415e-06),
    (0.99999887973704, 4.7304229144428005, 5.51858534860025e-06),
    (1.184588198958564e-06, -4.719076568695834, 5.822502744588679e-06),
    (0.999998815411801, 4.719076568692679, 5.822502744675362e-06),
    (1.2526069782889968e-06, -4.7077049161108455, 6.143098374732555e-06),
    (0.9999987473930217, 4.707704916116773, 6.143098374561113e-06),
    (1.3245313801350597e-06, -4.69630779034633, 6.481283708615784e-06),
    (0.9999986754686199, 4.696307790346905, 6.481283708598283e-06),
    (1.4005856644347395e-06, -4.684885023245989, 6.838019782534993e-06),
    (0.9999985994143356, 4.684885023244324, 6.838019782588305e-06),
    (1.4810069680795935e-06, -4.673436444817599, 7.214319878763105e-06),
    (0.9999985189930319, 4.6734364448199495, 7.21431987868386e-06),
    (1.5660460443064225e-06, -4.661961883205056, 7.611252348760111e-06),
    (0.9999984339539557, 4.66196188320749, 7.611252348673733e-06),
    (1.6559680445446689e-06, -4.650461164659855, 8.029943587811509e-06),
    (0.9999983440319554, 4.650461164655675, 8.02994358796762e-06),
    (1.7510533451572848e-06, -4.638934113512029, 8.471581169140679e-06),
    (0.9999982489466548, 4.6389341135056394, 8.471581169391797e-06),
    (1.8515984216528814e-06, -4.627380552140501, 8.937417145964277e-06),
    (0.9999981484015783, 4.627380552135426, 8.937417146174177e-06),
    (1.9579167730949377e-06, -4.615800300942855, 9.428771530403818e-06),
    (0.999998042083227, 4.6158003009483375, 9.428771530165212e-06),
    (2.0703398995903594e-06, -4.604193178304503, 9.947035958633759e-06),
    (0.9999979296601004, 4.604193178300606, 9.947035958812245e-06),
    (2.1892183359052168e-06, -4.592559000567239, 1.0493677552137867e-05),
    (0.999997810781664, 4.592559000563333, 1.0493677552326122e-05),
    (2.3149227444304642e-06, -4.580897581997158, 1.1070242985462122e-05),
    (0.9999976850772556, 4.580897582001342, 1.1070242985250018e-05),
    (2.447845070905475e-06, -4.569208734751932, 1.1678362771395359e-05),
    (0.9999975521549291, 4.569208734755556, 1.167836277120198e-05),
    (2.588399766502976e-06, -4.557492268847416, 1.2319755775080357e-05),
    (0.9999974116002335, 4.55749226884577, 1.2319755775172766e-05),
    (2.737025080085784e-06, -4.545747992123593, 1.2996233969157866e-05),
    (0.9999972629749199, 4.545747992119801, 1.2996233969381904e-05),
    (2.8941844246646786e-06, -4.533975710209798, 1.3709707442677908e-05),
    (0.9999971058155753, 4.533975710209172, 1.370970744271683e-05),
    (3.060367822317893e-06, -4.522175226489252, 1.446218967717504e-05),
    (0.9999969396321777, 4.522175226492439, 1.4462189676966665e-05),
    (3.2360934320776493e-06, -4.5103463420628485, 1.5255803104003078e-05),
    (0.9999967639065679, 4.510346342060534, 1.5255803104162305e-05),
    (3.421909165547448e-06, -4.498488855712199, 1.6092784957755758e-05),
    (0.9999965780908344, 4.4984888557102005, 1.609278495790042e-05),
    (3.618394395287869e-06, -4.4866025638619105, 1.6975493441372492e-05),
    (0.9999963816056047, 4.486602563859268, 1.697549344157379e-05),
    (3.826161761297364e-06, -4.474687260541072, 1.7906414219335404e-05),
    (0.9999961738382387, 4.474687260540303, 1.7906414219396956e-05),
    (4.045859081220891e-06, -4.462742737343928, 1.88881672562169e-05),
    (0.9999959541409188, 4.462742737344868, 1.8888167256137684e-05),
    (4.278171370242114e-06, -4.450768783389739, 1.9923514018728364e-05),
    (0.9999957218286297, 4.450768783388062, 1.992351401887709e-05),
    (4.523822976957523e-06, -4.438765185281773, 2.101536506036266e-05),
    (0.999995476177023, 4.438765185279829, 2.1015365060544024e-05),
    (4.783579841891797e-06, -4.426731727065439, 2.2166788008706906e-05),
    (0.9999952164201581, 4.426731727064847, 2.216678800876498e-05),
    (5.058251885696724e-06, -4.414668190185518, 2.338101597654111e-05),
    (0.9999949417481143, 4.414668190186182, 2.3381015976472615e-05),
    (5.3486955344798546e-06, -4.402574353442479, 2.466145641892535e-05),
    (0.9999946513044655, 4.402574353442494, 2.466145641892368e-05),
    (5.655816390136955e-06, -4.390449992947853, 2.6011700459622883e-05),
    (0.9999943441836099, 4.390449992948679, 2.601170045952858e-05),
    (5.980572054014396e-06, -4.378294882078637, 2.7435532711408257e-05),
    (0.999994019427946, 4.378294882078003, 2.7435532711484443e-05),
    (6.323975112705502e-06, -4.366108791430707, 2.89369416160698e-05),
    (0.9999936760248873, 4.366108791431327, 2.8936941615991476e-05),
    (6.6870962952906785e-06, -4.353891488771215, 3.052013033124232e-05),
    (0.9999933129037047, 4.3538914887723905, 3.052013033108597e-05),
    (7.07106781186548e-06, -4.341642738989933, 3.218952819259595e-05),
    (0.9999929289321882, 4.341642738990822, 3.21895281924717e-05),
    (7.477086883766287e-06, -4.329362304049528, 3.3949802781369005e-05),
    (0.9999925229131162, 4.329362304049834, 3.394980278132414e-05),
    (7.906419476500619e-06, -4.317049942934734, 3.580587262876469e-05),
    (0.9999920935805235, 4.317049942935992, 3.5805872628570084e-05),
    (8.360404247021502e-06, -4.30470541160038, 3.776292059034318e-05),
    (0.999991639595753, 4.30470541160069, 3.776292059029276e-05),
    (8.84045671765335e-06, -4.29232846291827, 3.9826407925229065e-05),
    (0.9999911595432823, 4.292328462917761, 3.9826407925316154e-05),
    (9.348073689683745e-06, -4.2799188466228575, 4.2002089116729115e-05),
    (0.9999906519263103, 4.279918846622814, 4.200208911673705e-05),
    (9.884837910382762e-06, -4.2674763092556836, 4.429602747281643e-05),
    (0.9999901151620896, 4.26747630925477, 4.429602747298931e-05),
    (1.0452423008001095e-05, -4.25500059410857, 4.671461154688834e-05),
    (0.999989547576992, 4.255000594108345, 4.671461154693319e-05),
    (1.105259871013508e-05, -4.242491441165498, 4.926457242126019e-05),
    (0.9999889474012899, 4.242491441165227, 4.9264572421316735e-05),
    (1.1687236361728617e-05, -4.22994858704316, 5.195300189800102e-05),
    (0.9999883127636383, 4.229948587043895, 5.1953001897839554e-05),
    (1.2358314759917912e-05, -4.217371764930134, 5.4787371643979774e-05),
    (0.9999876416852401, 4.217371764930919, 5.478737164379847e-05),
    (1.3067926323911125e-05, -4.204760704524659, 5.7775553339349826e-05),
    (0.9999869320736761, 4.204760704524165, 5.7775553339470044e-05),
    (1.3818283619141606e-05, -4.192115131970943, 6.092583988118972e-05),
    (0.9999861817163809, 4.192115131971184, 6.092583988112831e-05),
    (1.4611726256036027e-05, -4.179434769793991, 6.424696769661232e-05),
    (0.999985388273744, 4.179434769793727, 6.424696769668326e-05),
    (1.54507281849087e-05, -4.166719336832891, 6.774814022239209e-05),
    (0.9999845492718151, 4.166719336833408, 6.774814022224625e-05),
    (1.6337905409726386e-05, -4.1539685481725295, 7.143905261101287e-05),
    (0.9999836620945902, 4.153968548171778, 7.143905261123593e-05),
    (1.727602414479622e-05, -4.141182115073674, 7.532991772604752e-05),
    (0.9999827239758552, 4.14118211507352, 7.532991772609538e-05),
    (1.826800943980866e-05, -4.128359744901382, 7.943149349291878e-05),
    (0.9999817319905602, 4.128359744901167, 7.943149349298937e-05),
    (1.9316954300128035e-05, -4.115501141051703, 8.375511167438651e-05),
    (0.9999806830456999, 4.115501141051674, 8.375511167439609e-05),
    (2.042612933076876e-05, -4.102606002876586, 8.83127081435664e-05),
    (0.9999795738706693, 4.1026060028770175, 8.831270814340994e-05),
    (2.1598992934125525e-05, -4.089674025606991, 9.311685473089222e-05),
    (0.9999784010070659, 4.089674025607481, 9.311685473070544e-05),
    (2.2839202093255646e-05, -4.076704900274096, 9.818079272523865e-05),
    (0.9999771607979068, 4.07670490027438, 9.818079272512498e-05),
    (2.415062377433442e-05, -4.063698313628586, 0.00010351846811337912),
    (0.9999758493762256, 4.06369831362828, 0.00010351846811350768),
    (2.5537346983837092e-05, -4.0506539480579455, 0.00010914456864612168),
    (0.9999744626530161, 4.050653948057823, 0.00010914456864617584),
    (2.700369551804115e-05, -4.0375714815017, 0.00011507456282381467),
    (0.999972996304482, 4.03757148150204, 0.00011507456282365647),
    (2.8554241444602492e-05, -4.024450587364535, 0.00012132474089847894),
    (0.9999714457585553, 4.024450587364093, 0.00012132474089869433),
    (3.0193819358240243e-05, -4.011290934427248, 0.0001279122579945903),
    (0.9999698061806418, 4.011290934427531, 0.0001279122579944453),
    (3.192754145497956e-05, -3.9980921867554486, 0.0001348551794555362),
    (0.999968072458545, 3.9980921867554517, 0.0001348551794555344),
    (3.376081347195458e-05, -3.9848540036059377, 0.00014217252852799945),
    (0.999966239186528, 3.9848540036059683, 0.0001421725285279822),
    (3.56993515424702e-05, -3.971576039330712, 0.0001498843365019846),
    (0.9999643006484575, 3.971576039330767, 0.00014988433650195185),
    (3.774920001887888e-05, -3.9582579432784932, 0.0001580116954299371),
    (0.9999622507999811, 3.9582579432785736, 0.00015801169542988677),
    (3.9916750318841227e-05, -3.9448993596937325, 0.00016657681355437216),
    (0.9999600832496811, 3.944899359693432, 0.00016657681355456973),
    (4.220876085373624e-05, -3.931499927612984, 0.00017560307357971129),
    (0.9999577912391463, 3.9314999276131823, 0.0001756030735795743),
    (4.463237810135465e-05, -3.9180592807585843, 0.00018511509393054164),
    (0.9999553676218986, 3.9180592807584884, 0.00018511509393061133),
    (4.719515888858312e-05, -3.9045770474295387, 0.0001951387931453783),
    (0.9999528048411114, 3.9045770474293273, 0.0001951387931455393),
    (4.990509395355303e-05, -3.891052850389536, 0.0002057014575621279),
    (0.9999500949060465, 3.8910528503896558, 0.00020570145756203197),
    (5.277063286072391e-05, -3.8774863067519885, 0.00021683181245894768),
    (0.9999472293671393, 3.8774863067521537, 0.00021683181245880868),
    (5.580071034658492e-05, -3.863877027862005, 0.00022856009682197304),
    (0.9999441992896534, 3.863877027861897, 0.00022856009682206842),
    (5.900477417811934e-05, -3.8502246191752034, 0.00024091814191953397),
    (0.9999409952258219, 3.8502246191753495, 0.00024091814191939845),
    (6.239281461089765e-05, -3.836528680133242, 0.00025393945387100123),
    (0.9999376071853892, 3.8365286801334477, 0.0002539394538708009),
    (6.597539553864477e-05, -3.8227888040359863, 0.000267659300407247),
    (0.9999340246044613, 3.822788804035955, 0.00026765930040727957),
    (6.976368743141098e-05, -3.8090045779101716, 0.0002821148020290067),
    (0.9999302363125686, 3.8090045779102457, 0.00028211480202892697),
    (7.376950216504253e-05, -3.7951755823744695, 0.00029734502777904785),
    (0.9999262304978349, 3.7951755823743145, 0.0002973450277792227),
    (7.800532985055504e-05, -3.781301391500815, 0.0003133910958541693),
    (0.9999219946701494, 3.7813013915007243, 0.0003133910958542765),
    (8.248437777823757e-05, -3.767381572671893, 0.0003302962792935142),
    (0.9999175156222218, 3.7673815726718645, 0.0003302962792935494),
    (8.722061159792163e-05, -3.7534156864346246, 0.0003481061169906793),
    (0.9999127793884021, 3.7534156864345776, 0.00034810611699074044),
    (9.222879886380873e-05, -3.7394032863495443, 0.0003668685302884589),
    (0.9999077712011362, 3.73940328634947, 0.00036686853028856063),
    (9.752455507963419e-05, -3.725343918835904, 0.000386633945426988),
    (0.9999024754449204, 3.7253439188359696, 0.0003866339454268937),
    (0.00010312439238773195, -3.7112371230123715, 0.0004074554221283841),
    (0.9998968756076123, 3.71123712301248, 0.00040745542212822054),
    (0.00010904577105381407, -3.697082430533164, 0.00042938878861388134),
    (0.9998909542289461, 3.697082430533053, 0.00042938878861405747),
    (0.00011530715390799694, -3.6828793654194496, 0.00045249278336285216),
    (0.999884692846092, 3.6828793654195517, 0.00045249278336268253),
    (0.00012192806391181394, -3.66862744388587, 0.00047682920393700103),
    (0.9998780719360881, 3.6686274438857542, 0.00047682920393720367),
    (0.00012892914503071756, -3.6543261741619837, 0.0005024630632075596),
    (0.9998710708549693, 3.6543261741619997, 0.0005024630632075302),
    (0.00013633222660186213, -3.639975056308475, 0.0005294627533382863),
    (0.9998636677733982, 3.639975056308574, 0.0005294627533380952),
    (0.00014416039139787435, -3.6255735820279176, 0.0005579002178927672),
    (0.9998558396086021, 3.625573582027938, 0.0005579002178927254),
    (0.00015243804759882375, -3.6111212344699175, 0.0005878511324506622),
    (0.9998475619524012, 3.611121234469974, 0.0005878511324505431),
    (0.00016119100489681338, -3.59661748803041, 0.000619395094134452),
    (0.9998388089951031, 3.5966174880303257, 0.0006193950941346401),
    (0.00017044655497047316, -3.582061808144913, 0.0006526158204656044),
    (0.9998295534450296, 3.5820618081449496, 0.0006526158204655187),
    (0.0001802335565802826, -3.567453651075503, 0.000687601357987233),
    (0.9998197664434197, 3.5674536510755415, 0.000687601357987138),
    (0.00019058252555004908, -3.552792463691283, 0.0007244443011090212),
    (0.99980941747445, 3.5527924636912918, 0.0007244443011089983),
    (0.0002015257299150951, -3.5380776832421086, 0.0007632420216495387),
    (0.999798474270085, 3.5380776832421637, 0.00076324202164939),
    (0.0002130972905338407, -3.523308737125302, 0.0008040969095712223),
    (0.9997869027094661, 3.523308737125265, 0.0008040969095713262),
    (0.00022533328747647191, -3.508485042645101, 0.0008471166254238984),
    (0.9997746667125236, 3.5084850426451553, 0.0008471166254237365),
    (0.00023827187252242995, -3.4936060067645602, 0.0008924143650342566),
    (0.9997617281274775, 3.493606006764532, 0.0008924143650343452),
    (0.00025195338811747015, -3.4786710258496214, 0.0009401091370006465),
    (0.9997480466118825, 3.4786710258496387, 0.0009401091370005904),
    (0.00026642049316121804, -3.463679485405037, 0.000990326053575489),
    (0.9997335795068388, 3.463679485405087, 0.0009903260535753158),
    (0.00028171829601740815, -3.448630759801847, 0.001043196635540923),
    (0.9997182817039826, 3.448630759801836, 0.001043196635540961),
    (0.0002978944951615502, -3.4335242119960596, 0.0010988591317075873),
    (0.9997021055048384, 3.433524211996015, 0.0010988591317077554),
    (0.0003149995279045394, -3.4183591932382114, 0.001157458853691134),
    (0.9996850004720954, 3.418359193238166, 0.0011574588536913115),
    (0.0003330867276559518, -3.4031350427734175, 0.0012191485266467106),
    (0.999666913272344, 3.4031350427733997, 0.0012191485266467843),
    (0.00035221249021735875, -3.3878510875315544, 0.0012840886566676877),
    (0.9996477875097827, 3.3878510875315775, 0.0012840886566675889),
    (0.0003724364496241625, -3.372506641807165, 0.0013524479155817392),
    (0.9996275635503759, 3.3725066418071763, 0.0013524479155816878),
    (0.00039382166408423225, -3.357101006928672, 0.001424403543904811),
    (0.9996061783359158, 3.3571010069286995, 0.001424403543904679),
    (0.00041643481259308904, -3.3416334709164652, 0.0015001417727414465),
    (0.9995835651874069, 3.3416334709164413, 0.0015001417727415667),
    (0.0004403464028386967, -3.3261033081294, 0.001579858265448552),
    (0.9995596535971613, 3.3261033081293707, 0.001579858265448705),
    (0.0004656309910440895, -3.3105097788992257, 0.0016637585799086326),
    (0.9995343690089559, 3.3105097788992013, 0.0016637585799087677),
    (0.0004923674144333179, -3.294852129152448, 0.00175205865228813),
    (0.9995076325855666, 3.294852129152418, 0.001752058652288302),
    (0.0005206390370455284, -3.2791295900190875, 0.0018449853031863163),
    (0.9994793609629544, 3.2791295900190605, 0.00184498530318648),
    (0.0005505340096636447, -3.2633413774277753, 0.0019427767671105353),
    (0.9994494659903363, 3.2633413774277726, 0.0019427767671105533),
    (0.0005821455446680727, -3.247486691686621, 0.0020456832462438963),
    (0.9994178544553319, 3.247486691686624, 0.0020456832462438772),
    (0.0006155722066724588, -3.231564717049215, 0.0021539674895024105),
    (0.9993844277933276, 3.231564717049238, 0.002153967489502253),
    (0.0006509182198476817, -3.215574621265137, 0.002267905397909081),
    (0.9993490817801524, 3.215574621265155, 0.002267905397908948),
    (0.0006882937928923064, -3.1995155551142913, 0.00238778665734316),
    (0.9993117062071077, 3.1995155551143113, 0.0023877866573430067),
    (0.000727815462662788, -3.1833866519243452, 0.0025139153997533895),
    (0.9992721845373372, 3.1833866519243554, 0.0025139153997533067),
    (0.0007696064575348117, -3.1671870270705407, 0.0026466108939538656),
    (0.9992303935424652, 3.167187027070558, 0.0026466108939537207),
    (0.0008137970816287879, -3.1509157774570657, 0.0027862082671511954),
    (0.9991862029183712, 3.150915777457074, 0.002786208267151121),
    (0.0008605251210974583, -3.134571980979173, 0.0029330592583801055),
    (0.9991394748789025, 3.13457198097917, 0.0029330592583801307),
    (0.0009099362737424726, -3.118154695965156, 0.0030875330050530608),
    (0.9990900637262575, 3.118154695965156, 0.0030875330050530625),
    (0.0009621846032994131, -3.1016629605972783, 0.0032500168638559183),
    (0.9990378153967006, 3.101662960597269, 0.003250016863856011),
    (0.0010174330198077796, -3.0850957923106583, 0.0034209172672474493),
    (0.9989825669801922, 3.0850957923106423, 0.003420917267247617),
    (0.0010758537875637368, -3.0684521871690924, 0.0036006606168441486),
    (0.9989241462124363, 3.068452187169104, 0.003600660616844025),
    (0.0011376290622393103, -3.0517311192167558, 0.0037896942149930734),
    (0.9988623709377606, 3.0517311192167447, 0.0037896942149932057),
    (0.0012029514588429335, -3.0349315398045897, 0.003988487235855557),
    (0.998797048541157, 3.0349315398045804, 0.0039884872358556716),
    (0.0012720246522920958, -3.018052376890213, 0.004197531737340132),
    (0.9987279753477079, 3.0180523768902012, 0.004197531737340288),
    (0.0013450640124707575, -3.0010925343100547, 0.004417343715236874),
    (0.9986549359875292, 3.001092534310043, 0.004417343715237029),
    (0.0014222972757516078, -2.9840508910223646, 0.0046484642009144315),
    (0.9985777027242484, 2.9840508910223655, 0.004648464200914424),
    (0.0015039652550769772, -2.966926300319679, 0.004891460403946195),
    (0.998496034744923, 2.966926300319672, 0.004891460403946296),
    (0.0015903225908124293, -2.949717589009223, 0.005146926901032159),
    (0.9984096774091876, 2.949717589009233, 0.005146926901032003),
    (0.0016816385447141985, -2.932423556559656, 0.005415486872577563),
    (0.9983183614552859, 2.9324235565596655, 0.0054154868725774154),
    (0.0017781978394860235, -2.915042974212471, 0.005697793388277426),
    (0.9982218021605139, 2.915042974212462, 0.005697793388277571),
    (0.001880301546543199, -2.8975745840562297, 0.005994530743037389),
    (0.9981196984534568, 2.897574584056234, 0.005994530743037313),
    (0.0019882680247517727, -2.88001709806177, 0.00630641584453354),
    (0.9980117319752482, 2.880017098061761, 0.006306415844533696),
    (0.0021024339130699607, -2.8623691970763248, 0.006634199653678242),
    (0.99789756608693, 2.8623691970763234, 0.006634199653678262),
    (0.002223155180186801, -2.844629529774442, 0.006978668679212172),
    (0.9977768448198132, 2.844629529774444, 0.006978668679212131),
    (0.002350808234430771, -2.826796711563416, 0.007340646527584863),
    (0.9976491917655692, 2.8267967115634134, 0.007340646527584917),
    (0.002485791097409229, -2.8088693234407986, 0.007720995509216011),
    (0.9975142089025908, 2.8088693234408013, 0.0077209955092159485),
    (0.0026285246450377473, -2.790845910801465, 0.00812061830214351),
    (0.9973714753549623, 2.7908459108014694, 0.008120618302143409),
    (0.0027794539198292825, -2.7727249821914417, 0.00854045967396559),
    (0.9972205460801707, 2.772724982191445, 0.008540459673965516),
    (0.00293904951853454, -2.754505008005634, 0.00898150826286392),
    (0.9970609504814655, 2.754505008005636, 0.008981508262863865),
    (0.0031078090594603806, -2.7361844191263294, 0.009444798418358172),
    (0.9968921909405396, 2.7361844191263276, 0.009444798418358219),
    (0.003286258734041314, -2.7177616054991858, 0.009931412102282194),
    (0.9967137412659587, 2.7177616054991858, 0.009931412102282194),
    (0.003474954947501805, -2.699234914643182, 0.010442480850288276),
    (0.9965250450524982, 2.6992349146431796, 0.010442480850288342),
    (0.003674486053725149, -2.680602650090766, 0.01097918779397618),
    (0.9963255139462749, 2.680602650090769, 0.01097918779397608),
    (0.0038854741897379973, -2.6618630697542076, 0.011542769743502684),
    (0.996114525810262, 2.6618630697542116, 0.01154276974350255),
    (0.004108577215530614, -2.6430143842138607, 0.012134519330255984),
    (0.9958914227844694, 2.643014384213862, 0.012134519330255935),
    (0.0043444907652611525, -2.62405475492376, 0.012755787208870006),
    (0.9956555092347389, 2.624054754923763, 0.012755787208869896),
    (0.0045939504162396255, -2.604982292329654, 0.01340798431750566),
    (0.9954060495837603, 2.604982292329651, 0.013407984317505768),
    (0.004857733982454321, -2.5857950538942394, 0.014092584194933273),
    (0.9951422660175456, 2.585795053894236, 0.014092584194933401),
    (0.005136663939792251, -2.5664910420239595, 0.014811125352510886),
    (0.9948633360602077, 2.566491042023957, 0.014811125352510975),
    (0.005431609990514762, -2.5470682018913906, 0.01556521369865609),
    (0.9945683900094853, 2.5470682018913924, 0.015565213698656008),
    (0.005743491774985183, -2.527524419146707, 0.01635652501285972),
    (0.9942565082250148, 2.5275244191467037, 0.016356525012859845),
    (0.006073281739102948, -2.5078575175113396, 0.017186807465667562),
    (0.9939267182608971, 2.507857517511341, 0.01718680746566752),
    (0.006422008166385245, -2.488065256246358, 0.018057884180369185),
    (0.9935779918336147, 2.4880652562463563, 0.018057884180369257),
    (0.006790758384150081, -2.468145327487576, 0.018971655831363125),
    (0.9932092416158499, 2.4681453274875746, 0.018971655831363194),
    (0.007180682153797492, -2.4480953534387813, 0.01993010327331208),
    (0.9928193178462025, 2.4480953534387795, 0.01993010327331216),
    (0.0075929952557603165, -2.4279128834137795, 0.020935290194252453),
    (0.9924070047442397, 2.4279128834137804, 0.020935290194252394),
    (0.008028983280301367, -2.407595390717316, 0.021989365784762373),
    (0.9919710167196987, 2.4075953907173178, 0.021989365784762276),
    (0.008490005635977946, -2.3871402693540253, 0.023094567414125824),
    (0.9915099943640221, 2.387140269354027, 0.023094567414125727),
    (0.008977499788271046, -2.366544830553825, 0.02425322330312508),
    (0.991022500211729, 2.366544830553827, 0.024253223303124984),
    (0.009492985741595806, -2.345806299101144, 0.02546775518165747),
    (0.9905070142584042, 2.345806299101142, 0.025467755181657573),
    (0.01003807077866795, -2.3249218094543975, 0.02674068091777589),
    (0.9899619292213321, 2.3249218094543984, 0.026740680917775816),
    (0.010614454472003569, -2.303888401640979, 0.028074617102988208),
    (0.9893855455279964, 2.303888401640978, 0.028074617102988274),
    (0.011223933983177892, -2.2827030169118228, 0.029472281576697484),
    (0.9887760660168221, 2.2827030169118228, 0.029472281576697484),
    (0.011868409666366618, -2.2613624931382135, 0.03093649587050801),
    (0.9881315903336334, 2.261362493138214, 0.030936495870507962),
    (0.012549890993640928, -2.23986355993208, 0.03247018755073285),
    (0.9874501090063591, 2.239863559932081, 0.03247018755073279),
    (0.013270502820491746, -2.2182028334693444, 0.034076392434804745),
    (0.9867294971795083, 2.218202833469346, 0.03407639243480463),
    (0.01403249201111895, -2.1963768109941118, 0.03575825665437743),
    (0.985967507988881, 2.1963768109941104, 0.03575825665437754),
    (0.014838234444142872, -2.1743818649795217, 0.03751903853468677),
    (0.9851617655558571, 2.1743818649795212, 0.03751903853468682),
    (0.015690242420582923, -2.152214236918862, 0.03936211025619052),
    (0.9843097575794171, 2.152214236918862, 0.03936211025619052),
    (0.016591172497199325, -2.1298700307182052, 0.041290959260574724),
    (0.9834088275028007, 2.1298700307182052, 0.041290959260574724),
    (0.01754383376962487, -2.107345205659043, 0.04330918935889175),
    (0.9824561662303751, 2.107345205659043, 0.043309189358891755),
    (0.01855119663111126, -2.084635568896565, 0.04542052149479945),
    (0.9814488033688887, 2.084635568896565, 0.045420521494799464),
    (0.01961640203420102, -2.061736767455833, 0.04762879411059419),
    (0.980383597965799, 2.061736767455833, 0.04762879411059417),
    (0.02074277128420241, -2.0386442796845277, 0.04993796305789015),
    (0.9792572287157976, 2.038644279684527, 0.049937963057890195),
    (0.021933816395003112, -2.015353406116853, 0.05235210098835043),
    (0.9780661836049969, 2.0153534061168528, 0.052352100988350476),
    (0.023193251039512967, -1.99185925969864, 0.05487539615275383),
    (0.976806748960487, 1.9918592596986398, 0.054875396152753844),
    (0.024525002128877944, -1.9681567553187003, 0.05751215052880326),
    (0.975474997871122, 1.9681567553186996, 0.05751215052880333),
    (0.025933222056570216, -1.944240598585769, 0.06026677718938152),
    (0.9740667779434298, 1.944240598585769, 0.06026677718938154),
    (0.027422301645530958, -1.9201052737840898, 0.06314379681333006),
    (0.9725776983544691, 1.92010527378409, 0.06314379681333003),
    (0.028996883838735114, -1.895745030933594, 0.0661478332301751),
    (0.9710031161612649, 1.895745030933594, 0.06614783323017509),
    (0.030661878175865184, -1.8711538718726552, 0.06928360787843285),
    (0.9693381218241348, 1.8711538718726552, 0.06928360787843285),
    (0.032422476101232396, -1.8463255352724308, 0.07255593304406459),
    (0.9675775238987676, 1.8463255352724308, 0.07255593304406457),
    (0.03428416715067443, -1.8212534804816964, 0.07596970373117538),
    (0.9657158328493256, 1.8212534804816969, 0.07596970373117531),
    (0.03625275606790297, -1.7959308700896102, 0.07952988800100268),
    (0.963747243932097, 1.7959308700896095, 0.07952988800100275),
    (0.03833438090366496, -1.7703505510809967, 0.08324151559741025),
    (0.9616656190963351, 1.7703505510809971, 0.08324151559741019),
    (0.04053553215415648, -1.744505034443931, 0.08710966465733373),
    (0.9594644678458435, 1.7445050344439306, 0.08710966465733379),
    (0.042863072998358204, -1.71838647307285, 0.09113944628260379),
    (0.9571369270016418, 1.7183864730728495, 0.09113944628260384),
    (0.045324260697393655, -1.6919866377913426, 0.09533598672510485),
    (0.9546757393026063, 1.691986637791342, 0.09533598672510493),
    (0.04792676922263608, -1.6652968912970565, 0.0997044069099604),
    (0.9520732307773639, 1.6652968912970567, 0.09970440690996037),
    (0.050678713183112, -1.6383081598064302, 0.10424979899101369),
    (0.949321286816888, 1.6383081598064302, 0.1042497989910137),
    (0.053588673126814736, -1.6110109021483259, 0.108977199598949),
    (0.9464113268731853, 1.6110109021483263, 0.10897719959894894),
    (0.05666572229481089, -1.583395076023033, 0.11389155940442433),
    (0.9433342777051891, 1.5833950760230329, 0.11389155940442439),
    (0.059919454911562336, -1.5554501011052546, 0.11899770857612135),
    (0.9400805450884376, 1.5554501011052544, 0.1189977085761214),
    (0.06336001609967207, -1.5271648186260736, 0.12430031766598493),
    (0.9366399839003279, 1.5271648186260731, 0.12430031766598501),
    (0.06699813351232664, -1.4985274470183096, 0.1298038534004453),
    (0.9330018664876734, 1.4985274470183096, 0.1298038534004453),
    (0.07084515078206835, -1.4695255331508053, 0.1355125287962704),
    (0.9291548492179317, 1.4695255331508055, 0.13551252879627038),
    (0.07491306289018594, -1.4401458986086626, 0.14143024695189949),
    (0.925086937109814, 1.4401458986086624, 0.14143024695189949),
    (0.0792145535670086, -1.410374580396171, 0.147560537788587),
    (0.9207854464329914, 1.4103745803961711, 0.14756053778858697),
    (0.08376303483971621, -1.380196765345057, 0.15390648692908465),
    (0.9162369651602837, 1.3801967653450569, 0.1539064869290847),
    (0.08857268885097395, -1.3495967173998689, 0.16047065580338754),
    (0.9114273111490261, 1.349596717399869, 0.16047065580338749),
    (0.09365851207878768, -1.3185576968212933, 0.16725499195945506),
    (0.9063414879212123, 1.318557696821293, 0.16725499195945512),
    (0.099036362095447, -1.287061870193024, 0.17426072842957194),
    (0.900963637904553, 1.2870618701930243, 0.1742607284295719),
    (0.10472300701136104, -1.255090209932777, 0.1814882708576531),
    (0.8952769929886389, 1.255090209932777, 0.1814882708576531),
    (0.1107361777579441, -1.2226223817872142, 0.18893707092612033),
    (0.8892638222420559, 1.2226223817872142, 0.1889370709261203),
    (0.11709462337257634, -1.1896366185252052, 0.19660548442938003),
    (0.8829053766274236, 1.189636618525205, 0.19660548442938006),
    (0.123818169458011, -1.1561095777241923, 0.20449061211983766),
    (0.8761818305419891, 1.1561095777241925, 0.20449061211983757),
    (0.13092777999850666, -1.1220161811570872, 0.2125881211964139),
    (0.8690722200014933, 1.1220161811570872, 0.21258812119641393),
    (0.13844562272543123, -1.0873294328157774, 0.22089204500797946),
    (0.8615543772745687, 1.0873294328157772, 0.2208920450079795),
    (0.14639513823614153, -1.0520202120307518, 0.2293945581968164),
    (0.8536048617638585, 1.052020212030752, 0.22939455819681634),
    (0.15480111308165093, -1.016057037437133, 0.23808572410006226),
    (0.8451988869183491, 1.016057037437133, 0.23808572410006223),
    (0.1636897570509756, -0.9794057966601395, 0.24695321074749305),
    (0.8363102429490243, 0.9794057966601393, 0.2469532107474931),
    (0.17308878489313287, -0.942029435501389, 0.2559819712261936),
    (0.8269112151068672, 0.9420294355013891, 0.25598197122619354),
    (0.18302750273159293, -0.9038875990403763, 0.2651538835067731),
    (0.816972497268407, 0.9038875990403762, 0.26515388350677316),
    (0.19353689944063165, -0.8649362153417668, 0.27444734401658105),
    (0.8064631005593683, 0.8649362153417667, 0.27444734401658105),
    (0.2046497432684883, -0.825127010270416, 0.28383680827045454),
    (0.7953502567315117, 0.8251270102704161, 0.28383680827045454),
    (0.2164006840086088, -0.7844069391152954, 0.29329227068715324),
    (0.7835993159913912, 0.7844069391152954, 0.29329227068715324),
    (0.22882636103753565, -0.7427175171107383, 0.3027786742752713),
    (0.7711736389624644, 0.7427175171107384, 0.3027786742752712),
    (0.2419655175563003, -0.6999940262423371, 0.31225523909444886),
    (0.7580344824436998, 0.6999940262423372, 0.3122552390944488),
    (0.2558591213915447, -0.6561645695505632, 0.32167469619086764),
    (0.7441408786084553, 0.6561645695505633, 0.3216746961908676),
    (0.27055049273300336, -0.6111489359553208, 0.33098241094223557),
    (0.7294495072669966, 0.6111489359553208, 0.33098241094223557),
    (0.2860854392056475, -0.5648572276432674, 0.3401153762528971),
    (0.7139145607943524, 0.5648572276432672, 0.3401153762528971),
    (0.30251239869763513, -0.5171881871647659, 0.34900105157475764),
    (0.6974876013023649, 0.5171881871647659, 0.34900105157475764),
    (0.31988259038941824, -0.4680271409286259, 0.3575560179604446),
    (0.6801174096105818, 0.4680271409286259, 0.3575560179604446),
    (0.33825017445489547, -0.41724344729743856, 0.365684411808682),
    (0.6617498255451045, 0.41724344729743856, 0.365684411808682),
    (0.35767242093257984, -0.3646872972314741, 0.37327608995852113),
    (0.6423275790674201, 0.364687297231474, 0.37327608995852113),
    (0.3782098882932908, -0.3101856576105075, 0.38020446533435925),
    (0.6217901117067093, 0.31018565761050765, 0.3802044653343592),
    (0.39992661226118575, -0.2535370628187914, 0.38632393395552633),
    (0.6000733877388142, 0.2535370628187914, 0.38632393395552633),
    (0.42289030547683504, -0.19450483409041155, 0.39146678854711303),
    (0.577109694523165, 0.19450483409041155, 0.39146678854711303),
    (0.4471725686249034, -0.13280811389209615, 0.39543947771148624),
    (0.5528274313750966, 0.13280811389209615, 0.39543947771148624),
    (0.47284911368474836, -0.0681098023029757, 0.3980180170352379),
    (0.5271508863152516, 0.0681098023029757, 0.3980180170352379),
    (0.5000000000000009, 2.2263331397374137e-15, 0.3989422804014327),
    (0.4999999999999991, -2.2263331397374137e-15, 0.3989422804014327),
];
