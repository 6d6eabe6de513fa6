//! Scaled Bessel values against a 50-digit arbitrary-precision oracle.
//!
//! Each row is `(n, x, e^{-x}I_n, e^{x}K_n, e^{-x}I_n', e^{x}K_n')` with values
//! stored as `(mantissa, binary exponent)` so deep underflow is representable.

use cylharm::specfun::{bessel_ik_scaled, BesselOrders, Wide};

type Parts = (f64, i32);

#[rustfmt::skip]
const TABLE: &[(i64, f64, Parts, Parts, Parts, Parts)] = &[
    (0, 0.001731121891103067, (0.9982711235362025, 0), (0.8107676615660093, 3), (0.8848017141025013, -10), (-0.565092668501158, 10)),
    (1, 3.224717981077962e-05, (0.5283207569593437, -15), (0.9463947623294187, 15), (0.9999677537300666, -1), (-0.8956341788659262, 30)),
    (2, 3.2310578243298718, (0.9112768939298709, -3), (0.575845811377073, 1), (0.9750407445155749, -3), (-0.742377568242147, 1)),
    (3, 5.30106179263077e-06, (0.8945091944564496, -58), (0.7452876625495137, 56), (0.9655466899811447, -39), (-0.8044747221369618, 75)),
    (4, 0.22846519247860422, (0.7419435857475465, -17), (0.6727369726361236, 15), (0.8129371102952908, -13), (-0.7377457702712399, 19)),
    (5, 0.004538257866564145, (0.5618803403350319, -50), (0.7118950417985465, 48), (0.6045397532976087, -40), (-0.7659440914961251, 58)),
    (7, 3.8017998371663025e-06, (0.7936553502795356, -145), (0.7199958662500302, 142), (0.6968043153778635, -124), (-0.6321336162864168, 163)),
    (10, 0.11867447848683851, (0.610898976717678, -62), (0.6547261766546384, 59), (0.8043774595165615, -56), (-0.8620974811799982, 65)),
    (16, 2.3711366558635024e-06, (0.8550140275380748, -359), (0.5847857273636705, 355), (0.6877755579491799, -336), (-0.9408063890515658, 377)),
    (25, 0.021699855237475307, (0.5482543895209853, -246), (0.5836704372585885, 242), (0.616830003403964, -236), (-0.656675907297101, 252)),
    (40, 4.9952155777455475e-06, (0.659794134376117, -903), (0.6062497060211451, 898), (0.6298313959394588, -880), (-0.5787185407342809, 921)),
    (64, 8.07476949072912e-06, (0.5918915785685469, -1442), (0.8447493056231937, 1436), (0.5592449887032106, -1419), (-0.7981560018522498, 1459)),
    (100, 0.017587005176881252, (0.6049968048318151, -1207), (0.5289284050675589, 1201), (0.8398490751026543, -1195), (-0.7342518644415217, 1213)),
    (160, 185.57575952941053, (0.6218934981603657, -99), (0.8399993437729892, 91), (0.8201648315176955, -99), (-0.5552016513482937, 92)),
    (256, 1.729894474537273e-05, (0.6376511255154981, -5989), (0.7841278404327797, 5981), (0.5624495692033079, -5965), (-0.6916515135062172, 6005)),
    (0, 0.0001707613761442669, (0.9998292604913669, 0), (0.5495422715955555, 4), (0.6993191723356298, -13), (-0.7149810184971074, 13)),
    (1, 1.8807549956186898, (0.8673831707729586, -2), (0.537190363682623, 1), (0.8196740621827316, -2), (-0.7183465683106881, 1)),
    (2, 2999.780133173328, (0.9317594883592211, -7), (0.7327175827319611, -5), (0.9316043779387975, -7), (-0.7328398639007443, -5)),
    (3, 0.5902411528963241, (0.621132944200687, -8), (0.5255005753161323, 7), (0.8006604686370281, -6), (-0.6864292921641694, 9)),
    (4, 0.009264132256717997, (0.6530044066649503, -35), (0.7656894264448286, 33), (0.5506838343513124, -26), (-0.6457129356255347, 42)),
    (5, 5788.300319677109, (0.6697549540853164, -7), (0.5282783360620755, -5), (0.6696973473061183, -7), (-0.5283241644368915, -5)),
    (7, 2.9229864773340886e-06, (0.5041447283750661, -147), (0.5667306819515106, 145), (0.5757004318217254, -126), (-0.6471695129645042, 166)),
    (10, 384.3125708797696, (0.571854989569611, -5), (0.5822276912317903, -3), (0.5713045715562245, -5), (-0.5831812516139315, -3)),
    (16, 0.0007872140982969571, (0.8546601098072113, -225), (0.5850278884611004, 221), (0.5301156421359862, -210), (-0.7257444947935608, 235)),
    (25, 2.7704532979509527e-05, (0.8891420001191633, -487), (0.7197950382659162, 482), (0.7651743216348215, -467), (-0.6194383799746783, 502)),
    (40, 1.5063378221252143e-05, (0.5348230997452166, -839), (0.7479108516265041, 834), (0.6772014173131858, -818), (-0.9470164788818326, 855)),
    (64, 0.0012156771144264658, (0.58461317842044, -979), (0.8552663853057854, 973), (0.9392482598834916, -964), (-0.687041871268007, 989)),
    (100, 144.96514397279535, (0.9485509271341731, -53), (0.7662375787790912, 45), (0.5750646612271675, -52), (-0.9326536057500185, 45)),
    (160, 6.415991785460008e-05, (0.9076742411561488, -3334), (0.8813734748944035, 3326), (0.5396675310064526, -3312), (-0.5240301261441375, 3348)),
    (256, 0.6546386410471025, (0.7501032562194021, -2097), (0.6665727165456208, 2089), (0.5729158440778279, -2088), (-0.509116681106918, 2098)),
    (0, 2.449822896157632, (0.5465751011189225, -1), (0.7667056925118589, 0), (0.8301671866323198, -2), (-0.9113817845366474, 0)),
    (1, 0.005296334759416625, (0.6743521566335539, -8), (0.7413940570414917, 8), (0.9947281297331243, -1), (-0.5468887206588593, 16)),
    (2, 0.3002234816457072, (0.5380875038266723, -6), (0.916113263402541, 5), (0.9028634357756985, -4), (-0.7789633206983805, 8)),
    (3, 4.245117834414146e-06, (0.9187469542688177, -59), (0.7256259882749551, 57), (0.6191950902707153, -39), (-0.9780800844572107, 76)),
    (4, 3.944679286883086e-06, (0.7622782253870343, -80), (0.6559284829969712, 78), (0.7371602228094425, -60), (-0.6343148348855572, 98)),
    (5, 0.00011470626221341565, (0.7813835547200227, -77), (0.5119124883984508, 75), (0.5197173463298239, -61), (-0.6809710761011323, 90)),
    (7, 6.36795127679034, (0.9506413821974834, -8), (0.8883117997998716, 4), (0.6902719509651362, -7), (-0.6765056857106463, 5)),
    (10, 0.018876568861123655, (0.9389505460987566, -89), (0.8520135204474275, 85), (0.9715170003145126, -80), (-0.8815649780232602, 94)),
    (16, 0.0013850699394698152, (0.879438148571488, -212), (0.5685448134486437, 208), (0.6200598941030699, -198), (-0.8017205929904454, 221)),
    (25, 0.7171642546903025, (0.6157251299405089, -121), (0.5194983738889898, 117), (0.6710116041225089, -116), (-0.5661632098557331, 122)),
    (40, 0.034028575077914035, (0.8164857119295731, -394), (0.9798085853119499, 388), (0.9372706411832862, -384), (-0.5623771636173599, 399)),
    (64, 0.0009946492709378228, (0.8110452339560106, -998), (0.6164884262999325, 992), (0.7962971315834391, -982), (-0.6052781583147847, 1008)),
    (100, 87.86073159818604, (0.7893504849483519, -80), (0.6090905072500865, 73), (0.5969831819303733, -79), (-0.9243263875183987, 73)),
    (160, 9.771119783313493, (0.766369793402186, -593), (0.5209706304511998, 586), (0.7857735025548359, -589), (-0.5341734628385745, 590)),
    (256, 0.0002760356070390248, (0.6380167846482357, -4966), (0.7836784423710411, 4958), (0.5642961001860146, -4946), (-0.6931270453545327, 4978)),
    (0, 0.554928592916609, (0.6191701802372868, 0), (0.7310376383190503, 1), (0.6620277117240777, -2), (-0.6298955102929827, 2)),
    (1, 0.17863437635382423, (0.6000345538552183, -3), (0.8052360076716023, 3), (0.8464426417683895, -1), (-0.5982326893490806, 6)),
    (2, 564.1244923801091, (0.5357075985426225, -5), (0.8470999269341635, -4), (0.5352359471719985, -5), (-0.8478557184632106, -4)),
    (3, 19.699395267871544, (0.5727311414731967, -3), (0.7011751677352077, -1), (0.5649621299117056, -3), (-0.7264669705775794, -1)),
    (4, 0.0007574912994641687, (0.9646065189206025, -50), (0.5183460619738337, 48), (0.6217883742113962, -37), (-0.6682549866996251, 60)),
    (5, 6335.02706901746, (0.6403204459206577, -7), (0.5048751254170881, -5), (0.6402701052979191, -7), (-0.5049151289782133, -5)),
    (7, 1.5158554256890482e-05, (0.7760448487049919, -131), (0.7363344687884505, 128), (0.6835293387931082, -112), (-0.6485529971905228, 147)),
    (10, 0.015178477733077567, (0.8519010135682986, -92), (0.9390751465331599, 88), (0.5481020359239233, -82), (-0.6041888802593129, 98)),
    (16, 37.27428278039411, (0.5450520738649258, -8), (0.7236958383409026, 3), (0.5869631138284587, -8), (-0.7957368029576218, 3)),
    (25, 3.310132258214166e-05, (0.5944586319415739, -480), (0.5383049093837873, 476), (0.8563402988541146, -461), (-0.7754487229343291, 495)),
    (40, 0.07755878638480422, (0.568992277255957, -346), (0.7029959168167719, 341), (0.5731472249169776, -337), (-0.7081294647593596, 350)),
    (64, 2.4664514460799348e-06, (0.835333867897356, -1552), (0.5985630646804309, 1546), (0.6459778129459129, -1527), (-0.9257578898500487, 1570)),
    (100, 4.810149398522419, (0.9904801474038123, -405), (0.6454049679167629, 398), (0.6442198745592405, -400), (-0.8395772424379364, 402)),
    (160, 44.22915702612665, (0.7455810209808552, -290), (0.5171003256844315, 283), (0.6994289982566377, -288), (-0.9705978546314644, 284)),
    (256, 0.5373526596455046, (0.8936685216228268, -2170), (0.5594903327165704, 2162), (0.831549324866211, -2161), (-0.5205999821970233, 2171)),
    (0, 568.562377271215, (0.5355087235103939, -5), (0.8408053472387325, -4), (0.5350375838198873, -5), (-0.8415444361431118, -4)),
    (1, 0.0013723823640810209, (0.7016962791361925, -10), (0.712554333032963, 10), (0.9986292642409129, -1), (-0.5070471972442914, 20)),
    (2, 8.973330480019602, (0.8541752220853296, -3), (0.5099174981432554, 0), (0.8287875234880668, -3), (-0.5489710676647694, 0)),
    (3, 0.8784130335585326, (0.7878060000323401, -7), (0.809136012376934, 5), (0.694058893266219, -5), (-0.7321962241507199, 7)),
    (4, 0.6294366731749265, (0.9100495521132821, -12), (0.5423369966729278, 10), (0.7300446764308267, -9), (-0.8756245173236343, 12)),
    (5, 0.03647987260484556, (0.5573990995041239, -35), (0.7175987744514416, 33), (0.5968739387776572, -28), (-0.7684274281781974, 40)),
    (7, 251.00236014870103, (0.7310800431816806, -5), (0.6972672574474262, -3), (0.7299076487553054, -5), (-0.6989248699235734, -3)),
    (10, 2797.7631847800676, (0.9483554159559421, -7), (0.7718716770081079, -5), (0.9481919762366837, -7), (-0.7720145378613424, -5)),
    (16, 0.055078661060843005, (0.8424476603299983, -127), (0.5935051509972747, 123), (0.9559650031292904, -119), (-0.6734787240850546, 131)),
    (25, 4.380483559850002, (0.7276529171544966, -61), (0.8663223140694003, 56), (0.5267119602419745, -58), (-0.6278252470276059, 59)),
    (40, 4.042911884582874e-06, (0.5719662733862645, -915), (0.6993419343274232, 910), (0.6745998433198074, -892), (-0.8248317799074975, 933)),
    (64, 10.34952011704955, (0.6790783590405582, -158), (0.7268475020600068, 152), (0.531631974209233, -155), (-0.569252902877948, 155)),
    (100, 2.9599784232089044, (0.7343860628393905, -472), (0.8710946754140566, 465), (0.7756649922261563, -467), (-0.9200658776043038, 470)),
    (160, 8530.203552435876, (0.9863631903205579, -10), (0.9734582041945672, -4), (0.9864788891907091, -10), (-0.9736864681838606, -4)),
    (256, 165.6715235387581, (0.5089899598857646, -254), (0.8247045990077658, 246), (0.9363828066362256, -254), (-0.759334350404512, 247)),
    (0, 0.0007013831382807719, (0.9992989856717278, 0), (0.9229457124356699, 3), (0.7177128095250559, -11), (-0.6966561766630683, 11)),
    (1, 0.007209654025965393, (0.9162122686097819, -8), (0.5456499179804977, 8), (0.9928356253936121, -1), (-0.5914304276698003, 15)),
    (2, 4.858779146273846, (0.944746027137063, -3), (0.8064828678904016, 0), (0.9380694306251013, -3), (-0.9420174247115561, 0)),
    (3, 1.6812383213768827e-06, (0.9131362859000284, -63), (0.7300845196502646, 61), (0.7769582207670301, -42), (-0.621205375534919, 82)),
    (4, 0.04139547429924578, (0.9848032978226073, -27), (0.5076866054456349, 25), (0.7434730958690932, -20), (-0.7665736109527023, 31)),
    (5, 4.7916356680899754e-05, (0.6361456346302372, -83), (0.6287868346583386, 81), (0.5064456442748351, -66), (-0.5005871867395079, 98)),
    (7, 1.482374531513889e-05, (0.6637248862463798, -131), (0.8609419102226411, 128), (0.5978032603802874, -112), (-0.7754325498327226, 147)),
    (10, 3.886370432063303e-06, (0.6961556318254906, -211), (0.5745841615201353, 208), (0.854146250208461, -190), (-0.7049844669139014, 229)),
    (16, 48.12047268316529, (0.5147009078642006, -7), (0.613019908292933, 2), (0.5375791756429706, -7), (-0.65173945085478, 2)),
    (25, 1.965179477801089e-05, (0.6801727613482517, -499), (0.9409374152695875, 494), (0.8251959942393545, -479), (-0.5707798297974365, 515)),
    (40, 0.0002993286844572751, (0.7585176578568931, -667), (0.5273443483424614, 662), (0.7733345678327778, -650), (-0.5376455109526103, 679)),
    (64, 0.008118896991553125, (0.729565043928944, -804), (0.6853398475386548, 798), (0.7020321795906292, -791), (-0.6594759864834502, 811)),
    (100, 517.8687932767116, (0.601567182169423, -19), (0.8068386978367367, 10), (0.6121197862642618, -19), (-0.822494138908822, 10)),
    (160, 6.3945945324069195e-06, (0.747802362926763, -3866), (0.5349006901161318, 3859), (0.5576271518522122, -3841), (-0.7977379134932028, 3883)),
    (256, 0.03103659074027903, (0.6727286368962574, -3222), (0.7432417306214163, 3214), (0.6773543599820562, -3209), (-0.7483523060778619, 3227)),
    (0, 0.3121756980013814, (0.7497922667433962, 0), (0.9128104209631853, 1), (0.9250445541066429, -3), (-0.9976852449080336, 2)),
    (1, 682.0846317355449, (0.9770841395520018, -6), (0.7682443639099737, -4), (0.9763686798104424, -6), (-0.7688081413583429, -4)),
    (2, 155.88286470740456, (0.5051149884983035, -4), (0.81275159286716, -3), (0.5035340403683515, -4), (-0.8154208362193591, -3)),
    (3, 436.35976278073485, (0.6050321022689273, -5), (0.9696318474231012, -4), (0.604352763644805, -5), (-0.9707651216341295, -4)),
    (4, 0.0006084300355433742, (0.803113461179695, -51), (0.6225770305179097, 49), (0.6445198715339724, -38), (-0.999269193211372, 61)),
    (5, 0.014222147292278983, (0.6570244240410649, -42), (0.6088028082320259, 40), (0.9022935340697936, -34), (-0.8360720594225987, 48)),
    (7, 0.003870006133425392, (0.7584207784785164, -75), (0.753445183063749, 72), (0.6698332709203507, -64), (-0.6654388806950502, 83)),
    (10, 694.9095369454442, (0.9014337803955331, -6), (0.8172652057950911, -4), (0.9008784141471574, -6), (-0.8179375264957163, -4)),
    (16, 3778.435732048423, (0.8030897872521114, -7), (0.6749163041312265, -5), (0.8029907095964951, -7), (-0.6750116593192157, -5)),
    (25, 3.230048607760577e-05, (0.6445324148573384, -481), (0.9929679023841235, 476), (0.9514934367619227, -462), (-0.7329363273706987, 496)),
    (40, 5.78332082233812e-05, (0.8299999777853752, -762), (0.9638554474829524, 756), (0.5474706908011128, -742), (-0.6357621949266914, 776)),
    (64, 0.00020872221176208283, (0.7231402684161997, -1142), (0.6914287889020833, 1136), (0.8458511224285304, -1124), (-0.8087584701281201, 1154)),
    (100, 0.0002154571132745316, (0.5757565681236948, -1842), (0.5557904463723091, 1836), (0.5096923867381457, -1823), (-0.9840344854803801, 1854)),
    (160, 0.07073385102705361, (0.8707622786661696, -1717), (0.9187351604690326, 1709), (0.9617504015330507, -1706), (-0.5073680453386569, 1721)),
    (256, 0.7784577332738349, (0.6535110307322822, -2033), (0.76509448926596, 2025), (0.8394984242165452, -2025), (-0.9828382553783391, 2033)),
    (0, 0.00042409796934340894, (0.9995760368931957, 0), (0.9856026515436253, 3), (0.8681843874202525, -12), (-0.5759141049007579, 12)),
    (1, 1.0988439815278912e-06, (0.5761100803319397, -20), (0.8678896916847221, 20), (0.999998901157075, -1), (-0.7532316892671433, 40)),
    (2, 0.015469098728040557, (0.965118157784748, -15), (0.5180506276566802, 14), (0.9748642884755743, -8), (-0.5233029533878936, 21)),
    (3, 0.004926468712190093, (0.6653757192714103, -28), (0.5009693291381557, 27), (0.7913761408895403, -19), (-0.5958371546013548, 36)),
    (4, 0.4606936615576765, (0.6126826594172624, -13), (0.8103844781205086, 11), (0.6684787007301259, -10), (-0.8872376775433337, 14)),
    (5, 3396.090502503191, (0.8730671569186585, -7), (0.6907208724215819, -5), (0.8729395539360836, -7), (-0.690823306855739, -5)),
    (7, 8.034087758922889, (0.8720224511228404, -7), (0.8603203346591364, 3), (0.5633340325761601, -6), (-0.586119525794958, 4)),
    (10, 0.1428612121494073, (0.9528787987837158, -60), (0.839474602902261, 56), (0.5211390893359197, -53), (-0.9182532905048251, 62)),
    (16, 1.4994344824814678, (0.9896464631321477, -53), (0.5030184388728927, 49), (0.6627359240642522, -49), (-0.6740785221761909, 52)),
    (25, 5.780971449047206, (0.8247267933903893, -53), (0.7560365711349414, 48), (0.9142945220311318, -51), (-0.839805824520336, 50)),
    (40, 3.466801152257498e-06, (0.6252113919882863, -924), (0.6397836077937183, 919), (0.8599397840795812, -901), (-0.879982969910589, 942)),
    (64, 989.3047643433405, (0.8191783048531575, -9), (0.6304557332940139, -1), (0.8204782690562656, -9), (-0.6320908270727488, -1)),
    (100, 63.0514251052693, (0.8138745589897047, -104), (0.6651755111641016, 97), (0.7620719875932845, -103), (-0.6243380315671622, 98)),
    (160, 556.0730420322085, (0.5363076266617808, -38), (0.8249396660547719, 29), (0.5576211229791255, -38), (-0.8590938204724303, 29)),
    (256, 95.2206653947143, (0.9237854154164589, -382), (0.5072948981414286, 374), (0.6623104949569246, -380), (-0.7277366946915921, 375)),
    (0, 0.008390523708986462, (0.9916620317327305, 0), (0.6172432824447849, 3), (0.5325113963218727, -7), (-0.9387769363424749, 7)),
    (1, 0.009767610278423542, (0.6190581666811558, -7), (0.8074861045531038, 7), (0.9903153676960968, -1), (-0.6461500248378479, 14)),
    (2, 1.084853106919287e-05, (0.5054719076062227, -35), (0.9891746553395148, 34), (0.7109616192335175, -18), (-0.6956521263557506, 52)),
    (3, 2.202397253796725, (0.52843793405589, -4), (0.5050704397491389, 3), (0.8572724092797793, -4), (-0.8990997868112209, 3)),
    (4, 4.1925496671235965e-06, (0.9727012471290921, -80), (0.5140324446745049, 78), (0.8850368110822474, -60), (-0.9354108200650674, 97)),
    (5, 4.7149398690594135e-06, (0.7692138344647732, -100), (0.5200114481536058, 98), (0.7779308942703833, -80), (-0.5259044400501777, 118)),
    (7, 0.00012235785485959335, (0.8260928419455521, -110), (0.69172439503733, 107), (0.7211325751180012, -94), (-0.6038364805493804, 123)),
    (10, 4.197897959203014e-05, (0.8760860982495793, -177), (0.9131522593398989, 173), (0.7961135015549559, -159), (-0.8297961171735203, 191)),
    (16, 0.002514991504218382, (0.7487412630419792, -198), (0.6677874166670681, 194), (0.5814672908156634, -185), (-0.5185990939441418, 207)),
    (25, 3.355490695589653e-06, (0.8079630569480086, -563), (0.7921154247045944, 558), (0.7176051935462515, -540), (-0.7035298678175698, 581)),
    (40, 1.0053859667337396e-06, (0.9254290122206708, -996), (0.8644639290919894, 990), (0.5486436986728096, -970), (-0.5125003443410144, 1016)),
    (64, 3.255737057553204e-05, (0.9854173442530129, -1314), (0.5073992282721145, 1308), (0.9236787325686463, -1293), (-0.9512190521305914, 1328)),
    (100, 1.0342932257639304e-05, (0.5492251592847035, -2280), (0.5826390044053298, 2274), (0.6330191420656966, -2257), (-0.6715308584607036, 2297)),
    (160, 0.004326126558558567, (0.9302306961482796, -2362), (0.8600017210999885, 2354), (0.5249663886624628, -2346), (-0.9706667381345185, 2369)),
    (256, 1.7989076416885187e-06, (0.6530035758866334, -6825), (0.7656925910721261, 6817), (0.6923676618105686, -6798), (-0.8118497486426022, 6844)),
    (0, 553.7627947112301, (0.5426206016303682, -5), (0.8519617364458645, -4), (0.5421304404817483, -5), (-0.8527306376913434, -4)),
    (1, 1.382578751016567, (0.8733980472463013, -2), (0.6559570685354041, 1), (0.9121062838880633, -2), (-0.9712291537261345, 1)),
    (2, 3.0584744252507134e-05, (0.5021879621597002, -32), (0.9956431408107775, 31), (0.5010851241164642, -16), (-0.9934566426504676, 47)),
    (3, 0.0003331022495001267, (0.8463434245993978, -40), (0.7877022998778647, 38), (0.9304657079546614, -27), (-0.8659959541232135, 51)),
    (4, 0.00297779955401721, (0.8978781153437898, -42), (0.5568682916616879, 40), (0.5889142472407646, -31), (-0.7304949606380841, 50)),
    (5, 0.004381616822059886, (0.9429050599410365, -51), (0.8484413903496785, 48), (0.5253802732124627, -40), (-0.9454916718971278, 58)),
    (7, 1.6920855145779425e-05, (0.8379299911530527, -130), (0.6819526421778266, 127), (0.6611706243432783, -111), (-0.5380963313906365, 146)),
    (10, 308.58105879454234, (0.6181214575488259, -5), (0.6707173301564755, -3), (0.6174446278465532, -5), (-0.6721541876553592, -3)),
    (16, 8531.535791076583, (0.5446238057374372, -7), (0.8815264491583641, -6), (0.5445928443887683, -7), (-0.8815796604960042, -6)),
    (25, 0.04569772623743305, (0.9721442589258196, -220), (0.6583374053928313, 215), (0.5193700163259638, -210), (-0.7034362474873944, 224)),
    (40, 0.06892020557061741, (0.6526600874905248, -353), (0.6128755435599789, 348), (0.7398286577032559, -344), (-0.6947305850245592, 357)),
    (64, 7.22514580314277e-06, (0.9849798316968872, -1453), (0.5076246070324254, 1447), (0.5200448507261307, -1429), (-0.5360263316951381, 1470)),
    (100, 1.0516619655274633e-05, (0.7260041150008957, -2278), (0.8815377031288685, 2271), (0.8229491756582962, -2255), (-0.9992515346840908, 2294)),
    (160, 0.0026690602806703407, (0.6685067019934933, -2473), (0.5983485262773564, 2466), (0.6114872910362196, -2457), (-0.5473131658043608, 2482)),
    (256, 0.0004441901432642091, (0.5176726086221256, -4790), (0.9658614183394463, 4782), (0.5690577160754354, -4771), (-0.530867273650589, 4802)),
    (0, 194.33623348066604, (0.9163538754246975, -5), (0.7187773860653471, -3), (0.9139931761369279, -5), (-0.7206243330716918, -3)),
    (1, 4.115154122784629e-05, (0.6741991067165501, -15), (0.7416206734608924, 15), (0.9999588499405025, -1), (-0.5499786048747377, 30)),
    (2, 1.701990808809852e-06, (0.796257465093185, -41), (0.627937597974349, 40), (0.8923318384278507, -21), (-0.7037029299977935, 60)),
    (3, 3234.861779935676, (0.8966123513936183, -7), (0.7061050616979747, -5), (0.8964741404885302, -7), (-0.706214496732263, -5)),
    (4, 0.1916787420024247, (0.7621793397578489, -18), (0.6552120063898488, 16), (0.9949971412882394, -14), (-0.8558767572701719, 20)),
    (5, 2.9243233297005484e-05, (0.8617725237730055, -87), (0.9283192233644136, 84), (0.5620789699768125, -69), (-0.6054831158895291, 102)),
    (7, 0.2702242118443478, (0.535825253636831, -32), (0.5328177854393139, 30), (0.8680804220563693, -28), (-0.8633952405705474, 34)),
    (10, 1.8639098964134344e-06, (0.918003592189166, -222), (0.8714562849282794, 218), (0.5871236385434354, -199), (-0.5573535759467982, 241)),
    (16, 0.1910268478365273, (0.6006503708091065, -98), (0.8323714634017577, 94), (0.7861338180301858, -92), (-0.5447105667554779, 101)),
    (25, 6095.543391818931, (0.6213781444091546, -7), (0.5407019055134562, -5), (0.621332399422241, -7), (-0.5407508027699058, -5)),
    (40, 429.78405874009667, (0.7654183783919861, -8), (0.774851036085627, -1), (0.7678429547612103, -8), (-0.7790928959760461, -1)),
    (64, 9.16152685710809, (0.8525187738422194, -168), (0.580577658356445, 162), (0.7519073847399323, -165), (-0.5122189396608646, 165)),
    (100, 0.00040846229418586594, (0.6990512674591116, -1750), (0.9155265569017725, 1743), (0.652855599277556, -1732), (-0.8550254706400122, 1761)),
    (160, 0.0046451304793491965, (0.6233525824336708, -2345), (0.6416914136615198, 2338), (0.655248285536985, -2330), (-0.6745254780306792, 2353)),
    (256, 4.681880723630973e-05, (0.5249522128348326, -5621), (0.9524676490073358, 5613), (0.6843519138033309, -5599), (-0.6208403760353466, 5636)),
    (0, 52.405767290740826, (0.8838661183766119, -4), (0.690882491109372, -2), (0.8753921891162318, -4), (-0.6974432932959378, -2)),
    (1, 0.2117990339699453, (0.6893404855602928, -3), (0.6936679019601877, 3), (0.8227809344174916, -1), (-0.8843633893585099, 5)),
    (2, 61.737482118526586, (0.7878769221901081, -4), (0.6575504264692593, -2), (0.781889972599528, -4), (-0.6631940791181246, -2)),
    (3, 0.0019799305212385367, (0.6931204440001079, -32), (0.961833558797932, 30), (0.5128024975317891, -21), (-0.7116089793549303, 41)),
    (4, 0.00016998739989496404, (0.6266162082805513, -58), (0.7979365884748111, 56), (0.8999636027716522, -44), (-0.5730093459148407, 71)),
    (5, 130.35042987351878, (0.5082638274598211, -4), (0.9652997685883834, -3), (0.5066871331081854, -4), (-0.9696999423213369, -3)),
    (7, 7067.413567751548, (0.6053294819402452, -7), (0.9574308208538196, -6), (0.6052869519955377, -7), (-0.9574990236054716, -6)),
    (10, 335.9603209404264, (0.6002765788484924, -5), (0.6344227651636671, -3), (0.5996491902204868, -5), (-0.6356464066402526, -3)),
    (16, 115.02330650932312, (0.7808271811713137, -6), (0.7057993180582114, -1), (0.7850089499630961, -6), (-0.7155990219083179, -1)),
    (25, 152.5209259693955, (0.5321872052572227, -7), (0.7780919295324136, 0), (0.537587598792152, -7), (-0.790955753024376, 0)),
    (40, 25.045528692560335, (0.9073305808130654, -44), (0.7472731561315177, 38), (0.852339570251913, -43), (-0.7061843844310294, 39)),
    (64, 0.00018509509080931366, (0.6783309223454727, -1153), (0.7371033569707433, 1147), (0.8947192203468154, -1135), (-0.9722401251937731, 1165)),
    (100, 0.1501022638814037, (0.6691026715391218, -898), (0.9565038463751305, 891), (0.870634845325824, -889), (-0.6223003079567532, 901)),
    (160, 0.0035943919550438, (0.5449571830218622, -2404), (0.7340026195838111, 2397), (0.7402987151018121, -2389), (-0.9971080537884655, 2412)),
    (256, 1.9489536345674333e-06, (0.9816612604242151, -6796), (0.5093406658259387, 6788), (0.9607053907009395, -6769), (-0.9969351813898161, 6814)),
    (0, 1.9027019103550321e-06, (0.9999980973008048, 0), (0.830512026437107, 4), (0.9975618811119679, -20), (-0.5012220389079064, 20)),
    (1, 0.0006225659877912417, (0.6371108353539915, -11), (0.7847916273513924, 11), (0.9993777730214013, -1), (-0.615517323268428, 22)),
    (2, 0.000390610247534413, (0.6397017453052641, -25), (0.781614230310893, 24), (0.7996573919090757, -13), (-0.9770547249095365, 36)),
    (3, 8.41820344015738, (0.636323270014076, -3), (0.7038100482858495, 0), (0.6416123735796133, -3), (-0.7837970432141579, 0)),
    (4, 3674.098230614982, (0.8406470004585592, -7), (0.6630789908471852, -5), (0.8405330891923626, -7), (-0.6631696145376085, -5)),
    (5, 0.029667214910363383, (0.7985353058888898, -37), (0.5009079282411328, 35), (0.5257190984559291, -29), (-0.6595545465309303, 42)),
    (7, 2345.3734942900774, (0.5217585061148031, -6), (0.8367899997905557, -5), (0.5216495876760568, -6), (-0.8369720978095022, -5)),
    (10, 7592.426249870793, (0.5822059726180394, -7), (0.9266214169431376, -6), (0.5821681351815393, -7), (-0.9266832413070327, -6)),
    (16, 3548.185470907301, (0.8269189079103602, -7), (0.6980014190087116, -5), (0.8268107823846877, -7), (-0.6981068670338393, -5)),
    (25, 0.00442954230280005, (0.8990230113112997, -304), (0.7118838804854787, 299), (0.6193869145489967, -291), (-0.9809127358431287, 311)),
    (40, 0.00016018551062063692, (0.7179623789955146, -703), (0.5571322560889914, 698), (0.6839093282246942, -685), (-0.5307073993589624, 716)),
    (64, 0.0001855488501268776, (0.7934086036634544, -1153), (0.6301923090942262, 1147), (0.5219737881617726, -1134), (-0.8291915800497207, 1165)),
    (100, 9.269613665244595e-05, (0.7178462315921585, -1964), (0.8915558400024289, 1957), (0.7385329517728951, -1944), (-0.9172484819303954, 1977)),
    (160, 0.00011059452629378135, (0.7299678863225266, -3208), (0.5479693113830624, 3201), (0.5035704014052711, -3187), (-0.7560363442317751, 3221)),
    (256, 1.740459710597009, (0.5590023770585917, -1737), (0.894429908105557, 1729), (0.6423765426132435, -1730), (-0.5139163260234039, 1737)),
    (0, 1007.1250050763564, (0.8046412258719038, -6), (0.6318068871691345, -4), (0.8042416522551106, -6), (-0.6321204779375059, -4)),
    (1, 253.7203330404138, (0.8002749977640996, -5), (0.6303952295957831, -3), (0.7987025971714657, -5), (-0.6316411907890199, -3)),
    (2, 0.06233532995167872, (0.9349259686019685, -11), (0.5344570485729679, 10), (0.9376992561094515, -6), (-0.5363865384391351, 15)),
    (3, 3.3867288584090427, (0.857767274054907, -4), (0.5132446894703672, 2), (0.5403633149249736, -3), (-0.7302720546665352, 2)),
    (4, 99.18304754496344, (0.5917769684767276, -4), (0.5447622840590006, -2), (0.5892720976401994, -4), (-0.5479401282856077, -2)),
];

fn rel(got: Wide, want: Parts) -> f64 {
    ((got / Wide::from_parts(want.0, want.1)).to_f64() - 1.0).abs()
}

#[test]
fn scaled_values_match_oracle() {
    let mut worst = 0.0f64;
    for &(n, x, i, k, di, dk) in TABLE {
        let t = BesselOrders::new(n as usize, x).unwrap();
        let errs = [rel(t.i(n), i), rel(t.k(n), k), rel(t.di(n, 1), di), rel(t.dk(n, 1), dk)];
        for e in errs {
            assert!(e < 1e-13, "n={n} x={x}: errors {errs:?}");
            worst = worst.max(e);
        }
    }
    println!("worst relative error {worst:.2e}");
}

#[test]
fn wronskian_sweep() {
    for &(n, x, ..) in TABLE {
        let t = BesselOrders::new(n as usize, x).unwrap();
        let w = (t.di(n, 1) * t.k(n) - t.i(n) * t.dk(n, 1)).scale(x).to_f64();
        assert!((w - 1.0).abs() < 1e-13, "n={n} x={x}: {w}");
    }
}

#[test]
fn recurrence_consistency() {
    for &(n, x, ..) in TABLE {
        if n == 0 {
            continue;
        }
        let t = BesselOrders::new(n as usize, x).unwrap();
        let lhs = t.i(n - 1) - t.i(n + 1);
        let rhs = t.i(n).scale(2.0 * n as f64 / x);
        let e = ((lhs / rhs).to_f64() - 1.0).abs();
        assert!(e < 1e-12, "n={n} x={x}: {e}");
    }
}

#[test]
fn small_argument_and_unit_values() {
    let p = bessel_ik_scaled(0, 1.0, 0).unwrap();
    assert!((p.i_scaled / ((-1f64).exp() * 1.266_065_877_752_008_4) - 1.0).abs() < 1e-15);
    let x = 1e-4;
    let p = bessel_ik_scaled(5, x, 0).unwrap();
    let lead = (x / 2.0f64).powi(5) / 120.0 * (-x).exp();
    assert!((p.i_scaled / lead - 1.0).abs() < 1e-8);
    let p = bessel_ik_scaled(0, 10.0, 1).unwrap();
    assert!((p.wronskian() - 1.0).abs() < 1e-14);
    assert!(p.i_scaled > 0.0 && p.k_scaled > 0.0);
}

#[test]
fn panel_ratios_stay_finite() {
    // K_n(x1)/K_n(x2) over a gap of kappa_max * R with the largest orders in use
    for &n in &[0i64, 16, 64, 128] {
        let (x1, x2) = (1e-3, 400.0);
        let a = BesselOrders::new(n as usize, x1).unwrap();
        let b = BesselOrders::new(n as usize, x2).unwrap();
        let ratio = a.k(n) / b.k(n) * Wide::exp(x2 - x1);
        assert!(ratio.ln_abs().is_finite());
        let iratio = b.i(n) / a.i(n) * Wide::exp(x2 - x1);
        assert!(iratio.ln_abs().is_finite());
    }
}
