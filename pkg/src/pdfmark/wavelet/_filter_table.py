"""Generated by tools/gen_filters.py. Do not edit."""

# low-pass reconstruction filters, sum = sqrt(2)
DB = {
    1: (
        7.0710678118654752e-1,
        7.0710678118654752e-1,
    ),
    2: (
        4.8296291314453414e-1,
        8.3651630373780791e-1,
        2.2414386804201338e-1,
        -1.2940952255126038e-1,
    ),
    3: (
        3.3267055295008262e-1,
        8.0689150931109258e-1,
        4.5987750211849157e-1,
        -1.3501102001025459e-1,
        -8.5441273882026662e-2,
        3.5226291885709537e-2,
    ),
    4: (
        2.303778133088965e-1,
        7.1484657055291565e-1,
        6.3088076792985891e-1,
        -2.7983769416859854e-2,
        -1.8703481171909308e-1,
        3.0841381835560764e-2,
        3.28830116668852e-2,
        -1.0597401785069032e-2,
    ),
    5: (
        1.6010239797419291e-1,
        6.0382926979718967e-1,
        7.2430852843777293e-1,
        1.3842814590132073e-1,
        -2.4229488706638203e-1,
        -3.2244869584638375e-2,
        7.7571493840045714e-2,
        -6.2414902127982743e-3,
        -1.2580751999081999e-2,
        3.3357252854737713e-3,
    ),
    6: (
        1.1154074335010946e-1,
        4.9462389039845309e-1,
        7.5113390802109535e-1,
        3.1525035170919763e-1,
        -2.2626469396543982e-1,
        -1.2976686756726194e-1,
        9.7501605587323049e-2,
        2.7522865530305729e-2,
        -3.158203931748603e-2,
        5.5384220116149614e-4,
        4.7772575109455106e-3,
        -1.0773010853084796e-3,
    ),
    7: (
        7.7852054085009179e-2,
        3.9653931948191731e-1,
        7.2913209084623512e-1,
        4.6978228740519312e-1,
        -1.4390600392856498e-1,
        -2.2403618499387498e-1,
        7.1309219266830265e-2,
        8.0612609151083072e-2,
        -3.8029936935014414e-2,
        -1.6574541630666881e-2,
        1.2550998556099841e-2,
        4.2957797292136652e-4,
        -1.8016407040474909e-3,
        3.5371379997452025e-4,
    ),
    8: (
        5.441584224310401e-2,
        3.1287159091429997e-1,
        6.7563073629728981e-1,
        5.8535468365420671e-1,
        -1.5829105256349306e-2,
        -2.8401554296154693e-1,
        4.7248457391328277e-4,
        1.2874742662047846e-1,
        -1.7369301001807546e-2,
        -4.4088253930794752e-2,
        1.3981027917398282e-2,
        8.7460940474057767e-3,
        -4.8703529934515743e-3,
        -3.9174037337694705e-4,
        6.7544940645056937e-4,
        -1.1747678412476953e-4,
    ),
    9: (
        3.8077947363878347e-2,
        2.4383467461259035e-1,
        6.0482312369011111e-1,
        6.5728807805130054e-1,
        1.3319738582500758e-1,
        -2.9327378327917491e-1,
        -9.6840783222976461e-2,
        1.4854074933810638e-1,
        3.0725681479333379e-2,
        -6.7632829061329974e-2,
        2.5094711483145196e-4,
        2.2361662123679097e-2,
        -4.7232047577513973e-3,
        -4.2815036824634298e-3,
        1.8476468830562265e-3,
        2.3038576352319597e-4,
        -2.5196318894271014e-4,
        3.9347320316271599e-5,
    ),
    10: (
        2.6670057900555554e-2,
        1.8817680007769149e-1,
        5.2720118893172559e-1,
        6.8845903945360357e-1,
        2.8117234366057746e-1,
        -2.4984642432731538e-1,
        -1.9594627437737704e-1,
        1.2736934033579326e-1,
        9.3057364603572351e-2,
        -7.1394147166397087e-2,
        -2.9457536821875813e-2,
        3.3212674059341002e-2,
        3.6065535669561697e-3,
        -1.0733175483330575e-2,
        1.3953517470529012e-3,
        1.9924052951850561e-3,
        -6.8585669495971163e-4,
        -1.1646685512928545e-4,
        9.3588670320069591e-5,
        -1.3264202894521245e-5,
    ),
    11: (
        1.8694297761471084e-2,
        1.4406702115062451e-1,
        4.4989976435604533e-1,
        6.8568677491620051e-1,
        4.1196436894790746e-1,
        -1.6227524502749036e-1,
        -2.7423084681794696e-1,
        6.6043588196683192e-2,
        1.498120124663785e-1,
        -4.6479955116684187e-2,
        -6.6438785695025205e-2,
        3.1335090219046076e-2,
        2.0840904360181063e-2,
        -1.5364820906201599e-2,
        -3.3408588730144456e-3,
        4.9284176560590411e-3,
        -3.0859285881514317e-4,
        -8.9302325066626461e-4,
        2.491525235528235e-4,
        5.4439074699368472e-5,
        -3.4634984186984996e-5,
        4.4942742772365101e-6,
    ),
    12: (
        1.3112257957229518e-2,
        1.0956627282118515e-1,
        3.7735513521421266e-1,
        6.5719872257930709e-1,
        5.1588647842781561e-1,
        -4.4763885653774627e-2,
        -3.1617845375278554e-1,
        -2.3779257256069728e-2,
        1.8247860592757968e-1,
        5.3595696743521503e-3,
        -9.6432120096507082e-2,
        1.0849130255822184e-2,
        4.1546277495084441e-2,
        -1.2218649069748281e-2,
        -1.2840825198300683e-2,
        6.7114990087955092e-3,
        2.2486072409952376e-3,
        -2.1795036186277605e-3,
        6.5451282125095956e-6,
        3.8865306282093144e-4,
        -8.8504109208204324e-5,
        -2.4241545757030784e-5,
        1.2776952219379767e-5,
        -1.5290717580685109e-6,
    ),
    13: (
        9.202133538962368e-3,
        8.286124387290278e-2,
        3.1199632216043806e-1,
        6.1105585115878765e-1,
        5.8888957043121891e-1,
        8.6985726179647237e-2,
        -3.1497290771138863e-1,
        -1.2457673075081526e-1,
        1.7947607942933984e-1,
        7.2948933656777164e-2,
        -1.0580761818793433e-1,
        -2.6488406475343695e-2,
        5.6139477100283429e-2,
        2.3799722540590788e-3,
        -2.3831420710323649e-2,
        3.9239414487974162e-3,
        7.2555894016175662e-3,
        -2.7619112346568622e-3,
        -1.3156739118922989e-3,
        9.3232613086726339e-4,
        4.9251525126289462e-5,
        -1.6512898855650549e-4,
        3.0678537579325493e-5,
        1.0441930571408137e-5,
        -4.7004164793608683e-6,
        5.2200350984548647e-7,
    ),
    14: (
        6.4611534600879478e-3,
        6.2364758849398898e-2,
        2.5485026779262135e-1,
        5.5430561794089384e-1,
        6.3118784910485678e-1,
        2.1867068775890652e-1,
        -2.7168855227874804e-1,
        -2.1803352999327604e-1,
        1.3839521386480659e-1,
        1.399890165844607e-1,
        -8.6748411568169689e-2,
        -7.1548955504046131e-2,
        5.5237126259216044e-2,
        2.6981408307912917e-2,
        -3.0185351540390635e-2,
        -5.6150495303569591e-3,
        1.2789493266333409e-2,
        -7.4621898926838494e-4,
        -3.8496388680221874e-3,
        1.0616910856067618e-3,
        7.0802115423552786e-4,
        -3.8683194731295448e-4,
        -4.1777245770372597e-5,
        6.8755042526975096e-5,
        -1.0337209184570774e-5,
        -4.3897049017813941e-6,
        1.7249946753678128e-6,
        -1.7871399683113591e-7,
    ),
    15: (
        4.5385373615788989e-3,
        4.6743394892766272e-2,
        2.0602386398699573e-1,
        4.9263177170813962e-1,
        6.4581314035742436e-1,
        3.3900253545473153e-1,
        -1.9320413960914543e-1,
        -2.8888259656696565e-1,
        6.5282952848772817e-2,
        1.9014671400712298e-1,
        -3.9666176555790944e-2,
        -1.1112093603723169e-1,
        3.3877143923507686e-2,
        5.4780550584507613e-2,
        -2.5767007328439963e-2,
        -2.0810050169693082e-2,
        1.5083918027835902e-2,
        5.1010003604075432e-3,
        -6.487734560315745e-3,
        -2.4175649076162428e-4,
        1.9433239803822115e-3,
        -3.7348235413761699e-4,
        -3.5956524436246881e-4,
        1.5589648992059975e-4,
        2.5792699155318937e-5,
        -2.8133296266047814e-5,
        3.3629871817375798e-6,
        1.8112704079405771e-6,
        -6.3168823258816644e-7,
        6.133359913305752e-8,
    ),
    16: (
        3.189220925347738e-3,
        3.4907714323673346e-2,
        1.6506428348885312e-1,
        4.3031272284600381e-1,
        6.373563320837889e-1,
        4.402902568863569e-1,
        -8.9751089402489643e-2,
        -3.270633105279177e-1,
        -2.7918208133028277e-2,
        2.1119069394710429e-1,
        2.7340263752716041e-2,
        -1.3238830556381039e-1,
        -6.2397227524748718e-3,
        7.5924236044276316e-2,
        -7.5889743688577376e-3,
        -3.6888397691730142e-2,
        1.0297659640955969e-2,
        1.3993768859828731e-2,
        -6.9900145634139167e-3,
        -3.6442796214983899e-3,
        3.1280233812062688e-3,
        4.0789698084971284e-4,
        -9.4102174935956759e-4,
        1.1424152003872239e-4,
        1.7478724522533818e-4,
        -6.1035966214109358e-5,
        -1.3945668988208893e-5,
        1.1336608661276259e-5,
        -1.0435713423116065e-6,
        -7.3636567854512055e-7,
        2.3087840868575459e-7,
        -2.1093396301007431e-8,
    ),
    17: (
        2.2418070010373129e-3,
        2.5985393703606043e-2,
        1.3121490330782441e-1,
        3.7035072415264115e-1,
        6.1099661568462282e-1,
        5.1831576405693784e-1,
        2.7314970403293635e-2,
        -3.2832074836396174e-1,
        -1.265997522158827e-1,
        1.9731058956501099e-1,
        1.0113548917747027e-1,
        -1.2681569177828631e-1,
        -5.7091419631676927e-2,
        8.1105986654160885e-2,
        2.2312336178103796e-2,
        -4.6922438389269737e-2,
        -3.2709555358192938e-3,
        2.273367658394627e-2,
        -3.0429899813546371e-3,
        -8.6029215203228548e-3,
        2.9679966915260949e-3,
        2.3012052421535456e-3,
        -1.4368453048029761e-3,
        -3.2813251940983797e-4,
        4.3946542776864368e-4,
        -2.5610109566548459e-5,
        -8.2048032024533918e-5,
        2.3186813798745951e-5,
        6.9906009850767513e-6,
        -4.5059424772229882e-6,
        3.0165496099945574e-7,
        2.9577009333168568e-7,
        -8.4239484460026802e-8,
        7.2674929685616081e-9,
    ),
    18: (
        1.5763102184407604e-3,
        1.9288531724146377e-2,
        1.035884658224236e-1,
        3.146789413370317e-1,
        5.7182680776660722e-1,
        5.7180165488865134e-1,
        1.4722311196992814e-1,
        -2.9365404073655874e-1,
        -2.1648093400514297e-1,
        1.4953397556537779e-1,
        1.670813127632574e-1,
        -9.2331884150846281e-2,
        -1.0675224665982849e-1,
        6.4887216211905443e-2,
        5.7051247738536884e-2,
        -4.4526141902982325e-2,
        -2.3733210395860001e-2,
        2.667070592647059e-2,
        6.2621679543057075e-3,
        -1.3051480946612002e-2,
        1.1863003385811747e-4,
        4.9433436054667381e-3,
        -1.1187326669924971e-3,
        -1.3405962983361066e-3,
        6.2846568296514571e-4,
        2.1358156191034069e-4,
        -1.9864855231174795e-4,
        -1.5359171235347247e-7,
        3.7412378807400382e-5,
        -8.5206025374466952e-6,
        -3.3326344788858219e-6,
        1.7687129836276155e-6,
        -7.6916326898851761e-8,
        -1.1760987670282317e-7,
        3.0688358630451748e-8,
        -2.5079344549485983e-9,
    ),
    19: (
        1.1086697631817106e-3,
        1.4281098450764397e-2,
        8.1278113265459551e-2,
        2.6438843174089678e-1,
        5.2443637746465492e-1,
        6.0170454912753789e-1,
        2.6089495265103883e-1,
        -2.2809139421548265e-1,
        -2.8583863175582624e-1,
        7.4652269708103266e-2,
        2.1234974330627849e-1,
        -3.3518541902302879e-2,
        -1.4278569503873657e-1,
        2.7584350625628669e-2,
        8.6906755555812232e-2,
        -2.6501236250123041e-2,
        -4.5674226277230908e-2,
        2.1623767409585047e-2,
        1.9375549889176128e-2,
        -1.3988388678535142e-2,
        -5.8669222810121747e-3,
        7.0407473671052432e-3,
        7.6895435925754836e-4,
        -2.687551800701582e-3,
        3.4180865345859578e-4,
        7.3580252050543521e-4,
        -2.6067613567862801e-4,
        -1.2460079173415878e-4,
        8.711270467219923e-5,
        5.1059504870738861e-6,
        -1.6640176297154945e-5,
        3.0109643162965263e-6,
        1.5319314766911931e-6,
        -6.8627556577691427e-7,
        1.4470882987978445e-8,
        4.6369377757826042e-8,
        -1.1164020670358258e-8,
        8.6668488389976194e-10,
    ),
    20: (
        7.7995361366684632e-4,
        1.0549394624950398e-2,
        6.3423780459081515e-2,
        2.1994211355139705e-1,
        4.726961853109017e-1,
        6.1049323893859382e-1,
        3.6150229873933106e-1,
        -1.3921208801148387e-1,
        -3.2678680043403497e-1,
        -1.6727088309077008e-2,
        2.2829105081991632e-1,
        3.9850246457771202e-2,
        -1.5545875070726796e-1,
        -2.4716827338613584e-2,
        1.0229171917444256e-1,
        5.6322468573074355e-3,
        -6.172289962468046e-2,
        5.8746818118118265e-3,
        3.2294299530769582e-2,
        -8.7893249239015613e-3,
        -1.381052613715192e-2,
        6.7216273022594568e-3,
        4.420542387045791e-3,
        -3.5814942596096228e-3,
        -8.3156217282255692e-4,
        1.3925596193231363e-3,
        -5.3497598439976951e-5,
        -3.8510474869921761e-4,
        1.0153288973670291e-4,
        6.7742808283777296e-5,
        -3.7105861833947129e-5,
        -4.3761438621839968e-6,
        7.2412482876736201e-6,
        -1.0119940100188862e-6,
        -6.8470795970005569e-7,
        2.6339242262700011e-7,
        2.0143220235505127e-10,
        -1.814843248299696e-8,
        4.0561270555518328e-9,
        -2.9988364896193196e-10,
    ),
    21: (
        5.4882250985268371e-4,
        7.7766390523547838e-3,
        4.9247771538177275e-2,
        1.8135962544038152e-1,
        4.1968794493936277e-1,
        6.015060949350039e-1,
        4.4459045192760034e-1,
        -3.572291961725529e-2,
        -3.3566408953052951e-1,
        -1.1239707156845098e-1,
        2.1156452768087239e-1,
        1.152332984396871e-1,
        -1.3994042493254722e-1,
        -8.1775942980863829e-2,
        9.6600390323724221e-2,
        4.5723405749228792e-2,
        -6.4977504893732321e-2,
        -1.8653859202118515e-2,
        3.9726835427850442e-2,
        3.3577563903381108e-3,
        -2.0892053677979079e-2,
        2.4034709208054348e-3,
        8.9888243819719119e-3,
        -2.8913343485889012e-3,
        -2.9583740389328313e-3,
        1.7166070406306241e-3,
        6.3941850051203021e-4,
        -6.9067111708210165e-4,
        -3.1964062776804372e-5,
        1.9366465041650806e-4,
        -3.6355202500863383e-5,
        -3.499665984987448e-5,
        1.5354825092760493e-5,
        2.790330539814487e-6,
        -3.0900171645456992e-6,
        3.1660954423670306e-7,
        2.9921366304648528e-7,
        -1.0004008790305973e-7,
        -2.2540149746733301e-9,
        7.0580335412311219e-9,
        -1.4719541976503653e-9,
        1.0388055710237066e-10,
    ),
    22: (
        3.8626323149109822e-4,
        5.7218546313345391e-3,
        3.8069937236411085e-2,
        1.4836754089011143e-1,
        3.6772868344603748e-1,
        5.7843273100952443e-1,
        5.079010906221639e-1,
        7.3724501183630152e-2,
        -3.1272658042829619e-1,
        -2.0056840610488709e-1,
        1.6409318810676648e-1,
        1.799731879928913e-1,
        -9.711079840911471e-2,
        -1.3176813768668341e-1,
        6.8076314392732216e-2,
        8.4557376366826075e-2,
        -5.1364254297444132e-2,
        -4.6530811827506713e-2,
        3.6970846620698021e-2,
        2.058670762756536e-2,
        -2.3480001344493189e-2,
        -6.2137828493646585e-3,
        1.2564725218343374e-2,
        3.001373985076436e-4,
        -5.4556919861567171e-3,
        1.0442607391860253e-3,
        1.8270104956572791e-3,
        -7.7069098812311962e-4,
        -4.2378739983918008e-4,
        3.2860941421367873e-4,
        4.3458999045320034e-5,
        -9.4052236348157604e-5,
        1.1374349662125932e-5,
        1.7373756957561894e-5,
        -6.1667293164675784e-6,
        -1.5651791319951602e-6,
        1.2951820573188776e-6,
        -8.7798798733612863e-8,
        -1.2833362287517544e-7,
        3.7612287493373624e-8,
        1.6801714049229889e-9,
        -2.7296231466329761e-9,
        5.3359388216674899e-10,
        -3.6021134843395547e-11,
    ),
    23: (
        2.7190419412828884e-4,
        4.2027488931838335e-3,
        2.9310003657884115e-2,
        1.2051553178397193e-1,
        3.1845081385286524e-1,
        5.4493114787352043e-1,
        5.5101851724191939e-1,
        1.8139262536384001e-1,
        -2.6139214803064411e-1,
        -2.7140209860784306e-1,
        9.2125407082418053e-2,
        2.2357365824204023e-1,
        -3.3037447094289379e-2,
        -1.6401132153187593e-1,
        2.02830745756493e-2,
        1.1229704361810729e-1,
        -2.1126212356227241e-2,
        -7.0207391574901109e-2,
        2.1765856834499976e-2,
        3.8495332522569199e-2,
        -1.852351365015616e-2,
        -1.7537101003035845e-2,
        1.2751943931528286e-2,
        6.0318406500241628e-3,
        -7.0753192737061528e-3,
        -1.1348654733562517e-3,
        3.122876449818145e-3,
        -2.465014005163512e-4,
        -1.0612312288866513e-3,
        3.1942049270990115e-4,
        2.5676245200787372e-4,
        -1.500218503490341e-4,
        -3.3788948341209034e-5,
        4.4260712031092461e-5,
        -2.6352078892491862e-6,
        -8.3478755678546255e-6,
        2.3975695468402401e-6,
        8.1475748347794478e-7,
        -5.3390054052094212e-7,
        1.853091785633965e-8,
        5.4175491795392787e-8,
        -1.3999354954379988e-8,
        -9.4728859018120505e-10,
        1.0504464536965434e-9,
        -1.9324051113134175e-10,
        1.2502033023510409e-11,
    ),
    24: (
        1.9143580094755137e-4,
        3.0820817149054944e-3,
        2.2482339949716411e-2,
        9.7262235833625197e-2,
        2.7290891606772633e-1,
        5.0437104083992499e-1,
        5.74939221095542e-1,
        2.8098555323371188e-1,
        -1.8727140688515624e-1,
        -3.1794307899936274e-1,
        4.7766136843447282e-3,
        2.3923738878031086e-1,
        4.2528729641483833e-2,
        -1.7117535137034689e-1,
        -3.8777173577920016e-2,
        1.2101630346922424e-1,
        2.0980113709144815e-2,
        -8.2161654208001667e-2,
        -4.5784362418192216e-3,
        5.1301620039980879e-2,
        -4.9447094281256283e-3,
        -2.8213107094901891e-2,
        7.6617218816465859e-3,
        1.3049970871085736e-2,
        -6.2914353700181878e-3,
        -4.7465687863231138e-3,
        3.7360461782825233e-3,
        1.1537649368394815e-3,
        -1.6964568189748244e-3,
        -4.4161848561415201e-5,
        5.8612705931831099e-4,
        -1.1812332379695547e-4,
        -1.4600798177626168e-4,
        6.5593886393056341e-5,
        2.1832414604665584e-5,
        -2.0228882926126977e-5,
        1.3411577508091147e-8,
        3.9011003385977026e-6,
        -8.9802531439384077e-7,
        -4.0325077568799716e-7,
        2.1663396532785746e-7,
        -5.0576454197925003e-10,
        -2.2557403881760861e-8,
        5.1577767896719996e-9,
        4.7483758242562311e-10,
        -4.0246586445843798e-10,
        6.991801157638231e-11,
        -4.3427825038037102e-12,
    ),
    25: (
        1.348029793470189e-4,
        2.2569595918547795e-3,
        1.7186741254040155e-2,
        7.8035862872132676e-2,
        2.3169350788602182e-1,
        4.5968341514609459e-1,
        5.8163689674605778e-1,
        3.678850748029467e-1,
        -9.7174640964638143e-2,
        -3.3647307964174613e-1,
        -8.7587614587654661e-2,
        2.2453781974510171e-1,
        1.1815528671995986e-1,
        -1.5056021375057963e-1,
        -9.8508615289960222e-2,
        1.0663380501847795e-1,
        6.6752164494018607e-2,
        -7.7084111056574194e-2,
        -3.7173962861122509e-2,
        5.36179093987795e-2,
        1.5542605929102292e-2,
        -3.4042320460653341e-2,
        -3.0798367948470367e-3,
        1.8922804476627628e-2,
        -1.9894257822027365e-3,
        -8.8607026180463684e-3,
        2.7269362587384957e-3,
        3.3227077739731918e-3,
        -1.8424842902033313e-3,
        -8.9997742374629505e-4,
        8.7725819367482748e-4,
        1.1532124404663005e-4,
        -3.098800990984698e-4,
        3.543714523276059e-5,
        7.9046400039655283e-5,
        -2.7330481199600417e-5,
        -1.2771952931997838e-5,
        8.9906613930625889e-6,
        5.2328277081530764e-7,
        -1.7792013326536346e-6,
        3.2120375188625191e-7,
        1.9228067901423716e-7,
        -8.6569417322785072e-8,
        -2.6115985561117709e-9,
        9.2792244800813724e-9,
        -1.8804157550621555e-9,
        -2.2284749102281689e-10,
        1.5359015701626572e-10,
        -2.5276251634656448e-11,
        1.5096920828239109e-12,
    ),
    26: (
        9.4937957507105921e-5,
        1.6505202335329882e-3,
        1.3097554292558501e-2,
        6.2274744025149605e-2,
        1.950394387167701e-1,
        4.1329296227835637e-1,
        5.7366904303422226e-1,
        4.3915831178916623e-1,
        1.7740767809866857e-3,
        -3.2638459369178002e-1,
        -1.748399612893925e-1,
        1.812918323111227e-1,
        1.8275540958967237e-1,
        -1.0432390028592704e-1,
        -1.4797719327525449e-1,
        6.9823186113292365e-2,
        1.0648240524980863e-1,
        -5.3448561681483191e-2,
        -6.8654759604035915e-2,
        4.2232185796372035e-2,
        3.8535715971111864e-2,
        -3.1378110363067755e-2,
        -1.7760903568358184e-2,
        2.0734920179963825e-2,
        5.829580555318888e-3,
        -1.1785497906193029e-2,
        -5.2873839926268144e-4,
        5.6019472394238049e-3,
        -9.3905825047382896e-4,
        -2.145530281567621e-3,
        8.383488056543616e-4,
        6.1613822045743442e-4,
        -4.3195570742618075e-4,
        -1.0605747482838039e-4,
        1.5747952386074936e-4,
        -5.277795493037869e-6,
        -4.1096739963914778e-5,
        1.074221540872195e-5,
        7.0000786829649867e-6,
        -3.8874001618567952e-6,
        -4.6504632206402626e-7,
        7.9392106337099521e-7,
        -1.0790042375786714e-7,
        -8.9044663701685908e-8,
        3.40779562129073e-8,
        2.1693282598503231e-9,
        -3.7760104785323243e-9,
        6.7800472458286367e-10,
        1.0023031910465269e-10,
        -5.8404081853411715e-11,
        9.1305100163717962e-12,
        -5.251871224244435e-13,
    ),
    27: (
        6.6871313854319317e-5,
        1.2055312316732132e-3,
        9.9525887808766198e-3,
        4.945259998290488e-2,
        1.6292202750239332e-1,
        3.6711021412538982e-1,
        5.5384986099048005e-1,
        4.93406122677999e-1,
        1.0284085506182291e-1,
        -2.8971680331459485e-1,
        -2.4826458190326057e-1,
        1.1482301951778536e-1,
        2.2727328841417083e-1,
        -3.8786418631802311e-2,
        -1.7803174095900858e-1,
        1.5799397460240484e-2,
        1.3119797171715533e-1,
        -1.4062751555808765e-2,
        -9.1022906529565918e-2,
        1.7311018265493711e-2,
        5.7969405734717988e-2,
        -1.8512493561998077e-2,
        -3.2739066631020871e-2,
        1.6146966922395667e-2,
        1.5665595648924579e-2,
        -1.1577186458976281e-2,
        -5.862096345462926e-3,
        6.8566356096848807e-3,
        1.3426268773036796e-3,
        -3.3328544695200062e-3,
        1.4575296259317286e-4,
        1.3011774502441351e-3,
        -3.4183512269154276e-4,
        -3.8790185741013276e-4,
        2.0197198796903269e-4,
        7.6600583870685769e-5,
        -7.7111455177975842e-5,
        -3.5174836149074454e-6,
        2.0634426477368853e-5,
        -3.9011640706384255e-6,
        -3.657500908187105e-6,
        1.6343696247256378e-6,
        3.0508806862519991e-7,
        -3.4724681473943893e-7,
        3.2865589680551595e-8,
        4.0262550528669086e-8,
        -1.3213322739900566e-8,
        -1.3094656068569552e-9,
        1.5216149847785217e-9,
        -2.4155269280111307e-10,
        -4.3749862242936544e-11,
        2.2136620880676625e-11,
        -3.2957901224765858e-12,
        1.8281883528824249e-13,
    ),
    28: (
        4.7108077750140511e-5,
        8.7949851598438703e-4,
        7.5426503776468592e-3,
        3.9092608115405344e-2,
        1.3513791425364105e-1,
        3.2256336128552243e-1,
        5.2499823163033556e-1,
        5.3051629344148581e-1,
        2.0017614404598444e-1,
        -2.3049895404758253e-1,
        -3.0132780953264178e-1,
        3.2857879163387105e-2,
        2.4580815137375955e-1,
        3.6906885315711272e-2,
        -1.8287733073298492e-1,
        -4.6838233744551676e-2,
        1.3462756791022609e-1,
        3.4478631275099705e-2,
        -9.7685355805652442e-2,
        -1.7341922831305899e-2,
        6.774789550190934e-2,
        3.4480189555409511e-3,
        -4.3333368616086284e-2,
        4.4317329100629883e-3,
        2.4688060010151866e-2,
        -6.8155497645523096e-3,
        -1.206359196821849e-2,
        5.8388166277489449e-3,
        4.7848631124542417e-3,
        -3.7254612470742548e-3,
        -1.3603738456396924e-3,
        1.8759986682027956e-3,
        1.4156723931404643e-4,
        -7.48674955911463e-4,
        1.1546560636589213e-4,
        2.2957909822334562e-4,
        -8.9039014900444881e-5,
        -4.9077134161902509e-5,
        3.6414012110508028e-5,
        4.6386649813942947e-6,
        -1.0043260413334226e-5,
        1.2479003175748341e-6,
        1.8403637345177692e-6,
        -6.6702154799548926e-7,
        -1.7574611732098428e-7,
        1.4906600135353622e-7,
        -8.262387315626557e-9,
        -1.7841386908757101e-8,
        5.0440470563834364e-9,
        6.944540328946227e-10,
        -6.0770412472290102e-10,
        8.4922200110563821e-11,
        1.8673672637833904e-11,
        -8.3654904712588008e-12,
        1.1888505334059015e-12,
        -6.3677723547148573e-14,
    ),
    29: (
        3.3189662798415248e-5,
        6.4095168030444345e-4,
        5.7021265177733754e-3,
        3.0773580221408377e-2,
        1.1137011695174053e-1,
        2.8065345597098294e-1,
        4.8975880476219931e-1,
        5.513744327583752e-1,
        2.8910523833582916e-1,
        -1.5402873445990005e-1,
        -3.3004094891758805e-1,
        -5.5706800072940858e-2,
        2.3610523615302594e-1,
        1.1241917487318838e-1,
        -1.6087798859418774e-1,
        -1.0784594993872142e-1,
        1.1447229589381826e-1,
        8.3220747162449758e-2,
        -8.5125492615635502e-2,
        -5.5027489525325723e-2,
        6.3479164584211866e-2,
        3.0531543272704136e-2,
        -4.5187981277788345e-2,
        -1.2917142554266795e-2,
        2.9470431871747641e-2,
        2.6483273076781679e-3,
        -1.704122457360669e-2,
        1.7378803327205112e-3,
        8.4697254935607523e-3,
        -2.5508071277894727e-3,
        -3.4737989896811006e-3,
        1.8771209257236501e-3,
        1.087053942226063e-3,
        -1.0007783270856805e-3,
        -2.0007113630767798e-4,
        4.111283454742767e-4,
        -2.2920180412144999e-5,
        -1.2930448400807206e-4,
        3.645026068562775e-5,
        2.9133447501690412e-5,
        -1.6573283953066163e-5,
        -3.5936448040251876e-6,
        4.7506092464525529e-6,
        -3.0290545920528183e-7,
        -8.9757017506362807e-7,
        2.6338983869976966e-7,
        9.387197411095863e-8,
        -6.2861569220107862e-8,
        1.0765919066191961e-9,
        7.7689788547700622e-9,
        -1.8939953861719841e-9,
        -3.426800863263089e-10,
        2.407099453509343e-10,
        -2.9405892507645326e-11,
        -7.832509733627817e-12,
        3.1527624133703104e-12,
        -4.2856548700683441e-13,
        2.219191311588303e-14,
    ),
    30: (
        2.3386161727314215e-5,
        4.6663795042855093e-4,
        4.3007971650480695e-3,
        2.4130832671588379e-2,
        9.1238304067015707e-2,
        2.420206709402141e-1,
        4.5048782185331784e-1,
        5.5757223291283643e-1,
        3.6624268337162798e-1,
        -6.6183670775937315e-2,
        -3.3296697502085561e-1,
        -1.4196851333008293e-1,
        1.994621215806643e-1,
        1.7782987324483674e-1,
        -1.1455821943270778e-1,
        -1.5723681795999381e-1,
        7.2778658970364427e-2,
        1.2274774604500938e-1,
        -5.3806465458257077e-2,
        -8.765869003638366e-2,
        4.3801664671417733e-2,
        5.6712365744735695e-2,
        -3.567339749675961e-2,
        -3.2263758919352208e-2,
        2.7078619595294183e-2,
        1.5287960769857395e-2,
        -1.8399743868117341e-2,
        -5.2968596661310866e-3,
        1.0915631658304889e-2,
        6.1967175649772444e-4,
        -5.5307301481920033e-3,
        8.433845866620934e-4,
        2.3245200940600993e-3,
        -8.6092769681104239e-4,
        -7.6787825043809187e-4,
        5.0509482390334678e-4,
        1.7248258423517097e-4,
        -2.1617183011696338e-4,
        -8.548305467584071e-6,
        6.9820083708083279e-5,
        -1.3397168632939716e-5,
        -1.6361524787254265e-5,
        7.252145535890469e-6,
        2.3275490984936865e-6,
        -2.1872676769961664e-6,
        1.0994743385262033e-8,
        4.2616623260115724e-7,
        -1.0004146823545009e-7,
        -4.7643799651394534e-8,
        2.6054427549776254e-8,
        5.553397861397054e-10,
        -3.3311056804675782e-9,
        6.9848626918321826e-10,
        1.6136229782709044e-10,
        -9.4613879972768021e-11,
        1.0001051313931712e-11,
        3.2394286385322861e-12,
        -1.1852375921015823e-12,
        1.54399757084762e-13,
        -7.7379426309544057e-15,
    ),
    31: (
        1.6480133864561407e-5,
        3.3941220377699567e-4,
        3.2368840686277212e-3,
        1.8853691612985913e-2,
        7.4336093011647887e-2,
        2.0701287448523533e-1,
        4.0919220003742786e-1,
        5.511398409142755e-1,
        4.294688082061373e-1,
        2.7169212497369464e-2,
        -3.1095511831950752e-1,
        -2.1797848552356335e-1,
        1.4017828876527327e-1,
        2.2496671147373709e-1,
        -4.992634916046824e-2,
        -1.8696236089571545e-1,
        1.5436988429488934e-2,
        1.450895009319932e-1,
        -8.1398322734692369e-3,
        -1.0761277332349563e-1,
        1.0941297452364969e-2,
        7.5353611743281407e-2,
        -1.4880026618104822e-2,
        -4.861907546485433e-2,
        1.6154171565985911e-2,
        2.8047619366756169e-2,
        -1.4276275277763519e-2,
        -1.3900552939266529e-2,
        1.0517639487371841e-2,
        5.5161635733109926e-3,
        -6.5208523758746126e-3,
        -1.4282642232189099e-3,
        3.3930667767159319e-3,
        -6.3979011060146005e-5,
        -1.4590417419851609e-3,
        3.4313982969047344e-4,
        4.9988161756372226e-4,
        -2.3965834694029496e-4,
        -1.2434116172502287e-4,
        1.0895843504167669e-4,
        1.501335727444533e-5,
        -3.6312551578600862e-5,
        4.0345202351842788e-6,
        8.7953013426929878e-6,
        -3.0351423658915096e-6,
        -1.3690602309429408e-6,
        9.8100154220443716e-7,
        5.3272506569749154e-8,
        -1.9759251291702062e-7,
        3.6168265173310048e-8,
        2.3283097138214096e-8,
        -1.0615296021502523e-8,
        -6.4743116879598614e-10,
        1.4085681510251774e-9,
        -2.5240439541533533e-10,
        -7.3489300324862639e-11,
        3.6921088088711294e-11,
        -3.3270089671259799e-12,
        -1.3243349172439632e-12,
        4.4454670962919322e-13,
        -5.5594420505790143e-14,
        2.6993828797626656e-15,
    ),
    32: (
        1.1614633021350149e-5,
        2.4665669063809034e-4,
        2.4312619195722661e-3,
        1.4681046381419136e-2,
        6.0257499120335371e-2,
        1.757507836394389e-1,
        3.6750962859734964e-1,
        5.3431791934095383e-1,
        4.778091637339484e-1,
        1.2063053826561783e-1,
        -2.6669818147667555e-1,
        -2.7742158155842722e-1,
        6.4713354805516238e-2,
        2.4831064235688017e-1,
        2.4662444839697404e-2,
        -1.921023447085469e-1,
        -4.8995117184671739e-2,
        1.4523207947528665e-1,
        4.440490819993974e-2,
        -1.0945611311608938e-1,
        -2.9627872508447705e-2,
        8.0874140638483957e-2,
        1.4106151516106608e-2,
        -5.6926314062478436e-2,
        -2.3802644649325738e-3,
        3.705145792354468e-2,
        -4.1459076608272188e-3,
        -2.1662822836391193e-2,
        6.1675273106856751e-3,
        1.1017400715406881e-2,
        -5.4115682572757912e-3,
        -4.6492167511844115e-3,
        3.627224640687865e-3,
        1.4689551004684678e-3,
        -1.9647405558217783e-3,
        -2.2116787295790979e-4,
        8.6730585184505553e-4,
        -1.0245373106073962e-4,
        -3.0596544238269118e-4,
        1.0539154617398281e-4,
        8.1036783291348384e-5,
        -5.2598092826843228e-5,
        -1.2940457794055127e-5,
        1.8242684019806912e-5,
        -6.361781532260255e-7,
        -4.5583095762644231e-6,
        1.202889036321621e-6,
        7.5600476255959478e-7,
        -4.2859706931514573e-7,
        -5.0033618687482303e-8,
        8.9659663119577284e-8,
        -1.2199243594833731e-8,
        -1.104383021722649e-8,
        4.250422311980593e-9,
        4.3843877999404744e-10,
        -5.8810914626346056e-10,
        8.9047237962216055e-11,
        3.2632707413329079e-11,
        -1.4309187651692023e-11,
        1.0756106535010621e-12,
        5.3614822296118016e-13,
        -1.6638004894334024e-13,
        2.000715303810525e-14,
        -9.4210191395350784e-16,
    ),
    33: (
        8.1863583141750919e-6,
        1.7910161537027915e-4,
        1.8227094351640842e-3,
        1.1395943374581609e-2,
        4.8614666531716195e-2,
        1.4818631318005281e-1,
        3.2671813011770758e-1,
        5.0937617251493966e-1,
        5.1125477058326747e-1,
        2.0958235071305542e-1,
        -2.042026223985421e-1,
        -3.1599741076656026e-1,
        -1.9278339436952759e-2,
        2.4542061211927911e-1,
        9.9851558680338157e-2,
        -1.7142809905185933e-1,
        -1.1084413311671079e-1,
        1.2196785640373461e-1,
        9.4788088050615959e-2,
        -9.1146968351331489e-2,
        -7.0302485054056159e-2,
        7.0191143940996533e-2,
        4.5734561893896677e-2,
        -5.3471251335822289e-2,
        -2.5248582977476499e-2,
        3.8687060760244965e-2,
        1.0703265820019549e-2,
        -2.5728761754732973e-2,
        -2.1677586173536073e-3,
        1.5316954115857665e-2,
        -1.5942887824146048e-3,
        -7.9535403870579392e-3,
        2.3890624081659086e-3,
        3.480800953405712e-3,
        -1.8607182144557959e-3,
        -1.2043092576046589e-3,
        1.0743806963512914e-3,
        2.7273058473369372e-4,
        -4.9083290075903515e-4,
        4.3931662517661858e-6,
        1.7804318982512454e-4,
        -4.1604385162737093e-5,
        -4.9295644234173018e-5,
        2.4233353988168904e-5,
        9.0708057578284538e-6,
        -8.8661213667577362e-6,
        -3.6075161028797716e-7,
        2.2883712761415273e-6,
        -4.4269234079528701e-7,
        -3.9857912919859441e-7,
        1.8224433325710534e-7,
        3.3779727037308544e-8,
        -3.9878381985188807e-8,
        3.6728635768381813e-9,
        5.1112118573474538e-9,
        -1.6713926772519325e-9,
        -2.4964021052461936e-10,
        2.4268331023056823e-10,
        -3.0495744539458634e-11,
        -1.4202368598899368e-11,
        5.5094147207655245e-12,
        -3.3434812189532788e-13,
        -2.1524883868333026e-13,
        6.2147402471743983e-14,
        -7.1965105453633224e-15,
        3.2893736784163064e-16,
    ),
    34: (
        5.7705106327302856e-6,
        1.29947620067953e-4,
        1.36406139005905e-3,
        8.8198894038849788e-3,
        3.9048841351785941e-2,
        1.2415248211137681e-1,
        2.8776505923371456e-1,
        4.7847874627937106e-1,
        5.3055509965646318e-1,
        2.9036632950727495e-1,
        -1.2824684217443717e-1,
        -3.3152530150838694e-1,
        -1.0389191551564047e-1,
        2.169072201874276e-1,
        1.6660175041220744e-1,
        -1.2733735822380116e-1,
        -1.6092492717786681e-1,
        7.7991846937948107e-2,
        1.3412596027113613e-1,
        -5.4482968064139046e-2,
        -1.0294759699281409e-1,
        4.3576094649631297e-2,
        7.3185235436795606e-2,
        -3.701283841786245e-2,
        -4.7438559645277762e-2,
        3.0739746573959345e-2,
        2.7228350756354196e-2,
        -2.3671737922826365e-2,
        -1.3143980016657161e-2,
        1.6409374199865193e-2,
        4.7136492609998099e-3,
        -1.0045506708361519e-2,
        -6.1947488451538728e-4,
        5.334950768759936e-3,
        -7.692127975067837e-4,
        -2.3994539435370559e-3,
        8.589959874363662e-4,
        8.7519990640786887e-4,
        -5.527355762144198e-4,
        -2.3267321402335316e-4,
        2.6507723975580578e-4,
        2.6600500184534419e-5,
        -9.9146977707801346e-5,
        1.3531172272496496e-5,
        2.8449514196978074e-5,
        -1.0576574942579506e-5,
        -5.7108265109983039e-6,
        4.1698717585470284e-6,
        4.9797181014213077e-7,
        -1.1163065348170084e-6,
        1.4481957083331851e-7,
        2.0259906666678592e-7,
        -7.5267017404125894e-8,
        -1.9903465015317369e-8,
        1.7404233329360681e-8,
        -8.6657442613687222e-10,
        -2.3165019469954828e-9,
        6.4463782103234023e-10,
        1.3004103186094152e-10,
        -9.904774537632409e-11,
        1.0042087354617699e-11,
        6.0801253540001673e-12,
        -2.1078791089153015e-12,
        9.7994511582115977e-14,
        8.5791940517997332e-14,
        -2.3170837039064085e-14,
        2.5873383819356996e-15,
        -1.1489447544805901e-16,
    ),
    35: (
        4.067934061148559e-6,
        9.4214694755767406e-5,
        1.0191226803750981e-3,
        6.807292884319132e-3,
        3.1236288511490715e-2,
        1.0340445586147838e-1,
        2.5130737899449331e-1,
        4.4359273922403544e-1,
        5.370084275091661e-1,
        3.6034564051804733e-1,
        -4.3883881873934041e-2,
        -3.2382286491211612e-1,
        -1.8178697676672783e-1,
        1.6604135749078092e-1,
        2.172992893210893e-1,
        -6.5262871310677539e-2,
        -1.9191958929859395e-1,
        1.9309544666018351e-2,
        1.5529248039623711e-1,
        -4.7526808341113504e-3,
        -1.2058552264339355e-1,
        4.7342291726419488e-3,
        8.9913547570729544e-2,
        -9.3185589499039248e-3,
        -6.3356037440443466e-2,
        1.3228549585036555e-2,
        4.1254693064705092e-2,
        -1.4366839784220072e-2,
        -2.4169497801660267e-2,
        1.2766456715656744e-2,
        1.2289436008118711e-2,
        -9.57779789923571e-3,
        -5.0859916492334299e-3,
        6.1377545867405211e-3,
        1.4280887940707621e-3,
        -3.3576443809223832e-3,
        7.6159694351727365e-6,
        1.549637469702363e-3,
        -3.346692164250855e-4,
        -5.8648103189918175e-4,
        2.648328819961289e-4,
        1.700012283661249e-4,
        -1.3658830722611616e-4,
        -2.9769959628485097e-5,
        5.3041431229133102e-5,
        -2.4370015268277899e-6,
        -1.5724420772702817e-5,
        4.3080478617167312e-6,
        3.3533458628713099e-6,
        -1.8959296176931533e-6,
        -3.9039317332873062e-7,
        5.3023686169047609e-7,
        -3.7003083782051245e-8,
        -9.9903969445349008e-8,
        3.0081886507190669e-8,
        1.0849027337899348e-8,
        -7.4581165528930376e-9,
        5.8979513103843616e-11,
        1.0308233454854334e-9,
        -2.4335455737516729e-10,
        -6.407938256501889e-11,
        4.0005366272537445e-11,
        -3.1256393571085575e-12,
        -2.5670654761550814e-12,
        8.0150885336879009e-13,
        -2.5979543288938481e-14,
        -3.3977208567962674e-14,
        8.6240374347200892e-15,
        -9.2980125293241854e-16,
        4.0146287123334887e-17,
    ),
    36: (
        2.8679251827559463e-6,
        6.8260286785463587e-5,
        7.6021510996684883e-4,
        5.2402973774098844e-3,
        2.4890565644827965e-2,
        8.5652092595264091e-2,
        2.1775695309790081e-1,
        4.0643369770825535e-1,
        5.3226689526072869e-1,
        4.1787533560096979e-1,
        4.397519752934863e-2,
        -2.9442103958911457e-1,
        -2.4680703697812553e-1,
        9.8114204163114771e-2,
        2.4653727760897421e-1,
        7.278515095792229e-3,
        -1.9933720560864962e-1,
        -4.5861400746392716e-2,
        1.5410623662764288e-1,
        5.0276180073538429e-2,
        -1.1880375431013563e-1,
        -3.9880853575513176e-2,
        9.1156782258016544e-2,
        2.503872144956849e-2,
        -6.8209016636817511e-2,
        -1.1319100316817428e-2,
        4.8513083547809085e-2,
        1.4249726617653916e-3,
        -3.1980720677639697e-2,
        3.9840401987170049e-3,
        1.9063594780625359e-2,
        -5.6578132450588184e-3,
        -9.9902634732813723e-3,
        5.022989106665829e-3,
        4.4134848353505753e-3,
        -3.4845414454048833e-3,
        -1.5030740662966437e-3,
        1.9907937718517373e-3,
        2.7768127957120261e-4,
        -9.463403823261102e-4,
        8.614565758992702e-5,
        3.6935072849675105e-4,
        -1.1551188958435271e-4,
        -1.1318994680846657e-4,
        6.6947411969305903e-5,
        2.3751066836608608e-5,
        -2.7313908246543379e-5,
        -1.1834710599856159e-6,
        8.3722181981607884e-6,
        -1.5861457824345775e-6,
        -1.8708116028591807e-6,
        8.3114212797077785e-7,
        2.5484235225565778e-7,
        -2.4553776584342327e-7,
        2.7532490733395123e-9,
        4.799043465450992e-8,
        -1.1560936888170084e-8,
        -5.6127843433277914e-9,
        3.138841695782424e-9,
        1.0908155537137518e-10,
        -4.5125457785632496e-10,
        8.962418203859612e-11,
        3.0374290981125352e-11,
        -1.5997166892613571e-11,
        8.8768462872173742e-13,
        1.070969357114017e-12,
        -3.0292850269748773e-13,
        5.5422631826398042e-15,
        1.3380713862991059e-14,
        -3.2046285434017499e-15,
        3.3399719848186932e-16,
        -1.4032741753731906e-17,
    ),
    37: (
        2.0220608624983921e-6,
        4.942343750628132e-5,
        5.662418377066724e-4,
        4.0241403682572868e-3,
        1.9762286153879592e-2,
        7.0584825977181608e-2,
        1.8732633186206494e-1,
        3.6844097240030614e-1,
        5.1816704085562289e-1,
        4.6220755366160571e-1,
        1.3087896323302017e-1,
        -2.4618042976108341e-1,
        -2.9437591526266177e-1,
        1.967150045235939e-2,
        2.5152325436026869e-1,
        8.1806028387218623e-2,
        -1.81962291778608e-1,
        -1.0845171382330178e-1,
        1.2992964695985375e-1,
        1.0178029683881418e-1,
        -9.660754061668439e-2,
        -8.2330211906557409e-2,
        7.5047619948360179e-2,
        5.9567410871529952e-2,
        -5.9256815632658971e-2,
        -3.8253829479384249e-2,
        4.5807944151268332e-2,
        2.0972800592597549e-2,
        -3.352358406410097e-2,
        -8.8334938904102324e-3,
        2.2618651544599474e-2,
        1.6904723834844237e-3,
        -1.3763981962894784e-2,
        1.5193057788333992e-3,
        7.3877574528555836e-3,
        -2.2480531870038247e-3,
        -3.3945232764083986e-3,
        1.8168713438014235e-3,
        1.2639342581174772e-3,
        -1.1114848653186302e-3,
        -3.2807884708801984e-4,
        5.4905327733736312e-4,
        1.5344390231955032e-5,
        -2.2089440324554939e-4,
        4.3367261259456952e-5,
        7.0551387820654651e-5,
        -3.0986629276199301e-5,
        -1.6391624961605831e-5,
        1.3543277184167818e-5,
        1.8499450031155904e-6,
        -4.3099415565970924e-6,
        4.8547313969964117e-7,
        1.0021213992971776e-6,
        -3.4949486034457276e-7,
        -1.5098853886715836e-7,
        1.1090312322164394e-7,
        5.3506575154614343e-9,
        -2.2521938367248058e-8,
        4.2244857063624193e-9,
        2.7939744659539827e-9,
        -1.2972050014694351e-9,
        -1.031411129096975e-10,
        1.946164894082315e-10,
        -3.2033982441232414e-11,
        -1.3984157155376415e-11,
        6.3349554409739132e-12,
        -2.0963631942348005e-13,
        -4.4216124098721054e-13,
        1.1380528309214397e-13,
        -4.5188896074637264e-16,
        -5.2430256918842058e-15,
        1.1890123875082529e-15,
        -1.1992803358528796e-16,
        4.9066150649352037e-18,
    ),
    38: (
        1.4257766416741317e-6,
        3.576251994264023e-5,
        4.2117026647271164e-4,
        3.0830881192537518e-3,
        1.5637249347572156e-2,
        5.7889943612859256e-2,
        1.600719935641107e-1,
        3.3077578141101465e-1,
        4.965911753117181e-1,
        4.933560785171008e-1,
        2.1305057135557851e-1,
        -1.8286766770833589e-1,
        -3.2167563780899786e-1,
        -6.2266506047824322e-2,
        2.3212596383535311e-1,
        1.4998511961871702e-1,
        -1.4179568597305962e-1,
        -1.5991256515824436e-1,
        8.5638121556151057e-2,
        1.4141473407338268e-1,
        -5.6586458630727381e-2,
        -1.1473117071074438e-1,
        4.3095895433047643e-2,
        8.720439826203975e-2,
        -3.6605103402874296e-2,
        -6.176620870841316e-2,
        3.1989877531537806e-2,
        4.0054981105115948e-2,
        -2.6891493880894514e-2,
        -2.3114134020549317e-2,
        2.0904645255655243e-2,
        1.1290497278685965e-2,
        -1.4701882065398682e-2,
        -4.1313066560310893e-3,
        9.2147850321971805e-3,
        5.625715748403532e-4,
        -5.0713145092183481e-3,
        7.1698218210640193e-4,
        2.4006977818909732e-3,
        -8.448626665537775e-4,
        -9.424614077227378e-4,
        5.8107597505328637e-4,
        2.8176392503806707e-4,
        -3.031020460726612e-4,
        -4.5556826966684203e-5,
        1.2620433501661707e-4,
        -1.1554091038337172e-5,
        -4.1751416485403978e-5,
        1.3341761499213504e-5,
        1.0373591840455998e-5,
        -6.4567304284696192e-6,
        -1.5508443501186026e-6,
        2.1499602699396652e-6,
        -8.4870875860725931e-8,
        -5.1877337388741444e-7,
        1.3963775455083555e-7,
        8.4003510468959655e-8,
        -4.8847579374592868e-8,
        -5.4242748002872985e-9,
        1.0347045392748585e-8,
        -1.4363294877951357e-9,
        -1.3491977539834488e-9,
        5.2611325573575985e-10,
        6.7323364901893087e-11,
        -8.2782565225381347e-11,
        1.1016929345994546e-11,
        6.2915373170395086e-12,
        -2.4847892375636429e-12,
        2.6264965040652521e-14,
        1.8086612362745306e-13,
        -4.249817819571463e-14,
        -4.5633971621273731e-16,
        2.0450996767889889e-15,
        -4.4053070424834613e-16,
        4.30459683955879e-17,
        -1.7161524510887442e-18,
    ),
    39: (
        1.0053982545871995e-6,
        2.5862315334396727e-5,
        3.1284977783158717e-4,
        2.3569446153715988e-3,
        1.2333597271308318e-2,
        4.7265384340158513e-2,
        1.3593319719908938e-1,
        2.9433540588349492e-1,
        4.6936086157404399e-1,
        5.1194128029030626e-1,
        2.875069470066634e-1,
        -1.0873964994476207e-1,
        -3.2763331044463399e-1,
        -1.4091096782386932e-1,
        1.9061811531836886e-1,
        2.0458354208152494e-1,
        -8.3567610894713345e-2,
        -1.9338592911224832e-1,
        2.7032735675975697e-2,
        1.6267294821979413e-1,
        -4.4151823449293702e-3,
        -1.3074648302845432e-1,
        -4.0055566050676113e-5,
        1.0180184509399964e-1,
        -3.3539537687260099e-3,
        -7.6185550696469823e-2,
        8.4593307320036265e-3,
        5.389833770004545e-2,
        -1.2039397129973579e-2,
        -3.5319143270047476e-2,
        1.2959917454305507e-2,
        2.0925091393126516e-2,
        -1.1520057072863414e-2,
        -1.0841518094790433e-2,
        8.7468075112976063e-3,
        4.6246575888368979e-3,
        -5.7432226180114113e-3,
        -1.3710663610536576e-3,
        3.2628478038717784e-3,
        2.4755913596207106e-5,
        -1.5888030751769172e-3,
        3.2321201996041278e-4,
        6.47807744646878e-4,
        -2.8052222324444042e-4,
        -2.0953989562388843e-4,
        1.5896862988828535e-4,
        4.5563290872238143e-5,
        -6.9100360462703106e-5,
        -6.2603480377854469e-7,
        2.3651301595001388e-5,
        -5.1720762698337357e-6,
        -6.176786347384426e-6,
        2.9486716940789021e-6,
        1.0715141455278685e-6,
        -1.0403556341954696e-6,
        -3.4847957838975586e-8,
        2.606422554711245e-7,
        -5.2057186447986239e-8,
        -4.4641657225559966e-8,
        2.0957787171891827e-8,
        3.7773817060538422e-9,
        -4.6601044388631636e-9,
        4.3289503697590715e-10,
        6.3539049748816788e-10,
        -2.0915249690216729e-10,
        -3.8112390404683197e-11,
        3.4758411428789485e-11,
        -3.590357840627939e-12,
        -2.777498556446502e-12,
        9.6537547025573485e-13,
        1.2024032105774861e-14,
        -7.3369377882585251e-14,
        1.5773611330285131e-14,
        4.1050897870849665e-16,
        -7.9444206349540802e-16,
        1.6299831703293736e-16,
        -1.5444938700235549e-17,
        6.0042243745943906e-19,
    ),
    40: (
        7.0901058659278723e-7,
        1.8692336180810839e-5,
        2.320951314106758e-4,
        1.7981007546980892e-3,
        9.6984778191784686e-3,
        3.8428136771422605e-2,
        1.1476551476914822e-1,
        2.5977786292593698e-1,
        4.381608746916242e-1,
        5.1903208167031517e-1,
        3.5209587430051816e-1,
        -2.8170555146057111e-2,
        -3.1275809235868547e-1,
        -2.1027586267320005e-1,
        1.311980049595851e-1,
        2.4017738760081102e-1,
        -1.395074943205732e-2,
        -2.045253695122213e-1,
        -3.8147287462726453e-2,
        1.6185596569804879e-1,
        5.2166029600482612e-2,
        -1.267323142934772e-1,
        -4.7410984537435617e-2,
        9.9420123535421257e-2,
        3.4928362140642477e-2,
        -7.7296175881412569e-2,
        -2.0943753388564528e-2,
        5.8341015707548308e-2,
        8.9500829140135837e-3,
        -4.1794876905630197e-2,
        -5.9477594777777221e-4,
        2.7810379360334393e-2,
        -3.8880721020162247e-3,
        -1.6821735735421062e-2,
        5.2450565216581005e-3,
        9.0185696622430882e-3,
        -4.6735731768795356e-3,
        -4.1244903960878894e-3,
        3.3213080699422316e-3,
        1.4839299562157729e-3,
        -1.974759731953972e-3,
        -3.1187373443757407e-4,
        9.9291688804407332e-4,
        -7.0848746549404655e-5,
        -4.1816247184188433e-4,
        1.2111298980957377e-4,
        1.4252761156270762e-4,
        -7.8784824127881618e-5,
        -3.566471897946645e-5,
        3.629511755337447e-5,
        4.0660179666249183e-6,
        -1.2888320241357537e-5,
        1.6550257250159118e-6,
        3.5078332868396775e-6,
        -1.2804314477881047e-6,
        -6.6863488870302583e-7,
        4.8834652506691549e-7,
        5.3612316791672759e-8,
        -1.274508929984344e-7,
        1.7410694403047795e-8,
        2.2884041448442448e-8,
        -8.7397284731041808e-9,
        -2.2733339236653049e-9,
        2.0593886969298042e-9,
        -9.9627150703086068e-11,
        -2.9288371153505964e-10,
        8.1339276862511501e-11,
        1.9952985788930958e-11,
        -1.4414678660874875e-11,
        1.0752965662607837e-12,
        1.206682463299092e-12,
        -3.7146779207817696e-13,
        -1.3522696000451319e-14,
        2.9538296603649141e-14,
        -5.8181048707950095e-15,
        -2.4502202834775991e-16,
        3.0745679262737877e-16,
        -6.0233779324166934e-17,
        5.5397391390658758e-18,
        -2.1012535076232193e-19,
    ),
    41: (
        5.0002759774485386e-7,
        1.3502944648411551e-5,
        1.7197909140297072e-4,
        1.369072691659423e-3,
        7.6045500907647605e-3,
        3.1119219654897048e-2,
        9.6368770874049769e-2,
        2.2755245545300253e-1,
        4.0449021418706228e-1,
        5.1599706813534062e-1,
        4.0546814611740719e-1,
        5.4656364640641835e-2,
        -2.7887487105407594e-1,
        -2.6558287996284221e-1,
        5.9382150412958439e-2,
        2.5356180264311143e-1,
        5.9379484570376575e-2,
        -1.9189573027204843e-1,
        -1.014142399856236e-1,
        1.3852974948248704e-1,
        1.0466648678871951e-1,
        -1.0235210258875e-1,
        -9.1057476707661388e-2,
        7.9158612693497132e-2,
        7.1274194860022858e-2,
        -6.3357431953391691e-2,
        -5.0647776954224959e-2,
        5.09193151827017e-2,
        3.214958169967704e-2,
        -3.9754359312925728e-2,
        -1.7465568800812482e-2,
        2.9325481855928814e-2,
        7.2508894107828866e-3,
        -1.9998470414897856e-2,
        -1.242156925093999e-3,
        1.2375071434713136e-2,
        -1.4861353272282453e-3,
        -6.813973006884494e-3,
        2.1268013961144786e-3,
        3.2502637388137739e-3,
        -1.758959322165757e-3,
        -1.2791929868689089e-3,
        1.1228387241284744e-3,
        3.6559249351382128e-4,
        -5.8847791637377233e-4,
        -3.3186597208245964e-5,
        2.5603805231831678e-4,
        -4.2863914479396246e-5,
        -9.0860537021982971e-5,
        3.6462869659219826e-5,
        2.472477558032453e-5,
        -1.8269294112506377e-5,
        -4.1040349140470634e-6,
        6.7754127330170856e-6,
        -2.9207145425875239e-7,
        -1.9153401202504485e-6,
        5.2123236239464368e-7,
        3.9043134715900306e-7,
        -2.2210771544829255e-7,
        -4.3006010302588679e-8,
        6.076574620870964e-8,
        -4.6794865016765587e-9,
        -1.1385401577079566e-8,
        3.5288819943186236e-9,
        1.2611500218476203e-9,
        -8.9341451085394607e-10,
        3.5402670495544697e-12,
        1.3248353974797942e-10,
        -3.0848048004828399e-11,
        -9.928763443037371e-12,
        5.9067826524688229e-12,
        -2.742003948379003e-13,
        -5.1701735051018942e-13,
        1.4153289627744139e-13,
        8.7411118126709157e-15,
        -1.1809795898645721e-14,
        2.1321764863395925e-15,
        1.2636797992675895e-16,
        -1.1858160542220843e-16,
        2.2231939146028621e-17,
        -1.9863182009847382e-18,
        7.3555357313274434e-20,
    ),
    42: (
        3.5266363642863421e-7,
        9.7492925803067432e-6,
        1.2728877579999881e-4,
        1.0404708435745918e-3,
        5.9465567208786603e-3,
        2.5106092917214892e-2,
        8.0509565246265232e-2,
        1.9793265041527378e-1,
        3.6963579653506094e-1,
        5.0437268114308667e-1,
        4.4700276383622973e-1,
        1.3598172269323846e-1,
        -2.2880026041301703e-1,
        -3.0349259436960978e-1,
        -1.8643218932615233e-2,
        2.438666004912077e-1,
        1.2869592778900452e-1,
        -1.5695279704515224e-1,
        -1.5472366525492979e-1,
        9.5451082524369571e-2,
        1.4520542157475396e-1,
        -6.0584344333509793e-2,
        -1.2344129796668448e-1,
        4.3373771871608579e-2,
        9.8681586576231676e-2,
        -3.5596183411662525e-2,
        -7.4489078396345995e-2,
        3.159945137831968e-2,
        5.2569767544851664e-2,
        -2.8121027474309311e-2,
        -3.4062270736045851e-2,
        2.3800767472828594e-2,
        1.9706306150869682e-2,
        -1.8610781711524287e-2,
        -9.6883255798056937e-3,
        1.3225574648633869e-2,
        3.5762074992067557e-3,
        -8.4393294748987643e-3,
        -4.7286461777667949e-4,
        4.7742891054831814e-3,
        -6.8311176877626071e-4,
        -2.3514993932226243e-3,
        8.2533174198810497e-4,
        9.7662597276010835e-4,
        -5.9550534770087156e-4,
        -3.1831443829880803e-4,
        3.310215446029942e-4,
        6.3074572556236138e-5,
        -1.4951968725641454e-4,
        8.2518358507091599e-6,
        5.4990078159124429e-5,
        -1.536562519478066e-5,
        -1.5857458434694002e-5,
        8.7806147205489353e-6,
        3.1360838951027346e-6,
        -3.4406499184515499e-6,
        -1.4412040997216648e-7,
        1.0105506595709422e-6,
        -1.9311635480382209e-7,
        -2.1711934204894756e-7,
        9.7616365092849692e-8,
        2.8407159280155895e-8,
        -2.8277503485473924e-8,
        5.2638525683952497e-10,
        5.5203019414460876e-9,
        -1.3706728466837232e-9,
        -6.6292676217037026e-10,
        3.8051319562175236e-10,
        1.5856658818581586e-11,
        -5.8919602166611751e-11,
        1.1352142591146074e-11,
        4.7637605063088119e-12,
        -2.3921940266905408e-12,
        4.3593394823156913e-14,
        2.1882405343225047e-13,
        -5.3373101692863775e-14,
        -4.7565544084601172e-15,
        4.6915125495217362e-15,
        -7.7609725913485421e-16,
        -6.0384734991468107e-17,
        4.559124670822791e-17,
        -8.1963888528024399e-18,
        7.1198558464314309e-19,
        -2.5754835368487614e-20,
    ),
    43: (
        2.4874348273926152e-7,
        7.0357055535380241e-6,
        9.4109397346750555e-5,
        7.8934003652294951e-4,
        4.6381041886664867e-3,
        2.0183207831342895e-2,
        6.693883304148944e-2,
        1.7104870002088876e-1,
        3.3466416305556776e-1,
        4.8575287094806658e-1,
        4.7670214631027339e-1,
        2.1262646377359013e-1,
        -1.6600109671466153e-1,
        -3.2217419705985077e-1,
        -9.6637754788978867e-2,
        2.1241236248545657e-1,
        1.8706426757399213e-1,
        -1.0366240029559034e-1,
        -1.9149790246228703e-1,
        3.8030204901232323e-2,
        1.6768991457709533e-1,
        -7.1705446884031044e-3,
        -1.3875087085580252e-1,
        -2.7288300808881128e-3,
        1.1148016380996865e-1,
        1.9284264776753966e-3,
        -8.7018099582587709e-2,
        2.9680223336194677e-3,
        6.5259033180076804e-2,
        -7.9980244842621512e-3,
        -4.6272474955988843e-2,
        1.1135351068937405e-2,
        3.0448147996889062e-2,
        -1.1815744070995162e-2,
        -1.8183397528369426e-2,
        1.0470342742128072e-2,
        9.550264340587441e-3,
        -8.0102757130266943e-3,
        -4.162593625247005e-3,
        5.3555524694342939e-3,
        1.278501417484225e-3,
        -3.1324486556898114e-3,
        -3.7341366480688893e-5,
        1.5901233250020461e-3,
        -3.1228382125315113e-4,
        -6.8672295154631479e-4,
        2.8952084791068455e-4,
        2.4120420864060753e-4,
        -1.7622762356903123e-4,
        -6.066664425203317e-5,
        8.3487332042977402e-5,
        4.6162210301423666e-6,
        -3.1829063998166008e-5,
        5.5394709551629315e-6,
        9.6042900138822182e-6,
        -3.9990145931166105e-6,
        -2.1077973620548158e-6,
        1.6875920388192284e-6,
        2.2153120698973991e-7,
        -5.168260877067447e-7,
        6.0441371683678847e-8,
        1.1614301776267373e-7,
        -4.1252187252515695e-8,
        -1.6978052853343636e-8,
        1.2848087730391133e-8,
        5.2378834971893408e-10,
        -2.615740430781051e-9,
        5.0630828014744189e-10,
        3.3497685162662632e-10,
        -1.5904790352354233e-10,
        -1.4317854796272414e-11,
        2.5798403363733814e-11,
        -4.0205108892991486e-12,
        -2.2225400815040717e-12,
        9.5755171521847179e-13,
        1.01054766973292e-14,
        -9.1602769376455992e-14,
        1.9908591154563493e-14,
        2.3738178515343388e-15,
        -1.8526233129064935e-15,
        2.8045956408455617e-16,
        2.7521548269533378e-17,
        -1.7477582434474284e-17,
        3.01857030749576e-18,
        -2.551305755521653e-19,
        9.0200005434003569e-21,
    ),
    44: (
        1.7545510471550345e-7,
        5.0750657115668091e-6,
        6.9506630275615278e-5,
        5.9781410561845079e-4,
        3.608730918181853e-3,
        1.6171269075570349e-2,
        5.5405048771632181e-2,
        1.4691824890071603e-1,
        3.0042669884824979e-1,
        4.6170175939414724e-1,
        4.9507209494240777e-1,
        2.8207746677005701e-1,
        -9.4267575519166823e-2,
        -3.2123930305796917e-1,
        -1.6883467334992116e-1,
        1.623657255290439e-1,
        2.2899817665434144e-1,
        -3.7857030858145944e-2,
        -2.0736145958764035e-1,
        -2.6539355807637585e-2,
        1.6864131738507744e-1,
        5.0357095056067926e-2,
        -1.3385460063346609e-1,
        -5.2016916381540282e-2,
        1.0642196654830677e-1,
        4.3044543735577498e-2,
        -8.4677459752608249e-2,
        -3.0169440802782037e-2,
        6.6455789772412445e-2,
        1.7377093898283152e-2,
        -5.044783345441363e-2,
        -6.9483973204293031e-3,
        3.6315783126133977e-2,
        -1.1344723925487925e-4,
        -2.4328318749563439e-2,
        3.8246663429586556e-3,
        1.4878944897998074e-2,
        -4.900915834641262e-3,
        -8.1174278229750566e-3,
        4.3594769380349029e-3,
        3.8116485730927665e-3,
        -3.1507098742721363e-3,
        -1.428404409971862e-3,
        1.9310274415356317e-3,
        3.2696961804076311e-4,
        -1.0141400286453096e-3,
        5.8709294095913221e-5,
        4.5305386493025019e-4,
        -1.238202109067316e-4,
        -1.6743420565921356e-4,
        8.8106070542283121e-5,
        4.7476213746207253e-5,
        -4.4576799421759272e-5,
        -7.6646920486588556e-6,
        1.7694148652042281e-5,
        -1.3623382756996858e-6,
        -5.5553418460367169e-6,
        1.7000970008876836e-6,
        1.3092482327400762e-6,
        -7.9817089866975009e-7,
        -1.8425536319961957e-7,
        2.5669276650245087e-7,
        -1.1805216340502174e-8,
        -6.0133319538915707e-8,
        1.6614044189532125e-8,
        9.5191820501649781e-9,
        -5.6976547580564052e-9,
        -5.8991652125534503e-10,
        1.2136331875924794e-9,
        -1.7400763359471068e-10,
        -1.6410021408167191e-10,
        6.5184113543028924e-11,
        9.318649271640549e-12,
        -1.1132791534262429e-11,
        1.3506419079132114e-12,
        1.013809567578803e-12,
        -3.7878083693396337e-13,
        -1.5348263587772517e-14,
        3.7964304382961553e-14,
        -7.3386381318268867e-15,
        -1.1236719715227538e-15,
        7.2748672712769592e-16,
        -1.0056149225924414e-16,
        -1.2143464111423246e-17,
        6.6820471411182591e-18,
        -1.1105475713770068e-18,
        9.1396257188084821e-20,
        -3.1597501957447131e-21,
    ),
    45: (
        1.2376635093609079e-7,
        3.6591822333434305e-6,
        5.1284989877374205e-5,
        4.520332496840582e-4,
        2.8012996796839582e-3,
        1.2915658283556157e-2,
        4.566373826339235e-2,
        1.2547384643972575e-1,
        2.6757430429386357e-1,
        4.3368877944516139e-1,
        5.0299844544984105e-1,
        3.4251229620858841e-1,
        -1.7424146911884335e-2,
        -3.0157262399756195e-1,
        -2.303462267017023e-1,
        9.8263482946069253e-2,
        2.5087987866457245e-1,
        3.3554368775977748e-2,
        -2.0052697100290362e-1,
        -9.0322002437311087e-2,
        1.4757873418624106e-1,
        1.0387320572035303e-1,
        -1.0876195545122577e-1,
        -9.6668047037591917e-2,
        8.3296617234008966e-2,
        8.060610272978026e-2,
        -6.6598085050470262e-2,
        -6.1691624651949669e-2,
        5.4518108196332926e-2,
        4.32000781585234e-2,
        -4.4354323236116521e-2,
        -2.7111259855034153e-2,
        3.485211292219505e-2,
        1.4558618420427262e-2,
        -2.5847171741695757e-2,
        -5.9085529865152794e-3,
        1.7765343224322096e-2,
        8.3446510242532375e-4,
        -1.1135632551175138e-2,
        1.4769644499611913e-3,
        6.254829495581251e-3,
        -2.0220463398820108e-3,
        -3.0720049767611579e-3,
        1.6944314173800315e-3,
        1.2617888794972578e-3,
        -1.1163496304581992e-3,
        -3.869987991912115e-4,
        6.1245607796494046e-4,
        4.7512135811353828e-5,
        -2.8319349932012027e-4,
        4.1177374033122172e-5,
        1.0895701722950969e-4,
        -4.0675623989617481e-5,
        -3.3281089784356912e-5,
        2.2701714552731044e-5,
        6.916840100357123e-6,
        -9.4670466589345846e-6,
        -1.6869681087576604e-7,
        3.0893222394439627e-6,
        -6.5341044268031884e-7,
        -7.6876092105834741e-7,
        3.6265426851960268e-7,
        1.2662954889413018e-7,
        -1.2391570081061282e-7,
        -3.0929519660213726e-9,
        3.0255762469553111e-8,
        -6.271656815684516e-9,
        -5.0967484542734968e-9,
        2.4632300719267001e-9,
        4.2536795542760133e-10,
        -5.5209234060840261e-10,
        5.2974951852569993e-11,
        7.8363705104326374e-11,
        -2.6153657535705833e-11,
        -5.3100802917156741e-12,
        4.7381531129035521e-12,
        -4.1819148326808881e-13,
        -4.5381727561931631e-13,
        1.4802030963698538e-13,
        1.0715886310650072e-14,
        -1.558970107794025e-14,
        2.66986144556433e-15,
        5.1303465470477588e-16,
        -2.8415905545607427e-16,
        3.5749055605249122e-17,
        5.232482920975164e-18,
        -2.5482858833145901e-18,
        4.0818026312330221e-19,
        -3.2732125835229197e-20,
        1.1071150641507402e-21,
    ),
}

SYM = {
    2: (
        4.8296291314453414e-1,
        8.3651630373780791e-1,
        2.2414386804201338e-1,
        -1.2940952255126038e-1,
    ),
    3: (
        3.3267055295008262e-1,
        8.0689150931109258e-1,
        4.5987750211849157e-1,
        -1.3501102001025459e-1,
        -8.5441273882026662e-2,
        3.5226291885709537e-2,
    ),
    4: (
        3.2223100604051468e-2,
        -1.2603967262031304e-2,
        -9.9219543576633533e-2,
        2.9785779560530605e-1,
        8.0373875180513208e-1,
        4.9761866763277499e-1,
        -2.9635527646002492e-2,
        -7.5765714789502213e-2,
    ),
    5: (
        1.9538882735249827e-2,
        -2.1101834024689041e-2,
        -1.7532808990805622e-1,
        1.6602105764510848e-2,
        6.3397896345679206e-1,
        7.2340769040404079e-1,
        1.993975339768556e-1,
        -3.9134249302313844e-2,
        2.9519490925706261e-2,
        2.7333068344998769e-2,
    ),
    6: (
        -7.8007083250323804e-3,
        1.7677118642540077e-3,
        4.4724901770781385e-2,
        -2.1060292512370848e-2,
        -7.2637522786376583e-2,
        3.3792942172816583e-1,
        7.87641141028651e-1,
        4.9105594192797373e-1,
        -4.8311742585698055e-2,
        -1.1799011114852003e-1,
        3.4907120842221625e-3,
        1.5404109327044824e-2,
    ),
    7: (
        1.0268176708464816e-2,
        4.0102448715223952e-3,
        -1.0780823770328971e-1,
        -1.4004724044293365e-1,
        2.8862963175064787e-1,
        7.6776431700488293e-1,
        5.3610191709056923e-1,
        1.7441255086835707e-2,
        -4.9552834937042832e-2,
        6.7892693501220565e-2,
        3.0515513165877886e-2,
        -1.2636303403240567e-2,
        -1.0473848886797381e-3,
        2.681814568260147e-3,
    ),
    8: (
        1.8899503327676892e-3,
        -3.0292051472413308e-4,
        -1.4952258337062199e-2,
        3.8087520138944895e-3,
        4.9137179673730287e-2,
        -2.7219029917103486e-2,
        -5.1945838107881801e-2,
        3.6444189483617894e-1,
        7.7718575169962803e-1,
        4.8135965125905339e-1,
        -6.1273359067811078e-2,
        -1.4329423835127266e-1,
        7.6074873249766082e-3,
        3.1695087811525991e-2,
        -5.4213233180001069e-4,
        -3.3824159510050026e-3,
    ),
    9: (
        1.0694900329086119e-3,
        -4.7315449868004354e-4,
        -1.026406402763312e-2,
        8.8592674934002667e-3,
        6.2077789302885748e-2,
        -1.8233770779395506e-2,
        -1.9155083129728433e-1,
        3.5272488035271043e-2,
        6.1733844914093415e-1,
        7.178970827644124e-1,
        2.3876091460730517e-1,
        -5.4568958430833351e-2,
        5.8346274612498183e-4,
        3.0224878858275188e-2,
        -1.1528210207679186e-2,
        -1.3271967781817134e-2,
        6.1978088898550708e-4,
        1.4009155259146562e-3,
    ),
    10: (
        -4.5932942100465204e-4,
        5.7036083618495007e-5,
        4.5931735853117919e-3,
        -8.043589320164513e-4,
        -2.0354939812311111e-2,
        5.7649120335811497e-3,
        4.9994972077375156e-2,
        -3.1990056882428114e-2,
        -3.5536740473819586e-2,
        3.8382676106707633e-1,
        7.6951003702109794e-1,
        4.7169066693844291e-1,
        -7.0880535783231572e-2,
        -1.5949427888491061e-1,
        1.1609893903711318e-2,
        4.5927239231091509e-2,
        -1.4653825813046105e-3,
        -8.6412992770221503e-3,
        9.5632670722852731e-5,
        7.7015980911445982e-4,
    ),
    11: (
        4.8926361026190297e-4,
        1.1053509764269031e-4,
        -6.3896036664546651e-3,
        -2.0034719001089793e-3,
        4.3000190681551327e-2,
        3.526675956446462e-2,
        -1.446023437053119e-1,
        -2.0465479449578829e-1,
        2.3768990904925752e-1,
        7.3034354908838958e-1,
        5.7202297801007579e-1,
        9.7198394458905522e-2,
        -2.2832651022562262e-2,
        6.9976799610732932e-2,
        3.7037415978858185e-2,
        -2.4080841595863579e-2,
        -9.8579348287892134e-3,
        6.5124956747715201e-3,
        5.8835273539698249e-4,
        -1.7343662672978378e-3,
        -3.8795655736148036e-5,
        1.717219506993481e-4,
    ),
    12: (
        -1.7906658697508447e-4,
        -1.8158078862632959e-5,
        2.3502976141833475e-3,
        3.0764779631052453e-4,
        -1.4589836449233534e-2,
        -2.6043910313314189e-3,
        5.7804179445504747e-2,
        1.5301740622480153e-2,
        -1.7037069723884962e-1,
        -7.8332622316315435e-2,
        4.6274103121928642e-1,
        7.6347909778364054e-1,
        3.9888597239019201e-1,
        -2.2162306170351301e-2,
        -3.5848830736954636e-2,
        4.9179318299661196e-2,
        7.5537806116793156e-3,
        -2.4220722675013403e-2,
        -1.408909244329129e-3,
        7.4149655176543154e-3,
        1.8021409008521752e-4,
        -1.349755755571579e-3,
        -1.1353928041526612e-5,
        1.1196719424656528e-4,
    ),
    13: (
        7.0429866906962728e-5,
        3.6905373423238941e-5,
        -7.2136438513637555e-4,
        4.1326119884167821e-4,
        5.6748537601233381e-3,
        -1.4924472742587285e-3,
        -2.0749686325520654e-2,
        1.7618296880645044e-2,
        9.292603089914397e-2,
        8.8197576704298521e-3,
        -1.4049009311367553e-1,
        1.1023022302128687e-1,
        6.4456438390115713e-1,
        6.9573915056156907e-1,
        1.9770481877126597e-1,
        -1.2436246075150339e-1,
        -5.9750627717956464e-2,
        1.3862497435838411e-2,
        -1.7211642726304386e-2,
        -2.0216768133395466e-2,
        5.2963597387218622e-3,
        7.5262253899681702e-3,
        -1.7094285852957213e-4,
        -1.136063438927969e-3,
        -3.573862364871594e-5,
        6.8203252630743549e-5,
    ),
    14: (
        4.4618977991484562e-5,
        1.9329016965548986e-5,
        -6.0576018246644027e-4,
        -7.3214213566891339e-5,
        4.5326774719463366e-3,
        1.0131419871843176e-3,
        -1.9439314263628176e-2,
        -2.365048836736659e-3,
        6.9827616361821188e-2,
        2.5898587531053822e-2,
        -1.5999741114651991e-1,
        -5.811182331765858e-2,
        4.7533576263434447e-1,
        7.5997624196118915e-1,
        3.9320152196203943e-1,
        -3.5318112115107519e-2,
        -5.763449835141097e-2,
        3.7433088362823582e-2,
        4.2805204990007522e-3,
        -2.9196217764050975e-2,
        -2.753774791224789e-3,
        1.0037693717674818e-2,
        3.6647657365998119e-4,
        -2.5794417259337628e-3,
        -6.2865424814745763e-5,
        3.9843567297607207e-4,
        1.1210865808903234e-5,
        -2.5879090265402585e-5,
    ),
    15: (
        2.866070852533231e-5,
        2.1717890150808833e-5,
        -4.0216853760307322e-4,
        -1.0815440168565741e-4,
        3.4810287370659997e-3,
        1.526138278183266e-3,
        -1.717125278164452e-2,
        -8.7447888864859159e-3,
        6.796982904489572e-2,
        6.8393310060510168e-2,
        -1.3405629845628276e-1,
        -1.9662635876631658e-1,
        2.4396270543218166e-1,
        7.2184302963633358e-1,
        5.7864041521515018e-1,
        1.1153369514258364e-1,
        -4.1082666635469261e-2,
        4.0735479696770492e-2,
        2.1937642719737217e-2,
        -3.8876716876854969e-2,
        -1.9405011430946085e-2,
        1.0079977087906634e-2,
        3.4234507363524206e-3,
        -3.5901654473736222e-3,
        -2.6731644647202593e-4,
        1.0705672194627174e-3,
        5.5122547855653365e-5,
        -1.6066186637499559e-4,
        -7.3596667989286793e-6,
        9.712419737964492e-6,
    ),
    16: (
        -1.0797982104330865e-5,
        -5.3964831793134874e-6,
        1.6545679579123957e-4,
        3.6565924833303029e-5,
        -1.3387206066936439e-3,
        -2.2211647621031348e-4,
        6.9377611308113713e-3,
        1.3598447424801485e-3,
        -2.4952758046315126e-2,
        -3.5102750683370913e-3,
        7.8037852903548304e-2,
        3.0721139063299641e-2,
        -1.595921921853958e-1,
        -5.4040601387440806e-2,
        4.7534280601234711e-1,
        7.5652498787638461e-1,
        3.9712293362039822e-1,
        -3.4574228417699194e-2,
        -6.6983049070619104e-2,
        3.2333091610582347e-2,
        4.8692744048145422e-3,
        -3.105120284364275e-2,
        -3.1265171722736302e-3,
        1.2666731659876958e-2,
        7.1821197882543154e-4,
        -3.8809122526122203e-3,
        -1.0844562230766216e-4,
        8.5235471080655208e-4,
        2.8078582128206923e-5,
        -1.0943147929558312e-4,
        -3.1135564076138704e-6,
        6.2300067012376468e-6,
    ),
    17: (
        3.7912531943316249e-6,
        -2.4527163425740826e-6,
        -7.6071244056029182e-5,
        2.5207933140671322e-5,
        7.198270642145453e-4,
        5.8400428695180918e-5,
        -3.9323252797949414e-3,
        -1.9054076898564055e-3,
        1.2396988366634303e-2,
        9.9529825235076136e-3,
        -1.8038897241901388e-2,
        -7.2616347509339156e-3,
        1.6158808725918568e-2,
        -8.6070874720632641e-2,
        -1.5507600534970689e-1,
        1.8053958458074406e-1,
        6.8148899534431699e-1,
        6.5071662920438239e-1,
        1.4239835041511389e-1,
        -1.1856693261099855e-1,
        1.7271178210600193e-2,
        1.0475461484219489e-1,
        1.7903952214389489e-2,
        -3.3291383492306217e-2,
        -4.8192128031813538e-3,
        1.0482366933016148e-2,
        8.5677007019280217e-4,
        -2.7416759756781813e-3,
        -1.3864230268101328e-4,
        4.7599638026318306e-4,
        -1.3506383399799108e-5,
        -6.2937025975459086e-5,
        2.7801266938259432e-6,
        4.2973433273382561e-6,
    ),
    18: (
        -1.5131530692320485e-6,
        7.8472980558485727e-7,
        2.955743762087669e-5,
        -9.8588160300381688e-6,
        -2.6583011024198103e-4,
        4.741614518228368e-5,
        1.4280863270799422e-3,
        -1.8877623940057062e-4,
        -5.2397896830139739e-3,
        1.0877847895682567e-3,
        1.501235634421641e-2,
        -3.2607441999778556e-3,
        -3.171268473169947e-2,
        6.2779445541322597e-3,
        2.8529597038742298e-2,
        -7.3799207290885934e-2,
        -3.2480573291504846e-2,
        4.0148386056768734e-1,
        7.536291400999388e-1,
        4.7396905989574696e-1,
        -5.2029158980420069e-2,
        -1.5993814866769704e-1,
        3.3995667103542071e-2,
        8.421992997007587e-2,
        -5.0770851604169897e-3,
        -3.0325091089143648e-2,
        1.6429863972087338e-3,
        9.5021643909096052e-3,
        -4.1152110920582622e-4,
        -2.3138718144868687e-3,
        7.0212734585996361e-5,
        3.9616840637938814e-4,
        -1.4020992577002793e-5,
        -4.5246757874515306e-5,
        1.3549157617851245e-6,
        2.6126125564557023e-6,
    ),
    19: (
        1.7509367995304996e-6,
        2.0623170632293237e-6,
        -2.8151138661488745e-5,
        -1.6821387029242595e-5,
        2.7621877685681965e-4,
        1.2930767650608302e-4,
        -1.7049602611613153e-3,
        -6.1792232778999353e-4,
        8.2622369555226428e-3,
        4.3193518748874169e-3,
        -2.7709896931223671e-2,
        -1.6908234861133549e-2,
        8.4072676279385028e-2,
        9.3630843415921787e-2,
        -1.1624173010700133e-1,
        -1.7659686625099993e-1,
        2.5826616923810383e-1,
        7.1955552571598459e-1,
        5.7814494533729672e-1,
        1.0902582508022089e-1,
        -6.7525058040684e-2,
        8.9545911729771244e-3,
        7.0155738572191808e-3,
        -4.6635983534777709e-2,
        -2.2651993378066387e-2,
        1.5797439295764449e-2,
        7.9684383206377835e-3,
        -5.1222050025694281e-3,
        -1.1607032571970345e-3,
        2.1214250281832053e-3,
        1.5915804767957374e-4,
        -6.3576451500423328e-4,
        -4.6120396001717631e-5,
        1.1553923333583908e-4,
        8.8733121736932822e-6,
        -1.1880518269831196e-5,
        -6.4636513033334037e-7,
        5.4877327682185139e-7,
    ),
    20: (
        -6.3291290450428952e-7,
        -3.2567026426308277e-7,
        1.2287252778374232e-5,
        4.5254222100862272e-6,
        -1.1739133516628475e-4,
        -2.661555034277681e-5,
        7.4761085980126171e-4,
        1.2544091727041257e-4,
        -3.4716478029256889e-3,
        -6.111263859779794e-4,
        1.2157040948987497e-2,
        1.9385970676619734e-3,
        -3.5373336757463891e-2,
        -6.8437019669740549e-3,
        8.8919668028626005e-2,
        3.6250951655760877e-2,
        -1.6057829842072484e-1,
        -5.1088342936006394e-2,
        4.7199147509110537e-1,
        7.5116272842889789e-1,
        4.0583144436327478e-1,
        -2.9819368871243181e-2,
        -7.8994344926761404e-2,
        2.5579349509566319e-2,
        8.1232283563945484e-3,
        -3.1629437145484322e-2,
        -3.3138573844072329e-3,
        1.7004049023279797e-2,
        1.4230873596194143e-3,
        -6.6065857991207313e-3,
        -3.0526283188065687e-4,
        2.0889947081866743e-3,
        7.2159911900736658e-5,
        -4.947310915655073e-4,
        -1.9284123010161865e-5,
        7.9929678357121142e-5,
        3.0256660631185363e-6,
        -7.9193614118939515e-6,
        -1.9015675892278172e-7,
        3.695537474791267e-7,
    ),
}
