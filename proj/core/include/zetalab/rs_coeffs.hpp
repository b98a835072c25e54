#pragma once

// Chebyshev expansions (in u = 2p - 1, p in [0,1]) of the Riemann-Siegel
// correction functions C_0..C_8.  Generated offline by solving for the
// normalized main-sum remainder against high-precision reference values of
// Z(t) at fixed fractional part p and increasing sum lengths, then fitting
// Chebyshev series at 56 nodes.  Absolute accuracy of each table is ~1e-16
// or better over p in [0,1].

#include <array>
#include <cstddef>

namespace zetalab::detail {

inline constexpr std::array<double, 29> kRsCheb0 = {
    1.2853345724795369,
    3.790197204622884e-21,
    0.27197299999785507,
    -8.72192736426609e-22,
    0.010738605819340285,
    2.7531647669866004e-22,
    -0.0013743815296336614,
    -8.133689987015424e-23,
    -0.00012468221880320676,
    2.021596980440864e-23,
    -5.764599706783048e-07,
    -3.6737449664420995e-24,
    2.728067429580452e-07,
    2.9189122752436984e-25,
    8.07795305950047e-09,
    5.0980263968214824e-26,
    -2.0884608068869654e-10,
    -1.6158126840805243e-26,
    -1.3115561854739526e-11,
    9.389488021396443e-28,
    -1.4207987228087279e-14,
    1.606492883878084e-28,
    1.0271701357931162e-14,
    -1.4914383589955271e-29,
    1.3974598819518452e-16,
    -9.529696111190273e-31,
    -4.484118733952301e-18,
    7.576698618569525e-32,
    -1.1830599573845614e-19,
};

inline constexpr std::array<double, 30> kRsCheb1 = {
    1.9889029184843137e-19,
    0.010697913921003,
    7.648697292242863e-20,
    0.017170651243377886,
    5.712582251979636e-21,
    0.002793211149788471,
    -2.6795178195244262e-21,
    -3.6375653719275e-05,
    8.241343837869051e-23,
    -2.7108955231150898e-05,
    1.9478226390194602e-22,
    -1.0483749866752755e-06,
    -8.872220274213584e-23,
    5.886467166527557e-08,
    1.9068974690025183e-23,
    4.3229672685027535e-09,
    -1.5522031412657971e-24,
    -1.1369591588265503e-11,
    -1.8474441387854355e-25,
    -6.699833910355806e-12,
    4.4882228357487544e-26,
    -1.0079997652816625e-13,
    -4.703804508149562e-28,
    5.152488009229697e-15,
    -3.6221681356884913e-28,
    1.5216954471885268e-16,
    7.890765176951492e-30,
    -1.8619464834071992e-18,
    1.4831459313310927e-30,
    -1.130184618444192e-19,
};

inline constexpr std::array<double, 27> kRsCheb2 = {
    0.006292231707977786,
    4.1169800228068023e-16,
    -0.002308783884530765,
    -9.505438461051945e-17,
    5.769820766689695e-05,
    2.9944783323632034e-17,
    0.00035238862023665964,
    -8.842855436825375e-18,
    2.5246667458684387e-05,
    2.198584058352346e-18,
    -3.4428211971931693e-06,
    -3.998332470787158e-19,
    -3.535074556622287e-07,
    3.188391377744785e-20,
    3.730830183788751e-09,
    5.5124560307898276e-21,
    1.277695186412008e-09,
    -1.754380159767231e-21,
    2.187461620417905e-11,
    1.0239919858591731e-22,
    -1.9141410964700196e-12,
    1.7392015940067434e-23,
    -6.562883102151786e-14,
    -1.6208146763233589e-24,
    1.2586009183104092e-15,
    -1.030033848857869e-25,
    8.140076623673719e-17,
};

inline constexpr std::array<double, 30> kRsCheb3 = {
    4.025241480091447e-15,
    7.123256216347443e-05,
    1.5478613081847412e-15,
    0.00023234305299288068,
    2.0860103244736275e-16,
    -0.0001292991204582594,
    -8.799830271245492e-17,
    1.807449641471497e-05,
    8.99383407858133e-18,
    6.526185186960944e-06,
    2.9034988280224806e-18,
    -1.1696365373801085e-07,
    -1.7958243046452938e-18,
    -7.349476126895264e-08,
    4.29693570395781e-19,
    -1.7750910084394366e-09,
    -4.2112422727612476e-20,
    2.55555296339535e-10,
    -2.8099193863163736e-21,
    1.1376636588437652e-11,
    9.780191372670634e-22,
    -3.3498639190123084e-13,
    -2.811455669946128e-23,
    -2.5537379162979492e-14,
    -7.098613124976397e-24,
    6.76650198366195e-17,
    2.9348426572572362e-25,
    2.9768883750413146e-17,
    2.7404427948542653e-26,
    2.995220317574151e-19,
};

inline constexpr std::array<double, 31> kRsCheb4 = {
    0.00033531490468665396,
    3.482221282824655e-12,
    -0.00022728768952926274,
    -8.068857741331284e-13,
    6.477387186706742e-05,
    2.536082163703914e-13,
    -8.492200493060416e-06,
    -7.485120825223922e-14,
    -2.61614072543423e-06,
    1.861634841278335e-14,
    8.33676496745974e-07,
    -3.3879810376477e-15,
    6.32470404857727e-08,
    2.711151586241003e-16,
    -1.0059949431544145e-08,
    4.640993275741433e-17,
    -7.822677173013925e-10,
    -1.482841340209354e-17,
    3.167658298057963e-11,
    8.687523421970758e-19,
    3.5006944067072205e-12,
    1.4663885423998975e-19,
    -1.4314811873242096e-14,
    -1.3704493826982786e-20,
    -7.269402283170764e-15,
    -8.676801522813463e-22,
    -8.780559053215587e-17,
    6.944562063116372e-23,
    8.150252919075145e-18,
    3.516301920346725e-24,
    1.9208406479854833e-19,
};

inline constexpr std::array<double, 30> kRsCheb5 = {
    9.12171297102229e-12,
    8.828829494394015e-05,
    3.508577804912767e-12,
    -1.5628648428694484e-05,
    8.916514998240598e-13,
    -1.8343594779227062e-07,
    -3.51262006851425e-13,
    2.109730171957229e-06,
    5.3309265335280313e-14,
    -6.657024592934615e-07,
    1.9100641063813662e-15,
    2.771489446559369e-08,
    -4.069534889202474e-15,
    1.8111237093313324e-08,
    1.1700159620909634e-15,
    -5.765911747060021e-10,
    -1.4341144423584223e-16,
    -1.8674966427072617e-10,
    -2.203146687760933e-18,
    -1.1055539196227154e-13,
    2.5288175099310265e-18,
    7.870577167439105e-13,
    -1.4702208924831263e-19,
    1.4458970114224798e-14,
    -1.5052173827838016e-20,
    -1.5814200182178807e-15,
    1.2644782793403173e-21,
    -4.910952321872607e-17,
    5.044825156253147e-23,
    1.6442613091539118e-18,
};

inline constexpr std::array<double, 31> kRsCheb6 = {
    2.4379288125388536e-05,
    4.487449348143909e-09,
    -1.382983562948879e-05,
    -1.0436762346603865e-09,
    5.110939426723386e-06,
    3.272269098380886e-10,
    -2.0458029403524013e-06,
    -9.65137503848738e-11,
    4.938118350441013e-07,
    2.4010865063934355e-11,
    -3.618747256694846e-08,
    -4.372018030777663e-12,
    -1.287681758588168e-08,
    3.5075487467397046e-13,
    2.574382881396142e-09,
    5.959434748294501e-14,
    1.3641864904100517e-10,
    -1.9093449038305695e-14,
    -3.0324434597288185e-11,
    1.1207027766922127e-15,
    -1.3217279904024264e-12,
    1.8859268588929198e-16,
    1.303214087204667e-13,
    -1.763618033710684e-17,
    6.636185987827294e-15,
    -1.1164882186934028e-18,
    -2.4604317895421663e-16,
    8.923737435934926e-20,
    -1.6816123832901497e-17,
    4.529094606515546e-21,
    1.8953504054223026e-19,
};

inline constexpr std::array<double, 30> kRsCheb7 = {
    2.2156732076325273e-09,
    1.2690788866211853e-05,
    8.537878473176366e-10,
    -3.844789620470061e-06,
    4.986814901822196e-10,
    1.3637008689771441e-06,
    -1.8740200648042472e-10,
    -2.747951241459209e-07,
    3.5073184476648983e-11,
    9.866618717781871e-09,
    -2.672734356491999e-12,
    1.183096850687315e-08,
    -9.886876680448388e-13,
    -3.061140512987473e-09,
    4.1603156141769363e-13,
    1.1327071604331194e-10,
    -6.703842254512735e-14,
    5.163946749393735e-11,
    2.2560192175556814e-15,
    -2.854945560192299e-12,
    8.245429122957421e-16,
    -4.2993881808162823e-13,
    -9.159861754411337e-17,
    1.3069350138677065e-14,
    -2.9713396068305695e-18,
    1.876307110148645e-15,
    7.095236958168206e-19,
    -1.6910748803408648e-17,
    4.495162821670417e-21,
    -4.490312365364003e-18,
};

inline constexpr std::array<double, 31> kRsCheb8 = {
    2.4475620447781264e-06,
    7.470455047572032e-07,
    -1.197795321556601e-06,
    -1.7440709756698206e-07,
    -6.512980155604131e-08,
    5.456964975464695e-08,
    -7.320233621232211e-09,
    -1.608240244535325e-08,
    3.139185717949507e-08,
    4.001368539432534e-09,
    -1.4166973978886819e-08,
    -7.284948287384918e-10,
    3.16568046547295e-09,
    5.8408667806688e-11,
    -2.470821650444053e-10,
    9.936907981924981e-12,
    -4.271147762336744e-11,
    -3.1805379715107843e-12,
    8.988414256088125e-12,
    1.862057858511968e-13,
    1.419551605453598e-13,
    3.1475021080275996e-14,
    -8.624631528959033e-14,
    -2.933089874791569e-15,
    -8.299125837256349e-16,
    -1.8684139934650806e-16,
    3.8286317487593e-16,
    1.4837614565995224e-17,
    6.275396921888531e-18,
    7.591488565424034e-19,
    -8.994045700042239e-19,
};

inline constexpr std::size_t kRsOrders = 9;

inline constexpr const double* kRsChebPtr[kRsOrders] = {
    kRsCheb0.data(), kRsCheb1.data(), kRsCheb2.data(), kRsCheb3.data(),
    kRsCheb4.data(), kRsCheb5.data(), kRsCheb6.data(), kRsCheb7.data(),
    kRsCheb8.data(),
};
inline constexpr std::size_t kRsChebLen[kRsOrders] = {

    29, 30, 27, 30, 31, 30, 31, 30, 31,
};

}  // namespace zetalab::detail
