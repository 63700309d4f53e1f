// Bundled experiment tables. Each text is in canonical serialized form, so
// serialize_experiment(load_builtin(x)) reproduces it byte for byte.
//
// The control and U-shape experiments were published as percentages only.
// Their counts are round(f_i * N); when those do not add up to N the
// residual is spread one count at a time over the cells in decreasing order
// of size.

#include "builtin_data.hpp"

namespace gibbsdice::detail {

const std::array<BuiltinText, 6> kBuiltinTexts{{
    {"control-I", R"(name,control-I
source,wooden 13x20x23 mm cuboid; leather dice cup onto a wooden table; N=2700
note,counts reconstructed as round(f_i*N) from f=(10.3 7.7 30.9 32.7 7.6 10.9)%; residual -2 taken from faces 4 and 3
sides,13,20,23
counts,278,208,833,882,205,294
)"},
    {"control-II", R"(name,control-II
source,wooden 13x20x23 mm cuboid; dropped from 1 m onto polished steel; N=1000
note,counts reconstructed as round(f_i*N) from f=(5.5 1.5 43.5 42.5 2.6 4.1)% which sum to 99.7%; residual +3 added to faces 3 4 and 1
sides,13,20,23
counts,56,15,436,426,26,41
)"},
    {"budden", R"(name,budden
source,Budden (1980); mild-steel xxy-cuboids with 15 mm square cross-section
note,tossed and rolled by a school class
sx,sy,N,nxx
15,7.1,332,304
15,9.5,840,620
15,11.2,799,438
15,12.15,740,367
15,13.95,516,206
15,14.5,530,204
15,17.4,1011,150
15,18.45,532,82
15,21.6,654,34
15,23.25,606,24
15,24,702,12
15,25.6,609,19
15,28,680,6
15,31.75,275,2
15,39.7,503,3
)"},
    {"heilbronner", R"(name,heilbronner
source,Heilbronner (1985); PVC xxy-cuboids with 25 mm square cross-section
note,rolled manually or from a shaker on cloth and linoleum
sx,sy,N,nxx
25,5,2145,2089
25,10,2184,1929
25,15,2103,1559
25,20,2238,1244
25,30,2202,421
25,35,2259,239
25,40,2250,162
)"},
    {"ushape-I", R"(name,ushape-I
source,U-shaped die tossed onto a hard surface; N=1950
note,counts reconstructed as round(f_i*N) from f=(10.6 6.9 23.9 42.5 6.8 9.3)%; residual -1 taken from face 4
heights,10,11.5,7.61,5.39,11.5,10
scale,16.45
counts,207,135,466,828,133,181
)"},
    {"ushape-II", R"(name,ushape-II
source,U-shaped die dropped onto a wool carpet; N=150
note,counts reconstructed as round(f_i*N) from f=(4.7 2.0 28.0 57.3 1.3 6.7)%
heights,10,11.5,7.61,5.39,11.5,10
scale,16.45
counts,7,3,42,86,2,10
)"},
}};

}  // namespace gibbsdice::detail
