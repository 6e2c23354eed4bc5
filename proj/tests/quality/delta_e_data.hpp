#pragma once

// Generated by tests/oracles/ciede2000_pairs.py (scikit-image); do not edit.
// Columns: lab1, lab2, published CIEDE2000 (4 dp), CIEDE2000 oracle,
// CIE94 oracle (graphic arts, lab1 as reference).

#include <array>

namespace dustbench::testdata {

struct DeltaEPair {
  std::array<double, 3> lab1;
  std::array<double, 3> lab2;
  double published;
  double ciede2000;
  double cie94;
};

inline constexpr DeltaEPair kDeltaEPairs[] = {
    {{50.0000, 2.6772, -79.7751}, {50.0000, 0.0000, -82.7485}, 2.0425, 2.0424596802, 1.3950388679},
    {{50.0000, 3.1571, -77.2803}, {50.0000, 0.0000, -82.7485}, 2.8615, 2.8615101747, 1.9341005516},
    {{50.0000, 2.8361, -74.0200}, {50.0000, 0.0000, -82.7485}, 3.4412, 3.4411905987, 2.4543356650},
    {{50.0000, -1.3802, -84.2814}, {50.0000, 0.0000, -82.7485}, 1.0000, 0.9999988648, 0.6844918651},
    {{50.0000, -1.1848, -84.8006}, {50.0000, 0.0000, -82.7485}, 1.0000, 1.0000047011, 0.6695626982},
    {{50.0000, -0.9009, -85.5211}, {50.0000, 0.0000, -82.7485}, 1.0000, 1.0000129676, 0.6919452750},
    {{50.0000, 0.0000, 0.0000}, {50.0000, -1.0000, 2.0000}, 2.3669, 2.3668588192, 2.2360679775},
    {{50.0000, -1.0000, 2.0000}, {50.0000, 0.0000, 0.0000}, 2.3669, 2.3668588192, 2.0316383154},
    {{50.0000, 2.4900, -0.0010}, {50.0000, -2.4900, 0.0009}, 7.1792, 7.1791720113, 4.8006944117},
    {{50.0000, 2.4900, -0.0010}, {50.0000, -2.4900, 0.0010}, 7.1792, 7.1791626400, 4.8006944495},
    {{50.0000, 2.4900, -0.0010}, {50.0000, -2.4900, 0.0011}, 7.2195, 7.2194721523, 4.8006944891},
    {{50.0000, 2.4900, -0.0010}, {50.0000, -2.4900, 0.0012}, 7.2195, 7.2194742125, 4.8006945308},
    {{50.0000, -0.0010, 2.4900}, {50.0000, 0.0009, -2.4900}, 4.8045, 4.8045216858, 4.8006944117},
    {{50.0000, -0.0010, 2.4900}, {50.0000, 0.0010, -2.4900}, 4.8045, 4.8045245082, 4.8006944495},
    {{50.0000, -0.0010, 2.4900}, {50.0000, 0.0011, -2.4900}, 4.7461, 4.7460711138, 4.8006944891},
    {{50.0000, 2.5000, 0.0000}, {50.0000, 0.0000, -2.5000}, 4.3065, 4.3064820958, 3.4077435238},
    {{50.0000, 2.5000, 0.0000}, {73.0000, 25.0000, -18.0000}, 27.1492, 27.1492313007, 34.6891631980},
    {{50.0000, 2.5000, 0.0000}, {61.0000, -5.0000, 29.0000}, 22.8977, 22.8976924698, 29.4413732778},
    {{50.0000, 2.5000, 0.0000}, {56.0000, -27.0000, -3.0000}, 31.9030, 31.9030046469, 27.9140878071},
    {{50.0000, 2.5000, 0.0000}, {58.0000, 24.0000, 15.0000}, 19.4535, 19.4535214334, 24.9376608232},
    {{50.0000, 2.5000, 0.0000}, {50.0000, 3.1736, 0.5854}, 1.0000, 1.0000263434, 0.8221316297},
    {{50.0000, 2.5000, 0.0000}, {50.0000, 3.2972, 0.0000}, 1.0000, 0.9999728730, 0.7165842697},
    {{50.0000, 2.5000, 0.0000}, {50.0000, 1.8634, 0.5757}, 1.0000, 1.0000494990, 0.8048753031},
    {{50.0000, 2.5000, 0.0000}, {50.0000, 3.2592, 0.3350}, 1.0000, 1.0000347617, 0.7528439370},
    {{60.2574, -34.0099, 36.2677}, {60.4626, -34.1751, 39.4387}, 1.2644, 1.2644200136, 1.3909947095},
    {{63.0109, -31.0961, -5.8663}, {62.8187, -29.7946, -4.0864}, 1.2630, 1.2629592983, 1.2480892887},
    {{61.2901, 3.7196, -5.3901}, {61.4292, 2.2480, -4.9620}, 1.8731, 1.8730705001, 1.2979578687},
    {{35.0831, -44.1164, 3.7933}, {35.0232, -40.0716, 1.5901}, 1.8645, 1.8644952342, 1.8204508828},
    {{22.7233, 20.0904, -46.6940}, {23.0331, 14.9730, -42.5619}, 2.0373, 2.0372582697, 2.5561330876},
    {{36.4612, 47.8580, 18.3852}, {36.2715, 50.5065, 21.2231}, 1.4146, 1.4145779225, 1.4249130279},
    {{90.8027, -2.0831, 1.4410}, {91.1528, -1.6435, 0.0447}, 1.4441, 1.4441290781, 1.4194526107},
    {{90.9257, -0.5406, -0.9208}, {88.6381, -0.8985, -0.7239}, 1.5381, 1.5381170054, 2.3225685033},
    {{6.7747, -0.2908, -2.4247}, {5.8714, -0.0985, -2.2286}, 0.6377, 0.6377276719, 0.9385330841},
    {{2.0776, 0.0795, -1.1350}, {0.9033, -0.0636, -0.5514}, 0.9082, 0.9082328396, 1.3065446380},
};

}  // namespace dustbench::testdata
