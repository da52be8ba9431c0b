#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cli {

struct Preset {
    std::string name;
    std::string description;
    std::string quantity;
    std::map<std::string, std::string> values;
};

inline const std::vector<Preset>& presets() {
    static const std::vector<Preset> table{
        {"success-spssv", "P_S against s for alpha = 0..8pi/9, r = 0.1", "prob_s",
         {{"alpha", "0:8pi/9:pi/9"}, {"s", "0:6:0.05"}, {"r", "0.1"}}},
        {"success-tmsv", "P_T against s for alpha = 0..8pi/9, eta = 0.1", "prob_t",
         {{"alpha", "0:8pi/9:pi/9"}, {"s", "0:6:0.05"}, {"eta", "0.1"}}},
        {"skew-r-by-s", "W against r for several s at alpha = 8pi/9", "skew",
         {{"alpha", "8pi/9"}, {"s", "0,0.3,0.5,0.7,1"}, {"r", "0.05:1.5:0.05"}}},
        {"skew-r-by-alpha", "W against r for several alpha at s = 0.5", "skew",
         {{"alpha", "pi/9:8pi/9:pi/9"}, {"s", "0.5"}, {"r", "0.05:1.5:0.05"}}},
        {"skew-s-by-alpha", "W against s for several alpha at r = 0.1", "skew",
         {{"alpha", "pi/9:8pi/9:pi/9"}, {"s", "0:3:0.05"}, {"r", "0.1"}}},
        {"as-squeeze", "AS against r for several s at alpha = 8pi/9", "as_squeeze",
         {{"alpha", "8pi/9"}, {"s", "0,0.3,0.5,0.7,1"}, {"r", "0.05:1.5:0.05"}}},
        {"sum-squeeze", "S against eta for several s at alpha = 8pi/9, Theta = pi/4", "sum_squeeze",
         {{"alpha", "8pi/9"}, {"s", "0,0.3,0.5,0.7,1"}, {"eta", "0:1:0.02"}, {"Theta", "pi/4"}}},
        {"photon-by-alpha", "P(n) for several alpha at s = 0.5, r = 0.1", "photon_dist",
         {{"alpha", "pi/9:8pi/9:pi/9"}, {"s", "0.5"}, {"r", "0.1"}, {"n-max", "20"}}},
        {"photon-by-s", "P(n) for several s at alpha = 8pi/9, r = 0.1", "photon_dist",
         {{"alpha", "8pi/9"}, {"s", "0,0.3,0.5,0.7,1"}, {"r", "0.1"}, {"n-max", "20"}}},
        {"shifts-spssv", "SPSSV pointer shifts against alpha for several s, r = 0.1, delta = pi/6", "shifts",
         {{"alpha", "0:8pi/9:pi/90"}, {"delta", "pi/6"}, {"s", "0.001,0.5,1,4"}, {"r", "0.1"},
          {"pointer", "spssv"}}},
        {"shifts-tmsv", "TMSV pointer shifts against alpha for several s, eta = 0.1, delta = pi/6", "shifts",
         {{"alpha", "0:8pi/9:pi/90"}, {"delta", "pi/6"}, {"s", "0.001,0.5,1,4"}, {"eta", "0.1"},
          {"pointer", "tmsv"}}},
        {"qfunc-single", "single-mode Q grids at r = 1, alpha = 8pi/9, s = 0, 0.5, 1, 3", "qfunc_single",
         {{"alpha", "8pi/9"}, {"s", "0,0.5,1,3"}, {"r", "1"}, {"resolution", "201"}}},
        {"qfunc-two-real", "two-mode Q over (Re mu1, Re mu2) at eta = 1, s = 0, 0.5, 1, 2", "qfunc_two",
         {{"alpha", "8pi/9"}, {"s", "0,0.5,1,2"}, {"eta", "1"}, {"slice", "real"}, {"resolution", "101"}}},
        {"qfunc-two-imag", "two-mode Q over (Im mu1, Im mu2) at eta = 1, s = 0, 0.5, 1, 2", "qfunc_two",
         {{"alpha", "8pi/9"}, {"s", "0,0.5,1,2"}, {"eta", "1"}, {"slice", "imag"}, {"resolution", "101"}}},
        {"appendixA", "closed form vs oracle audit over the default 3x3x3 grid at delta = pi/6", "audit", {{"delta", "pi/6"}}},
    };
    return table;
}

inline const Preset* find_preset(std::string_view name) {
    for (const auto& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace cli
