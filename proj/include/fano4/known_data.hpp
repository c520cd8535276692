#pragma once

#include <string>
#include <vector>

#include "fano4/model.hpp"

namespace fano4 {

/* A bundled reference model with its expected invariants. */
struct KnownModel {
    int no = 0;
    std::string label;
    std::string note;
    Family family = Family::CI;
    std::vector<int> doubled_a;
    std::vector<int> doubled_b;
    std::vector<int> doubled_c;
    std::vector<int> ci_degrees;
    int hypersurface = 0; // 0 = none
    WeightVector ambient;
    int expected_h0 = 0;
    int expected_K4 = 0;
};

/* The ten non-complete-intersection reference models. */
const std::vector<KnownModel>& table1();

/* The thirteen hypersurface / complete-intersection reference models. */
const std::vector<KnownModel>& table2();

struct KnownFamilyPoint {
    int K4 = 0;
    int h0 = 0;
    std::string source; // THIS_PAPER | PRIOR_WORK | BOTH
};

/* The bundled small-invariants geography dataset. */
const std::vector<KnownFamilyPoint>& figure_points();

FormatData known_format(const KnownModel& k);
Model build_known(const KnownModel& k);

} // namespace fano4
