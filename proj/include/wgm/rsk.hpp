#pragma once

#include "wgm/permutation.hpp"
#include "wgm/tableau.hpp"

namespace wgm {

struct RskPair {
    StandardTableau p; // insertion tableau
    StandardTableau q; // recording tableau
};

// Row-insertion Robinson-Schensted correspondence.
RskPair rsk(const Permutation& w);

} // namespace wgm
