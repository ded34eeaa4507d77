#ifndef VERONUCLEUS_VERONUCLEUS_HPP
#define VERONUCLEUS_VERONUCLEUS_HPP

#include "base_p.hpp"
#include "gf.hpp"
#include "index_set.hpp"
#include "invariant_lattice.hpp"
#include "linalg.hpp"
#include "nrc.hpp"
#include "veronese.hpp"

#endif  // VERONUCLEUS_VERONUCLEUS_HPP
