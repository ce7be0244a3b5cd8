#pragma once

#include "errors.hpp"
#include "picard_lattice.hpp"
#include "surface_models.hpp"
#include "ci_chow.hpp"
#include "nl_lattice.hpp"
#include "moduli_count.hpp"
#include "hodge_ledger.hpp"
#include "search_atlas.hpp"
#include "io.hpp"
#include "dataset.hpp"
#include "reporting.hpp"
