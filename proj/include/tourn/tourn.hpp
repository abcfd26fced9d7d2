#pragma once

#include "tourn/tournament.hpp"
#include "tourn/witness.hpp"
#include "tourn/canon.hpp"
#include "tourn/families.hpp"
#include "tourn/blocks.hpp"
#include "tourn/structures.hpp"
#include "tourn/speed_table.hpp"
#include "tourn/speed.hpp"
#include "tourn/verify.hpp"
