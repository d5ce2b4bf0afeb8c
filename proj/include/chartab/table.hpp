#pragma once

#include "chartab/table/characters.hpp"
#include "chartab/table/classmap.hpp"
#include "chartab/table/construct.hpp"
#include "chartab/table/fusion.hpp"
#include "chartab/table/head.hpp"
#include "chartab/table/lattice.hpp"
#include "chartab/table/sn_tables.hpp"
