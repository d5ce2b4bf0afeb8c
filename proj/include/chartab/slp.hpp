#pragma once

#include "chartab/perm.hpp"
#include "chartab/slp/parse.hpp"
#include "chartab/slp/program.hpp"
#include "chartab/slp/search.hpp"
#include "chartab/slp/word.hpp"
