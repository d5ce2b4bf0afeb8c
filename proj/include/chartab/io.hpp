#pragma once

#include "chartab/io/cli.hpp"
#include "chartab/io/files.hpp"
#include "chartab/io/gmodule_text.hpp"
#include "chartab/io/matrix_text.hpp"
#include "chartab/io/slp_text.hpp"
#include "chartab/io/table_text.hpp"
