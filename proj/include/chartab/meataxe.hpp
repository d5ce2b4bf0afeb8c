#pragma once

#include "chartab/meataxe/chop.hpp"
#include "chartab/meataxe/kernel.hpp"
#include "chartab/meataxe/module.hpp"
