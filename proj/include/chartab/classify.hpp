#pragma once

#include "chartab/classify/centralizers.hpp"
#include "chartab/classify/config.hpp"
#include "chartab/classify/decision.hpp"
#include "chartab/classify/powerinfo.hpp"
