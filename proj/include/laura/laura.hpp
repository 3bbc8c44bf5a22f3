#pragma once

#include "laura/error.hpp"
#include "laura/quiver.hpp"
#include "laura/presentation.hpp"
#include "laura/validate.hpp"
#include "laura/walk.hpp"
#include "laura/automaton.hpp"
#include "laura/strings.hpp"
#include "laura/doze.hpp"
#include "laura/classify.hpp"
#include "laura/decomp.hpp"
#include "laura/linalg.hpp"
#include "laura/rep.hpp"
#include "laura/io.hpp"
#include "laura/random.hpp"
