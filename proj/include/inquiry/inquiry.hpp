#pragma once

#include "inquiry/diagram.hpp"
#include "inquiry/errors.hpp"
#include "inquiry/lattice.hpp"
#include "inquiry/poset.hpp"
#include "inquiry/questions.hpp"
#include "inquiry/rational.hpp"
#include "inquiry/rules.hpp"
#include "inquiry/statements.hpp"
#include "inquiry/valuations.hpp"
#include "inquiry/verify.hpp"
