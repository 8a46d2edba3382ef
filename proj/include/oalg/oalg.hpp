#pragma once

#include "oalg/error.hpp"
#include "oalg/core.hpp"
#include "oalg/terms.hpp"
#include "oalg/engine.hpp"
#include "oalg/algebra.hpp"
#include "oalg/algebras.hpp"
#include "oalg/builders.hpp"
#include "oalg/sasaki.hpp"
#include "oalg/conditions.hpp"
#include "oalg/io.hpp"
#include "oalg/fixtures.hpp"
#include "oalg/search.hpp"
